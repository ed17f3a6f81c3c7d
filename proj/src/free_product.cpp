#include "proet/group/free_product.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace proet {

FPSignature::FPSignature(std::size_t r, std::vector<FiniteGroup> factors) : r_(r), factors_(std::move(factors)) {
  if (r_ == 0 && factors_.empty()) throw SignatureMismatch("a signature needs r >= 1 or at least one finite factor");
}

std::size_t FPSignature::direct_order() const {
  std::size_t n = 1;
  for (const auto& g : factors_) n *= g.order();
  return n;
}

namespace {

void check_same_signature(const SignaturePtr& a, const SignaturePtr& b) {
  if (a == b) return;
  if (!a || !b || !(*a == *b)) throw SignatureMismatch("words belong to different free products");
}

void validate_letter(const FPSignature& sig, const Letter& l) {
  if (l.factor >= sig.num_factors()) throw BadFactorIndex("factor " + std::to_string(l.factor) + " out of range");
  if (!sig.is_z(l.factor)) {
    const auto& g = sig.finite(l.factor - sig.r());
    if (l.value < 0 || static_cast<std::size_t>(l.value) >= g.order())
      throw BadElementIndex("element " + std::to_string(l.value) + " out of range for factor " +
                            std::to_string(l.factor));
  }
}

bool is_trivial_letter(const FPSignature& sig, const Letter& l) {
  if (sig.is_z(l.factor)) return l.value == 0;
  return static_cast<Element>(l.value) == sig.finite(l.factor - sig.r()).identity();
}

// Push a letter onto a normal-form stack, combining with the top as needed.
void push_letter(const FPSignature& sig, std::vector<Letter>& stack, Letter l) {
  while (true) {
    if (is_trivial_letter(sig, l)) return;
    if (stack.empty() || stack.back().factor != l.factor) {
      stack.push_back(l);
      return;
    }
    Letter top = stack.back();
    stack.pop_back();
    if (sig.is_z(l.factor)) {
      std::int64_t sum;
      if (__builtin_add_overflow(top.value, l.value, &sum)) throw ExponentOverflow("Z exponent overflow");
      l.value = sum;
    } else {
      const auto& g = sig.finite(l.factor - sig.r());
      l.value = g.mul(static_cast<Element>(top.value), static_cast<Element>(l.value));
    }
    // A trivial result exposes the previous top, which cannot share l's
    // factor, so the loop ends at the next iteration.
  }
}

}  // namespace

FPWord fp_normalize(const SignaturePtr& sig, const std::vector<Letter>& raw) {
  if (!sig) throw SignatureMismatch("null signature");
  std::vector<Letter> stack;
  stack.reserve(raw.size());
  for (const Letter& l : raw) {
    validate_letter(*sig, l);
    push_letter(*sig, stack, l);
  }
  return FPWord(sig, std::move(stack));
}

FPWord fp_mul(const FPWord& a, const FPWord& b) {
  check_same_signature(a.sig_, b.sig_);
  if (b.letters_.empty()) return a;
  if (a.letters_.empty()) return b;
  std::vector<Letter> out = a.letters_;
  out.reserve(a.letters_.size() + b.letters_.size());
  for (const Letter& l : b.letters_) push_letter(*a.sig_, out, l);
  return FPWord(a.sig_, std::move(out));
}

FPWord fp_inverse(const FPWord& w) {
  std::vector<Letter> out;
  out.reserve(w.letters().size());
  const auto& sig = *w.signature();
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    Letter l = *it;
    if (sig.is_z(l.factor)) l.value = -l.value;
    else l.value = sig.finite(l.factor - sig.r()).inv(static_cast<Element>(l.value));
    out.push_back(l);
  }
  return fp_normalize(w.signature(), out);
}

FPWord fp_pow(const FPWord& w, long e) {
  FPWord base = e < 0 ? fp_inverse(w) : w;
  FPWord result = fp_identity(w.signature());
  for (long k = 0; k < (e < 0 ? -e : e); ++k) result = fp_mul(result, base);
  return result;
}

FPWord fp_commutator(const FPWord& a, const FPWord& b) {
  return fp_mul(fp_mul(a, b), fp_mul(fp_inverse(a), fp_inverse(b)));
}

FPWord fp_identity(const SignaturePtr& sig) { return fp_normalize(sig, {}); }

FPWord fp_z(const SignaturePtr& sig, std::size_t i, std::int64_t exponent) {
  if (i >= sig->r()) throw BadFactorIndex("Z factor " + std::to_string(i) + " out of range");
  return fp_normalize(sig, {Letter{static_cast<std::uint32_t>(i), exponent}});
}

FPWord fp_g(const SignaturePtr& sig, std::size_t j, Element g) {
  if (j >= sig->num_finite()) throw BadFactorIndex("finite factor " + std::to_string(j) + " out of range");
  return fp_normalize(sig, {Letter{static_cast<std::uint32_t>(sig->r() + j), static_cast<std::int64_t>(g)}});
}

std::size_t word_length(const FPWord& w) {
  std::size_t n = 0;
  const auto& sig = *w.signature();
  for (const auto& l : w.letters())
    n += sig.is_z(l.factor) ? static_cast<std::size_t>(l.value < 0 ? -l.value : l.value) : 1;
  return n;
}

namespace {

// Symbol key of a unit generator: factor-major, z before z^-1, elements by index.
std::pair<std::uint32_t, std::int64_t> symbol_key(const FPSignature& sig, const Letter& l) {
  if (sig.is_z(l.factor)) return {l.factor, l.value > 0 ? 0 : 1};
  return {l.factor, l.value};
}

}  // namespace

std::strong_ordering shortlex_compare(const FPWord& a, const FPWord& b) {
  const std::size_t la = word_length(a), lb = word_length(b);
  if (la != lb) return la <=> lb;
  const auto& sig = *a.signature();
  // Walk both expanded sequences in lockstep.
  std::size_t ia = 0, ib = 0;
  std::int64_t used_a = 0, used_b = 0;
  while (ia < a.letters().size() && ib < b.letters().size()) {
    const Letter& x = a.letters()[ia];
    const Letter& y = b.letters()[ib];
    const auto kx = symbol_key(sig, x), ky = symbol_key(sig, y);
    if (kx != ky) return kx <=> ky;
    const std::int64_t nx = sig.is_z(x.factor) ? std::abs(x.value) : 1;
    const std::int64_t ny = sig.is_z(y.factor) ? std::abs(y.value) : 1;
    const std::int64_t step = std::min(nx - used_a, ny - used_b);
    used_a += step;
    used_b += step;
    if (used_a == nx) {
      ++ia;
      used_a = 0;
    }
    if (used_b == ny) {
      ++ib;
      used_b = 0;
    }
  }
  return std::strong_ordering::equal;
}

DirectTuple direct_identity(const FPSignature& sig) {
  DirectTuple t;
  for (const auto& g : sig.finite_factors()) t.coords.push_back(g.identity());
  return t;
}

DirectTuple direct_mul(const FPSignature& sig, const DirectTuple& a, const DirectTuple& b) {
  DirectTuple t;
  for (std::size_t j = 0; j < sig.num_finite(); ++j) t.coords.push_back(sig.finite(j).mul(a.coords[j], b.coords[j]));
  return t;
}

DirectTuple direct_inverse(const FPSignature& sig, const DirectTuple& a) {
  DirectTuple t;
  for (std::size_t j = 0; j < sig.num_finite(); ++j) t.coords.push_back(sig.finite(j).inv(a.coords[j]));
  return t;
}

bool is_direct_identity(const FPSignature& sig, const DirectTuple& a) { return a == direct_identity(sig); }

std::vector<DirectTuple> all_direct_tuples(const FPSignature& sig) {
  std::vector<DirectTuple> out;
  const std::size_t total = sig.direct_order();
  for (std::size_t code = 0; code < total; ++code) {
    DirectTuple t;
    t.coords.resize(sig.num_finite());
    std::size_t x = code;
    for (std::size_t j = sig.num_finite(); j-- > 0;) {
      t.coords[j] = static_cast<Element>(x % sig.finite(j).order());
      x /= sig.finite(j).order();
    }
    out.push_back(std::move(t));
  }
  return out;
}

std::size_t direct_index(const FPSignature& sig, const DirectTuple& a) {
  std::size_t code = 0;
  for (std::size_t j = 0; j < sig.num_finite(); ++j) code = code * sig.finite(j).order() + a.coords[j];
  return code;
}

DirectTuple alpha(const FPWord& w) {
  const auto& sig = *w.signature();
  DirectTuple t = direct_identity(sig);
  for (const auto& l : w.letters()) {
    if (sig.is_z(l.factor)) continue;
    const std::size_t j = l.factor - sig.r();
    t.coords[j] = sig.finite(j).mul(t.coords[j], static_cast<Element>(l.value));
  }
  return t;
}

bool in_kernel_alpha(const FPWord& w) { return is_direct_identity(*w.signature(), alpha(w)); }

FPWord sigma(const SignaturePtr& sig, const DirectTuple& g) {
  std::vector<Letter> raw;
  for (std::size_t j = 0; j < sig->num_finite(); ++j)
    raw.push_back(Letter{static_cast<std::uint32_t>(sig->r() + j), static_cast<std::int64_t>(g.coords[j])});
  return fp_normalize(sig, raw);
}

std::vector<FPWord> enumerate_words(const SignaturePtr& sig, std::size_t max_len, WordFilter filter) {
  // Unit symbols in shortlex order.
  std::vector<Letter> symbols;
  for (std::size_t i = 0; i < sig->r(); ++i) {
    symbols.push_back(Letter{static_cast<std::uint32_t>(i), 1});
    symbols.push_back(Letter{static_cast<std::uint32_t>(i), -1});
  }
  for (std::size_t j = 0; j < sig->num_finite(); ++j)
    for (Element g = 0; g < sig->finite(j).order(); ++g)
      if (g != sig->finite(j).identity())
        symbols.push_back(Letter{static_cast<std::uint32_t>(sig->r() + j), static_cast<std::int64_t>(g)});

  std::vector<std::vector<Letter>> layer{{}};
  std::vector<FPWord> out;
  auto emit = [&](const std::vector<std::vector<Letter>>& words) {
    for (const auto& letters : words) {
      FPWord w = fp_normalize(sig, letters);
      if (filter == WordFilter::kAll || in_kernel_alpha(w)) out.push_back(std::move(w));
    }
  };
  emit(layer);
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::vector<Letter>> next;
    for (const auto& w : layer) {
      for (const Letter& s : symbols) {
        if (!w.empty() && w.back().factor == s.factor) {
          if (!sig->is_z(s.factor)) continue;
          if ((w.back().value > 0) != (s.value > 0)) continue;
          auto v = w;
          v.back().value += s.value;
          next.push_back(std::move(v));
        } else {
          auto v = w;
          v.push_back(s);
          next.push_back(std::move(v));
        }
      }
    }
    layer = std::move(next);
    emit(layer);
  }
  return out;
}

std::vector<FPWord> group_generators(const SignaturePtr& sig) {
  std::vector<FPWord> gens;
  for (std::size_t i = 0; i < sig->r(); ++i) gens.push_back(fp_z(sig, i));
  for (std::size_t j = 0; j < sig->num_finite(); ++j)
    for (Element g : sig->finite(j).generators()) gens.push_back(fp_g(sig, j, g));
  return gens;
}

std::vector<FPWord> kernel_generators(const SignaturePtr& sig) {
  std::vector<FPWord> out;
  std::unordered_set<FPWord, WordHash> seen;
  const auto gens = group_generators(sig);
  for (const DirectTuple& g : all_direct_tuples(*sig)) {
    const FPWord t = sigma(sig, g);
    for (const FPWord& x : gens) {
      const FPWord back = sigma(sig, direct_mul(*sig, g, alpha(x)));
      FPWord s = fp_mul(fp_mul(t, x), fp_inverse(back));
      if (s.is_identity() || !seen.insert(s).second) continue;
      out.push_back(std::move(s));
    }
  }
  std::sort(out.begin(), out.end(), shortlex_less);
  return out;
}

std::string format_word(const FPWord& w) {
  if (w.is_identity()) return "e";
  const auto& sig = *w.signature();
  std::ostringstream os;
  bool first = true;
  for (const auto& l : w.letters()) {
    if (!first) os << " * ";
    first = false;
    if (sig.is_z(l.factor)) {
      os << "z" << (l.factor + 1);
      if (l.value != 1) os << "^" << l.value;
    } else {
      const std::size_t j = l.factor - sig.r();
      os << "g" << (j + 1) << ":" << sig.finite(j).label(static_cast<Element>(l.value));
    }
  }
  return os.str();
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

FPWord parse_word(const SignaturePtr& sig, const std::string& text) {
  std::vector<Letter> raw;
  const std::string body = trim(text);
  if (body.empty() || body == "e") return fp_identity(sig);
  std::stringstream ss(body);
  std::string tok;
  while (std::getline(ss, tok, '*')) {
    tok = trim(tok);
    if (tok.size() < 2) throw ParseError("bad word token \"" + tok + "\"");
    try {
      if (tok[0] == 'z') {
        const auto caret = tok.find('^');
        const std::size_t i = std::stoul(tok.substr(1, caret == std::string::npos ? std::string::npos : caret - 1));
        const std::int64_t e = caret == std::string::npos ? 1 : std::stoll(tok.substr(caret + 1));
        if (i == 0 || i > sig->r()) throw BadFactorIndex("z" + std::to_string(i));
        raw.push_back(Letter{static_cast<std::uint32_t>(i - 1), e});
      } else if (tok[0] == 'g') {
        const auto colon = tok.find(':');
        if (colon == std::string::npos) throw ParseError("missing ':' in \"" + tok + "\"");
        const std::size_t j = std::stoul(tok.substr(1, colon - 1));
        if (j == 0 || j > sig->num_finite()) throw BadFactorIndex("g" + std::to_string(j));
        const Element g = sig->finite(j - 1).index_of(tok.substr(colon + 1));
        raw.push_back(Letter{static_cast<std::uint32_t>(sig->r() + j - 1), static_cast<std::int64_t>(g)});
      } else {
        throw ParseError("bad word token \"" + tok + "\"");
      }
    } catch (const std::invalid_argument&) {
      throw ParseError("bad word token \"" + tok + "\"");
    } catch (const std::out_of_range&) {
      throw ParseError("bad word token \"" + tok + "\"");
    }
  }
  return fp_normalize(sig, raw);
}

std::size_t hash_word(const FPWord& w) {
  std::size_t h = 1469598103934665603ull;
  for (const auto& l : w.letters()) {
    h ^= l.factor + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h ^= static_cast<std::size_t>(l.value) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace proet
