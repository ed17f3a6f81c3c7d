#include "proet/descent/descent.hpp"

#include <algorithm>
#include <unordered_map>

namespace proet {

std::string scope_name(DeckScope s) { return s == DeckScope::kFull ? "full" : "kernel"; }

MeromorphicCocycle::MeromorphicCocycle(ContinuousRep rep, DeckScope scope, Twist twist)
    : rep_(std::move(rep)), scope_(scope), twist_(twist) {}

MatrixK MeromorphicCocycle::h(const FPWord& w) const {
  for (const auto& [word, m] : overrides_)
    if (word == w) return m;
  return eval_word(rep_, twist_ == Twist::kInverse ? fp_inverse(w) : w);
}

bool MeromorphicCocycle::in_scope(const FPWord& w) const {
  return scope_ == DeckScope::kFull || in_kernel_alpha(w);
}

std::vector<FPWord> MeromorphicCocycle::scope_generators() const {
  return scope_ == DeckScope::kFull ? rep_.generator_words() : kernel_generators(signature());
}

MeromorphicCocycle MeromorphicCocycle::restricted_to_kernel() const {
  MeromorphicCocycle out = *this;
  out.scope_ = DeckScope::kKernel;
  return out;
}

MeromorphicCocycle MeromorphicCocycle::with_override(const FPWord& w, MatrixK m) const {
  if (m.rows() != rank() || m.cols() != rank()) throw DimensionMismatch("override has the wrong size");
  MeromorphicCocycle out = *this;
  out.overrides_.push_back({w, std::move(m)});
  return out;
}

MeromorphicCocycle datum_from_rep(const ContinuousRep& rep) { return MeromorphicCocycle(rep); }

namespace {

using HTable = std::unordered_map<FPWord, MatrixK, WordHash>;

std::vector<FPWord> scope_words(const MeromorphicCocycle& c, std::size_t max_len) {
  return enumerate_words(c.signature(), max_len,
                         c.scope() == DeckScope::kFull ? WordFilter::kAll : WordFilter::kKernelAlpha);
}

}  // namespace

CocycleCertificate check_cocycle(const MeromorphicCocycle& c, std::size_t max_len) {
  CocycleCertificate cert;
  cert.max_len = max_len;
  const auto words = scope_words(c, max_len);
  cert.words = words.size();
  HTable table;
  std::vector<std::size_t> len;
  for (const auto& w : words) {
    table.emplace(w, c.h(w));
    len.push_back(word_length(w));
  }
  cert.identity_ok = table.at(fp_identity(c.signature())).is_identity();
  cert.ok = cert.identity_ok;
  // Words come in shortlex order, so lengths are nondecreasing.
  for (std::size_t a = 0; a < words.size() && cert.ok; ++a) {
    const MatrixK& ha = table.at(words[a]);
    for (std::size_t b = 0; b < words.size() && len[a] + len[b] <= max_len; ++b) {
      ++cert.pairs_checked;
      const FPWord prod = words[a] * words[b];
      if (table.at(words[b]) * ha != table.at(prod)) {
        cert.ok = false;
        cert.witness = {words[a], words[b]};
        break;
      }
    }
  }
  return cert;
}

CocycleCertificate require_cocycle(const MeromorphicCocycle& c, std::size_t max_len) {
  auto cert = check_cocycle(c, max_len);
  if (!cert.identity_ok) throw CocycleViolation("h_e is not the identity");
  if (!cert.ok)
    throw CocycleViolation("h_{w'} h_w != h_{w w'} for w = " + format_word(cert.witness->first) +
                           ", w' = " + format_word(cert.witness->second));
  return cert;
}

std::vector<MatrixK> hom_cocycle(const MeromorphicCocycle& c1, const MeromorphicCocycle& c2) {
  if (c1.scope() != c2.scope()) throw ScopeMismatch("data live over different deck groups");
  if (c1.prime() != c2.prime()) throw FieldMismatch("data live over different primes");
  std::vector<std::pair<MatrixK, MatrixK>> pairs;
  if (c1.scope() == DeckScope::kFull) {
    for (const auto& [a, b] : paired_generators(c1.rep(), c2.rep())) pairs.push_back({c1.h(a), c2.h(b)});
  } else {
    if (!(*c1.signature() == *c2.signature())) throw ScopeMismatch("kernel data over different groups");
    for (const auto& w : c1.scope_generators()) pairs.push_back({c1.h(w), c2.h(w)});
  }
  return intertwining_space(pairs, c1.rank(), c2.rank(), c1.rep().zero());
}

std::pair<ComponentIndex, FPWord> orbit_transport(const ComponentIndex& c, const FPWord& shift) {
  const auto& sig = c.rep.signature();
  if (!in_kernel_alpha(shift)) throw NotInKernel("representative shift must lie in ker(alpha)");
  const DirectTuple as = alpha(c.rep);
  DirectTuple key = as;
  key.coords[c.factor] = sig->finite(c.factor).identity();
  const FPWord r = sigma(sig, key) * shift;
  const FiniteGroup& gj = sig->finite(c.factor);
  const Element g = gj.mul(alpha(r).coords[c.factor], gj.inv(as.coords[c.factor]));
  FPWord u = fp_inverse(r) * fp_g(sig, c.factor, g) * c.rep;
  return {canonical_component(c.factor, r), std::move(u)};
}

LatticeK lattice_of(const MeromorphicCocycle& c, const ComponentIndex& comp, const FPWord& shift) {
  return lattice_hermite(c.h(orbit_transport(comp, shift).second));
}

LatticeAssignment integralize(const MeromorphicCocycle& c, std::size_t max_len) {
  return integralize(c, max_len, fp_identity(c.signature()));
}

LatticeAssignment integralize(const MeromorphicCocycle& c, std::size_t max_len, const FPWord& shift) {
  const auto& sig = c.signature();
  LatticeAssignment out;
  out.max_len = max_len;
  std::unordered_map<ComponentIndex, LatticeK, ComponentHash> lattices;
  auto lattice_at = [&](const ComponentIndex& comp) -> const LatticeK& {
    auto it = lattices.find(comp);
    if (it == lattices.end()) it = lattices.emplace(comp, lattice_of(c, comp, shift)).first;
    return it->second;
  };

  const auto comps = enumerate_components(sig, max_len);
  for (const auto& comp : comps) {
    auto [base, u] = orbit_transport(comp, shift);
    if (std::find(out.orbit_representatives.begin(), out.orbit_representatives.end(), base) ==
        out.orbit_representatives.end())
      out.orbit_representatives.push_back(base);
    out.entries.push_back({comp, u, lattice_at(comp)});
  }

  std::vector<FPWord> kernel;
  for (auto& w : enumerate_words(sig, max_len, WordFilter::kKernelAlpha))
    if (!w.is_identity()) kernel.push_back(std::move(w));
  out.kernel_words = kernel.size();
  std::vector<MatrixK> hs;
  std::vector<long> det_val;
  for (const auto& w : kernel) {
    hs.push_back(c.h(w));
    det_val.push_back(valuation_t(determinant(hs.back())));
  }

  out.determinant_conservation = true;
  for (const auto& comp : comps) {
    const LatticeK& from = lattice_at(comp);
    for (std::size_t k = 0; k < kernel.size(); ++k) {
      ++out.pairs_checked;
      const ComponentIndex target = component_action(kernel[k], comp);
      const LatticeK& to = lattice_at(target);
      const MatrixK image = hs[k] * from.basis();
      const bool same = lattice_hermite(image) == to;
      const bool unit = is_integral_unit(inverse(to.basis()) * image);
      if (!same || !unit) {
        ++out.conflicts;
        throw TransportConflict("h_w does not carry lattice(" + format_component(comp) + ") onto lattice(" +
                                format_component(target) + ") for w = " + format_word(kernel[k]));
      }
      if (det_val[k] != to.exponent_sum() - from.exponent_sum()) {
        out.determinant_conservation = false;
        throw TransportConflict("determinant valuation not conserved for w = " + format_word(kernel[k]));
      }
    }
  }
  return out;
}

EquivarianceCertificate conj_equivariance_check(const MeromorphicCocycle& c, const FPWord& g, std::size_t max_len) {
  EquivarianceCertificate cert{g, c.h(g), max_len, 0, 0, false};
  const FPWord g_inv = fp_inverse(g);
  auto h_conj = [&](const FPWord& w) { return c.h(g_inv * w * g); };
  const auto words = enumerate_words(c.signature(), max_len, WordFilter::kKernelAlpha);
  std::vector<MatrixK> hp;
  std::vector<std::size_t> len;
  for (const auto& w : words) {
    ++cert.words_checked;
    hp.push_back(h_conj(w));
    if (hp.back() * cert.witness != cert.witness * c.h(w))
      throw EquivarianceViolation("h_{g^-1 w g} h_g != h_g h_w for w = " + format_word(w) + ", g = " + format_word(g));
    len.push_back(word_length(w));
  }
  if (!hp.empty() && !hp.front().is_identity()) throw EquivarianceViolation("conjugated datum fails the identity condition");
  for (std::size_t a = 0; a < words.size(); ++a)
    for (std::size_t b = 0; b < words.size() && len[a] + len[b] <= max_len; ++b) {
      ++cert.pairs_checked;
      if (hp[b] * hp[a] != h_conj(words[a] * words[b]))
        throw EquivarianceViolation("conjugated datum is not a cocycle at w = " + format_word(words[a]) +
                                    ", w' = " + format_word(words[b]));
    }
  cert.ok = true;
  return cert;
}

bool is_finite_cocycle(const FiniteCocycle& f) {
  const auto& g = f.group;
  if (f.values.size() != g.order() || !f.values[g.identity()].is_identity()) return false;
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < g.order(); ++b)
      if (f.values[b] * f.values[a] != f.values[g.mul(a, b)]) return false;
  return true;
}

FiniteCocycle finite_cocycle_of(const FiniteQuotientRep& fq) {
  FiniteCocycle out{fq.group(), {}, 0, 0, 0, {}};
  for (Element g = 0; g < fq.group().order(); ++g) out.values.push_back(fq.image(fq.group().inv(g)));
  return out;
}

FiniteCocycle descend_inflation(const MeromorphicCocycle& c, const FiniteQuotientRep& fq, std::size_t max_len) {
  const auto& group = fq.group();
  FiniteCocycle out{group, {}, max_len, 0, 0, std::vector<std::size_t>(group.order(), 0)};
  std::vector<std::optional<MatrixK>> values(group.order());
  for (const auto& w : enumerate_words(c.signature(), max_len)) {
    if (!c.in_scope(w)) continue;
    const Element q = quotient_map(fq, w);
    const MatrixK hw = c.h(w);
    if (q == group.identity()) {
      ++out.kernel_words_checked;
      if (!hw.is_identity()) throw KernelNotTrivial("h_w != 1 on the kernel word " + format_word(w));
    }
    ++out.preimage_counts[q];
    if (!values[q]) {
      values[q] = hw;
    } else {
      ++out.preimages_checked;
      if (*values[q] != hw)
        throw KernelNotTrivial("preimages of " + group.label(q) + " disagree at " + format_word(w));
    }
  }
  for (Element g = 0; g < group.order(); ++g) {
    if (!values[g]) throw Error("descend_inflation: no preimage of " + group.label(g) + " up to the length bound");
    out.values.push_back(*values[g]);
  }
  return out;
}

}  // namespace proet
