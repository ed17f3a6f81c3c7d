#include <cctype>
#include <sstream>

#include "proet/field/rational_function.hpp"
#include "proet/field/scalar.hpp"

namespace proet {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Fp::Fp(std::int64_t value, std::uint32_t p) : p_(p) {
  if (p < 2 || p > kMaxPrime) throw NotPrime("modulus out of range: " + std::to_string(p));
  std::int64_t r = value % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  value_ = static_cast<std::uint32_t>(r);
}

void Fp::check_same(const Fp& o) const {
  if (p_ != o.p_ || p_ == 0) throw FieldMismatch("F_" + std::to_string(p_) + " vs F_" + std::to_string(o.p_));
}

Fp Fp::operator+(const Fp& o) const {
  check_same(o);
  std::uint32_t s = value_ + o.value_;
  if (s >= p_) s -= p_;
  return Fp(s, p_, Raw{});
}

Fp Fp::operator-(const Fp& o) const {
  check_same(o);
  return Fp(value_ >= o.value_ ? value_ - o.value_ : value_ + p_ - o.value_, p_, Raw{});
}

Fp Fp::operator*(const Fp& o) const {
  check_same(o);
  return Fp(static_cast<std::uint32_t>(static_cast<std::uint64_t>(value_) * o.value_ % p_), p_, Raw{});
}

Fp Fp::inverse() const {
  if (value_ == 0) throw DivisionByZero("inverse of 0 in F_" + std::to_string(p_));
  // Fermat: a^(p-2).
  std::uint64_t result = 1, base = value_, e = p_ - 2;
  while (e) {
    if (e & 1) result = result * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return Fp(static_cast<std::uint32_t>(result), p_, Raw{});
}

Fp Fp::operator/(const Fp& o) const {
  check_same(o);
  return *this * o.inverse();
}

std::ostream& operator<<(std::ostream& os, const Fp& a) { return os << a.value(); }

std::string to_string(const Fp& a) { return std::to_string(a.value()); }
std::string to_string(const Rational& a) { return a.str(); }

namespace {

// Recursive-descent parser for polynomial expressions in t over F_p.
class ExpressionParser {
 public:
  ExpressionParser(const std::string& text, std::uint32_t p) : s_(text), p_(p) {}

  K parse_all() {
    K v = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected character");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError(why + " at offset " + std::to_string(pos_) + " in \"" + s_ + "\"");
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::string digits() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return s_.substr(start, pos_ - start);
  }
  std::int64_t exponent() {
    const std::string d = digits();
    if (d.size() > 9) fail("exponent too large");
    return std::stoll(d);
  }
  std::int64_t residue() {
    std::int64_t v = 0;
    for (char c : digits()) v = (v * 10 + (c - '0')) % p_;
    return v;
  }
  K expr() {
    K acc = k_constant(0, p_);
    bool negate = eat('-');
    if (!negate) eat('+');
    K t = term();
    acc = negate ? acc - t : acc + t;
    while (true) {
      if (eat('+')) acc = acc + term();
      else if (eat('-')) acc = acc - term();
      else break;
    }
    return acc;
  }
  K term() {
    K acc = power();
    while (true) {
      skip_ws();
      if (eat('*')) {
        acc = acc * power();
      } else if (pos_ < s_.size() && (s_[pos_] == '(' || s_[pos_] == 't')) {
        acc = acc * power();  // implicit product such as 2t or 3(t+1)
      } else {
        break;
      }
    }
    return acc;
  }
  K power() {
    K base = atom();
    if (eat('^')) {
      const bool neg = eat('-');
      const std::int64_t e = exponent();
      return base.pow(neg ? -e : e);
    }
    return base;
  }
  K atom() {
    skip_ws();
    if (eat('(')) {
      K v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (eat('t')) return k_t(p_);
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) return k_constant(residue(), p_);
    fail("expected atom");
  }

  const std::string& s_;
  std::uint32_t p_;
  std::size_t pos_ = 0;
};

}  // namespace

K parse_rational_function(const std::string& text, std::uint32_t p) {
  if (!is_prime(p)) throw NotPrime(std::to_string(p));
  // The serialized form is "num/den": split at the single top-level slash.
  int depth = 0;
  std::size_t slash = std::string::npos;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    else if (text[i] == ')') --depth;
    else if (text[i] == '/' && depth == 0) {
      if (slash != std::string::npos) throw ParseError("more than one top-level '/' in \"" + text + "\"");
      slash = i;
    }
  }
  if (slash == std::string::npos) return ExpressionParser(text, p).parse_all();
  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  return ExpressionParser(num, p).parse_all() / ExpressionParser(den, p).parse_all();
}

}  // namespace proet
