#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>

#include "proet/error.hpp"
#include "proet/field/polynomial.hpp"
#include "proet/field/scalar.hpp"

namespace proet {

// Valuation value standing for +infinity (the valuation of zero).
inline constexpr long kInfiniteValuation = std::numeric_limits<long>::max();

// Element of C(t) in canonical form: coprime numerator and denominator, monic
// denominator, zero stored as 0/1. Canonical form makes == structural.
template <CoefficientField C>
class RationalFunction {
 public:
  using Coefficient = C;
  using Poly = Polynomial<C>;

  explicit RationalFunction(const C& c) : num_(Poly::constant(c)), den_(Poly::constant(one_like(c))) {}
  explicit RationalFunction(Poly num) : num_(std::move(num)), den_(Poly::constant(num_.one())) {}
  RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  static RationalFunction t(const C& like) { return RationalFunction(Poly::monomial(one_like(like), 1)); }
  static RationalFunction t_power(const C& like, long k) {
    const C one = one_like(like);
    if (k >= 0) return RationalFunction(Poly::monomial(one, static_cast<std::size_t>(k)));
    return RationalFunction(Poly::constant(one), Poly::monomial(one, static_cast<std::size_t>(-k)));
  }

  const Poly& numerator() const { return num_; }
  const Poly& denominator() const { return den_; }
  C coefficient_zero() const { return num_.zero(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
  // The constant value; only meaningful when is_constant().
  C constant_value() const { return num_.coeff(0); }

  RationalFunction operator+(const RationalFunction& o) const {
    if (den_ == o.den_) return RationalFunction(num_ + o.num_, den_);
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  RationalFunction operator-() const { return RationalFunction(-num_, den_, Canonical{}); }
  RationalFunction operator-(const RationalFunction& o) const { return *this + (-o); }
  RationalFunction operator*(const RationalFunction& o) const {
    if (is_zero() || o.is_zero()) return zero_like_this();
    if (den_.is_one() && o.den_.is_one()) return RationalFunction(num_ * o.num_, den_, Canonical{});
    return RationalFunction(num_ * o.num_, den_ * o.den_);
  }
  RationalFunction operator/(const RationalFunction& o) const {
    if (o.is_zero()) throw DivisionByZero("rational function division by zero");
    return RationalFunction(num_ * o.den_, den_ * o.num_);
  }
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

  RationalFunction inverse() const { return one_like_this() / *this; }

  RationalFunction pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    return RationalFunction(num_.pow(static_cast<std::uint64_t>(e)), den_.pow(static_cast<std::uint64_t>(e)), Canonical{});
  }

  // t-adic valuation: order of t in numerator minus order in denominator.
  long valuation() const {
    if (is_zero()) return kInfiniteValuation;
    return num_.low_order() - den_.low_order();
  }
  bool is_integral() const { return valuation() >= 0; }
  // Integral with integral inverse, i.e. a unit of the local ring at t = 0.
  bool is_unit() const { return valuation() == 0; }

  // Value at t = 0 (the residue class); requires is_integral().
  C residue() const {
    if (!is_integral()) throw DivisionByZero("residue of a non-integral function");
    if (valuation() > 0) return num_.zero();
    return num_.coeff(0) / den_.coeff(0);
  }

  RationalFunction zero_like_this() const { return RationalFunction(num_.zero()); }
  RationalFunction one_like_this() const { return RationalFunction(num_.one()); }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  // "num/den" with both sides in sparse c*t^k form.
  std::string str() const { return num_.str() + "/" + den_.str(); }

 private:
  struct Canonical {};
  RationalFunction(Poly num, Poly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}

  void normalize() {
    if (den_.is_zero()) throw DivisionByZero("zero denominator");
    if (num_.is_zero()) {
      den_ = Poly::constant(num_.one());
      return;
    }
    if (den_.degree() > 0 && den_.low_order() == den_.degree()) {
      // c t^k: the gcd is a power of t.
      const long m = std::min(den_.degree(), num_.low_order());
      if (m > 0) {
        num_ = num_.unshifted(static_cast<std::size_t>(m));
        den_ = den_.unshifted(static_cast<std::size_t>(m));
      }
    } else if (den_.degree() > 0 && num_.degree() >= 0) {
      Poly g = gcd(num_, den_);
      if (g.degree() > 0) {
        num_ = num_.divmod(g).first;
        den_ = den_.divmod(g).first;
      }
    }
    const C lead = den_.leading();
    if (!(lead == num_.one())) {
      const C inv = num_.one() / lead;
      num_ = num_.scaled(inv);
      den_ = den_.scaled(inv);
    }
  }

  Poly num_;
  Poly den_;
};

template <CoefficientField C>
RationalFunction<C> zero_like(const RationalFunction<C>& a) { return a.zero_like_this(); }
template <CoefficientField C>
RationalFunction<C> one_like(const RationalFunction<C>& a) { return a.one_like_this(); }
template <CoefficientField C>
bool is_zero(const RationalFunction<C>& a) { return a.is_zero(); }
template <CoefficientField C>
RationalFunction<C> from_integer(const RationalFunction<C>& like, std::int64_t v) {
  return RationalFunction<C>(from_integer(like.coefficient_zero(), v));
}
template <CoefficientField C>
std::string to_string(const RationalFunction<C>& a) { return a.str(); }

template <CoefficientField C>
long valuation_t(const RationalFunction<C>& f) { return f.valuation(); }

// f -> f^p. Over F_p the coefficients are Frobenius-fixed, so this is the
// substitution t -> t^p, which preserves coprimality and monicity.
template <CoefficientField C>
  requires kIsPrimeField<C>
RationalFunction<C> frobenius(const RationalFunction<C>& f) {
  const std::size_t p = characteristic(f.coefficient_zero());
  return RationalFunction<C>(f.numerator().inflated(p), f.denominator().inflated(p));
}

// Canonical representative of f modulo t^d A, where A is the local ring at
// t = 0: the Laurent expansion of f truncated to exponents below d.
template <CoefficientField C>
RationalFunction<C> reduce_mod_t_power(const RationalFunction<C>& f, long d) {
  using Poly = Polynomial<C>;
  const long v = f.valuation();
  if (v >= d) return f.zero_like_this();
  const std::size_t terms = static_cast<std::size_t>(d - v);
  const Poly num = f.numerator().unshifted(static_cast<std::size_t>(f.numerator().low_order()));
  const Poly den = f.denominator().unshifted(static_cast<std::size_t>(f.denominator().low_order()));
  // Power series num/den mod t^terms; den(0) != 0.
  const C zero = num.zero();
  const C inv0 = num.one() / den.coeff(0);
  std::vector<C> series(terms, zero);
  for (std::size_t k = 0; k < terms; ++k) {
    C acc = num.coeff(k);
    for (std::size_t j = 1; j <= k && j <= static_cast<std::size_t>(std::max(0L, den.degree())); ++j)
      acc = acc - den.coeff(j) * series[k - j];
    series[k] = acc * inv0;
  }
  RationalFunction<C> s(Poly(zero, std::move(series)));
  return s * RationalFunction<C>::t_power(zero, v);
}

using K = RationalFunction<Fp>;
using KQ = RationalFunction<Rational>;

// Parse "num/den" (or a bare expression) over F_p. Expressions accept
// integers, t, +, -, *, ^ with nonnegative integer exponents, and parentheses.
K parse_rational_function(const std::string& text, std::uint32_t p);

inline K k_constant(std::int64_t v, std::uint32_t p) { return K(Fp(v, p)); }
inline K k_t(std::uint32_t p) { return K::t(Fp(0, p)); }

}  // namespace proet
