#pragma once

#include <cstddef>
#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "proet/error.hpp"
#include "proet/field/scalar.hpp"

namespace proet {

// Dense univariate polynomial in t over a coefficient field C. Coefficients
// are stored low degree first and trimmed, so the zero polynomial has no
// coefficients and degree -1.
template <CoefficientField C>
class Polynomial {
 public:
  explicit Polynomial(const C& like) : zero_(zero_like(like)) {}
  Polynomial(const C& like, std::vector<C> coeffs)
      : zero_(zero_like(like)), coeffs_(std::move(coeffs)) {
    trim();
  }

  static Polynomial constant(const C& c) { return Polynomial(c, {c}); }
  // c * t^k
  static Polynomial monomial(const C& c, std::size_t k) {
    std::vector<C> v(k + 1, zero_like(c));
    v[k] = c;
    return Polynomial(c, std::move(v));
  }

  const C& zero() const { return zero_; }
  C one() const { return one_like(zero_); }

  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == one(); }
  const std::vector<C>& coeffs() const { return coeffs_; }

  C coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : zero_; }
  C leading() const { return coeffs_.empty() ? zero_ : coeffs_.back(); }

  // Order of vanishing at t = 0; -1 for the zero polynomial.
  long low_order() const {
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
      if (!proet::is_zero(coeffs_[k])) return static_cast<long>(k);
    return -1;
  }

  Polynomial operator+(const Polynomial& o) const {
    std::vector<C> v(std::max(coeffs_.size(), o.coeffs_.size()), zero_);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) v[k] = coeffs_[k];
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) v[k] = v[k] + o.coeffs_[k];
    return Polynomial(zero_, std::move(v));
  }
  Polynomial operator-() const {
    std::vector<C> v;
    v.reserve(coeffs_.size());
    for (const auto& c : coeffs_) v.push_back(-c);
    return Polynomial(zero_, std::move(v));
  }
  Polynomial operator-(const Polynomial& o) const { return *this + (-o); }
  Polynomial operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return Polynomial(zero_);
    std::vector<C> v(coeffs_.size() + o.coeffs_.size() - 1, zero_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (proet::is_zero(coeffs_[i])) continue;
      for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
        v[i + j] = v[i + j] + coeffs_[i] * o.coeffs_[j];
    }
    return Polynomial(zero_, std::move(v));
  }
  Polynomial scaled(const C& c) const {
    std::vector<C> v;
    v.reserve(coeffs_.size());
    for (const auto& a : coeffs_) v.push_back(a * c);
    return Polynomial(zero_, std::move(v));
  }
  // Multiply by t^k.
  Polynomial shifted(std::size_t k) const {
    if (is_zero()) return *this;
    std::vector<C> v(k, zero_);
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return Polynomial(zero_, std::move(v));
  }
  // Divide by t^k; requires t^k | *this.
  Polynomial unshifted(std::size_t k) const {
    if (is_zero()) return *this;
    return Polynomial(zero_, std::vector<C>(coeffs_.begin() + static_cast<long>(k), coeffs_.end()));
  }

  // Euclidean division; throws DivisionByZero for a zero divisor.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const {
    if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
    std::vector<C> rem = coeffs_;
    if (degree() < d.degree()) return {Polynomial(zero_), *this};
    std::vector<C> quo(coeffs_.size() - d.coeffs_.size() + 1, zero_);
    const C inv_lead = one() / d.leading();
    for (long k = degree() - d.degree(); k >= 0; --k) {
      const C c = rem[static_cast<std::size_t>(k + d.degree())] * inv_lead;
      quo[static_cast<std::size_t>(k)] = c;
      if (proet::is_zero(c)) continue;
      for (std::size_t j = 0; j < d.coeffs_.size(); ++j)
        rem[static_cast<std::size_t>(k) + j] = rem[static_cast<std::size_t>(k) + j] - c * d.coeffs_[j];
    }
    return {Polynomial(zero_, std::move(quo)), Polynomial(zero_, std::move(rem))};
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    return scaled(one() / leading());
  }

  C evaluate(const C& x) const {
    C acc = zero_;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  // Substitute t -> t^k.
  Polynomial inflated(std::size_t k) const {
    if (is_zero()) return *this;
    std::vector<C> v(static_cast<std::size_t>(degree()) * k + 1, zero_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i * k] = coeffs_[i];
    return Polynomial(zero_, std::move(v));
  }

  Polynomial pow(std::uint64_t e) const {
    Polynomial result = constant(one());
    Polynomial base = *this;
    while (e) {
      if (e & 1) result = result * base;
      e >>= 1;
      if (e) base = base * base;
    }
    return result;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_ && characteristic(a.zero_) == characteristic(b.zero_);
  }

  // Sparse "c*t^k" terms, highest degree first, joined with " + ".
  std::string str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long k = degree(); k >= 0; --k) {
      const C& c = coeffs_[static_cast<std::size_t>(k)];
      if (proet::is_zero(c)) continue;
      if (!first) os << " + ";
      first = false;
      os << to_string(c) << "*t^" << k;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!coeffs_.empty() && proet::is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  C zero_;
  std::vector<C> coeffs_;
};

template <CoefficientField C>
Polynomial<C> gcd(Polynomial<C> a, Polynomial<C> b) {
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

}  // namespace proet
