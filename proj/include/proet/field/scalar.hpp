#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>

#include "proet/error.hpp"

namespace proet {

bool is_prime(std::uint64_t n);

// Element of the prime field F_p. The modulus travels with the value so that
// zero and one can always be rebuilt from any element ("zero_like").
class Fp {
 public:
  static constexpr std::uint32_t kMaxPrime = 65521;

  Fp() = default;
  Fp(std::int64_t value, std::uint32_t p);

  std::uint32_t value() const { return value_; }
  std::uint32_t prime() const { return p_; }

  Fp operator+(const Fp& o) const;
  Fp operator-(const Fp& o) const;
  Fp operator*(const Fp& o) const;
  Fp operator/(const Fp& o) const;
  Fp operator-() const { return Fp(value_ == 0 ? 0 : p_ - value_, p_, Raw{}); }
  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }

  Fp inverse() const;

  friend bool operator==(const Fp& a, const Fp& b) {
    return a.value_ == b.value_ && a.p_ == b.p_;
  }
  friend auto operator<=>(const Fp& a, const Fp& b) = default;

 private:
  struct Raw {};
  Fp(std::uint32_t value, std::uint32_t p, Raw) : value_(value), p_(p) {}
  void check_same(const Fp& o) const;

  std::uint32_t value_ = 0;
  std::uint32_t p_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Fp& a);

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Uniform access to the additive/multiplicative identities of a scalar that
// may carry runtime context (the prime for Fp, nothing for Rational).
inline Fp zero_like(const Fp& a) { return Fp(0, a.prime()); }
inline Fp one_like(const Fp& a) { return Fp(1, a.prime()); }
inline bool is_zero(const Fp& a) { return a.value() == 0; }
inline Fp from_integer(const Fp& like, std::int64_t v) { return Fp(v, like.prime()); }
inline std::uint32_t characteristic(const Fp& a) { return a.prime(); }

inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline bool is_zero(const Rational& a) { return a == 0; }
inline Rational from_integer(const Rational&, std::int64_t v) { return Rational(v); }
inline std::uint32_t characteristic(const Rational&) { return 0; }

// Coefficient fields usable inside Polynomial / RationalFunction.
template <class C>
concept CoefficientField = requires(const C& a, const C& b) {
  { a + b } -> std::convertible_to<C>;
  { a - b } -> std::convertible_to<C>;
  { a * b } -> std::convertible_to<C>;
  { a / b } -> std::convertible_to<C>;
  { -a } -> std::convertible_to<C>;
  { a == b } -> std::convertible_to<bool>;
  { zero_like(a) } -> std::convertible_to<C>;
  { one_like(a) } -> std::convertible_to<C>;
  { is_zero(a) } -> std::convertible_to<bool>;
  { from_integer(a, std::int64_t{}) } -> std::convertible_to<C>;
};

// Fields of positive characteristic whose elements are fixed by x -> x^p.
template <class C>
inline constexpr bool kIsPrimeField = false;
template <>
inline constexpr bool kIsPrimeField<Fp> = true;

std::string to_string(const Fp& a);
std::string to_string(const Rational& a);

}  // namespace proet
