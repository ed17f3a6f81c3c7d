#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "proet/field/lattice.hpp"
#include "proet/field/matrix.hpp"
#include "proet/field/rational_function.hpp"
#include "proet/testing/generators.hpp"

using namespace proet;
using proet::testing::Rng;

namespace {

K rf(const std::string& s, std::uint32_t p = 3) { return parse_rational_function(s, p); }

// All rational functions over F_p with numerator and denominator degree <= d
// (monic denominator, coprime), by brute enumeration of coefficient vectors.
std::vector<K> all_low_degree(std::uint32_t p, long d) {
  std::vector<Polynomial<Fp>> polys;
  const long count = [&] { long c = 1; for (long k = 0; k <= d; ++k) c *= p; return c; }();
  for (long code = 0; code < count; ++code) {
    std::vector<Fp> c;
    long x = code;
    for (long k = 0; k <= d; ++k) { c.emplace_back(x % p, p); x /= p; }
    polys.emplace_back(Fp(0, p), c);
  }
  std::vector<K> out;
  std::set<std::string> seen;
  for (const auto& n : polys)
    for (const auto& m : polys) {
      if (m.is_zero() || !(m.leading() == Fp(1, p))) continue;
      K f(n, m);
      if (seen.insert(f.str()).second) out.push_back(f);
    }
  return out;
}

}  // namespace

TEST_CASE("rf_arith examples") {
  CHECK(rf("t/(t+1)") + rf("1/(t+1)") == rf("1"));
  const K c = rf("(t^2-1)/(t-1)", 5);
  CHECK(c == rf("t+1", 5));
  CHECK(c.denominator().is_one());
  // gcd oracle: the canonical pair is coprime and cross-multiplies back.
  CHECK(gcd(c.numerator(), c.denominator()).is_one());
  CHECK(rf("t^2-1", 5) == K(c.numerator()) * rf("t-1", 5) / K(c.denominator()));
  CHECK_THROWS_AS(rf("t") / rf("0"), DivisionByZero);
}

TEST_CASE("field axioms on random samples") {
  Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    const K a = proet::testing::random_rf(rng, 3), b = proet::testing::random_rf(rng, 3),
            c = proet::testing::random_rf(rng, 3);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a - a == rf("0"));
    if (!a.is_zero()) CHECK(a * a.inverse() == rf("1"));
  }
}

TEST_CASE("canonical form invariants") {
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const K a = proet::testing::random_rf(rng, 5, 4);
    CHECK(a.denominator().leading() == Fp(1, 5));
    CHECK(gcd(a.numerator(), a.denominator()).is_one());
    if (a.is_zero()) CHECK(a.denominator().is_one());
  }
}

TEST_CASE("valuation") {
  CHECK(valuation_t(rf("t^3/(1+t)")) == 3);
  CHECK(valuation_t(rf("1/t")) == -1);
  CHECK(valuation_t(rf("0")) == kInfiniteValuation);
  CHECK(rf("(t+2)/(t^2+1)").is_integral());
  CHECK_FALSE(rf("1/(t^2+t)").is_integral());

  Rng rng(3);
  for (int i = 0; i < 1000; ++i) {
    const K f = proet::testing::random_rf(rng, 3), g = proet::testing::random_rf(rng, 3);
    if (!f.is_zero() && !g.is_zero()) CHECK(valuation_t(f * g) == valuation_t(f) + valuation_t(g));
    CHECK(valuation_t(f + g) >= std::min(valuation_t(f), valuation_t(g)));
  }
}

TEST_CASE("frobenius") {
  CHECK(frobenius(rf("t")) == rf("t^3"));
  CHECK(frobenius(rf("t", 7)) == rf("t^7", 7));
  Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    const K f = proet::testing::random_rf(rng, 3), g = proet::testing::random_rf(rng, 3);
    CHECK(frobenius(f + g) == frobenius(f) + frobenius(g));
    CHECK(frobenius(f * g) == frobenius(f) * frobenius(g));
    CHECK(frobenius(f) == f.pow(3));
    if (!(f == g)) CHECK_FALSE(frobenius(f) == frobenius(g));
  }
  // Fixed points among low-degree functions, solved by direct powering.
  std::vector<std::string> fixed;
  for (const K& f : all_low_degree(3, 2))
    if (f.pow(3) == f) fixed.push_back(f.str());
  std::sort(fixed.begin(), fixed.end());
  CHECK(fixed == std::vector<std::string>{"0/1*t^0", "1*t^0/1*t^0", "2*t^0/1*t^0"});
}

TEST_CASE("serialization round trip") {
  Rng rng(9);
  for (int i = 0; i < 100; ++i) {
    const K f = proet::testing::random_rf(rng, 7, 4);
    CHECK(parse_rational_function(f.str(), 7) == f);
  }
  CHECK(rf("t/(t+1)").str() == "1*t^1/1*t^1 + 1*t^0");
  CHECK_THROWS_AS(rf("t +* 1"), ParseError);
}

TEST_CASE("solve_linear") {
  const K zero = rf("0");
  const MatrixK id = MatrixK::identity(3, zero);
  MatrixK b(3, 1, zero);
  b(0, 0) = rf("t");
  b(2, 0) = rf("1/(t+1)");
  auto s = solve_linear(id, b);
  REQUIRE(s);
  CHECK(s->particular == b);
  CHECK(s->kernel.empty());

  CHECK_FALSE(solve_linear(MatrixK(3, 3, zero), b));
  CHECK_THROWS_AS(solve_linear(MatrixK(2, 3, zero), b), DimensionMismatch);

  Rng rng(13);
  for (int i = 0; i < 20; ++i) {
    const MatrixK m = proet::testing::random_invertible(rng, 3, 4);
    const MatrixK rhs = proet::testing::random_matrix(rng, 3, 4, 1);
    auto sol = solve_linear(m, rhs);
    REQUIRE(sol);
    CHECK(m * sol->particular == rhs);  // residual oracle
    CHECK(sol->kernel.empty());
  }

  // Rank-deficient: kernel vectors are annihilated and echelonized.
  MatrixK m = MatrixK::from_rows({{rf("1"), rf("t"), rf("t^2")}, {rf("t"), rf("t^2"), rf("t^3")}}, zero);
  auto ker = kernel_basis(m);
  REQUIRE(ker.size() == 2);
  for (const auto& v : ker) CHECK((m * v).is_zero());
  CHECK(ker[0](1, 0) == rf("1"));
  CHECK(ker[0](2, 0) == rf("0"));
}

TEST_CASE("lattice_hermite") {
  const K zero = rf("0");
  const auto id = lattice_hermite(MatrixK::identity(2, zero));
  CHECK(id.basis() == MatrixK::identity(2, zero));
  MatrixK d = MatrixK::from_rows({{rf("t^2"), rf("0")}, {rf("0"), rf("1")}}, zero);
  CHECK(lattice_hermite(d).basis() == d);
  CHECK(lattice_hermite(d).exponents() == std::vector<long>{2, 0});
  CHECK_THROWS_AS(lattice_hermite(MatrixK(2, 2, zero)), SingularBasis);

  Rng rng(17);
  for (int i = 0; i < 40; ++i) {
    const std::size_t n = 1 + static_cast<std::size_t>(i % 3);
    const MatrixK basis = proet::testing::random_invertible(rng, 3, n);
    const auto h = lattice_hermite(basis);
    // Random GL_n(A) sampling oracle: right A-unit multiples give the same form.
    const MatrixK u = proet::testing::random_gl_a(rng, 3, n);
    CHECK(lattice_hermite(basis * u) == h);
    // Idempotent.
    CHECK(lattice_hermite(h.basis()) == h);
    // Shape: upper triangular, diagonal powers of t, reduced entries.
    for (std::size_t r = 0; r < n; ++r) {
      CHECK(h.basis()(r, r) == K::t_power(Fp(0, 3), h.exponents()[r]));
      for (std::size_t c = 0; c < r; ++c) CHECK(h.basis()(r, c).is_zero());
      for (std::size_t c = r + 1; c < n; ++c)
        CHECK(reduce_mod_t_power(h.basis()(r, c), h.exponents()[r]) == h.basis()(r, c));
    }
    // Same lattice as the input basis: each spans the other over A.
    CHECK(is_integral_unit(inverse(basis) * h.basis()));
    // Determinant valuation equals the exponent sum.
    CHECK(valuation_t(determinant(basis)) == h.exponent_sum());
  }
  // A different lattice yields a different form.
  MatrixK e = MatrixK::from_rows({{rf("t"), rf("0")}, {rf("0"), rf("1")}}, zero);
  CHECK_FALSE(lattice_hermite(e) == lattice_hermite(d));
}

TEST_CASE("rational coefficient mode") {
  using PolyQ = Polynomial<Rational>;
  const Rational zero(0);
  const KQ t = KQ::t(zero);
  const KQ one(Rational(1));
  const KQ half(Rational(1, 2));
  CHECK((t / (t + one)) + (one / (t + one)) == one);
  CHECK((t * t - one) / (t - one) == t + one);
  CHECK(valuation_t(t * t * t / (one + t)) == 3);
  CHECK(half * KQ(Rational(2)) == one);
  const Matrix<KQ> m = Matrix<KQ>::from_rows({{t, half}, {one, t}}, one);
  CHECK(m * inverse(m) == Matrix<KQ>::identity(2, one));
  const auto l = lattice_hermite(Matrix<KQ>::from_rows({{t, zero_like(one)}, {one, t}}, one));
  CHECK(l.exponent_sum() == 2);
  (void)PolyQ(zero);
}
