#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "proet/stratified/stratified.hpp"
#include "proet/testing/fixtures.hpp"

using namespace proet;
using namespace proet::testing;

namespace {

// Every element of F_p(t) with numerator and monic denominator of degree
// <= max_deg, in canonical form.
std::vector<K> small_functions(std::uint32_t p, std::size_t max_deg) {
  std::vector<Polynomial<Fp>> polys;
  const Fp zero(0, p);
  std::size_t total = 1;
  for (std::size_t k = 0; k <= max_deg; ++k) total *= p;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<Fp> c;
    for (std::size_t k = 0, x = code; k <= max_deg; ++k, x /= p) c.push_back(Fp(static_cast<std::int64_t>(x % p), p));
    polys.emplace_back(zero, c);
  }
  std::set<std::string> seen;
  std::vector<K> out;
  for (const auto& num : polys)
    for (const auto& den : polys) {
      if (den.is_zero() || !(den.leading() == Fp(1, p))) continue;
      const K f(num, den);
      if (seen.insert(f.str()).second) out.push_back(f);
    }
  return out;
}

// x such that x = y_1^p, y_1 = y_2^p, ..., y_{depth-1} = y_depth^p with all
// y_i in the set.
std::set<std::string> chain_solutions(const std::vector<K>& set, std::size_t depth) {
  std::set<std::string> alive;
  for (const auto& f : set) alive.insert(f.str());
  for (std::size_t d = 0; d < depth; ++d) {
    std::set<std::string> next;
    for (const auto& y : set)
      if (alive.count(y.str())) next.insert(frobenius(y).str());
    std::set<std::string> keep;
    for (const auto& x : set)
      if (next.count(x.str())) keep.insert(x.str());
    alive = keep;
  }
  return alive;
}

ContinuousRep rank1(const Pi1Presentation& pres, const K& z, std::uint32_t p = 3) {
  return ContinuousRep(pres, p, 1, {MatrixK::scalar(z)}, {FactorRep{FiniteGroup::trivial(), {}, {scalar_matrix(1, p)}}});
}

}  // namespace

TEST_CASE("frobenius_transport") {
  const MatrixK id = MatrixK::identity(2, k_constant(0, 3));
  CHECK(frobenius_transport(id, FrobeniusMode::kSRelative) == id);
  CHECK(frobenius_transport(id, FrobeniusMode::kKRelative) == id);
  const MatrixK t = MatrixK::scalar(k_t(3));
  CHECK(frobenius_transport(t, FrobeniusMode::kKRelative) == MatrixK::scalar(K::t_power(Fp(0, 3), 3)));
  CHECK(frobenius_transport(t, FrobeniusMode::kSRelative) == t);
  Rng rng(71);
  for (int i = 0; i < 30; ++i) {
    const auto a = random_matrix(rng, 3, 2, 2, 2), b = random_matrix(rng, 3, 2, 2, 2);
    for (auto mode : {FrobeniusMode::kSRelative, FrobeniusMode::kKRelative})
      CHECK(frobenius_transport(a * b, mode) == frobenius_transport(a, mode) * frobenius_transport(b, mode));
  }
}

TEST_CASE("fdiv_from_rep") {
  const auto cubic = pi1_presentation(nodal_cubic());
  const auto unit = fdiv_from_rep(ContinuousRep::trivial(cubic, 3, 1), FrobeniusMode::kKRelative);
  CHECK(unit.certificate().ok);
  for (std::size_t i = 0; i <= unit.depth(); ++i)
    for (const auto& w : enumerate_words(unit.generator().signature(), 3)) CHECK(unit.h(i, w).is_identity());

  Rng rng(72);
  const auto pres = pi1_presentation(cycle_curve(2));
  const auto rep = random_rep(rng, pres, {FiniteGroup::cyclic(2), FiniteGroup::symmetric(3)}, 2, 5);
  const auto s = fdiv_from_rep(rep, FrobeniusMode::kSRelative, 3);
  const auto k = fdiv_from_rep(rep, FrobeniusMode::kKRelative, 3);
  for (const auto& w : enumerate_words(rep.signature(), 3))
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(s.h(i, w) == s.h(0, w));
      CHECK(frobenius_transport(s.h(i + 1, w), FrobeniusMode::kSRelative) == s.h(i, w));
      CHECK(frobenius_transport(k.h(i + 1, w), FrobeniusMode::kKRelative) == k.h(i, w));
    }
  CHECK(k.h(3, fp_z(rep.signature(), 0)) == datum_from_rep(rep).h(fp_z(rep.signature(), 0)));
}

TEST_CASE("hom_fdiv") {
  const auto cubic = pi1_presentation(nodal_cubic());
  const auto triv = ContinuousRep::trivial(cubic, 3, 1);
  const auto s_unit = fdiv_from_rep(triv, FrobeniusMode::kSRelative);
  const auto hs = hom_fdiv(s_unit, s_unit);
  CHECK(hs.basis.size() == 1);
  CHECK(hs.field == "K");

  const auto k_unit = fdiv_from_rep(triv, FrobeniusMode::kKRelative);
  CHECK_THROWS_AS(hom_fdiv(s_unit, k_unit), ModeMismatch);

  // End of the unit against the x = y^p chain oracle on small functions.
  const auto set = small_functions(3, 2);
  for (std::size_t depth = 1; depth <= 5; ++depth) {
    const auto u = fdiv_from_rep(triv, FrobeniusMode::kKRelative, depth);
    const auto hk = hom_fdiv(u, u);
    CHECK(hk.field == "F_p");
    REQUIRE(hk.basis.size() == 1);
    CHECK(hk.dimension_by_depth.size() == depth);
    std::set<std::string> span;
    for (std::int64_t c = 0; c < 3; ++c) span.insert((hk.basis[0](0, 0) * k_constant(c, 3)).str());
    CHECK(span == chain_solutions(set, depth));
  }

  // Rank 1, z -> t against z -> 1: brute force over F_3 for every layer.
  const auto t_datum = fdiv_from_rep(rank1(cubic, k_t(3)), FrobeniusMode::kKRelative, 3);
  const auto one_datum = fdiv_from_rep(rank1(cubic, k_constant(1, 3)), FrobeniusMode::kKRelative, 3);
  std::size_t solutions = 0;
  for (std::int64_t a = 0; a < 3; ++a) {
    const K x = k_constant(a, 3);
    bool ok = true;
    for (std::size_t i = 0; i <= 3; ++i) {
      const K hz_t = t_datum.h(i, fp_z(t_datum.generator().signature(), 0))(0, 0);
      const K hz_1 = one_datum.h(i, fp_z(one_datum.generator().signature(), 0))(0, 0);
      ok = ok && hz_1 * x == x * hz_t;
    }
    solutions += ok;
  }
  CHECK(solutions == 1);
  CHECK(hom_fdiv(t_datum, one_datum).basis.empty());
  CHECK(hom_fdiv(t_datum, t_datum).basis.size() == 1);

  // S-relative hom spaces are the plain cocycle hom spaces.
  Rng rng(73);
  const auto pres = pi1_presentation(cycle_curve(2));
  for (int i = 0; i < 5; ++i) {
    const auto a = random_rep(rng, pres, {FiniteGroup::cyclic(2), FiniteGroup::symmetric(3)}, 2, 5);
    const auto b = i % 2 ? a : random_rep(rng, pres, {FiniteGroup::cyclic(2), FiniteGroup::symmetric(3)}, 2, 5);
    const auto h = hom_fdiv(fdiv_from_rep(a, FrobeniusMode::kSRelative, 2), fdiv_from_rep(b, FrobeniusMode::kSRelative, 2));
    CHECK(h.basis.size() == hom_cocycle(datum_from_rep(a), datum_from_rep(b)).size());
    // K-relative: F_p-points of the same space, never larger than it.
    const auto hk = hom_fdiv(fdiv_from_rep(a, FrobeniusMode::kKRelative, 2), fdiv_from_rep(b, FrobeniusMode::kKRelative, 2));
    CHECK(hk.basis.size() <= h.basis.size());
    for (const auto& f : hk.basis)
      for (const auto& w : enumerate_words(a.signature(), 2))
        CHECK(datum_from_rep(b).h(w) * f == f * datum_from_rep(a).h(w));
  }
}

TEST_CASE("tensor_fdiv") {
  Rng rng(74);
  const auto pres = pi1_presentation(cycle_curve(2));
  const std::vector<FiniteGroup> groups{FiniteGroup::cyclic(2), FiniteGroup::cyclic(3)};
  const auto unit = fdiv_from_rep(ContinuousRep::trivial(pres, 7, 1), FrobeniusMode::kKRelative, 2);
  for (int i = 0; i < 5; ++i) {
    const auto a = random_laurent_rep(rng, pres, groups, 2, 7);
    const auto b = random_laurent_rep(rng, pres, {FiniteGroup::symmetric(3), FiniteGroup::cyclic(2)}, 2, 7);
    const auto c = random_laurent_rep(rng, pres, groups, 1, 7);
    for (auto mode : {FrobeniusMode::kSRelative, FrobeniusMode::kKRelative}) {
      const auto da = fdiv_from_rep(a, mode, 2, 2), db = fdiv_from_rep(b, mode, 2, 2), dc = fdiv_from_rep(c, mode, 2, 2);
      const auto ab = tensor_fdiv(da, db);
      CHECK(ab.certificate.ok);
      CHECK(ab.certificate.generators_checked > 0);
      CHECK(ab.datum.rank() == 4);
      // Associativity on abstract words, layer by layer.
      const auto left = tensor_fdiv(ab.datum, dc).datum;
      const auto right = tensor_fdiv(da, tensor_fdiv(db, dc).datum).datum;
      for (int k = 0; k < 5; ++k) {
        const auto w = random_abstract_word(rng, 3, 1, 2, 5);
        for (std::size_t layer = 0; layer <= 2; ++layer)
          CHECK(left.h(layer, abstract_word(left.generator().rep(), w)) ==
                right.h(layer, abstract_word(right.generator().rep(), w)));
      }
    }
    const auto da = fdiv_from_rep(a, FrobeniusMode::kKRelative, 2);
    const auto ua = tensor_fdiv(unit, da);
    CHECK(ua.certificate.ok);
    for (int k = 0; k < 10; ++k) {
      const auto w = random_abstract_word(rng, 3, 1, 2, 6);
      for (std::size_t layer = 0; layer <= 2; ++layer)
        CHECK(ua.datum.h(layer, abstract_word(ua.datum.generator().rep(), w)) == da.h(layer, abstract_word(a, w)));
    }
  }
  const auto s = fdiv_from_rep(ContinuousRep::trivial(pres, 7, 1), FrobeniusMode::kSRelative, 2);
  CHECK_THROWS_AS(tensor_fdiv(unit, s), ModeMismatch);
}
