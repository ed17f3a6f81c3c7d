#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "proet/covering/covering.hpp"
#include "proet/testing/fixtures.hpp"

using namespace proet;
using namespace proet::testing;

namespace {

// s' s^{-1} ∈ G_j, decided on the normal form: empty or a single G_j letter.
bool same_coset(std::size_t j, const FPWord& s, const FPWord& s2) {
  const FPWord q = s2 * fp_inverse(s);
  return q.is_identity() || (q.syllables() == 1 && q.letters()[0].factor == q.signature()->global_index_of_finite(j));
}

CoverGeometry cycle2_geometry() {
  const auto pres = pi1_presentation(cycle_curve(2));
  return CoverGeometry(pres, pres.signature({FiniteGroup::cyclic(2), FiniteGroup::cyclic(3)}));
}

CoverGeometry cubic_geometry(FiniteGroup g) {
  const auto pres = pi1_presentation(nodal_cubic());
  return CoverGeometry(pres, pres.signature({std::move(g)}));
}

}  // namespace

TEST_CASE("canonical_component") {
  const auto geom = cycle2_geometry();
  const auto& sig = geom.signature();
  Rng rng(51);
  for (int i = 0; i < 300; ++i) {
    const std::size_t j = static_cast<std::size_t>(uniform_int(rng, 0, 1));
    const FPWord s = random_word(rng, sig, 6);
    const Element g = static_cast<Element>(uniform_int(rng, 0, static_cast<std::int64_t>(sig->finite(j).order()) - 1));
    CHECK(canonical_component(j, fp_g(sig, j, g) * s) == canonical_component(j, s));
    const FPWord s2 = uniform_int(rng, 0, 1) ? random_word(rng, sig, 6) : fp_g(sig, j, g) * s;
    CHECK((canonical_component(j, s) == canonical_component(j, s2)) == same_coset(j, s, s2));
  }
  CHECK(canonical_component(0, fp_identity(sig)).rep.is_identity());
  CHECK(canonical_component(0, fp_g(sig, 0, 1)).rep.is_identity());
}

TEST_CASE("component_action") {
  const auto geom = cycle2_geometry();
  const auto& sig = geom.signature();
  const ComponentIndex base{1, fp_identity(sig)};
  CHECK(component_action(fp_identity(sig), base) == base);
  for (Element g = 0; g < 3; ++g) CHECK(component_action(fp_g(sig, 1, g), base) == base);
  Rng rng(52);
  for (int i = 0; i < 300; ++i) {
    const auto w = random_word(rng, sig, 6), w2 = random_word(rng, sig, 6);
    const auto c = canonical_component(static_cast<std::size_t>(uniform_int(rng, 0, 1)), random_word(rng, sig, 6));
    CHECK(component_action(w2, component_action(w, c)) == component_action(w * w2, c));
  }
}

TEST_CASE("node lifts") {
  const auto geom = cycle2_geometry();
  Rng rng(53);
  for (int i = 0; i < 100; ++i) {
    const auto c = canonical_component(static_cast<std::size_t>(uniform_int(rng, 0, 1)), random_word(rng, geom.signature(), 6));
    const auto pts = nodes_on(geom, c);
    // Two nodes, each with one branch on every component of the cycle.
    CHECK(pts.size() == 2 * geom.signature()->finite(c.factor).order());
    for (const auto& x : pts) {
      const auto [a, b] = node_components(geom, x);
      CHECK((a == c || b == c));
      CHECK_FALSE(a == b);
    }
    const auto w = random_kernel_word(rng, geom.signature(), 6);
    const auto [a, b] = node_components(geom, pts[0]);
    const auto [a2, b2] = node_components(geom, node_action(w, pts[0]));
    CHECK(a2 == component_action(w, a));
    CHECK(b2 == component_action(w, b));
  }
}

TEST_CASE("certify_free_action") {
  const auto s1 = make_signature(1, {FiniteGroup::cyclic(2)});
  const auto rep = certify_free_action(s1, 4);
  CHECK(rep.free);
  CHECK(rep.kernel_words > 0);
  REQUIRE(rep.full_group_witness);
  CHECK(rep.full_group_witness->first == 0);

  for (const auto& sig : {s1, make_signature(1, {FiniteGroup::cyclic(2), FiniteGroup::cyclic(3)}),
                          make_signature(2, {FiniteGroup::cyclic(2), FiniteGroup::cyclic(2)})}) {
    const auto fast = certify_free_action(sig, 4);
    const auto slow = certify_free_action_pairwise(sig, 4);
    CHECK(fast.pairs_checked == slow.pairs_checked);
    CHECK(fast.free == slow.free);
  }
  // Full-group words do fix components: the stabilizer test finds exactly those.
  const auto sig = make_signature(1, {FiniteGroup::cyclic(2), FiniteGroup::cyclic(3)});
  for (const auto& c : enumerate_components(sig, 3))
    for (const auto& w : enumerate_words(sig, 3)) {
      const bool fixed = component_action(w, c) == c;
      CHECK(fixed == same_coset(c.factor, c.rep * w * fp_inverse(c.rep), fp_identity(sig)));
    }

  const auto trivial_kernel = certify_free_action(make_signature(0, {FiniteGroup::cyclic(3)}), 4);
  CHECK(trivial_kernel.kernel_words == 0);
  CHECK(trivial_kernel.free);
}

TEST_CASE("find_separating_open") {
  const auto geom = cubic_geometry(FiniteGroup::cyclic(2));
  const auto& sig = geom.signature();
  CHECK_THROWS_AS(find_separating_open(geom, InvariantOpen{}, 4), NoComplement);

  InvariantOpen smooth;
  smooth.removed_smooth.push_back({0, "generic", fp_z(sig, 0) * fp_g(sig, 0, 1)});
  const auto r1 = find_separating_open(geom, smooth, 5);
  CHECK(r1.proof_case == 1);
  CHECK(r1.not_contained);
  CHECK(r1.separated);
  CHECK(r1.v.components.size() == 1);
  for (const auto& w : enumerate_words(sig, 5, WordFilter::kKernelAlpha))
    if (!w.is_identity()) CHECK(intersect(r1.v, translate(w, r1.v)).components.empty());

  InvariantOpen node;
  node.removed_nodes.push_back({0, fp_identity(sig)});
  const auto r2 = find_separating_open(geom, node, 5);
  CHECK(r2.proof_case == 2);
  CHECK(r2.not_contained);
  CHECK(r2.separated);
  CHECK(r2.torsion_cases == 0);
  CHECK(r2.subcases[0] + r2.subcases[1] + r2.subcases[2] == r2.words_checked);
  CHECK(r2.subcases[1] >= 1);
  CHECK(r2.subcases[2] >= 1);

  // A set that is not invariant-separated: V itself against the identity.
  CHECK_FALSE(open_within(node, r2.v));

  const auto g2 = cycle2_geometry();
  InvariantOpen mixed;
  mixed.removed_nodes.push_back({1, fp_z(g2.signature(), 0)});
  mixed.removed_nodes.push_back({0, fp_identity(g2.signature())});
  const auto r3 = find_separating_open(g2, mixed, 4);
  CHECK(r3.proof_case == 2);
  CHECK(r3.separated);
  CHECK(r3.torsion_cases == 0);
}

TEST_CASE("fundamental_domain") {
  const auto geom = cubic_geometry(FiniteGroup::trivial());
  const auto& sig = geom.signature();
  const FPWord z = fp_z(sig, 0);
  const auto dom = fundamental_domain(geom, z);
  CHECK(dom.core == std::vector<ComponentIndex>{canonical_component(0, z), canonical_component(0, z * z)});
  CHECK(dom.raw_count == 2);
  CHECK_THROWS_AS(fundamental_domain(geom, fp_identity(sig)), TrivialW);

  const auto g2 = cycle2_geometry();
  const auto& s2 = g2.signature();
  const FPWord w = fp_z(s2, 0) * fp_g(s2, 0, 1) * fp_z(s2, 0, -1) * fp_g(s2, 0, 1);
  CHECK_THROWS_AS(fundamental_domain(g2, fp_g(s2, 0, 1)), NotInKernel);
  const auto d2 = fundamental_domain(g2, w);
  CHECK(d2.core.size() <= 2 * 6 * 2);
  CHECK(d2.raw_count == 2 * 6 * 2);
  CHECK_FALSE(d2.boundary.empty());
  for (const auto& b : d2.boundary) {
    CHECK(std::find(d2.core.begin(), d2.core.end(), b.inside) != d2.core.end());
    CHECK(std::find(d2.core.begin(), d2.core.end(), b.outside) == d2.core.end());
  }
  const auto kernel = enumerate_words(s2, 4, WordFilter::kKernelAlpha);
  for (const auto& c : d2.core)
    for (const auto& k : kernel)
      if (!k.is_identity()) CHECK_FALSE(component_action(k, c) == c);

  // Witnesses.
  for (const auto& g : all_direct_tuples(*s2)) {
    const auto target = canonical_component(0, w * sigma(s2, g));
    CHECK(cover_witness(d2, target).t.is_identity());
  }
  for (const auto& c : enumerate_components(s2, 4)) {
    const auto wit = cover_witness(d2, c);
    CHECK(wit.in_kernel);
    CHECK(wit.verified);
    CHECK(std::find(d2.core.begin(), d2.core.end(), wit.source) != d2.core.end());
  }
}

TEST_CASE("build_finite_cover") {
  const auto pres = pi1_presentation(cycle_curve(2));
  const auto triv = build_finite_cover(ContinuousRep::trivial(pres, 3, 1));
  CHECK(triv.fiber.size() == 1);
  CHECK(triv.deck_group_order == 1);

  Rng rng(54);
  const auto z2 = build_finite_cover(random_rep(rng, pres, {FiniteGroup::cyclic(2), FiniteGroup::trivial()}, 1, 3));
  CHECK(z2.fiber.size() == 2);
  CHECK(z2.connected);
  CHECK(z2.deck_group_order == 2);

  const auto big = build_finite_cover(random_rep(rng, pres, {FiniteGroup::symmetric(3), FiniteGroup::cyclic(2)}, 1, 7));
  CHECK(big.fiber.size() == 12);
  CHECK(big.connected);
  CHECK(big.relations_ok);
  CHECK(big.deck_group_order == big.fiber.size());
}
