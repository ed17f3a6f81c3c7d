#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "proet/group/free_product.hpp"
#include "proet/testing/generators.hpp"

using namespace proet;
using proet::testing::Rng;

namespace {

SignaturePtr sig_z_z2_s3() {
  return make_signature(2, {FiniteGroup::cyclic(2), FiniteGroup::symmetric(3)});
}

// Naive reducer: rescan until no adjacent pair can be combined.
std::vector<Letter> naive_reduce(const FPSignature& sig, std::vector<Letter> w) {
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Letter> next;
    for (const Letter& l : w) {
      const bool trivial = sig.is_z(l.factor) ? l.value == 0
                                              : static_cast<Element>(l.value) == sig.finite(l.factor - sig.r()).identity();
      if (trivial) {
        changed = true;
        continue;
      }
      next.push_back(l);
    }
    w.clear();
    for (std::size_t k = 0; k < next.size(); ++k) {
      if (k + 1 < next.size() && next[k].factor == next[k + 1].factor) {
        Letter m = next[k];
        if (sig.is_z(m.factor)) m.value += next[k + 1].value;
        else m.value = sig.finite(m.factor - sig.r()).mul(static_cast<Element>(m.value), static_cast<Element>(next[k + 1].value));
        w.push_back(m);
        ++k;
        changed = true;
      } else {
        w.push_back(next[k]);
      }
    }
  }
  return w;
}

std::vector<std::pair<std::uint32_t, std::int64_t>> expand(const FPWord& w) {
  std::vector<std::pair<std::uint32_t, std::int64_t>> out;
  const auto& sig = *w.signature();
  for (const auto& l : w.letters()) {
    if (sig.is_z(l.factor))
      for (std::int64_t k = 0; k < std::abs(l.value); ++k) out.push_back({l.factor, l.value > 0 ? 0 : 1});
    else
      out.push_back({l.factor, l.value});
  }
  return out;
}

std::vector<Letter> inverse_letters(const FPSignature& sig, std::vector<Letter> w) {
  std::reverse(w.begin(), w.end());
  for (auto& l : w) {
    if (sig.is_z(l.factor)) l.value = -l.value;
    else l.value = sig.finite(l.factor - sig.r()).inv(static_cast<Element>(l.value));
  }
  return w;
}

}  // namespace

TEST_CASE("finite groups") {
  const auto s3 = FiniteGroup::symmetric(3);
  CHECK(s3.order() == 6);
  CHECK_FALSE(s3.is_abelian());
  CHECK(FiniteGroup::dihedral(4).order() == 8);
  CHECK_FALSE(FiniteGroup::dihedral(4).is_abelian());
  CHECK(FiniteGroup::cyclic(5).is_abelian());
  CHECK(FiniteGroup::named("Z4") == FiniteGroup::cyclic(4));
  CHECK(FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(3)).order() == 6);
  CHECK(s3.generated_subgroup(s3.generators()).size() == 6);
  CHECK(FiniteGroup::trivial().generators().empty());
  CHECK_THROWS_AS(FiniteGroup({{0, 1}, {1, 1}}), GroupAxiomViolation);
  CHECK_THROWS_AS(FiniteGroup({{0, 1}, {1, 0}}, {"e", "e"}), GroupAxiomViolation);
  CHECK_THROWS_AS(FiniteGroup::named("Q8"), GroupAxiomViolation);

  // Sign map S3 -> Z2 extends from generators; a wrong image is rejected.
  const auto z2 = FiniteGroup::cyclic(2);
  const auto gens = s3.generators();
  std::vector<Element> images;
  for (Element g : gens) images.push_back(s3.element_order(g) == 2 ? 1 : 0);
  const auto sign = extend_homomorphism(s3, gens, z2, images);
  CHECK(is_homomorphism(s3, z2, sign));
  if (gens.size() == 2 && s3.element_order(gens[0]) == 3)
    CHECK_THROWS_AS(extend_homomorphism(s3, gens, z2, {1, 1}), NotAHomomorphism);

  const auto sub = make_subgroup(s3, s3.generated_subgroup({s3.index_of("120")}));
  CHECK(sub.group.order() == 3);
  CHECK(sub.embedding[0] == s3.identity());
}

TEST_CASE("fp_normalize examples") {
  const auto sig = sig_z_z2_s3();
  CHECK(fp_normalize(sig, {{0, 1}, {0, -1}}).is_identity());
  const auto& s3 = sig->finite(1);
  const Element g = s3.index_of("120");
  CHECK(fp_normalize(sig, {{3, g}, {3, s3.inv(g)}}).is_identity());
  CHECK_THROWS_AS(fp_normalize(sig, {{4, 0}}), BadFactorIndex);
  CHECK_THROWS_AS(fp_normalize(sig, {{2, 5}}), BadElementIndex);
  // Cascading cancellation.
  const auto w = fp_normalize(sig, {{0, 2}, {2, 1}, {1, 1}, {1, -1}, {2, 1}, {0, 3}});
  CHECK(format_word(w) == "z1^5");
  CHECK_THROWS_AS(fp_normalize(sig, {{0, INT64_MAX}, {0, 1}}), ExponentOverflow);
}

TEST_CASE("normal form properties") {
  const auto sig = sig_z_z2_s3();
  Rng rng(21);
  for (int i = 0; i < 500; ++i) {
    const auto raw = proet::testing::random_letters(rng, *sig, 20);
    const FPWord w = fp_normalize(sig, raw);
    // Idempotence.
    CHECK(fp_normalize(sig, w.letters()) == w);
    // Agreement with the rescanning reducer.
    CHECK(w.letters() == naive_reduce(*sig, raw));
    // Invariants of the normal form.
    for (std::size_t k = 0; k + 1 < w.letters().size(); ++k) CHECK(w.letters()[k].factor != w.letters()[k + 1].factor);
    // Insert-cancel perturbation: x x^-1 spliced in anywhere.
    auto perturbed = raw;
    const auto x = proet::testing::random_letters(rng, *sig, 3);
    const auto xi = inverse_letters(*sig, x);
    const auto pos = static_cast<long>(proet::testing::uniform_int(rng, 0, static_cast<long>(raw.size())));
    perturbed.insert(perturbed.begin() + pos, xi.begin(), xi.end());
    perturbed.insert(perturbed.begin() + pos, x.begin(), x.end());
    CHECK(fp_normalize(sig, perturbed) == w);
  }
}

TEST_CASE("fp_mul group laws") {
  const auto sig = sig_z_z2_s3();
  const auto e = fp_identity(sig);
  Rng rng(22);
  for (int i = 0; i < 500; ++i) {
    const auto ra = proet::testing::random_letters(rng, *sig, 8);
    const auto rb = proet::testing::random_letters(rng, *sig, 8);
    const auto rc = proet::testing::random_letters(rng, *sig, 8);
    const FPWord a = fp_normalize(sig, ra), b = fp_normalize(sig, rb), c = fp_normalize(sig, rc);
    CHECK((a * b) * c == a * (b * c));
    // Recompute from the concatenated raw letters.
    std::vector<Letter> all = ra;
    all.insert(all.end(), rb.begin(), rb.end());
    all.insert(all.end(), rc.begin(), rc.end());
    CHECK(a * b * c == fp_normalize(sig, all));
    CHECK(a * e == a);
    CHECK(e * a == a);
    CHECK((a * fp_inverse(a)).is_identity());
    CHECK((fp_inverse(a) * a).is_identity());
  }
  const auto z = fp_z(sig, 0);
  const auto g = fp_g(sig, 1, sig->finite(1).index_of("120"));
  CHECK(((z * g * fp_inverse(z)) * (z * fp_inverse(g) * fp_inverse(z))).is_identity());
  CHECK(fp_pow(z, -3) == fp_z(sig, 0, -3));
  CHECK(fp_pow(g, 3).is_identity());

  const auto other = make_signature(1, {});
  CHECK_THROWS_AS(fp_mul(z, fp_z(other, 0)), SignatureMismatch);
  // Structurally equal signatures interoperate.
  const auto twin = sig_z_z2_s3();
  CHECK(fp_mul(z, fp_z(twin, 0)) == fp_z(sig, 0, 2));
}

TEST_CASE("alpha") {
  const auto sig = sig_z_z2_s3();
  CHECK(alpha(fp_z(sig, 0, 5) * fp_z(sig, 1, -2) * fp_z(sig, 0, 1)) == direct_identity(*sig));
  const auto g1 = fp_g(sig, 0, 1), g2 = fp_g(sig, 1, sig->finite(1).index_of("102"));
  CHECK(alpha(fp_commutator(g1, g2)) == direct_identity(*sig));
  CHECK_FALSE(fp_commutator(g1, g2).is_identity());
  Rng rng(23);
  for (int i = 0; i < 500; ++i) {
    const auto a = proet::testing::random_word(rng, sig, 10), b = proet::testing::random_word(rng, sig, 10);
    CHECK(alpha(a * b) == direct_mul(*sig, alpha(a), alpha(b)));
  }
  // σ is a section, and σ(g) has length <= N.
  for (const auto& t : all_direct_tuples(*sig)) {
    CHECK(alpha(sigma(sig, t)) == t);
    CHECK(word_length(sigma(sig, t)) <= sig->num_finite());
  }
  CHECK(all_direct_tuples(*sig).size() == 12);
  for (const auto& t : all_direct_tuples(*sig))
    CHECK(all_direct_tuples(*sig)[direct_index(*sig, t)] == t);
}

TEST_CASE("enumerate_words") {
  const auto sig = sig_z_z2_s3();
  const auto zero = enumerate_words(sig, 0);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].is_identity());

  const auto z = make_signature(1, {});
  const auto two = enumerate_words(z, 2);
  std::vector<std::string> names;
  for (const auto& w : two) names.push_back(format_word(w));
  CHECK(names == std::vector<std::string>{"e", "z1", "z1^-1", "z1^2", "z1^-2"});

  // Brute force: normalize every unit-symbol sequence of length <= L.
  const auto small = make_signature(1, {FiniteGroup::cyclic(3)});
  const std::size_t L = 4;
  std::vector<Letter> symbols{{0, 1}, {0, -1}, {1, 1}, {1, 2}};
  std::set<std::vector<std::pair<std::uint32_t, std::int64_t>>> oracle;
  std::vector<std::vector<Letter>> layer{{}};
  for (std::size_t len = 0; len <= L; ++len) {
    std::vector<std::vector<Letter>> next;
    for (const auto& raw : layer) {
      oracle.insert(expand(fp_normalize(small, raw)));
      if (len < L)
        for (const auto& s : symbols) {
          auto v = raw;
          v.push_back(s);
          next.push_back(v);
        }
    }
    layer = std::move(next);
  }
  const auto words = enumerate_words(small, L);
  CHECK(words.size() == oracle.size());
  std::set<std::vector<std::pair<std::uint32_t, std::int64_t>>> got;
  for (const auto& w : words) got.insert(expand(w));
  CHECK(got == oracle);
  for (std::size_t k = 0; k + 1 < words.size(); ++k) CHECK(shortlex_less(words[k], words[k + 1]));

  const auto ker = enumerate_words(small, L, WordFilter::kKernelAlpha);
  std::size_t expected = 0;
  for (const auto& w : words) expected += in_kernel_alpha(w);
  CHECK(ker.size() == expected);
  for (const auto& w : ker) CHECK(in_kernel_alpha(w));
}

TEST_CASE("shortlex agrees with expanded comparison") {
  const auto sig = sig_z_z2_s3();
  Rng rng(24);
  for (int i = 0; i < 500; ++i) {
    const auto a = proet::testing::random_word(rng, sig, 6), b = proet::testing::random_word(rng, sig, 6);
    const auto ea = expand(a), eb = expand(b);
    const auto want = ea.size() != eb.size() ? ea.size() <=> eb.size() : ea <=> eb;
    CHECK((shortlex_compare(a, b) == want));
    CHECK(ea.size() == word_length(a));
  }
}

TEST_CASE("kernel generators") {
  const auto sig = make_signature(1, {FiniteGroup::cyclic(2), FiniteGroup::cyclic(3)});
  const auto gens = kernel_generators(sig);
  CHECK_FALSE(gens.empty());
  for (const auto& k : gens) CHECK(in_kernel_alpha(k));
  CHECK(kernel_generators(make_signature(0, {FiniteGroup::cyclic(3)})).empty());
}

TEST_CASE("word serialization") {
  const auto sig = sig_z_z2_s3();
  Rng rng(25);
  for (int i = 0; i < 200; ++i) {
    const auto w = proet::testing::random_word(rng, sig, 12);
    CHECK(parse_word(sig, format_word(w)) == w);
  }
  CHECK(format_word(parse_word(sig, "z1^2 * g2:120 * z2^-1")) == "z1^2 * g2:120 * z2^-1");
  CHECK(parse_word(sig, "e").is_identity());
  CHECK_THROWS_AS(parse_word(sig, "z3"), BadFactorIndex);
  CHECK_THROWS_AS(parse_word(sig, "q1"), ParseError);
  CHECK_THROWS_AS(parse_word(sig, "g2:999"), BadElementIndex);
}
