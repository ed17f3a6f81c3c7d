#pragma once

// Representation fixtures shared by the unit tests and the acceptance suite.

#include <vector>

#include "proet/rep/representation.hpp"
#include "proet/testing/generators.hpp"

namespace proet::testing {

inline MatrixK scalar_matrix(std::int64_t v, std::uint32_t p, std::size_t n = 1) {
  return MatrixK::identity(n, K(Fp(0, p))).scaled(k_constant(v, p));
}

// Permutation matrices of S_n (labels are one-line images), P e_x = e_{π(x)}.
inline std::vector<MatrixK> permutation_images(const FiniteGroup& sn, std::uint32_t p) {
  std::vector<MatrixK> out;
  const K zero(Fp(0, p));
  for (Element g = 0; g < sn.order(); ++g) {
    const std::string& lab = sn.label(g);
    MatrixK m(lab.size(), lab.size(), zero);
    for (std::size_t x = 0; x < lab.size(); ++x) m(static_cast<std::size_t>(lab[x] - '0'), x) = k_constant(1, p);
    out.push_back(m);
  }
  return out;
}

// The 2-dimensional representation of S_3 on the sum-zero plane, basis
// e0 - e1, e1 - e2. Needs p != 3.
inline std::vector<MatrixK> s3_standard_images(const FiniteGroup& s3, std::uint32_t p) {
  const K zero(Fp(0, p));
  const K one = k_constant(1, p), minus = k_constant(-1, p);
  const MatrixK b = MatrixK::from_rows({{one, zero}, {minus, one}, {zero, minus}}, zero);
  const MatrixK bt = transpose(b);
  const MatrixK proj = inverse(bt * b) * bt;
  std::vector<MatrixK> out;
  for (const auto& perm : permutation_images(s3, p)) out.push_back(proj * perm * b);
  return out;
}

// All homomorphisms G -> F_p^*, by brute force over generator images.
inline std::vector<std::vector<std::int64_t>> characters(const FiniteGroup& g, std::uint32_t p) {
  const auto gens = g.generators();
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> choice(gens.size(), 1);
  while (true) {
    // Walk the table: value[x * gen] = value[x] * choice.
    std::vector<std::int64_t> value(g.order(), 0);
    value[g.identity()] = 1;
    bool grew = true;
    while (grew) {
      grew = false;
      for (Element x = 0; x < g.order(); ++x)
        if (value[x])
          for (std::size_t k = 0; k < gens.size(); ++k) {
            const Element y = g.mul(x, gens[k]);
            if (!value[y]) {
              value[y] = value[x] * choice[k] % p;
              grew = true;
            }
          }
    }
    bool ok = true;
    for (Element a = 0; a < g.order() && ok; ++a)
      for (Element b = 0; b < g.order() && ok; ++b) ok = value[g.mul(a, b)] == value[a] * value[b] % p;
    if (ok) out.push_back(value);
    std::size_t k = 0;
    while (k < choice.size() && ++choice[k] == static_cast<std::int64_t>(p)) choice[k++] = 1;
    if (k == choice.size()) break;
  }
  return out;
}

// A factor representation: a random sum of characters conjugated by a
// random invertible matrix of the given degree.
inline FactorRep random_factor_rep(Rng& rng, const FiniteGroup& g, std::size_t n, std::uint32_t p, long degree = 1) {
  const auto chars = characters(g, p);
  std::vector<std::size_t> pick;
  for (std::size_t k = 0; k < n; ++k)
    pick.push_back(static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(chars.size()) - 1)));
  const MatrixK conj = random_invertible(rng, p, n, degree);
  const MatrixK conj_inv = inverse(conj);
  FactorRep f{g, g.generators(), {}};
  for (Element x = 0; x < g.order(); ++x) {
    MatrixK d(n, n, K(Fp(0, p)));
    for (std::size_t k = 0; k < n; ++k) d(k, k) = k_constant(chars[pick[k]][x], p);
    f.images.push_back(conj * d * conj_inv);
  }
  return f;
}

inline ContinuousRep random_rep(Rng& rng, const Pi1Presentation& pres, const std::vector<FiniteGroup>& groups,
                                std::size_t n, std::uint32_t p, long degree = 1, long factor_degree = 1) {
  std::vector<MatrixK> zs;
  for (std::size_t i = 0; i < pres.r; ++i) zs.push_back(random_invertible(rng, p, n, degree));
  std::vector<FactorRep> factors;
  for (const auto& g : groups) factors.push_back(random_factor_rep(rng, g, n, p, factor_degree));
  return ContinuousRep(pres, p, n, std::move(zs), std::move(factors));
}

// Entries stay in F_p[t, 1/t]: Laurent z-images and factor representations
// conjugated by a Laurent matrix.
inline ContinuousRep random_laurent_rep(Rng& rng, const Pi1Presentation& pres, const std::vector<FiniteGroup>& groups,
                                        std::size_t n, std::uint32_t p) {
  std::vector<MatrixK> zs;
  for (std::size_t i = 0; i < pres.r; ++i) zs.push_back(random_laurent_gl(rng, p, n));
  std::vector<FactorRep> factors;
  for (const auto& g : groups) {
    FactorRep f = random_factor_rep(rng, g, n, p, 0);
    const MatrixK m = random_laurent_gl(rng, p, n);
    const MatrixK mi = inverse(m);
    for (auto& x : f.images) x = m * x * mi;
    factors.push_back(std::move(f));
  }
  return ContinuousRep(pres, p, n, std::move(zs), std::move(factors));
}

// Map an abstract word, given as (factor, index) pairs with factor < r a
// Z generator (index = ±1) and factor >= r the index-th designated
// generator of that component, into the representation's group.
inline FPWord abstract_word(const ContinuousRep& rep, const std::vector<std::pair<std::size_t, int>>& abstract) {
  const auto& sig = rep.signature();
  FPWord w = fp_identity(sig);
  for (const auto& [f, k] : abstract) {
    if (f < sig->r()) {
      w = w * fp_z(sig, f, k);
    } else {
      const auto& fr = rep.factors()[f - sig->r()];
      const Element g = static_cast<std::size_t>(k) < fr.generators.size() ? fr.generators[static_cast<std::size_t>(k)]
                                                                             : fr.group.identity();
      w = w * fp_g(sig, f - sig->r(), g);
    }
  }
  return w;
}

inline std::vector<std::pair<std::size_t, int>> random_abstract_word(Rng& rng, std::size_t num_factors, std::size_t r,
                                                                     std::size_t max_gens, std::size_t len) {
  std::vector<std::pair<std::size_t, int>> out;
  for (std::size_t k = 0; k < len; ++k) {
    const auto f = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(num_factors) - 1));
    if (f < r) out.push_back({f, uniform_int(rng, 0, 1) ? 1 : -1});
    else out.push_back({f, static_cast<int>(uniform_int(rng, 0, static_cast<std::int64_t>(max_gens) - 1))});
  }
  return out;
}

}  // namespace proet::testing
