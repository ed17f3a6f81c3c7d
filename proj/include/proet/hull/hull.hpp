#pragma once

#include <map>
#include <string>
#include <type_traits>
#include <vector>

#include "proet/field/matrix.hpp"
#include "proet/group/finite_group.hpp"
#include "proet/rep/representation.hpp"

namespace proet {

struct AxiomCheck {
  std::string name;
  std::size_t checks = 0;
  bool ok = true;
};

struct AxiomCertificate {
  std::vector<AxiomCheck> axioms;
  bool commutative = false;
  bool cocommutative = false;
  bool ok() const;
};

// Vector on a finite basis; zero coefficients are never stored.
template <class S>
using SparseVec = std::map<std::size_t, S>;

// Structure constants of a finite-dimensional Hopf algebra on the basis
// e_0..e_{dim-1}. Tensor basis e_h ⊗ e_k has key h * dim + k.
template <class S>
struct HopfTables {
  std::size_t dim = 0;
  S zero{};
  std::vector<SparseVec<S>> mult;      // mult[a * dim + b] = e_a e_b
  SparseVec<S> unit;
  std::vector<SparseVec<S>> comult;    // Δ(e_a)
  std::vector<S> counit;               // ε(e_a)
  std::vector<SparseVec<S>> antipode;  // S(e_a)
};

namespace hopf_detail {

template <class S>
void accumulate(SparseVec<S>& v, std::size_t key, const std::type_identity_t<S>& c) {
  if (is_zero(c)) return;
  auto it = v.find(key);
  if (it == v.end()) {
    v.emplace(key, c);
    return;
  }
  it->second = it->second + c;
  if (is_zero(it->second)) v.erase(it);
}

template <class S>
void accumulate(SparseVec<S>& v, const SparseVec<S>& x, const std::type_identity_t<S>& c) {
  for (const auto& [k, a] : x) accumulate(v, k, a * c);
}

}  // namespace hopf_detail

// A Hopf algebra whose axioms were verified exhaustively on construction.
template <class S>
class HopfAlgebra {
 public:
  using Vec = SparseVec<S>;

  // Throws AxiomViolation naming the first failing axiom and basis tuple.
  HopfAlgebra(HopfTables<S> tables, std::string name) : t_(std::move(tables)), name_(std::move(name)) { verify(); }

  std::size_t dim() const { return t_.dim; }
  const std::string& name() const { return name_; }
  const HopfTables<S>& tables() const { return t_; }
  const AxiomCertificate& certificate() const { return cert_; }
  S zero() const { return zero_like(t_.zero); }
  S one() const { return one_like(t_.zero); }

  Vec basis(std::size_t a) const { return Vec{{a, one()}}; }

  Vec multiply(const Vec& x, const Vec& y) const {
    Vec out;
    for (const auto& [a, ca] : x)
      for (const auto& [b, cb] : y) hopf_detail::accumulate(out, t_.mult[a * dim() + b], ca * cb);
    return out;
  }
  // Product in A ⊗ A.
  Vec multiply2(const Vec& x, const Vec& y) const {
    Vec out;
    const std::size_t n = dim();
    for (const auto& [p, cp] : x)
      for (const auto& [q, cq] : y) {
        const auto& left = t_.mult[(p / n) * n + q / n];
        const auto& right = t_.mult[(p % n) * n + q % n];
        for (const auto& [l, cl] : left)
          for (const auto& [r, cr] : right) hopf_detail::accumulate(out, l * n + r, cp * cq * cl * cr);
      }
    return out;
  }
  Vec comultiply(const Vec& x) const {
    Vec out;
    for (const auto& [a, c] : x) hopf_detail::accumulate(out, t_.comult[a], c);
    return out;
  }
  S counit(const Vec& x) const {
    S out = zero();
    for (const auto& [a, c] : x) out = out + c * t_.counit[a];
    return out;
  }
  Vec antipode(const Vec& x) const {
    Vec out;
    for (const auto& [a, c] : x) hopf_detail::accumulate(out, t_.antipode[a], c);
    return out;
  }
  Vec unit() const { return t_.unit; }

 private:
  void fail(const std::string& axiom, const std::string& where) const {
    throw AxiomViolation(name_ + ": " + axiom + " fails at " + where);
  }

  void verify() {
    const std::size_t n = dim();
    if (t_.mult.size() != n * n || t_.comult.size() != n || t_.counit.size() != n || t_.antipode.size() != n)
      throw AxiomViolation(name_ + ": structure tables do not match the dimension");
    auto check = [&](const std::string& name) -> AxiomCheck& {
      cert_.axioms.push_back({name, 0, true});
      return cert_.axioms.back();
    };
    auto tag = [](std::initializer_list<std::size_t> idx) {
      std::string s = "(";
      for (auto i : idx) s += (s.size() > 1 ? "," : "") + std::to_string(i);
      return s + ")";
    };
    const Vec one_vec = unit();

    {
      auto& c = check("associativity");
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          for (std::size_t d = 0; d < n; ++d, ++c.checks)
            if (multiply(multiply(basis(a), basis(b)), basis(d)) != multiply(basis(a), multiply(basis(b), basis(d))))
              fail(c.name, tag({a, b, d}));
    }
    {
      auto& c = check("unit");
      for (std::size_t a = 0; a < n; ++a, ++c.checks)
        if (multiply(one_vec, basis(a)) != basis(a) || multiply(basis(a), one_vec) != basis(a)) fail(c.name, tag({a}));
    }
    {
      auto& c = check("coassociativity");
      const std::size_t n2 = n * n;
      for (std::size_t a = 0; a < n; ++a, ++c.checks) {
        // Both sides in A ⊗ A ⊗ A with key (h * n + k) * n + l.
        Vec left, right;
        for (const auto& [p, cp] : t_.comult[a]) {
          for (const auto& [q, cq] : t_.comult[p / n]) hopf_detail::accumulate(left, q * n + p % n, cp * cq);
          for (const auto& [q, cq] : t_.comult[p % n]) hopf_detail::accumulate(right, (p / n) * n2 + q, cp * cq);
        }
        if (left != right) fail(c.name, tag({a}));
      }
    }
    {
      auto& c = check("counit");
      for (std::size_t a = 0; a < n; ++a, ++c.checks) {
        Vec left, right;
        for (const auto& [p, cp] : t_.comult[a]) {
          hopf_detail::accumulate(left, p % n, cp * t_.counit[p / n]);
          hopf_detail::accumulate(right, p / n, cp * t_.counit[p % n]);
        }
        if (left != basis(a) || right != basis(a)) fail(c.name, tag({a}));
      }
    }
    {
      auto& c = check("bialgebra compatibility");
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b, ++c.checks) {
          const Vec ab = multiply(basis(a), basis(b));
          if (comultiply(ab) != multiply2(t_.comult[a], t_.comult[b])) fail(c.name + " (Δ)", tag({a, b}));
          if (!(counit(ab) == t_.counit[a] * t_.counit[b])) fail(c.name + " (ε)", tag({a, b}));
        }
      Vec one2;
      for (const auto& [a, ca] : one_vec)
        for (const auto& [b, cb] : one_vec) hopf_detail::accumulate(one2, a * n + b, ca * cb);
      ++c.checks;
      if (comultiply(one_vec) != one2) fail(c.name + " (Δ(1))", "unit");
      ++c.checks;
      if (!(counit(one_vec) == one())) fail(c.name + " (ε(1))", "unit");
    }
    {
      auto& c = check("antipode");
      for (std::size_t a = 0; a < n; ++a, ++c.checks) {
        Vec left, right, target;
        for (const auto& [p, cp] : t_.comult[a]) {
          hopf_detail::accumulate(left, multiply(antipode(basis(p / n)), basis(p % n)), cp);
          hopf_detail::accumulate(right, multiply(basis(p / n), antipode(basis(p % n))), cp);
        }
        hopf_detail::accumulate(target, one_vec, t_.counit[a]);
        if (left != target || right != target) fail(c.name, tag({a}));
      }
    }

    cert_.commutative = true;
    for (std::size_t a = 0; a < n && cert_.commutative; ++a)
      for (std::size_t b = 0; b < n && cert_.commutative; ++b)
        cert_.commutative = multiply(basis(a), basis(b)) == multiply(basis(b), basis(a));
    cert_.cocommutative = true;
    for (std::size_t a = 0; a < n && cert_.cocommutative; ++a) {
      Vec swapped;
      for (const auto& [p, cp] : t_.comult[a]) hopf_detail::accumulate(swapped, (p % n) * n + p / n, cp);
      cert_.cocommutative = swapped == t_.comult[a];
    }
  }

  HopfTables<S> t_;
  std::string name_;
  AxiomCertificate cert_;
};

// F^G: functions on G with basis the indicator functions e_g, pointwise
// product, Δ(e_g) = Σ_{hk=g} e_h ⊗ e_k, ε(e_g) = [g = e], S(e_g) = e_{g^{-1}}.
// `like` fixes the base field (an Fp or a Rational).
template <class S>
HopfAlgebra<S> function_hopf(const FiniteGroup& g, const S& like, const std::string& name = "F^G") {
  const std::size_t n = g.order();
  const S zero = zero_like(like), one = one_like(like);
  HopfTables<S> t;
  t.dim = n;
  t.zero = zero;
  t.mult.assign(n * n, {});
  t.comult.assign(n, {});
  t.counit.assign(n, zero);
  t.antipode.assign(n, {});
  for (Element a = 0; a < n; ++a) {
    t.mult[a * n + a] = {{a, one}};
    t.unit[a] = one;
    t.antipode[a] = {{g.inv(a), one}};
  }
  for (Element h = 0; h < n; ++h)
    for (Element k = 0; k < n; ++k) t.comult[g.mul(h, k)][h * n + k] = one;
  t.counit[g.identity()] = one;
  return HopfAlgebra<S>(std::move(t), name);
}

// Linear map A -> B as a dim(B) x dim(A) matrix; checks that it respects
// product, unit, coproduct, counit and antipode on every basis tuple.
template <class S>
AxiomCertificate hopf_map_check(const HopfAlgebra<S>& a, const HopfAlgebra<S>& b, const Matrix<S>& phi) {
  using Vec = SparseVec<S>;
  if (phi.rows() != b.dim() || phi.cols() != a.dim()) throw DimensionMismatch("Hopf map has the wrong shape");
  auto apply = [&](const Vec& x) {
    Vec out;
    for (const auto& [j, c] : x)
      for (std::size_t i = 0; i < b.dim(); ++i) hopf_detail::accumulate(out, i, phi(i, j) * c);
    return out;
  };
  auto apply2 = [&](const Vec& x) {
    Vec out;
    const std::size_t n = a.dim(), m = b.dim();
    for (const auto& [p, c] : x) {
      const Vec l = apply(a.basis(p / n)), r = apply(a.basis(p % n));
      for (const auto& [i, ci] : l)
        for (const auto& [k, ck] : r) hopf_detail::accumulate(out, i * m + k, c * ci * ck);
    }
    return out;
  };
  AxiomCertificate cert;
  AxiomCheck mult{"multiplicative"}, unit{"unital"}, comult{"comultiplicative"}, counit{"counital"},
      antipode{"antipode"};
  for (std::size_t x = 0; x < a.dim(); ++x) {
    for (std::size_t y = 0; y < a.dim(); ++y, ++mult.checks)
      mult.ok = mult.ok && apply(a.multiply(a.basis(x), a.basis(y))) == b.multiply(apply(a.basis(x)), apply(a.basis(y)));
    ++comult.checks;
    comult.ok = comult.ok && apply2(a.comultiply(a.basis(x))) == b.comultiply(apply(a.basis(x)));
    ++counit.checks;
    counit.ok = counit.ok && b.counit(apply(a.basis(x))) == a.counit(a.basis(x));
    ++antipode.checks;
    antipode.ok = antipode.ok && apply(a.antipode(a.basis(x))) == b.antipode(apply(a.basis(x)));
  }
  ++unit.checks;
  unit.ok = apply(a.unit()) == b.unit();
  cert.axioms = {mult, unit, comult, counit, antipode};
  return cert;
}

// Dual of a group homomorphism f: H -> G, namely F^G -> F^H with
// e_g ↦ Σ_{f(h)=g} e_h.
template <class S>
Matrix<S> dual_map(const FiniteGroup& from, const FiniteGroup& to, const std::vector<Element>& f, const S& like) {
  if (f.size() != from.order()) throw DimensionMismatch("map table does not cover the source group");
  Matrix<S> m(from.order(), to.order(), like);
  for (Element h = 0; h < from.order(); ++h) m(h, f[h]) = one_like(like);
  return m;
}

// Ordered finite quotients π_0 ↞ π_1 ↞ ... with maps[i]: π_{i+1} -> π_i.
class QuotientTower {
 public:
  // Throws NotAHomomorphism for a map that is not a homomorphism and
  // DimensionMismatch for a map table of the wrong size. Surjectivity is
  // reported by surjective() and enforced by tower_hull.
  QuotientTower(std::vector<FiniteGroup> levels, std::vector<std::vector<Element>> maps);

  // Z/n_0 ↞ Z/n_1 ↞ ... by reduction; each n_i divides n_{i+1}.
  static QuotientTower cyclic_chain(const std::vector<std::size_t>& orders);
  // G ↞ G ↞ ... with identity maps.
  static QuotientTower constant(const FiniteGroup& g, std::size_t levels);

  std::size_t size() const { return levels_.size(); }
  const FiniteGroup& level(std::size_t i) const { return levels_.at(i); }
  const std::vector<Element>& map(std::size_t i) const { return maps_.at(i); }
  bool surjective(std::size_t i) const;
  // π_j -> π_i for i <= j, composed from the level maps.
  std::vector<Element> composite(std::size_t i, std::size_t j) const;

 private:
  std::vector<FiniteGroup> levels_;
  std::vector<std::vector<Element>> maps_;
};

template <class S>
struct DualLevel {
  std::size_t from = 0;  // F^{π_from} -> F^{π_to}
  std::size_t to = 0;
  Matrix<S> matrix;
  std::size_t rank = 0;
  bool injective = false;
  AxiomCertificate hopf_map;
};

template <class S>
struct TowerHullReport {
  std::vector<std::size_t> dimensions;
  std::vector<AxiomCertificate> algebras;
  std::vector<DualLevel<S>> duals;  // consecutive levels
  std::size_t composites_checked = 0;
  bool composites_ok = true;
  bool ok() const {
    for (const auto& a : algebras)
      if (!a.ok()) return false;
    for (const auto& d : duals)
      if (!d.injective || !d.hopf_map.ok()) return false;
    return composites_ok;
  }
};

// Builds F^{π_i} for every level and the dual maps between consecutive
// levels; checks each is an injective Hopf map and that the dual of every
// composite π_j ↞ π_i is the product of the level duals. Throws
// NonInjectiveDual.
template <class S>
TowerHullReport<S> tower_hull(const QuotientTower& tower, const S& like) {
  TowerHullReport<S> out;
  std::vector<HopfAlgebra<S>> algebras;
  for (std::size_t i = 0; i < tower.size(); ++i) {
    algebras.push_back(function_hopf(tower.level(i), like, "F^{π_" + std::to_string(i) + "}"));
    out.dimensions.push_back(algebras.back().dim());
    out.algebras.push_back(algebras.back().certificate());
  }
  for (std::size_t i = 0; i + 1 < tower.size(); ++i) {
    DualLevel<S> d{i, i + 1, dual_map(tower.level(i + 1), tower.level(i), tower.map(i), like)};
    d.rank = rank(d.matrix);
    d.injective = d.rank == tower.level(i).order();
    if (!d.injective)
      throw NonInjectiveDual("dual of level " + std::to_string(i + 1) + " -> " + std::to_string(i) + " has rank " +
                             std::to_string(d.rank) + " < " + std::to_string(tower.level(i).order()));
    d.hopf_map = hopf_map_check(algebras[i], algebras[i + 1], d.matrix);
    out.duals.push_back(std::move(d));
  }
  for (std::size_t i = 0; i < tower.size(); ++i)
    for (std::size_t j = i + 2; j < tower.size(); ++j) {
      Matrix<S> chained = out.duals[i].matrix;
      for (std::size_t k = i + 1; k < j; ++k) chained = out.duals[k].matrix * chained;
      ++out.composites_checked;
      out.composites_ok = out.composites_ok &&
                          chained == dual_map(tower.level(j), tower.level(i), tower.composite(i, j), like);
    }
  return out;
}

// Comodule over F^G: δ(v) = Σ_g (C_g v) ⊗ e_g.
struct Comodule {
  std::size_t dim = 0;
  std::vector<Matrix<Fp>> blocks;  // C_g
  // δ as a (dim * |G|) x dim matrix; row i * |G| + g holds the e_g part of
  // coordinate i.
  Matrix<Fp> structure_map() const;
};

struct RoundtripCertificate {
  std::size_t group_order = 0;
  std::size_t rank = 0;
  std::size_t coassociativity_checks = 0;
  bool counit_ok = false;
  std::vector<MatrixK> reconstructed;
  bool ok = false;
};

// v ↦ Σ_g ρ(g)(v) ⊗ e_g over F_p.
Comodule comodule_of(const FiniteQuotientRep& fq);
// Comodule axioms against the Hopf structure of F^G, one entry per axiom.
AxiomCertificate comodule_axioms(const Comodule& c, const HopfAlgebra<Fp>& a);
// Builds the comodule, checks its axioms against F^G, reads the
// representation back through the evaluations at each g, and requires
// exact equality with the input. Throws RoundtripFailure.
RoundtripCertificate rep_comodule_roundtrip(const FiniteQuotientRep& fq);

}  // namespace proet
