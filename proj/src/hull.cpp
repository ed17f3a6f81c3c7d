#include "proet/hull/hull.hpp"

#include <numeric>

namespace proet {

bool AxiomCertificate::ok() const {
  return std::all_of(axioms.begin(), axioms.end(), [](const AxiomCheck& a) { return a.ok; });
}

QuotientTower::QuotientTower(std::vector<FiniteGroup> levels, std::vector<std::vector<Element>> maps)
    : levels_(std::move(levels)), maps_(std::move(maps)) {
  if (levels_.empty()) throw DimensionMismatch("a tower needs at least one level");
  if (maps_.size() + 1 != levels_.size()) throw DimensionMismatch("a tower with k levels needs k - 1 maps");
  for (std::size_t i = 0; i < maps_.size(); ++i) {
    if (maps_[i].size() != levels_[i + 1].order())
      throw DimensionMismatch("map " + std::to_string(i) + " does not cover level " + std::to_string(i + 1));
    for (Element x : maps_[i])
      if (x >= levels_[i].order()) throw BadElementIndex("map " + std::to_string(i) + " leaves level " + std::to_string(i));
    if (!is_homomorphism(levels_[i + 1], levels_[i], maps_[i]))
      throw NotAHomomorphism("map " + std::to_string(i + 1) + " -> " + std::to_string(i) + " is not a homomorphism");
  }
}

QuotientTower QuotientTower::cyclic_chain(const std::vector<std::size_t>& orders) {
  std::vector<FiniteGroup> levels;
  std::vector<std::vector<Element>> maps;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    levels.push_back(FiniteGroup::cyclic(orders[i]));
    if (i == 0) continue;
    if (orders[i] % orders[i - 1] != 0)
      throw NotAHomomorphism("Z/" + std::to_string(orders[i]) + " does not surject onto Z/" + std::to_string(orders[i - 1]));
    std::vector<Element> m(orders[i]);
    for (std::size_t x = 0; x < orders[i]; ++x) m[x] = static_cast<Element>(x % orders[i - 1]);
    maps.push_back(std::move(m));
  }
  return QuotientTower(std::move(levels), std::move(maps));
}

QuotientTower QuotientTower::constant(const FiniteGroup& g, std::size_t levels) {
  std::vector<Element> id(g.order());
  std::iota(id.begin(), id.end(), Element{0});
  return QuotientTower(std::vector<FiniteGroup>(levels, g), std::vector<std::vector<Element>>(levels ? levels - 1 : 0, id));
}

bool QuotientTower::surjective(std::size_t i) const {
  std::vector<bool> hit(levels_.at(i).order(), false);
  for (Element x : maps_.at(i)) hit[x] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

std::vector<Element> QuotientTower::composite(std::size_t i, std::size_t j) const {
  if (i > j || j >= levels_.size()) throw BadElementIndex("composite needs i <= j < number of levels");
  std::vector<Element> out(levels_[j].order());
  std::iota(out.begin(), out.end(), Element{0});
  for (std::size_t k = j; k > i; --k)
    for (auto& x : out) x = maps_[k - 1][x];
  return out;
}

Matrix<Fp> Comodule::structure_map() const {
  const std::size_t m = blocks.size();
  const Fp zero = blocks.empty() ? Fp(0, 2) : blocks.front().zero();
  Matrix<Fp> out(dim * m, dim, zero);
  for (std::size_t g = 0; g < m; ++g)
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) out(i * m + g, j) = blocks[g](i, j);
  return out;
}

namespace {

Matrix<Fp> to_prime_field(const MatrixK& m, std::uint32_t p) {
  Matrix<Fp> out(m.rows(), m.cols(), Fp(0, p));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_constant()) throw RoundtripFailure("representation matrix has a non-constant entry");
      out(i, j) = m(i, j).constant_value();
    }
  return out;
}

MatrixK to_k(const Matrix<Fp>& m) {
  MatrixK out(m.rows(), m.cols(), K(m.zero()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = K(m(i, j));
  return out;
}

}  // namespace

Comodule comodule_of(const FiniteQuotientRep& fq) {
  Comodule c{fq.rank(), {}};
  for (Element g = 0; g < fq.group().order(); ++g) c.blocks.push_back(to_prime_field(fq.image(g), fq.prime()));
  return c;
}

AxiomCertificate comodule_axioms(const Comodule& c, const HopfAlgebra<Fp>& a) {
  const std::size_t m = a.dim();
  if (c.blocks.size() != m) throw DimensionMismatch("comodule and Hopf algebra have different dimensions");
  const Fp zero = a.zero();
  AxiomCertificate cert;
  // (δ ⊗ id)δ = (id ⊗ Δ)δ: C_h C_k = Σ_g Δ(e_g)[h,k] C_g.
  AxiomCheck coassoc{"comodule coassociativity"};
  std::vector<Matrix<Fp>> rhs(m * m, Matrix<Fp>(c.dim, c.dim, zero));
  for (std::size_t g = 0; g < m; ++g)
    for (const auto& [key, coeff] : a.tables().comult[g]) rhs[key] = rhs[key] + c.blocks[g].scaled(coeff);
  for (std::size_t h = 0; h < m; ++h)
    for (std::size_t k = 0; k < m; ++k, ++coassoc.checks) coassoc.ok = coassoc.ok && c.blocks[h] * c.blocks[k] == rhs[h * m + k];
  // (id ⊗ ε)δ = id.
  AxiomCheck counit{"comodule counit"};
  Matrix<Fp> sum(c.dim, c.dim, zero);
  for (std::size_t g = 0; g < m; ++g) sum = sum + c.blocks[g].scaled(a.tables().counit[g]);
  counit.checks = 1;
  counit.ok = sum.is_identity();
  cert.axioms = {coassoc, counit};
  return cert;
}

RoundtripCertificate rep_comodule_roundtrip(const FiniteQuotientRep& fq) {
  const auto hopf = function_hopf(fq.group(), Fp(0, fq.prime()));
  const Comodule c = comodule_of(fq);
  const auto axioms = comodule_axioms(c, hopf);
  RoundtripCertificate cert;
  cert.group_order = fq.group().order();
  cert.rank = fq.rank();
  cert.coassociativity_checks = axioms.axioms[0].checks;
  cert.counit_ok = axioms.axioms[1].ok;
  if (!axioms.ok()) throw RoundtripFailure("comodule axioms fail for the representation");

  // ρ(g) = (id ⊗ ev_g) ∘ δ, read off basis vector by basis vector.
  const Matrix<Fp> delta = c.structure_map();
  const std::size_t m = cert.group_order, n = cert.rank;
  for (Element g = 0; g < m; ++g) {
    Matrix<Fp> rho(n, n, Fp(0, fq.prime()));
    for (std::size_t j = 0; j < n; ++j) {
      Matrix<Fp> v(n, 1, Fp(0, fq.prime()));
      v(j, 0) = Fp(1, fq.prime());
      const Matrix<Fp> dv = delta * v;
      for (std::size_t i = 0; i < n; ++i) rho(i, j) = dv(i * m + g, 0);
    }
    cert.reconstructed.push_back(to_k(rho));
  }
  if (cert.reconstructed != fq.images()) throw RoundtripFailure("reconstructed representation differs");
  // The reconstruction is again a valid representation with the same quotient data.
  FiniteQuotientRep back(fq.group(), fq.z_images(), fq.factor_generators(), fq.prime(), n, cert.reconstructed);
  cert.ok = back.images() == fq.images();
  return cert;
}

}  // namespace proet
