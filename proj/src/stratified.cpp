#include "proet/stratified/stratified.hpp"

namespace proet {

std::string mode_name(FrobeniusMode m) { return m == FrobeniusMode::kSRelative ? "S-relative" : "K-relative"; }

MatrixK frobenius_transport(const MatrixK& m, FrobeniusMode mode) {
  if (mode == FrobeniusMode::kSRelative) return m;
  MatrixK out = m;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = frobenius(m(i, j));
  return out;
}

ContinuousRep frobenius_twist(const ContinuousRep& rep, std::size_t k) {
  auto twist = [k](MatrixK m) {
    for (std::size_t s = 0; s < k; ++s) m = frobenius_transport(m, FrobeniusMode::kKRelative);
    return m;
  };
  std::vector<MatrixK> zs;
  for (const auto& z : rep.z_images()) zs.push_back(twist(z));
  auto factors = rep.factors();
  for (auto& f : factors)
    for (auto& x : f.images) x = twist(x);
  return ContinuousRep(rep.presentation(), rep.prime(), rep.rank(), std::move(zs), std::move(factors));
}

FDividedDatum::FDividedDatum(MeromorphicCocycle generator, FrobeniusMode mode, std::size_t depth,
                             CocycleCertificate certificate)
    : generator_(std::move(generator)), mode_(mode), depth_(depth), certificate_(std::move(certificate)) {
  for (std::size_t i = 0; i <= depth_; ++i) {
    if (mode_ == FrobeniusMode::kSRelative || i == depth_) {
      layers_.push_back(generator_);
    } else {
      MeromorphicCocycle layer(frobenius_twist(generator_.rep(), depth_ - i), generator_.scope(), generator_.twist());
      layers_.push_back(std::move(layer));
    }
  }
}

FDividedDatum fdiv_from_rep(const ContinuousRep& rep, FrobeniusMode mode, std::size_t depth, std::size_t cert_len) {
  MeromorphicCocycle c = datum_from_rep(rep);
  auto cert = check_cocycle(c, cert_len);
  return FDividedDatum(std::move(c), mode, depth, std::move(cert));
}

namespace {

// Intertwining pairs (h1_w, h2_w) of two cocycles on the scope generators.
std::vector<std::pair<MatrixK, MatrixK>> generator_pairs(const MeromorphicCocycle& c1, const MeromorphicCocycle& c2) {
  std::vector<std::pair<MatrixK, MatrixK>> pairs;
  if (c1.scope() == DeckScope::kFull) {
    for (const auto& [a, b] : paired_generators(c1.rep(), c2.rep())) pairs.push_back({c1.h(a), c2.h(b)});
  } else {
    if (!(*c1.signature() == *c2.signature())) throw ScopeMismatch("kernel data over different groups");
    for (const auto& w : c1.scope_generators()) pairs.push_back({c1.h(w), c2.h(w)});
  }
  return pairs;
}

// Rows of an F_p-linear system: the coefficient of every power of t in
// sum_k coeffs[k] x_k = 0 after clearing denominators.
void append_fp_rows(const std::vector<K>& coeffs, std::vector<std::vector<Fp>>& rows, const Fp& zero) {
  using Poly = Polynomial<Fp>;
  Poly common = Poly::constant(one_like(zero));
  for (const auto& c : coeffs)
    if (!c.is_zero() && !(common.divmod(c.denominator()).second.is_zero())) common = common * c.denominator();
  std::vector<Poly> polys;
  std::size_t width = 0;
  for (const auto& c : coeffs) {
    const K scaled = c * K(common);
    polys.push_back(scaled.numerator());
    width = std::max(width, polys.back().coeffs().size());
  }
  for (std::size_t d = 0; d < width; ++d) {
    std::vector<Fp> row;
    bool nonzero = false;
    for (const auto& q : polys) {
      row.push_back(q.coeff(d));
      nonzero = nonzero || !is_zero(row.back());
    }
    if (nonzero) rows.push_back(std::move(row));
  }
}

std::vector<MatrixK> solve_over_prime_field(const std::vector<std::pair<MatrixK, MatrixK>>& pairs, std::size_t n1,
                                            std::size_t n2, std::uint32_t p) {
  const Fp zero(0, p);
  std::vector<std::vector<Fp>> rows;
  for (const auto& [ra, rb] : pairs)
    for (std::size_t i = 0; i < n2; ++i)
      for (std::size_t j = 0; j < n1; ++j) {
        // (rb x - x ra)(i, j) with x(k, l) at index k * n1 + l.
        std::vector<K> coeffs(n1 * n2, K(zero));
        for (std::size_t k = 0; k < n2; ++k) coeffs[k * n1 + j] = coeffs[k * n1 + j] + rb(i, k);
        for (std::size_t k = 0; k < n1; ++k) coeffs[i * n1 + k] = coeffs[i * n1 + k] - ra(k, j);
        append_fp_rows(coeffs, rows, zero);
      }
  Matrix<Fp> system(std::max<std::size_t>(1, rows.size()), n1 * n2, zero);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < n1 * n2; ++c) system(r, c) = rows[r][c];
  std::vector<MatrixK> out;
  for (const auto& v : kernel_basis(system)) {
    MatrixK f(n2, n1, K(zero));
    for (std::size_t i = 0; i < n2; ++i)
      for (std::size_t j = 0; j < n1; ++j) f(i, j) = K(v(i * n1 + j, 0));
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace

FDivHom hom_fdiv(const FDividedDatum& d1, const FDividedDatum& d2) {
  if (d1.mode() != d2.mode()) throw ModeMismatch("F-divided data use different Frobenius modes");
  if (d1.generator().scope() != d2.generator().scope()) throw ScopeMismatch("data live over different deck groups");
  if (d1.generator().prime() != d2.generator().prime()) throw FieldMismatch("data live over different primes");
  FDivHom out;
  out.mode = d1.mode();
  out.depth = std::min(d1.depth(), d2.depth());
  if (out.mode == FrobeniusMode::kSRelative) {
    out.basis = hom_cocycle(d1.generator(), d2.generator());
    out.field = "K";
    out.dimension_by_depth.assign(out.depth, out.basis.size());
    out.stabilization_depth = 0;
    return out;
  }
  out.field = "F_p";
  // Layers are indexed from the top: the top layer of each datum is its
  // generator, and layer top - s is frob^s of it.
  std::vector<std::pair<MatrixK, MatrixK>> pairs;
  for (std::size_t d = 0; d <= out.depth; ++d) {
    const auto more = generator_pairs(d1.layer(d1.depth() - d), d2.layer(d2.depth() - d));
    pairs.insert(pairs.end(), more.begin(), more.end());
    if (d == 0) continue;
    out.basis = solve_over_prime_field(pairs, d1.rank(), d2.rank(), d1.generator().prime());
    out.dimension_by_depth.push_back(out.basis.size());
  }
  out.stabilization_depth = out.dimension_by_depth.size();
  while (out.stabilization_depth > 1 &&
         out.dimension_by_depth[out.stabilization_depth - 2] == out.dimension_by_depth.back())
    --out.stabilization_depth;
  return out;
}

TensorResult tensor_fdiv(const FDividedDatum& d1, const FDividedDatum& d2) {
  if (d1.mode() != d2.mode()) throw ModeMismatch("F-divided data use different Frobenius modes");
  const auto& a = d1.generator().rep();
  const auto& b = d2.generator().rep();
  const ContinuousRep t = rep_tensor(a, b);
  const std::size_t depth = std::min(d1.depth(), d2.depth());
  FDividedDatum datum = fdiv_from_rep(t, d1.mode(), depth, d1.certificate().max_len);

  // The tensor's generators line up with the pairs: z_i, then the padded
  // designated generators of each factor in order.
  std::vector<FPWord> tw;
  for (std::size_t i = 0; i < t.z_images().size(); ++i) tw.push_back(fp_z(t.signature(), i));
  for (std::size_t j = 0; j < t.factors().size(); ++j)
    for (Element g : t.factors()[j].generators) tw.push_back(fp_g(t.signature(), j, g));
  const auto pairs = paired_generators(a, b);

  TensorCertificate cert;
  cert.layers = depth + 1;
  cert.ok = tw.size() == pairs.size();
  for (std::size_t s = 0; s <= depth && cert.ok; ++s)
    for (std::size_t k = 0; k < pairs.size() && cert.ok; ++k) {
      ++cert.generators_checked;
      cert.ok = datum.h(depth - s, tw[k]) ==
                kron(d1.h(d1.depth() - s, pairs[k].first), d2.h(d2.depth() - s, pairs[k].second));
    }
  return {std::move(datum), cert};
}

}  // namespace proet
