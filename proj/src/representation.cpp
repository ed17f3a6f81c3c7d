#include "proet/rep/representation.hpp"

#include <deque>

namespace proet {

namespace {

void check_square(const MatrixK& m, std::size_t n, const char* what) {
  if (m.rows() != n || m.cols() != n)
    throw InvalidRepresentation(std::string(what) + " has the wrong shape for rank " + std::to_string(n));
}

void check_table(const FiniteGroup& g, const std::vector<MatrixK>& images, std::size_t n) {
  if (images.size() != g.order()) throw InvalidRepresentation("image table size differs from the group order");
  for (const auto& m : images) check_square(m, n, "factor image");
  if (!images[g.identity()].is_identity()) throw InvalidRepresentation("identity does not map to the identity");
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < g.order(); ++b)
      if (!(images[a] * images[b] == images[g.mul(a, b)]))
        throw InvalidRepresentation("factor images violate the group law at (" + g.label(a) + ", " + g.label(b) + ")");
}

void check_prime(std::uint32_t p, const MatrixK& m) {
  if (characteristic(m.zero().coefficient_zero()) != p) throw FieldMismatch("matrix entries live over a different prime");
}

}  // namespace

std::vector<MatrixK> extend_matrix_hom(const FiniteGroup& g, const std::vector<Element>& gens,
                                       const std::vector<MatrixK>& gen_images) {
  if (gens.size() != gen_images.size()) throw InvalidRepresentation("generator/image count mismatch");
  if (g.order() == 1) {
    if (!gen_images.empty()) return {MatrixK::identity(gen_images[0].rows(), gen_images[0].zero())};
    throw InvalidRepresentation("cannot infer the rank from an empty generator list");
  }
  if (gens.empty()) throw InvalidRepresentation("nontrivial group needs generators");
  const auto n = gen_images[0].rows();
  std::vector<std::optional<MatrixK>> table(g.order());
  table[g.identity()] = MatrixK::identity(n, gen_images[0].zero());
  std::deque<Element> queue{g.identity()};
  while (!queue.empty()) {
    const Element x = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const Element y = g.mul(x, gens[k]);
      if (!table[y]) {
        table[y] = *table[x] * gen_images[k];
        queue.push_back(y);
      }
    }
  }
  std::vector<MatrixK> out;
  for (auto& m : table) {
    if (!m) throw InvalidRepresentation("generators do not generate the group");
    out.push_back(std::move(*m));
  }
  check_table(g, out, n);
  return out;
}

ContinuousRep::ContinuousRep(Pi1Presentation pres, std::uint32_t p, std::size_t rank, std::vector<MatrixK> z_images,
                             std::vector<FactorRep> factors)
    : pres_(std::move(pres)), p_(p), rank_(rank), z_images_(std::move(z_images)), factors_(std::move(factors)) {
  if (!is_prime(p_)) throw NotPrime(std::to_string(p_) + " is not prime");
  if (rank_ == 0) throw InvalidRepresentation("rank must be positive");
  if (z_images_.size() != pres_.r)
    throw InvalidRepresentation("expected " + std::to_string(pres_.r) + " Z-generator images");
  if (factors_.size() != pres_.num_components)
    throw InvalidRepresentation("expected " + std::to_string(pres_.num_components) + " factor representations");
  for (const auto& m : z_images_) {
    check_square(m, rank_, "Z-generator image");
    check_prime(p_, m);
    if (!is_invertible(m)) throw InvalidRepresentation("Z-generator image is not invertible");
    z_inverses_.push_back(inverse(m));
  }
  std::vector<FiniteGroup> groups;
  for (const auto& f : factors_) {
    for (Element g : f.generators)
      if (g >= f.group.order()) throw InvalidRepresentation("factor generator out of range");
    if (f.group.generated_subgroup(f.generators).size() != f.group.order())
      throw InvalidRepresentation("designated generators do not generate the factor group");
    check_table(f.group, f.images, rank_);
    for (const auto& m : f.images) check_prime(p_, m);
    groups.push_back(f.group);
  }
  sig_ = pres_.signature(std::move(groups));
}

ContinuousRep ContinuousRep::trivial(const Pi1Presentation& pres, std::uint32_t p, std::size_t rank) {
  const K zero(Fp(0, p));
  const MatrixK id = MatrixK::identity(rank, zero);
  std::vector<FactorRep> factors(pres.num_components, FactorRep{FiniteGroup::trivial(), {}, {id}});
  return ContinuousRep(pres, p, rank, std::vector<MatrixK>(pres.r, id), std::move(factors));
}

std::vector<FPWord> ContinuousRep::generator_words() const {
  std::vector<FPWord> out;
  for (std::size_t i = 0; i < pres_.r; ++i) out.push_back(fp_z(sig_, i));
  for (std::size_t j = 0; j < factors_.size(); ++j)
    for (Element g : factors_[j].generators)
      if (g != factors_[j].group.identity()) out.push_back(fp_g(sig_, j, g));
  return out;
}

MatrixK eval_letters(const ContinuousRep& rep, const std::vector<Letter>& letters) {
  const auto& sig = *rep.signature();
  MatrixK m = MatrixK::identity(rep.rank(), rep.zero());
  for (const auto& l : letters) {
    if (l.factor >= sig.num_factors()) throw BadFactorIndex("letter factor out of range");
    if (sig.is_z(l.factor)) {
      const auto& base = l.value > 0 ? rep.z_images()[l.factor] : rep.z_inverses()[l.factor];
      for (std::int64_t k = 0; k < std::abs(l.value); ++k) m = m * base;
    } else {
      const auto& f = rep.factors()[l.factor - sig.r()];
      if (l.value < 0 || static_cast<std::size_t>(l.value) >= f.group.order())
        throw BadElementIndex("letter element out of range");
      m = m * f.images[static_cast<std::size_t>(l.value)];
    }
  }
  return m;
}

MatrixK eval_word(const ContinuousRep& rep, const FPWord& w) {
  if (w.signature() != rep.signature() && !(*w.signature() == *rep.signature()))
    throw SignatureMismatch("word does not belong to the representation's group");
  return eval_letters(rep, w.letters());
}

namespace {

void check_compatible(const ContinuousRep& a, const ContinuousRep& b) {
  if (a.presentation().r != b.presentation().r || a.presentation().num_components != b.presentation().num_components ||
      a.presentation().node_loop != b.presentation().node_loop)
    throw PresentationMismatch("representations use different presentations");
  if (a.prime() != b.prime()) throw FieldMismatch("representations live over different primes");
}

}  // namespace

ContinuousRep rep_tensor(const ContinuousRep& a, const ContinuousRep& b) {
  check_compatible(a, b);
  std::vector<MatrixK> zs;
  for (std::size_t i = 0; i < a.z_images().size(); ++i) zs.push_back(kron(a.z_images()[i], b.z_images()[i]));
  std::vector<FactorRep> factors;
  for (std::size_t j = 0; j < a.factors().size(); ++j) {
    const auto& fa = a.factors()[j];
    const auto& fb = b.factors()[j];
    const FiniteGroup prod = FiniteGroup::direct_product(fa.group, fb.group);
    const auto hb = fb.group.order();
    const std::size_t m = std::max(fa.generators.size(), fb.generators.size());
    std::vector<Element> pairs;
    for (std::size_t k = 0; k < m; ++k) {
      const Element x = k < fa.generators.size() ? fa.generators[k] : fa.group.identity();
      const Element y = k < fb.generators.size() ? fb.generators[k] : fb.group.identity();
      pairs.push_back(static_cast<Element>(x * hb + y));
    }
    const Subgroup sub = make_subgroup(prod, prod.generated_subgroup(pairs));
    FactorRep f{sub.group, {}, {}};
    for (Element x : pairs) f.generators.push_back(sub.to_sub(x));
    for (Element x : sub.embedding) f.images.push_back(kron(fa.images[x / hb], fb.images[x % hb]));
    factors.push_back(std::move(f));
  }
  return ContinuousRep(a.presentation(), a.prime(), a.rank() * b.rank(), std::move(zs), std::move(factors));
}

std::vector<std::pair<FPWord, FPWord>> paired_generators(const ContinuousRep& a, const ContinuousRep& b) {
  check_compatible(a, b);
  std::vector<std::pair<FPWord, FPWord>> out;
  for (std::size_t i = 0; i < a.z_images().size(); ++i)
    out.push_back({fp_z(a.signature(), i), fp_z(b.signature(), i)});
  // Pair designated generators by position (same topological generator).
  for (std::size_t j = 0; j < a.factors().size(); ++j) {
    const auto& fa = a.factors()[j];
    const auto& fb = b.factors()[j];
    const std::size_t m = std::max(fa.generators.size(), fb.generators.size());
    for (std::size_t k = 0; k < m; ++k) {
      const Element x = k < fa.generators.size() ? fa.generators[k] : fa.group.identity();
      const Element y = k < fb.generators.size() ? fb.generators[k] : fb.group.identity();
      out.push_back({fp_g(a.signature(), j, x), fp_g(b.signature(), j, y)});
    }
  }
  return out;
}

std::vector<MatrixK> intertwining_space(const std::vector<std::pair<MatrixK, MatrixK>>& pairs, std::size_t n1,
                                        std::size_t n2, const K& zero) {
  MatrixK system(std::max<std::size_t>(1, pairs.size() * n1 * n2), n1 * n2, zero);
  std::size_t row = 0;
  for (const auto& [ra, rb] : pairs) {
    if (ra.rows() != n1 || rb.rows() != n2) throw DimensionMismatch("intertwining pair has the wrong size");
    // (rb f - f ra)(i, j)
    for (std::size_t i = 0; i < n2; ++i)
      for (std::size_t j = 0; j < n1; ++j, ++row) {
        for (std::size_t k = 0; k < n2; ++k) system(row, k * n1 + j) = system(row, k * n1 + j) + rb(i, k);
        for (std::size_t k = 0; k < n1; ++k) system(row, i * n1 + k) = system(row, i * n1 + k) - ra(k, j);
      }
  }
  std::vector<MatrixK> out;
  for (const auto& v : kernel_basis(system)) {
    MatrixK f(n2, n1, zero);
    for (std::size_t i = 0; i < n2; ++i)
      for (std::size_t j = 0; j < n1; ++j) f(i, j) = v(i * n1 + j, 0);
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<MatrixK> intertwiners(const ContinuousRep& a, const ContinuousRep& b) {
  std::vector<std::pair<MatrixK, MatrixK>> pairs;
  for (const auto& [wa, wb] : paired_generators(a, b)) pairs.push_back({eval_word(a, wa), eval_word(b, wb)});
  return intertwining_space(pairs, a.rank(), b.rank(), a.zero());
}

FiniteQuotientRep::FiniteQuotientRep(FiniteGroup group, std::vector<Element> z_images,
                                     std::vector<std::vector<Element>> factor_generators, std::uint32_t p,
                                     std::size_t rank, std::vector<MatrixK> images)
    : group_(std::move(group)),
      z_images_(std::move(z_images)),
      factor_generators_(std::move(factor_generators)),
      p_(p),
      rank_(rank),
      images_(std::move(images)) {
  if (!is_prime(p_)) throw NotPrime(std::to_string(p_) + " is not prime");
  if (rank_ == 0) throw InvalidRepresentation("rank must be positive");
  std::vector<Element> all = z_images_;
  for (const auto& gens : factor_generators_) {
    for (Element g : gens)
      if (g >= group_.order()) throw InvalidRepresentation("generator image out of range");
    all.insert(all.end(), gens.begin(), gens.end());
    subgroups_.push_back(make_subgroup(group_, group_.generated_subgroup(gens)));
  }
  for (Element g : z_images_)
    if (g >= group_.order()) throw InvalidRepresentation("Z-generator image out of range");
  if (group_.generated_subgroup(all).size() != group_.order())
    throw InvalidRepresentation("quotient data is not surjective");
  check_table(group_, images_, rank_);
  for (const auto& m : images_) check_prime(p_, m);
}

FiniteQuotientRep FiniteQuotientRep::from_generators(FiniteGroup group, std::vector<Element> z_images,
                                                     std::vector<std::vector<Element>> factor_generators,
                                                     std::uint32_t p, std::size_t rank,
                                                     const std::vector<Element>& gens,
                                                     const std::vector<MatrixK>& gen_images) {
  std::vector<MatrixK> table;
  if (group.order() == 1) table = {MatrixK::identity(rank, K(Fp(0, p)))};
  else table = extend_matrix_hom(group, gens, gen_images);
  return FiniteQuotientRep(std::move(group), std::move(z_images), std::move(factor_generators), p, rank,
                           std::move(table));
}

Element quotient_map(const FiniteQuotientRep& fq, const FPWord& w) {
  const auto& sig = *w.signature();
  if (sig.r() != fq.z_images().size() || sig.num_finite() != fq.factor_subgroups().size())
    throw SignatureMismatch("word does not match the quotient data");
  Element x = fq.group().identity();
  for (const auto& l : w.letters()) {
    if (sig.is_z(l.factor)) {
      x = fq.group().mul(x, fq.group().pow(fq.z_images()[l.factor], static_cast<long>(l.value)));
    } else {
      const auto& sub = fq.factor_subgroups()[l.factor - sig.r()];
      x = fq.group().mul(x, sub.embedding.at(static_cast<std::size_t>(l.value)));
    }
  }
  return x;
}

ContinuousRep inflate(const FiniteQuotientRep& fq, const Pi1Presentation& pres) {
  if (fq.z_images().size() != pres.r || fq.factor_generators().size() != pres.num_components)
    throw SignatureMismatch("quotient data does not fit the presentation");
  std::vector<MatrixK> zs;
  for (Element g : fq.z_images()) zs.push_back(fq.image(g));
  std::vector<FactorRep> factors;
  for (std::size_t j = 0; j < pres.num_components; ++j) {
    const auto& sub = fq.factor_subgroups()[j];
    FactorRep f{sub.group, {}, {}};
    for (Element g : fq.factor_generators()[j]) f.generators.push_back(sub.to_sub(g));
    for (Element g : sub.embedding) f.images.push_back(fq.image(g));
    factors.push_back(std::move(f));
  }
  return ContinuousRep(pres, fq.prime(), fq.rank(), std::move(zs), std::move(factors));
}

FiniteQuotientRep fq_direct_sum(const FiniteQuotientRep& a, const FiniteQuotientRep& b) {
  if (!(a.group() == b.group()) || a.z_images() != b.z_images() || a.factor_generators() != b.factor_generators())
    throw PresentationMismatch("direct sum needs identical quotient data");
  if (a.prime() != b.prime()) throw FieldMismatch("quotient reps live over different primes");
  std::vector<MatrixK> images;
  for (Element g = 0; g < a.group().order(); ++g) images.push_back(direct_sum(a.image(g), b.image(g)));
  return FiniteQuotientRep(a.group(), a.z_images(), a.factor_generators(), a.prime(), a.rank() + b.rank(),
                           std::move(images));
}

}  // namespace proet
