#include "proet/specialization/specialization.hpp"

namespace proet {

std::optional<FPWord> default_kernel_word(const SignaturePtr& sig) {
  for (auto& w : kernel_generators(sig))
    if (!w.is_identity()) return w;
  return std::nullopt;
}

SpecializationResult sp_pipeline(const ContinuousRep& rep, const PipelineBounds& bounds) {
  SpecializationResult out;
  out.rank = rep.rank();
  out.cover = build_finite_cover(rep);
  out.freeness = certify_free_action(rep.signature(), bounds.freeness_len);
  if (auto w = default_kernel_word(rep.signature()))
    out.domain = fundamental_domain(CoverGeometry(rep.presentation(), rep.signature()), *w);
  out.fdiv = fdiv_from_rep(rep, bounds.mode, bounds.depth, bounds.cocycle_len);
  if (!out.fdiv->certificate().ok) require_cocycle(out.fdiv->generator(), bounds.cocycle_len);
  out.lattices = integralize(out.fdiv->generator().restricted_to_kernel(), bounds.lattice_len);
  return out;
}

SpecializationResult F_pipeline(const FiniteQuotientRep& fq, std::size_t depth) {
  SpecializationResult out;
  out.rank = fq.rank();
  out.finite = FiniteFDivided{finite_cocycle_of(fq), depth};
  return out;
}

TensorCertificate sp_tensor_check(const ContinuousRep& a, const ContinuousRep& b, const PipelineBounds& bounds) {
  const auto da = fdiv_from_rep(a, bounds.mode, bounds.depth, bounds.cocycle_len);
  const auto db = fdiv_from_rep(b, bounds.mode, bounds.depth, bounds.cocycle_len);
  return tensor_fdiv(da, db).certificate;
}

SquareCertificate compare_square(const FDividedDatum& datum, const FiniteQuotientRep& fq, std::size_t max_len,
                                 std::size_t depth) {
  const auto f = F_pipeline(fq, depth);
  const FiniteFDivided& finite = *f.finite;
  if (datum.rank() != fq.rank()) throw SquareViolation("the two sides have different ranks");
  SquareCertificate cert{max_len, 0, 0, 0, finite.cocycle, finite.cocycle,
                         MatrixK::identity(fq.rank(), datum.generator().rep().zero()), false};
  const Element e = fq.group().identity();
  const std::size_t layers = std::min(datum.depth(), finite.depth) + 1;
  cert.layers_checked = layers;
  for (const auto& w : enumerate_words(datum.generator().signature(), max_len)) {
    ++cert.words_checked;
    const Element q = quotient_map(fq, w);
    if (q == e) ++cert.kernel_words;
    for (std::size_t i = 0; i < layers; ++i)
      if (datum.h(i, w) * cert.witness != cert.witness * finite.layer(i).values[q])
        throw SquareViolation("layer " + std::to_string(i) + " differs at " + format_word(w) +
                              (q == e ? " (a word of ker(q))" : ""));
  }
  try {
    cert.descended = descend_inflation(datum.generator(), fq, max_len);
  } catch (const KernelNotTrivial& ex) {
    throw SquareViolation(ex.what());
  }
  for (Element g = 0; g < fq.group().order(); ++g)
    if (cert.descended.values[g] != cert.direct.values[g])
      throw SquareViolation("descended cocycle differs at " + fq.group().label(g));
  cert.ok = true;
  return cert;
}

SquareCertificate commuting_square_check(const FiniteQuotientRep& fq, const Pi1Presentation& pres,
                                         std::size_t max_len, const PipelineBounds& bounds) {
  const auto sp = sp_pipeline(inflate(fq, pres), bounds);
  return compare_square(*sp.fdiv, fq, max_len, bounds.depth);
}

}  // namespace proet
