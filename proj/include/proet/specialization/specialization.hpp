#pragma once

#include <optional>
#include <string>
#include <vector>

#include "proet/covering/covering.hpp"
#include "proet/descent/descent.hpp"
#include "proet/stratified/stratified.hpp"

namespace proet {

// Truncation bounds used by the pipelines; every certificate records its own.
struct PipelineBounds {
  std::size_t freeness_len = 4;
  std::size_t cocycle_len = 4;
  std::size_t lattice_len = 3;
  std::size_t depth = kDefaultFrobeniusDepth;
  FrobeniusMode mode = FrobeniusMode::kSRelative;
};

// Constant F-divided datum whose every layer is the same finite cocycle.
struct FiniteFDivided {
  FiniteCocycle cocycle;
  std::size_t depth = 0;
  const FiniteCocycle& layer(std::size_t) const { return cocycle; }
  std::size_t rank() const { return cocycle.values.empty() ? 0 : cocycle.values.front().rows(); }
};

struct SpecializationResult {
  std::size_t rank = 0;
  // sp side
  std::optional<FDividedDatum> fdiv;
  std::optional<FiniteCover> cover;
  std::optional<FreenessReport> freeness;
  std::optional<FundamentalDomain> domain;  // absent when ker(α) is trivial
  std::optional<LatticeAssignment> lattices;
  // F side
  std::optional<FiniteFDivided> finite;
};

// Default kernel word for the fundamental domain: the first Schreier
// generator of ker(α), or nothing when the kernel is trivial.
std::optional<FPWord> default_kernel_word(const SignaturePtr& sig);

// build_finite_cover, certify_free_action, fundamental_domain,
// datum_from_rep, fdiv_from_rep and integralize on one representation.
SpecializationResult sp_pipeline(const ContinuousRep& rep, const PipelineBounds& bounds = {});

// ḡ ↦ ρ̄(ḡ^{-1}) over Ḡ as a constant F-divided datum.
SpecializationResult F_pipeline(const FiniteQuotientRep& fq, std::size_t depth = kDefaultFrobeniusDepth);

// sp(ρ) ⊗ sp(τ) against sp(ρ ⊗ τ) on generators and layers.
TensorCertificate sp_tensor_check(const ContinuousRep& a, const ContinuousRep& b, const PipelineBounds& bounds = {});

struct SquareCertificate {
  std::size_t max_len = 0;
  std::size_t words_checked = 0;
  std::size_t kernel_words = 0;  // in ker(q)
  std::size_t layers_checked = 0;
  FiniteCocycle descended;       // sp side after descend_inflation
  FiniteCocycle direct;          // F side
  MatrixK witness;               // natural transformation, the identity here
  bool ok = false;
};

// The comparison behind the square for an arbitrary sp-side datum over the
// inflated signature. Throws SquareViolation.
SquareCertificate compare_square(const FDividedDatum& datum, const FiniteQuotientRep& fq, std::size_t max_len,
                                 std::size_t depth = kDefaultFrobeniusDepth);

// sp(inflate(fq)) and F(fq) agree: on every word w of length <= max_len and
// every layer, h^sp_w equals the F-side value at q(w) (the identity on
// ker(q)), and descend_inflation returns the F-side cocycle. Throws
// SquareViolation naming the first mismatching word.
SquareCertificate commuting_square_check(const FiniteQuotientRep& fq, const Pi1Presentation& pres,
                                         std::size_t max_len = 6, const PipelineBounds& bounds = {});

}  // namespace proet
