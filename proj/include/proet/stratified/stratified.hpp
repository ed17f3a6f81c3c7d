#pragma once

#include <string>
#include <vector>

#include "proet/descent/descent.hpp"

namespace proet {

// Relative Frobenius used to compare consecutive layers. Over S it fixes the
// coefficients; over the generic fibre it raises every entry to the p-th power.
enum class FrobeniusMode { kSRelative, kKRelative };

std::string mode_name(FrobeniusMode m);

MatrixK frobenius_transport(const MatrixK& m, FrobeniusMode mode);
// frob^k applied to every matrix of the representation; again a representation.
ContinuousRep frobenius_twist(const ContinuousRep& rep, std::size_t k);

// F-divided datum {E_i, h^i_w, σ_i}, i = 0..depth, with E_i = O^n and σ_i the
// identity. Layer i+1 transports to layer i: S-relative layers all equal the
// generating cocycle, K-relative layer i is frob^{depth-i} of it.
class FDividedDatum {
 public:
  FDividedDatum(MeromorphicCocycle generator, FrobeniusMode mode, std::size_t depth, CocycleCertificate certificate);

  const MeromorphicCocycle& generator() const { return generator_; }
  FrobeniusMode mode() const { return mode_; }
  std::size_t depth() const { return depth_; }
  std::size_t rank() const { return generator_.rank(); }
  const CocycleCertificate& certificate() const { return certificate_; }

  const MeromorphicCocycle& layer(std::size_t i) const { return layers_.at(i); }
  MatrixK h(std::size_t i, const FPWord& w) const { return layer(i).h(w); }

 private:
  MeromorphicCocycle generator_;
  FrobeniusMode mode_;
  std::size_t depth_;
  CocycleCertificate certificate_;
  std::vector<MeromorphicCocycle> layers_;
};

inline constexpr std::size_t kDefaultFrobeniusDepth = 5;

// The sequence generated by datum_from_rep(rep); the cocycle certificate is
// checked to word length cert_len and attached.
FDividedDatum fdiv_from_rep(const ContinuousRep& rep, FrobeniusMode mode,
                            std::size_t depth = kDefaultFrobeniusDepth, std::size_t cert_len = 4);

struct FDivHom {
  FrobeniusMode mode;
  std::size_t depth = 0;
  // Basis of the values α_0 of the morphism sequences.
  std::vector<MatrixK> basis;
  std::string field;  // "K" or "F_p": what `basis` spans over
  // K-relative: dimension with the chain truncated at depth d = 1..depth.
  std::vector<std::size_t> dimension_by_depth;
  std::size_t stabilization_depth = 0;
};

// Sequences (α_i) of intertwiners of the layers with transport(α_{i+1}) = α_i.
// S-relative: constant sequences, i.e. hom_cocycle of the generators.
// K-relative: a sequence constant from the truncation depth on is fixed by
// Frobenius, so α has entries in F_p; solved as an F_p-linear system by
// comparing t-coefficients. Throws ModeMismatch, ScopeMismatch.
FDivHom hom_fdiv(const FDividedDatum& d1, const FDividedDatum& d2);

struct TensorCertificate {
  std::size_t layers = 0;
  std::size_t generators_checked = 0;
  bool ok = false;
};

struct TensorResult {
  FDividedDatum datum;
  TensorCertificate certificate;
};

// Layerwise Kronecker product, realized as fdiv_from_rep(rep_tensor(ρ, τ)) and
// certified against h^ρ ⊗ h^τ on every paired generator and layer.
TensorResult tensor_fdiv(const FDividedDatum& d1, const FDividedDatum& d2);

}  // namespace proet
