#pragma once

#include <cstdint>
#include <vector>

#include "proet/curve/nodal_curve.hpp"
#include "proet/error.hpp"
#include "proet/field/matrix.hpp"
#include "proet/field/rational_function.hpp"
#include "proet/group/finite_group.hpp"
#include "proet/group/free_product.hpp"

namespace proet {

using MatrixK = Matrix<K>;

// A finite quotient G_j of one component's fundamental group together with
// a representation of it. `generators` are the images of a fixed list of
// topological generators; `images[g]` is the matrix of element g.
struct FactorRep {
  FiniteGroup group;
  std::vector<Element> generators;
  std::vector<MatrixK> images;
};

// Build the full image table from generator matrices by walking the Cayley
// graph; throws InvalidRepresentation if a relation of the group fails.
std::vector<MatrixK> extend_matrix_hom(const FiniteGroup& g, const std::vector<Element>& gens,
                                       const std::vector<MatrixK>& gen_images);

// Continuous representation of the fundamental group of a nodal curve,
// factoring through Z^{*r} * G_1 * ... * G_N. Stored as a left homomorphism.
class ContinuousRep {
 public:
  // Validates invertibility, that each factor's generators generate it,
  // and the homomorphism property on the full table.
  ContinuousRep(Pi1Presentation pres, std::uint32_t p, std::size_t rank, std::vector<MatrixK> z_images,
                std::vector<FactorRep> factors);

  // Rank-n trivial representation with trivial factor groups.
  static ContinuousRep trivial(const Pi1Presentation& pres, std::uint32_t p, std::size_t rank);

  const Pi1Presentation& presentation() const { return pres_; }
  std::uint32_t prime() const { return p_; }
  std::size_t rank() const { return rank_; }
  const std::vector<MatrixK>& z_images() const { return z_images_; }
  const std::vector<MatrixK>& z_inverses() const { return z_inverses_; }
  const std::vector<FactorRep>& factors() const { return factors_; }
  const SignaturePtr& signature() const { return sig_; }
  K zero() const { return K(Fp(0, p_)); }

  // Words of the chosen generating set: z_1..z_r, then each factor's
  // designated generators.
  std::vector<FPWord> generator_words() const;

 private:
  Pi1Presentation pres_;
  std::uint32_t p_;
  std::size_t rank_;
  std::vector<MatrixK> z_images_;
  std::vector<MatrixK> z_inverses_;
  std::vector<FactorRep> factors_;
  SignaturePtr sig_;
};

MatrixK eval_word(const ContinuousRep& rep, const FPWord& w);
// Evaluate an unnormalized letter sequence letter by letter.
MatrixK eval_letters(const ContinuousRep& rep, const std::vector<Letter>& letters);

// Tensor product over the common refinement: factor j becomes the subgroup
// of G_j x H_j generated by the paired generators. A shorter generator list
// is padded with identities.
ContinuousRep rep_tensor(const ContinuousRep& a, const ContinuousRep& b);

// Basis of {f : rep_b(γ) f = f rep_a(γ) for all generators γ}, as
// rank_b x rank_a matrices.
std::vector<MatrixK> intertwiners(const ContinuousRep& a, const ContinuousRep& b);

// Topological generators of two compatible representations side by side:
// z_i with z_i, then each factor's designated generators by position, the
// shorter list padded with identities.
std::vector<std::pair<FPWord, FPWord>> paired_generators(const ContinuousRep& a, const ContinuousRep& b);

// Basis of {f : b_k f = f a_k for every pair (a_k, b_k)}, as n2 x n1 matrices.
std::vector<MatrixK> intertwining_space(const std::vector<std::pair<MatrixK, MatrixK>>& pairs, std::size_t n1,
                                        std::size_t n2, const K& zero);

// Finite quotient Ḡ of the whole group with a representation of Ḡ.
class FiniteQuotientRep {
 public:
  // z_images[i]: image of z_{i+1}; factor_generators[j]: images of the
  // designated generators of component j. Throws InvalidRepresentation if
  // the data is not surjective onto Ḡ or `images` is not a homomorphism.
  FiniteQuotientRep(FiniteGroup group, std::vector<Element> z_images,
                    std::vector<std::vector<Element>> factor_generators, std::uint32_t p, std::size_t rank,
                    std::vector<MatrixK> images);

  // Representation given on a generating set of Ḡ.
  static FiniteQuotientRep from_generators(FiniteGroup group, std::vector<Element> z_images,
                                           std::vector<std::vector<Element>> factor_generators, std::uint32_t p,
                                           std::size_t rank, const std::vector<Element>& gens,
                                           const std::vector<MatrixK>& gen_images);

  const FiniteGroup& group() const { return group_; }
  const std::vector<Element>& z_images() const { return z_images_; }
  const std::vector<std::vector<Element>>& factor_generators() const { return factor_generators_; }
  // G_j as the subgroup of Ḡ generated by the factor's generator images.
  const std::vector<Subgroup>& factor_subgroups() const { return subgroups_; }
  std::uint32_t prime() const { return p_; }
  std::size_t rank() const { return rank_; }
  const std::vector<MatrixK>& images() const { return images_; }
  const MatrixK& image(Element g) const { return images_.at(g); }

 private:
  FiniteGroup group_;
  std::vector<Element> z_images_;
  std::vector<std::vector<Element>> factor_generators_;
  std::vector<Subgroup> subgroups_;
  std::uint32_t p_;
  std::size_t rank_;
  std::vector<MatrixK> images_;
};

// The quotient map q: Γ -> Ḡ on words over the inflated signature.
Element quotient_map(const FiniteQuotientRep& fq, const FPWord& w);

// ρ̄ ∘ q as a continuous representation. Throws SignatureMismatch if the
// quotient data does not fit the presentation.
ContinuousRep inflate(const FiniteQuotientRep& fq, const Pi1Presentation& pres);

FiniteQuotientRep fq_direct_sum(const FiniteQuotientRep& a, const FiniteQuotientRep& b);

}  // namespace proet
