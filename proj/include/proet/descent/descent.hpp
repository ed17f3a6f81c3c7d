#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "proet/covering/covering.hpp"
#include "proet/error.hpp"
#include "proet/field/lattice.hpp"
#include "proet/rep/representation.hpp"

namespace proet {

// Which deck group the data lives over: all of Γ acting on Y, or the
// kernel of α (the automorphisms of Y over Z).
enum class DeckScope { kFull, kKernel };

// How h is read off the representation. Deck transformations compose in the
// opposite group, so the datum is h_w = ρ(w^{-1}); kDirect (h_w = ρ(w)) is
// kept only so the choice can be tested.
enum class Twist { kInverse, kDirect };

std::string scope_name(DeckScope s);

// Constant-coefficient meromorphic descent datum {O^n, h_w}. The cocycle law
// reads h_{w'} h_w = h_{w w'} with w w' the product in Γ.
class MeromorphicCocycle {
 public:
  explicit MeromorphicCocycle(ContinuousRep rep, DeckScope scope = DeckScope::kFull, Twist twist = Twist::kInverse);

  const ContinuousRep& rep() const { return rep_; }
  DeckScope scope() const { return scope_; }
  Twist twist() const { return twist_; }
  std::size_t rank() const { return rep_.rank(); }
  std::uint32_t prime() const { return rep_.prime(); }
  const SignaturePtr& signature() const { return rep_.signature(); }

  MatrixK h(const FPWord& w) const;
  bool in_scope(const FPWord& w) const;
  // Generators of the deck group in scope: those of Γ, or Schreier
  // generators of ker(α).
  std::vector<FPWord> scope_generators() const;

  MeromorphicCocycle restricted_to_kernel() const;
  // Replace h on one word (its normal form) and nowhere else.
  MeromorphicCocycle with_override(const FPWord& w, MatrixK m) const;

 private:
  ContinuousRep rep_;
  DeckScope scope_;
  Twist twist_;
  std::vector<std::pair<FPWord, MatrixK>> overrides_;
};

MeromorphicCocycle datum_from_rep(const ContinuousRep& rep);

struct CocycleCertificate {
  std::size_t max_len = 0;
  std::size_t words = 0;
  std::size_t pairs_checked = 0;
  bool identity_ok = false;
  bool ok = false;
  std::optional<std::pair<FPWord, FPWord>> witness;  // (w, w') with h_{w'} h_w != h_{w w'}
};

// Checks h_e = 1 and the cocycle law on all pairs of in-scope words with
// word_length(w) + word_length(w') <= max_len.
CocycleCertificate check_cocycle(const MeromorphicCocycle& c, std::size_t max_len);
// Same, but throws CocycleViolation naming the witness pair.
CocycleCertificate require_cocycle(const MeromorphicCocycle& c, std::size_t max_len);

// Basis of {f : h2_w f = f h1_w for every scope generator w}, as
// rank2 x rank1 matrices. Throws ScopeMismatch or FieldMismatch.
std::vector<MatrixK> hom_cocycle(const MeromorphicCocycle& c1, const MeromorphicCocycle& c2);

struct LatticeEntry {
  ComponentIndex component;
  FPWord transport;  // u ∈ ker(α) with (orbit representative)·u = component
  LatticeK lattice;
};

// Integral model of a kernel datum: the standard lattice on one
// representative per ker(α)-orbit of components, transported along h.
struct LatticeAssignment {
  std::size_t max_len = 0;
  std::vector<ComponentIndex> orbit_representatives;
  std::vector<LatticeEntry> entries;  // every component of representative length <= max_len
  std::size_t kernel_words = 0;
  std::size_t pairs_checked = 0;
  std::size_t conflicts = 0;
  bool determinant_conservation = false;
};

// Orbit representative of a component and the kernel word carrying it
// there, given a shift v ∈ ker(α) applied to every default representative.
std::pair<ComponentIndex, FPWord> orbit_transport(const ComponentIndex& c, const FPWord& shift);

// For every kernel word w and component c of length <= max_len, checks that
// lattice(c·w) = h_w lattice(c), that the matrix of h_w in the two lattice
// bases lies in GL_n(A), and that v(det h_w) equals the exponent shift.
// Throws TransportConflict.
LatticeAssignment integralize(const MeromorphicCocycle& c, std::size_t max_len);
LatticeAssignment integralize(const MeromorphicCocycle& c, std::size_t max_len, const FPWord& shift);
LatticeK lattice_of(const MeromorphicCocycle& c, const ComponentIndex& comp, const FPWord& shift);

struct EquivarianceCertificate {
  FPWord g;
  MatrixK witness;  // h_g
  std::size_t max_len = 0;
  std::size_t words_checked = 0;
  std::size_t pairs_checked = 0;
  bool ok = false;
};

// h'_w = h_{g^{-1} w g} is again a kernel cocycle and h'_w h_g = h_g h_w on
// all kernel words of length <= max_len. Throws EquivarianceViolation.
EquivarianceCertificate conj_equivariance_check(const MeromorphicCocycle& c, const FPWord& g, std::size_t max_len);

// Cocycle over a finite group, ḡ ↦ h̄_ḡ, with h̄_{ḡ'} h̄_ḡ = h̄_{ḡ ḡ'}.
struct FiniteCocycle {
  FiniteGroup group;
  std::vector<MatrixK> values;
  std::size_t max_len = 0;
  std::size_t kernel_words_checked = 0;
  std::size_t preimages_checked = 0;
  std::vector<std::size_t> preimage_counts;  // per ḡ, among enumerated words
};

bool is_finite_cocycle(const FiniteCocycle& f);
// ḡ ↦ ρ̄(ḡ^{-1}), read straight off the finite representation.
FiniteCocycle finite_cocycle_of(const FiniteQuotientRep& fq);

// Descends a datum that is trivial on ker(q) to Ḡ. Every enumerated word of
// length <= max_len is checked: h_w = 1 on ker(q), and all preimages of each
// ḡ agree (preimage_counts records how many were compared). Throws
// KernelNotTrivial; throws Error if some ḡ has no preimage that short.
FiniteCocycle descend_inflation(const MeromorphicCocycle& c, const FiniteQuotientRep& fq, std::size_t max_len);

}  // namespace proet
