#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "proet/error.hpp"
#include "proet/group/finite_group.hpp"

namespace proet {

// The group Z^{*r} * G_1 * ... * G_N. Factors are indexed globally: indices
// 0..r-1 are the infinite cyclic factors, r..r+N-1 the finite ones. This is
// also the factor order used for every shortlex comparison.
class FPSignature {
 public:
  FPSignature(std::size_t r, std::vector<FiniteGroup> factors);

  std::size_t r() const { return r_; }
  std::size_t num_finite() const { return factors_.size(); }
  std::size_t num_factors() const { return r_ + factors_.size(); }
  bool is_z(std::size_t factor) const { return factor < r_; }
  // Finite factor j (0-based among the finite factors).
  const FiniteGroup& finite(std::size_t j) const { return factors_.at(j); }
  const std::vector<FiniteGroup>& finite_factors() const { return factors_; }
  std::size_t global_index_of_finite(std::size_t j) const { return r_ + j; }
  // |G_1 x ... x G_N|
  std::size_t direct_order() const;

  friend bool operator==(const FPSignature& a, const FPSignature& b) {
    return a.r_ == b.r_ && a.factors_ == b.factors_;
  }

 private:
  std::size_t r_;
  std::vector<FiniteGroup> factors_;
};

using SignaturePtr = std::shared_ptr<const FPSignature>;

inline SignaturePtr make_signature(std::size_t r, std::vector<FiniteGroup> factors) {
  return std::make_shared<const FPSignature>(r, std::move(factors));
}

// One syllable of a word: a nonzero power of a Z generator, or a
// non-identity element of a finite factor.
struct Letter {
  std::uint32_t factor = 0;
  std::int64_t value = 0;  // exponent (Z factor) or element index (finite factor)
  friend bool operator==(const Letter&, const Letter&) = default;
};

// Normal-form element of a free product. The empty word is the identity.
class FPWord {
 public:
  explicit FPWord(SignaturePtr sig) : sig_(std::move(sig)) {}

  const SignaturePtr& signature() const { return sig_; }
  const std::vector<Letter>& letters() const { return letters_; }
  bool is_identity() const { return letters_.empty(); }
  std::size_t syllables() const { return letters_.size(); }

  friend bool operator==(const FPWord& a, const FPWord& b) { return a.letters_ == b.letters_; }

  friend FPWord fp_normalize(const SignaturePtr& sig, const std::vector<Letter>& raw);
  friend FPWord fp_mul(const FPWord& a, const FPWord& b);

 private:
  FPWord(SignaturePtr sig, std::vector<Letter> letters) : sig_(std::move(sig)), letters_(std::move(letters)) {}

  SignaturePtr sig_;
  std::vector<Letter> letters_;
};

// Reduce a raw letter sequence to normal form: zero exponents and identity
// elements dropped, adjacent letters of the same factor combined, repeatedly.
FPWord fp_normalize(const SignaturePtr& sig, const std::vector<Letter>& raw);
FPWord fp_mul(const FPWord& a, const FPWord& b);
FPWord fp_inverse(const FPWord& w);
FPWord fp_pow(const FPWord& w, long e);
// a b a^-1 b^-1
FPWord fp_commutator(const FPWord& a, const FPWord& b);

inline FPWord operator*(const FPWord& a, const FPWord& b) { return fp_mul(a, b); }

FPWord fp_identity(const SignaturePtr& sig);
// 1_i: the generator of the i-th Z factor (0-based), raised to `exponent`.
FPWord fp_z(const SignaturePtr& sig, std::size_t i, std::int64_t exponent = 1);
// Element g of the j-th finite factor (0-based).
FPWord fp_g(const SignaturePtr& sig, std::size_t j, Element g);

// Word length over the generating set {z_i^{±1}} ∪ (G_j \ {e}): a Z
// syllable z^k counts |k|, a finite syllable counts 1.
std::size_t word_length(const FPWord& w);

// Shortlex order: by word_length, then lexicographically on the expanded
// generator sequence, with symbols ordered z_1 < z_1^-1 < ... < z_r^-1 <
// G_1 elements (by index) < ... < G_N elements.
std::strong_ordering shortlex_compare(const FPWord& a, const FPWord& b);
inline bool shortlex_less(const FPWord& a, const FPWord& b) { return shortlex_compare(a, b) < 0; }

// Element of G_1 x ... x G_N.
struct DirectTuple {
  std::vector<Element> coords;
  friend bool operator==(const DirectTuple&, const DirectTuple&) = default;
  friend auto operator<=>(const DirectTuple&, const DirectTuple&) = default;
};

DirectTuple direct_identity(const FPSignature& sig);
DirectTuple direct_mul(const FPSignature& sig, const DirectTuple& a, const DirectTuple& b);
DirectTuple direct_inverse(const FPSignature& sig, const DirectTuple& a);
bool is_direct_identity(const FPSignature& sig, const DirectTuple& a);
// All elements in mixed-radix order (last coordinate fastest).
std::vector<DirectTuple> all_direct_tuples(const FPSignature& sig);
std::size_t direct_index(const FPSignature& sig, const DirectTuple& a);

// The quotient onto the direct product: kills Z letters and multiplies the
// letters of each finite factor in order.
DirectTuple alpha(const FPWord& w);
bool in_kernel_alpha(const FPWord& w);

// The section σ(g_1, ..., g_N) = g_1 g_2 ... g_N.
FPWord sigma(const SignaturePtr& sig, const DirectTuple& g);

enum class WordFilter { kAll, kKernelAlpha };

// All normal-form words with word_length <= max_len in shortlex order.
std::vector<FPWord> enumerate_words(const SignaturePtr& sig, std::size_t max_len,
                                    WordFilter filter = WordFilter::kAll);

// Generators of Γ: z_1, ..., z_r, then the chosen generators of each G_j.
std::vector<FPWord> group_generators(const SignaturePtr& sig);

// Schreier generators of ker(α) for the transversal σ: for each coset
// representative σ(g) and group generator x, σ(g) x σ(g α(x))^{-1}, with
// identities and duplicates removed. They generate ker(α).
std::vector<FPWord> kernel_generators(const SignaturePtr& sig);

// "z1^2 * g1:a * z3^-1"; the empty word prints as "e".
std::string format_word(const FPWord& w);
FPWord parse_word(const SignaturePtr& sig, const std::string& text);

std::size_t hash_word(const FPWord& w);
struct WordHash {
  std::size_t operator()(const FPWord& w) const { return hash_word(w); }
};

}  // namespace proet
