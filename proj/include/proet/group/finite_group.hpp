#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "proet/error.hpp"

namespace proet {

using Element = std::uint32_t;

// Finite group given by its multiplication table. Axioms are verified on
// construction; orders stay small (desk scale), so checks are exhaustive.
class FiniteGroup {
 public:
  // table[a][b] = index of a*b. Labels default to "e", "1", "2", ...
  explicit FiniteGroup(std::vector<std::vector<Element>> table, std::vector<std::string> labels = {});

  static FiniteGroup trivial();
  static FiniteGroup cyclic(std::size_t n);
  // Dihedral group of order 2n: rotations r0..r{n-1}, reflections s0..s{n-1}.
  static FiniteGroup dihedral(std::size_t n);
  // Symmetric group on n <= 5 letters; labels are one-line images ("102").
  static FiniteGroup symmetric(std::size_t n);
  static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
  // Named groups: "1", "Z<n>", "D<n>" (order 2n), "S<n>".
  static FiniteGroup named(const std::string& name);

  std::size_t order() const { return table_.size(); }
  Element identity() const { return identity_; }
  Element mul(Element a, Element b) const { return table_[a][b]; }
  Element inv(Element a) const { return inverse_[a]; }
  Element pow(Element a, long e) const;
  std::size_t element_order(Element a) const;
  bool is_abelian() const;
  bool is_trivial() const { return order() == 1; }

  const std::vector<std::vector<Element>>& table() const { return table_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Element a) const { return labels_.at(a); }
  Element index_of(const std::string& label) const;  // throws BadElementIndex

  // Closure of a set of elements under multiplication, sorted.
  std::vector<Element> generated_subgroup(const std::vector<Element>& gens) const;
  // Deterministic generating set: greedily add the smallest element not yet
  // generated. Empty for the trivial group.
  std::vector<Element> generators() const;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) { return a.table_ == b.table_; }

 private:
  std::vector<std::vector<Element>> table_;
  std::vector<std::string> labels_;
  std::vector<Element> inverse_;
  Element identity_ = 0;
};

// Subgroup of a parent group as a group in its own right, with the
// inclusion map recorded.
struct Subgroup {
  FiniteGroup group;
  std::vector<Element> embedding;  // subgroup index -> parent element
  Element to_sub(Element parent_element) const;  // throws BadElementIndex
};

Subgroup make_subgroup(const FiniteGroup& parent, const std::vector<Element>& elements);

// Exhaustive homomorphism test of a map given by a table of images.
bool is_homomorphism(const FiniteGroup& from, const FiniteGroup& to, const std::vector<Element>& map);

// Extend images of `gens` to a map on all of `from` by walking the Cayley
// graph; throws NotAHomomorphism when the extension is inconsistent.
std::vector<Element> extend_homomorphism(const FiniteGroup& from, const std::vector<Element>& gens,
                                         const FiniteGroup& to, const std::vector<Element>& images);

}  // namespace proet
