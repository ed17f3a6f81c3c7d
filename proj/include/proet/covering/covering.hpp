#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "proet/curve/nodal_curve.hpp"
#include "proet/error.hpp"
#include "proet/group/free_product.hpp"
#include "proet/rep/representation.hpp"

namespace proet {

// The free product together with the curve data needed to place node lifts.
class CoverGeometry {
 public:
  CoverGeometry(Pi1Presentation pres, SignaturePtr sig);

  const Pi1Presentation& presentation() const { return pres_; }
  const SignaturePtr& signature() const { return sig_; }
  std::size_t num_nodes() const { return pres_.num_nodes(); }
  // z_i for a loop node, the identity for a tree node.
  const FPWord& node_word(std::size_t i) const { return node_words_[i]; }
  const FPWord& node_word_inverse(std::size_t i) const { return node_inverses_[i]; }

 private:
  Pi1Presentation pres_;
  SignaturePtr sig_;
  std::vector<FPWord> node_words_;
  std::vector<FPWord> node_inverses_;
};

// The irreducible component Y^j_s = s(Y^j_∅), i.e. the right coset G_j s.
struct ComponentIndex {
  std::size_t factor;  // j, 0-based among the finite factors
  FPWord rep;          // canonical: does not start with a G_j letter

  friend bool operator==(const ComponentIndex& a, const ComponentIndex& b) {
    return a.factor == b.factor && a.rep == b.rep;
  }
};

struct ComponentHash {
  std::size_t operator()(const ComponentIndex& c) const { return hash_word(c.rep) * 31 + c.factor; }
};

bool component_less(const ComponentIndex& a, const ComponentIndex& b);

ComponentIndex canonical_component(std::size_t j, const FPWord& s);
// Right action: w(Y^j_s) = Y^j_{s w}.
ComponentIndex component_action(const FPWord& w, const ComponentIndex& c);
std::string format_component(const ComponentIndex& c);

// The lift (i, s) of node i: it joins Y^{a(i)}_s and Y^{b(i)}_{z_i s}.
struct NodePoint {
  std::size_t node;
  FPWord s;
  friend bool operator==(const NodePoint& a, const NodePoint& b) { return a.node == b.node && a.s == b.s; }
};

// The lift of a smooth point labelled `label` of component j lying over the
// fiber element s; it lies on Y^j_s.
struct SmoothPoint {
  std::size_t factor;
  std::string label;
  FPWord s;
};

std::pair<ComponentIndex, ComponentIndex> node_components(const CoverGeometry& geom, const NodePoint& x);
// All node lifts on a component (finitely many).
std::vector<NodePoint> nodes_on(const CoverGeometry& geom, const ComponentIndex& c);
NodePoint node_action(const FPWord& w, const NodePoint& x);

// Distinct canonical components with a representative of length <= max_len,
// in a deterministic order.
std::vector<ComponentIndex> enumerate_components(const SignaturePtr& sig, std::size_t max_len);

struct FreenessReport {
  std::size_t max_len = 0;
  std::size_t kernel_words = 0;  // nonidentity
  std::size_t components = 0;
  std::size_t pairs_checked = 0;
  bool free = true;
  // A nontrivial g ∈ G_j with g(Y^j_∅) = Y^j_∅, for the full group.
  std::optional<std::pair<std::size_t, Element>> full_group_witness;
};

// Every nonidentity w ∈ ker(α) of length <= max_len moves every component
// with representative length <= max_len. A fixed pair (w, G_j s) means
// s w s^{-1} ∈ G_j, so each component is checked against its conjugated
// stabilizer; this covers all pairs. Throws FreenessViolation.
FreenessReport certify_free_action(const SignaturePtr& sig, std::size_t max_len);
// Same certificate by acting with every word on every component.
FreenessReport certify_free_action_pairwise(const SignaturePtr& sig, std::size_t max_len);

// An Aut(Y|Z)-invariant open, given by the orbits removed from Y.
struct InvariantOpen {
  std::vector<SmoothPoint> removed_smooth;
  std::vector<NodePoint> removed_nodes;
};

bool open_contains_node(const InvariantOpen& u, const NodePoint& x);
// True when no removed smooth orbit meets the component.
bool open_contains_smooth_part(const InvariantOpen& u, const ComponentIndex& c);

// A union of components minus every node lift except those kept.
struct OpenSet {
  std::vector<ComponentIndex> components;
  std::vector<NodePoint> kept_nodes;
};

struct SeparatingOpenResult {
  int proof_case = 0;  // 1: smooth point removed, 2: only nodes removed
  OpenSet v;
  std::size_t max_len = 0;
  std::size_t words_checked = 0;
  // Case 2 sub-cases: [disjoint, A = B w only, B = A w only].
  std::array<std::size_t, 3> subcases{0, 0, 0};
  std::size_t torsion_cases = 0;  // A = B w and B = A w together
  bool not_contained = false;     // V ⊄ U
  bool separated = false;         // V ∩ wV ⊆ U for every checked w
};

OpenSet translate(const FPWord& w, const OpenSet& v);
// V ∩ V' as (common components, common kept nodes).
OpenSet intersect(const OpenSet& a, const OpenSet& b);
bool open_within(const InvariantOpen& u, const OpenSet& v);

// Throws NoComplement when nothing is removed.
SeparatingOpenResult find_separating_open(const CoverGeometry& geom, const InvariantOpen& u, std::size_t max_len);

struct BoundaryNode {
  NodePoint point;
  ComponentIndex inside;
  ComponentIndex outside;
};

struct FundamentalDomain {
  FPWord w;
  std::vector<ComponentIndex> core;  // T_G, deduplicated
  std::size_t raw_count = 0;         // terms in the defining union
  std::vector<BoundaryNode> boundary;
};

// Throws TrivialW for w = e and NotInKernel when α(w) != e.
FundamentalDomain fundamental_domain(const CoverGeometry& geom, const FPWord& w);

struct CoverWitness {
  FPWord t;
  ComponentIndex source;  // Y^j_{w σ(α(s))}, an element of T_G
  bool in_kernel = false;
  bool verified = false;  // t(source) = target
};

CoverWitness cover_witness(const FundamentalDomain& dom, const ComponentIndex& target);

// The finite cover with fiber G_1 x ... x G_N; Γ acts through α by left
// multiplication and deck transformations act on the right.
struct FiniteCover {
  std::vector<DirectTuple> fiber;
  std::vector<FPWord> generators;
  std::vector<std::vector<std::size_t>> actions;  // actions[k][x] = index of generator k applied to x
  bool connected = false;
  bool relations_ok = false;
  std::size_t deck_group_order = 0;  // counted by lifting the base point
};

FiniteCover build_finite_cover(const ContinuousRep& rep);

}  // namespace proet
