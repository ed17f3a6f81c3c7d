#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "proet/error.hpp"
#include "proet/group/free_product.hpp"

namespace proet {

struct Branch {
  std::size_t component = 0;
  std::string label;
  friend bool operator==(const Branch&, const Branch&) = default;
};

struct Node {
  Branch a;
  Branch b;
};

struct CurveComponent {
  std::string id;
  std::vector<std::string> branches;
};

// Reduced curve with ordinary double points, given combinatorially. Node
// ids are positions in `nodes()`.
class NodalCurve {
 public:
  // Throws InvalidCurve when a branch is unknown, reused, left unused, or
  // when a node glues a branch to itself.
  NodalCurve(std::vector<CurveComponent> components, std::vector<Node> nodes);

  std::size_t num_components() const { return components_.size(); }
  std::size_t num_nodes() const { return nodes_.size(); }
  const std::vector<CurveComponent>& components() const { return components_; }
  const std::vector<Node>& nodes() const { return nodes_; }
  std::size_t component_index(const std::string& id) const;

 private:
  std::vector<CurveComponent> components_;
  std::vector<Node> nodes_;
};

struct DualGraph {
  std::size_t vertices = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // edge k = node k
};

// Throws DisconnectedCurve.
DualGraph dual_graph(const NodalCurve& curve);

// |I| - N + 1.
std::size_t betti_rank(const NodalCurve& curve);

struct NodePath {
  // Tree nodes crossed going from the base component to each side.
  std::vector<std::size_t> to_a;
  std::vector<std::size_t> to_b;
  friend bool operator==(const NodePath&, const NodePath&) = default;
};

// Presentation of the fundamental group as Z^{*r} * G_1 * ... * G_N, with the
// spanning-tree choices that fix the isomorphism.
struct Pi1Presentation {
  std::size_t r = 0;
  std::size_t num_components = 0;
  std::size_t base_component = 0;
  std::vector<std::size_t> spanning_tree;  // node ids, increasing
  std::vector<std::size_t> loop_nodes;     // node ids; loop_nodes[k] gives z_{k+1}
  // Per node: the components carrying its two branches and, for a loop
  // node, the index of its Z generator.
  std::vector<std::size_t> node_a;
  std::vector<std::size_t> node_b;
  std::vector<std::optional<std::size_t>> node_loop;
  std::vector<NodePath> path_data;
  std::vector<std::string> component_ids;

  std::size_t num_nodes() const { return node_a.size(); }
  // Signature with the given finite quotients in the component slots.
  SignaturePtr signature(std::vector<FiniteGroup> factors) const;
  // Signature with all component slots trivial.
  SignaturePtr trivial_signature() const;

  friend bool operator==(const Pi1Presentation&, const Pi1Presentation&) = default;
};

// Kruskal over increasing node ids; nodes left out of the tree index the Z
// generators in increasing order.
Pi1Presentation pi1_presentation(const NodalCurve& curve, std::size_t base_component = 0);

// Presentations used throughout the tests: one component with one self-node,
// and a cycle of n components.
NodalCurve nodal_cubic();
NodalCurve cycle_curve(std::size_t n);
// Chain of `components` rational components with `genus` extra self-nodes on
// the first one, giving arithmetic genus `genus`.
NodalCurve degenerate_curve(std::size_t genus, std::size_t components);

}  // namespace proet
