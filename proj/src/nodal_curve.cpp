#include "proet/curve/nodal_curve.hpp"

#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace proet {

NodalCurve::NodalCurve(std::vector<CurveComponent> components, std::vector<Node> nodes)
    : components_(std::move(components)), nodes_(std::move(nodes)) {
  if (components_.empty()) throw InvalidCurve("curve has no components");
  std::set<std::string> ids;
  for (const auto& c : components_) {
    if (!ids.insert(c.id).second) throw InvalidCurve("duplicate component id \"" + c.id + "\"");
    std::set<std::string> labels(c.branches.begin(), c.branches.end());
    if (labels.size() != c.branches.size()) throw InvalidCurve("duplicate branch label on \"" + c.id + "\"");
  }
  std::set<std::pair<std::size_t, std::string>> used;
  auto use = [&](const Branch& b) {
    if (b.component >= components_.size()) throw InvalidCurve("node refers to a missing component");
    const auto& br = components_[b.component].branches;
    if (std::find(br.begin(), br.end(), b.label) == br.end())
      throw InvalidCurve("unknown branch \"" + b.label + "\" on \"" + components_[b.component].id + "\"");
    if (!used.insert({b.component, b.label}).second)
      throw InvalidCurve("branch \"" + b.label + "\" on \"" + components_[b.component].id + "\" used twice");
  };
  for (const auto& n : nodes_) {
    if (n.a == n.b) throw InvalidCurve("a node must glue two distinct branches");
    use(n.a);
    use(n.b);
  }
  std::size_t total = 0;
  for (const auto& c : components_) total += c.branches.size();
  if (used.size() != total) throw InvalidCurve("every branch point must lie on exactly one node");
}

std::size_t NodalCurve::component_index(const std::string& id) const {
  for (std::size_t k = 0; k < components_.size(); ++k)
    if (components_[k].id == id) return k;
  throw InvalidCurve("unknown component \"" + id + "\"");
}

DualGraph dual_graph(const NodalCurve& curve) {
  DualGraph g;
  g.vertices = curve.num_components();
  for (const auto& n : curve.nodes()) g.edges.emplace_back(n.a.component, n.b.component);
  std::vector<std::vector<std::size_t>> adj(g.vertices);
  for (const auto& [u, v] : g.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<bool> seen(g.vertices, false);
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!queue.empty()) {
    const auto u = queue.front();
    queue.pop_front();
    for (auto v : adj[u])
      if (!seen[v]) {
        seen[v] = true;
        ++count;
        queue.push_back(v);
      }
  }
  if (count != g.vertices) throw DisconnectedCurve("dual graph is not connected");
  return g;
}

std::size_t betti_rank(const NodalCurve& curve) {
  dual_graph(curve);
  return curve.num_nodes() + 1 - curve.num_components();
}

SignaturePtr Pi1Presentation::signature(std::vector<FiniteGroup> factors) const {
  if (factors.size() != num_components)
    throw SignatureMismatch("expected " + std::to_string(num_components) + " factor groups, got " +
                            std::to_string(factors.size()));
  return make_signature(r, std::move(factors));
}

SignaturePtr Pi1Presentation::trivial_signature() const {
  return signature(std::vector<FiniteGroup>(num_components, FiniteGroup::trivial()));
}

Pi1Presentation pi1_presentation(const NodalCurve& curve, std::size_t base_component) {
  const DualGraph g = dual_graph(curve);
  if (base_component >= g.vertices) throw InvalidCurve("base component out of range");
  Pi1Presentation pres;
  pres.num_components = g.vertices;
  pres.base_component = base_component;
  for (const auto& c : curve.components()) pres.component_ids.push_back(c.id);

  std::vector<std::size_t> parent(g.vertices);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  pres.node_loop.assign(g.edges.size(), std::nullopt);
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const auto [u, v] = g.edges[i];
    pres.node_a.push_back(u);
    pres.node_b.push_back(v);
    const auto ru = find(u), rv = find(v);
    if (ru != rv) {
      parent[ru] = rv;
      pres.spanning_tree.push_back(i);
    } else {
      pres.node_loop[i] = pres.loop_nodes.size();
      pres.loop_nodes.push_back(i);
    }
  }
  pres.r = pres.loop_nodes.size();

  // Tree paths from the base component.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> tree_adj(g.vertices);
  for (auto i : pres.spanning_tree) {
    tree_adj[g.edges[i].first].push_back({g.edges[i].second, i});
    tree_adj[g.edges[i].second].push_back({g.edges[i].first, i});
  }
  std::vector<std::vector<std::size_t>> path(g.vertices);
  std::vector<bool> seen(g.vertices, false);
  std::deque<std::size_t> queue{base_component};
  seen[base_component] = true;
  while (!queue.empty()) {
    const auto u = queue.front();
    queue.pop_front();
    for (const auto& [v, edge] : tree_adj[u])
      if (!seen[v]) {
        seen[v] = true;
        path[v] = path[u];
        path[v].push_back(edge);
        queue.push_back(v);
      }
  }
  for (std::size_t i = 0; i < g.edges.size(); ++i)
    pres.path_data.push_back(NodePath{path[g.edges[i].first], path[g.edges[i].second]});
  return pres;
}

NodalCurve nodal_cubic() { return NodalCurve({{"C1", {"p", "q"}}}, {{{0, "p"}, {0, "q"}}}); }

NodalCurve cycle_curve(std::size_t n) {
  std::vector<CurveComponent> comps;
  std::vector<Node> nodes;
  for (std::size_t k = 0; k < n; ++k) comps.push_back({"C" + std::to_string(k + 1), {"in", "out"}});
  for (std::size_t k = 0; k < n; ++k) nodes.push_back({{k, "out"}, {(k + 1) % n, "in"}});
  return NodalCurve(std::move(comps), std::move(nodes));
}

NodalCurve degenerate_curve(std::size_t genus, std::size_t components) {
  if (components == 0) throw InvalidCurve("need at least one component");
  std::vector<CurveComponent> comps;
  std::vector<Node> nodes;
  for (std::size_t k = 0; k < components; ++k) {
    CurveComponent c{"C" + std::to_string(k + 1), {}};
    if (k > 0) c.branches.push_back("left");
    if (k + 1 < components) c.branches.push_back("right");
    comps.push_back(c);
  }
  for (std::size_t k = 0; k + 1 < components; ++k) nodes.push_back({{k, "right"}, {k + 1, "left"}});
  for (std::size_t h = 0; h < genus; ++h) {
    const std::string p = "p" + std::to_string(h), q = "q" + std::to_string(h);
    comps[0].branches.push_back(p);
    comps[0].branches.push_back(q);
    nodes.push_back({{0, p}, {0, q}});
  }
  return NodalCurve(std::move(comps), std::move(nodes));
}

}  // namespace proet
