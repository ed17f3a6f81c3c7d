#include "proet/covering/covering.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace proet {

CoverGeometry::CoverGeometry(Pi1Presentation pres, SignaturePtr sig) : pres_(std::move(pres)), sig_(std::move(sig)) {
  if (sig_->r() != pres_.r || sig_->num_finite() != pres_.num_components)
    throw SignatureMismatch("signature does not fit the presentation");
  for (std::size_t i = 0; i < pres_.num_nodes(); ++i) {
    const FPWord z = pres_.node_loop[i] ? fp_z(sig_, *pres_.node_loop[i]) : fp_identity(sig_);
    node_words_.push_back(z);
    node_inverses_.push_back(fp_inverse(z));
  }
}

bool component_less(const ComponentIndex& a, const ComponentIndex& b) {
  if (a.factor != b.factor) return a.factor < b.factor;
  return shortlex_less(a.rep, b.rep);
}

ComponentIndex canonical_component(std::size_t j, const FPWord& s) {
  const auto& sig = s.signature();
  if (j >= sig->num_finite()) throw BadFactorIndex("component factor " + std::to_string(j) + " out of range");
  const auto& letters = s.letters();
  if (!letters.empty() && letters.front().factor == sig->global_index_of_finite(j))
    return ComponentIndex{j, fp_normalize(sig, std::vector<Letter>(letters.begin() + 1, letters.end()))};
  return ComponentIndex{j, s};
}

ComponentIndex component_action(const FPWord& w, const ComponentIndex& c) {
  return canonical_component(c.factor, c.rep * w);
}

std::string format_component(const ComponentIndex& c) {
  return "Y" + std::to_string(c.factor + 1) + "[" + format_word(c.rep) + "]";
}

std::pair<ComponentIndex, ComponentIndex> node_components(const CoverGeometry& geom, const NodePoint& x) {
  const auto& pres = geom.presentation();
  return {canonical_component(pres.node_a[x.node], x.s),
          canonical_component(pres.node_b[x.node], geom.node_word(x.node) * x.s)};
}

std::vector<NodePoint> nodes_on(const CoverGeometry& geom, const ComponentIndex& c) {
  const auto& pres = geom.presentation();
  const auto& sig = geom.signature();
  const auto& group = sig->finite(c.factor);
  std::vector<NodePoint> out;
  for (std::size_t i = 0; i < pres.num_nodes(); ++i) {
    if (pres.node_a[i] == c.factor)
      for (Element g = 0; g < group.order(); ++g) out.push_back({i, fp_g(sig, c.factor, g) * c.rep});
    if (pres.node_b[i] == c.factor)
      for (Element g = 0; g < group.order(); ++g)
        out.push_back({i, geom.node_word_inverse(i) * fp_g(sig, c.factor, g) * c.rep});
  }
  return out;
}

NodePoint node_action(const FPWord& w, const NodePoint& x) { return NodePoint{x.node, x.s * w}; }

std::vector<ComponentIndex> enumerate_components(const SignaturePtr& sig, std::size_t max_len) {
  std::unordered_set<ComponentIndex, ComponentHash> seen;
  std::vector<ComponentIndex> out;
  for (const auto& s : enumerate_words(sig, max_len))
    for (std::size_t j = 0; j < sig->num_finite(); ++j) {
      auto c = canonical_component(j, s);
      if (seen.insert(c).second) out.push_back(std::move(c));
    }
  std::sort(out.begin(), out.end(), component_less);
  return out;
}

namespace {

std::optional<std::pair<std::size_t, Element>> full_group_witness(const SignaturePtr& sig) {
  for (std::size_t j = 0; j < sig->num_finite(); ++j) {
    const auto& g = sig->finite(j);
    for (Element x = 0; x < g.order(); ++x) {
      if (x == g.identity()) continue;
      const ComponentIndex base{j, fp_identity(sig)};
      if (component_action(fp_g(sig, j, x), base) == base) return std::make_pair(j, x);
    }
  }
  return std::nullopt;
}

std::vector<FPWord> nontrivial_kernel_words(const SignaturePtr& sig, std::size_t max_len) {
  auto words = enumerate_words(sig, max_len, WordFilter::kKernelAlpha);
  words.erase(std::remove_if(words.begin(), words.end(), [](const FPWord& w) { return w.is_identity(); }),
              words.end());
  return words;
}

}  // namespace

FreenessReport certify_free_action(const SignaturePtr& sig, std::size_t max_len) {
  FreenessReport rep;
  rep.max_len = max_len;
  const auto kernel = nontrivial_kernel_words(sig, max_len);
  const std::unordered_set<FPWord, WordHash> kernel_set(kernel.begin(), kernel.end());
  const auto comps = enumerate_components(sig, max_len);
  rep.kernel_words = kernel.size();
  rep.components = comps.size();
  rep.pairs_checked = kernel.size() * comps.size();
  for (const auto& c : comps) {
    const auto& g = sig->finite(c.factor);
    const FPWord s_inv = fp_inverse(c.rep);
    for (Element x = 0; x < g.order(); ++x) {
      if (x == g.identity()) continue;
      const FPWord conj = s_inv * fp_g(sig, c.factor, x) * c.rep;
      if (kernel_set.count(conj)) {
        rep.free = false;
        throw FreenessViolation(format_word(conj) + " fixes " + format_component(c));
      }
    }
  }
  rep.full_group_witness = full_group_witness(sig);
  return rep;
}

FreenessReport certify_free_action_pairwise(const SignaturePtr& sig, std::size_t max_len) {
  FreenessReport rep;
  rep.max_len = max_len;
  const auto kernel = nontrivial_kernel_words(sig, max_len);
  const auto comps = enumerate_components(sig, max_len);
  rep.kernel_words = kernel.size();
  rep.components = comps.size();
  for (const auto& w : kernel)
    for (const auto& c : comps) {
      ++rep.pairs_checked;
      if (component_action(w, c) == c) {
        rep.free = false;
        throw FreenessViolation(format_word(w) + " fixes " + format_component(c));
      }
    }
  rep.full_group_witness = full_group_witness(sig);
  return rep;
}

bool open_contains_node(const InvariantOpen& u, const NodePoint& x) {
  for (const auto& y : u.removed_nodes)
    if (y.node == x.node && alpha(y.s) == alpha(x.s)) return false;
  return true;
}

bool open_contains_smooth_part(const InvariantOpen& u, const ComponentIndex& c) {
  for (const auto& y : u.removed_smooth) {
    if (y.factor != c.factor) continue;
    const auto a = alpha(y.s), b = alpha(c.rep);
    bool same = true;
    for (std::size_t k = 0; k < a.coords.size(); ++k)
      if (k != c.factor && a.coords[k] != b.coords[k]) same = false;
    if (same) return false;
  }
  return true;
}

OpenSet translate(const FPWord& w, const OpenSet& v) {
  OpenSet out;
  for (const auto& c : v.components) out.components.push_back(component_action(w, c));
  for (const auto& x : v.kept_nodes) out.kept_nodes.push_back(node_action(w, x));
  return out;
}

OpenSet intersect(const OpenSet& a, const OpenSet& b) {
  OpenSet out;
  for (const auto& c : a.components)
    if (std::find(b.components.begin(), b.components.end(), c) != b.components.end()) out.components.push_back(c);
  for (const auto& x : a.kept_nodes)
    if (std::find(b.kept_nodes.begin(), b.kept_nodes.end(), x) != b.kept_nodes.end()) out.kept_nodes.push_back(x);
  return out;
}

bool open_within(const InvariantOpen& u, const OpenSet& v) {
  for (const auto& c : v.components)
    if (!open_contains_smooth_part(u, c)) return false;
  for (const auto& x : v.kept_nodes)
    if (!open_contains_node(u, x)) return false;
  return true;
}

SeparatingOpenResult find_separating_open(const CoverGeometry& geom, const InvariantOpen& u, std::size_t max_len) {
  if (u.removed_smooth.empty() && u.removed_nodes.empty()) throw NoComplement("the open set is everything");
  SeparatingOpenResult res;
  res.max_len = max_len;
  std::optional<std::pair<ComponentIndex, ComponentIndex>> ab;
  if (!u.removed_smooth.empty()) {
    const auto& x = u.removed_smooth.front();
    const auto c = canonical_component(x.factor, x.s);
    res.proof_case = 1;
    res.v.components = {c};
    res.not_contained = !open_contains_smooth_part(u, c);
  } else {
    const auto& x = u.removed_nodes.front();
    ab = node_components(geom, x);
    res.proof_case = 2;
    res.v.components = {ab->first, ab->second};
    res.v.kept_nodes = {x};
    res.not_contained = !open_contains_node(u, x);
  }
  res.separated = true;
  for (const auto& w : nontrivial_kernel_words(geom.signature(), max_len)) {
    ++res.words_checked;
    const OpenSet meet = intersect(res.v, translate(w, res.v));
    if (!open_within(u, meet)) res.separated = false;
    if (ab) {
      const bool b_to_a = component_action(w, ab->second) == ab->first;
      const bool a_to_b = component_action(w, ab->first) == ab->second;
      if (b_to_a && a_to_b) ++res.torsion_cases;
      else if (b_to_a) ++res.subcases[1];
      else if (a_to_b) ++res.subcases[2];
      else ++res.subcases[0];
    }
  }
  return res;
}

FundamentalDomain fundamental_domain(const CoverGeometry& geom, const FPWord& w) {
  if (w.is_identity()) throw TrivialW("the chosen kernel word must be nontrivial");
  if (!in_kernel_alpha(w)) throw NotInKernel(format_word(w) + " is not in ker(alpha)");
  const auto& sig = geom.signature();
  FundamentalDomain dom{w, {}, 0, {}};
  std::unordered_set<ComponentIndex, ComponentHash> core;
  for (std::size_t j = 0; j < sig->num_finite(); ++j)
    for (const auto& g : all_direct_tuples(*sig)) {
      const FPWord base = w * sigma(sig, g);
      core.insert(canonical_component(j, base));
      ++dom.raw_count;
      for (std::size_t i = 0; i < sig->r(); ++i) {
        core.insert(canonical_component(j, fp_z(sig, i) * base));
        ++dom.raw_count;
      }
    }
  dom.core.assign(core.begin(), core.end());
  std::sort(dom.core.begin(), dom.core.end(), component_less);
  for (const auto& c : dom.core)
    for (const auto& x : nodes_on(geom, c)) {
      const auto [a, b] = node_components(geom, x);
      const ComponentIndex& other = a == c ? b : a;
      if (!core.count(other)) dom.boundary.push_back({x, c, other});
    }
  return dom;
}

CoverWitness cover_witness(const FundamentalDomain& dom, const ComponentIndex& target) {
  const auto& sig = dom.w.signature();
  const FPWord src = dom.w * sigma(sig, alpha(target.rep));
  CoverWitness out{fp_inverse(src) * target.rep, canonical_component(target.factor, src), false, false};
  out.in_kernel = in_kernel_alpha(out.t);
  out.verified = component_action(out.t, out.source) == target;
  return out;
}

FiniteCover build_finite_cover(const ContinuousRep& rep) {
  const auto& sig = rep.signature();
  FiniteCover cov;
  cov.fiber = all_direct_tuples(*sig);
  cov.generators = rep.generator_words();
  auto act = [&](const DirectTuple& g) {
    std::vector<std::size_t> perm;
    for (const auto& x : cov.fiber) perm.push_back(direct_index(*sig, direct_mul(*sig, g, x)));
    return perm;
  };
  for (const auto& gen : cov.generators) cov.actions.push_back(act(alpha(gen)));

  // Relations: each factor acts through a homomorphism.
  cov.relations_ok = true;
  for (std::size_t j = 0; j < sig->num_finite(); ++j) {
    const auto& g = sig->finite(j);
    std::vector<std::vector<std::size_t>> perms;
    for (Element x = 0; x < g.order(); ++x) perms.push_back(act(alpha(fp_g(sig, j, x))));
    for (Element x = 0; x < g.order(); ++x)
      for (Element y = 0; y < g.order(); ++y)
        for (std::size_t f = 0; f < cov.fiber.size(); ++f)
          if (perms[x][perms[y][f]] != perms[g.mul(x, y)][f]) cov.relations_ok = false;
  }

  const std::size_t n = cov.fiber.size();
  const std::size_t base = direct_index(*sig, direct_identity(*sig));
  std::vector<bool> seen(n, false);
  std::deque<std::size_t> queue{base};
  seen[base] = true;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const auto x = queue.front();
    queue.pop_front();
    for (const auto& perm : cov.actions)
      if (!seen[perm[x]]) {
        seen[perm[x]] = true;
        ++reached;
        queue.push_back(perm[x]);
      }
  }
  cov.connected = reached == n;

  // Deck transformations: a cover automorphism is fixed by the image of the
  // base point; try every image and propagate.
  if (cov.connected) {
    for (std::size_t y = 0; y < n; ++y) {
      std::vector<std::optional<std::size_t>> phi(n);
      phi[base] = y;
      std::deque<std::size_t> q{base};
      bool ok = true;
      while (!q.empty() && ok) {
        const auto x = q.front();
        q.pop_front();
        for (const auto& perm : cov.actions) {
          const auto img = perm[*phi[x]];
          if (!phi[perm[x]]) {
            phi[perm[x]] = img;
            q.push_back(perm[x]);
          } else if (*phi[perm[x]] != img) {
            ok = false;
          }
        }
      }
      if (!ok) continue;
      std::vector<bool> hit(n, false);
      for (const auto& v : phi) hit[*v] = true;
      if (std::all_of(hit.begin(), hit.end(), [](bool b) { return b; })) ++cov.deck_group_order;
    }
  }
  return cov;
}

}  // namespace proet
