#include "proet/group/finite_group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

namespace proet {

FiniteGroup::FiniteGroup(std::vector<std::vector<Element>> table, std::vector<std::string> labels)
    : table_(std::move(table)), labels_(std::move(labels)) {
  const std::size_t m = table_.size();
  if (m == 0) throw GroupAxiomViolation("empty table");
  for (const auto& row : table_) {
    if (row.size() != m) throw GroupAxiomViolation("table is not square");
    for (Element x : row)
      if (x >= m) throw GroupAxiomViolation("table entry out of range");
  }
  bool found = false;
  for (Element e = 0; e < m && !found; ++e) {
    bool ok = true;
    for (Element a = 0; a < m && ok; ++a) ok = table_[e][a] == a && table_[a][e] == a;
    if (ok) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) throw GroupAxiomViolation("no identity element");
  inverse_.assign(m, m);
  for (Element a = 0; a < m; ++a)
    for (Element b = 0; b < m; ++b)
      if (table_[a][b] == identity_ && table_[b][a] == identity_) inverse_[a] = b;
  for (Element a = 0; a < m; ++a)
    if (inverse_[a] == m) throw GroupAxiomViolation("element without inverse");
  for (Element a = 0; a < m; ++a)
    for (Element b = 0; b < m; ++b)
      for (Element c = 0; c < m; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) throw GroupAxiomViolation("not associative");
  if (labels_.empty()) {
    for (Element a = 0; a < m; ++a) labels_.push_back(a == identity_ ? "e" : std::to_string(a));
  }
  if (labels_.size() != m) throw GroupAxiomViolation("label count differs from order");
  std::vector<std::string> sorted = labels_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw GroupAxiomViolation("duplicate labels");
}

FiniteGroup FiniteGroup::trivial() { return FiniteGroup({{0}}, {"e"}); }

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  if (n == 0) throw GroupAxiomViolation("cyclic group of order 0");
  std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < n; ++a) {
    labels.push_back(std::to_string(a));
    for (std::size_t b = 0; b < n; ++b) t[a][b] = static_cast<Element>((a + b) % n);
  }
  return FiniteGroup(std::move(t), std::move(labels));
}

FiniteGroup FiniteGroup::dihedral(std::size_t n) {
  if (n == 0) throw GroupAxiomViolation("dihedral group of order 0");
  // Element k < n is r^k; element n + k is s r^k, with r s = s r^{-1}.
  const std::size_t m = 2 * n;
  std::vector<std::vector<Element>> t(m, std::vector<Element>(m));
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < n; ++k) labels.push_back("r" + std::to_string(k));
  for (std::size_t k = 0; k < n; ++k) labels.push_back("s" + std::to_string(k));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      const bool sa = a >= n, sb = b >= n;
      const std::size_t ka = a % n, kb = b % n;
      // (s^sa r^ka)(s^sb r^kb) = s^(sa+sb) r^(±ka + kb)
      const std::size_t k = sb ? (n - ka + kb) % n : (ka + kb) % n;
      t[a][b] = static_cast<Element>(((sa != sb) ? n : 0) + k);
    }
  return FiniteGroup(std::move(t), std::move(labels));
}

FiniteGroup FiniteGroup::symmetric(std::size_t n) {
  if (n == 0 || n > 5) throw GroupAxiomViolation("symmetric group size must be 1..5");
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<std::size_t>, Element> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<Element>(i);
  std::vector<std::vector<Element>> t(perms.size(), std::vector<Element>(perms.size()));
  // (a*b)(x) = a(b(x)): apply b first.
  for (std::size_t a = 0; a < perms.size(); ++a)
    for (std::size_t b = 0; b < perms.size(); ++b) {
      std::vector<std::size_t> c(n);
      for (std::size_t x = 0; x < n; ++x) c[x] = perms[a][perms[b][x]];
      t[a][b] = index.at(c);
    }
  std::vector<std::string> labels;
  for (const auto& q : perms) {
    std::string s;
    for (auto x : q) s += static_cast<char>('0' + x);
    labels.push_back(s);
  }
  return FiniteGroup(std::move(t), std::move(labels));
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const std::size_t m = a.order() * b.order();
  std::vector<std::vector<Element>> t(m, std::vector<Element>(m));
  std::vector<std::string> labels;
  for (Element x = 0; x < m; ++x) {
    labels.push_back("(" + a.label(x / b.order()) + "," + b.label(x % b.order()) + ")");
    for (Element y = 0; y < m; ++y) {
      const Element u = a.mul(x / b.order(), y / b.order());
      const Element v = b.mul(x % b.order(), y % b.order());
      t[x][y] = static_cast<Element>(u * b.order() + v);
    }
  }
  return FiniteGroup(std::move(t), std::move(labels));
}

FiniteGroup FiniteGroup::named(const std::string& name) {
  if (name == "1" || name == "trivial") return trivial();
  if (name.size() >= 2) {
    const std::string tail = name.substr(1);
    if (std::all_of(tail.begin(), tail.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      const std::size_t n = std::stoul(tail);
      if (name[0] == 'Z') return cyclic(n);
      if (name[0] == 'D') return dihedral(n);
      if (name[0] == 'S') return symmetric(n);
    }
  }
  throw GroupAxiomViolation("unknown named group \"" + name + "\"");
}

Element FiniteGroup::pow(Element a, long e) const {
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  Element r = identity_;
  for (long k = 0; k < e; ++k) r = mul(r, a);
  return r;
}

std::size_t FiniteGroup::element_order(Element a) const {
  std::size_t k = 1;
  for (Element x = a; x != identity_; x = mul(x, a)) ++k;
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (Element a = 0; a < order(); ++a)
    for (Element b = 0; b < order(); ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

Element FiniteGroup::index_of(const std::string& label) const {
  for (Element a = 0; a < order(); ++a)
    if (labels_[a] == label) return a;
  throw BadElementIndex("no element labelled \"" + label + "\"");
}

std::vector<Element> FiniteGroup::generated_subgroup(const std::vector<Element>& gens) const {
  std::vector<bool> in(order(), false);
  std::deque<Element> queue{identity_};
  in[identity_] = true;
  while (!queue.empty()) {
    const Element x = queue.front();
    queue.pop_front();
    for (Element g : gens) {
      if (g >= order()) throw BadElementIndex("generator out of range");
      const Element y = mul(x, g);
      if (!in[y]) {
        in[y] = true;
        queue.push_back(y);
      }
    }
  }
  std::vector<Element> out;
  for (Element a = 0; a < order(); ++a)
    if (in[a]) out.push_back(a);
  return out;
}

std::vector<Element> FiniteGroup::generators() const {
  std::vector<Element> gens;
  std::vector<Element> span = generated_subgroup(gens);
  for (Element a = 0; a < order() && span.size() < order(); ++a) {
    if (std::binary_search(span.begin(), span.end(), a)) continue;
    gens.push_back(a);
    span = generated_subgroup(gens);
  }
  return gens;
}

Element Subgroup::to_sub(Element parent_element) const {
  const auto it = std::find(embedding.begin(), embedding.end(), parent_element);
  if (it == embedding.end()) throw BadElementIndex("element not in subgroup");
  return static_cast<Element>(it - embedding.begin());
}

Subgroup make_subgroup(const FiniteGroup& parent, const std::vector<Element>& elements) {
  std::vector<Element> emb = elements;
  std::sort(emb.begin(), emb.end());
  emb.erase(std::unique(emb.begin(), emb.end()), emb.end());
  // Put the identity first so that subgroup labels read naturally.
  std::stable_partition(emb.begin(), emb.end(), [&](Element x) { return x == parent.identity(); });
  std::map<Element, Element> pos;
  for (std::size_t i = 0; i < emb.size(); ++i) pos[emb[i]] = static_cast<Element>(i);
  std::vector<std::vector<Element>> t(emb.size(), std::vector<Element>(emb.size()));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < emb.size(); ++i) {
    labels.push_back(parent.label(emb[i]));
    for (std::size_t j = 0; j < emb.size(); ++j) {
      const auto it = pos.find(parent.mul(emb[i], emb[j]));
      if (it == pos.end()) throw GroupAxiomViolation("subset is not closed under multiplication");
      t[i][j] = it->second;
    }
  }
  return Subgroup{FiniteGroup(std::move(t), std::move(labels)), std::move(emb)};
}

bool is_homomorphism(const FiniteGroup& from, const FiniteGroup& to, const std::vector<Element>& map) {
  if (map.size() != from.order()) return false;
  for (Element x : map)
    if (x >= to.order()) return false;
  for (Element a = 0; a < from.order(); ++a)
    for (Element b = 0; b < from.order(); ++b)
      if (map[from.mul(a, b)] != to.mul(map[a], map[b])) return false;
  return true;
}

std::vector<Element> extend_homomorphism(const FiniteGroup& from, const std::vector<Element>& gens,
                                         const FiniteGroup& to, const std::vector<Element>& images) {
  if (gens.size() != images.size()) throw NotAHomomorphism("generator/image count mismatch");
  const Element unset = static_cast<Element>(to.order());
  std::vector<Element> map(from.order(), unset);
  map[from.identity()] = to.identity();
  std::deque<Element> queue{from.identity()};
  while (!queue.empty()) {
    const Element x = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const Element y = from.mul(x, gens[k]);
      if (map[y] == unset) {
        map[y] = to.mul(map[x], images[k]);
        queue.push_back(y);
      }
    }
  }
  if (std::find(map.begin(), map.end(), unset) != map.end())
    throw NotAHomomorphism("generators do not generate the source group");
  if (!is_homomorphism(from, to, map)) throw NotAHomomorphism("generator images violate a relation");
  return map;
}

}  // namespace proet
