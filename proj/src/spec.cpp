#include "proet/io/spec.hpp"

#include <fstream>

namespace proet {

namespace {

const Json& field(const Json& j, const std::string& key) {
  if (!j.is_object() || !j.contains(key)) throw SpecParseError("missing key \"" + key + "\"");
  return j.at(key);
}

template <class T>
T get(const Json& j, const std::string& key) {
  try {
    return field(j, key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw SpecParseError("bad value for \"" + key + "\": " + e.what());
  }
}

// Runs a builder and reports any library error as a spec error.
template <class F>
auto wrap(const std::string& what, F f) -> decltype(f()) {
  try {
    return f();
  } catch (const SpecParseError&) {
    throw;
  } catch (const nlohmann::json::exception& e) {
    throw SpecParseError(what + ": " + e.what());
  } catch (const Error& e) {
    throw SpecParseError(what + ": " + e.what());
  }
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string part = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    try {
      std::size_t used = 0;
      out.push_back(std::stoul(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::logic_error&) {
      throw SpecParseError("expected a number, got \"" + part + "\"");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

Element label_in(const FiniteGroup& g, const Json& j) {
  if (j.is_number_unsigned()) {
    const auto e = j.get<std::size_t>();
    if (e >= g.order()) throw SpecParseError("element index " + std::to_string(e) + " out of range");
    return static_cast<Element>(e);
  }
  if (!j.is_string()) throw SpecParseError("group elements are labels or indices");
  try {
    return g.index_of(j.get<std::string>());
  } catch (const BadElementIndex& e) {
    throw SpecParseError(e.what());
  }
}

std::filesystem::path resolve(const std::string& ref, const std::filesystem::path& base) {
  const std::filesystem::path p(ref);
  return p.is_absolute() || base.empty() ? p : base / p;
}

}  // namespace

Json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SpecParseError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw SpecParseError(path.string() + ": " + e.what());
  }
}

NodalCurve curve_from_json(const Json& j) {
  return wrap("curve", [&] {
    std::vector<CurveComponent> comps;
    for (const auto& c : field(j, "components"))
      comps.push_back({get<std::string>(c, "id"), get<std::vector<std::string>>(c, "branches")});
    auto index = [&](const std::string& id) -> std::size_t {
      for (std::size_t k = 0; k < comps.size(); ++k)
        if (comps[k].id == id) return k;
      throw SpecParseError("unknown component \"" + id + "\"");
    };
    auto branch = [&](const Json& b) {
      if (!b.is_array() || b.size() != 2) throw SpecParseError("a branch is [component, label]");
      return Branch{index(b[0].get<std::string>()), b[1].get<std::string>()};
    };
    std::vector<Node> nodes;
    for (const auto& n : field(j, "nodes")) nodes.push_back({branch(field(n, "a")), branch(field(n, "b"))});
    NodalCurve curve(std::move(comps), std::move(nodes));
    dual_graph(curve);  // rejects disconnected curves
    return curve;
  });
}

Json curve_to_json(const NodalCurve& curve) {
  Json j;
  j["components"] = Json::array();
  for (const auto& c : curve.components()) j["components"].push_back({{"id", c.id}, {"branches", c.branches}});
  j["nodes"] = Json::array();
  const auto& comps = curve.components();
  for (const auto& n : curve.nodes())
    j["nodes"].push_back({{"a", {comps[n.a.component].id, n.a.label}}, {"b", {comps[n.b.component].id, n.b.label}}});
  return j;
}

NodalCurve load_curve(const std::string& ref, const std::filesystem::path& base) {
  if (ref == "nodal_cubic") return nodal_cubic();
  if (ref.rfind("cycle:", 0) == 0) {
    const auto n = parse_sizes(ref.substr(6));
    if (n.size() != 1) throw SpecParseError("cycle:<n> takes one number");
    return wrap("curve", [&] { return cycle_curve(n[0]); });
  }
  if (ref.rfind("degenerate:", 0) == 0) {
    const auto n = parse_sizes(ref.substr(11));
    if (n.size() != 2) throw SpecParseError("degenerate:<genus>,<components> takes two numbers");
    return wrap("curve", [&] { return degenerate_curve(n[0], n[1]); });
  }
  return curve_from_json(load_json_file(resolve(ref, base)));
}

FiniteGroup group_from_json(const Json& j) {
  return wrap("group", [&] {
    if (j.is_string()) return FiniteGroup::named(j.get<std::string>());
    auto table = get<std::vector<std::vector<Element>>>(j, "table");
    if (j.contains("order") && get<std::size_t>(j, "order") != table.size())
      throw SpecParseError("\"order\" does not match the table");
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = get<std::vector<std::string>>(j, "labels");
    return FiniteGroup(std::move(table), std::move(labels));
  });
}

Json group_to_json(const FiniteGroup& g) { return {{"order", g.order()}, {"table", g.table()}, {"labels", g.labels()}}; }

MatrixK matrix_from_json(const Json& j, std::uint32_t p) {
  return wrap("matrix", [&] {
    if (!j.is_array() || j.empty()) throw SpecParseError("a matrix is a nonempty array of rows");
    std::vector<std::vector<K>> rows;
    for (const auto& row : j) {
      if (!row.is_array()) throw SpecParseError("matrix rows are arrays");
      rows.emplace_back();
      for (const auto& x : row)
        rows.back().push_back(x.is_number_integer() ? k_constant(x.get<std::int64_t>(), p)
                                                    : parse_rational_function(x.get<std::string>(), p));
    }
    return MatrixK::from_rows(rows, k_constant(0, p));
  });
}

namespace {

std::string poly_text(const Polynomial<Fp>& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (long k = f.degree(); k >= 0; --k) {
    const Fp c = f.coeff(static_cast<std::size_t>(k));
    if (is_zero(c)) continue;
    if (!out.empty()) out += " + ";
    const bool unit = c.value() == 1 && k > 0;
    if (!unit) out += std::to_string(c.value());
    if (k > 0) out += (unit ? "" : "*") + std::string("t") + (k > 1 ? "^" + std::to_string(k) : "");
  }
  return out;
}

std::string grouped(const Polynomial<Fp>& f) {
  const std::string s = poly_text(f);
  return s.find(' ') == std::string::npos ? s : "(" + s + ")";
}

}  // namespace

std::string k_text(const K& a) {
  if (a.denominator().degree() == 0) return poly_text(a.numerator());
  return grouped(a.numerator()) + "/" + grouped(a.denominator());
}

Json matrix_to_json(const MatrixK& m) {
  Json j = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(k_text(m(i, k)));
    j.push_back(std::move(row));
  }
  return j;
}

RepSpec rep_from_json(const Json& j, const std::filesystem::path& base, std::uint32_t default_prime) {
  return wrap("representation", [&] {
    RepSpec spec;
    const std::string kind = j.contains("kind") ? get<std::string>(j, "kind") : "continuous";
    if (kind != "continuous" && kind != "finite_quotient") throw SpecParseError("unknown kind \"" + kind + "\"");
    spec.kind = kind == "continuous" ? RepKind::kContinuous : RepKind::kFiniteQuotient;
    if (j.contains("curve")) {
      const auto& c = j.at("curve");
      spec.curve = c.is_string() ? load_curve(c.get<std::string>(), base) : curve_from_json(c);
    }
    const auto p = j.contains("prime") || default_prime == 0 ? get<std::uint32_t>(j, "prime") : default_prime;
    const auto rank = get<std::size_t>(j, "rank");

    if (spec.kind == RepKind::kContinuous) {
      if (!spec.curve) throw SpecParseError("a continuous representation needs \"curve\"");
      const auto pres = pi1_presentation(*spec.curve);
      std::vector<MatrixK> zs;
      for (const auto& m : field(j, "z")) zs.push_back(matrix_from_json(m, p));
      std::vector<FactorRep> factors;
      if (j.contains("factors")) {
        for (const auto& f : j.at("factors")) {
          FiniteGroup g = group_from_json(field(f, "group"));
          std::vector<Element> gens;
          for (const auto& x : field(f, "generators")) gens.push_back(label_in(g, x));
          std::vector<MatrixK> gen_images;
          for (const auto& m : field(f, "images")) gen_images.push_back(matrix_from_json(m, p));
          if (gen_images.size() != gens.size()) throw SpecParseError("one image per factor generator");
          auto images = g.is_trivial() && gens.empty()
                            ? std::vector<MatrixK>{MatrixK::identity(rank, k_constant(0, p))}
                            : extend_matrix_hom(g, gens, gen_images);
          factors.push_back({std::move(g), std::move(gens), std::move(images)});
        }
      } else {
        for (std::size_t k = 0; k < pres.num_components; ++k)
          factors.push_back({FiniteGroup::trivial(), {}, {MatrixK::identity(rank, k_constant(0, p))}});
      }
      spec.rep.emplace(pres, p, rank, std::move(zs), std::move(factors));
      return spec;
    }

    FiniteGroup g = group_from_json(field(j, "group"));
    std::vector<Element> z;
    for (const auto& x : field(j, "z")) z.push_back(label_in(g, x));
    std::vector<std::vector<Element>> fg;
    if (j.contains("factor_generators"))
      for (const auto& row : j.at("factor_generators")) {
        fg.emplace_back();
        for (const auto& x : row) fg.back().push_back(label_in(g, x));
      }
    const auto& images = field(j, "images");
    if (images.is_array()) {
      std::vector<MatrixK> all;
      for (const auto& m : images) all.push_back(matrix_from_json(m, p));
      spec.quotient.emplace(std::move(g), std::move(z), std::move(fg), p, rank, std::move(all));
    } else {
      std::vector<Element> gens;
      std::vector<MatrixK> gen_images;
      for (const auto& [label, m] : images.items()) {
        gens.push_back(label_in(g, Json(label)));
        gen_images.push_back(matrix_from_json(m, p));
      }
      spec.quotient.emplace(FiniteQuotientRep::from_generators(std::move(g), std::move(z), std::move(fg), p, rank, gens,
                                                               gen_images));
    }
    return spec;
  });
}

RepSpec load_rep(const std::filesystem::path& path, std::uint32_t default_prime) {
  return rep_from_json(load_json_file(path), path.parent_path(), default_prime);
}

QuotientTower tower_from_json(const Json& j) {
  return wrap("tower", [&] {
    std::vector<FiniteGroup> levels;
    for (const auto& g : field(j, "levels")) levels.push_back(group_from_json(g));
    if (!j.contains("maps")) {
      std::vector<std::size_t> orders;
      for (const auto& g : levels) {
        if (!g.is_abelian() || (g.order() > 1 && g.element_order(g.generators().front()) != g.order()))
          throw SpecParseError("\"maps\" may only be omitted for cyclic levels");
        orders.push_back(g.order());
      }
      return QuotientTower::cyclic_chain(orders);
    }
    std::vector<std::vector<Element>> maps;
    for (std::size_t i = 0; i < j.at("maps").size(); ++i) {
      if (i + 1 >= levels.size()) throw SpecParseError("more maps than level pairs");
      maps.emplace_back();
      for (const auto& x : j.at("maps")[i]) maps.back().push_back(label_in(levels[i], x));
    }
    return QuotientTower(std::move(levels), std::move(maps));
  });
}

QuotientTower load_tower(const std::string& ref) {
  if (!std::filesystem::exists(ref) && ref.find('<') == std::string::npos)
    return wrap("group", [&] { return QuotientTower({group_from_json(Json(ref))}, {}); });
  if (std::filesystem::exists(ref)) {
    const Json j = load_json_file(ref);
    if (j.contains("levels")) return tower_from_json(j);
    return QuotientTower({group_from_json(j.contains("group") ? j.at("group") : j)}, {});
  }
  Json levels = Json::array();
  std::size_t pos = 0;
  while (true) {
    const std::size_t lt = ref.find('<', pos);
    levels.push_back(ref.substr(pos, lt == std::string::npos ? std::string::npos : lt - pos));
    if (lt == std::string::npos) break;
    pos = lt + 1;
  }
  return tower_from_json({{"levels", levels}});
}

Json presentation_to_json(const Pi1Presentation& pres) {
  Json j;
  j["r"] = pres.r;
  j["num_components"] = pres.num_components;
  j["base_component"] = pres.component_ids.at(pres.base_component);
  j["components"] = pres.component_ids;
  j["spanning_tree"] = pres.spanning_tree;
  j["loop_nodes"] = pres.loop_nodes;
  j["nodes"] = Json::array();
  for (std::size_t k = 0; k < pres.num_nodes(); ++k) {
    Json n;
    n["id"] = k;
    n["a"] = pres.component_ids[pres.node_a[k]];
    n["b"] = pres.component_ids[pres.node_b[k]];
    if (pres.node_loop[k]) n["generator"] = "z" + std::to_string(*pres.node_loop[k] + 1);
    n["path_a"] = pres.path_data[k].to_a;
    n["path_b"] = pres.path_data[k].to_b;
    j["nodes"].push_back(std::move(n));
  }
  j["group"] = "Z^{*" + std::to_string(pres.r) + "} * G_1 * ... * G_" + std::to_string(pres.num_components);
  return j;
}

}  // namespace proet
