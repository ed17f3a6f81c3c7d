#include "cli.hpp"

#include <filesystem>
#include <sstream>

#include "acceptance.hpp"
#include "proet/hull/hull.hpp"
#include "proet/specialization/specialization.hpp"

namespace proet::cli {

namespace {

class Builder {
 public:
  Builder(const std::string& command, const RunConfig& cfg) {
    body_["command"] = command;
    Json c;
    c["prime"] = cfg.prime;
    c["max_len"] = cfg.max_len;
    c["depth"] = cfg.depth;
    c["lattice_len"] = cfg.lattice_len;
    c["seed"] = cfg.seed;
    body_["config"] = c;
    body_["inputs"] = cfg.inputs;
  }

  Json& operator[](const std::string& key) { return body_[key]; }

  void certificate(const std::string& name, bool ok, Json detail = nullptr) {
    Json c{{"name", name}, {"ok", ok}};
    if (!detail.is_null()) c["detail"] = std::move(detail);
    certs_.push_back(std::move(c));
  }

  // Runs f; a library error becomes a failed certificate carrying the message.
  template <class F>
  bool attempt(const std::string& name, F f) {
    try {
      f();
      return true;
    } catch (const SpecParseError&) {
      throw;
    } catch (const Error& e) {
      certificate(name, false, e.what());
      return false;
    }
  }

  Report finish() {
    bool ok = true;
    for (const auto& c : certs_) ok = ok && c["ok"].get<bool>();
    body_["certificates"] = certs_;
    body_["ok"] = ok;
    return {body_};
  }

 private:
  Json body_;
  Json certs_ = Json::array();
};

void need_inputs(const RunConfig& cfg, std::size_t lo, std::size_t hi, const std::string& usage) {
  if (cfg.inputs.size() < lo || cfg.inputs.size() > hi) throw SpecParseError("usage: " + usage);
}

bool looks_like_curve(const std::string& ref) {
  if (!std::filesystem::exists(ref)) return true;  // built-in names
  return load_json_file(ref).contains("components");
}

ContinuousRep continuous_of(const RepSpec& spec) {
  if (spec.rep) return *spec.rep;
  if (!spec.curve) throw SpecParseError("a finite_quotient representation needs a \"curve\" to be inflated");
  return inflate(*spec.quotient, pi1_presentation(*spec.curve));
}

ContinuousRep load_continuous(const std::string& ref, const RunConfig& cfg) {
  return continuous_of(load_rep(ref, cfg.prime));
}

void same_curve(const ContinuousRep& a, const ContinuousRep& b) {
  if (!(a.presentation() == b.presentation())) throw SpecParseError("the two representations live on different curves");
  if (a.prime() != b.prime()) throw SpecParseError("the two representations use different primes");
}

// A rep file gives its own signature; a curve takes --group names.
SignaturePtr load_signature(const std::string& ref, const RunConfig& cfg) {
  if (!looks_like_curve(ref)) return load_continuous(ref, cfg).signature();
  const auto pres = pi1_presentation(load_curve(ref));
  if (cfg.groups.empty()) return pres.trivial_signature();
  if (cfg.groups.size() != pres.num_components)
    throw SpecParseError("expected " + std::to_string(pres.num_components) + " groups, one per component");
  std::vector<FiniteGroup> gs;
  for (const auto& g : cfg.groups) gs.push_back(group_from_json(Json(g)));
  return pres.signature(std::move(gs));
}

Json signature_json(const FPSignature& sig) {
  Json j;
  j["r"] = sig.r();
  j["factor_orders"] = Json::array();
  for (std::size_t k = 0; k < sig.num_finite(); ++k) j["factor_orders"].push_back(sig.finite(k).order());
  return j;
}

Json matrices_json(const std::vector<MatrixK>& ms) {
  Json j = Json::array();
  for (const auto& m : ms) j.push_back(matrix_to_json(m));
  return j;
}

template <class S>
std::string scalar_str(const S& s) {
  std::ostringstream os;
  os << s;
  return os.str();
}

template <class S>
Json plain_matrix_json(const Matrix<S>& m) {
  Json j = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(scalar_str(m(i, k)));
    j.push_back(std::move(row));
  }
  return j;
}

Json axioms_json(const AxiomCertificate& a) {
  Json j = Json::array();
  for (const auto& x : a.axioms) j.push_back({{"name", x.name}, {"checks", x.checks}, {"ok", x.ok}});
  return j;
}

Json cocycle_json(const CocycleCertificate& c) {
  Json j{{"max_len", c.max_len}, {"words", c.words}, {"pairs_checked", c.pairs_checked},
         {"identity_ok", c.identity_ok}, {"ok", c.ok}};
  if (c.witness) j["witness"] = {format_word(c.witness->first), format_word(c.witness->second)};
  return j;
}

Json finite_cocycle_json(const FiniteCocycle& f) {
  Json values = Json::object();
  for (Element g = 0; g < f.group.order(); ++g) values[f.group.label(g)] = matrix_to_json(f.values[g]);
  return values;
}

// ---- commands ----

Report cmd_pi1(const RunConfig& cfg) {
  need_inputs(cfg, 1, 1, "pi1 CURVE");
  Builder b("pi1", cfg);
  const auto curve = load_curve(cfg.inputs[0]);
  const auto pres = pi1_presentation(curve);
  const auto g = dual_graph(curve);
  b["r"] = pres.r;
  b["dual_graph"] = {{"vertices", g.vertices}, {"edges", g.edges.size()}};
  b["presentation"] = presentation_to_json(pres);
  b.certificate("r = E - V + 1", pres.r == g.edges.size() - g.vertices + 1 && pres.r == betti_rank(curve));
  b.certificate("spanning tree and loop nodes partition the nodes",
                pres.spanning_tree.size() + 1 == pres.num_components &&
                    pres.spanning_tree.size() + pres.loop_nodes.size() == pres.num_nodes());
  return b.finish();
}

Report cmd_rep(const RunConfig& cfg) {
  need_inputs(cfg, 1, 2, "rep REP [REP2]");
  Builder b("rep", cfg);
  const auto spec = load_rep(cfg.inputs[0], cfg.prime);
  b["kind"] = spec.kind == RepKind::kContinuous ? "continuous" : "finite_quotient";
  if (spec.quotient) {
    b["group_order"] = spec.quotient->group().order();
    b["rank"] = spec.quotient->rank();
    b["prime"] = spec.quotient->prime();
  }
  if (!spec.rep && !spec.curve) {
    b.certificate("valid", true);
    return b.finish();
  }
  const auto a = continuous_of(spec);
  const auto other = cfg.inputs.size() == 2 ? load_continuous(cfg.inputs[1], cfg) : a;
  same_curve(a, other);
  b["rank"] = a.rank();
  b["prime"] = a.prime();
  b["signature"] = signature_json(*a.signature());
  b["generators"] = Json::array();
  for (const auto& w : a.generator_words()) b["generators"].push_back(format_word(w));
  b.certificate("valid", true);
  b.attempt("intertwiners", [&] {
    const auto hom = intertwiners(a, other);
    b["intertwiner_dimension"] = hom.size();
    b["intertwiners"] = matrices_json(hom);
  });
  return b.finish();
}

Report cmd_cover(const RunConfig& cfg) {
  need_inputs(cfg, 1, 1, "cover REP");
  Builder b("cover", cfg);
  const auto rep = load_continuous(cfg.inputs[0], cfg);
  b.attempt("cover", [&] {
    const auto c = build_finite_cover(rep);
    const auto& sig = *rep.signature();
    b["signature"] = signature_json(sig);
    b["fiber_size"] = c.fiber.size();
    Json fiber = Json::array();
    for (const auto& t : c.fiber) {
      Json x = Json::array();
      for (std::size_t j = 0; j < t.coords.size(); ++j) x.push_back(sig.finite(j).label(t.coords[j]));
      fiber.push_back(std::move(x));
    }
    b["fiber"] = fiber;
    Json gens = Json::array();
    for (std::size_t k = 0; k < c.generators.size(); ++k)
      gens.push_back({{"word", format_word(c.generators[k])}, {"action", c.actions[k]}});
    b["generators"] = gens;
    b["deck_group_order"] = c.deck_group_order;
    b.certificate("relations hold", c.relations_ok);
    b.certificate("connected", c.connected);
    b.certificate("deck group order = fiber size", c.deck_group_order == c.fiber.size());
  });
  return b.finish();
}

Report cmd_free(const RunConfig& cfg) {
  need_inputs(cfg, 1, 1, "free REP|CURVE [--group G ...]");
  Builder b("free", cfg);
  const auto sig = load_signature(cfg.inputs[0], cfg);
  b["signature"] = signature_json(*sig);
  b.attempt("free action of ker(alpha)", [&] {
    const auto rep = certify_free_action(sig, cfg.max_len);
    b["max_len"] = rep.max_len;
    b["kernel_words"] = rep.kernel_words;
    b["components"] = rep.components;
    b["pairs_checked"] = rep.pairs_checked;
    b.certificate("free action of ker(alpha)", rep.free);
    bool nontrivial = false;
    for (std::size_t j = 0; j < sig->num_finite(); ++j) nontrivial = nontrivial || !sig->finite(j).is_trivial();
    if (nontrivial) {
      b.certificate("full group fixes a component", rep.full_group_witness.has_value());
      if (rep.full_group_witness) {
        const auto [j, g] = *rep.full_group_witness;
        b["full_group_witness"] = {{"factor", j + 1}, {"element", sig->finite(j).label(g)}};
      }
    }
  });
  return b.finish();
}

Report cmd_domain(const RunConfig& cfg) {
  need_inputs(cfg, 1, 1, "domain REP|CURVE [--group G ...] [--word W]");
  Builder b("domain", cfg);
  const auto sig = load_signature(cfg.inputs[0], cfg);
  const auto pres = looks_like_curve(cfg.inputs[0]) ? pi1_presentation(load_curve(cfg.inputs[0]))
                                                     : load_continuous(cfg.inputs[0], cfg).presentation();
  b["signature"] = signature_json(*sig);
  std::optional<FPWord> w;
  if (cfg.word) {
    try {
      w = parse_word(sig, *cfg.word);
    } catch (const Error& e) {
      throw SpecParseError(std::string("--word: ") + e.what());
    }
  } else {
    w = default_kernel_word(sig);
  }
  if (!w) {
    b["kernel"] = "trivial";
    return b.finish();
  }
  b["w"] = format_word(*w);
  b.attempt("fundamental domain", [&] {
    const CoverGeometry geom(pres, sig);
    const auto dom = fundamental_domain(geom, *w);
    b["raw_count"] = dom.raw_count;
    Json core = Json::array();
    for (const auto& c : dom.core) core.push_back(format_component(c));
    b["core"] = core;
    Json boundary = Json::array();
    for (const auto& x : dom.boundary)
      boundary.push_back({{"node", x.point.node},
                          {"s", format_word(x.point.s)},
                          {"inside", format_component(x.inside)},
                          {"outside", format_component(x.outside)}});
    b["boundary"] = boundary;
    Json table = Json::array();
    std::size_t bad = 0;
    for (const auto& target : enumerate_components(sig, cfg.max_len)) {
      const auto wit = cover_witness(dom, target);
      bad += !(wit.in_kernel && wit.verified);
      table.push_back({{"component", format_component(target)},
                       {"source", format_component(wit.source)},
                       {"t", format_word(wit.t)},
                       {"verified", wit.in_kernel && wit.verified}});
    }
    b["witnesses"] = table;
    b.certificate("every component of length <= max_len is covered", bad == 0,
                  std::to_string(table.size()) + " components");
  });
  return b.finish();
}

Report cmd_descend(const RunConfig& cfg) {
  need_inputs(cfg, 1, 1, "descend REP");
  Builder b("descend", cfg);
  const auto spec = load_rep(cfg.inputs[0], cfg.prime);
  const auto rep = continuous_of(spec);
  const auto datum = datum_from_rep(rep);
  const auto kernel = datum.restricted_to_kernel();
  b["rank"] = rep.rank();
  b["signature"] = signature_json(*rep.signature());
  b.attempt("cocycle", [&] {
    const auto c = check_cocycle(datum, cfg.max_len);
    b["cocycle_ok"] = c.ok;
    b["cocycle"] = cocycle_json(c);
    b.certificate("cocycle", c.ok);
  });
  b.attempt("hom", [&] {
    b["hom_dims"] = {{"full", hom_cocycle(datum, datum).size()}, {"kernel", hom_cocycle(kernel, kernel).size()}};
  });
  b.attempt("lattice assignment", [&] {
    const auto a = integralize(kernel, cfg.lattice_len);
    Json j;
    j["max_len"] = a.max_len;
    j["kernel_words"] = a.kernel_words;
    j["pairs_checked"] = a.pairs_checked;
    j["conflicts"] = a.conflicts;
    j["determinant_conservation"] = a.determinant_conservation;
    j["orbit_representatives"] = Json::array();
    for (const auto& c : a.orbit_representatives) j["orbit_representatives"].push_back(format_component(c));
    j["entries"] = Json::array();
    for (const auto& e : a.entries)
      j["entries"].push_back({{"component", format_component(e.component)},
                              {"transport", format_word(e.transport)},
                              {"exponents", e.lattice.exponents()},
                              {"basis", matrix_to_json(e.lattice.basis())}});
    b["lattice_assignment"] = j;
    b.certificate("lattice assignment", a.conflicts == 0 && a.determinant_conservation);
  });
  if (spec.quotient) {
    b.attempt("finite cocycle", [&] {
      const auto f = descend_inflation(datum, *spec.quotient, cfg.max_len);
      const auto direct = finite_cocycle_of(*spec.quotient);
      b["finite_cocycle"] = {{"max_len", f.max_len},
                             {"kernel_words_checked", f.kernel_words_checked},
                             {"preimages_checked", f.preimages_checked},
                             {"values", finite_cocycle_json(f)}};
      b.certificate("finite cocycle", is_finite_cocycle(f) && f.values == direct.values);
    });
  }
  return b.finish();
}

Report cmd_strat(const RunConfig& cfg) {
  if (cfg.inputs.empty() || (cfg.inputs[0] != "hom" && cfg.inputs[0] != "tensor"))
    throw SpecParseError("usage: strat hom REP [REP2] | strat tensor REP REP2");
  const bool hom = cfg.inputs[0] == "hom";
  if (hom) need_inputs(cfg, 2, 3, "strat hom REP [REP2]");
  else need_inputs(cfg, 3, 3, "strat tensor REP REP2");
  Builder b("strat " + cfg.inputs[0], cfg);
  const FrobeniusMode mode = cfg.mode.value_or(hom ? FrobeniusMode::kKRelative : FrobeniusMode::kSRelative);
  b["mode"] = mode_name(mode);
  const auto ra = load_continuous(cfg.inputs[1], cfg);
  const auto rb = cfg.inputs.size() == 3 ? load_continuous(cfg.inputs[2], cfg) : ra;
  same_curve(ra, rb);
  const auto da = fdiv_from_rep(ra, mode, cfg.depth, cfg.max_len);
  const auto db = fdiv_from_rep(rb, mode, cfg.depth, cfg.max_len);
  b["ranks"] = {da.rank(), db.rank()};
  b.certificate("cocycle (first)", da.certificate().ok, cocycle_json(da.certificate()));
  if (cfg.inputs.size() == 3) b.certificate("cocycle (second)", db.certificate().ok, cocycle_json(db.certificate()));
  if (hom) {
    b.attempt("hom", [&] {
      const auto h = hom_fdiv(da, db);
      b["dimension"] = h.basis.size();
      b["field"] = h.field;
      b["dimension_by_depth"] = h.dimension_by_depth;
      b["stabilization_depth"] = h.stabilization_depth;
      b["basis"] = matrices_json(h.basis);
    });
  } else {
    b.attempt("tensor", [&] {
      const auto t = tensor_fdiv(da, db);
      b["rank"] = t.datum.rank();
      b["layers"] = t.certificate.layers;
      b["generators_checked"] = t.certificate.generators_checked;
      b.certificate("h(rho x tau) = h(rho) x h(tau)", t.certificate.ok);
      b.certificate("cocycle (tensor)", t.datum.certificate().ok, cocycle_json(t.datum.certificate()));
    });
  }
  return b.finish();
}

Report cmd_square(const RunConfig& cfg) {
  need_inputs(cfg, 1, 2, "square FQ_REP [CURVE]");
  Builder b("square", cfg);
  const auto spec = load_rep(cfg.inputs[0], cfg.prime);
  if (!spec.quotient) throw SpecParseError("square needs a finite_quotient representation");
  std::optional<NodalCurve> curve = spec.curve;
  if (cfg.inputs.size() == 2) curve = load_curve(cfg.inputs[1]);
  if (!curve) throw SpecParseError("square needs a curve");
  const auto pres = pi1_presentation(*curve);
  if (spec.quotient->z_images().size() != pres.r || spec.quotient->factor_generators().size() != pres.num_components)
    throw SpecParseError("the quotient data needs " + std::to_string(pres.r) + " z images and " +
                         std::to_string(pres.num_components) + " factor generator lists for this curve");
  b["r"] = pres.r;
  b["group_order"] = spec.quotient->group().order();
  PipelineBounds bounds;
  bounds.depth = cfg.depth;
  b.attempt("commuting square", [&] {
    const auto c = commuting_square_check(*spec.quotient, pres, cfg.max_len, bounds);
    b["max_len"] = c.max_len;
    b["words_checked"] = c.words_checked;
    b["kernel_words"] = c.kernel_words;
    b["layers_checked"] = c.layers_checked;
    b["descended"] = finite_cocycle_json(c.descended);
    b["direct"] = finite_cocycle_json(c.direct);
    b["witness"] = matrix_to_json(c.witness);
    b.certificate("commuting square", c.ok);
  });
  return b.finish();
}

template <class S>
void hull_tower(Builder& b, const QuotientTower& tower, const S& like) {
  if (tower.size() == 1) {
    const auto& g = tower.level(0);
    b.attempt("Hopf axioms", [&] {
      const auto a = function_hopf(g, like);
      b["dimension"] = a.dim();
      b["axioms"] = axioms_json(a.certificate());
      b["commutative"] = a.certificate().commutative;
      b["cocommutative"] = a.certificate().cocommutative;
      b.certificate("Hopf axioms", a.certificate().ok());
    });
    return;
  }
  b.attempt("tower", [&] {
    const auto r = tower_hull(tower, like);
    b["dimensions"] = r.dimensions;
    Json levels = Json::array();
    for (std::size_t i = 0; i < r.algebras.size(); ++i) {
      levels.push_back({{"dimension", r.dimensions[i]}, {"axioms", axioms_json(r.algebras[i])}});
      b.certificate("Hopf axioms, level " + std::to_string(i), r.algebras[i].ok());
    }
    b["levels"] = levels;
    Json duals = Json::array();
    for (const auto& d : r.duals) {
      duals.push_back({{"from", d.from},
                       {"to", d.to},
                       {"rank", d.rank},
                       {"injective", d.injective},
                       {"matrix", plain_matrix_json(d.matrix)},
                       {"hopf_map", axioms_json(d.hopf_map)}});
      const std::string tag = std::to_string(d.to) + " <- " + std::to_string(d.from);
      b.certificate("dual " + tag + " injective", d.injective);
      b.certificate("dual " + tag + " is a Hopf map", d.hopf_map.ok());
    }
    b["duals"] = duals;
    b["composites_checked"] = r.composites_checked;
    b.certificate("composites", r.composites_ok);
  });
}

Report cmd_hull(const RunConfig& cfg) {
  need_inputs(cfg, 1, 1, "hull GROUP|TOWER|FQ_REP");
  Builder b("hull", cfg);
  const std::string& ref = cfg.inputs[0];
  if (std::filesystem::exists(ref) && load_json_file(ref).contains("images")) {
    const auto spec = load_rep(ref, cfg.prime);
    if (!spec.quotient) throw SpecParseError("hull takes a finite_quotient representation");
    b["field"] = cfg.rational ? "Q" : "F_" + std::to_string(spec.quotient->prime());
    b.attempt("comodule roundtrip", [&] {
      const auto c = rep_comodule_roundtrip(*spec.quotient);
      b["roundtrip"] = {{"group_order", c.group_order},
                        {"rank", c.rank},
                        {"coassociativity_checks", c.coassociativity_checks},
                        {"counit_ok", c.counit_ok}};
      b.certificate("comodule roundtrip", c.ok && c.reconstructed == spec.quotient->images());
    });
    const QuotientTower tower({spec.quotient->group()}, {});
    if (cfg.rational) hull_tower(b, tower, Rational(0));
    else hull_tower(b, tower, Fp(0, spec.quotient->prime()));
    return b.finish();
  }
  b["field"] = cfg.rational ? "Q" : "F_" + std::to_string(cfg.prime);
  const auto tower = load_tower(ref);
  Json levels = Json::array();
  for (std::size_t i = 0; i < tower.size(); ++i) levels.push_back(tower.level(i).order());
  b["group_orders"] = levels;
  if (cfg.rational) hull_tower(b, tower, Rational(0));
  else hull_tower(b, tower, Fp(0, cfg.prime));
  return b.finish();
}

Report cmd_selftest(const RunConfig& cfg) {
  need_inputs(cfg, 0, 0, "selftest");
  Builder b("selftest", cfg);
  Json criteria = Json::array();
  for (const auto& r : acceptance::run_all(cfg.seed)) {
    Json c{{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail}};
    if (r.time_limit > 0) c["time_limit_seconds"] = r.time_limit;
    criteria.push_back(c);
    b.certificate(std::to_string(r.id) + ". " + r.title, r.pass, r.detail);
  }
  b["criteria"] = criteria;
  return b.finish();
}

std::string text_value(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  const std::string s = v.dump();
  if (s.size() <= 100) return s;
  const std::size_t n = v.size();
  return "(" + std::to_string(n) + (v.is_array() ? " entries" : " keys") + "; see --format json)";
}

}  // namespace

Report run(const std::string& command, const RunConfig& config) {
  if (config.max_len < 2) throw SpecParseError("--max-len must be at least 2");
  if (command == "pi1") return cmd_pi1(config);
  if (command == "rep") return cmd_rep(config);
  if (command == "cover") return cmd_cover(config);
  if (command == "free") return cmd_free(config);
  if (command == "domain") return cmd_domain(config);
  if (command == "descend") return cmd_descend(config);
  if (command == "strat") return cmd_strat(config);
  if (command == "square") return cmd_square(config);
  if (command == "hull") return cmd_hull(config);
  if (command == "selftest") return cmd_selftest(config);
  throw SpecParseError("unknown command \"" + command + "\"");
}

std::string render(const Report& report, const std::string& format) {
  if (format == "json") return report.body.dump(2) + "\n";
  std::ostringstream os;
  const Json& j = report.body;
  const Json& c = j["config"];
  os << j["command"].get<std::string>() << "  (p = " << c["prime"] << ", L = " << c["max_len"]
     << ", depth = " << c["depth"] << ", seed = " << c["seed"] << ")\n";
  for (const auto& [key, value] : j.items()) {
    if (key == "command" || key == "config" || key == "inputs" || key == "certificates" || key == "ok" ||
        key == "criteria")
      continue;
    os << "  " << key << ": " << text_value(value) << "\n";
  }
  for (const auto& cert : j["certificates"]) {
    os << (cert["ok"].get<bool>() ? "PASS  " : "FAIL  ") << cert["name"].get<std::string>();
    if (cert.contains("detail")) os << ": " << text_value(cert["detail"]);
    os << "\n";
  }
  os << (report.ok() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

}  // namespace proet::cli
