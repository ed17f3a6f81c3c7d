#include <iostream>

#include <CLI11.hpp>

#include "cli.hpp"

int main(int argc, char** argv) {
  using namespace proet;
  cli::RunConfig cfg;
  std::string mode;

  CLI::App app{"Nodal curves, pro-etale covers and descent certificates"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--prime", cfg.prime, "characteristic p of F_p(t)")->capture_default_str();
  app.add_option("--max-len", cfg.max_len, "word-length bound L for every certificate")->capture_default_str();
  app.add_option("--depth", cfg.depth, "Frobenius chain depth")->capture_default_str();
  app.add_option("--lattice-len", cfg.lattice_len, "word-length bound for lattice assignments")->capture_default_str();
  app.add_option("--seed", cfg.seed, "random seed, recorded in every report")->capture_default_str();
  app.add_option("--format", cfg.format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  const std::vector<std::pair<std::string, std::string>> help{
      {"pi1", "presentation of the fundamental group of a curve"},
      {"rep", "validate a representation and print intertwiner dimensions"},
      {"cover", "build the finite cover Z_rho and its deck group"},
      {"free", "freeness certificate for the kernel action"},
      {"domain", "fundamental domain and witness table"},
      {"descend", "cocycle, Hom dimensions, lattice assignment, finite cocycle"},
      {"strat", "hom|tensor of F-divided data"},
      {"square", "commuting square for a finite-quotient representation"},
      {"hull", "Hopf axioms for a group, tower or comodule"},
      {"selftest", "run every acceptance criterion"},
  };
  std::string chosen;
  for (const auto& [name, text] : help) {
    auto* sub = app.add_subcommand(name, text);
    sub->add_option("inputs", cfg.inputs, "spec files or built-in names");
    if (name == "free" || name == "domain") sub->add_option("--group", cfg.groups, "factor group per component");
    if (name == "domain") sub->add_option("--word", cfg.word, "kernel word, e.g. \"z1 * g1:1 * z1^-1 * g1:1\"");
    if (name == "strat") sub->add_option("--mode", mode, "s or k")->check(CLI::IsMember({"s", "k"}));
    if (name == "hull") sub->add_flag("--rational", cfg.rational, "work over Q");
    sub->callback([&chosen, name] { chosen = name; });
  }

  CLI11_PARSE(app, argc, argv);
  if (!mode.empty()) cfg.mode = mode == "s" ? FrobeniusMode::kSRelative : FrobeniusMode::kKRelative;

  try {
    const auto report = cli::run(chosen, cfg);
    std::cout << cli::render(report, cfg.format);
    if (!report.ok()) throw CertificateFailure("a certificate failed");
    return 0;
  } catch (const CertificateFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const SpecParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
