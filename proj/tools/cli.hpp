#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "proet/io/spec.hpp"
#include "proet/stratified/stratified.hpp"

namespace proet::cli {

struct RunConfig {
  std::uint32_t prime = 3;
  std::size_t max_len = 6;
  std::size_t depth = kDefaultFrobeniusDepth;
  std::size_t lattice_len = 3;
  std::uint64_t seed = 42;
  std::string format = "text";
  std::optional<FrobeniusMode> mode;  // per-command default when unset
  bool rational = false;               // hull over Q instead of F_p
  std::optional<std::string> word;     // domain: kernel word in format_word syntax
  std::vector<std::string> groups;     // factor groups when the input is a bare curve
  std::vector<std::string> inputs;
};

struct Report {
  Json body;
  bool ok() const { return body.value("ok", false); }
};

inline const std::vector<std::string>& commands() {
  static const std::vector<std::string> list{"pi1", "rep", "cover", "free", "domain", "descend",
                                             "strat", "square", "hull", "selftest"};
  return list;
}

// Throws SpecParseError for unusable inputs; failed certificates are
// recorded in the report, never thrown.
Report run(const std::string& command, const RunConfig& config);

// JSON is the report itself, dumped with two-space indentation.
std::string render(const Report& report, const std::string& format);

}  // namespace proet::cli
