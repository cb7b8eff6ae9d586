#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "eigcontain/io/json.hpp"

namespace eigc::cli {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

struct GlobalOptions {
  std::string out;
  std::uint64_t seed = kDefaultSeed;
  unsigned threads = 1;
  std::size_t max_group_order = 0;  // 0: library default
  std::size_t max_classes = 0;      // 0: library default
};

/// Result of a subcommand: the JSON document and the process exit status.
struct Outcome {
  io::Json report;
  int status = 0;
};

struct TableArgs {
  std::string group;
  std::string method = "auto";
};
Outcome cmd_chartable(const GlobalOptions& g, const TableArgs& a);

struct LambdaArgs {
  std::string group;
  std::string chr;
  std::string op;
  bool eigen = false;
};
Outcome cmd_lambda(const GlobalOptions& g, const LambdaArgs& a);

struct PreceqArgs {
  std::string group;
  std::string rep1;
  std::string rep2;
};
Outcome cmd_preceq(const GlobalOptions& g, const PreceqArgs& a);

struct SearchArgs {
  std::string group;
  std::string gap = "any";
};
Outcome cmd_preceq_search(const GlobalOptions& g, const SearchArgs& a);

Outcome cmd_gl2_verify(const GlobalOptions& g, const std::string& lhs, const std::string& rhs);
Outcome cmd_gl2_sym6(const GlobalOptions& g, const std::string& which);

struct SatakeArgs {
  std::string small;
  std::string big;
  std::uint32_t sym_small = 1;
  std::uint32_t sym_big = 1;
  double tol = 1e-9;
  std::size_t min_overlap = 10;
};
Outcome cmd_satake_check(const GlobalOptions& g, const SatakeArgs& a);

Outcome cmd_reproduce(const GlobalOptions& g, const std::string& id);
Outcome cmd_list_claims(const GlobalOptions& g);
Outcome cmd_selftest(const GlobalOptions& g);

/// Shared helpers.
GroupPtr load_group(const GlobalOptions& g, const std::string& descriptor);
CharacterTable load_table(const GlobalOptions& g, const GroupPtr& group,
                          const std::string& method = "auto");

}  // namespace eigc::cli
