#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "commands.hpp"
#include "usage.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitResource = 2;
constexpr int kExitUsage = 64;

int emit(const eigc::cli::GlobalOptions& g, const eigc::cli::Outcome& o) {
  const std::string text = o.report.dump(2) + "\n";
  if (g.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(g.out);
    if (!f) {
      std::cerr << "error: cannot write " << g.out << "\n";
      return kExitFailure;
    }
    f << text;
  }
  return o.status;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace eigc::cli;
  CLI::App app{"Eigenvalue containment and lambda-ring toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--out", g.out, "Write the JSON report here instead of stdout");
  app.add_option("--seed", g.seed, "Seed for randomized checks")->capture_default_str();
  app.add_option("--threads", g.threads, "Worker threads")->check(CLI::Range(1u, 1024u));
  app.add_option("--max-group-order", g.max_group_order, "Refuse groups larger than this")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-classes", g.max_classes, "Refuse tables with more classes than this")
      ->check(CLI::PositiveNumber);

  std::function<Outcome()> action;

  TableArgs table;
  auto* chartable = app.add_subcommand("chartable", "Character table of a group");
  chartable->add_option("--group", table.group, "Group descriptor")->required();
  chartable->add_option("--method", table.method, "auto, generic or closed-form")
      ->check(CLI::IsMember({"auto", "generic", "closed-form"}));
  chartable->callback([&] { action = [&] { return cmd_chartable(g, table); }; });

  LambdaArgs lam;
  auto* lambda = app.add_subcommand("lambda", "Apply a lambda-ring operation to a character");
  lambda->add_option("--group", lam.group, "Group descriptor")->required();
  lambda->add_option("--char", lam.chr, "Character expression")->required();
  lambda->add_option("--op", lam.op, "sym:K, ext:K, adams:K, det or id");
  lambda->add_flag("--eigen", lam.eigen, "Include eigenvalue multisets per class");
  lambda->callback([&] { action = [&] { return cmd_lambda(g, lam); }; });

  PreceqArgs pre;
  auto* preceq = app.add_subcommand("preceq", "Decide eigenvalue containment of two characters");
  preceq->add_option("--group", pre.group, "Group descriptor")->required();
  preceq->add_option("--rep1", pre.rep1, "Smaller character expression")->required();
  preceq->add_option("--rep2", pre.rep2, "Larger character expression")->required();
  preceq->callback([&] { action = [&] { return cmd_preceq(g, pre); }; });

  SearchArgs search;
  auto* psearch = app.add_subcommand("preceq-search", "All contained pairs of irreducibles");
  psearch->add_option("--group", search.group, "Group descriptor")->required();
  psearch->add_option("--gap", search.gap, "Dimension difference, or 'any'");
  psearch->callback([&] { action = [&] { return cmd_preceq_search(g, search); }; });

  std::string lhs, rhs, sym6_case;
  auto* gl2 = app.add_subcommand("gl2", "Formal GL2 character ring");
  gl2->require_subcommand(1);
  auto* verify = gl2->add_subcommand("verify", "Compare two ring expressions");
  verify->add_option("--lhs", lhs, "Left-hand expression")->required();
  verify->add_option("--rhs", rhs, "Right-hand expression")->required();
  verify->callback([&] { action = [&] { return cmd_gl2_verify(g, lhs, rhs); }; });
  auto* sym6 = gl2->add_subcommand("sym6-type", "Admissible isobaric types of Sym^6");
  sym6->add_option("--case", sym6_case, "tetrahedral, octahedral or icosahedral")->required();
  sym6->callback([&] { action = [&] { return cmd_gl2_sym6(g, sym6_case); }; });

  SatakeArgs sat;
  auto* satake = app.add_subcommand("satake", "Satake parameter containment");
  satake->require_subcommand(1);
  auto* check = satake->add_subcommand("check", "Per-prime containment of two JSONL inputs");
  check->add_option("--small", sat.small, "JSONL file of the smaller object")->required();
  check->add_option("--big", sat.big, "JSONL file of the larger object")->required();
  check->add_option("--sym-small", sat.sym_small, "Symmetric power applied to --small");
  check->add_option("--sym-big", sat.sym_big, "Symmetric power applied to --big");
  check->add_option("--tol", sat.tol, "Absolute matching tolerance")->capture_default_str();
  check->add_option("--min-overlap", sat.min_overlap, "Required number of common primes")
      ->capture_default_str();
  check->callback([&] { action = [&] { return cmd_satake_check(g, sat); }; });

  std::string claim_id;
  bool list = false;
  auto* reproduce = app.add_subcommand("reproduce", "Run a registered claim (or 'all')");
  reproduce->add_option("id", claim_id, "Claim id");
  reproduce->add_flag("--list", list, "List the registered claims");
  reproduce->callback([&] {
    action = [&] {
      if (list) return cmd_list_claims(g);
      if (claim_id.empty()) throw UsageError("reproduce needs a claim id or --list");
      return cmd_reproduce(g, claim_id);
    };
  });

  auto* selftest = app.add_subcommand("selftest", "Quick consistency checks");
  selftest->callback([&] { action = [&] { return cmd_selftest(g); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    return emit(g, action());
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const eigc::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const eigc::DomainError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const eigc::ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}
