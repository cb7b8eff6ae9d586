#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <json.hpp>
#include <string>

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(EIGC_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int st = pclose(pipe);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

nlohmann::json parse(const Run& r) { return nlohmann::json::parse(r.out); }

std::string data(const std::string& name) { return std::string(EIGC_TEST_DATA_DIR) + "/" + name; }

}  // namespace

TEST(Cli, ChartableSl2F5) {
  const auto r = run("chartable --group sl2:5 --method generic");
  ASSERT_EQ(r.status, 0);
  const auto j = parse(r);
  EXPECT_EQ(j["table"]["irreducibles"].size(), 9u);
  EXPECT_EQ(j["table"]["order"], 120);
  EXPECT_TRUE(j["valid"].get<bool>());
  EXPECT_TRUE(j["table"]["dixon_prime"].is_number());
  const auto& v = j["table"]["irreducibles"][0]["values"][0];
  EXPECT_TRUE(v.contains("conductor"));
  EXPECT_TRUE(v["coeffs"].is_array());
}

TEST(Cli, ClosedFormTableHasNoDixonPrime) {
  const auto r = run("chartable --group gl2:3 --method closed-form");
  ASSERT_EQ(r.status, 0);
  EXPECT_TRUE(parse(r)["table"]["dixon_prime"].is_null());
  EXPECT_EQ(run("chartable --group sl2:3 --method closed-form").status, 64);
}

TEST(Cli, PreceqSearchPgl2F5) {
  const auto r = run("preceq-search --group pgl2:5 --gap 2");
  ASSERT_EQ(r.status, 0);
  bool found = false;
  const auto j = parse(r);
  for (const auto& p : j["pairs"]) {
    found = found || (p["small"]["dim"] == 4 && p["big"]["dim"] == 6);
  }
  EXPECT_TRUE(found);
  EXPECT_TRUE(parse(run("preceq-search --group sym:5 --gap 1"))["pairs"].empty());
}

TEST(Cli, PreceqExpressions) {
  const auto r = run("preceq --group sl2:5 --rep1 'sym:3(dim:2:0)' --rep2 'sym:5(dim:2:0)'");
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(parse(r)["result"]["holds"].get<bool>());
  EXPECT_FALSE(parse(r)["summand"].get<bool>());
  const auto back = run("preceq --group sl2:5 --rep1 'sym:5(dim:2:0)' --rep2 'sym:3(dim:2:0)'");
  EXPECT_EQ(back.status, 1);
  EXPECT_TRUE(parse(back)["result"].contains("witness"));
  EXPECT_EQ(run("preceq --group sl2:5 --rep1 'dim:2' --rep2 triv").status, 64);
  EXPECT_EQ(run("preceq --group sl2:5 --rep1 'nosuch' --rep2 triv").status, 64);
  const auto lab = run("preceq --group gl2:5 --rep1 'C(1)' --rep2 'tensor(P(0, 3), triv)'");
  EXPECT_EQ(lab.status, 0);
}

TEST(Cli, LambdaDecomposes) {
  const auto r = run("lambda --group sym:3 --char 'sum(dim:2,triv)' --op sym:2 --eigen");
  ASSERT_EQ(r.status, 0);
  const auto j = parse(r);
  EXPECT_EQ(j["result"]["dim"], 6);
  std::int64_t total = 0;
  for (const auto& d : j.at("decomposition")) total += d["dim"].get<int>() * d["multiplicity"].get<int>();
  EXPECT_EQ(total, 6);
  EXPECT_EQ(j["eigenvalues"].size(), 3u);
  EXPECT_EQ(run("lambda --group sym:3 --char triv --op frob:2").status, 64);
}

TEST(Cli, Gl2Commands) {
  const auto ok = run("gl2 verify --lhs 'Sym[2](Sym[3](pi))' --rhs 'Sym[6](pi) + w^2*Sym[2](pi)'");
  EXPECT_EQ(ok.status, 0);
  EXPECT_TRUE(parse(ok)["result"]["equal"].get<bool>());
  const auto bad = run("gl2 verify --lhs 'pi*pi' --rhs 'Sym[2](pi)'");
  EXPECT_EQ(bad.status, 1);
  EXPECT_EQ(parse(bad)["result"]["difference"], "w");
  EXPECT_EQ(run("gl2 verify --lhs 'pi +' --rhs 'pi'").status, 64);
  const auto s6 = run("gl2 sym6-type --case tetrahedral");
  ASSERT_EQ(s6.status, 0);
  EXPECT_EQ(parse(s6)["result"]["types"], nlohmann::json::parse("[[3,3,1]]"));
  EXPECT_EQ(run("gl2 sym6-type --case cubic").status, 64);
}

TEST(Cli, SatakeCheck) {
  const auto ok = run("satake check --small " + data("trivial.jsonl") + " --big " +
                      data("unitary_gl2.jsonl") + " --sym-big 2");
  EXPECT_EQ(ok.status, 0);
  EXPECT_TRUE(parse(ok)["result"]["verdict"].get<bool>());
  EXPECT_EQ(parse(ok)["result"]["primes_checked"], 20);
  const auto ladder = run("satake check --small " + data("unitary_gl2.jsonl") + " --big " +
                          data("unitary_gl2.jsonl") + " --sym-small 2 --sym-big 4");
  EXPECT_EQ(ladder.status, 0);
  const auto no = run("satake check --small " + data("minus_one.jsonl") + " --big " +
                      data("unitary_gl2.jsonl") + " --sym-big 2");
  EXPECT_EQ(no.status, 1);
  EXPECT_FALSE(parse(no)["result"]["failures"].empty());
  const auto few = run("satake check --small " + data("trivial.jsonl") + " --big " +
                       data("unitary_gl2.jsonl") + " --sym-big 2 --min-overlap 50");
  EXPECT_EQ(few.status, 1);
  EXPECT_TRUE(parse(few).contains("error"));
  EXPECT_EQ(run("satake check --small " + data("bad_prime.jsonl") + " --big " +
                data("unitary_gl2.jsonl")).status,
            64);
}

TEST(Cli, Reproduce) {
  const auto r = run("reproduce c-preceq-gl2f5");
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(parse(r)["claim"]["match"].get<bool>());
  EXPECT_FALSE(parse(r)["claim"]["statement"].get<std::string>().empty());
  const auto s = run("reproduce sym6-tetrahedral");
  EXPECT_EQ(s.status, 0);
  EXPECT_EQ(parse(s)["claim"]["observed"]["types"], nlohmann::json::parse("[[3,3,1]]"));
  EXPECT_EQ(run("reproduce nonexistent-id").status, 64);
  EXPECT_EQ(run("reproduce --list").status, 0);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("").status, 64);
  EXPECT_EQ(run("frobnicate").status, 64);
  EXPECT_EQ(run("chartable").status, 64);
  EXPECT_EQ(run("chartable --group nosuch:3").status, 64);
  EXPECT_EQ(run("--max-group-order 100 chartable --group sym:6").status, 2);
  EXPECT_EQ(run("--max-classes 4 chartable --group sym:5").status, 2);
  EXPECT_EQ(run("--help").status, 0);
}

TEST(Cli, DeterministicOutput) {
  for (const std::string args : {"reproduce lemma1-random", "preceq-search --group gl2:3",
                                 "--threads 3 preceq-search --group sl2:5 --gap any",
                                 "selftest --seed 7"}) {
    const auto a = run(args), b = run(args);
    EXPECT_EQ(a.status, b.status) << args;
    EXPECT_EQ(a.out, b.out) << args;
  }
  EXPECT_NE(run("--seed 1 reproduce lemma1-random").out, run("--seed 2 reproduce lemma1-random").out);
}

TEST(Cli, OutFile) {
  const std::string path = testing::TempDir() + "eigc_cli_out.json";
  ASSERT_EQ(run("--out " + path + " gl2 sym6-type --case octahedral").status, 0);
  FILE* f = fopen(path.c_str(), "r");
  ASSERT_NE(f, nullptr);
  std::string text;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), f)) > 0) text.append(buf.data(), n);
  fclose(f);
  EXPECT_EQ(nlohmann::json::parse(text)["result"]["types"], nlohmann::json::parse("[[4,2,1]]"));
}
