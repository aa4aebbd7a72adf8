//
// Copyright 2026 The lipfilter Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

// lipfilter: command-line front end. Every subcommand prints one JSON
// document on stdout. Exit codes: 0 success, 1 domain error (with
// {"error": ...}), 2 usage error.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lipfilter/bench.hpp"
#include "lipfilter/errors.hpp"
#include "lipfilter/filter_l0.hpp"
#include "lipfilter/filter_l1.hpp"
#include "lipfilter/function.hpp"
#include "lipfilter/function_io.hpp"
#include "lipfilter/hard_instances.hpp"
#include "lipfilter/oracles.hpp"
#include "lipfilter/privacy.hpp"
#include "lipfilter/tester.hpp"

namespace lipfilter {
namespace {

using Json = nlohmann::ordered_json;

constexpr std::uint64_t kMaxQueryAll = std::uint64_t{1} << 20;
constexpr int kMaxTableDimension = 16;

// Options shared by the subcommands that take a function.
struct FunctionArgs {
  std::string fn;
  std::string domain;
  std::string range;
  bool clip = false;
};

void AddFunctionOptions(CLI::App* app, FunctionArgs& args) {
  app->add_option("--fn", args.fn,
                  "function table JSON file, or an expression over x1..xd")
      ->required();
  app->add_option("--domain", args.domain,
                  "n,d for [n]^d ({0,1}^d when n = 2); required for expressions");
  app->add_option("--r", args.range,
                  "range [0, r] of an expression (rational)");
  app->add_flag("--clip", args.clip,
                "clip expression values into [0, r] instead of rejecting them");
}

std::shared_ptr<const Graph> ParseDomain(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) {
    throw Error(ErrorCode::kInvalidParam, "--domain must be n,d");
  }
  int n = 0;
  int d = 0;
  try {
    n = std::stoi(text.substr(0, comma));
    d = std::stoi(text.substr(comma + 1));
  } catch (const std::exception&) {
    throw Error(ErrorCode::kInvalidParam, "--domain must be n,d");
  }
  if (n == 2) return std::make_shared<const Graph>(Graph::Hypercube(d));
  return std::make_shared<const Graph>(Graph::Hypergrid(n, d));
}

OraclePtr LoadFunction(const FunctionArgs& args) {
  std::optional<std::shared_ptr<const Graph>> domain;
  if (!args.domain.empty()) domain = ParseDomain(args.domain);
  if (std::filesystem::is_regular_file(args.fn)) {
    OraclePtr f = FunctionFromJson(ReadFile(args.fn));
    if (domain && ((*domain)->side() != f->graph().side() ||
                   (*domain)->dimension() != f->graph().dimension())) {
      throw Error(ErrorCode::kDimensionError,
                  "--domain does not match the domain of " + args.fn);
    }
    if (!args.range.empty()) {
      f = Clip(f, 0, Rational::Parse(args.range));
    }
    return f;
  }
  if (!domain) {
    throw Error(ErrorCode::kInvalidParam,
                "--domain is required when --fn is an expression");
  }
  if (args.range.empty()) {
    throw Error(ErrorCode::kInvalidParam,
                "--r is required when --fn is an expression");
  }
  const Rational r = Rational::Parse(args.range);
  const Graph& g = **domain;
  const int dim = g.kind() == GraphKind::kExplicit ? 1 : g.dimension();
  ExprProgram program = ExprProgram::Parse(args.fn, dim);
  if (args.clip) {
    program = ExprProgram::Parse(
        "clip(" + args.fn + ", 0, " + r.ToString() + ")", dim);
  }
  return std::make_shared<ExpressionOracle>(*domain, Rational(0), r,
                                            std::move(program));
}

Seed SeedOrRandom(const std::string& hex) {
  return hex.empty() ? Seed::Random() : Seed::FromHex(hex);
}

Json ValueJson(const Value& v) { return ValueToString(v); }

Json RationalJson(const Rational& v) { return v.ToString(); }

Json DomainJson(const Graph& g) { return Json::parse(GraphToJson(g)); }

Vertex ParseVertex(const Graph& g, const std::string& name) {
  return g.ParseCanonicalName(name);
}

// "a..b" or "a,b,c".
std::vector<int> ParseIntList(const std::string& text) {
  std::vector<int> out;
  try {
    if (const auto dots = text.find(".."); dots != std::string::npos) {
      const int lo = std::stoi(text.substr(0, dots));
      const int hi = std::stoi(text.substr(dots + 2));
      if (lo > hi) throw Error(ErrorCode::kInvalidParam, "empty range " + text);
      for (int v = lo; v <= hi; ++v) out.push_back(v);
      return out;
    }
    std::size_t start = 0;
    while (start <= text.size()) {
      const auto comma = text.find(',', start);
      out.push_back(std::stoi(text.substr(start, comma - start)));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::kInvalidParam, "bad integer list \"" + text + "\"");
  }
  return out;
}

// filter ------------------------------------------------------------------

struct FilterArgs {
  FunctionArgs fn;
  std::string kind;
  std::string slack = "1/100";
  std::string seed;
  std::vector<std::string> queries{"all"};
};

Json RunFilter(const FilterArgs& args) {
  OraclePtr f = LoadFunction(args.fn);
  const Graph& g = f->graph();
  const Seed seed = SeedOrRandom(args.seed);

  std::vector<Vertex> targets;
  for (const std::string& q : args.queries) {
    if (q == "all") {
      if (!g.vertex_count_fits() || g.vertex_count() > kMaxQueryAll) {
        throw Error(ErrorCode::kSizeExceeded,
                    "--query all supports at most 2^20 vertices");
      }
      for (std::uint64_t x = 0; x < g.vertex_count(); ++x) {
        targets.push_back(Vertex{x});
      }
    } else {
      targets.push_back(ParseVertex(g, q));
    }
  }

  Json out;
  out["kind"] = args.kind;
  out["domain"] = DomainJson(g);
  out["r"] = RationalJson(f->range_hi());
  out["seed"] = seed.ToHex();
  Json rows = Json::array();
  f->ResetLookups();
  auto record = [&](Vertex x, const Value& v, std::uint64_t before) {
    rows.push_back({{"vertex", g.CanonicalName(x)},
                    {"value", ValueJson(v)},
                    {"lookups", f->lookups() - before}});
  };
  if (args.kind == "l0") {
    LocalFilterL0 filter(f, seed);
    for (Vertex x : targets) {
      const std::uint64_t before = f->lookups();
      record(x, filter.Query(x), before);
    }
  } else {
    const Rational slack = Rational::Parse(args.slack);
    out["slack"] = RationalJson(slack);
    LocalFilterL1 filter(f, slack, seed);
    out["rounds"] = filter.schedule().rounds;
    for (Vertex x : targets) {
      const std::uint64_t before = f->lookups();
      record(x, filter.Query(x), before);
    }
  }
  out["queries"] = std::move(rows);
  out["total_lookups"] = f->lookups();
  return out;
}

// mechanism ---------------------------------------------------------------

struct MechanismArgs {
  FunctionArgs fn;
  std::string kind = "binary-search";
  std::string query;
  std::string range;
  double eps = 1.0;
  double delta = 0.001;
  std::string seed;
  std::string noise_seed;
  bool no_noise = false;
};

Json RunMechanism(const MechanismArgs& args) {
  OraclePtr f = LoadFunction(args.fn);
  const Graph& g = f->graph();
  const Vertex x = ParseVertex(g, args.query);
  const Seed seed = SeedOrRandom(args.seed);
  const Seed noise_seed = SeedOrRandom(args.noise_seed);
  LaplaceNoise noise(noise_seed.DeriveU64("laplace", 0));
  MechanismOptions options;
  options.add_noise = !args.no_noise;

  std::optional<Rational> r;
  if (!args.range.empty() && args.range != "inf") r = Rational::Parse(args.range);

  Json out;
  out["query"] = g.CanonicalName(x);
  out["mechanism"] = args.kind;
  MechanismResult result;
  if (args.kind == "binary-search") {
    const BinarySearchParams p = MakeBinarySearchParams(g, r, args.eps, args.delta);
    result = BinarySearchMechanism(f, x, r, args.eps, args.delta, seed, noise,
                                   options);
    out["r"] = RationalJson(p.r);
    out["alpha"] = p.alpha;
  } else {
    const Rational range = r ? *r : f->range_hi();
    result = FilterMechanism(f, x, range, args.eps, args.delta, seed, noise,
                             options);
    out["r"] = RationalJson(range);
  }
  out["value"] = result.value;
  out["filtered"] = RationalJson(result.filtered);
  out["lookups"] = result.lookups;
  out["iterations"] = result.iterations;
  out["noise"] = options.add_noise;
  out["seed"] = seed.ToHex();
  out["noise_seed"] = noise_seed.ToHex();
  return out;
}

// test --------------------------------------------------------------------

struct TestArgs {
  FunctionArgs fn;
  TesterParams params;
  std::string seed;
};

Json RunTest(const TestArgs& args) {
  OraclePtr f = LoadFunction(args.fn);
  const Seed seed = SeedOrRandom(args.seed);
  const TestResult result = TolerantTest(f, args.params, seed);
  Json runs = Json::array();
  for (const TestRun& run : result.runs) {
    runs.push_back({{"decision", run.accept ? "accept" : "reject"},
                    {"omega_hat", run.omega_hat},
                    {"interval", {RationalJson(run.interval_lo),
                                  RationalJson(run.interval_hi)}},
                    {"pivot", f->graph().CanonicalName(run.pivot)},
                    {"samples", run.samples},
                    {"disagreements", run.disagreements},
                    {"lookups", run.lookups}});
  }
  Json out;
  out["decision"] = result.accept ? "accept" : "reject";
  out["omega_hat"] = result.runs.front().omega_hat;
  out["interval"] = runs.front()["interval"];
  out["lookups"] = result.lookups;
  out["eps"] = args.params.eps;
  out["samples"] = args.params.samples == 0 ? DefaultSampleCount(args.params.eps)
                                            : args.params.samples;
  out["reps"] = args.params.reps;
  out["seed"] = seed.ToHex();
  out["runs"] = std::move(runs);
  return out;
}

// bench -------------------------------------------------------------------

struct BenchArgs {
  std::string kind = "l0";
  std::string d = "8..20";
  std::string r = "2";
  std::uint64_t queries = 2000;
  std::string slack = "1/100";
  std::string seed;
};

Json RunBench(const BenchArgs& args) {
  const Seed seed = SeedOrRandom(args.seed);
  const FilterKind kind = args.kind == "l0" ? FilterKind::kL0 : FilterKind::kL1;
  const Rational slack = Rational::Parse(args.slack);
  const FilterOptions options;
  Json rows = Json::array();
  for (int r : ParseIntList(args.r)) {
    for (int d : ParseIntList(args.d)) {
      const LookupStats s =
          MeasureHardInstanceLookups(kind, d, r, args.queries, seed, options, slack);
      rows.push_back({{"d", s.d},
                      {"r", s.r},
                      {"mean_lookups", s.mean_lookups},
                      {"max_lookups", s.max_lookups}});
    }
  }
  Json out;
  out["kind"] = args.kind;
  out["instance"] = "hard b=1, m=8";
  out["queries"] = args.queries;
  if (kind == FilterKind::kL1) out["slack"] = RationalJson(slack);
  out["ball_budget"] = options.ball_budget;
  out["seed"] = seed.ToHex();
  out["rows"] = std::move(rows);
  return out;
}

// gen-hard ----------------------------------------------------------------

struct GenHardArgs {
  int d = 0;
  int r = 2;
  int b = 0;
  int m = 1;
  bool enforce_separation = false;
  bool anchors = false;
  int max_retries = kDefaultHardRetries;
  std::string seed;
};

Json RunGenHard(const GenHardArgs& args) {
  const Seed seed = SeedOrRandom(args.seed);
  std::mt19937_64 rng(seed.DeriveU64("gen-hard", 0));
  const HardInstance inst = SampleHardInstance(
      args.d, args.r, args.b, args.m, rng, args.enforce_separation,
      args.max_retries);
  const Graph& g = *inst.graph;
  Json out;
  if (!args.anchors && args.d <= kMaxTableDimension) {
    out = Json::parse(FunctionToJson(g, 0, Rational(args.r),
                                     Materialize(*inst.Oracle())));
  } else {
    Json a = Json::array();
    Json a_prime = Json::array();
    for (Vertex v : inst.a) a.push_back(g.CanonicalName(v));
    for (Vertex v : inst.a_prime) a_prime.push_back(g.CanonicalName(v));
    out["domain"] = DomainJson(g);
    out["r"] = RationalJson(Rational(args.r));
    out["A"] = std::move(a);
    out["A'"] = std::move(a_prime);
  }
  out["b"] = args.b;
  out["m"] = args.m;
  out["separated"] = CheckSeparation(inst);
  out["seed"] = seed.ToHex();
  return out;
}

// oracle ------------------------------------------------------------------

struct OracleArgs {
  FunctionArgs fn;
  bool l0 = false;
  bool l1 = false;
  std::size_t cap = 64;
};

Json RunOracle(const OracleArgs& args) {
  OraclePtr f = LoadFunction(args.fn);
  const Graph& g = f->graph();
  const ValueTable table = Materialize(*f);
  Json out;
  if (args.l0) {
    const VertexCover cover = ViolationCover(g, table, args.cap);
    Json names = Json::array();
    for (std::uint64_t v : cover.vertices) names.push_back(g.CanonicalName(Vertex{v}));
    out["l0"] = RationalJson(ExactL0Distance(g, table, args.cap));
    out["cover"] = std::move(names);
  }
  if (args.l1) {
    const L1Distance d = ExactL1Distance(g, table);
    Json witness = Json::object();
    for (std::uint64_t x = 0; x < d.witness.size(); ++x) {
      witness[g.CanonicalName(Vertex{x})] = ValueJson(d.witness[x]);
    }
    out["l1"] = RationalJson(d.distance);
    out["witness"] = std::move(witness);
  }
  return out;
}

}  // namespace
}  // namespace lipfilter

int main(int argc, char** argv) {
  using namespace lipfilter;
  CLI::App app{"Local Lipschitz filters, private mechanisms and testers"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "lipfilter 0.1.0");

  FilterArgs filter;
  auto* filter_cmd = app.add_subcommand("filter", "query a local filter");
  AddFunctionOptions(filter_cmd, filter.fn);
  filter_cmd->add_option("--kind", filter.kind, "l0 or l1")
      ->required()
      ->check(CLI::IsMember({"l0", "l1"}));
  filter_cmd->add_option("--slack", filter.slack, "l1 slack (rational)")->capture_default_str();
  filter_cmd->add_option("--seed", filter.seed, "64 hex digits")
      ->envname("LIPFILTER_SEED");
  filter_cmd->add_option("--query", filter.queries,
                         "canonical vertex name(s), or all")->capture_default_str();

  MechanismArgs mech;
  auto* mech_cmd = app.add_subcommand("mechanism", "private release of f(x)");
  AddFunctionOptions(mech_cmd, mech.fn);
  mech_cmd->add_option("--kind", mech.kind, "binary-search or filter")->capture_default_str()
      ->check(CLI::IsMember({"binary-search", "filter"}));
  mech_cmd->add_option("--query", mech.query, "canonical vertex name")->required();
  mech_cmd->add_option("--range", mech.range,
                       "claimed range bound r (rational or inf)");
  mech_cmd->add_option("--eps", mech.eps, "privacy parameter")->capture_default_str();
  mech_cmd->add_option("--delta", mech.delta, "failure probability")->capture_default_str();
  mech_cmd->add_option("--seed", mech.seed, "filter seed, 64 hex digits")
      ->envname("LIPFILTER_SEED");
  mech_cmd->add_option("--noise-seed", mech.noise_seed, "noise seed, 64 hex digits");
  mech_cmd->add_flag("--no-noise", mech.no_noise, "disable Laplace noise (test mode)");

  TestArgs test;
  auto* test_cmd = app.add_subcommand("test", "tolerant Lipschitz tester");
  AddFunctionOptions(test_cmd, test.fn);
  test_cmd->add_option("--eps", test.params.eps, "distance parameter")->capture_default_str();
  test_cmd->add_option("--samples", test.params.samples,
                       "samples per run (0 = (1500/eps)^2)")->capture_default_str();
  test_cmd->add_option("--reps", test.params.reps, "independent runs (odd)")->capture_default_str();
  test_cmd->add_flag("--majority-early-stop", test.params.majority_early_stop,
                     "stop once a strict majority agrees");
  test_cmd->add_flag("--early-decision", test.params.early_decision,
                     "stop a run once its decision is fixed");
  test_cmd->add_option("--seed", test.seed, "64 hex digits")->envname("LIPFILTER_SEED");

  BenchArgs bench;
  auto* bench_cmd =
      app.add_subcommand("bench", "lookups per query on hard instances");
  bench_cmd->add_option("--kind", bench.kind, "l0 or l1")->capture_default_str()
      ->check(CLI::IsMember({"l0", "l1"}));
  bench_cmd->add_option("--d", bench.d, "dimensions, a..b or a,b,c")->capture_default_str();
  bench_cmd->add_option("--r", bench.r, "ranges (even), a..b or a,b,c")->capture_default_str();
  bench_cmd->add_option("--queries", bench.queries, "queries per row")->capture_default_str();
  bench_cmd->add_option("--slack", bench.slack, "l1 slack")->capture_default_str();
  bench_cmd->add_option("--seed", bench.seed, "64 hex digits")->envname("LIPFILTER_SEED");

  GenHardArgs gen;
  auto* gen_cmd = app.add_subcommand("gen-hard", "sample a hard instance");
  gen_cmd->add_option("--d", gen.d, "dimension")->required();
  gen_cmd->add_option("--r", gen.r, "even range")->capture_default_str();
  gen_cmd->add_option("--b", gen.b, "0 or 1")->capture_default_str();
  gen_cmd->add_option("--m", gen.m, "anchor pairs")->capture_default_str();
  gen_cmd->add_flag("--enforce-separation", gen.enforce_separation,
                    "resample until anchors are separated");
  gen_cmd->add_option("--max-retries", gen.max_retries, "resampling budget")->capture_default_str();
  gen_cmd->add_flag("--anchors", gen.anchors,
                    "emit anchors only, even for small d");
  gen_cmd->add_option("--seed", gen.seed, "64 hex digits")->envname("LIPFILTER_SEED");

  OracleArgs oracle;
  auto* oracle_cmd = app.add_subcommand("oracle", "exact distance to Lipschitz");
  AddFunctionOptions(oracle_cmd, oracle.fn);
  oracle_cmd->add_flag("--l0", oracle.l0, "relative Hamming distance");
  oracle_cmd->add_flag("--l1", oracle.l1, "normalized l1 distance");
  oracle_cmd->add_option("--cap", oracle.cap, "vertex cover size cap")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (oracle_cmd->parsed() && !oracle.l0 && !oracle.l1) {
    std::cerr << "oracle: one of --l0, --l1 is required\n";
    return 2;
  }

  try {
    nlohmann::ordered_json out;
    if (filter_cmd->parsed()) out = RunFilter(filter);
    if (mech_cmd->parsed()) out = RunMechanism(mech);
    if (test_cmd->parsed()) out = RunTest(test);
    if (bench_cmd->parsed()) out = RunBench(bench);
    if (gen_cmd->parsed()) out = RunGenHard(gen);
    if (oracle_cmd->parsed()) out = RunOracle(oracle);
    std::cout << out.dump(2) << "\n";
    return 0;
  } catch (const Error& e) {
    nlohmann::ordered_json err;
    err["error"] = e.what();
    err["code"] = std::string(ErrorCodeName(e.code()));
    std::cout << err.dump(2) << "\n";
    return 1;
  }
}
