// disponte: probabilistic queries over ALC knowledge bases.
//
//   disponte query KB QUERY [--method M] [--engine E] [--timeout S] [--json] [--dot PATH]
//   disponte gen N [--random --seed S]
//   disponte bench MAX_N [--method M] [--engine E] [--timeout S] [--json]
//   disponte check KB

#include <charconv>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "disponte/generate.h"
#include "disponte/parser.h"
#include "disponte/semantics.h"
#include "disponte/tableau.h"

namespace {

using disponte::KbSource;
using disponte::QueryConfig;
using disponte::QueryResult;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitResource = 2;

struct Options {
  std::string method = "glassbox";
  std::string engine = "bdd";
  double timeout = 600.0;
  std::size_t tableau_budget = 100000;
  std::size_t hst_budget = 100000;
  std::size_t world_limit = disponte::kDefaultWorldLimit;
  bool json = false;
  std::string dot;
  std::uint64_t seed = 1;
  bool random = false;
};

QueryConfig MakeConfig(const Options& o) {
  QueryConfig c;
  c.method = disponte::ParseMethod(o.method);
  c.engine = disponte::ParseEngine(o.engine);
  c.limits.tableau_node_budget = o.tableau_budget;
  c.limits.hst_node_budget = o.hst_budget;
  c.limits.deadline = disponte::Deadline::After(std::chrono::duration<double>(o.timeout));
  c.world_limit = o.world_limit;
  return c;
}

json ConfigJson(const Options& o) {
  return json{{"method", o.method},
              {"engine", o.engine},
              {"timeout_s", o.timeout},
              {"tableau_node_budget", o.tableau_budget},
              {"hst_node_budget", o.hst_budget}};
}

std::string Shortest(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return ec == std::errc() ? std::string(buf, end) : std::to_string(v);
}

KbSource LoadKb(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return disponte::ParseKbSource(text.str());
}

int ReportResourceError(const disponte::ResourceLimitError& e, const Options& o) {
  const auto& s = e.stats();
  if (o.json) {
    json out{{"error", e.what()},
             {"stats",
              {{"tableau_calls", s.tableau_calls},
               {"hst_nodes", s.hst_nodes},
               {"justifications", s.justifications}}},
             {"config", ConfigJson(o)}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cerr << "resource limit: " << e.what() << " (tableau calls " << s.tableau_calls
              << ", hst nodes " << s.hst_nodes << ", justifications " << s.justifications
              << ")\n";
  }
  return kExitResource;
}

int RunQuery(const std::string& kb_path, const std::string& query_text, const Options& o) {
  std::optional<KbSource> loaded;
  try {
    loaded = LoadKb(kb_path);
  } catch (const disponte::ParseError& e) {
    std::cerr << kb_path << ":" << e.what() << "\n";
    return kExitInput;
  }
  const KbSource& source = *loaded;
  const disponte::Query query = disponte::ParseQuery(query_text);
  const QueryResult r = disponte::ProbabilityQuery(source.kb, query, MakeConfig(o));
  const auto& kb = source.kb;

  if (!o.dot.empty() && r.bdd) {
    std::ofstream dot(o.dot);
    if (!dot) throw std::runtime_error("cannot write " + o.dot);
    r.bdd->WriteDot(dot, r.root);
  }

  if (o.json) {
    json justs = json::array();
    for (const auto& j : r.covering.justifications) {
      json axioms = json::array();
      for (auto i : j) {
        axioms.push_back({{"index", i}, {"line", source.lines[i]}, {"text", ToText(kb[i])}});
      }
      justs.push_back(std::move(axioms));
    }
    json out{{"probability", r.probability},
             {"justifications", std::move(justs)},
             {"formula", ToText(r.formula)},
             {"bdd_nodes", r.bdd_nodes},
             {"time_ms", std::chrono::duration<double, std::milli>(r.elapsed).count()},
             {"config", ConfigJson(o)}};
    std::cout << out.dump(2) << "\n";
    return kExitOk;
  }

  std::cout << "query: " << ToText(query) << "\n";
  std::cout << "probability: " << Shortest(r.probability) << "\n";
  if (o.engine == "bdd") {
    std::cout << "justifications: " << r.covering.justifications.size() << "\n";
    for (std::size_t n = 0; n < r.covering.justifications.size(); ++n) {
      std::cout << "  #" << n + 1 << "\n";
      for (auto i : r.covering.justifications[n]) {
        std::cout << "    line " << source.lines[i] << ": " << ToText(kb[i]) << "\n";
      }
    }
    std::cout << "formula: " << ToText(r.formula) << "\n";
    std::cout << "bdd nodes: " << r.bdd_nodes << "\n";
  }
  std::printf("time: %.3f ms\n", std::chrono::duration<double, std::milli>(r.elapsed).count());
  return kExitOk;
}

int RunGen(int n, const Options& o) {
  if (o.random) {
    std::mt19937_64 rng(o.seed);
    const auto kb = disponte::GenerateRandomKb(rng);
    std::cout << "# random KB, seed " << o.seed << "\n"
              << "# query: " << ToText(disponte::GenerateRandomQuery(rng)) << "\n"
              << disponte::SerializeKb(kb);
    return kExitOk;
  }
  const auto kb = disponte::GenerateSynthetic(n);
  std::cout << "# query: " << ToText(disponte::SyntheticQuery(n)) << "\n"
            << disponte::SerializeKb(kb);
  return kExitOk;
}

int RunBench(int max_n, const Options& o) {
  json rows = json::array();
  if (!o.json) std::printf("%4s %12s %10s %10s %s\n", "n", "time_s", "justs", "bdd_nodes", "probability");
  for (int n = 2; n <= max_n; n += 2) {
    const auto kb = disponte::GenerateSynthetic(n);
    const auto start = std::chrono::steady_clock::now();
    try {
      // Each row gets its own deadline.
      const QueryResult r = disponte::ProbabilityQuery(kb, disponte::SyntheticQuery(n), MakeConfig(o));
      const double secs = r.elapsed.count();
      if (o.json) {
        rows.push_back({{"n", n},
                        {"time_s", secs},
                        {"justifications", r.covering.justifications.size()},
                        {"bdd_nodes", r.bdd_nodes},
                        {"probability", r.probability}});
      } else {
        std::printf("%4d %12.4f %10zu %10zu %s\n", n, secs, r.covering.justifications.size(),
                    r.bdd_nodes, Shortest(r.probability).c_str());
      }
    } catch (const disponte::ResourceLimitError&) {
      const double secs =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      if (o.json) {
        rows.push_back({{"n", n}, {"time_s", secs}, {"timeout", true}});
      } else {
        std::printf("%4d %12s %10s %10s %s\n", n, "--", "--", "--", "--");
      }
    } catch (const std::length_error&) {
      if (o.json) {
        rows.push_back({{"n", n}, {"timeout", true}});
      } else {
        std::printf("%4d %12s %10s %10s %s\n", n, "--", "--", "--", "--");
      }
    }
    std::fflush(stdout);
  }
  if (o.json) std::cout << json{{"rows", rows}, {"config", ConfigJson(o)}}.dump(2) << "\n";
  return kExitOk;
}

int RunCheck(const std::string& kb_path, const Options& o) {
  std::optional<KbSource> loaded;
  try {
    loaded = LoadKb(kb_path);
  } catch (const disponte::ParseError& e) {
    std::cerr << kb_path << ":" << e.what() << "\n";
    return kExitInput;
  }
  const KbSource& source = *loaded;
  disponte::Tableau tableau(source.kb, MakeConfig(o).limits);
  const bool ok = tableau.IsConsistent(source.kb.all_indices());
  if (o.json) {
    std::cout << json{{"consistent", ok}, {"axioms", source.kb.size()}}.dump(2) << "\n";
  } else {
    std::cout << (ok ? "consistent" : "inconsistent") << "\n";
  }
  return kExitOk;
}

void AddLimitFlags(CLI::App* cmd, Options& o) {
  cmd->add_option("--timeout", o.timeout, "Per-query timeout in seconds")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--tableau-budget", o.tableau_budget, "Completion graph node budget")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--hst-budget", o.hst_budget, "Hitting set tree node budget")
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--json", o.json, "Emit JSON");
}

void AddQueryFlags(CLI::App* cmd, Options& o) {
  cmd->add_option("--method", o.method, "Justification method")
      ->check(CLI::IsMember({"glassbox", "blackbox"}));
  cmd->add_option("--engine", o.engine, "Probability engine")
      ->check(CLI::IsMember({"bdd", "bruteforce"}));
  cmd->add_option("--world-limit", o.world_limit,
                  "Max probabilistic axioms for the brute-force engine");
  AddLimitFlags(cmd, o);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Probabilistic reasoning over ALC knowledge bases"};
  app.require_subcommand(1);
  Options o;

  std::string kb_path, query_text;
  int n = 0;

  auto* query = app.add_subcommand("query", "Compute the probability of a query");
  query->add_option("kb", kb_path, "Knowledge base file")->required();
  query->add_option("query", query_text, "Query, e.g. \"a : C\" or \"C <= D\"")->required();
  query->add_option("--dot", o.dot, "Write the BDD in Graphviz format");
  AddQueryFlags(query, o);

  auto* gen = app.add_subcommand("gen", "Print a synthetic benchmark KB");
  gen->add_option("n", n, "Number of layers")->check(CLI::PositiveNumber);
  gen->add_flag("--random", o.random, "Random KB instead of the layered one");
  gen->add_option("--seed", o.seed, "Seed for --random");

  auto* bench = app.add_subcommand("bench", "Run the layered benchmark for n = 2, 4, ..., N");
  bench->add_option("max_n", n, "Largest n")->required()->check(CLI::PositiveNumber);
  AddQueryFlags(bench, o);

  auto* check = app.add_subcommand("check", "Check KB consistency");
  check->add_option("kb", kb_path, "Knowledge base file")->required();
  AddLimitFlags(check, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*query) return RunQuery(kb_path, query_text, o);
    if (*gen) {
      if (!o.random && n < 1) {
        std::cerr << "gen: N is required unless --random is given\n";
        return kExitInput;
      }
      return RunGen(n, o);
    }
    if (*bench) return RunBench(n, o);
    if (*check) return RunCheck(kb_path, o);
  } catch (const disponte::ParseError& e) {
    std::cerr << "query:" << e.what() << "\n";
    return kExitInput;
  } catch (const disponte::ResourceLimitError& e) {
    return ReportResourceError(e, o);
  } catch (const std::length_error& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}
