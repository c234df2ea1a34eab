// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include "disponte/bdd.h"
#include "disponte/generate.h"
#include "disponte/justify.h"
#include "disponte/parser.h"
#include "disponte/pinpoint.h"
#include "disponte/semantics.h"
#include "disponte/tableau.h"
#include "oracles.h"

namespace {

using namespace disponte;
using disponte::testing::EnumeratedProbability;
using disponte::testing::MinimalEntailingSubsets;
using disponte::testing::RandomMonotoneFormula;
using disponte::testing::ValuationOf;
using Clock = std::chrono::steady_clock;

const char* kCrime =
    "0.2 :: Nihilist <= GreatMan\n"
    "exists killed. Top <= Nihilist\n"
    "0.6 :: (raskolnikov, alyona) : killed\n"
    "0.7 :: (raskolnikov, lizaveta) : killed\n";

// Collects failure messages for one criterion.
struct Check {
  std::vector<std::string> failures;
  void Expect(bool ok, const std::string& what) {
    if (!ok && failures.size() < 5) failures.push_back(what);
    if (!ok) ++failed;
  }
  void Near(double got, double want, double tol, const std::string& what) {
    std::ostringstream msg;
    msg.precision(17);
    msg << what << ": got " << got << ", want " << want;
    Expect(std::fabs(got - want) <= tol, msg.str());
  }
  int failed = 0;
};

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

// 1. Crime KB: 0.176 under both engines and methods, covering set, < 1 s.
void Criterion1(Check& c) {
  const auto start = Clock::now();
  const KnowledgeBase kb = ParseKb(kCrime);
  const Query q = ParseQuery("raskolnikov : GreatMan");
  for (Method m : {Method::kGlassBox, Method::kBlackBox}) {
    for (Engine e : {Engine::kBdd, Engine::kBruteForce}) {
      QueryConfig config;
      config.method = m;
      config.engine = e;
      const QueryResult r = ProbabilityQuery(kb, q, config);
      c.Near(r.probability, 0.176, 1e-12,
             std::string(ToString(m)) + "/" + std::string(ToString(e)));
    }
    const CoveringSet cs = AllJustifications(kb, q, m);
    c.Expect(cs.justifications == std::vector<Justification>{{0, 1, 2}, {0, 1, 3}},
             "covering set under " + std::string(ToString(m)));
  }
  const double secs = Seconds(start);
  c.Expect(secs < 1.0, "runtime " + std::to_string(secs) + " s");
}

// 2. (x1 & x2) | (x1 & x3): 3 internal nodes, memo values 0.7, 0.88, result 0.176.
void Criterion2(Check& c) {
  BddManager m(3);
  const BddRef f = m.Or(m.And(m.Var(0), m.Var(1)), m.And(m.Var(0), m.Var(2)));
  c.Expect(m.NodeCount(f) == 3, "node count " + std::to_string(m.NodeCount(f)));
  const std::vector<double> p{0.2, 0.6, 0.7};
  std::unordered_map<BddRef, double, BddRefHash> memo;
  c.Near(m.Probability(f, p, &memo), 0.176, 1e-12, "probability");
  c.Expect(!m.IsTerminal(f) && m.Level(f) == 0, "root tests x1");
  if (!m.IsTerminal(f)) {
    const BddRef x2 = m.High(f);
    c.Expect(m.Level(x2) == 1 && m.Level(m.Low(x2)) == 2, "diagram shape");
    c.Near(memo[m.Low(x2)], 0.7, 1e-12, "x3 node");
    c.Near(memo[x2], 0.88, 1e-12, "x2 node");
    c.Near(memo[f], 0.176, 1e-12, "root node");
  }
}

// 3. DNF from the justifications is the same diagram as x1 & (x2 | x3).
void Criterion3(Check& c) {
  const KnowledgeBase kb = ParseKb(kCrime);
  const CoveringSet cs = AllJustifications(kb, ParseQuery("raskolnikov : GreatMan"), Method::kGlassBox);
  const MonotoneFormula dnf = FormulaFromJustifications(cs, kb);
  const MonotoneFormula compact = MonotoneFormula::And(
      {MonotoneFormula::Var(0), MonotoneFormula::Or({MonotoneFormula::Var(1), MonotoneFormula::Var(2)})});
  BddManager m(kb.probabilistic_count());
  c.Expect(ToText(dnf) == "(x1 & x2) | (x1 & x3)", "dnf text " + ToText(dnf));
  c.Expect(m.Equivalent(m.Build(dnf), m.Build(compact)), "diagrams differ");
}

// 4. Layered benchmark: 2^n justifications, 0.504^n, n = 8 within budget.
void Criterion4(Check& c) {
  for (int n : {2, 4, 6}) {
    for (Method m : {Method::kGlassBox, Method::kBlackBox}) {
      const auto cs = AllJustifications(GenerateSynthetic(n), SyntheticQuery(n), m);
      c.Expect(cs.justifications.size() == (std::size_t{1} << n),
               "n=" + std::to_string(n) + " gives " + std::to_string(cs.justifications.size()));
    }
  }
  for (int n = 1; n <= 5; ++n) {
    const KnowledgeBase kb = GenerateSynthetic(n);
    const double brute = ProbabilityBruteForce(kb, SyntheticQuery(n));
    const double pipeline = ProbabilityQuery(kb, SyntheticQuery(n), {}).probability;
    c.Near(pipeline, brute, 1e-9, "pipeline vs brute force n=" + std::to_string(n));
    c.Near(pipeline, std::pow(0.504, n), 1e-9, "0.504^n n=" + std::to_string(n));
  }
  QueryConfig config;
  config.limits.deadline = Deadline::After(std::chrono::seconds(600));
  const auto start = Clock::now();
  try {
    const QueryResult r = ProbabilityQuery(GenerateSynthetic(8), SyntheticQuery(8), config);
    c.Expect(r.covering.justifications.size() == 256, "n=8 justification count");
    c.Near(r.probability, std::pow(0.504, 8), 1e-9, "n=8 probability");
    std::printf("  n=8 finished in %.3f s\n", Seconds(start));
  } catch (const ResourceLimitError& e) {
    c.Expect(false, std::string("n=8: ") + e.what());
  }
}

// Prefers a query the whole KB entails, so the fuzz exercises non-empty covers.
Query PickQuery(std::mt19937_64& rng, const KnowledgeBase& kb, const RandomKbOptions& options) {
  const Tableau tableau(kb);
  Query q = GenerateRandomQuery(rng, options);
  for (int attempt = 0; attempt < 10; ++attempt) {
    if (tableau.Entails(kb.all_indices(), q)) return q;
    q = GenerateRandomQuery(rng, options);
  }
  return q;
}

// 5. 200 seeded random KBs against the brute-force and powerset oracles.
void Criterion5(Check& c) {
  RandomKbOptions options;
  options.max_axioms = 10;
  options.max_probabilistic = 8;
  std::mt19937_64 rng(20260101);
  int nonempty = 0;
  for (int i = 0; i < 200; ++i) {
    const KnowledgeBase kb = GenerateRandomKb(rng, options);
    const Query q = PickQuery(rng, kb, options);
    const std::string tag = "kb #" + std::to_string(i);
    const double brute = ProbabilityBruteForce(kb, q);
    c.Near(ProbabilityQuery(kb, q, {}).probability, brute, 1e-9, tag + " probability");
    const auto oracle = MinimalEntailingSubsets(kb, q);
    const auto glass = AllJustifications(kb, q, Method::kGlassBox).justifications;
    const auto black = AllJustifications(kb, q, Method::kBlackBox).justifications;
    c.Expect(glass == oracle, tag + " glassbox vs powerset");
    c.Expect(black == glass, tag + " blackbox vs glassbox");
    nonempty += !oracle.empty();
  }
  std::printf("  %d of 200 queries entailed\n", nonempty);
  c.Expect(nonempty >= 50, "too few entailed queries: " + std::to_string(nonempty));
}

// 6. Invariant suites.
void Criterion6(Check& c) {
  std::mt19937_64 rng(6);
  RandomKbOptions options;

  // Minimality and antichain.
  for (int i = 0; i < 100; ++i) {
    const KnowledgeBase kb = GenerateRandomKb(rng, options);
    const Query q = PickQuery(rng, kb, options);
    const Tableau tableau(kb);
    const auto js = AllJustifications(kb, q, Method::kGlassBox).justifications;
    for (const auto& j : js) {
      c.Expect(tableau.Entails(j, q), "justification does not entail");
      for (auto a : j) {
        AxiomSet smaller = j;
        smaller.erase(a);
        c.Expect(!tableau.Entails(smaller, q), "justification not minimal");
      }
      for (const auto& k : js) {
        c.Expect(&j == &k || !std::includes(k.begin(), k.end(), j.begin(), j.end()),
                 "not an antichain");
      }
    }
  }

  // BDD canonicity: equal truth tables iff equal references.
  for (std::size_t vars = 1; vars <= 6; ++vars) {
    BddManager m(vars);
    std::map<std::uint64_t, BddRef> by_table;
    for (int i = 0; i < 150; ++i) {
      const MonotoneFormula f = RandomMonotoneFormula(rng, vars, 3);
      const BddRef r = (i % 3 == 0) ? m.Not(m.Build(f)) : m.Build(f);
      std::uint64_t table = 0;
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << vars); ++bits) {
        std::vector<bool> v(vars);
        for (std::size_t k = 0; k < vars; ++k) v[k] = (bits >> k) & 1u;
        const bool truth = Satisfies(f, ValuationOf(bits, vars)) != (i % 3 == 0);
        c.Expect(m.Evaluate(r, v) == truth, "evaluation disagrees with truth table");
        if (truth) table |= std::uint64_t{1} << bits;
      }
      auto [it, fresh] = by_table.emplace(table, r);
      c.Expect(it->second == r, "equal functions, different diagrams");
      if (fresh) {
        for (const auto& [other_table, other] : by_table) {
          c.Expect(other_table == table || !(other == r), "different functions, same diagram");
        }
      }
    }
  }

  // Pinpointing property over every valuation.
  options.max_probabilistic = 10;
  for (int i = 0; i < 40; ++i) {
    const KnowledgeBase kb = GenerateRandomKb(rng, options);
    const Query q = PickQuery(rng, kb, options);
    const Tableau tableau(kb);
    const MonotoneFormula phi =
        FormulaFromJustifications(AllJustifications(kb, q, Method::kGlassBox), kb);
    const auto& prob = kb.probabilistic();
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << prob.size()); ++bits) {
      AxiomSet subset(kb.certain().begin(), kb.certain().end());
      for (std::size_t k = 0; k < prob.size(); ++k) {
        if ((bits >> k) & 1u) subset.insert(prob[k]);
      }
      c.Expect(tableau.Entails(subset, q) == Satisfies(phi, ValuationOf(bits, prob.size())),
               "pinpointing property fails on kb #" + std::to_string(i));
    }
    c.Near(EnumeratedProbability(phi, kb.probabilities()), ProbabilityBruteForce(kb, q), 1e-9,
           "formula weight vs worlds");
  }

  // World weights sum to one.
  for (int i = 0; i < 100; ++i) {
    const KnowledgeBase kb = GenerateRandomKb(rng, options);
    double total = 0.0;
    for (const auto& w : EnumerateWorlds(kb)) total += w.probability;
    c.Near(total, 1.0, 1e-9, "world weights");
  }

  // Parser round trip.
  for (int i = 0; i < 300; ++i) {
    const KnowledgeBase kb = GenerateRandomKb(rng, options);
    const std::string text = SerializeKb(kb);
    c.Expect(ParseKb(text) == kb, "round trip:\n" + text);
  }
  for (int n = 1; n <= 6; ++n) {
    c.Expect(ParseKb(SerializeKb(GenerateSynthetic(n))) == GenerateSynthetic(n), "synthetic round trip");
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Check&)>>> criteria = {
      {"crime KB probability 0.176, covering set, runtime", Criterion1},
      {"decision diagram replay: 3 nodes, 0.7 / 0.88 / 0.176", Criterion2},
      {"DNF equivalent to x1 & (x2 | x3)", Criterion3},
      {"layered benchmark: 2^n justifications, 0.504^n, n = 8", Criterion4},
      {"200 random KBs against oracles", Criterion5},
      {"invariant suites", Criterion6},
  };
  const auto suite_start = Clock::now();
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    const auto start = Clock::now();
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.Expect(false, std::string("exception: ") + e.what());
    }
    std::printf("%s criterion %zu: %s (%.2f s)\n", c.failed ? "FAIL" : "PASS", i + 1,
                criteria[i].first, Seconds(start));
    for (const auto& f : c.failures) std::printf("  %s\n", f.c_str());
    failed += c.failed != 0;
  }
  std::printf("%d of %zu criteria passed in %.2f s\n", static_cast<int>(criteria.size()) - failed,
              criteria.size(), Seconds(suite_start));
  return failed ? 1 : 0;
}
