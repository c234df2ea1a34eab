#include "disponte/semantics.h"

#include <stdexcept>
#include <string>

#include "disponte/tableau.h"

namespace disponte {

CompositeChoice::CompositeChoice(const std::vector<AtomicChoice>& choices) {
  for (const AtomicChoice& c : choices) {
    if (!Add(c)) {
      throw std::invalid_argument("inconsistent composite choice on ordinal " +
                                  std::to_string(c.ordinal));
    }
  }
}

bool CompositeChoice::Add(AtomicChoice c) {
  auto [it, inserted] = choices_.try_emplace(c.ordinal, c.included);
  return inserted || it->second == c.included;
}

bool CompositeChoice::Compatible(const CompositeChoice& other) const {
  for (const auto& [ordinal, included] : other.choices_) {
    auto it = choices_.find(ordinal);
    if (it != choices_.end() && it->second != included) return false;
  }
  return true;
}

double ChoiceProbability(const CompositeChoice& c, const KnowledgeBase& kb) {
  double p = 1.0;
  for (const auto& [ordinal, included] : c.choices()) {
    const double pi = kb.probability_of_ordinal(ordinal);
    p *= included ? pi : 1.0 - pi;
  }
  return p;
}

AxiomSet World::Axioms(const KnowledgeBase& kb) const {
  AxiomSet out = kb.certain();
  for (std::size_t i = 0; i < selection.size(); ++i) {
    if (selection[i]) out.insert(kb.probabilistic()[i]);
  }
  return out;
}

CompositeChoice World::AsChoice() const {
  CompositeChoice c;
  for (std::size_t i = 0; i < selection.size(); ++i) c.Add({i, selection[i]});
  return c;
}

void ForEachWorld(const KnowledgeBase& kb, std::size_t limit,
                  const std::function<void(const World&, double)>& visit) {
  const std::size_t m = kb.probabilistic_count();
  if (m > limit || m >= 63) {
    throw std::length_error(std::to_string(m) + " probabilistic axioms exceed the world limit of " +
                            std::to_string(limit));
  }
  const std::vector<double> p = kb.probabilities();
  World w{std::vector<bool>(m, false)};
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
    double weight = 1.0;
    for (std::size_t i = 0; i < m; ++i) {
      w.selection[i] = (bits >> i) & 1u;
      weight *= w.selection[i] ? p[i] : 1.0 - p[i];
    }
    visit(w, weight);
  }
}

std::vector<WeightedWorld> EnumerateWorlds(const KnowledgeBase& kb, std::size_t limit) {
  std::vector<WeightedWorld> out;
  ForEachWorld(kb, limit, [&](const World& w, double p) { out.push_back({w, p}); });
  return out;
}

double ProbabilityBruteForce(const KnowledgeBase& kb, const Query& q, const Limits& limits,
                             std::size_t world_limit) {
  const Tableau tableau(kb, limits);
  double total = 0.0;
  ForEachWorld(kb, world_limit, [&](const World& w, double p) {
    if (tableau.Entails(w.Axioms(kb), q)) total += p;
  });
  return total;
}

std::string_view ToString(Engine e) { return e == Engine::kBdd ? "bdd" : "bruteforce"; }

Engine ParseEngine(std::string_view s) {
  if (s == "bdd") return Engine::kBdd;
  if (s == "bruteforce") return Engine::kBruteForce;
  throw std::invalid_argument("unknown engine '" + std::string(s) + "'");
}

QueryResult ProbabilityQuery(const KnowledgeBase& kb, const Query& q, const QueryConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  QueryResult result;
  if (config.engine == Engine::kBruteForce) {
    result.probability = ProbabilityBruteForce(kb, q, config.limits, config.world_limit);
  } else {
    result.covering = AllJustifications(kb, q, config.method, config.limits);
    result.formula = FormulaFromJustifications(result.covering, kb);
    auto manager = std::make_shared<BddManager>(kb.probabilistic_count());
    result.root = manager->Build(result.formula);
    result.bdd_nodes = manager->NodeCount(result.root);
    const std::vector<double> probs = kb.probabilities();
    result.probability = manager->Probability(result.root, probs);
    result.bdd = std::move(manager);
  }
  result.elapsed = std::chrono::steady_clock::now() - start;
  return result;
}

}  // namespace disponte
