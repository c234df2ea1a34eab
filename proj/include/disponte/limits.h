#ifndef DISPONTE_LIMITS_H_
#define DISPONTE_LIMITS_H_

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace disponte {

class Deadline {
 public:
  using Clock = std::chrono::steady_clock;

  static Deadline Never() { return Deadline(); }
  static Deadline After(std::chrono::duration<double> d) {
    Deadline out;
    out.at_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(d);
    return out;
  }

  bool Expired() const { return at_ && Clock::now() >= *at_; }

 private:
  std::optional<Clock::time_point> at_;
};

struct SearchStats {
  std::uint64_t tableau_calls = 0;
  std::uint64_t hst_nodes = 0;
  std::size_t justifications = 0;
};

// Raised when a node budget or deadline is exhausted. Carries whatever
// statistics had been gathered up to that point.
class ResourceLimitError : public std::runtime_error {
 public:
  explicit ResourceLimitError(const std::string& what, SearchStats stats = {})
      : std::runtime_error(what), stats_(stats) {}
  const SearchStats& stats() const { return stats_; }

 private:
  SearchStats stats_;
};

struct Limits {
  std::size_t tableau_node_budget = 100000;
  std::size_t hst_node_budget = 100000;
  Deadline deadline;
};

}  // namespace disponte

#endif  // DISPONTE_LIMITS_H_
