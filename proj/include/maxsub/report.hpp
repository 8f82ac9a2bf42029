#pragma once

#include <chrono>
#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "maxsub/element_set.hpp"
#include "maxsub/set_system.hpp"

namespace maxsub {

/// Counts and measurements gathered by one enumeration run.
struct EnumerationReport {
  std::string algorithm;
  std::uint64_t solution_count = 0;  // alpha
  std::size_t max_solution_size = 0;  // observed q
  std::uint64_t roots = 0;
  /// Wall-clock gaps in seconds: start to first output, between consecutive
  /// outputs, and last output to termination.
  std::vector<double> delay_samples;
  double max_delay = 0.0;
  double total_seconds = 0.0;
  /// Stateless engine only: high-water mark of element slots owned by the traversal.
  std::optional<std::int64_t> peak_aux_elements;
  std::uint64_t oracle_calls = 0;
  std::uint64_t restricted_calls = 0;
  std::uint64_t restricted_solutions = 0;
  bool aborted = false;
};

/// Receives each maximal solution with its depth in the reverse-search
/// forest (roots have depth 1). Returning false stops the enumeration.
template <class S>
concept SolutionSink = std::invocable<S&, const ElementSet&, std::size_t>;

namespace detail {

template <class Sink>
bool deliver(Sink& sink, const ElementSet& s, std::size_t depth) {
  if constexpr (std::is_void_v<std::invoke_result_t<Sink&, const ElementSet&, std::size_t>>) {
    sink(s, depth);
    return true;
  } else {
    return static_cast<bool>(sink(s, depth));
  }
}

/// Applies the alternating output rule (odd depth: on entry, even depth: on
/// exit) and keeps the report's counters and delay samples.
template <class Sink>
class Emitter {
 public:
  using Clock = std::chrono::steady_clock;

  Emitter(const SetSystem& sys, Sink& sink, EnumerationReport& rep)
      : sys_(sys), sink_(sink), rep_(rep), start_(Clock::now()), last_(start_),
        calls_at_start_(sys.oracle_calls()) {}

  bool enter(const ElementSet& s, std::size_t depth) { return depth % 2 == 1 ? emit(s, depth) : true; }
  bool leave(const ElementSet& s, std::size_t depth) { return depth % 2 == 0 ? emit(s, depth) : true; }

  void finish() {
    const auto now = Clock::now();
    sample(now);
    rep_.total_seconds = std::chrono::duration<double>(now - start_).count();
    rep_.oracle_calls = sys_.oracle_calls() - calls_at_start_;
  }

 private:
  bool emit(const ElementSet& s, std::size_t depth) {
    sample(Clock::now());
    ++rep_.solution_count;
    rep_.max_solution_size = std::max(rep_.max_solution_size, s.size());
    bool go_on;
    {
      SlotPause pause;
      go_on = deliver(sink_, s, depth);
    }
    if (!go_on) {
      rep_.aborted = true;
      return false;
    }
    last_ = Clock::now();
    return true;
  }

  void sample(Clock::time_point now) {
    const double gap = std::chrono::duration<double>(now - last_).count();
    rep_.delay_samples.push_back(gap);
    rep_.max_delay = std::max(rep_.max_delay, gap);
    last_ = now;
  }

  const SetSystem& sys_;
  Sink& sink_;
  EnumerationReport& rep_;
  Clock::time_point start_;
  Clock::time_point last_;
  std::uint64_t calls_at_start_;
};

}  // namespace detail
}  // namespace maxsub
