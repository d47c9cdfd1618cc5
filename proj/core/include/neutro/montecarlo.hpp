#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "neutro/probability.hpp"
#include "neutro/sample_space.hpp"

namespace neutro {

/// Label recorded for the residual mass 1 - total of an incomplete space.
inline constexpr std::string_view kNoResultLabel = "no-result";

/// Trials are split into this many independent streams regardless of how
/// many threads run them, so counts never depend on the worker count.
inline constexpr std::size_t kSimulationStreams = 64;

enum class TrialKind { outcome, indeterminacy, no_result };

struct TrialCount {
  std::string label;
  TrialKind kind = TrialKind::outcome;
  std::int64_t count = 0;

  friend bool operator==(const TrialCount&, const TrialCount&) = default;
};

/// Per-label tallies of an experiment, in the space's declaration order.
class TrialLog {
 public:
  TrialLog() = default;
  /// Zero counts for every label of the space (plus no-result when the
  /// space is incomplete).
  explicit TrialLog(const SampleSpace& space);

  /// Tallies a list of observed labels, e.g. a survey "2, 5, 1, indeterm, 4".
  static TrialLog from_observations(const SampleSpace& space,
                                    std::span<const std::string> observations);

  void record(std::string_view label, std::int64_t times = 1);
  void merge(const TrialLog& other);

  const std::vector<TrialCount>& entries() const noexcept { return entries_; }
  std::int64_t total() const noexcept { return total_; }
  std::int64_t count(std::string_view label) const;

  friend bool operator==(const TrialLog&, const TrialLog&) = default;

 private:
  std::vector<TrialCount> entries_;
  std::int64_t total_ = 0;
};

struct SimConfig {
  std::uint64_t seed = 0;
  std::int64_t trials = 1;
  /// Threads to use; 0 picks the hardware concurrency. Does not affect results.
  unsigned workers = 0;
};

/// Draws `trials` labels by inverse-CDF sampling over the labels in
/// declaration order (outcomes, indeterminacy sources, then no-result).
///
/// Stream k of kSimulationStreams is an std::mt19937_64 seeded with the
/// k-th SplitMix64 output of cfg.seed; uniforms are the top 53 bits of
/// each draw scaled to [0, 1). Identical seed, trials and space give an
/// identical log on every platform.
TrialLog simulate(const SampleSpace& space, const SimConfig& cfg);

/// (event count, indeterminacy count, other outcome count) / total trials.
/// No-result trials count toward the total only.
NeutrosophicProbability frequentist_np(const TrialLog& log, const Event& event);

}  // namespace neutro
