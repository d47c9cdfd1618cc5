#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "neutro/scalar.hpp"

namespace neutro {

enum class LabelKind { outcome, indeterminacy };

struct LabeledChance {
  std::string label;
  Scalar chance;

  friend bool operator==(const LabeledChance&, const LabeledChance&) = default;
};

/// Finite sample space with explicit indeterminacy sources.
///
/// Outcomes and indeterminacy sources each carry a chance in [0, 1]; the
/// space total is their sum and may be below 1 (an incomplete space, e.g.
/// after indeterminacy has been removed). Spaces built from counts keep the
/// counts so they can be conditioned by removing a unit, and their chances
/// are exact fractions.
class SampleSpace {
 public:
  struct Count {
    std::string label;
    std::int64_t count;
    LabelKind kind = LabelKind::outcome;

    friend bool operator==(const Count&, const Count&) = default;
  };

  SampleSpace() = default;
  SampleSpace(std::vector<LabeledChance> outcomes, std::vector<LabeledChance> indeterminacies);

  static SampleSpace from_counts(std::vector<Count> counts);

  const std::vector<LabeledChance>& outcomes() const noexcept { return outcomes_; }
  const std::vector<LabeledChance>& indeterminacies() const noexcept { return indeterminacies_; }

  Scalar outcome_total() const;
  Scalar indeterminacy_total() const;
  Scalar total() const { return outcome_total() + indeterminacy_total(); }
  bool is_complete(double tol = 1e-9) const { return near(total(), Scalar(1), tol); }

  bool is_count_based() const noexcept { return !counts_.empty(); }
  /// Empty unless the space was built with from_counts.
  const std::vector<Count>& counts() const noexcept { return counts_; }

  std::optional<LabelKind> kind_of(std::string_view label) const;
  /// Chance of an outcome or indeterminacy label; throws
  /// Errc::event_space_mismatch for unknown labels.
  Scalar chance_of(std::string_view label) const;

  friend bool operator==(const SampleSpace&, const SampleSpace&) = default;

 private:
  void validate() const;

  std::vector<LabeledChance> outcomes_;
  std::vector<LabeledChance> indeterminacies_;
  std::vector<Count> counts_;
};

/// Set of outcome labels. Indeterminacy labels never belong to an event.
class Event {
 public:
  Event() = default;
  Event(std::initializer_list<std::string> members) : members_(members) {}
  explicit Event(std::set<std::string> members) : members_(std::move(members)) {}

  const std::set<std::string>& members() const noexcept { return members_; }
  bool contains(std::string_view label) const { return members_.count(std::string(label)) > 0; }
  bool empty() const noexcept { return members_.empty(); }

  friend bool operator==(const Event&, const Event&) = default;

 private:
  std::set<std::string> members_;
};

Event event_union(const Event& a, const Event& b);
Event event_intersection(const Event& a, const Event& b);
/// Outcomes of the space that are not in a.
Event event_complement(const SampleSpace& space, const Event& a);

/// Throws Errc::event_space_mismatch unless every member is an outcome label.
void check_event(const SampleSpace& space, const Event& e);

}  // namespace neutro
