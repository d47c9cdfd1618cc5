#include "neutro/sample_space.hpp"

#include <algorithm>
#include <unordered_set>

#include "neutro/error.hpp"

namespace neutro {

namespace {

constexpr double kTotalSlack = 1e-9;

Scalar sum_chances(const std::vector<LabeledChance>& items) {
  Scalar acc(0);
  for (const auto& item : items) acc += item.chance;
  return acc;
}

}  // namespace

SampleSpace::SampleSpace(std::vector<LabeledChance> outcomes,
                         std::vector<LabeledChance> indeterminacies)
    : outcomes_(std::move(outcomes)), indeterminacies_(std::move(indeterminacies)) {
  validate();
}

SampleSpace SampleSpace::from_counts(std::vector<Count> counts) {
  std::int64_t total = 0;
  for (const auto& c : counts) {
    if (c.count < 0) throw Error(Errc::invalid_input, "negative count for '" + c.label + "'");
    total += c.count;
  }
  if (total <= 0) throw Error(Errc::invalid_input, "count-based space needs a positive total");

  SampleSpace space;
  for (const auto& c : counts) {
    LabeledChance item{c.label, Scalar::fraction(c.count, total)};
    if (c.kind == LabelKind::outcome) {
      space.outcomes_.push_back(std::move(item));
    } else {
      space.indeterminacies_.push_back(std::move(item));
    }
  }
  space.counts_ = std::move(counts);
  space.validate();
  return space;
}

void SampleSpace::validate() const {
  std::unordered_set<std::string> seen;
  auto check = [&](const LabeledChance& item) {
    if (item.label.empty()) throw Error(Errc::invalid_input, "empty label in sample space");
    if (!seen.insert(item.label).second) {
      throw Error(Errc::invalid_input, "duplicate label '" + item.label + "'");
    }
    if (!(item.chance >= Scalar(0)) || !(item.chance <= Scalar(1))) {
      throw Error(Errc::invalid_input,
                  "chance of '" + item.label + "' is outside [0, 1]: " + item.chance.str());
    }
  };
  std::for_each(outcomes_.begin(), outcomes_.end(), check);
  std::for_each(indeterminacies_.begin(), indeterminacies_.end(), check);
  if (total().value() > 1.0 + kTotalSlack) {
    throw Error(Errc::invalid_input, "sample space total " + total().str() + " exceeds 1");
  }
}

Scalar SampleSpace::outcome_total() const { return sum_chances(outcomes_); }
Scalar SampleSpace::indeterminacy_total() const { return sum_chances(indeterminacies_); }

std::optional<LabelKind> SampleSpace::kind_of(std::string_view label) const {
  auto match = [&](const LabeledChance& c) { return c.label == label; };
  if (std::any_of(outcomes_.begin(), outcomes_.end(), match)) return LabelKind::outcome;
  if (std::any_of(indeterminacies_.begin(), indeterminacies_.end(), match)) {
    return LabelKind::indeterminacy;
  }
  return std::nullopt;
}

Scalar SampleSpace::chance_of(std::string_view label) const {
  for (const auto* list : {&outcomes_, &indeterminacies_}) {
    for (const auto& c : *list) {
      if (c.label == label) return c.chance;
    }
  }
  throw Error(Errc::event_space_mismatch, "label '" + std::string(label) + "' is not in the space");
}

Event event_union(const Event& a, const Event& b) {
  std::set<std::string> out = a.members();
  out.insert(b.members().begin(), b.members().end());
  return Event(std::move(out));
}

Event event_intersection(const Event& a, const Event& b) {
  std::set<std::string> out;
  std::set_intersection(a.members().begin(), a.members().end(), b.members().begin(),
                        b.members().end(), std::inserter(out, out.end()));
  return Event(std::move(out));
}

Event event_complement(const SampleSpace& space, const Event& a) {
  std::set<std::string> out;
  for (const auto& o : space.outcomes()) {
    if (!a.contains(o.label)) out.insert(o.label);
  }
  return Event(std::move(out));
}

void check_event(const SampleSpace& space, const Event& e) {
  for (const auto& label : e.members()) {
    auto kind = space.kind_of(label);
    if (!kind) {
      throw Error(Errc::event_space_mismatch, "event label '" + label + "' is not in the space");
    }
    if (*kind == LabelKind::indeterminacy) {
      throw Error(Errc::event_space_mismatch,
                  "event label '" + label + "' is an indeterminacy source, not an outcome");
    }
  }
}

}  // namespace neutro
