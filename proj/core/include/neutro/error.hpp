#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace neutro {

/// Machine-readable failure categories. The CLI reports these verbatim.
enum class Errc {
  classification_undefined,
  invalid_interval,
  inconsistent_measure,
  invalid_band,
  invalid_input,
  event_space_mismatch,
  precondition_violation,
  cannot_condition,
  undefined_conditional,
  incomplete_payoff,
  label_mismatch,
  cannot_normalize,
  dimension_mismatch,
  weight_sum_violation,
  invalid_config,
  empty_log,
  capacity_exceeded,
  parse_error,
};

constexpr std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::classification_undefined: return "classification-undefined";
    case Errc::invalid_interval: return "invalid-interval";
    case Errc::inconsistent_measure: return "inconsistent-measure";
    case Errc::invalid_band: return "invalid-band";
    case Errc::invalid_input: return "invalid-input";
    case Errc::event_space_mismatch: return "event-space-mismatch";
    case Errc::precondition_violation: return "precondition-violation";
    case Errc::cannot_condition: return "cannot-condition";
    case Errc::undefined_conditional: return "undefined-conditional";
    case Errc::incomplete_payoff: return "incomplete-payoff";
    case Errc::label_mismatch: return "label-mismatch";
    case Errc::cannot_normalize: return "cannot-normalize";
    case Errc::dimension_mismatch: return "dimension-mismatch";
    case Errc::weight_sum_violation: return "weight-sum-violation";
    case Errc::invalid_config: return "invalid-config";
    case Errc::empty_log: return "empty-log";
    case Errc::capacity_exceeded: return "capacity-exceeded";
    case Errc::parse_error: return "parse-error";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(detail), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace neutro
