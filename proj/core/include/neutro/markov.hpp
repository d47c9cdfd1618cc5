#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "neutro/probability.hpp"

namespace neutro {

/// Binary operator used on the indeterminacy and falsehood components.
enum class Combiner { max, min, mean };

std::string_view to_string(Combiner c) noexcept;
Combiner parse_combiner(std::string_view name);

/// Combines any number of values. max and min fold left to right; mean is
/// evaluated as a balanced pairwise tree of binary means.
Scalar combine(Combiner c, std::span<const Scalar> values);

/// How triples multiply and add inside matrix products. The first
/// component always multiplies and sums; the other two use the combiners.
struct OperatorConfig {
  Combiner mul_i = Combiner::max;
  Combiner mul_f = Combiner::max;
  Combiner add_i = Combiner::min;
  Combiner add_f = Combiner::min;

  /// "standard": mul (max, max), add (min, min). The default.
  static OperatorConfig standard() { return {}; }
  /// "min-i": mul (min, max), add (min, min).
  static OperatorConfig min_i() {
    return {Combiner::min, Combiner::max, Combiner::min, Combiner::min};
  }
  /// "mean-i": mul (mean, max), add (mean, min).
  static OperatorConfig mean_i() {
    return {Combiner::mean, Combiner::max, Combiner::mean, Combiner::min};
  }
  /// "standard", "min-i", "mean-i", or a custom "mul_i,mul_f,add_i,add_f"
  /// list of combiner names such as "max,max,min,min".
  static OperatorConfig by_name(std::string_view name);

  friend bool operator==(const OperatorConfig&, const OperatorConfig&) = default;
};

/// (a.t * b.t, mul_i(a.i, b.i), mul_f(a.f, b.f))
ScalarTriple triple_mul(const ScalarTriple& a, const ScalarTriple& b, const OperatorConfig& cfg);
/// (min(1, a.t + b.t), add_i(a.i, b.i), add_f(a.f, b.f))
ScalarTriple triple_add(const ScalarTriple& a, const ScalarTriple& b, const OperatorConfig& cfg);

/// Square matrix of transition triples between labelled states.
class TransitionMatrix {
 public:
  TransitionMatrix() = default;
  TransitionMatrix(std::vector<std::string> states, std::vector<std::vector<ScalarTriple>> rows);

  /// (1, 0, 0) on the diagonal, (0, 0, 0) elsewhere.
  static TransitionMatrix identity(std::vector<std::string> states);
  /// Classical stochastic matrix lifted to triples (p, 0, 0).
  static TransitionMatrix classical(std::vector<std::string> states,
                                    const std::vector<std::vector<Scalar>>& probabilities);

  std::size_t size() const noexcept { return states_.size(); }
  const std::vector<std::string>& states() const noexcept { return states_; }
  const ScalarTriple& at(std::size_t r, std::size_t c) const { return rows_.at(r).at(c); }
  const std::vector<ScalarTriple>& row(std::size_t r) const { return rows_.at(r); }
  const std::vector<std::vector<ScalarTriple>>& rows() const noexcept { return rows_; }

  friend bool operator==(const TransitionMatrix&, const TransitionMatrix&) = default;

 private:
  std::vector<std::string> states_;
  std::vector<std::vector<ScalarTriple>> rows_;
};

/// Entry (r, c) sums triple_mul(A[r][k], B[k][c]) over k in increasing k.
TransitionMatrix mat_mul(const TransitionMatrix& a, const TransitionMatrix& b,
                         const OperatorConfig& cfg = {});

/// A^m as a left fold of mat_mul; m must be at least 1.
TransitionMatrix mat_power(const TransitionMatrix& a, int m, const OperatorConfig& cfg = {});

/// Divides every component of a row by the sum of all 3n components of that
/// row. A row with no mass throws Errc::cannot_normalize.
TransitionMatrix row_normalize(const TransitionMatrix& a);

using StateVector = std::vector<ScalarTriple>;

/// x * A with x a row of triples, combined under cfg.
StateVector step(std::span<const ScalarTriple> x, const TransitionMatrix& a,
                 const OperatorConfig& cfg = {});

/// x * A with x a classical row of weights. Entries with weight 0 are
/// skipped, the others contribute (w * A[k][c].t, A[k][c].i, A[k][c].f),
/// so a 0/1 basis vector selects its matrix row exactly.
StateVector step(std::span<const Scalar> x, const TransitionMatrix& a,
                 const OperatorConfig& cfg = {});

}  // namespace neutro
