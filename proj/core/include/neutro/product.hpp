#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "neutro/probability.hpp"
#include "neutro/sample_space.hpp"

namespace neutro {

/// Enumeration limit for product cells; larger products only support the
/// closed-form queries (np_joint, total_indeterminacy).
inline constexpr std::size_t kMaxProductCells = 10'000'000;

/// Cartesian product of sample spaces.
///
/// Every tuple of per-factor labels becomes a cell whose chance is the
/// product of the factor chances. The indeterminacy order of a cell is the
/// number of positions holding an indeterminacy label: order 0 cells are
/// pure outcomes, order s cells are indeterminate in every factor.
class ProductSpace {
 public:
  explicit ProductSpace(std::vector<SampleSpace> factors);

  const std::vector<SampleSpace>& factors() const noexcept { return factors_; }
  std::size_t size() const noexcept { return chances_.size(); }

  /// Per-factor label positions of a cell. Position p indexes the factor's
  /// outcomes first, then its indeterminacy sources.
  std::span<const std::uint32_t> cell_index(std::size_t cell) const;
  std::vector<std::string> cell_labels(std::size_t cell) const;
  const Scalar& cell_chance(std::size_t cell) const { return chances_[cell]; }
  int cell_order(std::size_t cell) const { return orders_[cell]; }

  /// Summed chance of all cells with the given indeterminacy order.
  Scalar mass_of_order(int order) const;
  std::size_t count_of_order(int order) const;
  Scalar total() const;

 private:
  std::vector<SampleSpace> factors_;
  std::vector<std::uint32_t> indices_;  // size() * factors_.size(), row major
  std::vector<Scalar> chances_;
  std::vector<int> orders_;
};

/// Elementary symmetric sums S[0..s] of the values; S[0] = 1,
/// S[1] = sum, S[s] = product.
std::vector<Scalar> symmetric_sums(std::span<const Scalar> values);

/// Chance that at least one factor is indeterminate:
/// sum over t of (-1)^(t-1) S_t.
Scalar total_indeterminacy(std::span<const Scalar> factor_indeterminacy);
Scalar total_indeterminacy(std::span<const SampleSpace> spaces);

/// Joint NP of one event per factor. t is the product of the event chances,
/// i the total indeterminacy, f the remaining mass of pure-outcome cells.
NeutrosophicProbability np_joint(std::span<const SampleSpace> spaces,
                                 std::span<const Event> events);

using TuplePredicate = std::function<bool(std::span<const std::string>)>;

/// Joint NP of a predicate over pure-outcome tuples: t is the mass of pure
/// cells where it holds, f of those where it fails. Any cell with an
/// indeterminate position belongs to i.
NeutrosophicProbability np_joint_predicate(std::span<const SampleSpace> spaces,
                                           const TuplePredicate& predicate);

/// Predicate "labels, read as integers, sum to n". Throws Errc::invalid_input
/// from the predicate when a label is not an integer.
TuplePredicate sum_equals(long long n);

struct CountingResult {
  std::int64_t ways = 0;
  std::int64_t first_order = 0;
  std::int64_t second_order = 0;

  friend bool operator==(const CountingResult&, const CountingResult&) = default;
};

/// E in e ways and e1 indeterminacies followed by F in f ways and f1
/// indeterminacies: (e*f, e1*f + e*f1, e1*f1).
CountingResult counting_principle(std::int64_t e, std::int64_t e1, std::int64_t f,
                                  std::int64_t f1);

}  // namespace neutro
