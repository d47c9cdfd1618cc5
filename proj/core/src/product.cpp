#include "neutro/product.hpp"

#include <charconv>

#include "neutro/error.hpp"

namespace neutro {

namespace {

// All labels of a factor in cell-index order, with their chances.
std::vector<LabeledChance> all_labels(const SampleSpace& s) {
  std::vector<LabeledChance> out = s.outcomes();
  out.insert(out.end(), s.indeterminacies().begin(), s.indeterminacies().end());
  return out;
}

std::size_t checked_cell_count(const std::vector<std::size_t>& radix) {
  std::size_t n = 1;
  for (std::size_t r : radix) {
    if (r == 0) return 0;
    if (n > kMaxProductCells / r) {
      throw Error(Errc::capacity_exceeded, "product has more than 10^7 cells");
    }
    n *= r;
  }
  return n;
}

// Odometer over the mixed-radix tuple space, first factor slowest.
bool advance(std::vector<std::size_t>& digits, const std::vector<std::size_t>& radix) {
  for (std::size_t p = digits.size(); p-- > 0;) {
    if (++digits[p] < radix[p]) return true;
    digits[p] = 0;
  }
  return false;
}

}  // namespace

ProductSpace::ProductSpace(std::vector<SampleSpace> factors) : factors_(std::move(factors)) {
  if (factors_.size() < 2) {
    throw Error(Errc::invalid_input, "a product space needs at least two factors");
  }
  std::vector<std::vector<LabeledChance>> labels;
  std::vector<std::size_t> radix;
  for (const auto& f : factors_) {
    labels.push_back(all_labels(f));
    radix.push_back(labels.back().size());
  }
  const std::size_t n = checked_cell_count(radix);
  if (n == 0) return;

  const std::size_t s = factors_.size();
  indices_.reserve(n * s);
  chances_.reserve(n);
  orders_.reserve(n);

  std::vector<std::size_t> digits(s, 0);
  do {
    Scalar chance(1);
    int order = 0;
    for (std::size_t p = 0; p < s; ++p) {
      indices_.push_back(static_cast<std::uint32_t>(digits[p]));
      chance *= labels[p][digits[p]].chance;
      if (digits[p] >= factors_[p].outcomes().size()) ++order;
    }
    chances_.push_back(chance);
    orders_.push_back(order);
  } while (advance(digits, radix));
}

std::span<const std::uint32_t> ProductSpace::cell_index(std::size_t cell) const {
  const std::size_t s = factors_.size();
  return std::span<const std::uint32_t>(indices_).subspan(cell * s, s);
}

std::vector<std::string> ProductSpace::cell_labels(std::size_t cell) const {
  std::vector<std::string> out;
  auto idx = cell_index(cell);
  for (std::size_t p = 0; p < idx.size(); ++p) {
    const auto& f = factors_[p];
    std::size_t k = idx[p];
    out.push_back(k < f.outcomes().size() ? f.outcomes()[k].label
                                          : f.indeterminacies()[k - f.outcomes().size()].label);
  }
  return out;
}

Scalar ProductSpace::mass_of_order(int order) const {
  Scalar acc(0);
  for (std::size_t c = 0; c < size(); ++c) {
    if (orders_[c] == order) acc += chances_[c];
  }
  return acc;
}

std::size_t ProductSpace::count_of_order(int order) const {
  std::size_t n = 0;
  for (int o : orders_) n += (o == order);
  return n;
}

Scalar ProductSpace::total() const {
  Scalar acc(0);
  for (const auto& c : chances_) acc += c;
  return acc;
}

std::vector<Scalar> symmetric_sums(std::span<const Scalar> values) {
  // e[k] after processing j values holds the k-th elementary symmetric sum
  // of the first j values.
  std::vector<Scalar> e(values.size() + 1, Scalar(0));
  e[0] = Scalar(1);
  for (std::size_t j = 0; j < values.size(); ++j) {
    for (std::size_t k = j + 1; k >= 1; --k) e[k] += e[k - 1] * values[j];
  }
  return e;
}

Scalar total_indeterminacy(std::span<const Scalar> factor_indeterminacy) {
  auto s = symmetric_sums(factor_indeterminacy);
  Scalar acc(0);
  for (std::size_t t = 1; t < s.size(); ++t) {
    if (t % 2 == 1) {
      acc += s[t];
    } else {
      acc -= s[t];
    }
  }
  return acc;
}

Scalar total_indeterminacy(std::span<const SampleSpace> spaces) {
  std::vector<Scalar> per_factor;
  for (const auto& s : spaces) per_factor.push_back(s.indeterminacy_total());
  return total_indeterminacy(per_factor);
}

NeutrosophicProbability np_joint(std::span<const SampleSpace> spaces,
                                 std::span<const Event> events) {
  if (spaces.empty()) throw Error(Errc::invalid_input, "joint probability of no factors");
  if (spaces.size() != events.size()) {
    throw Error(Errc::dimension_mismatch, "need exactly one event per factor");
  }
  Scalar t(1);
  Scalar pure(1);
  for (std::size_t r = 0; r < spaces.size(); ++r) {
    check_event(spaces[r], events[r]);
    Scalar ch(0);
    for (const auto& o : spaces[r].outcomes()) {
      if (events[r].contains(o.label)) ch += o.chance;
    }
    t *= ch;
    pure *= spaces[r].outcome_total();
  }
  return {t, total_indeterminacy(spaces), pure - t};
}

NeutrosophicProbability np_joint_predicate(std::span<const SampleSpace> spaces,
                                           const TuplePredicate& predicate) {
  if (spaces.empty()) throw Error(Errc::invalid_input, "joint probability of no factors");
  std::vector<std::size_t> radix;
  for (const auto& s : spaces) radix.push_back(s.outcomes().size());
  const std::size_t n = checked_cell_count(radix);

  Scalar hit(0);
  Scalar miss(0);
  if (n > 0) {
    std::vector<std::size_t> digits(spaces.size(), 0);
    std::vector<std::string> tuple(spaces.size());
    do {
      Scalar chance(1);
      for (std::size_t p = 0; p < spaces.size(); ++p) {
        const auto& o = spaces[p].outcomes()[digits[p]];
        tuple[p] = o.label;
        chance *= o.chance;
      }
      if (predicate(tuple)) {
        hit += chance;
      } else {
        miss += chance;
      }
    } while (advance(digits, radix));
  }
  return {hit, total_indeterminacy(spaces), miss};
}

TuplePredicate sum_equals(long long n) {
  return [n](std::span<const std::string> labels) {
    long long sum = 0;
    for (const auto& l : labels) {
      long long v = 0;
      auto [ptr, ec] = std::from_chars(l.data(), l.data() + l.size(), v);
      if (ec != std::errc{} || ptr != l.data() + l.size()) {
        throw Error(Errc::invalid_input, "label '" + l + "' is not an integer");
      }
      sum += v;
    }
    return sum == n;
  };
}

CountingResult counting_principle(std::int64_t e, std::int64_t e1, std::int64_t f,
                                  std::int64_t f1) {
  if (e < 0 || e1 < 0 || f < 0 || f1 < 0) {
    throw Error(Errc::invalid_input, "counts must be nonnegative");
  }
  return {e * f, e1 * f + e * f1, e1 * f1};
}

}  // namespace neutro
