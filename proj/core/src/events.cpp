#include "neutro/events.hpp"

#include "neutro/error.hpp"

namespace neutro {

namespace {

Scalar chance_in(const SampleSpace& space, const Event& e) {
  Scalar acc(0);
  for (const auto& o : space.outcomes()) {
    if (e.contains(o.label)) acc += o.chance;
  }
  return acc;
}

Scalar chance_outside(const SampleSpace& space, const Event& e) {
  Scalar acc(0);
  for (const auto& o : space.outcomes()) {
    if (!e.contains(o.label)) acc += o.chance;
  }
  return acc;
}

}  // namespace

NeutrosophicProbability np_event(const SampleSpace& space, const Event& e) {
  check_event(space, e);
  return {chance_in(space, e), space.indeterminacy_total(), chance_outside(space, e)};
}

NeutrosophicProbability np_impossible(const SampleSpace& space) {
  Scalar indet = space.indeterminacy_total();
  return {Scalar(0), indet, space.total() - indet};
}

NeutrosophicProbability np_sure(const SampleSpace& space) {
  if (!space.is_complete()) {
    throw Error(Errc::precondition_violation,
                "sure event needs a complete space, total is " + space.total().str());
  }
  Scalar indet = space.indeterminacy_total();
  return {Scalar(1) - indet, indet, Scalar(0)};
}

NeutrosophicProbability np_union(const SampleSpace& space, const Event& a, const Event& b) {
  check_event(space, a);
  check_event(space, b);
  Scalar t = chance_in(space, a) + chance_in(space, b) -
             chance_in(space, event_intersection(a, b));
  return {t, space.indeterminacy_total(), chance_outside(space, event_union(a, b))};
}

NeutrosophicProbability np_union_interval(const NeutrosophicProbability& a,
                                          const NeutrosophicProbability& b,
                                          const NeutrosophicProbability& ab,
                                          const IntervalChance& indeterm, const Scalar& total) {
  // Clamp once, after the overlap is subtracted.
  Scalar t_lo = a.t.lo() + b.t.lo() - ab.t.hi();
  Scalar t_hi = a.t.hi() + b.t.hi() - ab.t.lo();
  IntervalChance t = IntervalChance::clamped(t_lo, t_hi);
  IntervalChance f = IntervalChance::clamped(total - indeterm.hi() - t_hi, total - indeterm.lo() - t_lo);
  return {t, indeterm, f};
}

NeutrosophicProbability np_and_independent(const NeutrosophicProbability& a,
                                           const NeutrosophicProbability& b,
                                           const IntervalChance& indeterm, const Scalar& total) {
  IntervalChance t = interval_mul(a.t, b.t);
  IntervalChance readable = interval_sub(IntervalChance(total), indeterm);
  return {t, indeterm, interval_sub(readable, t)};
}

NeutrosophicProbability np_and_independent(const NeutrosophicProbability& a,
                                           const NeutrosophicProbability& b,
                                           const SampleSpace& space) {
  return np_and_independent(a, b, space.indeterminacy_total(), space.total());
}

NeutrosophicProbability np_complement(const SampleSpace& space, const Event& a) {
  return np_event(space, event_complement(space, a));
}

SampleSpace remove_one(const SampleSpace& space, const std::string& label) {
  if (!space.is_count_based()) {
    throw Error(Errc::cannot_condition, "conditioning needs a count-based space");
  }
  auto counts = space.counts();
  bool found = false;
  for (auto& c : counts) {
    if (c.label != label) continue;
    if (c.count <= 0) {
      throw Error(Errc::cannot_condition, "no '" + label + "' left to remove");
    }
    --c.count;
    found = true;
  }
  if (!found) throw Error(Errc::event_space_mismatch, "label '" + label + "' is not in the space");
  std::int64_t total = 0;
  for (const auto& c : counts) total += c.count;
  if (total == 0) throw Error(Errc::cannot_condition, "removing '" + label + "' empties the space");
  return SampleSpace::from_counts(std::move(counts));
}

NeutrosophicProbability np_conditional(const SampleSpace& space, const Event& a,
                                       const std::string& given, Draw draw) {
  check_event(space, a);
  if (draw == Draw::with_replacement) {
    space.chance_of(given);  // still reject unknown labels
    return np_event(space, a);
  }
  return np_event(remove_one(space, given), a);
}

bool bayes_check(const Scalar& ch_a, const Scalar& ch_b, const Scalar& ch_a_given_b,
                 const Scalar& ch_b_given_a) {
  if (ch_b == Scalar(0)) {
    throw Error(Errc::undefined_conditional, "conditioning on an event of chance 0");
  }
  Scalar rhs = ch_b_given_a * ch_a / ch_b;
  if (rhs.is_exact() && ch_a_given_b.is_exact()) return rhs == ch_a_given_b;
  return near(rhs, ch_a_given_b, 1e-9);
}

NeutrosophicProbability np_mult_rule(const SampleSpace& space, const std::string& first,
                                     const std::string& second) {
  check_event(space, Event{first});
  check_event(space, Event{second});
  SampleSpace after = remove_one(space, first);

  Scalar t = space.chance_of(first) * after.chance_of(second);
  Scalar i0 = space.indeterminacy_total();
  Scalar i1 = after.indeterminacy_total();
  Scalar i = i0 + i1 - i0 * i1;
  return {t, i, Scalar(1) - t - i};
}

Scalar expected_value(const SampleSpace& space, const PayoffSpec& spec) {
  for (const auto& [label, value] : spec.payoffs) {
    if (!space.kind_of(label)) {
      throw Error(Errc::label_mismatch, "payoff for unknown label '" + label + "'");
    }
  }
  Scalar acc(0);
  for (const auto* list : {&space.outcomes(), &space.indeterminacies()}) {
    for (const auto& item : *list) {
      auto it = spec.payoffs.find(item.label);
      if (it == spec.payoffs.end()) {
        throw Error(Errc::incomplete_payoff, "no payoff for '" + item.label + "'");
      }
      acc += it->second * item.chance;
    }
  }
  return acc;
}

SampleSpace remove_indeterminacy(const SampleSpace& space) {
  return SampleSpace(space.outcomes(), {});
}

}  // namespace neutro
