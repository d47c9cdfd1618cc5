#pragma once

#include <map>
#include <string>

#include "neutro/probability.hpp"
#include "neutro/sample_space.hpp"

namespace neutro {

/// NP(E) = (sum of chances in E, total indeterminacy, sum of outcome
/// chances outside E). Indeterminacy is shared by every event of a space.
NeutrosophicProbability np_event(const SampleSpace& space, const Event& e);

/// (0, ch(indeterm), ch(space) - ch(indeterm)).
NeutrosophicProbability np_impossible(const SampleSpace& space);

/// (1 - ch(indeterm), ch(indeterm), 0). The space must be complete; an
/// incomplete space throws Errc::precondition_violation.
NeutrosophicProbability np_sure(const SampleSpace& space);

/// t = ch(A) + ch(B) - ch(A and B); f sums the outcomes outside A ∪ B.
NeutrosophicProbability np_union(const SampleSpace& space, const Event& a, const Event& b);

/// Union when the operands are already interval triples and the overlap is
/// known only as an interval: t = (A.t + B.t) - AB.t, f = total - indeterm - t,
/// all in interval arithmetic.
NeutrosophicProbability np_union_interval(const NeutrosophicProbability& a,
                                          const NeutrosophicProbability& b,
                                          const NeutrosophicProbability& ab,
                                          const IntervalChance& indeterm, const Scalar& total);

/// Conjunction of independent events: t = A.t * B.t, i = indeterm,
/// f = total - indeterm - t.
NeutrosophicProbability np_and_independent(const NeutrosophicProbability& a,
                                           const NeutrosophicProbability& b,
                                           const IntervalChance& indeterm, const Scalar& total);
NeutrosophicProbability np_and_independent(const NeutrosophicProbability& a,
                                           const NeutrosophicProbability& b,
                                           const SampleSpace& space);

/// NP(antiA) = (outcomes outside A, ch(indeterm), ch(A)).
NeutrosophicProbability np_complement(const SampleSpace& space, const Event& a);

enum class Draw { without_replacement, with_replacement };

/// Count-based space with one unit of `label` taken out.
/// Throws Errc::cannot_condition when the space has no counts or the label
/// has none left.
SampleSpace remove_one(const SampleSpace& space, const std::string& label);

/// NP(A | a `given` item was drawn first). Without replacement the space is
/// rebuilt with that unit removed; with replacement it is unchanged and the
/// result equals np_event(space, a).
NeutrosophicProbability np_conditional(const SampleSpace& space, const Event& a,
                                       const std::string& given,
                                       Draw draw = Draw::without_replacement);

/// ch(A|B) == ch(B|A) * ch(A) / ch(B), exactly for exact operands and
/// within 1e-9 otherwise. ch(B) == 0 throws Errc::undefined_conditional.
bool bayes_check(const Scalar& ch_a, const Scalar& ch_b, const Scalar& ch_a_given_b,
                 const Scalar& ch_b_given_a);

/// Two draws without replacement, `first` then `second`:
/// t = ch(first) * ch(second | first),
/// i = i0 + i1 - i0 * i1 with i0, i1 the indeterminacy before and after the
/// first draw, f = 1 - t - i.
NeutrosophicProbability np_mult_rule(const SampleSpace& space, const std::string& first,
                                     const std::string& second);

/// Payoff per label, outcomes and indeterminacy sources alike.
struct PayoffSpec {
  std::map<std::string, Scalar> payoffs;
};

/// Sum of payoff * chance over every outcome and indeterminacy source.
/// A label without a payoff throws Errc::incomplete_payoff; a payoff for an
/// unknown label throws Errc::label_mismatch.
Scalar expected_value(const SampleSpace& space, const PayoffSpec& payoffs);

/// Same outcomes with every indeterminacy source dropped. The result is an
/// incomplete space when the removed sources carried mass.
SampleSpace remove_indeterminacy(const SampleSpace& space);

}  // namespace neutro
