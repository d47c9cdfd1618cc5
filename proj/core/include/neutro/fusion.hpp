#pragma once

#include <functional>
#include <map>
#include <string>
#include <string_view>

namespace neutro {

/// A source's subjective (t, i, f) estimate about one item.
struct SubjectiveNP {
  double t = 0.0;
  double i = 0.0;
  double f = 0.0;
  std::string source_id;

  double sum() const noexcept { return t + i + f; }
  bool is_normalized(double tol = 1e-9) const noexcept;
};

/// Two-source fusion with proportional conflict redistribution (PCR5).
///
/// Each agreeing product (t1 t2, i1 i2, f1 f2) stays on its component. Each
/// conflicting product such as t1 i2 is split between t and i in
/// proportion to t1 and i2. A conflict whose denominator is zero has a zero
/// numerator as well and contributes nothing.
SubjectiveNP pcr5_fuse(const SubjectiveNP& a, const SubjectiveNP& b);

using ProbabilityMap = std::map<std::string, double>;

/// PCR5 on classical probability maps over singleton hypotheses. Both maps
/// must cover the same labels (Errc::label_mismatch otherwise).
ProbabilityMap pcr5_classical(const ProbabilityMap& p1, const ProbabilityMap& p2);

/// Ways of distributing the nine products F_a X_b between F, N and H,
/// reading a triple as (friendly F, neutral N, hostile H).
enum class Scheme {
  very_pessimistic,  // F/N and H/N crosses to N, F/H conflict to N
  less_pessimistic,  // F/N and H/N crosses to N, F/H conflict by PCR5
  less_optimistic,   // F/N crosses to F, H/N crosses to H, F/H conflict to N
  very_optimistic,   // F/N crosses to F, H/N crosses to H, F/H conflict by PCR5
};

std::string_view to_string(Scheme s) noexcept;
/// Parses "very-pessimistic" and friends; Errc::invalid_input otherwise.
Scheme parse_scheme(std::string_view name);

/// Both inputs must be normalized (Errc::precondition_violation); the
/// output then sums to 1 without further normalization.
SubjectiveNP combine_scheme(const SubjectiveNP& a, const SubjectiveNP& b, Scheme scheme);

enum class TNormKind { min, product, lukasiewicz };
enum class TConormKind { max, probabilistic_sum, bounded_sum };

/// A t-norm / t-conorm pair. The built-ins cover min/max, product with
/// probabilistic sum and the Lukasiewicz pair; any other monotone pair can
/// be supplied as callables.
struct TNormConfig {
  std::function<double(double, double)> tnorm;
  std::function<double(double, double)> tconorm;
  std::string name;

  static TNormConfig make(TNormKind tnorm, TConormKind tconorm);
  static TNormConfig min_max() { return make(TNormKind::min, TConormKind::max); }
  static TNormConfig product_probsum() {
    return make(TNormKind::product, TConormKind::probabilistic_sum);
  }
  static TNormConfig lukasiewicz() {
    return make(TNormKind::lukasiewicz, TConormKind::bounded_sum);
  }
  /// "min-max", "product-probsum" or "lukasiewicz".
  static TNormConfig by_name(std::string_view name);
};

enum class TNormMode { pessimistic, optimistic };

/// pessimistic: (t1 ∧ t2, i1 ∨ i2, f1 ∨ f2)
/// optimistic:  (t1 ∧ t2, i1 ∧ i2, f1 ∨ f2)
/// optionally divided by the component sum afterwards.
SubjectiveNP tnorm_fuse(const SubjectiveNP& a, const SubjectiveNP& b, const TNormConfig& cfg,
                        TNormMode mode, bool normalize_result = false);

/// Divides by the component sum; Errc::cannot_normalize when it is zero.
SubjectiveNP normalize(const SubjectiveNP& np);

}  // namespace neutro
