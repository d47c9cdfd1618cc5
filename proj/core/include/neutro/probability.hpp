#pragma once

#include <string>
#include <string_view>

#include "neutro/interval.hpp"

namespace neutro {

/// Tolerance used when deciding whether t + i + f equals 1.
inline constexpr double kClassTolerance = 1e-9;

/// (t, i, f): chance the event occurs, chance of indeterminacy about it,
/// chance it does not occur. Components are closed intervals; point values
/// are degenerate intervals.
struct NeutrosophicProbability {
  IntervalChance t;
  IntervalChance i;
  IntervalChance f;

  bool is_scalar() const {
    return t.is_degenerate() && i.is_degenerate() && f.is_degenerate();
  }
  /// Sum of component midpoints; always within [0, 3].
  Scalar midpoint_sum() const { return t.midpoint() + i.midpoint() + f.midpoint(); }

  std::string str() const;

  friend bool operator==(const NeutrosophicProbability&,
                         const NeutrosophicProbability&) = default;
};

/// Point triple (t, i, f) with no interval structure. Used where the
/// operators are defined componentwise on numbers (transition matrices).
struct ScalarTriple {
  Scalar t;
  Scalar i;
  Scalar f;

  Scalar sum() const { return t + i + f; }
  NeutrosophicProbability to_probability() const { return {t, i, f}; }
  std::string str() const;

  friend bool operator==(const ScalarTriple&, const ScalarTriple&) = default;
};

enum class CompletenessClass { complete, incomplete, paraconsistent };

std::string_view to_string(CompletenessClass c) noexcept;

/// Complete when t + i + f = 1 within kClassTolerance, paraconsistent above,
/// incomplete below. Throws Errc::classification_undefined for interval
/// components.
CompletenessClass classify(const NeutrosophicProbability& np);
CompletenessClass classify(const ScalarTriple& np);

/// Divides a point triple by its component sum. Throws Errc::cannot_normalize
/// when the sum is not positive.
ScalarTriple normalize(const ScalarTriple& np);

/// Swaps the occurrence and non-occurrence components.
NeutrosophicProbability anti(const NeutrosophicProbability& np);

}  // namespace neutro
