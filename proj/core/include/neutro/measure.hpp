#pragma once

#include <span>
#include <string>

namespace neutro {

/// (m(A), m(neutA), m(antiA)): the determinate part of a set, its
/// indeterminate part, and the measure of its opposite. Units are those of
/// the measured quantity (pages, square metres, faces).
class NeutrosophicMeasure {
 public:
  NeutrosophicMeasure() = default;
  NeutrosophicMeasure(double det, double neut, double anti);

  double det() const noexcept { return det_; }
  double neut() const noexcept { return neut_; }
  double anti() const noexcept { return anti_; }

  std::string str() const;

  friend bool operator==(const NeutrosophicMeasure&, const NeutrosophicMeasure&) = default;

 private:
  double det_ = 0.0;
  double neut_ = 0.0;
  double anti_ = 0.0;
};

/// Total measure m(X) of the whole space a measure lives in.
struct MeasureSpaceTotal {
  double m_x = 1.0;
};

/// Componentwise order: det and neut grow, anti shrinks.
bool nm_leq(const NeutrosophicMeasure& a, const NeutrosophicMeasure& b) noexcept;

/// Measure of the union of two disjoint sets:
/// (a.det + b.det, a.neut + b.neut, a.anti + b.anti - m(X)).
/// The third component is the measure of antiA ∩ antiB, which cannot be
/// negative; Errc::inconsistent_measure is thrown when it would be.
NeutrosophicMeasure nm_add(const NeutrosophicMeasure& a, const NeutrosophicMeasure& b,
                           MeasureSpaceTotal total);

/// Left fold of nm_add over a finite list of pairwise-disjoint sets.
NeutrosophicMeasure nm_sum(std::span<const NeutrosophicMeasure> parts,
                           MeasureSpaceTotal total);

/// det + neut + anti == 1 within 1e-9.
bool nm_normalized(const NeutrosophicMeasure& m) noexcept;

/// An approximate real number r in [lo, hi] written as lo + i, i in [0, hi - lo].
/// Unlike IntervalChance the bounds may be any reals, including negative ones.
struct ApproximateNumber {
  double determinate = 0.0;
  double indeterminacy_bound = 0.0;
};

ApproximateNumber to_indeterminate_form(double lo, double hi);

}  // namespace neutro
