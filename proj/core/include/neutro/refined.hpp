#pragma once

#include <span>
#include <string>
#include <vector>

#include "neutro/probability.hpp"

namespace neutro {

/// One sub-chance of a refined component, tagged with the property it
/// stands for ("win-by-1", "deep-crack", ...). Labels are free-form.
struct RefinedPart {
  std::string label;
  Scalar chance;

  friend bool operator==(const RefinedPart&, const RefinedPart&) = default;
};

/// ((T1..Tp), (I1..Ir), (F1..Fs)) with p, r, s >= 1.
class RefinedNP {
 public:
  RefinedNP(std::vector<RefinedPart> t_parts, std::vector<RefinedPart> i_parts,
            std::vector<RefinedPart> f_parts);

  const std::vector<RefinedPart>& t_parts() const noexcept { return t_; }
  const std::vector<RefinedPart>& i_parts() const noexcept { return i_; }
  const std::vector<RefinedPart>& f_parts() const noexcept { return f_; }
  /// n = p + r + s
  std::size_t arity() const noexcept { return t_.size() + i_.size() + f_.size(); }

  friend bool operator==(const RefinedNP&, const RefinedNP&) = default;

 private:
  std::vector<RefinedPart> t_;
  std::vector<RefinedPart> i_;
  std::vector<RefinedPart> f_;
};

/// Sums of the parts, each clipped into [0, 1].
NeutrosophicProbability coarsen(const RefinedNP& r);

/// Component sums without clipping.
ScalarTriple part_sums(const RefinedNP& r);

/// Split weights for one component. Labels default to "T1", "I2", ...
struct RefinementWeights {
  std::vector<Scalar> weights;
  std::vector<std::string> labels;
};

/// Splits each component of a point triple by its weights. Every weight
/// list must be nonempty, nonnegative and sum to 1 within 1e-9
/// (Errc::weight_sum_violation).
RefinedNP refine(const ScalarTriple& np, const RefinementWeights& t_weights,
                 const RefinementWeights& i_weights, const RefinementWeights& f_weights);

/// What is known about how finely a situation can be described: the number
/// of distinguishable properties for occurrence, indeterminacy and
/// non-occurrence.
struct RefinementDescriptor {
  int t_properties = 1;
  int i_properties = 1;
  int f_properties = 1;
};

struct RefinableComponents {
  bool t = false;
  bool i = false;
  bool f = false;
};

RefinableComponents refinable_components(const RefinementDescriptor& d);
/// True when at least one component has two or more properties.
bool refinable(const RefinementDescriptor& d);

}  // namespace neutro
