#include "neutro/refined.hpp"

#include "neutro/error.hpp"

namespace neutro {

namespace {

void check_parts(const std::vector<RefinedPart>& parts, const char* name) {
  if (parts.empty()) {
    throw Error(Errc::invalid_input, std::string(name) + " component needs at least one part");
  }
  for (const auto& p : parts) {
    if (!(p.chance >= Scalar(0)) || !(p.chance <= Scalar(1))) {
      throw Error(Errc::invalid_input, "refined part '" + p.label + "' is outside [0, 1]");
    }
  }
}

Scalar sum_parts(const std::vector<RefinedPart>& parts) {
  Scalar acc(0);
  for (const auto& p : parts) acc += p.chance;
  return acc;
}

std::vector<RefinedPart> split(const Scalar& component, const RefinementWeights& w,
                               const char* prefix) {
  if (w.weights.empty()) {
    throw Error(Errc::weight_sum_violation, std::string(prefix) + " weights are empty");
  }
  if (!w.labels.empty() && w.labels.size() != w.weights.size()) {
    throw Error(Errc::invalid_input, std::string(prefix) + " labels and weights differ in length");
  }
  Scalar total(0);
  for (const auto& x : w.weights) {
    if (x < Scalar(0)) {
      throw Error(Errc::weight_sum_violation, std::string(prefix) + " weights must be nonnegative");
    }
    total += x;
  }
  if (!near(total, Scalar(1), 1e-9)) {
    throw Error(Errc::weight_sum_violation,
                std::string(prefix) + " weights sum to " + total.str() + ", not 1");
  }
  std::vector<RefinedPart> parts;
  for (std::size_t k = 0; k < w.weights.size(); ++k) {
    std::string label = w.labels.empty() ? prefix + std::to_string(k + 1) : w.labels[k];
    parts.push_back({std::move(label), component * w.weights[k]});
  }
  return parts;
}

}  // namespace

RefinedNP::RefinedNP(std::vector<RefinedPart> t_parts, std::vector<RefinedPart> i_parts,
                     std::vector<RefinedPart> f_parts)
    : t_(std::move(t_parts)), i_(std::move(i_parts)), f_(std::move(f_parts)) {
  check_parts(t_, "T");
  check_parts(i_, "I");
  check_parts(f_, "F");
}

ScalarTriple part_sums(const RefinedNP& r) {
  return {sum_parts(r.t_parts()), sum_parts(r.i_parts()), sum_parts(r.f_parts())};
}

NeutrosophicProbability coarsen(const RefinedNP& r) {
  ScalarTriple s = part_sums(r);
  return {clamp(s.t, 0, 1), clamp(s.i, 0, 1), clamp(s.f, 0, 1)};
}

RefinedNP refine(const ScalarTriple& np, const RefinementWeights& t_weights,
                 const RefinementWeights& i_weights, const RefinementWeights& f_weights) {
  return {split(np.t, t_weights, "T"), split(np.i, i_weights, "I"), split(np.f, f_weights, "F")};
}

RefinableComponents refinable_components(const RefinementDescriptor& d) {
  return {d.t_properties >= 2, d.i_properties >= 2, d.f_properties >= 2};
}

bool refinable(const RefinementDescriptor& d) {
  auto c = refinable_components(d);
  return c.t || c.i || c.f;
}

}  // namespace neutro
