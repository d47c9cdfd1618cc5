#include "neutro/measure.hpp"

#include <cmath>
#include <sstream>

#include "neutro/error.hpp"

namespace neutro {

namespace {

// Subtracting m(X) from a floating sum can leave -1e-17 where 0 is meant.
constexpr double kAntiSlack = 1e-12;

}  // namespace

NeutrosophicMeasure::NeutrosophicMeasure(double det, double neut, double anti)
    : det_(det), neut_(neut), anti_(anti) {
  for (double v : {det, neut, anti}) {
    if (!std::isfinite(v) || v < 0.0) {
      throw Error(Errc::invalid_input, "measure components must be finite and nonnegative, got " + str());
    }
  }
}

std::string NeutrosophicMeasure::str() const {
  std::ostringstream os;
  os << "(" << det_ << ", " << neut_ << ", " << anti_ << ")";
  return os.str();
}

bool nm_leq(const NeutrosophicMeasure& a, const NeutrosophicMeasure& b) noexcept {
  return a.det() <= b.det() && a.neut() <= b.neut() && a.anti() >= b.anti();
}

NeutrosophicMeasure nm_add(const NeutrosophicMeasure& a, const NeutrosophicMeasure& b,
                           MeasureSpaceTotal total) {
  double anti = a.anti() + b.anti() - total.m_x;
  if (anti < 0.0) {
    if (anti < -kAntiSlack * std::max(1.0, total.m_x)) {
      throw Error(Errc::inconsistent_measure,
                  a.str() + " and " + b.str() + " cannot be disjoint parts of a space of measure " +
                      std::to_string(total.m_x));
    }
    anti = 0.0;
  }
  return {a.det() + b.det(), a.neut() + b.neut(), anti};
}

NeutrosophicMeasure nm_sum(std::span<const NeutrosophicMeasure> parts,
                           MeasureSpaceTotal total) {
  if (parts.empty()) throw Error(Errc::invalid_input, "nm_sum of an empty list");
  NeutrosophicMeasure acc = parts.front();
  for (const auto& p : parts.subspan(1)) acc = nm_add(acc, p, total);
  return acc;
}

bool nm_normalized(const NeutrosophicMeasure& m) noexcept {
  return std::fabs(m.det() + m.neut() + m.anti() - 1.0) <= 1e-9;
}

ApproximateNumber to_indeterminate_form(double lo, double hi) {
  if (!(lo <= hi)) throw Error(Errc::invalid_input, "approximate number with lo > hi");
  return {lo, hi - lo};
}

}  // namespace neutro
