#pragma once

#include <functional>

namespace neutro {

using RealFunction = std::function<double(double)>;

/// f(x) = g(x) + i(x) with i(x) in [0, h(x)] and h(x) >= 0.
struct BandFunction {
  RealFunction determinate;  // g
  RealFunction width;        // h
};

/// determinate + i with i in [0, indeterminacy]. The width is in units of
/// the integrand and is not clipped to 1.
struct NeutrosophicIntegral {
  double determinate = 0.0;
  double indeterminacy = 0.0;
};

/// Composite Simpson rule over [a, b] with an even number of panels.
/// Nodes are summed in increasing x so results are reproducible.
double simpson(const RealFunction& f, double a, double b, int panels);

/// Integrates g and h separately. Throws Errc::invalid_band when h is
/// negative at any quadrature node.
NeutrosophicIntegral integrate_band(const BandFunction& fn, double a, double b, int panels);

/// Integral whose lower limit is a1 + eps with eps in [0, eps_max].
///
/// Two equivalent descriptions of the same value set:
///   low_form:  integral over [a1, b]         minus i, i in [0, w]
///   high_form: integral over [a1 + eps_max, b] plus i, i in [0, w]
/// where w is the integral over [a1, a1 + eps_max]. Both cover
/// [high_form.determinate, low_form.determinate].
struct UncertainLowerLimit {
  NeutrosophicIntegral low_form;
  NeutrosophicIntegral high_form;
};

UncertainLowerLimit integrate_uncertain_lower(const RealFunction& f, double a1, double eps_max,
                                              double b, int panels);

}  // namespace neutro
