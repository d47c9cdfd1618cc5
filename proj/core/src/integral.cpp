#include "neutro/integral.hpp"

#include <cmath>
#include <string>

#include "neutro/error.hpp"

namespace neutro {

namespace {

void check_panels(int panels) {
  if (panels < 2 || panels % 2 != 0) {
    throw Error(Errc::invalid_input,
                "Simpson quadrature needs an even panel count >= 2, got " + std::to_string(panels));
  }
}

// Like simpson() but a zero-length range integrates to 0.
double simpson_closed(const RealFunction& f, double a, double b, int panels) {
  if (a == b) return 0.0;
  return simpson(f, a, b, panels);
}

}  // namespace

double simpson(const RealFunction& f, double a, double b, int panels) {
  check_panels(panels);
  if (!(a < b)) throw Error(Errc::invalid_input, "integration range needs a < b");

  const double h = (b - a) / panels;
  double sum = f(a);
  for (int k = 1; k < panels; ++k) {
    double x = a + k * h;
    sum += (k % 2 == 1 ? 4.0 : 2.0) * f(x);
  }
  sum += f(b);
  return sum * h / 3.0;
}

NeutrosophicIntegral integrate_band(const BandFunction& fn, double a, double b, int panels) {
  check_panels(panels);
  if (!(a < b)) throw Error(Errc::invalid_input, "integration range needs a < b");

  const double step = (b - a) / panels;
  for (int k = 0; k <= panels; ++k) {
    double x = k == panels ? b : a + k * step;
    double w = fn.width(x);
    if (!(w >= 0.0)) {
      throw Error(Errc::invalid_band,
                  "indeterminacy width h(" + std::to_string(x) + ") = " + std::to_string(w) +
                      " is negative");
    }
  }
  return {simpson(fn.determinate, a, b, panels), simpson(fn.width, a, b, panels)};
}

UncertainLowerLimit integrate_uncertain_lower(const RealFunction& f, double a1, double eps_max,
                                              double b, int panels) {
  check_panels(panels);
  if (!(eps_max >= 0.0)) throw Error(Errc::invalid_input, "eps must be nonnegative");
  if (!(a1 + eps_max <= b)) throw Error(Errc::invalid_input, "a1 + eps must not exceed b");

  double w = simpson_closed(f, a1, a1 + eps_max, panels);
  double full = simpson_closed(f, a1, b, panels);
  double shifted = simpson_closed(f, a1 + eps_max, b, panels);
  return {{full, w}, {shifted, w}};
}

}  // namespace neutro
