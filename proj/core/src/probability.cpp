#include "neutro/probability.hpp"

#include "neutro/error.hpp"

namespace neutro {

std::string NeutrosophicProbability::str() const {
  return "(" + t.str() + ", " + i.str() + ", " + f.str() + ")";
}

std::string ScalarTriple::str() const {
  return "(" + t.str() + ", " + i.str() + ", " + f.str() + ")";
}

std::string_view to_string(CompletenessClass c) noexcept {
  switch (c) {
    case CompletenessClass::complete: return "complete";
    case CompletenessClass::incomplete: return "incomplete";
    case CompletenessClass::paraconsistent: return "paraconsistent";
  }
  return "unknown";
}

CompletenessClass classify(const ScalarTriple& np) {
  Scalar sum = np.sum();
  if (near(sum, Scalar(1), kClassTolerance)) return CompletenessClass::complete;
  return sum > Scalar(1) ? CompletenessClass::paraconsistent
                         : CompletenessClass::incomplete;
}

CompletenessClass classify(const NeutrosophicProbability& np) {
  if (!np.is_scalar()) {
    throw Error(Errc::classification_undefined,
                "classification needs point components, got " + np.str());
  }
  return classify(ScalarTriple{np.t.lo(), np.i.lo(), np.f.lo()});
}

ScalarTriple normalize(const ScalarTriple& np) {
  Scalar sum = np.sum();
  if (!(sum > Scalar(0))) {
    throw Error(Errc::cannot_normalize, "triple " + np.str() + " has no positive mass");
  }
  return {np.t / sum, np.i / sum, np.f / sum};
}

NeutrosophicProbability anti(const NeutrosophicProbability& np) {
  return {np.f, np.i, np.t};
}

}  // namespace neutro
