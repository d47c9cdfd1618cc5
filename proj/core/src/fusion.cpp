#include "neutro/fusion.hpp"

#include <algorithm>
#include <cmath>

#include "neutro/error.hpp"

namespace neutro {

namespace {

// Share of the conflicting product x*y that goes back to x: x^2 y / (x + y).
double share(double x, double y) {
  double d = x + y;
  return d == 0.0 ? 0.0 : x * x * y / d;
}

}  // namespace

bool SubjectiveNP::is_normalized(double tol) const noexcept {
  return std::fabs(sum() - 1.0) <= tol;
}

SubjectiveNP pcr5_fuse(const SubjectiveNP& a, const SubjectiveNP& b) {
  SubjectiveNP out;
  out.t = a.t * b.t + (share(a.t, b.i) + share(b.t, a.i)) + (share(a.t, b.f) + share(b.t, a.f));
  out.i = a.i * b.i + (share(a.i, b.t) + share(b.i, a.t)) + (share(a.i, b.f) + share(b.i, a.f));
  out.f = a.f * b.f + (share(a.f, b.t) + share(b.f, a.t)) + (share(a.f, b.i) + share(b.f, a.i));
  out.source_id = a.source_id + "+" + b.source_id;
  return out;
}

ProbabilityMap pcr5_classical(const ProbabilityMap& p1, const ProbabilityMap& p2) {
  if (p1.size() != p2.size() ||
      !std::equal(p1.begin(), p1.end(), p2.begin(),
                  [](const auto& x, const auto& y) { return x.first == y.first; })) {
    throw Error(Errc::label_mismatch, "PCR5 needs both maps over the same labels");
  }
  ProbabilityMap out;
  for (const auto& [e, pe1] : p1) {
    double pe2 = p2.at(e);
    double mass = pe1 * pe2;
    for (const auto& [x, px1] : p1) {
      if (x == e) continue;
      double px2 = p2.at(x);
      mass += share(pe1, px2) + share(pe2, px1);
    }
    out[e] = mass;
  }
  return out;
}

std::string_view to_string(Scheme s) noexcept {
  switch (s) {
    case Scheme::very_pessimistic: return "very-pessimistic";
    case Scheme::less_pessimistic: return "less-pessimistic";
    case Scheme::less_optimistic: return "less-optimistic";
    case Scheme::very_optimistic: return "very-optimistic";
  }
  return "unknown";
}

Scheme parse_scheme(std::string_view name) {
  for (Scheme s : {Scheme::very_pessimistic, Scheme::less_pessimistic, Scheme::less_optimistic,
                   Scheme::very_optimistic}) {
    if (name == to_string(s)) return s;
  }
  throw Error(Errc::invalid_input, "unknown combination scheme '" + std::string(name) + "'");
}

SubjectiveNP combine_scheme(const SubjectiveNP& a, const SubjectiveNP& b, Scheme scheme) {
  if (!a.is_normalized() || !b.is_normalized()) {
    throw Error(Errc::precondition_violation, "scheme combination needs normalized inputs");
  }
  // F = t, N = i, H = f.
  double F = a.t * b.t;
  double N = a.i * b.i;
  double H = a.f * b.f;

  const double fn_cross = a.t * b.i + a.i * b.t;
  const double hn_cross = a.f * b.i + a.i * b.f;
  const bool pessimistic =
      scheme == Scheme::very_pessimistic || scheme == Scheme::less_pessimistic;
  if (pessimistic) {
    N += fn_cross + hn_cross;
  } else {
    F += fn_cross;
    H += hn_cross;
  }

  const bool conflict_to_neutral =
      scheme == Scheme::very_pessimistic || scheme == Scheme::less_optimistic;
  if (conflict_to_neutral) {
    N += a.t * b.f + a.f * b.t;
  } else {
    // F1 H2 splits in proportion F1 : H2, H1 F2 in proportion F2 : H1.
    F += share(a.t, b.f) + share(b.t, a.f);
    H += share(b.f, a.t) + share(a.f, b.t);
  }
  return {F, N, H, a.source_id + "+" + b.source_id};
}

TNormConfig TNormConfig::make(TNormKind tnorm, TConormKind tconorm) {
  TNormConfig cfg;
  switch (tnorm) {
    case TNormKind::min:
      cfg.tnorm = [](double x, double y) { return std::min(x, y); };
      cfg.name = "min";
      break;
    case TNormKind::product:
      cfg.tnorm = [](double x, double y) { return x * y; };
      cfg.name = "product";
      break;
    case TNormKind::lukasiewicz:
      cfg.tnorm = [](double x, double y) { return std::max(0.0, x + y - 1.0); };
      cfg.name = "lukasiewicz";
      break;
  }
  switch (tconorm) {
    case TConormKind::max:
      cfg.tconorm = [](double x, double y) { return std::max(x, y); };
      cfg.name += "/max";
      break;
    case TConormKind::probabilistic_sum:
      cfg.tconorm = [](double x, double y) { return x + y - x * y; };
      cfg.name += "/probsum";
      break;
    case TConormKind::bounded_sum:
      cfg.tconorm = [](double x, double y) { return std::min(1.0, x + y); };
      cfg.name += "/bounded-sum";
      break;
  }
  return cfg;
}

TNormConfig TNormConfig::by_name(std::string_view name) {
  if (name == "min-max") return min_max();
  if (name == "product-probsum") return product_probsum();
  if (name == "lukasiewicz") return lukasiewicz();
  throw Error(Errc::invalid_input, "unknown t-norm pair '" + std::string(name) + "'");
}

SubjectiveNP tnorm_fuse(const SubjectiveNP& a, const SubjectiveNP& b, const TNormConfig& cfg,
                        TNormMode mode, bool normalize_result) {
  SubjectiveNP out;
  out.t = cfg.tnorm(a.t, b.t);
  out.i = mode == TNormMode::pessimistic ? cfg.tconorm(a.i, b.i) : cfg.tnorm(a.i, b.i);
  out.f = cfg.tconorm(a.f, b.f);
  out.source_id = a.source_id + "+" + b.source_id;
  return normalize_result ? normalize(out) : out;
}

SubjectiveNP normalize(const SubjectiveNP& np) {
  double s = np.sum();
  if (!(s > 0.0)) throw Error(Errc::cannot_normalize, "triple has no positive mass");
  return {np.t / s, np.i / s, np.f / s, np.source_id};
}

}  // namespace neutro
