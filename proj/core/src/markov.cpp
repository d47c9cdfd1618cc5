#include "neutro/markov.hpp"

#include <unordered_set>

#include "neutro/error.hpp"

namespace neutro {

namespace {

Scalar combine2(Combiner c, const Scalar& a, const Scalar& b) {
  switch (c) {
    case Combiner::max: return max(a, b);
    case Combiner::min: return min(a, b);
    case Combiner::mean: return (a + b) / Scalar(2);
  }
  return a;
}

Scalar mean_tree(std::span<const Scalar> v) {
  if (v.size() == 1) return v[0];
  std::size_t half = v.size() / 2;
  return (mean_tree(v.first(half)) + mean_tree(v.subspan(half))) / Scalar(2);
}

void check_unit(const ScalarTriple& e, std::size_t r, std::size_t c) {
  for (const Scalar* v : {&e.t, &e.i, &e.f}) {
    if (!(*v >= Scalar(0)) || !(*v <= Scalar(1))) {
      throw Error(Errc::invalid_input, "matrix entry (" + std::to_string(r) + ", " +
                                           std::to_string(c) + ") = " + e.str() +
                                           " has a component outside [0, 1]");
    }
  }
}

// Sum of the products of one output entry, in k order.
ScalarTriple accumulate(std::span<const ScalarTriple> products, const OperatorConfig& cfg) {
  Scalar t(0);
  std::vector<Scalar> is;
  std::vector<Scalar> fs;
  for (const auto& p : products) {
    t += p.t;
    is.push_back(p.i);
    fs.push_back(p.f);
  }
  return {min(t, Scalar(1)), combine(cfg.add_i, is), combine(cfg.add_f, fs)};
}

}  // namespace

std::string_view to_string(Combiner c) noexcept {
  switch (c) {
    case Combiner::max: return "max";
    case Combiner::min: return "min";
    case Combiner::mean: return "mean";
  }
  return "unknown";
}

Combiner parse_combiner(std::string_view name) {
  for (Combiner c : {Combiner::max, Combiner::min, Combiner::mean}) {
    if (name == to_string(c)) return c;
  }
  throw Error(Errc::invalid_input, "unknown combiner '" + std::string(name) + "'");
}

Scalar combine(Combiner c, std::span<const Scalar> values) {
  if (values.empty()) throw Error(Errc::invalid_input, "combine of no values");
  if (c == Combiner::mean) return mean_tree(values);
  Scalar acc = values[0];
  for (const auto& v : values.subspan(1)) acc = combine2(c, acc, v);
  return acc;
}

OperatorConfig OperatorConfig::by_name(std::string_view name) {
  if (name == "standard") return standard();
  if (name == "min-i") return min_i();
  if (name == "mean-i") return mean_i();
  std::vector<Combiner> parts;
  std::size_t start = 0;
  while (start <= name.size()) {
    std::size_t comma = name.find(',', start);
    if (comma == std::string_view::npos) comma = name.size();
    parts.push_back(parse_combiner(name.substr(start, comma - start)));
    start = comma + 1;
  }
  if (parts.size() != 4) {
    throw Error(Errc::invalid_input, "unknown operator set '" + std::string(name) + "'");
  }
  return {parts[0], parts[1], parts[2], parts[3]};
}

ScalarTriple triple_mul(const ScalarTriple& a, const ScalarTriple& b, const OperatorConfig& cfg) {
  return {a.t * b.t, combine2(cfg.mul_i, a.i, b.i), combine2(cfg.mul_f, a.f, b.f)};
}

ScalarTriple triple_add(const ScalarTriple& a, const ScalarTriple& b, const OperatorConfig& cfg) {
  return {min(a.t + b.t, Scalar(1)), combine2(cfg.add_i, a.i, b.i),
          combine2(cfg.add_f, a.f, b.f)};
}

TransitionMatrix::TransitionMatrix(std::vector<std::string> states,
                                   std::vector<std::vector<ScalarTriple>> rows)
    : states_(std::move(states)), rows_(std::move(rows)) {
  const std::size_t n = states_.size();
  if (n == 0) throw Error(Errc::invalid_input, "transition matrix needs at least one state");
  std::unordered_set<std::string> seen(states_.begin(), states_.end());
  if (seen.size() != n) throw Error(Errc::invalid_input, "state labels must be unique");
  if (rows_.size() != n) throw Error(Errc::dimension_mismatch, "matrix must be square");
  for (std::size_t r = 0; r < n; ++r) {
    if (rows_[r].size() != n) throw Error(Errc::dimension_mismatch, "matrix must be square");
    for (std::size_t c = 0; c < n; ++c) check_unit(rows_[r][c], r, c);
  }
}

TransitionMatrix TransitionMatrix::identity(std::vector<std::string> states) {
  const std::size_t n = states.size();
  std::vector<std::vector<ScalarTriple>> rows(n, std::vector<ScalarTriple>(n));
  for (std::size_t k = 0; k < n; ++k) rows[k][k] = {Scalar(1), Scalar(0), Scalar(0)};
  return {std::move(states), std::move(rows)};
}

TransitionMatrix TransitionMatrix::classical(std::vector<std::string> states,
                                             const std::vector<std::vector<Scalar>>& p) {
  std::vector<std::vector<ScalarTriple>> rows;
  for (const auto& prow : p) {
    auto& row = rows.emplace_back();
    for (const auto& v : prow) row.push_back({v, Scalar(0), Scalar(0)});
  }
  return {std::move(states), std::move(rows)};
}

TransitionMatrix mat_mul(const TransitionMatrix& a, const TransitionMatrix& b,
                         const OperatorConfig& cfg) {
  const std::size_t n = a.size();
  if (b.size() != n) throw Error(Errc::dimension_mismatch, "matrix sizes differ");
  std::vector<std::vector<ScalarTriple>> rows(n, std::vector<ScalarTriple>(n));
  std::vector<ScalarTriple> products(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      for (std::size_t k = 0; k < n; ++k) products[k] = triple_mul(a.at(r, k), b.at(k, c), cfg);
      rows[r][c] = accumulate(products, cfg);
    }
  }
  return {a.states(), std::move(rows)};
}

TransitionMatrix mat_power(const TransitionMatrix& a, int m, const OperatorConfig& cfg) {
  if (m < 1) throw Error(Errc::invalid_input, "matrix power needs m >= 1");
  TransitionMatrix acc = a;
  for (int k = 1; k < m; ++k) acc = mat_mul(acc, a, cfg);
  return acc;
}

TransitionMatrix row_normalize(const TransitionMatrix& a) {
  std::vector<std::vector<ScalarTriple>> rows = a.rows();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    Scalar sum(0);
    for (const auto& e : rows[r]) sum += e.sum();
    if (!(sum > Scalar(0))) {
      throw Error(Errc::cannot_normalize, "row '" + a.states()[r] + "' has no mass");
    }
    for (auto& e : rows[r]) e = {e.t / sum, e.i / sum, e.f / sum};
  }
  return {a.states(), std::move(rows)};
}

StateVector step(std::span<const ScalarTriple> x, const TransitionMatrix& a,
                 const OperatorConfig& cfg) {
  const std::size_t n = a.size();
  if (x.size() != n) throw Error(Errc::dimension_mismatch, "state vector length differs from matrix");
  StateVector out(n);
  std::vector<ScalarTriple> products(n);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t k = 0; k < n; ++k) products[k] = triple_mul(x[k], a.at(k, c), cfg);
    out[c] = accumulate(products, cfg);
  }
  return out;
}

StateVector step(std::span<const Scalar> x, const TransitionMatrix& a, const OperatorConfig& cfg) {
  const std::size_t n = a.size();
  if (x.size() != n) throw Error(Errc::dimension_mismatch, "state vector length differs from matrix");
  StateVector out(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<ScalarTriple> terms;
    for (std::size_t k = 0; k < n; ++k) {
      if (x[k] == Scalar(0)) continue;
      const auto& e = a.at(k, c);
      terms.push_back({x[k] * e.t, e.i, e.f});
    }
    out[c] = terms.empty() ? ScalarTriple{} : accumulate(terms, cfg);
  }
  return out;
}

}  // namespace neutro
