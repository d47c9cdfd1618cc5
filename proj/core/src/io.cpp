#include "neutro/io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "neutro/error.hpp"

namespace neutro::io {

namespace {

[[noreturn]] void bad(const std::string& detail) { throw Error(Errc::parse_error, detail); }

template <class F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    bad(e.what());
  }
}

double round12(double v) {
  if (!std::isfinite(v)) return v;
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return std::strtod(buf, nullptr);
}

std::int64_t parse_int(std::string_view s) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    bad("'" + std::string(s) + "' is not an integer");
  }
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) bad(std::string("expected an object with '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing field '") + key + "'");
  return *it;
}

std::vector<LabeledChance> labeled_list(const Json& j, const ReadOptions& opt) {
  if (!j.is_array()) bad("expected an array of {\"label\", \"chance\"} objects");
  std::vector<LabeledChance> out;
  for (const auto& item : j) {
    out.push_back({field(item, "label").get<std::string>(),
                   scalar_from_json(field(item, "chance"), opt)});
  }
  return out;
}

std::vector<RefinedPart> part_list(const Json& j, const ReadOptions& opt) {
  std::vector<RefinedPart> out;
  for (const auto& lc : labeled_list(j, opt)) out.push_back({lc.label, lc.chance});
  return out;
}

Json labeled_json(const std::string& label, const Scalar& chance, const WriteOptions& opt) {
  Json j;
  j["label"] = label;
  j["chance"] = to_json(chance, opt);
  return j;
}

}  // namespace

Json parse(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    bad(e.what());
  }
}

Json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

std::string dump(const Json& j) { return j.dump(); }

Json to_json(const Scalar& s, const WriteOptions& opt) {
  if (opt.exact && s.is_exact()) {
    Json j;
    j["num"] = s.exact()->num();
    j["den"] = s.exact()->den();
    return j;
  }
  return round12(s.value());
}

Json to_json(const IntervalChance& x, const WriteOptions& opt) {
  if (x.is_degenerate()) return to_json(x.lo(), opt);
  return Json::array({to_json(x.lo(), opt), to_json(x.hi(), opt)});
}

Json to_json(const NeutrosophicProbability& np, const WriteOptions& opt) {
  Json j;
  j["t"] = to_json(np.t, opt);
  j["i"] = to_json(np.i, opt);
  j["f"] = to_json(np.f, opt);
  return j;
}

Json to_json(const ScalarTriple& s, const WriteOptions& opt) {
  Json j;
  j["t"] = to_json(s.t, opt);
  j["i"] = to_json(s.i, opt);
  j["f"] = to_json(s.f, opt);
  return j;
}

Json to_json(const SampleSpace& space, const WriteOptions& opt) {
  Json j;
  if (space.is_count_based()) {
    Json counts = Json::object();
    for (const auto& c : space.counts()) {
      std::string key = c.label;
      if (c.kind == LabelKind::indeterminacy) key += kIndetSuffix;
      counts[key] = c.count;
    }
    j["counts"] = std::move(counts);
    return j;
  }
  j["outcomes"] = Json::array();
  for (const auto& o : space.outcomes()) j["outcomes"].push_back(labeled_json(o.label, o.chance, opt));
  j["indeterminacy"] = Json::array();
  for (const auto& s : space.indeterminacies()) {
    j["indeterminacy"].push_back(labeled_json(s.label, s.chance, opt));
  }
  return j;
}

Json to_json(const TransitionMatrix& m, const WriteOptions& opt) {
  Json j;
  j["states"] = m.states();
  j["rows"] = Json::array();
  for (const auto& row : m.rows()) {
    Json r = Json::array();
    for (const auto& e : row) {
      r.push_back(Json::array({to_json(e.t, opt), to_json(e.i, opt), to_json(e.f, opt)}));
    }
    j["rows"].push_back(std::move(r));
  }
  return j;
}

Json to_json(const RefinedNP& r, const WriteOptions& opt) {
  auto list = [&](const std::vector<RefinedPart>& parts) {
    Json a = Json::array();
    for (const auto& p : parts) a.push_back(labeled_json(p.label, p.chance, opt));
    return a;
  };
  Json j;
  j["T"] = list(r.t_parts());
  j["I"] = list(r.i_parts());
  j["F"] = list(r.f_parts());
  return j;
}

Json to_json(const TrialLog& log) {
  Json counts = Json::object();
  for (const auto& c : log.entries()) counts[c.label] = c.count;
  Json j;
  j["total"] = log.total();
  j["counts"] = std::move(counts);
  return j;
}

Json to_json(const SubjectiveNP& np) {
  Json j;
  j["t"] = round12(np.t);
  j["i"] = round12(np.i);
  j["f"] = round12(np.f);
  return j;
}

Json to_json(const NeutrosophicIntegral& r) {
  Json j;
  j["determinate"] = round12(r.determinate);
  j["indeterminacy"] = Json::array({0.0, round12(r.indeterminacy)});
  return j;
}

Scalar scalar_from_json(const Json& j, const ReadOptions& opt) {
  return guarded([&]() -> Scalar {
    if (j.is_number_integer()) return Scalar(j.get<std::int64_t>());
    if (j.is_number()) {
      double v = j.get<double>();
      return opt.exact ? Scalar::decimal(v) : Scalar(v);
    }
    if (j.is_string()) return scalar_from_text(j.get<std::string>(), opt);
    if (j.is_object()) {
      return Scalar::fraction(field(j, "num").get<std::int64_t>(),
                              field(j, "den").get<std::int64_t>());
    }
    bad("expected a number, got " + j.dump());
  });
}

IntervalChance interval_from_json(const Json& j, const ReadOptions& opt) {
  return guarded([&]() -> IntervalChance {
    if (j.is_array()) {
      if (j.size() != 2) bad("an interval needs exactly two bounds, got " + j.dump());
      return {scalar_from_json(j[0], opt), scalar_from_json(j[1], opt)};
    }
    return IntervalChance(scalar_from_json(j, opt));
  });
}

NeutrosophicProbability np_from_json(const Json& j, const ReadOptions& opt) {
  return guarded([&]() -> NeutrosophicProbability {
    return {interval_from_json(field(j, "t"), opt), interval_from_json(field(j, "i"), opt),
            interval_from_json(field(j, "f"), opt)};
  });
}

ScalarTriple triple_from_json(const Json& j, const ReadOptions& opt) {
  return guarded([&]() -> ScalarTriple {
    if (j.is_array()) {
      if (j.size() != 3) bad("a triple needs three components, got " + j.dump());
      return {scalar_from_json(j[0], opt), scalar_from_json(j[1], opt),
              scalar_from_json(j[2], opt)};
    }
    return {scalar_from_json(field(j, "t"), opt), scalar_from_json(field(j, "i"), opt),
            scalar_from_json(field(j, "f"), opt)};
  });
}

SampleSpace space_from_json(const Json& j, const ReadOptions& opt) {
  return guarded([&]() -> SampleSpace {
    if (!j.is_object()) bad("a sample space must be a JSON object");
    if (j.contains("counts")) {
      const Json& counts = j["counts"];
      if (!counts.is_object()) bad("\"counts\" must be an object of label: count");
      std::vector<SampleSpace::Count> items;
      for (const auto& [key, value] : counts.items()) {
        SampleSpace::Count c{key, value.get<std::int64_t>(), LabelKind::outcome};
        if (key.size() > kIndetSuffix.size() && key.ends_with(kIndetSuffix)) {
          c.label = key.substr(0, key.size() - kIndetSuffix.size());
          c.kind = LabelKind::indeterminacy;
        }
        items.push_back(std::move(c));
      }
      return SampleSpace::from_counts(std::move(items));
    }
    std::vector<LabeledChance> indet;
    if (j.contains("indeterminacy")) indet = labeled_list(j["indeterminacy"], opt);
    return {labeled_list(field(j, "outcomes"), opt), std::move(indet)};
  });
}

TransitionMatrix matrix_from_json(const Json& j, const ReadOptions& opt) {
  return guarded([&]() -> TransitionMatrix {
    auto states = field(j, "states").get<std::vector<std::string>>();
    std::vector<std::vector<ScalarTriple>> rows;
    for (const auto& row : field(j, "rows")) {
      auto& out = rows.emplace_back();
      for (const auto& e : row) out.push_back(triple_from_json(e, opt));
    }
    return {std::move(states), std::move(rows)};
  });
}

RefinedNP refined_from_json(const Json& j, const ReadOptions& opt) {
  return guarded([&]() -> RefinedNP {
    return {part_list(field(j, "T"), opt), part_list(field(j, "I"), opt),
            part_list(field(j, "F"), opt)};
  });
}

SubjectiveNP subjective_from_json(const Json& j) {
  ScalarTriple s = triple_from_json(j);
  SubjectiveNP out{s.t.value(), s.i.value(), s.f.value(), {}};
  if (j.is_object() && j.contains("source")) out.source_id = j["source"].get<std::string>();
  return out;
}

Scalar scalar_from_text(std::string_view text, const ReadOptions& opt) {
  text = trim(text);
  if (text.empty()) bad("empty number");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::int64_t den = parse_int(trim(text.substr(slash + 1)));
    if (den == 0) bad("zero denominator in '" + std::string(text) + "'");
    return Scalar::fraction(parse_int(trim(text.substr(0, slash))), den);
  }
  if (text.find_first_of(".eE") == std::string_view::npos) return Scalar(parse_int(text));
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    bad("'" + std::string(text) + "' is not a number");
  }
  return opt.exact ? Scalar::decimal(v) : Scalar(v);
}

ScalarTriple triple_from_text(std::string_view text, const ReadOptions& opt) {
  std::vector<Scalar> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    parts.push_back(scalar_from_text(text.substr(start, comma - start), opt));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (parts.size() != 3) bad("a triple needs three comma-separated components: '" +
                             std::string(text) + "'");
  return {parts[0], parts[1], parts[2]};
}

}  // namespace neutro::io
