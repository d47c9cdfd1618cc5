#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "neutro/fusion.hpp"
#include "neutro/integral.hpp"
#include "neutro/markov.hpp"
#include "neutro/montecarlo.hpp"
#include "neutro/probability.hpp"
#include "neutro/refined.hpp"
#include "neutro/sample_space.hpp"

namespace neutro::io {

/// Key order is preserved so label order survives a round trip.
using Json = nlohmann::ordered_json;

/// Suffix that marks an indeterminacy class in the {"counts": ...} form.
inline constexpr std::string_view kIndetSuffix = "~indet";

struct ReadOptions {
  /// Read decimal literals as the exact fraction they spell (0.15 = 3/20).
  bool exact = false;
};

struct WriteOptions {
  /// Write exact values as {"num": a, "den": b}.
  bool exact = false;
};

/// Parses text as JSON; malformed input throws Errc::parse_error.
Json parse(std::string_view text);
/// Reads and parses a file. A missing file throws std::ios_base::failure.
Json load_file(const std::string& path);
/// Compact single-line rendering.
std::string dump(const Json& j);

/// Doubles are rounded to 12 significant digits.
Json to_json(const Scalar& s, const WriteOptions& opt = {});
Json to_json(const IntervalChance& x, const WriteOptions& opt = {});
Json to_json(const NeutrosophicProbability& np, const WriteOptions& opt = {});
Json to_json(const ScalarTriple& s, const WriteOptions& opt = {});
Json to_json(const SampleSpace& space, const WriteOptions& opt = {});
Json to_json(const TransitionMatrix& m, const WriteOptions& opt = {});
Json to_json(const RefinedNP& r, const WriteOptions& opt = {});
Json to_json(const TrialLog& log);
Json to_json(const SubjectiveNP& np);
Json to_json(const NeutrosophicIntegral& r);

/// A number, an integer, a "a/b" string or a {"num", "den"} object.
Scalar scalar_from_json(const Json& j, const ReadOptions& opt = {});
/// A scalar or a two-element [lo, hi] array.
IntervalChance interval_from_json(const Json& j, const ReadOptions& opt = {});
/// {"t": ..., "i": ..., "f": ...}
NeutrosophicProbability np_from_json(const Json& j, const ReadOptions& opt = {});
/// {"t", "i", "f"} object or a [t, i, f] array of scalars.
ScalarTriple triple_from_json(const Json& j, const ReadOptions& opt = {});
/// {"outcomes": [...], "indeterminacy": [...]} or {"counts": {...}}.
SampleSpace space_from_json(const Json& j, const ReadOptions& opt = {});
/// {"states": [...], "rows": [[[t, i, f], ...], ...]}
TransitionMatrix matrix_from_json(const Json& j, const ReadOptions& opt = {});
/// {"T": [{"label", "chance"}], "I": [...], "F": [...]}
RefinedNP refined_from_json(const Json& j, const ReadOptions& opt = {});
SubjectiveNP subjective_from_json(const Json& j);

/// "0.6,0.1,0.3" as a point triple.
ScalarTriple triple_from_text(std::string_view text, const ReadOptions& opt = {});
/// One decimal, integer or "a/b" literal.
Scalar scalar_from_text(std::string_view text, const ReadOptions& opt = {});

}  // namespace neutro::io
