#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "neutro/io.hpp"

namespace neutro::fixtures {

/// What the JSON payload of a fixture describes.
enum class Kind {
  space,           // sample space JSON, optionally with "events" / "payoffs"
  product,         // {"factors": [space...], "events": [[...]...], "sum": n}
  matrix,          // transition matrix JSON
  refined,         // refined triple JSON
  triple,          // {"t", "i", "f"}
  fusion_pair,     // {"a": triple, "b": triple}
  interval_union,  // {"a", "b", "ab": triples, "indeterm", "total"}
  intervals,       // named interval chances
  observations,    // {"space": space, "observations": [labels]}
  measure,         // {"det", "neut", "anti", "total"}
  integral,        // {"f": expr, "a1", "eps", "b"} or {"g", "h", "a", "b"}
};

std::string_view to_string(Kind k) noexcept;

struct Fixture {
  std::string name;
  Kind kind;
  std::string description;
  io::Json data;
};

/// Every worked example shipped with the library, in a fixed order.
const std::vector<Fixture>& all();

/// nullptr when no fixture has that name.
const Fixture* lookup(std::string_view name);

/// A value printed in the source material next to the value that its own
/// inputs and operators produce.
struct TypoEntry {
  std::string where;
  std::string quantity;
  std::string printed;
  std::string recomputed;
  std::string note;
};

const std::vector<TypoEntry>& typo_ledger();

io::Json typo_ledger_json();

}  // namespace neutro::fixtures
