#include "neutro/fixtures.hpp"

#include <array>

namespace neutro::fixtures {

namespace {

using io::Json;

constexpr const char* kFrequentistDie = R"({
  "outcomes": [
    {"label": "1", "chance": 0.15}, {"label": "2", "chance": 0.15},
    {"label": "3", "chance": 0.15}, {"label": "4", "chance": 0.15},
    {"label": "5", "chance": 0.15}, {"label": "6", "chance": 0.15}
  ],
  "indeterminacy": [{"label": "indeterm", "chance": 0.10}]
})";

constexpr const char* kFairDie = R"({
  "outcomes": [
    {"label": "1", "chance": "1/6"}, {"label": "2", "chance": "1/6"},
    {"label": "3", "chance": "1/6"}, {"label": "4", "chance": "1/6"},
    {"label": "5", "chance": "1/6"}, {"label": "6", "chance": "1/6"}
  ],
  "indeterminacy": []
})";

constexpr const char* kCoin = R"({
  "outcomes": [{"label": "H", "chance": 0.49}, {"label": "T", "chance": 0.49}],
  "indeterminacy": [{"label": "I", "chance": 0.02}]
})";

constexpr const char* kFairCoin = R"({
  "outcomes": [{"label": "H", "chance": "1/2"}, {"label": "T", "chance": "1/2"}],
  "indeterminacy": []
})";

Json deck() {
  const std::array<const char*, 13> ranks{"A", "2", "3", "4", "5", "6", "7",
                                          "8", "9", "10", "J", "Q", "K"};
  const std::array<const char*, 4> suits{"H", "D", "C", "S"};
  Json counts = Json::object();
  Json face = Json::array();
  Json heart = Json::array();
  for (const char* s : suits) {
    for (const char* r : ranks) {
      std::string card = std::string(r) + s;
      if (card == "2C" || card == "3C") continue;  // the two unreadable cards
      counts[card] = 1;
      if (r[0] == 'J' || r[0] == 'Q' || r[0] == 'K') face.push_back(card);
      if (s[0] == 'H') heart.push_back(card);
    }
  }
  counts["unreadable~indet"] = 2;
  Json j;
  j["counts"] = std::move(counts);
  j["events"] = {{"face", face}, {"heart", heart}};
  return j;
}

Json space_with(const char* space, const char* extras) {
  Json j = io::parse(space);
  Json more = io::parse(extras);
  for (auto& [k, v] : more.items()) j[k] = v;
  return j;
}

std::vector<Fixture> build() {
  std::vector<Fixture> out;
  auto add = [&](std::string name, Kind kind, std::string description, Json data) {
    out.push_back({std::move(name), kind, std::move(description), std::move(data)});
  };

  add("frequentist-die", Kind::space,
      "Die tossed on a cracked surface: each face 0.15, stuck in a crack 0.10",
      space_with(kFrequentistDie, R"({"events": {"low": ["1", "2", "3"], "mid": ["2", "3", "4", "5"]}})"));
  add("fair-die", Kind::space, "Classical fair die", io::parse(kFairDie));
  add("erased-die", Kind::space,
      "Die with faces 5 and 6 erased: faces 1-4 at 1/6, unreadable 2/6; 5 and 6 kept as "
      "zero-chance outcomes",
      io::parse(R"({"counts": {"1": 1, "2": 1, "3": 1, "4": 1, "5": 0, "6": 0, "indeterm~indet": 2}})"));
  add("four-erased-die", Kind::space,
      "Die with faces 1-4 erased on a regular surface: NP(5) = (1/6, 4/6, 1/6)",
      io::parse(R"({"counts": {"5": 1, "6": 1, "indeterm~indet": 4}})"));
  add("double-indeterminacy-die", Kind::space,
      "Die with two erased faces on a cracked surface: faces 1-4 at 0.15, erased prints 0.30, "
      "cracks 0.10",
      io::parse(R"({
        "outcomes": [{"label": "1", "chance": 0.15}, {"label": "2", "chance": 0.15},
                     {"label": "3", "chance": 0.15}, {"label": "4", "chance": 0.15}],
        "indeterminacy": [{"label": "indeterm_d", "chance": 0.30},
                          {"label": "indeterm_s", "chance": 0.10}]})"));
  add("truncated-die", Kind::space,
      "Faces 4, 5, 6 erased: 1, 2, 3 at 1/6 and indeterminacy 3/6; removing the "
      "indeterminacy leaves total 1/2",
      io::parse(R"({"counts": {"1": 1, "2": 1, "3": 1, "indeterm~indet": 3}})"));
  add("coin", Kind::space, "Coin that lands on its edge with chance 0.02", io::parse(kCoin));
  add("fair-coin", Kind::space, "Classical fair coin", io::parse(kFairCoin));
  add("urn-5-2-3", Kind::space,
      "Urn of ten votes: 5 for A, 2 indeterminate, 3 for B; payoffs A -2, B +3, I -1",
      io::parse(R"({"counts": {"A": 5, "I~indet": 2, "B": 3},
                    "payoffs": {"A": -2, "B": 3, "I": -1}})"));
  add("deck", Kind::space,
      "52-card deck with two unreadable cards (modelled as 2C and 3C so that all 12 face "
      "cards and 13 hearts are readable)",
      deck());
  add("spinner", Kind::space,
      "Spinner over [0, 360] degrees with the fourth quadrant erased, reduced to four regions",
      io::parse(R"({"counts": {"0-90": 90, "90-100": 10, "100-270": 170, "270-360~indet": 90},
                    "events": {"target": ["90-100"]}})"));
  add("election", Kind::space,
      "Two candidates: A 0.46, B 0.45, blank or black votes 0.09. The printed NP(A) has "
      "f = 0.045; the stated chance of B gives f = 0.45",
      io::parse(R"({
        "outcomes": [{"label": "A", "chance": 0.46}, {"label": "B", "chance": 0.45}],
        "indeterminacy": [{"label": "blank-or-black", "chance": 0.09}],
        "readings": {"printed": {"t": 0.46, "i": 0.09, "f": 0.045},
                     "from-prose": {"t": 0.46, "i": 0.09, "f": 0.45}}})"));

  Json two_dice;
  two_dice["factors"] = Json::array({io::parse(kFrequentistDie), io::parse(kFrequentistDie)});
  two_dice["events"] = Json::array({Json::array({"3"}), Json::array({"4"})});
  two_dice["sum"] = 6;
  add("two-dice", Kind::product, "Two frequentist dice: NP({3} and {4}) and NP(sum = 6)",
      std::move(two_dice));

  Json fair_two_dice;
  fair_two_dice["factors"] = Json::array({io::parse(kFairDie), io::parse(kFairDie)});
  fair_two_dice["events"] = Json::array({Json::array({"3"}), Json::array({"4"})});
  fair_two_dice["sum"] = 6;
  add("fair-two-dice", Kind::product, "Two classical dice: P(sum = 6) = 5/36",
      std::move(fair_two_dice));

  Json coin_cubed;
  coin_cubed["factors"] = Json::array({io::parse(kCoin), io::parse(kCoin), io::parse(kCoin)});
  coin_cubed["events"] = Json::array({Json::array({"H"}), Json::array({"T"}), Json::array({"T"})});
  add("coin-cubed", Kind::product, "Three flips of the edge-landing coin, outcome HTT",
      std::move(coin_cubed));

  Json fair_coin_cubed;
  fair_coin_cubed["factors"] =
      Json::array({io::parse(kFairCoin), io::parse(kFairCoin), io::parse(kFairCoin)});
  fair_coin_cubed["events"] =
      Json::array({Json::array({"H"}), Json::array({"T"}), Json::array({"T"})});
  add("fair-coin-cubed", Kind::product, "Three flips of a classical coin, outcome HTT",
      std::move(fair_coin_cubed));

  add("deck-intervals", Kind::interval_union,
      "Deck where the unreadable cards may be face cards or hearts: A = face, B = heart",
      io::parse(R"({
        "a":  {"t": ["10/52", "12/52"], "i": "2/52", "f": ["38/52", "40/52"]},
        "b":  {"t": ["11/52", "13/52"], "i": "2/52", "f": ["37/52", "39/52"]},
        "ab": {"t": ["1/52", "3/52"],   "i": "2/52", "f": ["47/52", "49/52"]},
        "indeterm": "2/52", "total": 1})"));
  add("weather", Kind::intervals, "Imprecise weather forecast for one day",
      io::parse(R"({"sunny": [0.1, 0.2], "rainy": [0.5, 0.7], "snowfall": [0.3, 0.6]})"));
  Json survey;
  survey["space"] = io::parse(kFrequentistDie);
  survey["observations"] = Json::array({"2", "5", "1", "indeterm", "4"});
  add("survey", Kind::observations,
      "Regular die tossed five times on an irregular surface: 2, 5, 1, indeterminacy, 4",
      std::move(survey));

  add("markov-economy", Kind::matrix,
      "World economy chain over prosperity (P), recession (R) and depression (D)",
      io::parse(R"({
        "states": ["P", "R", "D"],
        "rows": [
          [[0.40, 0.10, 0.00], [0.20, 0.00, 0.10], [0.10, 0.05, 0.05]],
          [[0.19, 0.03, 0.08], [0.35, 0.05, 0.00], [0.24, 0.03, 0.04]],
          [[0.07, 0.03, 0.10], [0.27, 0.09, 0.04], [0.32, 0.06, 0.02]]]})"));
  add("refined-handball", Kind::refined,
      "Handball win probability (0.7, 0.1, 0.2) refined by goal difference and tie score "
      "(T parts reconstructed so that they sum to 0.7)",
      io::parse(R"({
        "T": [{"label": "win-by-1", "chance": 0.4}, {"label": "win-by-2", "chance": 0.2},
              {"label": "win-by-3", "chance": 0.05}, {"label": "win-by-4-or-more", "chance": 0.05}],
        "I": [{"label": "tie-0-0-or-1-1", "chance": 0.03}, {"label": "tie-2-2", "chance": 0.05},
              {"label": "tie-3-3-or-more", "chance": 0.02}],
        "F": [{"label": "lose-by-1", "chance": 0.1}, {"label": "lose-by-2", "chance": 0.08},
              {"label": "lose-by-3-or-more", "chance": 0.02}]})"));

  add("satellite", Kind::fusion_pair,
      "Two sources on whether a satellite will be launched on time",
      io::parse(R"({"a": {"t": 0.6, "i": 0.1, "f": 0.3, "source": "source-1"},
                    "b": {"t": 0.2, "i": 0.3, "f": 0.5, "source": "source-2"}})"));
  add("candidates", Kind::fusion_pair,
      "Two experts on a candidate, combined with min/max pessimistically or optimistically",
      io::parse(R"({"a": {"t": 0.4, "i": 0.1, "f": 0.5}, "b": {"t": 0.3, "i": 0.5, "f": 0.2}})"));
  add("alpha-gamma", Kind::fusion_pair,
      "Soccer teams Alpha and Gamma both winning, combined with product and probabilistic sum",
      io::parse(R"({"a": {"t": 0.7, "i": 0.2, "f": 0.1}, "b": {"t": 0.3, "i": 0.5, "f": 0.2}})"));

  add("paraconsistent", Kind::triple, "Sources that contradict each other",
      io::parse(R"({"t": 0.6, "i": 0.1, "f": 0.7})"));
  add("incomplete", Kind::triple, "Sources that leave mass unassigned",
      io::parse(R"({"t": 0.2, "i": 0.3, "f": 0.2})"));
  add("complete", Kind::triple, "First satellite source, already normalized",
      io::parse(R"({"t": 0.6, "i": 0.1, "f": 0.3})"));
  add("geometry-valuation", Kind::triple,
      "Statement true, indeterminate and false at once in a mixed geometry",
      io::parse(R"({"t": 1, "i": 1, "f": 1})"));

  add("book-measure", Kind::measure, "Book of 100 pages with 3 indeterminate pages",
      io::parse(R"({"det": 97, "neut": 3, "anti": 0, "total": 100})"));
  add("surface-measure", Kind::measure, "5x5 m surface with 0.1x0.2 m of cracks",
      io::parse(R"({"det": 24.98, "neut": 0.02, "anti": 0, "total": 25})"));
  add("die-measure", Kind::measure, "Correct faces of a die with two erased faces",
      io::parse(R"({"det": 4, "neut": 2, "anti": 0, "total": 6})"));

  add("uncertain-lower-limit", Kind::integral,
      "Integral of 1 over [a1, 1] with the lower limit known only within [0, 0.1]",
      io::parse(R"({"f": "1", "a1": 0, "eps": 0.1, "b": 1})"));
  add("band-quadratic", Kind::integral, "g(x) = x^2 with indeterminacy band h(x) = x on [0, 2]",
      io::parse(R"({"g": "x^2", "h": "x", "a": 0, "b": 2})"));
  return out;
}

}  // namespace

std::string_view to_string(Kind k) noexcept {
  switch (k) {
    case Kind::space: return "space";
    case Kind::product: return "product";
    case Kind::matrix: return "matrix";
    case Kind::refined: return "refined";
    case Kind::triple: return "triple";
    case Kind::fusion_pair: return "fusion-pair";
    case Kind::interval_union: return "interval-union";
    case Kind::intervals: return "intervals";
    case Kind::observations: return "observations";
    case Kind::measure: return "measure";
    case Kind::integral: return "integral";
  }
  return "unknown";
}

const std::vector<Fixture>& all() {
  static const std::vector<Fixture> fixtures = build();
  return fixtures;
}

const Fixture* lookup(std::string_view name) {
  for (const auto& f : all()) {
    if (f.name == name) return &f;
  }
  return nullptr;
}

const std::vector<TypoEntry>& typo_ledger() {
  static const std::vector<TypoEntry> ledger{
      {"economy chain, two-step matrix", "c11.i", "0.050", "0.03",
       "min over the summand indeterminacies {0.10, 0.03, 0.05} is 0.03"},
      {"economy chain, two-step matrix", "c12.t", "0.277", "0.177",
       "the printed summands 0.080 + 0.070 + 0.027 add to 0.177"},
      {"economy chain, two-step matrix", "c13.t", "0.084", "0.12",
       "the first summand is printed as 0.004 but 0.40 * 0.10 = 0.04; 0.04 + 0.048 + 0.032 = 0.12"},
      {"economy chain, two-step matrix", "c21.i", "0.003", "0.03",
       "min over {0.10, 0.05, 0.03} is 0.03; the summary matrix also prints 0.03"},
      {"economy chain, two-step matrix", "c22.t", "0.253", "0.2253",
       "0.038 + 0.1225 + 0.0648 = 0.2253; the summary matrix also prints 0.2253"},
      {"min/max t-norm combination", "pessimistic normalization", "(3/15, 5/15, 5/15)",
       "(3/13, 5/13, 5/13)", "(0.3, 0.5, 0.5) sums to 1.3, not 1.5"},
      {"min/max t-norm combination", "optimistic normalization", "(3/9, 1/9, 5/9)",
       "(3/9, 1/9, 5/9)", "(0.3, 0.1, 0.5) sums to 0.9, so this one agrees"},
      {"refined handball example", "T parts", "(0.4, 0.2, 0.5, 0.05)", "(0.4, 0.2, 0.05, 0.05)",
       "the printed parts sum to 1.15, not the coarse 0.7; the fixture uses a reconstruction"},
      {"two-candidate election", "NP(A).f", "0.045", "0.45",
       "the prose gives B a chance of 0.45; both readings ship with the fixture"},
  };
  return ledger;
}

io::Json typo_ledger_json() {
  Json out = Json::array();
  for (const auto& e : typo_ledger()) {
    Json j;
    j["where"] = e.where;
    j["quantity"] = e.quantity;
    j["printed"] = e.printed;
    j["recomputed"] = e.recomputed;
    j["note"] = e.note;
    out.push_back(std::move(j));
  }
  return out;
}

}  // namespace neutro::fixtures
