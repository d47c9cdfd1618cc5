#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <array>
#include <ostream>

#include "expression.hpp"
#include "neutro/error.hpp"
#include "neutro/events.hpp"
#include "neutro/fixtures.hpp"
#include "neutro/fusion.hpp"
#include "neutro/integral.hpp"
#include "neutro/io.hpp"
#include "neutro/markov.hpp"
#include "neutro/montecarlo.hpp"
#include "neutro/product.hpp"
#include "neutro/refined.hpp"

namespace neutro::cli {

namespace {

using io::Json;
using fixtures::Kind;

constexpr std::array<std::string_view, 11> kSubcommands{
    "eval", "union", "joint", "condition", "expect", "fuse",
    "markov", "simulate", "integrate", "refine", "classify"};

/// Ends the invocation with a specific exit code.
struct Failure {
  int code;
  std::string error;
  std::string detail;
};

[[noreturn]] void invalid(const std::string& detail) {
  throw Failure{kExitInvalid, "invalid-input", detail};
}

struct Context {
  bool exact = false;
  std::optional<std::string> seed_override;

  io::ReadOptions read() const { return {exact}; }
  io::WriteOptions write() const { return {exact}; }
};

/// Input document either from a file or from a named fixture.
struct Source {
  std::string file;
  std::string fixture;

  Json load(std::initializer_list<Kind> accepted, Kind* kind_out = nullptr) const {
    if (!fixture.empty()) {
      const auto* f = fixtures::lookup(fixture);
      if (!f) throw Failure{kExitUnknownFixture, "unknown-fixture", "no fixture named '" + fixture + "'"};
      if (std::find(accepted.begin(), accepted.end(), f->kind) == accepted.end()) {
        invalid("fixture '" + fixture + "' is a " + std::string(to_string(f->kind)) +
                " fixture and does not fit this subcommand");
      }
      if (kind_out) *kind_out = f->kind;
      return f->data;
    }
    if (file.empty()) invalid("an input file or --fixture is required");
    if (kind_out) *kind_out = *accepted.begin();
    return load_path(file);
  }

  static Json load_path(const std::string& path) {
    try {
      return io::load_file(path);
    } catch (const std::ios_base::failure&) {
      throw Failure{kExitNoFile, "file-not-found", "cannot open '" + path + "'"};
    }
  }
};

void add_source(CLI::App* sub, Source& src, const char* file_flag, const char* what) {
  sub->add_option(file_flag, src.file, std::string(what) + " JSON file");
  sub->add_option("--fixture", src.fixture, "Use a named fixture instead of a file");
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = text.find(sep, start);
    out.push_back(text.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

/// "1,2,3" lists labels; "@name" refers to the "events" map of the input.
Event parse_event(const std::string& text, const Json& doc) {
  if (!text.empty() && text[0] == '@') {
    const std::string name = text.substr(1);
    if (!doc.contains("events") || !doc["events"].contains(name)) {
      invalid("the input defines no event named '" + name + "'");
    }
    return Event(doc["events"][name].get<std::set<std::string>>());
  }
  auto labels = split(text, ',');
  return Event(std::set<std::string>(labels.begin(), labels.end()));
}

Json triple_json(const NeutrosophicProbability& np, const Context& ctx) {
  return io::to_json(np, ctx.write());
}

Json with_class(Json j, CompletenessClass c) {
  j["class"] = std::string(to_string(c));
  return j;
}

// eval -----------------------------------------------------------------------

struct EvalOpts {
  Source src;
  std::string event;
  bool complement = false;
  bool impossible = false;
  bool sure = false;
  bool echo_space = false;
  bool remove_indeterminacy = false;
};

Json do_eval(const EvalOpts& o, const Context& ctx) {
  Json doc = o.src.load({Kind::space});
  SampleSpace space = io::space_from_json(doc, ctx.read());
  if (o.remove_indeterminacy) space = neutro::remove_indeterminacy(space);
  if (o.echo_space) return io::to_json(space, ctx.write());
  if (o.impossible) return triple_json(np_impossible(space), ctx);
  if (o.sure) return triple_json(np_sure(space), ctx);
  Event e = parse_event(o.event, doc);
  return triple_json(o.complement ? np_complement(space, e) : np_event(space, e), ctx);
}

// union ----------------------------------------------------------------------

struct UnionOpts {
  Source src;
  std::string a;
  std::string b;
};

Json do_union(const UnionOpts& o, const Context& ctx) {
  Kind kind{};
  Json doc = o.src.load({Kind::space, Kind::interval_union}, &kind);
  if (kind == Kind::interval_union || doc.contains("ab")) {
    auto r = ctx.read();
    return triple_json(
        np_union_interval(io::np_from_json(doc.at("a"), r), io::np_from_json(doc.at("b"), r),
                          io::np_from_json(doc.at("ab"), r),
                          io::interval_from_json(doc.at("indeterm"), r),
                          io::scalar_from_json(doc.at("total"), r)),
        ctx);
  }
  SampleSpace space = io::space_from_json(doc, ctx.read());
  return triple_json(np_union(space, parse_event(o.a, doc), parse_event(o.b, doc)), ctx);
}

// joint ----------------------------------------------------------------------

struct JointOpts {
  std::vector<std::string> files;
  std::string fixture;
  std::vector<std::string> events;
  std::string predicate;
};

Json do_joint(const JointOpts& o, const Context& ctx) {
  std::vector<SampleSpace> spaces;
  Json fixture_doc;
  if (!o.fixture.empty()) {
    Source src{"", o.fixture};
    fixture_doc = src.load({Kind::product});
    for (const auto& f : fixture_doc.at("factors")) spaces.push_back(io::space_from_json(f, ctx.read()));
  } else {
    for (const auto& path : o.files) {
      spaces.push_back(io::space_from_json(Source::load_path(path), ctx.read()));
    }
  }
  if (spaces.size() < 2) invalid("joint needs at least two spaces");

  std::string predicate = o.predicate;
  std::vector<Event> events;
  for (const auto& e : o.events) events.push_back(parse_event(e, Json::object()));
  if (events.empty() && predicate.empty() && !fixture_doc.is_null()) {
    if (fixture_doc.contains("events")) {
      for (const auto& e : fixture_doc["events"]) {
        events.emplace_back(e.get<std::set<std::string>>());
      }
    }
  }
  if (!predicate.empty()) {
    if (predicate.rfind("sum=", 0) != 0) invalid("only the predicate sum=N is supported");
    long long n = 0;
    try {
      n = std::stoll(predicate.substr(4));
    } catch (const std::exception&) {
      invalid("bad predicate '" + predicate + "'");
    }
    return triple_json(np_joint_predicate(spaces, sum_equals(n)), ctx);
  }
  if (events.size() != spaces.size()) {
    throw Error(Errc::dimension_mismatch, "joint needs one --event per space (" +
                                              std::to_string(spaces.size()) + " spaces, " +
                                              std::to_string(events.size()) + " events)");
  }
  return triple_json(np_joint(spaces, events), ctx);
}

// condition ------------------------------------------------------------------

struct ConditionOpts {
  Source src;
  std::string event;
  std::string given;
  bool with_replacement = false;
  std::string first;
  std::string second;
};

Json do_condition(const ConditionOpts& o, const Context& ctx) {
  Json doc = o.src.load({Kind::space});
  SampleSpace space = io::space_from_json(doc, ctx.read());
  if (!o.first.empty() || !o.second.empty()) {
    if (o.first.empty() || o.second.empty()) invalid("--first and --second go together");
    return triple_json(np_mult_rule(space, o.first, o.second), ctx);
  }
  if (o.given.empty()) invalid("condition needs --given, or --first with --second");
  Draw draw = o.with_replacement ? Draw::with_replacement : Draw::without_replacement;
  return triple_json(np_conditional(space, parse_event(o.event, doc), o.given, draw), ctx);
}

// expect ---------------------------------------------------------------------

struct ExpectOpts {
  Source src;
  std::vector<std::string> payoffs;
  std::string payoff_file;
};

Json do_expect(const ExpectOpts& o, const Context& ctx) {
  Json doc = o.src.load({Kind::space});
  SampleSpace space = io::space_from_json(doc, ctx.read());
  PayoffSpec spec;
  auto read_map = [&](const Json& m) {
    for (const auto& [label, value] : m.items()) {
      spec.payoffs[label] = io::scalar_from_json(value, ctx.read());
    }
  };
  if (!o.payoff_file.empty()) {
    read_map(Source::load_path(o.payoff_file));
  } else if (o.payoffs.empty() && doc.contains("payoffs")) {
    read_map(doc["payoffs"]);
  }
  for (const auto& p : o.payoffs) {
    auto eq = p.find('=');
    if (eq == std::string::npos) invalid("payoff '" + p + "' is not label=value");
    spec.payoffs[p.substr(0, eq)] = io::scalar_from_text(p.substr(eq + 1), ctx.read());
  }
  Json j;
  j["expected_value"] = io::to_json(expected_value(space, spec), ctx.write());
  return j;
}

// fuse -----------------------------------------------------------------------

struct FuseOpts {
  std::string method = "pcr5";
  std::vector<std::string> triples;
  std::string batch;
  std::string fixture;
  bool normalize = false;
};

Json fuse_one(const SubjectiveNP& a, const SubjectiveNP& b, const FuseOpts& o) {
  SubjectiveNP out;
  auto parts = split(o.method, ':');
  if (parts.empty()) invalid("empty --method");
  if (parts[0] == "pcr5" && parts.size() == 1) {
    out = pcr5_fuse(a, b);
  } else if (parts[0] == "scheme" && parts.size() == 2) {
    out = combine_scheme(a, b, parse_scheme(parts[1]));
  } else if (parts[0] == "tnorm" && (parts.size() == 2 || parts.size() == 3)) {
    TNormMode mode = TNormMode::pessimistic;
    if (parts.size() == 3) {
      if (parts[2] == "optimistic") mode = TNormMode::optimistic;
      else if (parts[2] != "pessimistic") invalid("tnorm mode must be pessimistic or optimistic");
    }
    out = tnorm_fuse(a, b, TNormConfig::by_name(parts[1]), mode, false);
  } else {
    invalid("unknown --method '" + o.method + "'");
  }
  if (o.normalize) out = neutro::normalize(out);
  Json j = io::to_json(out);
  return with_class(std::move(j), classify(ScalarTriple{out.t, out.i, out.f}));
}

Json do_fuse(const FuseOpts& o, const Context&) {
  if (!o.batch.empty()) {
    Json doc = Source::load_path(o.batch);
    if (!doc.is_array()) invalid("a batch file holds an array of {\"a\", \"b\"} pairs");
    Json out = Json::array();
    for (const auto& pair : doc) {
      out.push_back(fuse_one(io::subjective_from_json(pair.at("a")),
                             io::subjective_from_json(pair.at("b")), o));
    }
    return out;
  }
  if (!o.fixture.empty()) {
    Json doc = Source{"", o.fixture}.load({Kind::fusion_pair});
    return fuse_one(io::subjective_from_json(doc.at("a")), io::subjective_from_json(doc.at("b")), o);
  }
  if (o.triples.size() != 2) invalid("fuse needs two triples such as 0.6,0.1,0.3 0.2,0.3,0.5");
  auto to_subjective = [](const std::string& text) {
    ScalarTriple s = io::triple_from_text(text);
    return SubjectiveNP{s.t.value(), s.i.value(), s.f.value(), {}};
  };
  return fuse_one(to_subjective(o.triples[0]), to_subjective(o.triples[1]), o);
}

// markov ---------------------------------------------------------------------

struct MarkovOpts {
  Source src;
  int power = 1;
  std::string operators = "standard";
  bool normalize = false;
  std::string start;
};

Json do_markov(const MarkovOpts& o, const Context& ctx) {
  TransitionMatrix m = io::matrix_from_json(o.src.load({Kind::matrix}), ctx.read());
  OperatorConfig cfg = OperatorConfig::by_name(o.operators);
  if (o.power < 1) invalid("--power must be at least 1");

  if (!o.start.empty()) {
    const auto& states = m.states();
    auto it = std::find(states.begin(), states.end(), o.start);
    if (it == states.end()) invalid("unknown start state '" + o.start + "'");
    std::vector<Scalar> basis(states.size(), Scalar(0));
    basis[static_cast<std::size_t>(it - states.begin())] = Scalar(1);
    StateVector x = step(basis, m, cfg);
    for (int k = 1; k < o.power; ++k) x = step(x, m, cfg);
    Json j;
    j["start"] = o.start;
    j["steps"] = o.power;
    j["states"] = states;
    j["distribution"] = Json::array();
    for (const auto& e : x) j["distribution"].push_back(io::to_json(e, ctx.write()));
    return j;
  }
  TransitionMatrix result = mat_power(m, o.power, cfg);
  if (o.normalize) result = row_normalize(result);
  return io::to_json(result, ctx.write());
}

// simulate -------------------------------------------------------------------

struct SimulateOpts {
  Source src;
  std::int64_t trials = 1'000'000;
  std::uint64_t seed = 0;
  std::string event;
  unsigned workers = 0;
};

Json do_simulate(const SimulateOpts& o, const Context& ctx) {
  Kind kind{};
  Json doc = o.src.load({Kind::space, Kind::observations}, &kind);
  Json j;
  TrialLog log;
  Json space_doc = doc;
  if (kind == Kind::observations) {
    space_doc = doc.at("space");
    SampleSpace space = io::space_from_json(space_doc, ctx.read());
    auto obs = doc.at("observations").get<std::vector<std::string>>();
    log = TrialLog::from_observations(space, obs);
  } else {
    SampleSpace space = io::space_from_json(doc, ctx.read());
    SimConfig cfg{o.seed, o.trials, o.workers};
    if (ctx.seed_override) {
      try {
        cfg.seed = std::stoull(*ctx.seed_override);
      } catch (const std::exception&) {
        invalid("NEUTRO_SEED is not an unsigned integer: '" + *ctx.seed_override + "'");
      }
    }
    log = simulate(space, cfg);
    j["seed"] = cfg.seed;
    j["trials"] = cfg.trials;
  }
  j["log"] = io::to_json(log);
  j["np"] = triple_json(frequentist_np(log, parse_event(o.event, space_doc)), ctx);
  return j;
}

// integrate ------------------------------------------------------------------

struct IntegrateOpts {
  std::string fixture;
  std::string g;
  std::string h = "0";
  std::string f;
  double a = 0.0;
  double b = 1.0;
  double a1 = 0.0;
  double eps = 0.0;
  int panels = 1000;
};

Json do_integrate(IntegrateOpts o, const Context&) {
  if (!o.fixture.empty()) {
    Json doc = Source{"", o.fixture}.load({Kind::integral});
    if (doc.contains("f")) {
      o.f = doc["f"].get<std::string>();
      o.a1 = doc.at("a1").get<double>();
      o.eps = doc.at("eps").get<double>();
    } else {
      o.g = doc.at("g").get<std::string>();
      o.h = doc.value("h", std::string("0"));
      o.a = doc.at("a").get<double>();
    }
    o.b = doc.at("b").get<double>();
  }
  if (!o.f.empty()) {
    Expression f(o.f);
    UncertainLowerLimit r = integrate_uncertain_lower(f, o.a1, o.eps, o.b, o.panels);
    Json j;
    j["low_form"] = io::to_json(r.low_form);
    j["high_form"] = io::to_json(r.high_form);
    return j;
  }
  if (o.g.empty()) invalid("integrate needs --g (with optional --h) or --f");
  Expression g(o.g);
  Expression h(o.h);
  return io::to_json(integrate_band(BandFunction{g, h}, o.a, o.b, o.panels));
}

// refine ---------------------------------------------------------------------

struct RefineOpts {
  Source src;
  std::string triple;
  std::string t_weights = "1";
  std::string i_weights = "1";
  std::string f_weights = "1";
  std::string properties;
};

RefinementWeights weights(const std::string& text, const Context& ctx) {
  RefinementWeights w;
  for (const auto& part : split(text, ',')) w.weights.push_back(io::scalar_from_text(part, ctx.read()));
  return w;
}

Json do_refine(const RefineOpts& o, const Context& ctx) {
  if (!o.properties.empty()) {
    auto p = split(o.properties, ',');
    if (p.size() != 3) invalid("--properties takes p,r,s");
    RefinementDescriptor d;
    try {
      d = {std::stoi(p[0]), std::stoi(p[1]), std::stoi(p[2])};
    } catch (const std::exception&) {
      invalid("--properties takes three integers");
    }
    auto c = refinable_components(d);
    Json j;
    j["refinable"] = refinable(d);
    j["components"] = {{"t", c.t}, {"i", c.i}, {"f", c.f}};
    return j;
  }
  if (!o.triple.empty()) {
    ScalarTriple np = io::triple_from_text(o.triple, ctx.read());
    RefinedNP r = refine(np, weights(o.t_weights, ctx), weights(o.i_weights, ctx),
                         weights(o.f_weights, ctx));
    return io::to_json(r, ctx.write());
  }
  RefinedNP r = io::refined_from_json(o.src.load({Kind::refined}), ctx.read());
  Json j;
  j["coarse"] = triple_json(coarsen(r), ctx);
  j["arity"] = r.arity();
  return j;
}

// classify -------------------------------------------------------------------

struct ClassifyOpts {
  std::string triple;
  std::string fixture;
};

Json do_classify(const ClassifyOpts& o, const Context& ctx) {
  NeutrosophicProbability np;
  if (!o.fixture.empty()) {
    np = io::np_from_json(Source{"", o.fixture}.load({Kind::triple}), ctx.read());
  } else if (!o.triple.empty()) {
    np = io::triple_from_text(o.triple, ctx.read()).to_probability();
  } else {
    invalid("classify needs a triple such as 0.2,0.3,0.2 or --fixture");
  }
  Json j;
  j["class"] = std::string(to_string(classify(np)));
  return j;
}

Json list_fixtures() {
  Json out = Json::array();
  for (const auto& f : fixtures::all()) {
    Json j;
    j["name"] = f.name;
    j["kind"] = std::string(to_string(f.kind));
    j["description"] = f.description;
    out.push_back(std::move(j));
  }
  return out;
}

void write_error(std::ostream& err, const std::string& code, const std::string& detail) {
  Json j;
  j["error"] = code;
  j["detail"] = detail;
  err << j.dump() << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::optional<std::string> seed_override) {
  Context ctx;
  ctx.seed_override = std::move(seed_override);

  CLI::App app{"Neutrosophic probability calculator", "neutro"};
  app.require_subcommand(0, 1);
  app.fallthrough();
  bool typo_ledger = false;
  bool list = false;
  std::string show_fixture;
  app.add_flag("--exact", ctx.exact, "Read decimals as exact fractions and print {num, den} pairs");
  app.add_flag("--typo-ledger", typo_ledger, "Print the known printed-vs-recomputed discrepancies");
  app.add_flag("--list-fixtures", list, "List the named fixtures");
  app.add_option("--show-fixture", show_fixture, "Print the data of one fixture");

  Json result;
  bool have_result = false;
  auto emit = [&](Json j) {
    result = std::move(j);
    have_result = true;
  };

  EvalOpts eval;
  auto* s_eval = app.add_subcommand("eval", "NP of an event in a sample space");
  add_source(s_eval, eval.src, "--space", "Sample space");
  s_eval->add_option("--event", eval.event, "Comma-separated outcome labels or @name");
  s_eval->add_flag("--complement", eval.complement, "NP of the complement event");
  s_eval->add_flag("--impossible", eval.impossible, "NP of the impossible event");
  s_eval->add_flag("--sure", eval.sure, "NP of the sure event");
  s_eval->add_flag("--echo-space", eval.echo_space, "Print the space in canonical form");
  s_eval->add_flag("--remove-indeterminacy", eval.remove_indeterminacy,
                   "Drop every indeterminacy source first");
  s_eval->callback([&] { emit(do_eval(eval, ctx)); });

  UnionOpts uni;
  auto* s_union = app.add_subcommand("union", "NP of A or B");
  add_source(s_union, uni.src, "--space", "Sample space or interval triples");
  s_union->add_option("--a", uni.a, "First event");
  s_union->add_option("--b", uni.b, "Second event");
  s_union->callback([&] { emit(do_union(uni, ctx)); });

  JointOpts joint;
  auto* s_joint = app.add_subcommand("joint", "Joint NP over a product of spaces");
  s_joint->add_option("spaces", joint.files, "Sample space JSON files, one per factor");
  s_joint->add_option("--fixture", joint.fixture, "Use a named product fixture");
  s_joint->add_option("--event", joint.events, "Event for one factor; repeat per factor");
  s_joint->add_option("--predicate", joint.predicate, "sum=N over integer labels");
  s_joint->callback([&] { emit(do_joint(joint, ctx)); });

  ConditionOpts cond;
  auto* s_cond = app.add_subcommand("condition", "Conditional NP and the multiplicative rule");
  add_source(s_cond, cond.src, "--space", "Count-based sample space");
  s_cond->add_option("--event", cond.event, "Event whose NP is wanted");
  s_cond->add_option("--given", cond.given, "Label of the unit drawn first");
  s_cond->add_flag("--with-replacement", cond.with_replacement, "Put the first draw back");
  s_cond->add_option("--first", cond.first, "Multiplicative rule: first draw");
  s_cond->add_option("--second", cond.second, "Multiplicative rule: second draw");
  s_cond->callback([&] { emit(do_condition(cond, ctx)); });

  ExpectOpts expect;
  auto* s_expect = app.add_subcommand("expect", "Neutrosophic expected value");
  add_source(s_expect, expect.src, "--space", "Sample space");
  s_expect->add_option("--payoff", expect.payoffs, "label=value; repeat per label");
  s_expect->add_option("--payoffs", expect.payoff_file, "JSON object of label: payoff");
  s_expect->callback([&] { emit(do_expect(expect, ctx)); });

  FuseOpts fuse;
  auto* s_fuse = app.add_subcommand("fuse", "Fuse two subjective triples");
  s_fuse->add_option("--method", fuse.method,
                     "pcr5, scheme:<variant> or tnorm:<pair>:<pessimistic|optimistic>");
  s_fuse->add_option("triples", fuse.triples, "Two triples such as 0.6,0.1,0.3");
  s_fuse->add_option("--batch", fuse.batch, "JSON array of {\"a\", \"b\"} pairs");
  s_fuse->add_option("--fixture", fuse.fixture, "Use a named fusion fixture");
  s_fuse->add_flag("--normalize", fuse.normalize, "Divide the result by its component sum");
  s_fuse->callback([&] { emit(do_fuse(fuse, ctx)); });

  MarkovOpts markov;
  auto* s_markov = app.add_subcommand("markov", "Powers of a neutrosophic transition matrix");
  add_source(s_markov, markov.src, "--matrix", "Transition matrix");
  s_markov->add_option("--power", markov.power, "Matrix power m >= 1");
  s_markov->add_option("--operators", markov.operators,
                       "standard, min-i, mean-i or mul_i,mul_f,add_i,add_f");
  s_markov->add_flag("--normalize", markov.normalize, "Row-normalize the result");
  s_markov->add_option("--start", markov.start, "Evolve a classical start vector from this state");
  s_markov->callback([&] { emit(do_markov(markov, ctx)); });

  SimulateOpts sim;
  auto* s_sim = app.add_subcommand("simulate", "Monte Carlo trials and the frequentist NP");
  add_source(s_sim, sim.src, "--space", "Sample space");
  s_sim->add_option("--trials", sim.trials, "Number of trials");
  s_sim->add_option("--seed", sim.seed, "Seed; NEUTRO_SEED overrides it");
  s_sim->add_option("--event", sim.event, "Event for the frequentist NP");
  s_sim->add_option("--workers", sim.workers, "Threads (0 = all cores); results do not depend on it");
  s_sim->callback([&] { emit(do_simulate(sim, ctx)); });

  IntegrateOpts integ;
  auto* s_int = app.add_subcommand("integrate", "Neutrosophic integral");
  s_int->set_help_flag("--help", "Print this help message and exit");
  s_int->add_option("--fixture", integ.fixture, "Use a named integral fixture");
  s_int->add_option("--g", integ.g, "Determinate part g(x)");
  s_int->add_option("--h", integ.h, "Indeterminacy band width h(x) >= 0");
  s_int->add_option("--a", integ.a, "Lower limit");
  s_int->add_option("--b", integ.b, "Upper limit");
  s_int->add_option("--f", integ.f, "Integrand with an uncertain lower limit");
  s_int->add_option("--a1", integ.a1, "Smallest possible lower limit");
  s_int->add_option("--eps", integ.eps, "Width of the lower-limit uncertainty");
  s_int->add_option("--panels", integ.panels, "Simpson panels (even)");
  s_int->callback([&] { emit(do_integrate(integ, ctx)); });

  RefineOpts ref;
  auto* s_ref = app.add_subcommand("refine", "Refine a triple or coarsen a refined one");
  add_source(s_ref, ref.src, "--input", "Refined triple");
  s_ref->add_option("--triple", ref.triple, "Point triple to refine, e.g. 0.7,0.1,0.2");
  s_ref->add_option("--t-weights", ref.t_weights, "Split of t, e.g. 4/7,2/7,1/14,1/14");
  s_ref->add_option("--i-weights", ref.i_weights, "Split of i");
  s_ref->add_option("--f-weights", ref.f_weights, "Split of f");
  s_ref->add_option("--properties", ref.properties, "p,r,s property counts; reports refinability");
  s_ref->callback([&] { emit(do_refine(ref, ctx)); });

  ClassifyOpts cls;
  auto* s_cls = app.add_subcommand("classify", "Complete, incomplete or paraconsistent");
  s_cls->add_option("triple", cls.triple, "Point triple such as 0.2,0.3,0.2");
  s_cls->add_option("--fixture", cls.fixture, "Use a named triple fixture");
  s_cls->callback([&] { emit(do_classify(cls, ctx)); });

  // The first bare word names the subcommand; root options take no values
  // except --show-fixture.
  std::optional<std::string> command;
  for (std::size_t k = 0; k < args.size(); ++k) {
    if (args[k] == "--show-fixture") {
      ++k;
      continue;
    }
    if (!args[k].empty() && args[k][0] != '-') {
      command = args[k];
      break;
    }
  }
  if (command && std::find(kSubcommands.begin(), kSubcommands.end(), *command) == kSubcommands.end()) {
    write_error(err, "unknown-subcommand", "'" + *command + "' is not a subcommand");
    return kExitUsage;
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (!have_result) {
      if (typo_ledger) {
        emit(fixtures::typo_ledger_json());
      } else if (list) {
        emit(list_fixtures());
      } else if (!show_fixture.empty()) {
        const auto* f = fixtures::lookup(show_fixture);
        if (!f) {
          throw Failure{kExitUnknownFixture, "unknown-fixture", "no fixture named '" + show_fixture + "'"};
        }
        emit(f->data);
      } else {
        write_error(err, "missing-subcommand", "expected one of: eval, union, joint, condition, "
                                               "expect, fuse, markov, simulate, integrate, refine, classify");
        return kExitUsage;
      }
    }
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    write_error(err, "invalid-arguments", e.what());
    return kExitInvalid;
  } catch (const Failure& f) {
    write_error(err, f.error, f.detail);
    return f.code;
  } catch (const Error& e) {
    write_error(err, std::string(to_string(e.code())), e.what());
    return kExitInvalid;
  } catch (const std::exception& e) {
    write_error(err, "invalid-input", e.what());
    return kExitInvalid;
  }
  out << io::dump(result) << '\n';
  return kExitOk;
}

}  // namespace neutro::cli
