#include "neutro/montecarlo.hpp"

#include <algorithm>
#include <random>
#include <thread>

#include "neutro/error.hpp"

namespace neutro {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double uniform01(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

struct Bin {
  double upper;  // cumulative chance
  std::size_t entry;
};

}  // namespace

TrialLog::TrialLog(const SampleSpace& space) {
  for (const auto& o : space.outcomes()) entries_.push_back({o.label, TrialKind::outcome, 0});
  for (const auto& s : space.indeterminacies()) {
    entries_.push_back({s.label, TrialKind::indeterminacy, 0});
  }
  if (space.total().value() < 1.0 - 1e-12) {
    entries_.push_back({std::string(kNoResultLabel), TrialKind::no_result, 0});
  }
}

TrialLog TrialLog::from_observations(const SampleSpace& space,
                                     std::span<const std::string> observations) {
  TrialLog log(space);
  for (const auto& label : observations) log.record(label);
  return log;
}

void TrialLog::record(std::string_view label, std::int64_t times) {
  auto it = std::find_if(entries_.begin(), entries_.end(),
                         [&](const TrialCount& c) { return c.label == label; });
  if (it == entries_.end()) {
    throw Error(Errc::event_space_mismatch, "label '" + std::string(label) + "' is not in the log");
  }
  it->count += times;
  total_ += times;
}

void TrialLog::merge(const TrialLog& other) {
  for (const auto& c : other.entries_) {
    if (c.count != 0) record(c.label, c.count);
  }
}

std::int64_t TrialLog::count(std::string_view label) const {
  for (const auto& c : entries_) {
    if (c.label == label) return c.count;
  }
  throw Error(Errc::event_space_mismatch, "label '" + std::string(label) + "' is not in the log");
}

TrialLog simulate(const SampleSpace& space, const SimConfig& cfg) {
  if (cfg.trials < 1) throw Error(Errc::invalid_config, "simulation needs at least one trial");
  if (space.total().value() > 1.0 + 1e-9) {
    throw Error(Errc::invalid_input, "space total exceeds 1");
  }

  const TrialLog empty(space);
  std::vector<Bin> bins;
  double cum = 0.0;
  std::size_t idx = 0;
  for (const auto* list : {&space.outcomes(), &space.indeterminacies()}) {
    for (const auto& item : *list) {
      cum += item.chance.value();
      bins.push_back({cum, idx++});
    }
  }
  if (idx < empty.entries().size()) bins.push_back({1.0, idx});  // no-result
  if (bins.empty()) throw Error(Errc::invalid_input, "space has no labels");

  std::vector<std::uint64_t> seeds(kSimulationStreams);
  std::uint64_t state = cfg.seed;
  for (auto& s : seeds) s = splitmix64(state);

  std::vector<std::vector<std::int64_t>> stream_counts(
      kSimulationStreams, std::vector<std::int64_t>(empty.entries().size(), 0));

  auto run_stream = [&](std::size_t k) {
    const std::int64_t begin = cfg.trials * static_cast<std::int64_t>(k) / kSimulationStreams;
    const std::int64_t end = cfg.trials * static_cast<std::int64_t>(k + 1) / kSimulationStreams;
    std::mt19937_64 gen(seeds[k]);
    auto& counts = stream_counts[k];
    for (std::int64_t n = begin; n < end; ++n) {
      double u = uniform01(gen);
      auto it = std::upper_bound(bins.begin(), bins.end(), u,
                                 [](double v, const Bin& b) { return v < b.upper; });
      if (it == bins.end()) --it;  // u beyond a cumulative sum that rounded below 1
      ++counts[it->entry];
    }
  };

  unsigned workers = cfg.workers ? cfg.workers : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, kSimulationStreams);
  if (workers == 1) {
    for (std::size_t k = 0; k < kSimulationStreams; ++k) run_stream(k);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t k = w; k < kSimulationStreams; k += workers) run_stream(k);
      });
    }
  }

  TrialLog log = empty;
  for (const auto& counts : stream_counts) {
    for (std::size_t e = 0; e < counts.size(); ++e) {
      if (counts[e] != 0) log.record(log.entries()[e].label, counts[e]);
    }
  }
  return log;
}

NeutrosophicProbability frequentist_np(const TrialLog& log, const Event& event) {
  if (log.total() == 0) throw Error(Errc::empty_log, "no trials recorded");
  for (const auto& label : event.members()) {
    auto it = std::find_if(log.entries().begin(), log.entries().end(),
                           [&](const TrialCount& c) { return c.label == label; });
    if (it == log.entries().end() || it->kind != TrialKind::outcome) {
      throw Error(Errc::event_space_mismatch, "'" + label + "' is not an outcome of the log");
    }
  }
  std::int64_t hit = 0;
  std::int64_t indet = 0;
  std::int64_t other = 0;
  for (const auto& c : log.entries()) {
    switch (c.kind) {
      case TrialKind::outcome: (event.contains(c.label) ? hit : other) += c.count; break;
      case TrialKind::indeterminacy: indet += c.count; break;
      case TrialKind::no_result: break;
    }
  }
  const std::int64_t n = log.total();
  return {Scalar::fraction(hit, n), Scalar::fraction(indet, n), Scalar::fraction(other, n)};
}

}  // namespace neutro
