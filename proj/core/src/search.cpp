#include "msrlab/search.hpp"

#include <algorithm>
#include <chrono>

#include <nlohmann/json.hpp>

#include "msrlab/combinatorics.hpp"
#include "msrlab/parallel.hpp"

namespace msrlab {

namespace {

RepairScheme candidate_scheme(const CodeSpec& spec, std::size_t failed, const AccessCandidate& candidate) {
  const auto others = without(iota_nodes(spec.params.n), {failed});
  if (candidate.size() != others.size())
    throw Error(ErrorKind::DimensionMismatch, "candidate needs one access list per helper");
  RepairScheme scheme;
  scheme.mode = RepairMode::HelperIndependent;
  scheme.w_nodes = {failed};
  for (std::size_t h = 0; h < others.size(); ++h)
    scheme.set(others[h], failed, RepairMatrix::access(candidate[h], spec.params.alpha));
  return scheme;
}

bool feasible_for_all(const CodeSpec& spec, const RepairScheme& scheme, std::size_t failed) {
  const auto others = without(iota_nodes(spec.params.n), {failed});
  bool ok = true;
  for_each_subset(others, spec.params.d, [&](const std::vector<std::size_t>& helpers) {
    ok = try_derive_combination(spec, scheme, failed, helpers).has_value();
    return ok;
  });
  return ok;
}

AccessCandidate decode_index(std::uint64_t index, const std::vector<std::vector<std::size_t>>& lists,
                             std::size_t helpers) {
  AccessCandidate out(helpers);
  for (std::size_t h = helpers; h-- > 0;) {
    out[h] = lists[index % lists.size()];
    index /= lists.size();
  }
  return out;
}

}  // namespace

bool node_feasible(const CodeSpec& spec, std::size_t failed, const AccessCandidate& candidate) {
  return feasible_for_all(spec, candidate_scheme(spec, failed, candidate), failed);
}

bool node_feasible(const CodeSpec& spec, std::size_t failed, const AccessCandidate& candidate,
                   const std::vector<std::size_t>& helpers) {
  return try_derive_combination(spec, candidate_scheme(spec, failed, candidate), failed, helpers).has_value();
}

SearchResult exhaustive_search(const SearchSpec& sspec) {
  const auto start = std::chrono::steady_clock::now();
  const CodeSpec& spec = sspec.spec;
  const std::size_t n = spec.params.n, alpha = spec.params.alpha;
  const std::size_t beta = bandwidth(spec.params).beta;
  for (auto t : sspec.targets)
    if (t >= n) throw Error(ErrorKind::InvalidParams, "target node " + std::to_string(t + 1) + " out of range");

  const auto lists = subsets(iota_nodes(alpha), beta);
  std::uint64_t total = 1;
  for (std::size_t h = 0; h + 1 < n; ++h) {
    if (total > sspec.max_candidates / lists.size())
      throw Error(ErrorKind::LimitExceeded, "more than " + std::to_string(sspec.max_candidates) +
                                                " candidates per node");
    total *= lists.size();
  }

  SearchResult result;
  RepairScheme scheme;
  scheme.mode = RepairMode::HelperIndependent;
  bool all_found = true;
  std::vector<std::size_t> targets = sspec.targets;
  std::sort(targets.begin(), targets.end());
  targets.erase(std::unique(targets.begin(), targets.end()), targets.end());

  struct Chunk {
    std::uint64_t feasible = 0;
    std::optional<std::uint64_t> first;
  };
  for (auto failed : targets) {
    const std::uint64_t chunk_size = 256;
    const std::size_t chunks = static_cast<std::size_t>((total + chunk_size - 1) / chunk_size);
    const auto parts = parallel_map(chunks, [&](std::size_t c) {
      Chunk out;
      const std::uint64_t end = std::min<std::uint64_t>(total, (c + 1) * chunk_size);
      for (std::uint64_t idx = c * chunk_size; idx < end; ++idx) {
        if (!node_feasible(spec, failed, decode_index(idx, lists, n - 1))) continue;
        ++out.feasible;
        if (!out.first) out.first = idx;
      }
      return out;
    });
    NodeStats stats{failed, total, 0};
    std::optional<std::uint64_t> first;
    for (const auto& p : parts) {
      stats.feasible_count += p.feasible;
      if (!first && p.first) first = p.first;
    }
    result.stats.per_node.push_back(stats);
    if (!first) {
      all_found = false;
      continue;
    }
    const auto best = decode_index(*first, lists, n - 1);
    const auto others = without(iota_nodes(n), {failed});
    for (std::size_t h = 0; h < others.size(); ++h)
      scheme.set(others[h], failed, RepairMatrix::access(best[h], alpha));
    scheme.w_nodes.push_back(failed);
  }
  if (all_found) result.found = std::move(scheme);
  result.stats.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::string stats_json(const SearchStats& stats) {
  nlohmann::ordered_json j;
  j["per_node"] = nlohmann::ordered_json::array();
  for (const auto& s : stats.per_node)
    j["per_node"].push_back({{"node", s.node + 1}, {"candidates", s.candidates}, {"feasible_count", s.feasible_count}});
  j["elapsed_ms"] = stats.elapsed_ms;
  return j.dump();
}

}  // namespace msrlab
