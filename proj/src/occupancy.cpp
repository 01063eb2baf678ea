#include "zmt/occupancy.hpp"

#include <string>
#include <string_view>
#include <unordered_map>

#include "zmt/error.hpp"

namespace zmt {
namespace {

template <typename Key, typename Range>
WordTrajectory count_distinct(const Range& tokens) {
  if (tokens.empty()) throw Error(ErrorKind::kNoContent, "no analyzable content");
  WordTrajectory traj;
  traj.r.reserve(tokens.size() + 1);
  traj.r.push_back(0);
  std::unordered_map<Key, std::int64_t> counts;
  counts.reserve(tokens.size());
  for (const auto& token : tokens) {
    ++counts[Key(token)];
    traj.r.push_back(static_cast<std::int64_t>(counts.size()));
  }
  for (const auto& [word, count] : counts) {
    if (count == 1) ++traj.singletons;
  }
  return traj;
}

}  // namespace

WordTrajectory distinct_word_trajectory(const TokenSequence& seq) {
  return count_distinct<std::string_view>(seq.tokens);
}

WordTrajectory distinct_word_trajectory(std::span<const std::uint64_t> labels) {
  return count_distinct<std::uint64_t>(labels);
}

double singleton_ratio(const WordTrajectory& traj) {
  if (traj.r.empty() || traj.distinct() < 1) {
    throw Error(ErrorKind::kDomain, "singleton ratio needs at least one word");
  }
  return static_cast<double>(traj.singletons) / static_cast<double>(traj.distinct());
}

WordTrajectory trajectory_from_counts(std::vector<std::int64_t> r, std::int64_t singletons) {
  if (r.empty() || r.front() != 0) {
    throw Error(ErrorKind::kDomain, "trajectory must start with R_0 = 0");
  }
  for (std::size_t k = 1; k < r.size(); ++k) {
    const auto step = r[k] - r[k - 1];
    if (step < 0 || step > 1 || (k == 1 && step != 1)) {
      throw Error(ErrorKind::kDomain, "trajectory increments must be 0 or 1 with R_1 = 1");
    }
  }
  WordTrajectory traj;
  traj.r = std::move(r);
  traj.singletons = singletons;
  return traj;
}

}  // namespace zmt
