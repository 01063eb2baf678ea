#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "zmt/text_ingest.hpp"

namespace zmt {

// Distinct-word counts R_0..R_n of a text. r[k] is the number of different
// tokens among the first k; singletons is the number of tokens that occur
// exactly once in the whole text.
struct WordTrajectory {
  std::vector<std::int64_t> r;
  std::int64_t singletons = 0;

  std::int64_t n() const noexcept { return static_cast<std::int64_t>(r.size()) - 1; }
  std::int64_t distinct() const noexcept { return r.back(); }
};

WordTrajectory distinct_word_trajectory(const TokenSequence& seq);

// Integer-labelled variant used by the simulator.
WordTrajectory distinct_word_trajectory(std::span<const std::uint64_t> labels);

// R_{n,1} / R_n. Converges to theta under the Zipf-Mandelbrot model.
double singleton_ratio(const WordTrajectory& traj);

// Builds a trajectory directly from its R sequence (R_0 must be 0). Used when
// only summary values are known, e.g. when replaying published rows.
WordTrajectory trajectory_from_counts(std::vector<std::int64_t> r, std::int64_t singletons = 0);

}  // namespace zmt
