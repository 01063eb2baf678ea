#include <catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>

#include "zmt/error.hpp"
#include "zmt/occupancy.hpp"
#include "zmt/simulate.hpp"

using zmt::distinct_word_trajectory;

namespace {

zmt::TokenSequence seq(std::vector<std::string> t) {
  zmt::TokenSequence s;
  s.tokens = std::move(t);
  return s;
}

}  // namespace

TEST_CASE("hand-counted trajectories") {
  auto t = distinct_word_trajectory(seq({"a", "b", "a"}));
  CHECK(t.r == std::vector<std::int64_t>{0, 1, 2, 2});
  CHECK(t.singletons == 1);
  CHECK(t.n() == 3);
  CHECK(t.distinct() == 2);

  t = distinct_word_trajectory(seq({"a", "b", "c", "d", "e"}));
  CHECK(t.r == std::vector<std::int64_t>{0, 1, 2, 3, 4, 5});
  CHECK(t.singletons == 5);
  CHECK(zmt::singleton_ratio(t) == 1.0);

  t = distinct_word_trajectory(seq({"x", "x", "x", "x"}));
  CHECK(t.r == std::vector<std::int64_t>{0, 1, 1, 1, 1});
  CHECK(t.singletons == 0);
  CHECK(zmt::singleton_ratio(t) == 0.0);
}

TEST_CASE("empty sequences are rejected") {
  CHECK_THROWS_AS(distinct_word_trajectory(seq({})), zmt::Error);
  CHECK_THROWS_AS(distinct_word_trajectory(std::span<const std::uint64_t>{}), zmt::Error);
}

TEST_CASE("one-pass counts equal brute-force prefix counts") {
  std::mt19937_64 gen(3);
  for (int rep = 0; rep < 50; ++rep) {
    std::vector<std::uint64_t> labels(1 + gen() % 80);
    for (auto& l : labels) l = gen() % 12;
    const auto t = distinct_word_trajectory(labels);
    for (std::size_t k = 0; k <= labels.size(); ++k) {
      std::set<std::uint64_t> prefix(labels.begin(), labels.begin() + static_cast<long>(k));
      REQUIRE(t.r[k] == static_cast<std::int64_t>(prefix.size()));
    }
    CHECK(t.r[1] == 1);
    for (std::size_t k = 1; k < t.r.size(); ++k) {
      CHECK((t.r[k] - t.r[k - 1] == 0 || t.r[k] - t.r[k - 1] == 1));
    }
    CHECK(t.singletons <= t.distinct());

    auto shuffled = labels;
    std::shuffle(shuffled.begin(), shuffled.end(), gen);
    const auto u = distinct_word_trajectory(shuffled);
    CHECK(u.distinct() == t.distinct());
    CHECK(u.singletons == t.singletons);
  }
}

TEST_CASE("singleton ratio approaches theta on simulated text") {
  zmt::SimConfig cfg;
  cfg.params = zmt::ZMParams::make(0.7, 0.0);
  cfg.n = 100000;
  cfg.seed = 11;
  const auto t = distinct_word_trajectory(zmt::sample_text(cfg));
  CHECK(std::abs(zmt::singleton_ratio(t) - 0.7) < 0.05);
}

TEST_CASE("trajectory from counts validates its input") {
  CHECK_NOTHROW(zmt::trajectory_from_counts({0, 1, 2, 2}, 1));
  CHECK_THROWS_AS(zmt::trajectory_from_counts({1, 2}), zmt::Error);
  CHECK_THROWS_AS(zmt::trajectory_from_counts({0, 1, 3}), zmt::Error);
}
