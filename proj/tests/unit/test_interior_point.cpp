#include <algorithm>
#include <random>

#include "cyw/classifier.hpp"
#include "cyw/interior_point.hpp"
#include "cyw/polytope.hpp"
#include "doctest.h"
#include "support/table_data.hpp"

using namespace cyw;

namespace {

PointSet points_of(const char* line) { return enumerate_points(WeightSystem::parse(line)); }

}  // namespace

TEST_CASE("ip_check examples") {
  CHECK(ip_check(WeightSystem::parse("1 1 1 3 4 10")));
  CHECK(!ip_check(WeightSystem::parse("1 1 1 1 6 10")));
  CHECK(!ip_check(WeightSystem::parse("2 2 2 3 9")));
  CHECK(ip_check(WeightSystem::parse("4 1 1 3 2 1 12")) == ip_check(WeightSystem::parse("1 1 1 2 3 4 12")));
}

TEST_CASE("ip_walk examples") {
  CHECK(ip_walk(points_of("1 1 1 1 1 5")) == std::optional<bool>(true));
  CHECK(ip_walk(points_of("1 2 3 6")) == std::optional<bool>(true));
  const auto ws = WeightSystem::parse("1 1 2 4");
  const PointSet line = PointSet::from_points(ws, {{1, 1, 1}, {0, 0, 2}, {2, 2, 0}});
  CHECK(starting_points(line).size() == 2);
  CHECK(ip_walk(line) == std::optional<bool>(false));
  CHECK(!ip_oracle(line));
}

TEST_CASE("ip_oracle examples") {
  CHECK(ip_oracle(points_of("1 1 2 4")));
  CHECK(!ip_oracle(points_of("1 1 1 1 6 10")));
}

TEST_CASE("barycentric coordinates satisfy both equations") {
  for (const char* line : {"1 1 1 4 5 12", "1 1 1 3 4 10", "40 41 486 1134 1701 3402", "1 1 2 4"}) {
    const PointSet ps = points_of(line);
    const auto chosen = starting_points(ps);
    REQUIRE(chosen.size() == ps.dim());
    const auto bc = barycentric(ps, chosen);
    REQUIRE(bc);
    Rational total(0);
    for (const auto& x : bc->lambdas) total += x;
    CHECK(total == Rational(1));
    for (std::size_t i = 0; i < ps.dim(); ++i) {
      Rational s(0);
      for (std::size_t k = 0; k < chosen.size(); ++k) s += bc->lambdas[k] * Rational(ps.coord(i, chosen[k]));
      CHECK(s == Rational(1));
    }
  }
  const PointSet ps = points_of("1 1 2 4");
  CHECK(!barycentric(ps, {ps.interior_index(), ps.interior_index(), 0}));
}

TEST_CASE("walk agrees with the oracle on all l=4 candidates") {
  const auto cands = enumerate_candidates(4);
  std::size_t ip = 0, conclusive = 0;
  for (const auto& ws : cands.systems) {
    const PointSet ps = enumerate_points(ws);
    const bool oracle = ip_oracle(ps);
    const auto walk = ip_walk(ps);
    if (walk) {
      ++conclusive;
      CHECK_MESSAGE(*walk == oracle, ws.to_string());
    }
    CHECK(ip_check_verified(ps) == oracle);
    if (oracle) {
      ++ip;
      CHECK(ps.size() >= ps.dim() + 1);
    }
  }
  CHECK(ip == 95);
  CHECK(conclusive == cands.systems.size());
}

TEST_CASE("walk agrees with the oracle on random subsets of point sets") {
  std::mt19937 rng(23);
  const char* lines[] = {"1 1 1 4 5 12", "1 1 1 3 4 10", "1 1 1 1 1 5", "1 2 3 6", "1 1 1 1 6 10",
                         "1 1 2 2 2 8", "2 3 4 5 7 21", "1 1 1 1 4"};
  std::size_t checked = 0;
  for (const char* line : lines) {
    const PointSet full = points_of(line);
    for (int trial = 0; trial < 60; ++trial) {
      std::vector<std::vector<int64_t>> pts{full.point(full.interior_index())};
      for (std::size_t k = 0; k < full.size(); ++k)
        if (rng() % 3) pts.push_back(full.point(k));
      const PointSet ps = PointSet::from_points(full.weight_system(), pts);
      const bool oracle = ip_oracle(ps);
      if (auto w = ip_walk(ps)) {
        ++checked;
        CHECK_MESSAGE(*w == oracle, line);
      }
      // Swapping two coordinates with equal weights gives an isomorphic set.
      const auto& n = full.weight_system().numerators();
      if (n[0] == n[1]) {
        for (auto& p : pts) std::swap(p[0], p[1]);
        const PointSet swapped = PointSet::from_points(full.weight_system(), pts);
        CHECK(ip_check(swapped) == oracle);
        CHECK(ip_oracle(swapped) == oracle);
      }
    }
  }
  CHECK(checked > 400);
}
