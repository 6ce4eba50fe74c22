#include <doctest.h>

#include "kakeya/search.hpp"

using namespace kakeya;

TEST_CASE("exact minimum in GF(2)^2 confirmed by subset enumeration") {
  Field f2(2);
  auto res = minimal_kakeya_exact(f2, 2);
  CHECK(res.exact);
  CHECK(res.min_size == 3);
  CHECK(minimal_kakeya_bruteforce(f2, 2) == 3);
  PointSet K(f2, 2, res.witness);
  CHECK(is_kakeya(K).ok);
}

TEST_CASE("exact minimum in GF(3)^2") {
  Field f3(3);
  auto res = minimal_kakeya_exact(f3, 2);
  CHECK(res.exact);
  CHECK(res.min_size >= alon_tao_bound(3, 2).bound);
  // independent check: enumerate all 3^4 = 81 one-line-per-direction unions
  auto dirs = canonical_directions(f3, 2);
  REQUIRE(dirs.size() == 4);
  std::size_t best = 9;
  for (std::uint32_t a = 0; a < 3; ++a)
    for (std::uint32_t b = 0; b < 3; ++b)
      for (std::uint32_t c = 0; c < 3; ++c)
        for (std::uint32_t d = 0; d < 3; ++d) {
          std::uint32_t choice[4] = {a, b, c, d};
          PointSet K(f3, 2);
          for (std::size_t di = 0; di < 4; ++di) {
            auto bases = transversal_points(f3, 2, dirs[di]);
            for (auto code : line_codes(f3, bases[choice[di]], dirs[di].v))
              K.insert(code);
          }
          best = std::min(best, K.size());
        }
  CHECK(res.min_size == best);
}

TEST_CASE("n=1 forces the whole field") {
  Field f2(2);
  auto res = minimal_kakeya_exact(f2, 1);
  CHECK(res.min_size == 2);
}

TEST_CASE("greedy respects the theorem and determinism") {
  for (std::uint32_t qv : {2u, 3u, 5u}) {
    Field f(qv);
    auto res = minimal_kakeya_greedy(f, 2, 3, 1234);
    CHECK(res.min_size >= alon_tao_bound(qv, 2).bound);
    PointSet K(f, 2, res.witness);
    CHECK(is_kakeya(K).ok);
    auto again = minimal_kakeya_greedy(f, 2, 3, 1234);
    CHECK(res.witness == again.witness);
  }
}

TEST_CASE("greedy with restarts matches the exact minimum in GF(2)^2") {
  Field f2(2);
  auto exact = minimal_kakeya_exact(f2, 2);
  auto greedy = minimal_kakeya_greedy(f2, 2, 4, 99);
  CHECK(greedy.min_size == exact.min_size);
}

TEST_CASE("exact never exceeds greedy") {
  for (std::uint32_t qv : {2u, 3u}) {
    Field f(qv);
    CHECK(minimal_kakeya_exact(f, 2).min_size <=
          minimal_kakeya_greedy(f, 2, 2, 5).min_size);
  }
}

TEST_CASE("budget exhaustion downgrades to heuristic") {
  Field f3(3);
  Limits tiny;
  tiny.node_budget = 10;
  auto res = minimal_kakeya_exact(f3, 2, tiny);
  CHECK_FALSE(res.exact);
  PointSet K(f3, 2, res.witness);
  CHECK(is_kakeya(K).ok);
}

TEST_CASE("bruteforce oracle refuses large spaces") {
  Field f5(5);
  CHECK_THROWS_AS(minimal_kakeya_bruteforce(f5, 2), resource_error);
}

TEST_CASE("exact search refuses spaces beyond the point limit") {
  Field f3(3);
  Limits tight;
  tight.max_points = 8;
  CHECK_THROWS_AS(minimal_kakeya_exact(f3, 2, tight), resource_error);
}
