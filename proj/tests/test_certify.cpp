#include <doctest.h>

#include "kakeya/certify.hpp"
#include "kakeya/linalg.hpp"

using namespace kakeya;

TEST_CASE("thm2 refutation on a tiny set") {
  Field f5(5);
  PointSet K = PointSet::from_points(f5, 2, {{0, 0}, {1, 1}});
  Certificate cert = certify_refutation_thm2(K, Ratio(1, 1), Ratio(1, 1));
  CHECK(cert.is_refutation());
  for (const auto& step : cert.doc["steps"]) CHECK(step.at("ok").get<bool>());

  // re-verification from the serialization alone
  Json parsed = Json::parse(cert.dump());
  auto report = verify_certificate(parsed);
  CHECK(report.ok);
}

TEST_CASE("thm2 consistency branch") {
  Field f3(3);
  PointSet K = PointSet::full(f3, 2);
  Certificate cert = certify_refutation_thm2(K, Ratio(1, 1), Ratio(1, 1));
  CHECK_FALSE(cert.is_refutation());
  CHECK(verify_certificate(Json::parse(cert.dump())).ok);
}

TEST_CASE("thm2 never refutes what check_delta_gamma accepts") {
  Field f5(5);
  Rng rng(2024);
  Ratio delta(1, 1), gamma(1, 1);
  for (int t = 0; t < 100; ++t) {
    std::vector<std::uint64_t> codes;
    std::size_t want = 1 + rng.below(3);  // below the bound of 4
    while (codes.size() < want) codes.push_back(rng.below(25));
    PointSet K(f5, 2, codes);
    Certificate cert = certify_refutation_thm2(K, delta, gamma);
    REQUIRE(cert.is_refutation());
    CHECK_FALSE(check_delta_gamma(K, delta, gamma).ok);
    CHECK(verify_certificate(cert.doc).ok);
  }
}

TEST_CASE("cascade consistency on constructed Kakeya sets") {
  Field f3(3);
  PointSet K = construct(ConstructKind::greedy_lines, f3, 2);
  Certificate cert = certify_cascade(K);
  CHECK_FALSE(cert.is_refutation());
  CHECK(cert.doc["steps"].size() == 2);
  CHECK(verify_certificate(Json::parse(cert.dump())).ok);
}

TEST_CASE("cascade rejects non-Kakeya input naming the direction") {
  Field f3(3);
  PointSet K = PointSet::from_points(f3, 2, {{0, 0}});
  CHECK_THROWS_WITH_AS(certify_cascade(K),
                       doctest::Contains("no full line in direction"), usage_error);
}

TEST_CASE("cascade with bypass halts at the first missing witness") {
  Field f3(3);
  // size 2 < C(3,2) = 3, not Kakeya
  PointSet K = PointSet::from_points(f3, 2, {{0, 0}, {1, 1}});
  CHECK_THROWS_WITH_AS(certify_cascade(K, 1, /*bypass=*/true),
                       doctest::Contains("no witness line in direction"), usage_error);
}

TEST_CASE("degenerate n=1: Kakeya means the whole field") {
  Field f5(5);
  PointSet K = PointSet::full(f5, 1);
  CHECK(is_kakeya(K).ok);
  CHECK(alon_tao_bound(5, 1).bound == 4);  // C(q-1, 1) = q-1 <= q
  Certificate cert = certify_cascade(K);
  CHECK_FALSE(cert.is_refutation());
  CHECK(verify_certificate(cert.doc).ok);
  // dropping any point breaks the only line
  PointSet broken(f5, 1, {0, 1, 2, 3});
  CHECK_FALSE(is_kakeya(broken).ok);
}

TEST_CASE("tampered certificates fail verification") {
  Field f5(5);
  PointSet K = PointSet::from_points(f5, 2, {{0, 0}, {1, 1}});
  Certificate cert = certify_refutation_thm2(K, Ratio(1, 1), Ratio(1, 1));

  Json bad = cert.doc;
  bad["polynomial"] = "1*x1^3";
  CHECK_FALSE(verify_certificate(bad).ok);

  Json bad2 = cert.doc;
  bad2["points"].push_back(24);
  CHECK_FALSE(verify_certificate(bad2).ok);  // digest mismatch

  Json bad3 = cert.doc;
  bad3["monomial_order"] = "lex";
  CHECK_FALSE(verify_certificate(bad3).ok);
}

TEST_CASE("certificates are byte-stable across runs and thread counts") {
  Field f5(5);
  PointSet K = PointSet::from_points(f5, 2, {{0, 0}, {1, 1}, {2, 3}});
  auto a = certify_refutation_thm2(K, Ratio(1, 1), Ratio(1, 1), 1).dump();
  auto b = certify_refutation_thm2(K, Ratio(1, 1), Ratio(1, 1), 4).dump();
  CHECK(a == b);

  Field f3(3);
  PointSet G = construct(ConstructKind::greedy_lines, f3, 2);
  CHECK(certify_cascade(G, 1).dump() == certify_cascade(G, 4).dump());
}
