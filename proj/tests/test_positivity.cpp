#include <algorithm>
#include <filesystem>
#include <random>

#include "doctest.h"
#include "support/oracles.hpp"
#include "support/random_fans.hpp"
#include "toric/error.hpp"
#include "toric/fan_io.hpp"
#include "toric/positivity.hpp"

using namespace toric;

namespace {

Fan p1123() {
  return Fan(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -2, -3}},
             {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

Fan blpt_p2() { return star_subdivision(projective_space(2), {1, 1}); }

std::vector<NamedFan> corpus() {
  std::vector<std::filesystem::path> paths;
  for (const auto& e : std::filesystem::directory_iterator(TORIC_CORPUS_DIR))
    if (e.path().extension() == ".json") paths.push_back(e.path());
  std::sort(paths.begin(), paths.end());
  std::vector<NamedFan> out;
  for (const auto& p : paths) out.push_back({p.stem().string(), load_fan(p)});
  return out;
}

PositiveRelation rel(Cone idx, std::vector<long> coeffs) {
  RatVec c;
  for (long x : coeffs) c.emplace_back(x);
  return {std::move(idx), std::move(c)};
}

std::vector<Fan> random_complete_fans(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::vector<Fan> out;
  for (std::size_t i = 0; i < count; ++i) {
    switch (i % 3) {
      case 0: out.push_back(randfan::complete_2d(rng, 3 + rng() % 7)); break;
      case 1: out.push_back(randfan::complete_3d(rng, rng() % 4)); break;
      default: out.push_back(randfan::smooth_complete(rng, 2 + rng() % 2, rng() % 3)); break;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("spans_cone examples") {
  const auto p2 = projective_space(2);
  CHECK(spans_cone(p2, {0, 1}));
  CHECK_FALSE(spans_cone(p2, {0, 1, 2}));
  CHECK(spans_cone(p2, {}));
  for (long r = 0; r <= 5; ++r) {
    CHECK_FALSE(spans_cone(hirzebruch(r), {1, 2}));
    CHECK(spans_cone(hirzebruch(r), {1, 3}));
  }
  try {
    spans_cone(p2, {0, 7});
    FAIL("expected IndexOutOfRange");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IndexOutOfRange);
  }
}

TEST_CASE("verify_relation") {
  const auto h = hirzebruch(2);
  CHECK(verify_relation(h, rel({1, 2}, {1, 1})));
  CHECK(verify_relation(h, rel({0, 2, 3}, {1, 2, 1})));
  CHECK_FALSE(verify_relation(h, rel({0, 2, 3}, {1, 1, 1})));
  CHECK_FALSE(verify_relation(h, rel({2, 1}, {1, 1})));
  CHECK_FALSE(verify_relation(h, rel({1, 2}, {0, 0})));
  CHECK_FALSE(verify_relation(h, rel({1, 2}, {-1, -1})));
}

TEST_CASE("dagger examples") {
  CHECK(check_dagger(p1123()).holds);
  CHECK_FALSE(check_dagger(p1123()).witness);
  for (long r = 0; r <= 5; ++r) {
    const auto rep = check_dagger(hirzebruch(r));
    CHECK_FALSE(rep.holds);
    REQUIRE(rep.witness);
    CHECK(*rep.witness == rel({1, 2}, {1, 1}));
  }
  for (std::size_t n = 1; n <= 5; ++n) CHECK(check_dagger(projective_space(n)).holds);
  CHECK_THROWS_AS(check_dagger(Fan(2, {{1, 0}, {0, 1}}, {{0, 1}})), Error);
}

TEST_CASE("positive circuit examples") {
  for (long r = 1; r <= 5; ++r)
    CHECK(positive_circuits(hirzebruch(r), 3) ==
          std::vector<PositiveRelation>{rel({1, 2}, {1, 1}), rel({0, 2, 3}, {1, r, 1})});
  CHECK(positive_circuits(hirzebruch(0), 3) ==
        std::vector<PositiveRelation>{rel({1, 2}, {1, 1}), rel({0, 3}, {1, 1})});
  CHECK(positive_circuits(projective_space(2), 3) == std::vector<PositiveRelation>{rel({0, 1, 2}, {1, 1, 1})});
  CHECK(positive_circuits(p1123(), 3).empty());
  CHECK(positive_circuits(p1123(), 4) == std::vector<PositiveRelation>{rel({0, 1, 2, 3}, {1, 2, 3, 1})});
}

TEST_CASE("positive circuits match the brute-force oracle") {
  for (const auto& nf : corpus()) {
    const auto& f = nf.fan;
    if (f.num_rays() > 9) continue;
    const std::size_t k = std::min<std::size_t>(f.num_rays(), f.dim() + 1);
    CHECK(positive_circuits(f, k) == oracle::brute_force_positive_circuits(f, k));
  }
  for (const auto& f : random_complete_fans(77, 30)) {
    const std::size_t k = std::min<std::size_t>(f.num_rays(), f.dim() + 1);
    CHECK(positive_circuits(f, k) == oracle::brute_force_positive_circuits(f, k));
  }
}

TEST_CASE("circuit and LP routes decide (dagger) identically") {
  std::size_t holds = 0, fails = 0;
  auto check = [&](const Fan& f) {
    const auto a = check_dagger(f);
    const auto b = check_dagger_by_lp(f);
    CHECK(a.holds == b.holds);
    (a.holds ? holds : fails)++;
    for (const auto* rep : {&a, &b})
      if (rep->witness) {
        CHECK(verify_relation(f, *rep->witness));
        CHECK(rep->witness->indices.size() <= f.dim());
      }
  };
  for (const auto& nf : corpus()) check(nf.fan);
  for (const auto& f : random_complete_fans(4242, 150)) check(f);
  CHECK(holds > 10);
  CHECK(fails > 10);
}

TEST_CASE("complete fans carry a positive circuit of support at most n+1") {
  for (const auto& nf : corpus()) CHECK_FALSE(positive_circuits(nf.fan, nf.fan.dim() + 1).empty());
  for (const auto& f : random_complete_fans(31, 40)) CHECK_FALSE(positive_circuits(f, f.dim() + 1).empty());
}

TEST_CASE("primitive collection examples") {
  CHECK(primitive_collections(projective_space(2)) == std::vector<Cone>{{0, 1, 2}});
  for (long r = 0; r <= 5; ++r) CHECK(primitive_collections(hirzebruch(r)) == std::vector<Cone>{{0, 3}, {1, 2}});
  CHECK(primitive_collections(blpt_p2()) == std::vector<Cone>{{0, 1}, {2, 3}});
}

TEST_CASE("primitive collections match the brute-force oracle") {
  for (const auto& nf : corpus()) CHECK(primitive_collections(nf.fan) == oracle::brute_force_primitive_collections(nf.fan));
  for (const auto& f : random_complete_fans(5, 30))
    CHECK(primitive_collections(f) == oracle::brute_force_primitive_collections(f));
}

TEST_CASE("zero-sum primitive collections") {
  for (long r = 0; r <= 5; ++r) CHECK(find_zero_sum_primitive_collection(hirzebruch(r)) == Cone{1, 2});
  CHECK(find_zero_sum_primitive_collection(projective_space(3)) == Cone{0, 1, 2, 3});
  CHECK(find_zero_sum_primitive_collection(blpt_p2()) == Cone{2, 3});
  CHECK_FALSE(find_zero_sum_primitive_collection(p1123()));
}

TEST_CASE("every smooth projective corpus fan has a zero-sum primitive collection") {
  std::size_t seen = 0;
  for (const auto& nf : corpus()) {
    const auto& f = nf.fan;
    if (!is_smooth(f) || !check_projectivity(f).projective) continue;
    ++seen;
    const auto c = find_zero_sum_primitive_collection(f);
    REQUIRE_MESSAGE(c, nf.name);
    IntVec sum(f.dim(), 0);
    for (auto i : *c)
      for (std::size_t k = 0; k < f.dim(); ++k) sum[k] += f.ray(i)[k];
    CHECK(is_zero(sum));
  }
  CHECK(seen >= 10);
}

TEST_CASE("projective space recognition") {
  CHECK(is_projective_space_fan(projective_space(3)));
  CHECK_FALSE(is_projective_space_fan(p1123()));
  for (long r = 0; r <= 5; ++r) CHECK_FALSE(is_projective_space_fan(hirzebruch(r)));
  // A unimodular image of P^2 is still P^2.
  const Fan sheared(2, {{1, 0}, {1, 1}, {-2, -1}}, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(is_projective_space_fan(sheared));
  CHECK_FALSE(is_projective_space_fan(weighted_projective_space({1, 1, 2})));
}

TEST_CASE("tangent Seshadri sign examples") {
  CHECK(tangent_seshadri_sign_at_identity(p1123()) == TangentSign::Positive);
  for (long r = 0; r <= 5; ++r) CHECK(tangent_seshadri_sign_at_identity(hirzebruch(r)) == TangentSign::Zero);
  CHECK(tangent_seshadri_sign_at_identity(product(projective_space(1), projective_space(2))) == TangentSign::Zero);
  CHECK(to_string(TangentSign::Positive) == "positive");
  CHECK(to_string(TangentSign::Zero) == "zero");
}

TEST_CASE("the sign is never negative") {
  // The codomain has no negative value; check at runtime that every answer is
  // one of the two admissible values and agrees with (dagger).
  auto check = [](const Fan& f) {
    const auto s = tangent_seshadri_sign_at_identity(f);
    CHECK((s == TangentSign::Zero || s == TangentSign::Positive));
    CHECK((s == TangentSign::Positive) == check_dagger(f).holds);
  };
  for (const auto& nf : corpus()) check(nf.fan);
  for (const auto& f : random_complete_fans(9, 60)) check(f);
}

TEST_CASE("verify_theorem1 examples") {
  const auto p3 = verify_theorem1(projective_space(3));
  CHECK(p3.status == Theorem1Report::Status::Pass);
  CHECK(p3.sign == TangentSign::Positive);
  CHECK(p3.projective_space);

  const auto s2 = verify_theorem1(hirzebruch(2));
  CHECK(s2.status == Theorem1Report::Status::Pass);
  CHECK(s2.sign == TangentSign::Zero);
  CHECK_FALSE(s2.projective_space);

  const auto bl = verify_theorem1(blpt_p2());
  CHECK(bl.status == Theorem1Report::Status::Pass);
  CHECK(bl.sign == TangentSign::Zero);
  CHECK(check_dagger(blpt_p2()).witness->indices == Cone{2, 3});

  const auto w = verify_theorem1(p1123());
  CHECK(w.status == Theorem1Report::Status::NotApplicable);
  CHECK(w.checks.empty());
}

TEST_CASE("verify_theorem1 passes on every smooth projective fan") {
  for (const auto& nf : corpus()) {
    const auto rep = verify_theorem1(nf.fan);
    if (rep.status == Theorem1Report::Status::NotApplicable) continue;
    CHECK_MESSAGE(rep.status == Theorem1Report::Status::Pass, nf.name);
    for (const auto& c : rep.checks) CHECK_MESSAGE(c.ok, nf.name, " ", c.name);
  }
  std::mt19937_64 rng(61);
  for (int t = 0; t < 20; ++t) {
    const auto f = randfan::smooth_complete(rng, 2 + t % 2, rng() % 4);
    if (!check_projectivity(f).projective) continue;
    CHECK(verify_theorem1(f).status == Theorem1Report::Status::Pass);
  }
}

TEST_CASE("scan examples") {
  std::vector<NamedFan> gens;
  for (std::size_t n = 1; n <= 3; ++n) gens.push_back({"pn" + std::to_string(n), projective_space(n)});
  for (long r = 0; r <= 5; ++r) gens.push_back({"h" + std::to_string(r), hirzebruch(r)});
  gens.push_back({"p1123", p1123()});
  gens.push_back({"p1xp1", product(projective_space(1), projective_space(1))});
  gens.push_back({"p1xp2", product(projective_space(1), projective_space(2))});

  const auto rep = question4_scan(gens, {.budget = 200, .seed = 1});
  CHECK(rep.findings.empty());
  CHECK(rep.entries.size() == gens.size());
  CHECK(rep.mutation.candidates == 200);

  CHECK(question4_scan({{"p3", projective_space(3)}}, {.budget = 100, .seed = 2}).findings.empty());
  const auto w = question4_scan({{"p1123", p1123()}}, {.budget = 100, .seed = 3});
  CHECK(w.findings.empty());
  CHECK_FALSE(w.entries[0].smooth);
  CHECK(w.mutation.candidates == 0);
}

TEST_CASE("scan is reproducible from its seed") {
  const std::vector<NamedFan> c{{"h1", hirzebruch(1)}, {"p3", projective_space(3)}};
  const auto a = question4_scan(c, {.budget = 300, .seed = 42});
  const auto b = question4_scan(c, {.budget = 300, .seed = 42});
  CHECK(a.mutation.candidates == b.mutation.candidates);
  CHECK(a.mutation.smooth == b.mutation.smooth);
  CHECK(a.mutation.too_high == b.mutation.too_high);
  CHECK(a.mutation.dagger_holds == b.mutation.dagger_holds);
  CHECK(a.findings.size() == b.findings.size());
}
