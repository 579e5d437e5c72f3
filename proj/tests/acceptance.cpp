// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails. Runs standalone (no doctest) so the output stays terse.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "support/oracles.hpp"
#include "support/random_fans.hpp"
#include "toric/cli.hpp"
#include "toric/fan.hpp"
#include "toric/fan_io.hpp"
#include "toric/intersection.hpp"
#include "toric/positivity.hpp"

using namespace toric;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

std::vector<NamedFan> load_corpus() {
  std::vector<fs::path> paths;
  for (const auto& e : fs::directory_iterator(TORIC_CORPUS_DIR))
    if (e.path().extension() == ".json") paths.push_back(e.path());
  std::sort(paths.begin(), paths.end());
  std::vector<NamedFan> out;
  for (const auto& p : paths) out.push_back({p.stem().string(), load_fan(p)});
  return out;
}

std::vector<Fan> random_complete(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::vector<Fan> out;
  for (std::size_t i = 0; i < count; ++i)
    out.push_back(i % 2 ? randfan::complete_3d(rng, rng() % 4) : randfan::complete_2d(rng, 3 + rng() % 8));
  return out;
}

const NamedFan& by_name(const std::vector<NamedFan>& corpus, const std::string& name) {
  for (const auto& nf : corpus)
    if (nf.name == name) return nf;
  throw std::runtime_error("corpus fan missing: " + name);
}

bool smooth_projective(const Fan& f) {
  return is_complete(f) && is_smooth(f) && check_projectivity(f).projective;
}

Outcome weighted_fixture(const std::vector<NamedFan>& corpus) {
  Outcome o;
  const auto& f = by_name(corpus, "p1123").fan;
  o.require(validate_fan(f).valid, "validate");
  const auto sm = check_smoothness(f);
  o.require(!sm.smooth, "is_smooth should be false");
  std::vector<Integer> mult;
  for (const auto& c : f.max_cones()) mult.push_back(abs(oracle::cofactor_determinant(f.cone_matrix(c))));
  auto lib = sm.multiplicities;
  std::sort(mult.begin(), mult.end());
  std::sort(lib.begin(), lib.end());
  o.require(mult == std::vector<Integer>{1, 1, 2, 3}, "oracle multiplicities");
  o.require(lib == mult, "multiplicities");
  o.require(is_complete(f), "is_complete");
  o.require(check_dagger(f).holds, "dagger");
  o.require(tangent_seshadri_sign_at_identity(f) == TangentSign::Positive, "sign");
  o.require(!is_projective_space_fan(f), "not projective space");
  return o;
}

Outcome hirzebruch_family() {
  Outcome o;
  for (long r = 0; r <= 5; ++r) {
    const auto f = hirzebruch(r);
    const auto d = check_dagger(f);
    const PositiveRelation expected{{1, 2}, {Rat(1), Rat(1)}};
    o.require(!d.holds && d.witness && *d.witness == expected, "witness r=" + std::to_string(r));
    const auto c = wall_curve_class(f, Cone{1});
    o.require(c.intersections[1] == -r, "D2.D2 r=" + std::to_string(r));
    InvariantDivisor d2{RatVec(4)};
    d2.coefficients[1] = 1;
    o.require(intersect(d2, c) == -r, "D2 on wall curve r=" + std::to_string(r));
    const auto sign = divisor_seshadri_sign_at_identity(f, d2);
    if (r >= 1) o.require(sign == DivisorSign::NegativeInfinity, "D2 sign r=" + std::to_string(r));
    else o.require(sign == DivisorSign::NonNegative, "D2 sign r=0");
  }
  return o;
}

Outcome theorem1_harness(const std::vector<NamedFan>& corpus) {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  std::size_t applicable = 0;
  std::size_t min_dim = 99, max_dim = 0;
  for (const auto& nf : corpus) {
    const auto& f = nf.fan;
    if (!smooth_projective(f)) continue;
    if (f.dim() >= 2) {
      min_dim = std::min(min_dim, f.dim());
      max_dim = std::max(max_dim, f.dim());
    }
    ++applicable;
    const auto sign = tangent_seshadri_sign_at_identity(f);
    const bool is_pn = lattice_isomorphic(f, projective_space(f.dim()));
    o.require((sign == TangentSign::Positive) == is_pn, nf.name + ": sign vs P^n");
    const auto rep = verify_theorem1(f);
    o.require(rep.status == Theorem1Report::Status::Pass, nf.name + ": verify_theorem1");
  }
  const auto r = cli::cmd_corpus(TORIC_CORPUS_DIR, {cli::CorpusMode::Theorem1, 0, 0});
  o.require(r.exit_code == 0, "corpus --theorem1 exit code");
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(applicable >= 10, "fewer than 10 smooth projective fans");
  o.require(min_dim == 2 && max_dim == 4, "dimensions 2-4 not covered");
  o.require(secs < 10.0, "runtime " + std::to_string(secs) + " s");
  if (o.ok) o.detail = std::to_string(applicable) + " fans, " + std::to_string(secs) + " s";
  return o;
}

Outcome zero_sum_property(const std::vector<NamedFan>& corpus) {
  Outcome o;
  for (const auto& nf : corpus) {
    const auto& f = nf.fan;
    if (!smooth_projective(f)) continue;
    const auto c = find_zero_sum_primitive_collection(f);
    o.require(c.has_value(), nf.name + ": none found");
    if (!c) continue;
    const auto pcs = primitive_collections(f);
    o.require(std::find(pcs.begin(), pcs.end(), *c) != pcs.end(), nf.name + ": not primitive");
    IntVec sum(f.dim(), 0);
    for (auto i : *c)
      for (std::size_t k = 0; k < f.dim(); ++k) sum[k] += f.ray(i)[k];
    o.require(is_zero(sum), nf.name + ": nonzero sum");
  }
  return o;
}

Outcome dagger_oracles(const std::vector<NamedFan>& corpus) {
  Outcome o;
  std::size_t disagreements = 0, total = 0;
  auto check = [&](const Fan& f) {
    ++total;
    if (check_dagger(f).holds != check_dagger_by_lp(f).holds) ++disagreements;
  };
  for (const auto& nf : corpus) check(nf.fan);
  const auto rnd = random_complete(20260101, 120);
  for (const auto& f : rnd) {
    o.require(validate_fan(f).valid && is_complete(f), "random fan invalid");
    check(f);
  }
  o.require(disagreements == 0, std::to_string(disagreements) + " disagreements");
  if (o.ok) o.detail = std::to_string(total) + " fans";
  return o;
}

Outcome completeness_crosscheck(const std::vector<NamedFan>& corpus) {
  Outcome o;
  for (const auto& nf : corpus)
    o.require(is_complete(nf.fan) == oracle::monte_carlo_complete(nf.fan, 1000, 6), nf.name);
  return o;
}

Outcome projectivity_certificates(const std::vector<NamedFan>& corpus) {
  Outcome o;
  auto check = [&](const Fan& f, const std::string& name) {
    const auto rep = check_projectivity(f);
    o.require(rep.problem && lp::verify_certificate(*rep.problem, rep.certificate), name + ": certificate");
    if (rep.projective) o.require(verify_support_function(f, rep.support_function), name + ": support function");
    return rep.projective;
  };
  for (const auto& nf : corpus)
    if (is_complete(nf.fan)) check(nf.fan, nf.name);
  std::mt19937_64 rng(7);
  for (int t = 0; t < 60; ++t) {
    const auto f = randfan::complete_2d(rng, 3 + rng() % 10);
    o.require(check(f, "random 2D #" + std::to_string(t)), "random 2D fan not projective");
  }
  return o;
}

Outcome curve_classes(const std::vector<NamedFan>& corpus) {
  Outcome o;
  for (const auto& nf : corpus) {
    const auto& f = nf.fan;
    if (!is_complete(f) || f.dim() < 2) continue;
    const bool smooth = is_smooth(f);
    for (const auto& [w, c] : all_wall_curves(f)) {
      o.require(satisfies_class_relation(f, c), nf.name + ": relation");
      // The wall's own relation with coefficients cleared to integers; wall
      // coefficients may be negative, so it is only a positive relation when
      // they are all positive.
      Cone support = w.rays;
      support.push_back(w.opposite[0]);
      support.push_back(w.opposite[1]);
      std::sort(support.begin(), support.end());
      bool positive = true;
      Integer l = 1;
      for (auto i : support) {
        positive = positive && c.intersections[i] > 0;
        l = lcm(l, c.intersections[i].get_den());
      }
      if (positive) {
        PositiveRelation rel{support, {}};
        for (auto i : support) rel.coefficients.push_back(c.intersections[i] * l);
        o.require(positively_proportional(relation_curve_class(f, rel), c), nf.name + ": bridge");
      }
      if (smooth)
        for (const auto& x : c.intersections) o.require(is_integral(x), nf.name + ": non-integral");
    }
  }
  return o;
}

Outcome sign_never_negative(const std::vector<NamedFan>& corpus) {
  Outcome o;
  std::size_t n = 0;
  auto check = [&](const Fan& f) {
    if (!is_complete(f)) return;
    const auto s = tangent_seshadri_sign_at_identity(f);
    ++n;
    o.require(s == TangentSign::Zero || s == TangentSign::Positive, "negative sign");
  };
  for (const auto& nf : corpus) check(nf.fan);
  for (const auto& f : random_complete(99, 100)) check(f);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 30; ++t) check(randfan::smooth_complete(rng, 2 + t % 2, rng() % 4));
  if (o.ok) o.detail = std::to_string(n) + " fans";
  return o;
}

Outcome question4() {
  Outcome o;
  const cli::CorpusOptions opts{cli::CorpusMode::Question4, 1000, 42};
  const auto a = cli::cmd_corpus(TORIC_CORPUS_DIR, opts);
  const auto b = cli::cmd_corpus(TORIC_CORPUS_DIR, opts);
  o.require(a.exit_code == 0, "exit code " + std::to_string(a.exit_code));
  o.require(a.out == b.out, "reports differ");
  o.require(a.out.find("\"findings\":[]") != std::string::npos, "findings present");
  return o;
}

}  // namespace

int main() {
  const auto corpus = load_corpus();
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 weighted projective fixture", [&] { return weighted_fixture(corpus); }},
      {"2 hirzebruch family", [] { return hirzebruch_family(); }},
      {"3 projective-space characterization harness", [&] { return theorem1_harness(corpus); }},
      {"4 zero-sum primitive collections", [&] { return zero_sum_property(corpus); }},
      {"5 dagger oracle equivalence", [&] { return dagger_oracles(corpus); }},
      {"6 completeness cross-check", [&] { return completeness_crosscheck(corpus); }},
      {"7 projectivity certificates", [&] { return projectivity_certificates(corpus); }},
      {"8 curve-class consistency", [&] { return curve_classes(corpus); }},
      {"9 tangent sign never negative", [&] { return sign_never_negative(corpus); }},
      {"10 question4 scan", [] { return question4(); }},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::printf("%s %s%s%s\n", o.ok ? "PASS" : "FAIL", name.c_str(), o.detail.empty() ? "" : " - ",
                o.detail.c_str());
    failed += o.ok ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
