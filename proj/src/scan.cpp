#include <random>

#include "toric/error.hpp"
#include "toric/positivity.hpp"

namespace toric {

namespace {

// Modulo reduction keeps the stream identical across standard libraries.
std::size_t pick(std::mt19937_64& rng, std::size_t bound) { return static_cast<std::size_t>(rng() % bound); }

bool within_height(const IntVec& v, long bound) {
  for (const auto& x : v)
    if (abs(x) > bound) return false;
  return true;
}

}  // namespace

ScanReport question4_scan(const std::vector<NamedFan>& corpus, const ScanOptions& options) {
  ScanReport report;
  std::vector<NamedFan> pool;

  for (const auto& [name, fan] : corpus) {
    ScanEntry e;
    e.name = name;
    e.complete = is_complete(fan);
    e.smooth = is_smooth(fan);
    if (e.complete) {
      e.projective = check_projectivity(fan).projective;
      e.dagger_holds = check_dagger(fan).holds;
      e.projective_space = is_projective_space_fan(fan);
      e.finding = e.smooth && *e.dagger_holds && !e.projective_space;
      if (e.finding) report.findings.push_back({name, fan});
      if (e.smooth && fan.dim() >= 2) pool.push_back({name, fan});
    }
    report.entries.push_back(std::move(e));
  }
  if (pool.empty()) return report;

  std::mt19937_64 rng(options.seed);
  for (std::size_t attempt = 0; attempt < options.budget; ++attempt) {
    ++report.mutation.candidates;
    const NamedFan& seed = pool[pick(rng, pool.size())];
    const Fan& fan = seed.fan;
    const Cone& cone = fan.max_cones()[pick(rng, fan.max_cones().size())];

    // Random face of dimension >= 2 and positive coefficients in {1,2,3}.
    Cone face;
    while (face.size() < 2) {
      face.clear();
      for (auto r : cone)
        if (rng() & 1) face.push_back(r);
    }
    IntVec point(fan.dim(), 0);
    for (auto r : face) {
      const long c = 1 + static_cast<long>(pick(rng, 3));
      for (std::size_t i = 0; i < fan.dim(); ++i) point[i] += c * fan.ray(r)[i];
    }
    point = primitive(point);
    if (!within_height(point, options.max_height)) {
      ++report.mutation.too_high;
      continue;
    }

    Fan mutant = star_subdivision(fan, point);
    if (!is_smooth(mutant)) continue;
    ++report.mutation.smooth;
    const bool pn = is_projective_space_fan(mutant);
    if (pn) ++report.mutation.projective_space;
    const bool holds = check_dagger(mutant).holds;
    if (holds) ++report.mutation.dagger_holds;
    std::string origin = seed.name + "+star" + std::to_string(attempt);
    if (holds && !pn) report.findings.push_back({origin, mutant});
    if (mutant.num_rays() <= options.max_rays && pool.size() < options.max_pool)
      pool.push_back({std::move(origin), std::move(mutant)});
  }
  return report;
}

}  // namespace toric
