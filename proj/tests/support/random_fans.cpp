#include "random_fans.hpp"

#include <algorithm>

namespace randfan {

using toric::Cone;
using toric::Fan;
using toric::Integer;
using toric::IntVec;

namespace {

long uniform(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

bool upper_half(const IntVec& v) { return v[1] > 0 || (v[1] == 0 && v[0] > 0); }

Integer cross(const IntVec& a, const IntVec& b) { return a[0] * b[1] - a[1] * b[0]; }

Cone random_face(std::mt19937_64& rng, const Cone& cone) {
  Cone face;
  while (face.size() < 2) {
    face.clear();
    for (auto r : cone)
      if (rng() & 1) face.push_back(r);
  }
  return face;
}

Fan subdivide_randomly(std::mt19937_64& rng, const Fan& fan, bool unit_coefficients) {
  const Cone& cone = fan.max_cones()[rng() % fan.max_cones().size()];
  const Cone face = random_face(rng, cone);
  IntVec p(fan.dim(), 0);
  for (auto r : face) {
    const long c = unit_coefficients ? 1 : uniform(rng, 1, 3);
    for (std::size_t i = 0; i < fan.dim(); ++i) p[i] += c * fan.ray(r)[i];
  }
  return toric::star_subdivision(fan, toric::primitive(p));
}

}  // namespace

Fan complete_2d(std::mt19937_64& rng, std::size_t k, long bound) {
  for (;;) {
    std::vector<IntVec> rays;
    std::size_t guard = 0;
    while (rays.size() < k && guard++ < 10000) {
      IntVec v{uniform(rng, -bound, bound), uniform(rng, -bound, bound)};
      if (toric::is_zero(v) || !toric::is_primitive(v)) continue;
      if (std::find(rays.begin(), rays.end(), v) != rays.end()) continue;
      rays.push_back(v);
    }
    std::sort(rays.begin(), rays.end(), [](const IntVec& a, const IntVec& b) {
      const bool ua = upper_half(a), ub = upper_half(b);
      if (ua != ub) return ua;
      return cross(a, b) > 0;
    });
    bool ok = rays.size() >= 3;
    for (std::size_t i = 0; i < rays.size() && ok; ++i) ok = cross(rays[i], rays[(i + 1) % rays.size()]) > 0;
    if (!ok) continue;
    std::vector<Cone> cones;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      Cone c{i, (i + 1) % rays.size()};
      std::sort(c.begin(), c.end());
      cones.push_back(c);
    }
    return Fan(2, std::move(rays), std::move(cones));
  }
}

Fan complete_3d(std::mt19937_64& rng, std::size_t steps) {
  Fan fan = (rng() & 1) ? toric::projective_space(3)
                        : toric::product(toric::projective_space(1),
                                         toric::product(toric::projective_space(1), toric::projective_space(1)));
  for (std::size_t s = 0; s < steps; ++s) fan = subdivide_randomly(rng, fan, false);
  return fan;
}

Fan smooth_complete(std::mt19937_64& rng, std::size_t dim, std::size_t steps) {
  Fan fan = toric::projective_space(dim);
  switch (rng() % 3) {
    case 0:
      break;
    case 1:
      fan = dim == 2 ? toric::hirzebruch(uniform(rng, 0, 4))
                     : toric::product(toric::projective_space(1), toric::projective_space(dim - 1));
      break;
    default: {
      Fan p1 = toric::projective_space(1);
      fan = p1;
      for (std::size_t i = 1; i < dim; ++i) fan = toric::product(fan, p1);
    }
  }
  for (std::size_t s = 0; s < steps; ++s) fan = subdivide_randomly(rng, fan, true);
  return fan;
}

}  // namespace randfan
