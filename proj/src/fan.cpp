#include "toric/fan.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <utility>

#include "toric/error.hpp"

namespace toric {

namespace {

std::string cone_str(const Cone& c) {
  std::string s = "{";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s + "}";
}

Rat dot(const RatVec& w, const IntVec& v) {
  Rat s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) s += w[i] * v[i];
  return s;
}

RatVec ray_row(const IntVec& v) { return RatVec(v.begin(), v.end()); }

// Facet -> list of (max-cone index, opposite ray).
std::map<Cone, std::vector<std::pair<std::size_t, std::size_t>>> facet_map(const Fan& fan) {
  std::map<Cone, std::vector<std::pair<std::size_t, std::size_t>>> facets;
  for (std::size_t ci = 0; ci < fan.max_cones().size(); ++ci) {
    const Cone& c = fan.max_cones()[ci];
    for (std::size_t k = 0; k < c.size(); ++k) {
      Cone f;
      for (std::size_t t = 0; t < c.size(); ++t)
        if (t != k) f.push_back(c[t]);
      facets[f].emplace_back(ci, c[k]);
    }
  }
  return facets;
}

}  // namespace

Fan::Fan(std::size_t dim, std::vector<IntVec> rays, std::vector<Cone> max_cones)
    : dim_(dim), rays_(std::move(rays)), cones_(std::move(max_cones)) {
  if (dim_ == 0) throw Error(ErrorCode::MalformedFan, "lattice dimension must be positive");
  for (std::size_t i = 0; i < rays_.size(); ++i)
    if (rays_[i].size() != dim_)
      throw Error(ErrorCode::MalformedFan, "ray " + std::to_string(i) + " has length " +
                                               std::to_string(rays_[i].size()) + ", expected " +
                                               std::to_string(dim_));
  for (auto& c : cones_) {
    std::sort(c.begin(), c.end());
    if (std::adjacent_find(c.begin(), c.end()) != c.end())
      throw Error(ErrorCode::MalformedFan, "cone " + cone_str(c) + " repeats a ray index");
    if (!c.empty() && c.back() >= rays_.size())
      throw Error(ErrorCode::MalformedFan, "cone " + cone_str(c) + " references a missing ray");
  }
}

IntMatrix Fan::cone_matrix(const Cone& cone) const {
  IntMatrix m(cone.size(), dim_);
  for (std::size_t i = 0; i < cone.size(); ++i)
    for (std::size_t j = 0; j < dim_; ++j) m(i, j) = rays_.at(cone[i])[j];
  return m;
}

std::optional<RatVec> separating_functional(const Fan& fan, std::size_t a, std::size_t b) {
  const Cone& ca = fan.max_cones().at(a);
  const Cone& cb = fan.max_cones().at(b);
  lp::LPProblem p(fan.dim());
  for (auto r : ca) {
    const bool shared = std::binary_search(cb.begin(), cb.end(), r);
    p.add_constraint(ray_row(fan.ray(r)), shared ? lp::Sense::Equal : lp::Sense::GreaterEqual, shared ? 0 : 1);
  }
  for (auto r : cb)
    if (!std::binary_search(ca.begin(), ca.end(), r)) p.add_constraint(ray_row(fan.ray(r)), lp::Sense::LessEqual, -1);
  auto cert = lp::solve_feasibility(p);
  if (!lp::verify_certificate(p, cert))
    throw Error(ErrorCode::Internal, "separating functional certificate failed to re-verify");
  if (!cert.feasible()) return std::nullopt;
  return cert.point;
}

ValidationReport validate_fan(const Fan& fan) {
  ValidationReport rep;
  auto fail = [&](ErrorCode code, std::string msg) {
    rep.valid = false;
    rep.error = code;
    rep.message = std::move(msg);
    return rep;
  };

  const auto& rays = fan.rays();
  for (std::size_t i = 0; i < rays.size(); ++i) {
    if (!is_primitive(rays[i])) {
      rep.ray = i;
      return fail(ErrorCode::NonPrimitiveRay, "ray " + std::to_string(i) + " is zero or not primitive");
    }
    for (std::size_t j = 0; j < i; ++j)
      if (rays[i] == rays[j]) {
        rep.ray = i;
        return fail(ErrorCode::DuplicateRay, "rays " + std::to_string(j) + " and " + std::to_string(i) + " coincide");
      }
  }

  const auto& cones = fan.max_cones();
  std::vector<bool> used(rays.size(), false);
  for (std::size_t ci = 0; ci < cones.size(); ++ci) {
    const Cone& c = cones[ci];
    if (c.empty()) {
      rep.cones = {ci};
      return fail(ErrorCode::MalformedFan, "cone " + std::to_string(ci) + " is empty");
    }
    if (rank(fan.cone_matrix(c)) != c.size()) {
      rep.cones = {ci};
      return fail(ErrorCode::DependentConeRays, "cone " + cone_str(c) + " has linearly dependent rays");
    }
    for (auto r : c) used[r] = true;
  }
  for (std::size_t i = 0; i < cones.size(); ++i)
    for (std::size_t j = 0; j < cones.size(); ++j) {
      if (i == j) continue;
      if (std::includes(cones[j].begin(), cones[j].end(), cones[i].begin(), cones[i].end())) {
        rep.cones = {std::min(i, j), std::max(i, j)};
        return fail(ErrorCode::NonMaximalCone, "cone " + cone_str(cones[i]) + " is contained in cone " + cone_str(cones[j]));
      }
    }
  for (std::size_t r = 0; r < rays.size(); ++r)
    if (!used[r]) {
      rep.ray = r;
      return fail(ErrorCode::DanglingRay, "ray " + std::to_string(r) + " lies in no cone");
    }

  for (std::size_t i = 0; i < cones.size(); ++i)
    for (std::size_t j = i + 1; j < cones.size(); ++j) {
      if (!separating_functional(fan, i, j)) {
        rep.cones = {i, j};
        return fail(ErrorCode::ConeOverlap, "cones " + std::to_string(i) + " " + cone_str(cones[i]) + " and " +
                                                std::to_string(j) + " " + cone_str(cones[j]) +
                                                " do not meet in a common face");
      }
      ++rep.pairs_certified;
    }
  return rep;
}

void require_valid(const Fan& fan) {
  auto rep = validate_fan(fan);
  if (!rep.valid) throw Error(*rep.error, rep.message);
}

CompletenessReport check_completeness(const Fan& fan) {
  CompletenessReport rep;
  const auto& cones = fan.max_cones();
  for (std::size_t ci = 0; ci < cones.size(); ++ci)
    if (cones[ci].size() != fan.dim()) {
      rep.non_full_cone = ci;
      return rep;
    }
  if (cones.empty()) return rep;

  const auto facets = facet_map(fan);
  for (const auto& [facet, owners] : facets)
    if (owners.size() != 2) {
      rep.open_facet = facet;
      return rep;
    }

  std::vector<std::vector<std::size_t>> adj(cones.size());
  for (const auto& [facet, owners] : facets) {
    adj[owners[0].first].push_back(owners[1].first);
    adj[owners[1].first].push_back(owners[0].first);
  }
  std::vector<bool> seen(cones.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const auto c = stack.back();
    stack.pop_back();
    for (auto d : adj[c])
      if (!seen[d]) {
        seen[d] = true;
        ++reached;
        stack.push_back(d);
      }
  }
  if (reached != cones.size()) {
    rep.disconnected = true;
    return rep;
  }
  rep.complete = true;
  return rep;
}

bool is_complete(const Fan& fan) { return check_completeness(fan).complete; }

std::vector<Wall> walls(const Fan& fan) {
  std::vector<Wall> out;
  for (const auto& [facet, owners] : facet_map(fan)) {
    if (owners.size() != 2) continue;
    if (fan.max_cones()[owners[0].first].size() != fan.dim() ||
        fan.max_cones()[owners[1].first].size() != fan.dim())
      continue;
    Wall w;
    w.rays = facet;
    auto o = owners;
    std::sort(o.begin(), o.end());
    w.cones[0] = o[0].first;
    w.cones[1] = o[1].first;
    w.opposite[0] = o[0].second;
    w.opposite[1] = o[1].second;
    out.push_back(std::move(w));
  }
  return out;
}

Integer cone_multiplicity(const Fan& fan, const Cone& cone) {
  if (cone.empty()) return 1;
  const IntMatrix m = fan.cone_matrix(cone);
  if (cone.size() == fan.dim()) return abs(determinant(m));
  return smith_normal_form(m).product();
}

SmoothnessReport check_smoothness(const Fan& fan) {
  SmoothnessReport rep;
  for (const auto& c : fan.max_cones()) {
    rep.multiplicities.push_back(cone_multiplicity(fan, c));
    if (rep.multiplicities.back() != 1) rep.smooth = false;
  }
  return rep;
}

bool is_smooth(const Fan& fan) { return check_smoothness(fan).smooth; }

ProjectivityReport check_projectivity(const Fan& fan) {
  if (!is_complete(fan)) throw Error(ErrorCode::IncompleteFan, "projectivity requires a complete fan");
  const std::size_t n = fan.dim();
  const std::size_t nvars = n * fan.max_cones().size();
  lp::LPProblem p(nvars);

  // Row expressing m_a(v) - m_b(v).
  auto diff_row = [&](std::size_t a, std::size_t b, const IntVec& v) {
    RatVec row(nvars);
    for (std::size_t k = 0; k < n; ++k) {
      row[a * n + k] += v[k];
      row[b * n + k] -= v[k];
    }
    return row;
  };
  for (const auto& w : walls(fan)) {
    const auto a = w.cones[0], b = w.cones[1];
    for (auto u : w.rays) p.add_constraint(diff_row(a, b, fan.ray(u)), lp::Sense::Equal, 0);
    p.add_constraint(diff_row(a, b, fan.ray(w.opposite[1])), lp::Sense::GreaterEqual, 1);
    p.add_constraint(diff_row(b, a, fan.ray(w.opposite[0])), lp::Sense::GreaterEqual, 1);
  }

  ProjectivityReport rep;
  rep.certificate = lp::solve_feasibility(p);
  if (!lp::verify_certificate(p, rep.certificate))
    throw Error(ErrorCode::Internal, "projectivity certificate failed to re-verify");
  rep.projective = rep.certificate.feasible();
  if (rep.projective) {
    for (std::size_t c = 0; c < fan.max_cones().size(); ++c)
      rep.support_function.emplace_back(rep.certificate.point.begin() + static_cast<std::ptrdiff_t>(c * n),
                                        rep.certificate.point.begin() + static_cast<std::ptrdiff_t>((c + 1) * n));
    if (!verify_support_function(fan, rep.support_function))
      throw Error(ErrorCode::Internal, "support function failed direct substitution");
  }
  rep.problem = std::move(p);
  return rep;
}

bool verify_support_function(const Fan& fan, const std::vector<RatVec>& support_function) {
  if (support_function.size() != fan.max_cones().size()) return false;
  for (const auto& m : support_function)
    if (m.size() != fan.dim()) return false;
  for (const auto& w : walls(fan)) {
    const auto& ma = support_function[w.cones[0]];
    const auto& mb = support_function[w.cones[1]];
    for (auto u : w.rays)
      if (dot(ma, fan.ray(u)) != dot(mb, fan.ray(u))) return false;
    const IntVec& va = fan.ray(w.opposite[0]);
    const IntVec& vb = fan.ray(w.opposite[1]);
    if (dot(ma, vb) - dot(mb, vb) < 1) return false;
    if (dot(mb, va) - dot(ma, va) < 1) return false;
  }
  return true;
}

ClassGroup class_group(const Fan& fan) {
  if (!is_complete(fan)) throw Error(ErrorCode::IncompleteFan, "class group requires a complete fan");
  const auto snf = smith_normal_form(IntMatrix::from_rows(fan.rays()));
  return {snf.cokernel_free_rank(), snf.torsion()};
}

namespace {

std::vector<Cone> all_subsets_of_size(std::size_t n, std::size_t k) {
  std::vector<Cone> out;
  Cone cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

}  // namespace

Fan projective_space(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "projective space needs n >= 1");
  std::vector<IntVec> rays;
  for (std::size_t i = 0; i < n; ++i) {
    IntVec e(n, 0);
    e[i] = 1;
    rays.push_back(std::move(e));
  }
  rays.emplace_back(n, Integer(-1));
  return Fan(n, std::move(rays), all_subsets_of_size(n + 1, n));
}

Fan weighted_projective_space(const std::vector<Integer>& weights) {
  const std::size_t count = weights.size();
  if (count < 2) throw Error(ErrorCode::IllFormedWeights, "need at least two weights");
  for (const auto& q : weights)
    if (q <= 0) throw Error(ErrorCode::IllFormedWeights, "weights must be positive");
  for (std::size_t skip = 0; skip < count; ++skip) {
    Integer g = 0;
    for (std::size_t i = 0; i < count; ++i)
      if (i != skip) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), weights[i].get_mpz_t());
    if (g != 1)
      throw Error(ErrorCode::IllFormedWeights,
                  "weights without index " + std::to_string(skip) + " share the factor " + to_string(g));
  }

  // Unimodular V with q^T V = e_0^T, by integer column operations. The rays
  // are the rows of V with the first column dropped, so sum_i q_i v_i = 0 and
  // the rays generate Z^n.
  IntMatrix v = IntMatrix::identity(count);
  IntVec w = weights;
  for (;;) {
    std::size_t p = count;
    for (std::size_t j = 0; j < count; ++j)
      if (w[j] != 0 && (p == count || abs(w[j]) < abs(w[p]))) p = j;
    bool reduced = true;
    for (std::size_t j = 0; j < count; ++j) {
      if (j == p || w[j] == 0) continue;
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), w[j].get_mpz_t(), w[p].get_mpz_t());
      w[j] -= q * w[p];
      for (std::size_t r = 0; r < count; ++r) v(r, j) -= q * v(r, p);
      if (w[j] != 0) reduced = false;
    }
    if (reduced) {
      if (p != 0) {
        std::swap(w[0], w[p]);
        for (std::size_t r = 0; r < count; ++r) std::swap(v(r, 0), v(r, p));
      }
      break;
    }
  }
  if (w[0] != 1) throw Error(ErrorCode::Internal, "weight vector reduction did not reach 1");

  const std::size_t n = count - 1;
  std::vector<IntVec> rays;
  for (std::size_t i = 0; i < count; ++i) {
    IntVec r(n);
    for (std::size_t k = 0; k < n; ++k) r[k] = v(i, k + 1);
    rays.push_back(primitive(r));
  }
  return Fan(n, std::move(rays), all_subsets_of_size(count, n));
}

Fan hirzebruch(long r) {
  std::vector<IntVec> rays{{1, 0}, {0, 1}, {0, -1}, {-1, Integer(r)}};
  return Fan(2, std::move(rays), {{0, 1}, {1, 3}, {2, 3}, {0, 2}});
}

Fan product(const Fan& a, const Fan& b) {
  const std::size_t n = a.dim() + b.dim();
  std::vector<IntVec> rays;
  for (const auto& r : a.rays()) {
    IntVec v(r);
    v.resize(n, 0);
    rays.push_back(std::move(v));
  }
  for (const auto& r : b.rays()) {
    IntVec v(a.dim(), 0);
    v.insert(v.end(), r.begin(), r.end());
    rays.push_back(std::move(v));
  }
  std::vector<Cone> cones;
  for (const auto& ca : a.max_cones())
    for (const auto& cb : b.max_cones()) {
      Cone c(ca);
      for (auto i : cb) c.push_back(i + a.num_rays());
      cones.push_back(std::move(c));
    }
  return Fan(n, std::move(rays), std::move(cones));
}

std::optional<Cone> carrier_cone(const Fan& fan, const IntVec& x) {
  if (x.size() != fan.dim()) throw Error(ErrorCode::DimensionMismatch, "point has the wrong dimension");
  for (const auto& c : fan.max_cones()) {
    std::vector<IntVec> cols;
    for (auto r : c) cols.push_back(fan.ray(r));
    const auto coords = solve_in_span(cols, x);
    if (!coords) continue;
    if (std::any_of(coords->begin(), coords->end(), [](const Rat& t) { return t < 0; })) continue;
    Cone carrier;
    for (std::size_t k = 0; k < c.size(); ++k)
      if ((*coords)[k] > 0) carrier.push_back(c[k]);
    return carrier;
  }
  return std::nullopt;
}

Fan star_subdivision(const Fan& fan, const IntVec& v) {
  if (v.size() != fan.dim()) throw Error(ErrorCode::DimensionMismatch, "subdivision point has the wrong dimension");
  if (is_zero(v)) throw Error(ErrorCode::InvalidArgument, "cannot subdivide at the origin");
  if (!is_primitive(v)) throw Error(ErrorCode::InvalidArgument, "subdivision point must be primitive");
  const auto carrier = carrier_cone(fan, v);
  if (!carrier) throw Error(ErrorCode::RayOutsideSupport, "point lies outside the support of the fan");
  if (carrier->size() == 1) throw Error(ErrorCode::InvalidArgument, "point is already a ray of the fan");

  std::vector<IntVec> rays = fan.rays();
  const std::size_t added = rays.size();
  rays.push_back(v);
  std::vector<Cone> cones;
  for (const auto& c : fan.max_cones()) {
    if (!std::includes(c.begin(), c.end(), carrier->begin(), carrier->end())) {
      cones.push_back(c);
      continue;
    }
    for (auto drop : *carrier) {
      Cone nc;
      for (auto r : c)
        if (r != drop) nc.push_back(r);
      nc.push_back(added);
      cones.push_back(std::move(nc));
    }
  }
  return Fan(fan.dim(), std::move(rays), std::move(cones));
}

bool lattice_isomorphic(const Fan& a, const Fan& b) {
  if (a.dim() != b.dim() || a.num_rays() != b.num_rays() || a.max_cones().size() != b.max_cones().size())
    return false;
  const std::size_t n = a.dim();
  const std::size_t k = a.num_rays();

  // A basis of Q^n among the rays of a.
  std::vector<std::size_t> basis;
  for (std::size_t i = 0; i < k && basis.size() < n; ++i) {
    auto trial = basis;
    trial.push_back(i);
    if (rank(IntMatrix::from_rows(a.rays()).select_rows(trial)) == trial.size()) basis = std::move(trial);
  }
  if (basis.size() != n) throw Error(ErrorCode::InvalidArgument, "lattice isomorphism needs rays spanning Q^n");

  std::vector<IntVec> basis_cols;
  for (auto i : basis) basis_cols.push_back(a.ray(i));
  std::vector<RatVec> coords(k);  // every ray of a in the basis
  for (std::size_t i = 0; i < k; ++i) coords[i] = *solve_in_span(basis_cols, a.ray(i));
  std::vector<RatVec> unit_coords(n);  // e_j in the basis
  for (std::size_t j = 0; j < n; ++j) {
    IntVec e(n, 0);
    e[j] = 1;
    unit_coords[j] = *solve_in_span(basis_cols, e);
  }

  std::set<Cone> cones_b(b.max_cones().begin(), b.max_cones().end());
  std::vector<std::size_t> deg_a(k, 0), deg_b(k, 0);
  for (const auto& c : a.max_cones())
    for (auto r : c) ++deg_a[r];
  for (const auto& c : b.max_cones())
    for (auto r : c) ++deg_b[r];

  std::vector<std::size_t> image(k, k);
  std::vector<bool> taken(k, false);

  auto cones_consistent = [&](std::size_t upto) {
    for (const auto& c : a.max_cones()) {
      if (c.back() > upto) continue;
      Cone mapped;
      for (auto r : c) mapped.push_back(image[r]);
      std::sort(mapped.begin(), mapped.end());
      if (!cones_b.contains(mapped)) return false;
    }
    return true;
  };

  auto linear_ok = [&]() {
    // The map sends basis ray i to b.ray(image[i]); check it on all rays and
    // that its matrix is integral and unimodular.
    auto apply = [&](const RatVec& c) {
      RatVec out(n);
      for (std::size_t t = 0; t < n; ++t)
        for (std::size_t s = 0; s < n; ++s) out[s] += c[t] * b.ray(image[basis[t]])[s];
      return out;
    };
    for (std::size_t i = 0; i < k; ++i) {
      const RatVec img = apply(coords[i]);
      for (std::size_t s = 0; s < n; ++s)
        if (img[s] != b.ray(image[i])[s]) return false;
    }
    IntMatrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
      const RatVec col = apply(unit_coords[j]);
      for (std::size_t s = 0; s < n; ++s) {
        if (!is_integral(col[s])) return false;
        m(s, j) = col[s].get_num();
      }
    }
    return abs(determinant(m)) == 1;
  };

  std::function<bool(std::size_t)> assign = [&](std::size_t i) -> bool {
    if (i == k) return linear_ok();
    for (std::size_t j = 0; j < k; ++j) {
      if (taken[j] || deg_a[i] != deg_b[j]) continue;
      image[i] = j;
      taken[j] = true;
      if (cones_consistent(i) && assign(i + 1)) return true;
      taken[j] = false;
    }
    image[i] = k;
    return false;
  };
  return assign(0);
}

}  // namespace toric
