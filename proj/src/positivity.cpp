#include "toric/positivity.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "toric/error.hpp"

namespace toric {

namespace {

// All k-subsets of {0..m-1}, colexicographic order.
std::vector<Cone> subsets_colex(std::size_t m, std::size_t k) {
  std::vector<Cone> out;
  if (k > m) return out;
  Cone cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  if (k == 0) return {Cone{}};
  for (;;) {
    out.push_back(cur);
    // Next in colex: bump the lowest position that can move.
    std::size_t i = 0;
    while (i < k && cur[i] + 1 == (i + 1 < k ? cur[i + 1] : m)) ++i;
    if (i == k) break;
    ++cur[i];
    for (std::size_t j = 0; j < i; ++j) cur[j] = j;
  }
  return out;
}

void require_complete(const Fan& fan, const char* what) {
  if (!is_complete(fan)) throw Error(ErrorCode::IncompleteFan, std::string(what) + " requires a complete fan");
}

// Positive circuit on `subset`, if it is one.
std::optional<PositiveRelation> positive_circuit_on(const Fan& fan, const Cone& subset) {
  const std::size_t n = fan.dim();
  if (subset.size() == 2) {
    const auto& a = fan.ray(subset[0]);
    const auto& b = fan.ray(subset[1]);
    for (std::size_t i = 0; i < n; ++i)
      if (a[i] != -b[i]) return std::nullopt;
    return PositiveRelation{subset, {Rat(1), Rat(1)}};
  }
  IntMatrix m(n, subset.size());
  for (std::size_t c = 0; c < subset.size(); ++c)
    for (std::size_t r = 0; r < n; ++r) m(r, c) = fan.ray(subset[c])[r];
  const auto kernel = kernel_basis(m);
  if (kernel.size() != 1) return std::nullopt;
  RatVec w = kernel.front();
  const int s = sgn(w.front());
  if (s == 0) return std::nullopt;
  for (const auto& x : w)
    if (sgn(x) != s) return std::nullopt;
  Rat smallest = abs(w.front());
  for (const auto& x : w) smallest = std::min(smallest, Rat(abs(x)));
  for (auto& x : w) x = abs(x) / smallest;
  return PositiveRelation{subset, std::move(w)};
}

}  // namespace

bool verify_relation(const Fan& fan, const PositiveRelation& rel) {
  if (rel.indices.empty() || rel.indices.size() != rel.coefficients.size()) return false;
  for (std::size_t i = 0; i < rel.indices.size(); ++i) {
    if (rel.indices[i] >= fan.num_rays()) return false;
    if (i > 0 && rel.indices[i] <= rel.indices[i - 1]) return false;
    if (rel.coefficients[i] <= 0) return false;
  }
  for (std::size_t r = 0; r < fan.dim(); ++r) {
    Rat s = 0;
    for (std::size_t i = 0; i < rel.indices.size(); ++i) s += rel.coefficients[i] * fan.ray(rel.indices[i])[r];
    if (s != 0) return false;
  }
  return true;
}

bool spans_cone(const Fan& fan, const Cone& rays) {
  for (auto r : rays)
    if (r >= fan.num_rays()) throw Error(ErrorCode::IndexOutOfRange, "ray index " + std::to_string(r) + " out of range");
  Cone s(rays);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return std::any_of(fan.max_cones().begin(), fan.max_cones().end(),
                     [&](const Cone& c) { return std::includes(c.begin(), c.end(), s.begin(), s.end()); });
}

std::vector<PositiveRelation> positive_circuits(const Fan& fan, std::size_t max_support) {
  std::vector<PositiveRelation> out;
  const std::size_t top = std::min(max_support, fan.num_rays());
  for (std::size_t k = 2; k <= top; ++k)
    for (const auto& s : subsets_colex(fan.num_rays(), k))
      if (auto rel = positive_circuit_on(fan, s)) out.push_back(std::move(*rel));
  return out;
}

DaggerReport check_dagger(const Fan& fan) {
  require_complete(fan, "condition (dagger)");
  const std::size_t top = std::min(fan.dim(), fan.num_rays());
  for (std::size_t k = 2; k <= top; ++k)
    for (const auto& s : subsets_colex(fan.num_rays(), k))
      if (auto rel = positive_circuit_on(fan, s)) return {false, std::move(rel)};
  return {true, std::nullopt};
}

DaggerReport check_dagger_by_lp(const Fan& fan) {
  require_complete(fan, "condition (dagger)");
  const std::size_t n = fan.dim();
  const std::size_t top = std::min(n, fan.num_rays());
  for (std::size_t k = 2; k <= top; ++k) {
    for (const auto& s : subsets_colex(fan.num_rays(), k)) {
      lp::LPProblem p(k);
      for (std::size_t i = 0; i < k; ++i) p.set_lower_bound(i, 1);
      for (std::size_t r = 0; r < n; ++r) {
        RatVec row(k);
        for (std::size_t i = 0; i < k; ++i) row[i] = fan.ray(s[i])[r];
        p.add_constraint(std::move(row), lp::Sense::Equal, 0);
      }
      auto cert = lp::solve_feasibility(p);
      if (!lp::verify_certificate(p, cert)) throw Error(ErrorCode::Internal, "dagger LP certificate failed to re-verify");
      if (!cert.feasible()) continue;
      Rat smallest = *std::min_element(cert.point.begin(), cert.point.end());
      for (auto& a : cert.point) a /= smallest;
      return {false, PositiveRelation{s, std::move(cert.point)}};
    }
  }
  return {true, std::nullopt};
}

std::vector<Cone> primitive_collections(const Fan& fan) {
  std::set<Cone> faces;
  for (const auto& c : fan.max_cones()) {
    const std::size_t k = c.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
      Cone f;
      for (std::size_t i = 0; i < k; ++i)
        if (mask & (std::size_t{1} << i)) f.push_back(c[i]);
      faces.insert(std::move(f));
    }
  }
  if (faces.empty()) faces.insert(Cone{});

  std::vector<Cone> out;
  for (std::size_t r = 0; r < fan.num_rays(); ++r)
    if (!faces.contains(Cone{r})) out.push_back(Cone{r});
  // Each candidate B = F + {r} with F a face and r > max F is generated once.
  for (const auto& f : faces) {
    if (f.empty()) continue;
    for (std::size_t r = f.back() + 1; r < fan.num_rays(); ++r) {
      Cone b(f);
      b.push_back(r);
      if (faces.contains(b)) continue;
      bool minimal = true;
      for (std::size_t drop = 0; drop < b.size() && minimal; ++drop) {
        Cone sub;
        for (std::size_t i = 0; i < b.size(); ++i)
          if (i != drop) sub.push_back(b[i]);
        minimal = faces.contains(sub);
      }
      if (minimal) out.push_back(std::move(b));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Cone> find_zero_sum_primitive_collection(const Fan& fan) {
  // Same tie-break as the dagger witness: smallest first, then colex.
  auto order = primitive_collections(fan);
  std::stable_sort(order.begin(), order.end(), [](const Cone& a, const Cone& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
  for (const auto& b : order) {
    IntVec sum(fan.dim(), 0);
    for (auto r : b)
      for (std::size_t i = 0; i < fan.dim(); ++i) sum[i] += fan.ray(r)[i];
    if (is_zero(sum)) return b;
  }
  return std::nullopt;
}

bool is_projective_space_fan(const Fan& fan) {
  const std::size_t n = fan.dim();
  if (fan.num_rays() != n + 1 || fan.max_cones().size() != n + 1) return false;
  std::set<Cone> distinct;
  for (const auto& c : fan.max_cones()) {
    if (c.size() != n) return false;
    distinct.insert(c);
  }
  return distinct.size() == n + 1 && is_complete(fan) && is_smooth(fan);
}

std::string_view to_string(TangentSign sign) noexcept {
  return sign == TangentSign::Positive ? "positive" : "zero";
}

TangentSign tangent_seshadri_sign_at_identity(const Fan& fan) {
  return check_dagger(fan).holds ? TangentSign::Positive : TangentSign::Zero;
}

std::string_view to_string(Theorem1Report::Status status) noexcept {
  switch (status) {
    case Theorem1Report::Status::Pass: return "pass";
    case Theorem1Report::Status::Fail: return "fail";
    case Theorem1Report::Status::NotApplicable: return "not_applicable";
  }
  return "unknown";
}

Theorem1Report verify_theorem1(const Fan& fan) {
  Theorem1Report rep;
  if (!is_complete(fan)) {
    rep.reason = "fan is not complete";
    return rep;
  }
  if (!is_smooth(fan)) {
    rep.reason = "fan is not smooth";
    return rep;
  }
  if (!check_projectivity(fan).projective) {
    rep.reason = "fan is not projective";
    return rep;
  }

  const auto dagger = check_dagger(fan);
  const auto sign = dagger.holds ? TangentSign::Positive : TangentSign::Zero;
  rep.sign = sign;
  rep.projective_space = is_projective_space_fan(fan);
  rep.zero_sum_collection = find_zero_sum_primitive_collection(fan);

  auto add = [&](std::string name, bool ok, std::string detail) {
    rep.checks.push_back({std::move(name), ok, std::move(detail)});
  };
  add("sign_positive_iff_projective_space", (sign == TangentSign::Positive) == rep.projective_space,
      std::string("sign ") + std::string(to_string(sign)) +
          (rep.projective_space ? ", projective space" : ", not projective space"));
  add("dagger_witness_verifies", dagger.holds || (dagger.witness && verify_relation(fan, *dagger.witness) &&
                                                  dagger.witness->indices.size() <= fan.dim()),
      dagger.holds ? "no witness needed" : "witness re-checked");
  const auto lp_dagger = check_dagger_by_lp(fan);
  add("dagger_lp_oracle_agrees", lp_dagger.holds == dagger.holds, "");
  if (rep.zero_sum_collection) {
    const auto k = rep.zero_sum_collection->size();
    add("zero_sum_primitive_collection_exists", true, std::to_string(k) + " rays");
    // A zero-sum collection of size <= n breaks (dagger); size n+1 forces P^n.
    add("zero_sum_collection_size_consistent",
        (k <= fan.dim()) ? sign == TangentSign::Zero : rep.projective_space,
        "size " + std::to_string(k) + ", n = " + std::to_string(fan.dim()));
  } else {
    add("zero_sum_primitive_collection_exists", false, "none found");
  }
  const bool all_ok = std::all_of(rep.checks.begin(), rep.checks.end(), [](const auto& c) { return c.ok; });
  rep.status = all_ok ? Theorem1Report::Status::Pass : Theorem1Report::Status::Fail;
  return rep;
}

}  // namespace toric
