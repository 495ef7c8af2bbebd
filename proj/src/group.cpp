#include "hilbert/group.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <map>
#include <queue>

namespace hilbert {

namespace {

// g v_i = c_i v_{sigma(i)} with one global sign: the image cone equals the
// original (or its negative), so the projective domain is preserved. Mixed
// signs land on a different cone sheet and fail.
std::optional<std::vector<int>> cone_permutation(const std::vector<PointQ>& verts,
                                                 const ProjMapQ& g) {
  const int n = static_cast<int>(verts.size());
  std::vector<int> perm(n, -1);
  std::vector<bool> used(n, false);
  int global_sign = 0;
  for (int i = 0; i < n; ++i) {
    PointQ gv = apply(g, verts[i]);
    int match = -1;
    for (int j = 0; j < n; ++j) {
      if (used[j]) continue;
      if (same_point(gv, verts[j])) {
        match = j;
        break;
      }
    }
    if (match < 0) return std::nullopt;
    // Sign of the scale c_i: compare any nonzero coordinate.
    int k = 0;
    while (verts[match].coords[static_cast<size_t>(k)] == 0) ++k;
    int s = sgn(gv.coords[static_cast<size_t>(k)]) * sgn(verts[match].coords[static_cast<size_t>(k)]);
    if (global_sign == 0) global_sign = s;
    if (s != global_sign) return std::nullopt;
    perm[i] = match;
    used[match] = true;
  }
  return perm;
}

PointQ automorphism_witness(const ConvexDomain& dom, const ProjMapQ& g) {
  Rng rng(0x517, 0);
  ProjMapQ ginv = inverse_map(g);
  for (int s = 0; s < 4096; ++s) {
    PointQ x = dom.sample_interior(rng);
    if (!dom.contains(apply(g, x)) || !dom.contains(apply(ginv, x))) return x;
  }
  fail(Errc::NotAnAutomorphism, "no witness found (map may preserve the domain after all)");
}

}  // namespace

GroupElement certify_preserves(const ConvexDomain& dom, const ProjMapQ& g) {
  GroupElement out;
  out.map = g;
  out.certificate = GroupElement::Certificate::Exact;
  if (dom.is_polytope()) {
    auto perm = cone_permutation(dom.vertices(), g);
    if (!perm) {
      PointQ w = automorphism_witness(dom, g);
      std::string coords;
      for (const Rat& c : w.coords) coords += (coords.empty() ? "" : ",") + rat_to_string(c);
      fail(Errc::NotAnAutomorphism,
           "map does not permute the vertex cone; witness point (" + coords + ") escapes");
    }
    out.vertex_permutation = *perm;
    return out;
  }
  // Ellipsoid: g^T Q g must be a positive multiple of Q.
  MatQ m = g.matrix.transposed() * dom.form() * g.matrix;
  const MatQ& q = dom.form();
  Rat lambda(0);
  for (int i = 0; i < q.rows && lambda == 0; ++i)
    for (int j = 0; j < q.cols && lambda == 0; ++j)
      if (q.at(i, j) != 0) lambda = m.at(i, j) / q.at(i, j);
  bool ok = lambda > 0;
  for (int i = 0; i < q.rows && ok; ++i)
    for (int j = 0; j < q.cols && ok; ++j)
      if (m.at(i, j) != lambda * q.at(i, j)) ok = false;
  if (!ok) fail(Errc::NotAnAutomorphism, "map does not preserve the quadratic form");
  return out;
}

GroupElement certify_preserves_sampled(const ConvexDomain& dom, const ProjMapQ& g, int samples,
                                       uint64_t seed) {
  Rng rng(seed, 0xcafe);
  ProjMapQ ginv = inverse_map(g);
  for (int s = 0; s < samples; ++s) {
    PointQ x = dom.sample_interior(rng);
    if (!dom.contains(apply(g, x)))
      fail(Errc::NotAnAutomorphism, "sampled witness: g maps an interior point outside");
    if (!dom.contains(apply(ginv, x)))
      fail(Errc::NotAnAutomorphism, "sampled witness: g^{-1} maps an interior point outside");
  }
  GroupElement out;
  out.map = g;
  out.certificate = GroupElement::Certificate::Sampled;
  out.samples = samples;
  out.seed = seed;
  return out;
}

IsometryReport isometry_check(const ConvexDomain& dom, const ProjMapQ& g, int samples,
                              uint64_t seed, double tol) {
  IsometryReport rep;
  rep.samples = samples;
  rep.seed = seed;
  rep.tol = tol;
  Rng rng(seed, 0x150);
  for (int s = 0; s < samples; ++s) {
    PointQ x = dom.sample_interior(rng);
    PointQ y = dom.sample_interior(rng);
    if (same_point(x, y)) continue;
    PointQ gx = apply(g, x), gy = apply(g, y);
    if (!dom.contains(gx) || !dom.contains(gy)) {
      rep.max_deviation = std::numeric_limits<double>::infinity();
      break;
    }
    double dev = std::abs(dom.hilbert_distance(gx, gy) - dom.hilbert_distance(x, y));
    rep.max_deviation = std::max(rep.max_deviation, dev);
  }
  rep.pass = rep.max_deviation <= tol;
  return rep;
}

bool stabilizes_flat(const GroupElement& g, const Flat& flat) {
  return cone_permutation(flat.vertices, g.map).has_value();
}

namespace {

double descent_objective(const MatD& conj, const VecD& logs) {
  // d(x, gx) on the simplex in vertex-basis coordinates.
  VecD x = logs.array().exp();
  VecD gx = conj * x;
  if (gx[0] < 0) gx = -gx;
  for (Eigen::Index i = 0; i < gx.size(); ++i)
    if (!(gx[i] > 0)) return std::numeric_limits<double>::infinity();
  double lo = 0, hi = 0;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    double r = std::log(x[i] / gx[i]);
    if (i == 0)
      lo = hi = r;
    else {
      lo = std::min(lo, r);
      hi = std::max(hi, r);
    }
  }
  return 0.5 * (hi - lo);
}

}  // namespace

TranslationLength translation_length(const ConvexDomain& dom, const GroupElement& g, int starts,
                                     long budget, uint64_t seed, bool use_closed_form) {
  if (!dom.is_polytope() || static_cast<int>(dom.vertices().size()) != dom.dim() + 1)
    fail(Errc::InvalidDomain, "translation length is computed on simplex domains");
  const int n = dom.dim() + 1;

  TranslationLength out;
  // Diagonal in the vertex basis: displacement is constant and the infimum
  // is (1/2)(max - min) of the log eigenvalue ratios.
  if (use_closed_form) {
    bool diagonal = true;
    std::vector<Rat> ratios;
    for (int i = 0; i < n && diagonal; ++i) {
      PointQ gv = apply(g.map, dom.vertices()[static_cast<size_t>(i)]);
      if (!same_point(gv, dom.vertices()[static_cast<size_t>(i)])) {
        diagonal = false;
        break;
      }
      int k = 0;
      while (dom.vertices()[static_cast<size_t>(i)].coords[static_cast<size_t>(k)] == 0) ++k;
      ratios.push_back(gv.coords[static_cast<size_t>(k)] /
                       dom.vertices()[static_cast<size_t>(i)].coords[static_cast<size_t>(k)]);
    }
    if (diagonal) {
      double lo = 0, hi = 0;
      for (int i = 0; i < n; ++i) {
        double a = std::log(std::abs(to_double(ratios[static_cast<size_t>(i)])));
        if (i == 0)
          lo = hi = a;
        else {
          lo = std::min(lo, a);
          hi = std::max(hi, a);
        }
      }
      out.value = 0.5 * (hi - lo);
      out.closed_form = true;
      out.evaluations = 0;
      return out;
    }
  }

  // Conjugate into the vertex basis once; the objective then works on
  // positive coordinate vectors directly.
  MatQ vmat(n, n);
  for (int c = 0; c < n; ++c) {
    VecQ rep = vec_scale(1 / incidence(dom.vertices()[static_cast<size_t>(c)], dom.chart()),
                         dom.vertices()[static_cast<size_t>(c)].coords);
    for (int r = 0; r < n; ++r) vmat.at(r, c) = rep[static_cast<size_t>(r)];
  }
  auto vinv = inverse(vmat);
  assert(vinv);
  MatD conj = to_double(*vinv * g.map.matrix * vmat);

  Rng rng(seed, 0x7311);
  double best = std::numeric_limits<double>::infinity();
  long evals = 0;
  for (int s = 0; s < starts && evals < budget; ++s) {
    VecD u = VecD::Zero(n);
    if (s > 0)
      for (int i = 0; i < n; ++i) u[i] = rng.next_double(-3.0, 3.0);
    double cur = descent_objective(conj, u);
    ++evals;
    double step = 0.5;
    while (step > 1e-9 && evals < budget) {
      bool improved = false;
      for (int k = 0; k < n && evals < budget; ++k) {
        for (double dir : {+1.0, -1.0}) {
          VecD trial = u;
          trial[k] += dir * step;
          double val = descent_objective(conj, trial);
          ++evals;
          if (val < cur) {
            cur = val;
            u = trial;
            improved = true;
          }
        }
      }
      if (!improved) step *= 0.5;
    }
    best = std::min(best, cur);
    if (step > 1e-9 && evals >= budget) out.budget_exhausted = true;
  }
  out.value = best;
  out.evaluations = evals;
  return out;
}

GeneratorSet GeneratorSet::close_under_inverses(std::vector<GroupElement> gens,
                                                std::vector<std::string> labels) {
  assert(gens.size() == labels.size());
  GeneratorSet out;
  out.elements = std::move(gens);
  out.labels = std::move(labels);
  auto same_map = [](const ProjMapQ& a, const ProjMapQ& b) {
    return primitive_integer_scale(a.matrix.a, true) == primitive_integer_scale(b.matrix.a, true);
  };
  const size_t n = out.elements.size();
  for (size_t i = 0; i < n; ++i) {
    ProjMapQ inv = inverse_map(out.elements[i].map);
    bool found = false;
    for (const GroupElement& e : out.elements)
      if (same_map(e.map, inv)) {
        found = true;
        break;
      }
    if (!found) {
      GroupElement e = out.elements[i];
      e.map = inv;
      out.elements.push_back(std::move(e));
      out.labels.push_back(out.labels[i] + "'");
    }
  }
  return out;
}

namespace {

struct VecQLess {
  bool operator()(const VecQ& a, const VecQ& b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }
};

}  // namespace

std::vector<OrbitPoint> orbit(const GeneratorSet& gens, const PointQ& x, int max_word_length) {
  std::map<VecQ, std::string, VecQLess> seen;
  std::vector<OrbitPoint> out;
  std::vector<PointQ> frontier;

  PointQ x0 = normalized(x);
  seen.emplace(x0.coords, "");
  out.push_back({x0, ""});
  frontier.push_back(x0);

  for (int len = 1; len <= max_word_length; ++len) {
    std::vector<PointQ> next;
    for (const PointQ& p : frontier) {
      const std::string& word = seen.at(normalized(p).coords);
      for (size_t gi = 0; gi < gens.elements.size(); ++gi) {
        PointQ q = normalized(apply(gens.elements[gi].map, p));
        if (seen.count(q.coords)) continue;
        std::string w = word.empty() ? gens.labels[gi] : word + "." + gens.labels[gi];
        seen.emplace(q.coords, w);
        out.push_back({q, w});
        next.push_back(q);
      }
    }
    frontier = std::move(next);
  }
  return out;
}

PreciseInvarianceReport precise_invariance_check(
    const std::function<bool(const PointQ&)>& member,
    const std::function<PointQ(Rng&)>& region_sampler, const GeneratorSet& gens,
    int max_word_length, int samples_per_word, uint64_t seed) {
  PreciseInvarianceReport rep;
  rep.seed = seed;

  // Enumerate distinct words (as projective maps) up to the length bound.
  std::map<VecQ, std::string, VecQLess> seen;
  struct Node {
    ProjMapQ map;
    std::string word;
  };
  std::vector<Node> frontier, all;
  assert(!gens.elements.empty());
  ProjMapQ id(MatQ::identity(gens.elements[0].map.matrix.rows));
  seen.emplace(primitive_integer_scale(id.matrix.a, true), "");
  frontier.push_back({id, ""});
  for (int len = 1; len <= max_word_length; ++len) {
    std::vector<Node> next;
    for (const Node& node : frontier)
      for (size_t gi = 0; gi < gens.elements.size(); ++gi) {
        ProjMapQ m = compose(gens.elements[gi].map, node.map);
        VecQ key = primitive_integer_scale(m.matrix.a, true);
        if (seen.count(key)) continue;
        std::string w = node.word.empty() ? gens.labels[gi] : node.word + "." + gens.labels[gi];
        seen.emplace(key, w);
        next.push_back({m, w});
        all.push_back({m, w});
      }
    frontier = std::move(next);
  }

  Rng rng(seed, 0x9121);
  for (const Node& node : all) {
    PreciseInvarianceReport::WordStatus st;
    st.word = node.word;
    st.total = samples_per_word;
    for (int s = 0; s < samples_per_word; ++s) {
      PointQ x = region_sampler(rng);
      if (member(apply(node.map, x))) ++st.inside;
    }
    if (st.inside == st.total)
      st.verdict = PreciseInvarianceReport::WordStatus::Verdict::Preserved;
    else if (st.inside == 0)
      st.verdict = PreciseInvarianceReport::WordStatus::Verdict::MovedOff;
    else {
      st.verdict = PreciseInvarianceReport::WordStatus::Verdict::Violation;
      if (!rep.violation_found) {
        rep.violation_found = true;
        rep.witness_word = node.word;
      }
    }
    rep.words.push_back(std::move(st));
  }
  return rep;
}

}  // namespace hilbert
