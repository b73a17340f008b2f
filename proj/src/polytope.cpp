#include "cyw/polytope.hpp"

#include <algorithm>
#include <numeric>

#include <boost/dynamic_bitset.hpp>

#include "cyw/interior_point.hpp"
#include "cyw/kernels.hpp"

namespace cyw {

IntVector AffineLatticeChart::to_chart(std::span<const int64_t> ambient) const {
  IntVector u;
  u.reserve(left_inverse.size());
  for (const auto& row : left_inverse) {
    Integer s(0);
    for (std::size_t i = 0; i < row.size(); ++i) s += row[i] * Integer(ambient[i] - 1);
    u.push_back(std::move(s));
  }
  return u;
}

IntVector AffineLatticeChart::to_ambient(const IntVector& u) const {
  const std::size_t l = ws.size();
  IntVector p(l, Integer(1));
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < l; ++i) p[i] += u[j] * basis[j][i];
  return p;
}

AffineLatticeChart chart(const WeightSystem& ws) {
  IntVector w = ws.weights();
  KernelLattice k = kernel_lattice(w);
  return AffineLatticeChart{ws, std::move(k.basis), std::move(k.left_inverse)};
}

namespace {

using Bits = boost::dynamic_bitset<uint64_t>;

IntVector make_primitive(IntVector v, Integer* offset) {
  Integer g(0);
  for (const auto& x : v) g = Integer::gcd(g, x);
  if (g.is_zero() || g.is_one()) return v;
  for (auto& x : v) x = Integer::divexact(x, g);
  if (offset) *offset = Integer::divexact(*offset, g);
  return v;
}

Integer dot_int(const IntVector& a, const IntVector& b) {
  Integer s(0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  return s;
}

// Integer vector spanning the null space of rows (assumed one-dimensional).
IntVector null_vector(const std::vector<IntVector>& rows, std::size_t m) {
  if (rows.empty()) {
    IntVector v(m, Integer(0));
    v[0] = Integer(1);
    return v;
  }
  RatMatrix mat;
  for (const auto& r : rows) {
    std::vector<Rational> row;
    for (const auto& x : r) row.emplace_back(x);
    mat.push_back(std::move(row));
  }
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m && row < mat.size(); ++col) {
    std::size_t sel = row;
    while (sel < mat.size() && mat[sel][col].is_zero()) ++sel;
    if (sel == mat.size()) continue;
    std::swap(mat[row], mat[sel]);
    const Rational inv = Rational(1) / mat[row][col];
    for (auto& x : mat[row]) x *= inv;
    for (std::size_t r = 0; r < mat.size(); ++r) {
      if (r == row || mat[r][col].is_zero()) continue;
      const Rational f = mat[r][col];
      for (std::size_t c = col; c < m; ++c) mat[r][c] -= f * mat[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  std::vector<bool> is_pivot(m, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::size_t free_col = 0;
  while (free_col < m && is_pivot[free_col]) ++free_col;
  RatForm sol(m, Rational(0));
  sol[free_col] = Rational(1);
  for (std::size_t r = 0; r < pivots.size(); ++r) sol[pivots[r]] = -mat[r][free_col];
  Integer den(1);
  for (const auto& x : sol) den = Integer::lcm(den, x.den());
  IntVector v;
  for (const auto& x : sol) v.push_back(Integer::divexact(den, x.den()) * x.num());
  return make_primitive(std::move(v), nullptr);
}

IntVector diff(const IntVector& a, const IntVector& b) {
  IntVector d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
  return d;
}

// True when the points selected by `bits` affinely span at least `target`
// dimensions.
bool affine_dim_at_least(const std::vector<IntVector>& pts, const Bits& bits, std::size_t target) {
  if (target == 0) return bits.any();
  auto first = bits.find_first();
  if (first == Bits::npos) return false;
  IncrementalRank e(pts[first].size());
  for (auto k = bits.find_next(first); k != Bits::npos; k = bits.find_next(k)) {
    if (e.add(diff(pts[k], pts[first])) && e.rank() >= target) return true;
  }
  return false;
}

struct Ray {
  IntVector normal;
  Integer offset;
  Bits tight;
};

}  // namespace

std::vector<Facet> convex_hull_facets(std::span<const IntVector> points) {
  const std::size_t n = points.size();
  if (n == 0) throw DimensionDeficient("convex hull of no points");
  const std::size_t m = points.front().size();
  std::vector<IntVector> pts(points.begin(), points.end());

  // Far points first: they are the likely vertices, which keeps the
  // intermediate hulls close to the final one.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<Integer> norm2(n);
  for (std::size_t k = 0; k < n; ++k) norm2[k] = dot_int(pts[k], pts[k]);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return norm2[a] > norm2[b]; });

  // Initial simplex.
  std::vector<std::size_t> simplex{order[0]};
  {
    IncrementalRank e(m);
    for (std::size_t idx = 1; idx < n && simplex.size() < m + 1; ++idx) {
      if (e.add(diff(pts[order[idx]], pts[order[0]]))) simplex.push_back(order[idx]);
    }
  }
  if (simplex.size() < m + 1) throw DimensionDeficient("points are not full-dimensional");

  std::vector<Ray> rays;
  for (std::size_t j = 0; j < simplex.size(); ++j) {
    std::vector<IntVector> rows;
    std::size_t base = simplex[j == 0 ? 1 : 0];
    for (std::size_t i = 0; i < simplex.size(); ++i)
      if (i != j && simplex[i] != base) rows.push_back(diff(pts[simplex[i]], pts[base]));
    Ray r;
    r.normal = null_vector(rows, m);
    r.offset = dot_int(r.normal, pts[base]);
    if (dot_int(r.normal, pts[simplex[j]]) > r.offset) {
      for (auto& x : r.normal) x = -x;
      r.offset = -r.offset;
    }
    r.tight = Bits(n);
    for (std::size_t i = 0; i < simplex.size(); ++i)
      if (i != j) r.tight.set(simplex[i]);
    rays.push_back(std::move(r));
  }

  std::vector<bool> in_simplex(n, false);
  for (auto s : simplex) in_simplex[s] = true;
  std::vector<Integer> value;
  for (std::size_t idx = 0; idx < n; ++idx) {
    const std::size_t p = order[idx];
    if (in_simplex[p]) continue;
    value.assign(rays.size(), Integer(0));
    bool beyond = false;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      value[r] = dot_int(rays[r].normal, pts[p]) - rays[r].offset;
      beyond = beyond || value[r].sign() > 0;
    }
    if (!beyond) {
      for (std::size_t r = 0; r < rays.size(); ++r)
        if (value[r].is_zero()) rays[r].tight.set(p);
      continue;
    }
    std::vector<Ray> next;
    std::vector<std::size_t> plus, minus;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      const int s = value[r].sign();
      if (s > 0) plus.push_back(r);
      else if (s < 0) minus.push_back(r);
    }
    for (std::size_t pi : plus) {
      for (std::size_t mi : minus) {
        Bits common = rays[pi].tight & rays[mi].tight;
        if (common.count() + 1 < m) continue;
        if (!affine_dim_at_least(pts, common, m - 2)) continue;
        const Integer& vp = value[pi];
        const Integer vm = -value[mi];
        Ray r;
        r.normal.resize(m);
        for (std::size_t i = 0; i < m; ++i)
          r.normal[i] = vp * rays[mi].normal[i] + vm * rays[pi].normal[i];
        r.offset = vp * rays[mi].offset + vm * rays[pi].offset;
        r.normal = make_primitive(std::move(r.normal), &r.offset);
        r.tight = std::move(common);
        r.tight.set(p);
        next.push_back(std::move(r));
      }
    }
    for (std::size_t r = 0; r < rays.size(); ++r) {
      const int s = value[r].sign();
      if (s > 0) continue;
      if (s == 0) rays[r].tight.set(p);
      next.push_back(std::move(rays[r]));
    }
    rays = std::move(next);
  }

  std::vector<Facet> facets;
  facets.reserve(rays.size());
  for (auto& r : rays) {
    Facet f;
    f.normal = std::move(r.normal);
    f.offset = std::move(r.offset);
    for (auto k = r.tight.find_first(); k != Bits::npos; k = r.tight.find_next(k))
      f.points.push_back(k);
    facets.push_back(std::move(f));
  }
  std::sort(facets.begin(), facets.end(), [](const Facet& a, const Facet& b) {
    if (a.offset != b.offset) return a.offset < b.offset;
    return a.normal < b.normal;
  });
  return facets;
}

Hull hull_facets(const PointSet& ps) {
  Hull h{chart(ps.weight_system()), {}, {}, {}, false};
  h.chart_points.reserve(ps.size());
  for (std::size_t k = 0; k < ps.size(); ++k) h.chart_points.push_back(h.chart.to_chart(ps.point(k)));
  h.facets = convex_hull_facets(h.chart_points);
  h.origin_interior = std::all_of(h.facets.begin(), h.facets.end(),
                                  [](const Facet& f) { return f.offset.sign() > 0; });
  // A point is a vertex iff the normals of its facets have full rank.
  const std::size_t m = h.chart.dim();
  std::vector<std::vector<std::size_t>> incident(ps.size());
  for (std::size_t f = 0; f < h.facets.size(); ++f)
    for (auto k : h.facets[f].points) incident[k].push_back(f);
  for (std::size_t k = 0; k < ps.size(); ++k) {
    if (incident[k].size() < m) continue;
    IncrementalRank e(m);
    for (auto f : incident[k])
      if (e.add(h.facets[f].normal) && e.rank() == m) break;
    if (e.rank() == m) h.vertices.push_back(k);
  }
  return h;
}

std::vector<std::vector<int64_t>> vertices(const PointSet& ps) {
  Hull h = hull_facets(ps);
  std::vector<std::vector<int64_t>> v;
  for (auto k : h.vertices) v.push_back(ps.point(k));
  return v;
}

bool is_reflexive(const Hull& hull) {
  if (!hull.origin_interior) throw NotInteriorPoint("origin is not interior");
  return std::all_of(hull.facets.begin(), hull.facets.end(),
                     [](const Facet& f) { return f.offset.is_one(); });
}

bool is_reflexive(const WeightSystem& ws) {
  PointSet ps = enumerate_points(ws);
  if (!ip_check(ps)) throw NotInteriorPoint(ws.to_string() + " lacks the IP property");
  return is_reflexive(hull_facets(ps));
}

std::vector<DualVertex> dual_vertices(const Hull& hull) {
  if (!is_reflexive(hull)) throw NotReflexive(hull.chart.ws.to_string() + " is not reflexive");
  const WeightSystem& ws = hull.chart.ws;
  const std::size_t l = ws.size();
  const Integer d(static_cast<long>(ws.degree()));
  std::vector<DualVertex> out;
  for (const auto& f : hull.facets) {
    DualVertex dv;
    for (const auto& x : f.normal) dv.chart_vector.push_back(-x);
    // value(P) = c - normal . L (P - 1) = (c + w . 1) - w . P with w = normal . L.
    IntVector w(l, Integer(0));
    for (std::size_t j = 0; j < f.normal.size(); ++j)
      for (std::size_t i = 0; i < l; ++i) w[i] += f.normal[j] * hull.chart.left_inverse[j][i];
    Integer constant = f.offset;
    for (const auto& x : w) constant += x;
    dv.coeffs.resize(l);
    for (std::size_t i = 0; i < l; ++i) dv.coeffs[i] = -w[i];
    const Integer t = Integer::fdiv(constant, d);
    for (std::size_t i = 0; i < l; ++i) dv.coeffs[i] += t * Integer(static_cast<long>(ws.numerator(i)));
    dv.constant = constant - t * d;
    out.push_back(std::move(dv));
  }
  return out;
}

std::vector<DualVertex> dual_vertices(const WeightSystem& ws) {
  PointSet ps = enumerate_points(ws);
  return dual_vertices(hull_facets(ps));
}

PairingMatrix pairing_matrix(const PointSet& ps, const Hull& hull) {
  PairingMatrix pm;
  pm.duals = dual_vertices(hull);
  for (auto k : hull.vertices) pm.vertices.push_back(ps.point(k));
  for (const auto& f : hull.facets) {
    std::vector<Integer> row;
    for (auto k : hull.vertices) row.push_back(f.offset - dot_int(f.normal, hull.chart_points[k]));
    pm.entries.push_back(std::move(row));
  }
  return pm;
}

PairingMatrix pairing_matrix(const WeightSystem& ws) {
  PointSet ps = enumerate_points(ws);
  if (!ip_check(ps)) throw NotInteriorPoint(ws.to_string() + " lacks the IP property");
  return pairing_matrix(ps, hull_facets(ps));
}

bool span_check(const PointSet& ps) {
  const std::size_t l = ps.dim();
  std::vector<uint8_t> mask(ps.size());
  for (std::size_t i = 0; i < l; ++i) {
    if (kernels::mark_equal(ps.axis(i), ps.size(), 0, mask.data()) + 1 < l) return false;
    // Points on the degree hyperplane: affine rank equals linear rank.
    IncrementalRank e(l);
    for (std::size_t k = 0; k < ps.size() && e.rank() < l - 1; ++k) {
      if (!mask[k]) continue;
      e.add(ps.int_point(k));
    }
    if (e.rank() < l - 1) return false;
  }
  return true;
}

bool span_check(const WeightSystem& ws) { return span_check(enumerate_points(ws)); }

std::vector<IntVector> pyramid_gap_points(const PyramidSpec& pyr) {
  if (pyr.height < 2) throw InputError("pyramid_gap_points: height must be >= 2");
  const std::size_t m = pyr.peak.size();
  if (m < 2) throw InputError("pyramid_gap_points: need at least one base dimension");
  const Integer two_h(2 * pyr.height);
  if (pyr.peak[m - 1] != two_h) throw InputError("pyramid_gap_points: peak must sit at height 2h");
  std::vector<IntVector> base;
  for (const auto& v : pyr.base_vertices) {
    if (v.size() != m || !v[m - 1].is_zero())
      throw InputError("pyramid_gap_points: base vertices must lie at height 0");
    base.emplace_back(v.begin(), v.end() - 1);
  }
  const std::size_t b = m - 1;
  std::vector<Facet> facets = convex_hull_facets(base);

  std::vector<Integer> lo(b), hi(b);
  for (std::size_t i = 0; i < b; ++i) {
    lo[i] = hi[i] = base[0][i];
    for (const auto& v : base) {
      lo[i] = std::min(lo[i], v[i]);
      hi[i] = std::max(hi[i], v[i]);
    }
  }
  std::vector<IntVector> out;
  for (long t = 1; t < pyr.height; ++t) {
    const Integer tt(t);
    const Integer rest = two_h - tt;
    // z in slice  <=>  (2h z - t p) / (2h - t) in base.
    std::vector<Integer> zlo(b), zhi(b);
    for (std::size_t i = 0; i < b; ++i) {
      Integer a = rest * lo[i] + tt * pyr.peak[i];
      Integer c = rest * hi[i] + tt * pyr.peak[i];
      zlo[i] = -Integer::fdiv(-a, two_h);  // ceil
      zhi[i] = Integer::fdiv(c, two_h);
    }
    IntVector z = zlo;
    bool done = false;
    for (std::size_t i = 0; i < b; ++i) done = done || zlo[i] > zhi[i];
    while (!done) {
      IntVector scaled(b);
      for (std::size_t i = 0; i < b; ++i) scaled[i] = two_h * z[i] - tt * pyr.peak[i];
      bool inside = true;
      for (const auto& f : facets) {
        if (dot_int(f.normal, scaled) > f.offset * rest) {
          inside = false;
          break;
        }
      }
      if (inside) {
        IntVector p = z;
        p.push_back(tt);
        out.push_back(std::move(p));
      }
      std::size_t i = 0;
      for (; i < b; ++i) {
        if (z[i] < zhi[i]) {
          z[i] += Integer(1);
          break;
        }
        z[i] = zlo[i];
      }
      done = (i == b);
    }
  }
  return out;
}

}  // namespace cyw
