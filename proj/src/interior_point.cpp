#include "cyw/interior_point.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <type_traits>

#include "cyw/kernels.hpp"
#include "cyw/polytope.hpp"

namespace cyw {

namespace {

using i128 = __int128;

int sign_of(const Integer& x) { return x.sign(); }
int sign_of(i128 x) { return (x > 0) - (x < 0); }

Integer to_integer(const Integer& x) { return x; }
Integer to_integer(i128 x) {
  if (x >= std::numeric_limits<int64_t>::min() + 1 && x <= std::numeric_limits<int64_t>::max())
    return Integer(static_cast<long>(x));
  const bool neg = x < 0;
  const unsigned __int128 u = neg ? -static_cast<unsigned __int128>(x) : static_cast<unsigned __int128>(x);
  mpz_class hi(static_cast<unsigned long>(u >> 64));
  mpz_class lo(static_cast<unsigned long>(u & ~uint64_t{0}));
  mpz_class v = (hi << 64) + lo;
  if (neg) v = -v;
  return Integer(v);
}

bool to_int64(const Integer& x, int64_t& out) {
  if (!x.fits_int64()) return false;
  out = x.to_int64();
  return true;
}
bool to_int64(i128 x, int64_t& out) {
  if (x < -std::numeric_limits<int64_t>::max() || x > std::numeric_limits<int64_t>::max()) return false;
  out = static_cast<int64_t>(x);
  return true;
}

// Determinant by cofactor expansion along the first remaining row; only for
// the small matrices of the 128-bit path.
i128 laplace(const std::vector<std::vector<i128>>& m, std::size_t row, uint32_t used) {
  const std::size_t n = m.size();
  if (row == n) return 1;
  i128 det = 0;
  int sign = 1;
  for (std::size_t c = 0; c < n; ++c) {
    if (used & (1U << c)) continue;
    if (m[row][c] != 0) det += sign * m[row][c] * laplace(m, row + 1, used | (1U << c));
    sign = -sign;
  }
  return det;
}

struct Core128 {
  using T = i128;
  static T divexact(T a, T b) { return a / b; }
  static std::vector<std::vector<T>> adjugate(const std::vector<std::vector<T>>& m, T& det) {
    const std::size_t n = m.size();
    det = laplace(m, 0, 0);
    std::vector<std::vector<T>> adj(n, std::vector<T>(n));
    std::vector<std::vector<T>> minor(n - 1, std::vector<T>(n - 1));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        // adj[j][i] = (-1)^(i+j) det(m without row i, column j)
        for (std::size_t r = 0, rr = 0; r < n; ++r) {
          if (r == i) continue;
          for (std::size_t c = 0, cc = 0; c < n; ++c) {
            if (c == j) continue;
            minor[rr][cc++] = m[r][c];
          }
          ++rr;
        }
        const T v = laplace(minor, 0, 0);
        adj[j][i] = ((i + j) % 2) ? -v : v;
      }
    return adj;
  }
};

struct CoreBig {
  using T = Integer;
  static T divexact(const T& a, const T& b) { return Integer::divexact(a, b); }
  static std::vector<std::vector<T>> adjugate(const std::vector<std::vector<T>>& m, T& det) {
    det = cyw::determinant(m);
    return cyw::adjugate(m);
  }
};

// Signs of h . P over all points, with the extreme values.
struct SideScan {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t argmax = 0;
  std::size_t argmin = 0;
};

template <class T>
bool small_coeffs(const PointSet& ps, const std::vector<T>& h, std::vector<int64_t>& c) {
  c.resize(h.size());
  for (std::size_t i = 0; i < h.size(); ++i)
    if (!to_int64(h[i], c[i])) return false;
  return kernels::form_fits(c.data(), c.size(), ps.max_abs_coord());
}

Integer big_value(const PointSet& ps, const IntVector& h, std::size_t k) {
  Integer v(0);
  for (std::size_t i = 0; i < h.size(); ++i) v += h[i] * Integer(ps.coord(i, k));
  return v;
}

template <class T>
SideScan scan_side(const PointSet& ps, const std::vector<T>& h, std::vector<int64_t>& buf) {
  const std::size_t l = ps.dim();
  const std::size_t n = ps.size();
  SideScan out;
  std::vector<int64_t> c;
  if (small_coeffs(ps, h, c)) {
    buf.resize(n);
    kernels::form_values(ps.data(), n, n, l, c.data(), buf.data());
    const kernels::SignScan s = kernels::scan_signs(buf.data(), n);
    out.positive = s.positive;
    out.negative = s.negative;
    out.argmax = s.argmax;
    out.argmin = s.argmin;
    return out;
  }
  IntVector hb;
  for (const auto& x : h) hb.push_back(to_integer(x));
  Integer best, worst;
  for (std::size_t k = 0; k < n; ++k) {
    const Integer v = big_value(ps, hb, k);
    const int s = v.sign();
    if (s > 0) ++out.positive;
    if (s < 0) ++out.negative;
    if (k == 0 || v > best) {
      best = v;
      out.argmax = k;
    }
    if (k == 0 || v < worst) {
      worst = v;
      out.argmin = k;
    }
  }
  return out;
}

// Smallest index k with sign(h . P_k) == side; such a point must exist.
template <class T>
std::size_t first_on_side(const PointSet& ps, const std::vector<T>& h, int side,
                          std::vector<int64_t>& buf) {
  const std::size_t l = ps.dim();
  const std::size_t n = ps.size();
  std::vector<int64_t> c;
  if (small_coeffs(ps, h, c)) {
    buf.resize(n);
    kernels::form_values(ps.data(), n, n, l, c.data(), buf.data());
    for (std::size_t k = 0; k < n; ++k)
      if ((buf[k] > 0) - (buf[k] < 0) == side) return k;
  } else {
    IntVector hb;
    for (const auto& x : h) hb.push_back(to_integer(x));
    for (std::size_t k = 0; k < n; ++k)
      if (big_value(ps, hb, k).sign() == side) return k;
  }
  throw std::logic_error("first_on_side: no point on the requested side");
}

}  // namespace

std::optional<BarycentricCoords> barycentric(const PointSet& ps,
                                             const std::vector<std::size_t>& chosen) {
  const std::size_t l = ps.dim();
  if (chosen.size() != l) throw InputError("barycentric: need exactly l points");
  RatMatrix m(l, std::vector<Rational>(l));
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t k = 0; k < l; ++k) m[i][k] = Rational(ps.coord(i, chosen[k]));
  auto sol = solve_square(std::move(m), RatForm(l, Rational(1)));
  if (!sol) return std::nullopt;
  return BarycentricCoords{chosen, std::move(*sol)};
}

std::vector<std::size_t> starting_points(const PointSet& ps) {
  const std::size_t l = ps.dim();
  const std::size_t n = ps.size();
  std::vector<int32_t> top(n, 0);
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t k = 0; k < n; ++k) top[k] = std::max(top[k], ps.coord(i, k));
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return top[a] > top[b]; });
  std::vector<std::size_t> chosen;
  IncrementalRank r(l);
  for (std::size_t k : order) {
    if (r.add(ps.int_point(k))) {
      chosen.push_back(k);
      if (chosen.size() == l) break;
    }
  }
  return chosen;
}

namespace {

enum class Lex { kFalse, kInside, kInterior, kCap };

template <class T>
int lex_sign(const std::vector<T>& v) {
  for (const auto& x : v)
    if (int s = sign_of(x)) return s;
  return 0;
}

// Walk towards the target 1 + e T[1] + e^2 T[2] + ... for infinitesimal e,
// comparing lexicographically in the powers of e. This is a dual simplex
// with zero costs: the leaving point has the smallest coordinate, the
// entering point lies beyond its opposite hyperplane on the side of the
// target. The furthest such point is taken for the first few steps, then
// Bland's rule, which cannot cycle.
// kInterior: the unperturbed point is interior to the current simplex.
// kInside: only the perturbed target is inside it.
// kFalse: all points lie weakly on one side of a hyperplane that has the
// target strictly on the other.
template <class Core>
Lex lex_walk(const PointSet& ps, const std::vector<IntVector>& targets,
             std::vector<std::size_t>& chosen, std::size_t& budget, std::vector<int64_t>& buf) {
  using T = typename Core::T;
  const std::size_t l = ps.dim();
  const std::size_t steep_steps = 4 * l;
  std::vector<std::vector<T>> tgt(targets.size(), std::vector<T>(l));
  for (std::size_t t = 0; t < targets.size(); ++t)
    for (std::size_t i = 0; i < l; ++i) {
      if constexpr (std::is_same_v<T, Integer>)
        tgt[t][i] = targets[t][i];
      else
        tgt[t][i] = targets[t][i].to_int64();
    }
  std::vector<std::vector<T>> m(l, std::vector<T>(l));
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t k = 0; k < l; ++k) m[i][k] = T(ps.coord(i, chosen[k]));
  T det;
  std::vector<std::vector<T>> adj = Core::adjugate(m, det);
  std::vector<std::vector<T>> lam(l, std::vector<T>(targets.size()));
  std::vector<T> a(l);
  for (std::size_t steps = 0; budget > 0; ++steps) {
    --budget;
    const int dsign = sign_of(det);
    // lambda_j * |det| = sign(det) * (adj row j . target).
    for (std::size_t j = 0; j < l; ++j)
      for (std::size_t t = 0; t < tgt.size(); ++t) {
        T s(0);
        for (std::size_t i = 0; i < l; ++i) s += adj[j][i] * tgt[t][i];
        lam[j][t] = dsign > 0 ? s : -s;
      }
    std::size_t j = 0;
    for (std::size_t k = 1; k < l; ++k)
      if (lam[k] < lam[j]) j = k;
    if (lex_sign(lam[j]) >= 0) {
      const bool strict =
          std::all_of(lam.begin(), lam.end(), [](const auto& v) { return sign_of(v[0]) > 0; });
      return strict ? Lex::kInterior : Lex::kInside;
    }
    const bool bland = steps >= steep_steps;
    if (bland)
      for (std::size_t k = 0; k < l; ++k)
        if (lex_sign(lam[k]) < 0 && chosen[k] < chosen[j]) j = k;
    const int want = dsign * lex_sign(lam[j]) > 0 ? 1 : -1;
    const SideScan s = scan_side(ps, adj[j], buf);
    if ((want > 0 ? s.positive : s.negative) == 0) return Lex::kFalse;
    const std::size_t q =
        bland ? first_on_side(ps, adj[j], want, buf) : (want > 0 ? s.argmax : s.argmin);
    // Column j becomes point q: det' = h_j . q, h'_j = h_j and
    // h'_k = (det' h_k - (h_k . q) h_j) / det.
    for (std::size_t k = 0; k < l; ++k) {
      T v(0);
      for (std::size_t i = 0; i < l; ++i) v += adj[k][i] * T(ps.coord(i, q));
      a[k] = v;
    }
    for (std::size_t k = 0; k < l; ++k) {
      if (k == j) continue;
      for (std::size_t i = 0; i < l; ++i)
        adj[k][i] = Core::divexact(a[j] * adj[k][i] - a[k] * adj[j][i], det);
    }
    det = a[j];
    chosen[j] = q;
  }
  return Lex::kCap;
}

// 128-bit arithmetic is exact when cofactors C, their pairings with points
// and targets, and the products in the update stay below 2^125. With B the
// largest coordinate, C <= (l-1)! B^(l-1).
bool fits_128(std::size_t l, long double b, long double t) {
  long double c = 1;
  for (std::size_t k = 1; k < l; ++k) c *= static_cast<long double>(k) * b;
  const long double limit = std::ldexp(1.0L, 125);
  const long double lc = static_cast<long double>(l) * c;
  return lc * c * b * 2 < limit && lc * b * b < limit && lc * t < limit;
}

Lex run_walk(const PointSet& ps, const std::vector<IntVector>& targets,
             std::vector<std::size_t>& chosen, std::size_t& budget, std::vector<int64_t>& buf) {
  long double t = 1;
  bool small = true;
  for (const auto& v : targets)
    for (const auto& x : v) {
      small = small && x.fits_int64();
      if (small) t = std::max(t, std::fabs(static_cast<long double>(x.to_int64())));
    }
  small = small && fits_128(ps.dim(), std::max<long double>(1, ps.max_abs_coord()), t);
  if (small) return lex_walk<Core128>(ps, targets, chosen, budget, buf);
  return lex_walk<CoreBig>(ps, targets, chosen, budget, buf);
}

}  // namespace

std::optional<bool> ip_walk(const PointSet& ps) {
  const std::size_t l = ps.dim();
  std::vector<std::size_t> chosen = starting_points(ps);
  if (chosen.size() < l) return false;
  std::size_t budget = l * ps.size();
  std::vector<int64_t> buf;
  const IntVector one(l, Integer(1));
  std::vector<IntVector> targets{one};
  Lex r = run_walk(ps, targets, chosen, budget, buf);
  if (r != Lex::kInside) {
    if (r == Lex::kCap) return std::nullopt;
    return r == Lex::kInterior;
  }
  // (1,...,1) lies on the boundary of a simplex of points. It is interior
  // iff the hull contains its perturbations towards every vertex of a
  // simplex around it in the degree hyperplane; further basis directions
  // break the remaining ties.
  const std::vector<IntVector> basis = kernel_lattice(ps.weight_system().weights()).basis;
  IntVector last(l, Integer(0));
  for (const auto& b : basis)
    for (std::size_t i = 0; i < l; ++i) last[i] -= b[i];
  for (std::size_t k = 0; k < l; ++k) {
    targets.assign(1, one);
    targets.push_back(k + 1 < l ? basis[k] : last);
    targets.insert(targets.end(), basis.begin(), basis.end());
    r = run_walk(ps, targets, chosen, budget, buf);
    if (r == Lex::kCap) return std::nullopt;
    if (r == Lex::kFalse) return false;
    if (r == Lex::kInterior) return true;
  }
  return true;
}

bool ip_oracle(const PointSet& ps) {
  try {
    return hull_facets(ps).origin_interior;
  } catch (const DimensionDeficient&) {
    return false;
  }
}

bool ip_check(const PointSet& ps) {
  if (auto w = ip_walk(ps)) return *w;
  return ip_oracle(ps);
}

bool ip_check(const WeightSystem& ws) { return ip_check(enumerate_points(ws)); }

bool ip_check_verified(const PointSet& ps) {
  const bool oracle = ip_oracle(ps);
  if (auto w = ip_walk(ps); w && *w != oracle)
    throw CrossCheckError("interior-point walk and oracle disagree for " +
                          ps.weight_system().to_string());
  return oracle;
}

}  // namespace cyw
