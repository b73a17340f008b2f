#include "cyw/linalg.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace cyw {

IntVector to_int_vector(std::span<const long> v) {
  IntVector r;
  r.reserve(v.size());
  for (long x : v) r.emplace_back(x);
  return r;
}

IntVector to_int_vector(std::initializer_list<long> v) {
  return to_int_vector(std::span<const long>(v.begin(), v.size()));
}

std::string to_string(const IntVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

std::string to_string(const RatForm& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

Rational dot(const RatForm& a, const IntVector& x) {
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!x[i].is_zero()) s += a[i] * Rational(x[i]);
  return s;
}

Rational dot(const RatForm& a, const RatForm& b) {
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RatForm AffineFormSpace::at(std::span<const Rational> params) const {
  RatForm a = particular;
  for (std::size_t j = 0; j < directions.size(); ++j) {
    if (params[j].is_zero()) continue;
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += params[j] * directions[j][i];
  }
  return a;
}

namespace {

// Reduced row echelon form of an augmented system [A | rhs] with n unknowns.
// Returns the pivot column of each nonzero row, or nullopt if inconsistent.
std::optional<std::vector<std::size_t>> rref(RatMatrix& m, std::size_t n) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col].is_zero()) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    const Rational inv = Rational(1) / m[row][col];
    for (std::size_t c = col; c <= n; ++c)
      if (!m[row][c].is_zero()) m[row][c] *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col].is_zero()) continue;
      const Rational f = m[r][col];
      for (std::size_t c = col; c <= n; ++c)
        if (!m[row][c].is_zero()) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  for (std::size_t r = row; r < m.size(); ++r)
    if (!m[r][n].is_zero()) return std::nullopt;
  return pivots;
}

// Parametrise the solution set of a consistent system in RREF.
AffineFormSpace space_from_rref(const RatMatrix& m, const std::vector<std::size_t>& pivots,
                                std::size_t n) {
  AffineFormSpace s;
  s.particular.assign(n, Rational(0));
  std::vector<bool> is_pivot(n, false);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    is_pivot[pivots[r]] = true;
    s.particular[pivots[r]] = m[r][n];
  }
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    RatForm d(n, Rational(0));
    d[f] = Rational(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) d[pivots[r]] = -m[r][f];
    s.directions.push_back(std::move(d));
  }
  return s;
}

}  // namespace

std::optional<AffineFormSpace> solve_form_space(std::span<const IntVector> points) {
  if (points.empty()) throw InputError("solve_form_space: no points");
  const std::size_t n = points.front().size();
  if (n < 2) throw InputError("solve_form_space: length must be >= 2");
  RatMatrix m;
  m.reserve(points.size());
  for (const auto& p : points) {
    if (p.size() != n) throw InputError("solve_form_space: length mismatch");
    std::vector<Rational> row;
    row.reserve(n + 1);
    for (const auto& x : p) row.emplace_back(x);
    row.emplace_back(1);
    m.push_back(std::move(row));
  }
  auto pivots = rref(m, n);
  if (!pivots) return std::nullopt;
  return space_from_rref(m, *pivots, n);
}

std::optional<AffineFormSpace> restrict_space(const AffineFormSpace& space,
                                              std::span<const RatForm> rows,
                                              std::span<const Rational> values) {
  const std::size_t k = space.dim();
  RatMatrix m;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::vector<Rational> row(k + 1);
    for (std::size_t j = 0; j < k; ++j) row[j] = dot(rows[r], space.directions[j]);
    row[k] = values[r] - dot(rows[r], space.particular);
    m.push_back(std::move(row));
  }
  auto pivots = rref(m, k);
  if (!pivots) return std::nullopt;
  AffineFormSpace params = space_from_rref(m, *pivots, k);
  AffineFormSpace out;
  out.particular = space.at(params.particular);
  for (const auto& pd : params.directions) {
    RatForm d(space.length(), Rational(0));
    for (std::size_t j = 0; j < k; ++j)
      if (!pd[j].is_zero())
        for (std::size_t i = 0; i < d.size(); ++i) d[i] += pd[j] * space.directions[j][i];
    out.directions.push_back(std::move(d));
  }
  return out;
}

std::optional<RatForm> solve_square(RatMatrix m, RatForm rhs) {
  const std::size_t n = m.size();
  for (std::size_t r = 0; r < n; ++r) m[r].push_back(rhs[r]);
  auto pivots = rref(m, n);
  if (!pivots || pivots->size() != n) return std::nullopt;
  RatForm x(n);
  for (std::size_t r = 0; r < n; ++r) x[(*pivots)[r]] = m[r][n];
  return x;
}

RatForm least_norm_element(const AffineFormSpace& space) {
  const std::size_t k = space.dim();
  if (k == 0) return space.particular;
  // Normal equations (D^T D) t = -D^T p.
  RatMatrix g(k, std::vector<Rational>(k));
  RatForm rhs(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      g[i][j] = dot(space.directions[i], space.directions[j]);
      g[j][i] = g[i][j];
    }
    rhs[i] = -dot(space.directions[i], space.particular);
  }
  auto t = solve_square(std::move(g), std::move(rhs));
  // The Gram matrix of independent directions is nonsingular.
  if (!t) throw std::logic_error("least_norm_element: dependent directions");
  return space.at(*t);
}

LpSolution solve_lp(const LinearProgram& lp) {
  const std::size_t m = lp.A.size();
  const std::size_t n = lp.c.size();
  // Tableau columns: n structural, m slack, rhs.
  RatMatrix t(m + 1, std::vector<Rational>(n + m + 1));
  std::vector<std::size_t> basis(m);
  for (std::size_t r = 0; r < m; ++r) {
    if (lp.b[r].sign() < 0) throw InputError("solve_lp: negative right-hand side");
    for (std::size_t j = 0; j < n; ++j) t[r][j] = lp.A[r][j];
    t[r][n + r] = Rational(1);
    t[r][n + m] = lp.b[r];
    basis[r] = n + r;
  }
  for (std::size_t j = 0; j < n; ++j) t[m][j] = -lp.c[j];

  LpSolution sol;
  while (true) {
    // Bland: lowest-index column with negative reduced cost.
    std::size_t enter = n + m;
    for (std::size_t j = 0; j < n + m; ++j) {
      if (t[m][j].sign() < 0) {
        enter = j;
        break;
      }
    }
    if (enter == n + m) break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t r = 0; r < m; ++r) {
      if (t[r][enter].sign() <= 0) continue;
      Rational ratio = t[r][n + m] / t[r][enter];
      if (leave == m || ratio < best || (ratio == best && basis[r] < basis[leave])) {
        leave = r;
        best = std::move(ratio);
      }
    }
    if (leave == m) {
      sol.unbounded = true;
      return sol;
    }
    const Rational inv = Rational(1) / t[leave][enter];
    for (auto& v : t[leave])
      if (!v.is_zero()) v *= inv;
    for (std::size_t r = 0; r <= m; ++r) {
      if (r == leave || t[r][enter].is_zero()) continue;
      const Rational f = t[r][enter];
      for (std::size_t c = 0; c <= n + m; ++c)
        if (!t[leave][c].is_zero()) t[r][c] -= f * t[leave][c];
    }
    basis[leave] = enter;
  }
  sol.value = t[m][n + m];
  sol.x.assign(n, Rational(0));
  for (std::size_t r = 0; r < m; ++r)
    if (basis[r] < n) sol.x[basis[r]] = t[r][n + m];
  return sol;
}

std::optional<MaxMinResult> max_min_positive_element(const AffineFormSpace& space) {
  const std::size_t l = space.length();
  const std::size_t k = space.dim();
  const RatForm& p = space.particular;
  const Rational t0 = *std::min_element(p.begin(), p.end());

  Rational best_t = t0;
  if (k > 0) {
    // a = p + D s, t = t0 + tau, s = s+ - s-, tau >= 0:
    //   -D_i s+ + D_i s- + tau <= p_i - t0.
    LinearProgram lp;
    lp.c.assign(2 * k + 1, Rational(0));
    lp.c[2 * k] = Rational(1);
    for (std::size_t i = 0; i < l; ++i) {
      std::vector<Rational> row(2 * k + 1);
      for (std::size_t j = 0; j < k; ++j) {
        row[j] = -space.directions[j][i];
        row[k + j] = space.directions[j][i];
      }
      row[2 * k] = Rational(1);
      lp.A.push_back(std::move(row));
      lp.b.push_back(p[i] - t0);
    }
    LpSolution sol = solve_lp(lp);
    // Every direction sums to zero against (1,...,1), so t is bounded.
    if (sol.unbounded) throw std::logic_error("max_min_positive_element: unbounded");
    best_t = t0 + sol.value;
  }
  if (best_t.sign() <= 0) return std::nullopt;

  // The least-norm point of the optimal face {a in space : a_i >= t*} is the
  // least-norm point of the affine set cut out by its own active constraints,
  // so scanning all active sets finds it.
  std::optional<RatForm> best;
  Rational best_norm;
  for (unsigned mask = 0; mask < (1u << l); ++mask) {
    std::vector<RatForm> rows;
    std::vector<Rational> values;
    for (std::size_t i = 0; i < l; ++i) {
      if (!(mask >> i & 1u)) continue;
      RatForm e(l, Rational(0));
      e[i] = Rational(1);
      rows.push_back(std::move(e));
      values.push_back(best_t);
    }
    auto sub = restrict_space(space, rows, values);
    if (!sub) continue;
    RatForm a = least_norm_element(*sub);
    if (std::any_of(a.begin(), a.end(), [&](const Rational& x) { return x < best_t; })) continue;
    Rational norm = dot(a, a);
    if (!best || norm < best_norm) {
      best = std::move(a);
      best_norm = std::move(norm);
    }
  }
  if (!best) throw std::logic_error("max_min_positive_element: empty optimal face");
  return MaxMinResult{std::move(*best), best_t};
}

KernelLattice kernel_lattice(std::span<const Integer> weights) {
  const std::size_t l = weights.size();
  if (l < 2) throw InputError("kernel_lattice: need at least two weights");
  for (const auto& w : weights)
    if (w.sign() <= 0) throw InputError("kernel_lattice: weights must be positive");

  std::vector<Integer> r(weights.begin(), weights.end());
  // u holds columns of the unimodular transform, v its inverse (rows).
  std::vector<IntVector> u(l, IntVector(l, Integer(0)));
  std::vector<IntVector> v(l, IntVector(l, Integer(0)));
  for (std::size_t i = 0; i < l; ++i) {
    u[i][i] = Integer(1);
    v[i][i] = Integer(1);
  }
  auto col_sub = [&](std::size_t dst, std::size_t src, const Integer& q) {
    // col_dst -= q col_src; inverse: row_src += q row_dst.
    r[dst] -= q * r[src];
    for (std::size_t i = 0; i < l; ++i) u[dst][i] -= q * u[src][i];
    for (std::size_t i = 0; i < l; ++i) v[src][i] += q * v[dst][i];
  };
  auto col_swap = [&](std::size_t a, std::size_t b) {
    std::swap(r[a], r[b]);
    std::swap(u[a], u[b]);
    std::swap(v[a], v[b]);
  };
  for (std::size_t j = 1; j < l; ++j) {
    while (!r[j].is_zero()) {
      col_sub(0, j, Integer::tdiv(r[0], r[j]));
      col_swap(0, j);
    }
  }
  if (r[0].sign() < 0) {
    r[0] = -r[0];
    for (auto& x : u[0]) x = -x;
    for (auto& x : v[0]) x = -x;
  }
  KernelLattice k;
  k.gcd = r[0];
  for (std::size_t j = 1; j < l; ++j) {
    k.basis.push_back(u[j]);
    k.left_inverse.push_back(v[j]);
  }
  return k;
}

std::vector<IntVector> integer_kernel_basis(std::span<const Integer> weights) {
  return kernel_lattice(weights).basis;
}

IntVector primitive_reduce(const IntVector& v) {
  Integer g(0);
  for (const auto& x : v) g = Integer::gcd(g, x);
  if (g.is_zero()) throw InputError("primitive_reduce: zero vector");
  if (g.is_one()) return v;
  IntVector r;
  r.reserve(v.size());
  for (const auto& x : v) r.push_back(Integer::divexact(x, g));
  return r;
}

bool IncrementalRank::add(IntVector v) {
  if (v.size() != m_) throw InputError("IncrementalRank: length mismatch");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const std::size_t c = pivot_[r];
    if (v[c].is_zero()) continue;
    const Integer a = rows_[r][c];
    const Integer b = v[c];
    Integer g(0);
    for (std::size_t i = 0; i < m_; ++i) {
      v[i] = v[i] * a - rows_[r][i] * b;
      g = Integer::gcd(g, v[i]);
    }
    if (g.is_zero()) return false;
    if (!g.is_one())
      for (auto& x : v) x = Integer::divexact(x, g);
  }
  std::size_t c = 0;
  while (c < m_ && v[c].is_zero()) ++c;
  if (c == m_) return false;
  rows_.push_back(std::move(v));
  pivot_.push_back(c);
  return true;
}

std::size_t rank(std::span<const IntVector> rows) {
  if (rows.empty()) return 0;
  std::vector<IntVector> m(rows.begin(), rows.end());
  const std::size_t n = m.front().size();
  std::size_t rk = 0;
  for (std::size_t col = 0; col < n && rk < m.size(); ++col) {
    std::size_t sel = rk;
    while (sel < m.size() && m[sel][col].is_zero()) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[rk], m[sel]);
    for (std::size_t r = rk + 1; r < m.size(); ++r) {
      if (m[r][col].is_zero()) continue;
      const Integer a = m[rk][col];
      const Integer b = m[r][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] = m[r][c] * a - m[rk][c] * b;
      m[r] = [&] {
        Integer g(0);
        for (const auto& x : m[r]) g = Integer::gcd(g, x);
        if (g.is_zero() || g.is_one()) return m[r];
        IntVector q;
        for (const auto& x : m[r]) q.push_back(Integer::divexact(x, g));
        return q;
      }();
    }
    ++rk;
  }
  return rk;
}

Integer determinant(std::vector<IntVector> m) {
  const std::size_t n = m.size();
  if (n == 0) return Integer(1);
  Integer prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t sel = k + 1;
      while (sel < n && m[sel][k].is_zero()) ++sel;
      if (sel == n) return Integer(0);
      std::swap(m[k], m[sel]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = Integer::divexact(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

std::vector<IntVector> adjugate(const std::vector<IntVector>& m) {
  const std::size_t n = m.size();
  std::vector<IntVector> adj(n, IntVector(n, Integer(0)));
  if (n == 1) {
    adj[0][0] = Integer(1);
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<IntVector> minor;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == i) continue;
        IntVector row;
        for (std::size_t c = 0; c < n; ++c)
          if (c != j) row.push_back(m[r][c]);
        minor.push_back(std::move(row));
      }
      Integer d = determinant(std::move(minor));
      adj[j][i] = ((i + j) % 2 == 0) ? d : -d;
    }
  }
  return adj;
}

}  // namespace cyw
