#include "cyw/weight_system.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cyw {

WeightSystem WeightSystem::canonicalize(std::span<const int64_t> numerators, int64_t degree) {
  if (numerators.empty()) throw InputError("weight system: no weights");
  int64_t sum = 0;
  int64_t g = 0;
  for (int64_t n : numerators) {
    if (n <= 0) throw InputError("weight system: weights must be positive");
    if (__builtin_add_overflow(sum, n, &sum)) throw InputError("weight system: sum overflows");
    g = std::gcd(g, n);
  }
  if (sum != degree) {
    throw InputError("weight system: numerators sum to " + std::to_string(sum) + ", not " +
                     std::to_string(degree));
  }
  std::vector<int64_t> n(numerators.begin(), numerators.end());
  for (auto& x : n) x /= g;
  std::sort(n.begin(), n.end());
  return WeightSystem(std::move(n), degree / g);
}

WeightSystem WeightSystem::canonicalize(std::initializer_list<int64_t> numerators,
                                        int64_t degree) {
  return canonicalize(std::span<const int64_t>(numerators.begin(), numerators.size()), degree);
}

WeightSystem WeightSystem::from_rational_form(const RatForm& a) {
  Integer l(1);
  Rational total;
  for (const auto& x : a) {
    if (x.sign() <= 0) throw InputError("from_rational_form: coefficient " + x.to_string() + " <= 0");
    l = Integer::lcm(l, x.den());
    total += x;
  }
  if (total != Rational(1)) throw InputError("from_rational_form: coefficients do not sum to 1");
  std::vector<int64_t> n;
  n.reserve(a.size());
  for (const auto& x : a) {
    Integer v = Integer::divexact(l, x.den()) * x.num();
    if (!v.fits_int64()) throw std::overflow_error("from_rational_form: weight exceeds 64 bits");
    n.push_back(v.to_int64());
  }
  if (!l.fits_int64()) throw std::overflow_error("from_rational_form: degree exceeds 64 bits");
  return canonicalize(n, l.to_int64());
}

WeightSystem WeightSystem::parse(std::string_view line) {
  std::vector<int64_t> v;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r' ||
                                 line[pos] == '\n' || line[pos] == ','))
      ++pos;
    if (pos >= line.size()) break;
    int64_t x = 0;
    auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + line.size(), x);
    if (ec != std::errc()) throw InputError("cannot parse weight system: '" + std::string(line) + "'");
    pos = static_cast<std::size_t>(ptr - line.data());
    if (pos < line.size() && !(line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r' ||
                               line[pos] == '\n' || line[pos] == ','))
      throw InputError("cannot parse weight system: '" + std::string(line) + "'");
    v.push_back(x);
  }
  if (v.size() < 3) throw InputError("weight system needs at least two weights and a degree");
  const int64_t d = v.back();
  v.pop_back();
  return canonicalize(v, d);
}

IntVector WeightSystem::weights() const {
  IntVector w;
  w.reserve(numerators_.size());
  for (int64_t n : numerators_) w.emplace_back(static_cast<long>(n));
  return w;
}

std::string WeightSystem::to_string() const {
  std::string s;
  for (int64_t n : numerators_) {
    s += std::to_string(n);
    s += ' ';
  }
  s += std::to_string(degree_);
  return s;
}

std::vector<int64_t> PointSet::point(std::size_t k) const {
  std::vector<int64_t> p(l_);
  for (std::size_t i = 0; i < l_; ++i) p[i] = coord(i, k);
  return p;
}

IntVector PointSet::int_point(std::size_t k) const {
  IntVector p;
  p.reserve(l_);
  for (std::size_t i = 0; i < l_; ++i) p.emplace_back(coord(i, k));
  return p;
}

namespace {

// Row-major rows -> sorted axis-major storage.
void store_sorted(std::vector<int32_t>& rows, std::size_t l, std::size_t count,
                  std::vector<int32_t>& coords, std::size_t& interior, int32_t& max_coord) {
  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::lexicographical_compare(rows.begin() + a * l, rows.begin() + (a + 1) * l,
                                        rows.begin() + b * l, rows.begin() + (b + 1) * l);
  });
  coords.assign(l * count, 0);
  max_coord = 0;
  interior = count;
  for (std::size_t k = 0; k < count; ++k) {
    const int32_t* row = rows.data() + order[k] * l;
    bool ones = true;
    for (std::size_t i = 0; i < l; ++i) {
      coords[i * count + k] = row[i];
      max_coord = std::max(max_coord, row[i]);
      ones = ones && row[i] == 1;
    }
    if (ones) interior = k;
  }
}

template <class Visit>
void visit_solutions(const std::vector<int64_t>& n, int64_t d, std::vector<int32_t>& x,
                     std::size_t axis, int64_t remaining, Visit& visit) {
  if (axis == 0) {
    if (remaining % n[0] == 0) {
      x[0] = static_cast<int32_t>(remaining / n[0]);
      visit(x);
    }
    return;
  }
  const int64_t top = remaining / n[axis];
  for (int64_t v = 0; v <= top; ++v) {
    x[axis] = static_cast<int32_t>(v);
    visit_solutions(n, d, x, axis - 1, remaining - v * n[axis], visit);
  }
}

}  // namespace

PointSet enumerate_points(const WeightSystem& ws) {
  if (ws.degree() > std::numeric_limits<int32_t>::max())
    throw std::overflow_error("enumerate_points: degree exceeds 32-bit coordinates");
  const std::size_t l = ws.size();
  std::vector<int32_t> rows;
  std::size_t count = 0;
  std::vector<int32_t> x(l, 0);
  auto visit = [&](const std::vector<int32_t>& p) {
    rows.insert(rows.end(), p.begin(), p.end());
    ++count;
  };
  visit_solutions(ws.numerators(), ws.degree(), x, l - 1, ws.degree(), visit);
  PointSet ps;
  ps.ws_ = ws;
  ps.l_ = l;
  ps.count_ = count;
  store_sorted(rows, l, count, ps.coords_, ps.interior_index_, ps.max_coord_);
  return ps;
}

std::size_t count_points(const WeightSystem& ws) {
  std::size_t count = 0;
  std::vector<int32_t> x(ws.size(), 0);
  auto visit = [&](const std::vector<int32_t>&) { ++count; };
  visit_solutions(ws.numerators(), ws.degree(), x, ws.size() - 1, ws.degree(), visit);
  return count;
}

PointSet PointSet::from_points(const WeightSystem& ws, std::vector<std::vector<int64_t>> pts) {
  const std::size_t l = ws.size();
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<int32_t> rows;
  for (const auto& p : pts) {
    if (p.size() != l) throw InputError("PointSet: point length mismatch");
    int64_t s = 0;
    for (std::size_t i = 0; i < l; ++i) {
      if (p[i] < 0 || p[i] > std::numeric_limits<int32_t>::max())
        throw InputError("PointSet: coordinate out of range");
      s += p[i] * ws.numerator(i);
      rows.push_back(static_cast<int32_t>(p[i]));
    }
    if (s != ws.degree()) throw InputError("PointSet: point violates the degree equation");
  }
  PointSet ps;
  ps.ws_ = ws;
  ps.l_ = l;
  ps.count_ = pts.size();
  store_sorted(rows, l, pts.size(), ps.coords_, ps.interior_index_, ps.max_coord_);
  return ps;
}

bool assert_unique_interior_candidate(const PointSet& ps) {
  std::size_t found = 0;
  bool only_ones = true;
  for (std::size_t k = 0; k < ps.size(); ++k) {
    bool all_pos = true;
    bool ones = true;
    for (std::size_t i = 0; i < ps.dim(); ++i) {
      all_pos = all_pos && ps.coord(i, k) >= 1;
      ones = ones && ps.coord(i, k) == 1;
    }
    if (all_pos) {
      ++found;
      only_ones = only_ones && ones;
    }
  }
  return found == 1 && only_ones;
}

}  // namespace cyw
