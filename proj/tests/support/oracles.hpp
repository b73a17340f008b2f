#pragma once

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

// Slow reference computations shared by the unit and acceptance tests.
namespace oracle {

using Matrix = std::vector<std::vector<long>>;

inline long det_long(const Matrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  long s = 0;
  for (std::size_t c = 0; c < n; ++c) {
    Matrix minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<long> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    s += (c % 2 ? -1 : 1) * m[0][c] * det_long(minor);
  }
  return s;
}

// Cofactor expansion of rows row0.. over the given columns.
inline long minor_det(const long (&a)[4][4], std::size_t row0, const std::size_t* cols, std::size_t k) {
  if (k == 0) return 1;
  if (k == 1) return a[row0][cols[0]];
  long s = 0;
  std::size_t rest[4];
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t r = 0;
    for (std::size_t j = 0; j < k; ++j)
      if (j != c) rest[r++] = cols[j];
    s += (c % 2 ? -1 : 1) * a[row0][cols[c]] * minor_det(a, row0 + 1, rest, k - 1);
  }
  return s;
}

// Facets as (primitive normal, offset) by testing every hyperplane through
// m of the points. Dimension at most 4.
inline std::set<std::pair<std::vector<long>, long>> brute_facets(const std::vector<std::vector<long>>& pts) {
  const std::size_t m = pts[0].size();
  const std::size_t n = pts.size();
  if (m > 4) throw std::invalid_argument("brute_facets: dimension above 4");
  std::set<std::pair<std::vector<long>, long>> out;
  std::vector<std::size_t> idx(m);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  long diffs[4][4];
  while (true) {
    for (std::size_t r = 1; r < m; ++r)
      for (std::size_t c = 0; c < m; ++c) diffs[r - 1][c] = pts[idx[r]][c] - pts[idx[0]][c];
    long normal[4];
    for (std::size_t j = 0; j < m; ++j) {
      std::size_t cols[4], k = 0;
      for (std::size_t c = 0; c < m; ++c)
        if (c != j) cols[k++] = c;
      normal[j] = (j % 2 ? -1 : 1) * minor_det(diffs, 0, cols, m - 1);
    }
    long g = 0;
    for (std::size_t c = 0; c < m; ++c) g = std::gcd(g, std::labs(normal[c]));
    if (g != 0) {
      for (std::size_t c = 0; c < m; ++c) normal[c] /= g;
      long offset = 0;
      for (std::size_t c = 0; c < m; ++c) offset += normal[c] * pts[idx[0]][c];
      bool above = false, below = false;
      for (const auto& p : pts) {
        long v = 0;
        for (std::size_t c = 0; c < m; ++c) v += normal[c] * p[c];
        above = above || v > offset;
        below = below || v < offset;
        if (above && below) break;
      }
      if (!(above && below)) {
        if (above) {
          for (std::size_t c = 0; c < m; ++c) normal[c] = -normal[c];
          offset = -offset;
        }
        out.insert({std::vector<long>(normal, normal + m), offset});
      }
    }
    std::size_t i = m;
    while (i > 0 && idx[i - 1] == n - m + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < m; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

// True when some row and column permutation turns a into b.
inline bool equal_up_to_permutation(const std::vector<std::vector<long>>& a, const std::vector<std::vector<long>>& b) {
  if (a.size() != b.size() || a.empty() || a[0].size() != b[0].size()) return false;
  std::vector<std::size_t> perm(a[0].size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  auto sorted_b = b;
  std::sort(sorted_b.begin(), sorted_b.end());
  do {
    auto pa = a;
    for (auto& row : pa) {
      std::vector<long> r(row.size());
      for (std::size_t j = 0; j < row.size(); ++j) r[j] = row[perm[j]];
      row = r;
    }
    std::sort(pa.begin(), pa.end());
    if (pa == sorted_b) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace oracle
