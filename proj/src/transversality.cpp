#include "cyw/transversality.hpp"

#include <functional>

#include <boost/dynamic_bitset.hpp>

namespace cyw {

namespace {

using Bits = boost::dynamic_bitset<uint64_t>;

// reach[J] bit s: degree s is attained by a monomial in the variables of J.
std::vector<Bits> subset_reach(const WeightSystem& ws) {
  const std::size_t l = ws.size();
  const auto d = static_cast<std::size_t>(ws.degree());
  std::vector<Bits> reach(std::size_t{1} << l);
  reach[0] = Bits(d + 1);
  reach[0].set(0);
  for (IndexMask mask = 1; mask < (IndexMask{1} << l); ++mask) {
    const int top = 31 - __builtin_clz(mask);
    Bits r = reach[mask & ~(IndexMask{1} << top)];
    const auto n = static_cast<std::size_t>(ws.numerator(static_cast<std::size_t>(top)));
    // Closure under adding n: doubling shifts cover every multiple.
    for (std::size_t step = n; step <= d; step *= 2) r |= r << step;
    reach[mask] = std::move(r);
  }
  return reach;
}

}  // namespace

bool subset_monomial_exists(const WeightSystem& ws, IndexMask subset, int64_t deficit) {
  if (deficit < 0 || deficit >= ws.degree()) throw InputError("subset_monomial_exists: deficit out of range");
  const int64_t target = ws.degree() - deficit;
  std::vector<int64_t> n;
  for (std::size_t i = 0; i < ws.size(); ++i)
    if (subset & (IndexMask{1} << i)) n.push_back(ws.numerator(i));
  if (n.empty()) return target == 0;
  Bits r(static_cast<std::size_t>(target) + 1);
  r.set(0);
  for (int64_t c : n)
    for (auto step = static_cast<std::size_t>(c); step <= static_cast<std::size_t>(target); step *= 2)
      r |= r << step;
  return r.test(static_cast<std::size_t>(target));
}

bool is_transverse(const WeightSystem& ws) {
  const std::size_t l = ws.size();
  if (l > 20) throw InputError("is_transverse: too many weights");
  const auto d = static_cast<std::size_t>(ws.degree());
  const std::vector<Bits> reach = subset_reach(ws);
  for (IndexMask mask = 1; mask < (IndexMask{1} << l); ++mask) {
    if (reach[mask].test(d)) continue;
    int count = 0;
    for (std::size_t k = 0; k < l; ++k) {
      if (mask & (IndexMask{1} << k)) continue;
      if (reach[mask].test(d - static_cast<std::size_t>(ws.numerator(k)))) ++count;
    }
    if (count < __builtin_popcount(mask)) return false;
  }
  return true;
}

std::optional<MonomialMatrix> lemma2_matrix(const WeightSystem& ws) {
  const std::size_t l = ws.size();
  const int64_t d = ws.degree();
  // options[i]: -1 for a pure power, otherwise the pointer j.
  std::vector<std::vector<int>> options(l);
  for (std::size_t i = 0; i < l; ++i) {
    const int64_t ni = ws.numerator(i);
    if (d % ni == 0 && d / ni >= 2) {
      options[i].push_back(-1);
      continue;
    }
    for (std::size_t j = 0; j < l; ++j) {
      if (j == i) continue;
      const int64_t rest = d - ws.numerator(j);
      if (rest > 0 && rest % ni == 0 && rest / ni >= 2) options[i].push_back(static_cast<int>(j));
    }
    if (options[i].empty()) return std::nullopt;
  }
  std::vector<int> choice(l, -1);
  std::vector<int> used(l, 0);
  std::function<bool(std::size_t)> assign = [&](std::size_t i) -> bool {
    if (i == l) return true;
    for (int j : options[i]) {
      if (j >= 0 && used[static_cast<std::size_t>(j)]) continue;
      choice[i] = j;
      if (j >= 0) used[static_cast<std::size_t>(j)] = 1;
      if (assign(i + 1)) return true;
      if (j >= 0) used[static_cast<std::size_t>(j)] = 0;
    }
    return false;
  };
  MonomialMatrix mm;
  mm.injective_pointers = assign(0);
  if (!mm.injective_pointers)
    for (std::size_t i = 0; i < l; ++i) choice[i] = options[i].front();
  for (std::size_t i = 0; i < l; ++i) {
    std::vector<int64_t> row(l, 0);
    const int64_t extra = choice[i] >= 0 ? ws.numerator(static_cast<std::size_t>(choice[i])) : 0;
    row[i] = (d - extra) / ws.numerator(i);
    if (choice[i] >= 0) row[static_cast<std::size_t>(choice[i])] = 1;
    mm.rows.push_back(std::move(row));
  }
  RatMatrix m(l, std::vector<Rational>(l));
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j) m[i][j] = Rational(static_cast<long>(mm.rows[j][i]));
  auto q = solve_square(std::move(m), RatForm(l, Rational(1)));
  if (!q) throw std::logic_error("lemma2_matrix: monomial matrix is singular");
  mm.qbar = std::move(*q);
  return mm;
}

}  // namespace cyw
