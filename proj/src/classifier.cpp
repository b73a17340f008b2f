#include "cyw/classifier.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "cyw/interior_point.hpp"
#include "cyw/polytope.hpp"
#include "cyw/transversality.hpp"

namespace cyw {

namespace {

struct WsHash {
  std::size_t operator()(const WeightSystem& ws) const noexcept {
    std::size_t h = static_cast<std::size_t>(ws.degree()) * 0x9e3779b97f4a7c15ULL;
    for (int64_t n : ws.numerators()) h = (h ^ static_cast<std::size_t>(n)) * 0x100000001b3ULL;
    return h;
  }
};

using WsSet = std::unordered_set<WeightSystem, WsHash>;

bool all_positive(const RatForm& a) {
  return std::all_of(a.begin(), a.end(), [](const Rational& x) { return x.sign() > 0; });
}

int64_t checked_int64(const Integer& v) {
  if (!v.fits_int64()) throw std::overflow_error("search: form denominators exceed 64 bits");
  return v.to_int64();
}

// a = w / D with integer w and D.
struct ScaledForm {
  std::vector<int64_t> w;
  int64_t D = 1;
};

ScaledForm scale(const RatForm& a) {
  Integer den(1);
  for (const auto& x : a) den = Integer::lcm(den, x.den());
  ScaledForm s;
  s.D = checked_int64(den);
  for (const auto& x : a) s.w.push_back(checked_int64(Integer::divexact(den, x.den()) * x.num()));
  return s;
}

// prev[i]: the nearest j < i whose column over the chosen points equals
// column i, or -1.
std::vector<int> column_classes(const std::vector<IntVector>& chosen, std::size_t l) {
  std::vector<int> prev(l, -1);
  for (std::size_t i = 1; i < l; ++i) {
    for (std::size_t j = i; j-- > 0;) {
      bool same = true;
      for (const auto& p : chosen) same = same && p[i] == p[j];
      if (same) {
        prev[i] = static_cast<int>(j);
        break;
      }
    }
  }
  return prev;
}

// Visits every y >= 0 with w . y < D, some y_i >= 2 and y non-increasing
// along column classes.
template <class Visit>
void for_each_child(const ScaledForm& f, const std::vector<int>& prev, Visit&& visit) {
  const std::size_t l = f.w.size();
  std::vector<int64_t> y(l, 0);
  auto rec = [&](auto&& self, std::size_t i, int64_t budget, bool big) -> void {
    if (i == l) {
      if (big) visit(y);
      return;
    }
    int64_t top = budget / f.w[i];
    if (prev[i] >= 0) top = std::min(top, y[static_cast<std::size_t>(prev[i])]);
    for (int64_t v = 0; v <= top; ++v) {
      y[i] = v;
      self(self, i + 1, budget - v * f.w[i], big || v >= 2);
    }
    y[i] = 0;
  };
  rec(rec, 0, f.D - 1, false);
}

IntVector to_ints(const std::vector<int64_t>& y) {
  IntVector v;
  v.reserve(y.size());
  for (int64_t x : y) v.emplace_back(static_cast<long>(x));
  return v;
}

std::optional<SearchNode> try_child(const SearchNode& node, const std::vector<int64_t>& y) {
  RatForm row;
  row.reserve(y.size());
  for (int64_t x : y) row.emplace_back(static_cast<long>(x));
  const Rational one(1);
  auto sub = restrict_space(node.form_space, std::span<const RatForm>(&row, 1),
                            std::span<const Rational>(&one, 1));
  if (!sub || sub->dim() + 1 != node.form_space.dim()) return std::nullopt;
  SearchNode child{node.chosen_points, std::move(*sub), node.depth + 1};
  child.chosen_points.push_back(to_ints(y));
  return child;
}

void emit(const RatForm& a, WsSet& out) { out.insert(WeightSystem::from_rational_form(a)); }

// Children of a node whose form space is a line: each child fixes the form,
// computed here in integers. With a0 = w/D and direction v (v . 1 = 0), the
// form through y is [w (v.y) + (D - w.y) v] / (D (v.y)).
void expand_line(const SearchNode& node, const RatForm& a, WsSet& out) {
  const std::size_t l = a.size();
  const ScaledForm f = scale(a);
  const ScaledForm dir = scale(node.form_space.directions[0]);
  std::vector<__int128> v(dir.w.begin(), dir.w.end());
  const std::vector<int> prev = column_classes(node.chosen_points, l);
  std::vector<__int128> num(l);
  std::vector<int64_t> n(l);
  for_each_child(f, prev, [&](const std::vector<int64_t>& y) {
    __int128 s = 0;
    __int128 wy = 0;
    for (std::size_t i = 0; i < l; ++i) {
      s += v[i] * y[i];
      wy += static_cast<__int128>(f.w[i]) * y[i];
    }
    if (s == 0) return;
    const __int128 r = f.D - wy;
    const int sign = s > 0 ? 1 : -1;
    __int128 g = 0;
    for (std::size_t i = 0; i < l; ++i) {
      __int128 x = static_cast<__int128>(f.w[i]) * s + r * v[i];
      if (sign < 0) x = -x;
      if (x <= 0) return;
      num[i] = x;
      __int128 a1 = g, b1 = x;
      while (b1 != 0) {
        __int128 t = a1 % b1;
        a1 = b1;
        b1 = t;
      }
      g = a1;
    }
    __int128 d = 0;
    for (std::size_t i = 0; i < l; ++i) {
      num[i] /= g;
      if (num[i] > std::numeric_limits<int64_t>::max())
        throw std::overflow_error("search: weight exceeds 64 bits");
      n[i] = static_cast<int64_t>(num[i]);
      d += num[i];
    }
    if (d > std::numeric_limits<int64_t>::max()) throw std::overflow_error("search: degree exceeds 64 bits");
    out.insert(WeightSystem::canonicalize(n, static_cast<int64_t>(d)));
  });
}

void expand(const SearchNode& node, const RatForm& a, WsSet& out) {
  emit(a, out);
  const std::size_t dim = node.form_space.dim();
  if (dim == 0) return;
  if (dim == 1) {
    expand_line(node, a, out);
    return;
  }
  const ScaledForm f = scale(a);
  const std::vector<int> prev = column_classes(node.chosen_points, a.size());
  for_each_child(f, prev, [&](const std::vector<int64_t>& y) {
    auto child = try_child(node, y);
    if (!child) return;
    auto b = branching_form(*child);
    if (b) expand(*child, *b, out);
  });
}

std::vector<WeightSystem> sorted(const WsSet& s) {
  std::vector<WeightSystem> v(s.begin(), s.end());
  std::sort(v.begin(), v.end());
  return v;
}

void run_parallel(unsigned jobs, std::size_t count, const std::function<void(std::size_t)>& body) {
  jobs = std::max(1u, jobs);
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(count);
        return;
      }
    }
  };
  if (jobs == 1 || count <= 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (unsigned t = 0; t < std::min<std::size_t>(jobs, count); ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace

SearchNode root_node(std::size_t l) {
  if (l < 2) throw InputError("root_node: need at least two weights");
  IntVector one(l, Integer(1));
  auto space = solve_form_space(std::span<const IntVector>(&one, 1));
  return SearchNode{{one}, std::move(*space), 0};
}

std::optional<RatForm> branching_form(const SearchNode& node) {
  RatForm a = least_norm_element(node.form_space);
  if (all_positive(a)) return a;
  if (node.form_space.dim() == 0) return std::nullopt;
  auto m = max_min_positive_element(node.form_space);
  if (!m) return std::nullopt;
  return std::move(m->form);
}

std::vector<IntVector> child_points(const SearchNode& node, const RatForm& a) {
  if (!all_positive(a)) throw std::logic_error("child_points: form must be strictly positive");
  std::vector<IntVector> out;
  const std::vector<int> prev = column_classes(node.chosen_points, a.size());
  for_each_child(scale(a), prev, [&](const std::vector<int64_t>& y) {
    auto child = try_child(node, y);
    if (child && branching_form(*child)) out.push_back(to_ints(y));
  });
  std::sort(out.begin(), out.end(), [](const IntVector& p, const IntVector& q) {
    Integer sp(0), sq(0);
    for (const auto& x : p) sp += x;
    for (const auto& x : q) sq += x;
    if (sp != sq) return sp > sq;
    return p > q;
  });
  return out;
}

SearchNode child_node(const SearchNode& node, const IntVector& y) {
  std::vector<int64_t> v;
  for (const auto& x : y) v.push_back(x.to_int64_checked());
  auto c = try_child(node, v);
  if (!c) throw InputError("child_node: point is not independent of the node");
  return std::move(*c);
}

std::vector<IntVector> root_branches(std::size_t l) {
  SearchNode root = root_node(l);
  return child_points(root, *branching_form(root));
}

CandidateSet enumerate_candidates(std::size_t l) { return enumerate_candidates(l, EnumerateOptions{}); }

CandidateSet enumerate_candidates(std::size_t l, const EnumerateOptions& opts) {
  if (l < 3) throw InputError("enumerate_candidates: need at least three weights");
  const SearchNode root = root_node(l);
  const RatForm root_form = *branching_form(root);
  const std::vector<IntVector> branches = child_points(root, root_form);

  // Work items: the grandchildren of the root, grouped by branch.
  struct Task {
    std::size_t branch;
    SearchNode node;
    RatForm form;
    bool emit_only = false;  // the branch node itself, no recursion
  };
  std::vector<Task> tasks;
  std::vector<std::size_t> pending(branches.size(), 0);
  for (std::size_t b = 0; b < branches.size(); ++b) {
    if (opts.skip_branches.count(b)) continue;
    SearchNode node = child_node(root, branches[b]);
    RatForm form = *branching_form(node);
    if (node.form_space.dim() <= 1) {
      tasks.push_back({b, std::move(node), std::move(form), false});
      ++pending[b];
      continue;
    }
    tasks.push_back({b, node, form, true});
    ++pending[b];
    const ScaledForm f = scale(form);
    const std::vector<int> prev = column_classes(node.chosen_points, l);
    for_each_child(f, prev, [&](const std::vector<int64_t>& y) {
      auto child = try_child(node, y);
      if (!child) return;
      auto g = branching_form(*child);
      if (!g) return;
      tasks.push_back({b, std::move(*child), std::move(*g), false});
      ++pending[b];
    });
  }

  std::vector<WsSet> branch_sets(branches.size());
  std::mutex mutex;
  std::atomic<bool> stop{false};
  std::size_t completed = 0;
  if (opts.max_branches && *opts.max_branches == 0) stop = true;

  run_parallel(opts.jobs, tasks.size(), [&](std::size_t i) {
    if (stop.load()) return;
    Task& t = tasks[i];
    WsSet local;
    if (t.emit_only)
      emit(t.form, local);
    else
      expand(t.node, t.form, local);
    std::lock_guard<std::mutex> lock(mutex);
    if (stop.load()) return;
    WsSet& bs = branch_sets[t.branch];
    if (bs.empty())
      bs = std::move(local);
    else
      bs.insert(local.begin(), local.end());
    if (--pending[t.branch] == 0) {
      if (opts.on_branch_done) opts.on_branch_done(t.branch, sorted(bs));
      ++completed;
      if (opts.max_branches && completed >= *opts.max_branches) stop = true;
    }
  });

  WsSet all;
  all.insert(WeightSystem::from_rational_form(root_form));
  for (std::size_t b = 0; b < branches.size(); ++b)
    if (pending[b] == 0) all.insert(branch_sets[b].begin(), branch_sets[b].end());
  return CandidateSet{sorted(all)};
}

std::vector<ClassRecord> classify_candidates(const std::vector<WeightSystem>& candidates,
                                             const std::set<Flag>& flags,
                                             const ClassifyOptions& opts) {
  std::vector<std::optional<ClassRecord>> slots(candidates.size());
  run_parallel(opts.jobs, candidates.size(), [&](std::size_t i) {
    const WeightSystem& ws = candidates[i];
    const PointSet ps = enumerate_points(ws);
    const bool ip = opts.verify_ip ? ip_check_verified(ps) : ip_check(ps);
    if (!ip) return;
    ClassRecord r{ws, true, {}, {}, {}, {}, {}, {}};
    if (flags.count(Flag::kSpan)) r.span = span_check(ps);
    if (flags.count(Flag::kTransverse)) r.transverse = is_transverse(ws);
    if (flags.count(Flag::kReflexive)) {
      const Hull h = hull_facets(ps);
      r.reflexive = is_reflexive(h);
      r.npoints = ps.size();
      r.nvertices = h.vertices.size();
      r.nfacets = h.facets.size();
    }
    slots[i] = std::move(r);
  });
  std::vector<ClassRecord> out;
  for (auto& s : slots)
    if (s) out.push_back(std::move(*s));
  return out;
}

std::vector<ClassRecord> classify(std::size_t l, const std::set<Flag>& flags,
                                  const ClassifyOptions& opts) {
  EnumerateOptions eo;
  eo.jobs = opts.jobs;
  return classify_candidates(enumerate_candidates(l, eo).systems, flags, opts);
}

namespace {

// Degrees reachable by nonnegative combinations, as a bit array over 0..limit.
class Reach {
 public:
  void reset(std::size_t limit) {
    limit_ = limit;
    words_.assign(limit / 64 + 1, 0);
    words_[0] = 1;
  }
  // Closure under adding n.
  void add(std::size_t n) {
    for (std::size_t step = n; step <= limit_; step *= 2) shift_or(step);
  }
  bool test(std::size_t s) const { return (words_[s / 64] >> (s % 64)) & 1U; }

 private:
  void shift_or(std::size_t s) {
    const std::size_t ws = s / 64;
    const unsigned bs = s % 64;
    for (std::size_t w = words_.size(); w-- > ws;) {
      uint64_t v = words_[w - ws] << bs;
      if (bs && w > ws) v |= words_[w - ws - 1] >> (64 - bs);
      words_[w] |= v;
    }
  }
  std::size_t limit_ = 0;
  std::vector<uint64_t> words_;
};

}  // namespace

bool passes_ip_prefilter(const WeightSystem& ws) {
  const std::size_t l = ws.size();
  const auto d = static_cast<std::size_t>(ws.degree());
  if (2 * static_cast<std::size_t>(ws.numerators().back()) > d) return false;
  thread_local Reach r;
  r.reset(d);
  for (std::size_t i = 0; i < l; ++i) r.add(static_cast<std::size_t>(ws.numerator(i)));
  for (std::size_t i = 0; i < l; ++i)
    if (!r.test(d - 2 * static_cast<std::size_t>(ws.numerator(i)))) return false;
  for (std::size_t i = 0; i < l; ++i) {
    if (i > 0 && ws.numerator(i) == ws.numerator(i - 1)) continue;
    r.reset(d);
    for (std::size_t j = 0; j < l; ++j)
      if (j != i) r.add(static_cast<std::size_t>(ws.numerator(j)));
    if (!r.test(d)) return false;
  }
  return true;
}

std::vector<ClassRecord> enumerate_by_degree(std::size_t l, int64_t dmax, unsigned jobs) {
  if (l < 2) throw InputError("enumerate_by_degree: need at least two weights");
  if (dmax > std::numeric_limits<int32_t>::max()) throw InputError("enumerate_by_degree: dmax too large");
  const int64_t dmin = static_cast<int64_t>(l);
  if (dmax < dmin) return {};
  std::vector<std::vector<ClassRecord>> by_degree(static_cast<std::size_t>(dmax - dmin + 1));
  // Largest degrees first: they carry most of the work.
  run_parallel(jobs, by_degree.size(), [&](std::size_t idx) {
    const int64_t d = dmax - static_cast<int64_t>(idx);
    std::vector<ClassRecord>& out = by_degree[static_cast<std::size_t>(d - dmin)];
    std::vector<int64_t> n(l);
    auto rec = [&](auto&& self, std::size_t i, int64_t lo, int64_t remaining, int64_t g) -> void {
      const auto left = static_cast<int64_t>(l - i);
      if (i + 1 == l) {
        if (remaining < lo || std::gcd(g, remaining) != 1) return;
        n[i] = remaining;
        const WeightSystem ws = WeightSystem::canonicalize(n, d);
        if (!passes_ip_prefilter(ws)) return;
        if (ip_check(enumerate_points(ws))) out.push_back(ClassRecord{ws, true, {}, {}, {}, {}, {}, {}});
        return;
      }
      for (int64_t v = lo; v * left <= remaining; ++v) {
        n[i] = v;
        self(self, i + 1, v, remaining - v, std::gcd(g, v));
      }
    };
    rec(rec, 0, 1, d, 0);
  });
  std::vector<ClassRecord> all;
  for (auto& v : by_degree)
    for (auto& r : v) all.push_back(std::move(r));
  return all;
}

TableOneStats stats(const std::vector<ClassRecord>& records) {
  TableOneStats t;
  for (const auto& r : records) {
    if (!r.span || !r.transverse) throw InputError("stats: record lacks span or transverse flag");
    const bool half = r.half();
    const bool p4 = *r.transverse;
    for (std::size_t row = 0; row < 2; ++row) {
      if (row == 0 && !*r.span) continue;
      auto& c = t.counts[row];
      if (p4) {
        ++c[half ? 0 : 1];
        ++c[2];
      }
      ++c[half ? 3 : 4];
      ++c[5];
    }
  }
  return t;
}

}  // namespace cyw
