// Acceptance suite: one PASS/FAIL line per criterion.
//
//   cyw_acceptance --cli path/to/cyw --work scratch-dir [--only 1,2,6a] [--jobs N]
#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <csignal>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "cyw/classifier.hpp"
#include "cyw/interior_point.hpp"
#include "cyw/io.hpp"
#include "cyw/polytope.hpp"
#include "cyw/transversality.hpp"
#include "support/oracles.hpp"
#include "support/table_data.hpp"

namespace fs = std::filesystem;
using namespace cyw;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f s", s);
  return buf;
}

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Collects failures; the first few are kept for the report.
struct Checker {
  bool ok = true;
  std::vector<std::string> notes;
  std::size_t failures = 0;
  void expect(bool cond, const std::string& what) {
    if (cond) return;
    ok = false;
    if (++failures <= 5) notes.push_back(what);
  }
  std::string summary() const {
    std::string s;
    for (const auto& n : notes) s += (s.empty() ? "" : "; ") + n;
    if (failures > notes.size()) s += "; +" + std::to_string(failures - notes.size()) + " more";
    return s;
  }
};

std::vector<WeightSystem> systems_of(const std::vector<ClassRecord>& rs) {
  std::vector<WeightSystem> out;
  for (const auto& r : rs) out.push_back(r.ws);
  return out;
}

std::vector<WeightSystem> sorted_table(const std::vector<testdata::Row>& rows) {
  std::vector<WeightSystem> out;
  for (const auto& r : rows) out.push_back(r.ws);
  std::sort(out.begin(), out.end());
  return out;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// Runs argv with stdout and stderr sent to `log`; returns the exit status.
pid_t spawn(const std::vector<std::string>& argv, const fs::path& log) {
  const pid_t pid = fork();
  if (pid == 0) {
    FILE* f = std::fopen(log.c_str(), "w");
    if (f) {
      dup2(fileno(f), 1);
      dup2(fileno(f), 2);
    }
    std::vector<char*> args;
    for (const auto& a : argv) args.push_back(const_cast<char*>(a.c_str()));
    args.push_back(nullptr);
    execv(args[0], args.data());
    _exit(127);
  }
  return pid;
}

int wait_exit(pid_t pid) {
  int status = 0;
  waitpid(pid, &status, 0);
  if (WIFEXITED(status)) return WEXITSTATUS(status);
  return 128 + (WIFSIGNALED(status) ? WTERMSIG(status) : 0);
}

int run(const std::vector<std::string>& argv, const fs::path& log) { return wait_exit(spawn(argv, log)); }

std::size_t count_branch_lines(const fs::path& manifest) {
  std::ifstream in(manifest);
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line))
    if (line.find("\"type\":\"branch\"") != std::string::npos) ++n;
  return n;
}

class Suite {
 public:
  Suite(std::string cli, fs::path work, unsigned jobs) : cli_(std::move(cli)), work_(std::move(work)), jobs_(jobs) {
    fs::create_directories(work_);
  }

  const std::vector<WeightSystem>& candidates5() {
    if (!cands5_) {
      const auto t0 = Clock::now();
      EnumerateOptions eo;
      eo.jobs = jobs_;
      cands5_ = enumerate_candidates(5, eo).systems;
      enum5_seconds_ = seconds_since(t0);
    }
    return *cands5_;
  }

  // classify(5) with span and transverse, shared by the criteria that need it.
  const std::vector<ClassRecord>& l5() {
    if (!l5_) {
      candidates5();
      const auto t0 = Clock::now();
      ClassifyOptions co;
      co.jobs = jobs_;
      l5_ = classify_candidates(*cands5_, {Flag::kSpan, Flag::kTransverse}, co);
      l5_seconds_ = enum5_seconds_ + seconds_since(t0);
    }
    return *l5_;
  }

  Outcome c1() {
    const auto t0 = Clock::now();
    const auto rs = classify(3, {});
    const double s = seconds_since(t0);
    const std::vector<WeightSystem> want{WeightSystem::parse("1 1 1 3"), WeightSystem::parse("1 1 2 4"),
                                         WeightSystem::parse("1 2 3 6")};
    Checker c;
    c.expect(systems_of(rs) == want, "l=3 set differs");
    c.expect(s < 1.0, "took " + fmt_seconds(s));
    return {c.ok, c.ok ? std::to_string(rs.size()) + " systems in " + fmt_seconds(s) : c.summary()};
  }

  Outcome c2() {
    const auto t0 = Clock::now();
    const auto rs = classify(4, {Flag::kSpan});
    const double s = seconds_since(t0);
    const auto table = testdata::load("l4_systems.txt", 4);
    Checker c;
    c.expect(rs.size() == 95, std::to_string(rs.size()) + " systems");
    c.expect(systems_of(rs) == sorted_table(table), "differs from the l=4 table");
    std::size_t span = 0;
    std::map<WeightSystem, bool> flag;
    for (const auto& r : table) flag[r.ws] = r.flag;
    for (const auto& r : rs) {
      span += *r.span;
      c.expect(flag.count(r.ws) && flag[r.ws] == *r.span, "span flag of " + r.ws.to_string());
    }
    c.expect(span == 58, std::to_string(span) + " span");
    c.expect(s < 60.0, "took " + fmt_seconds(s));
    return {c.ok, c.ok ? "95 systems, 58 span, line-for-line equal, " + fmt_seconds(s) : c.summary()};
  }

  Outcome c3() {
    const auto rs = classify(4, {Flag::kTransverse, Flag::kReflexive});
    std::size_t t = 0, r = 0;
    for (const auto& x : rs) {
      t += *x.transverse;
      r += *x.reflexive;
    }
    const bool ok = rs.size() == 95 && t == 95 && r == 95;
    return {ok, std::to_string(rs.size()) + " systems, " + std::to_string(t) + " transverse, " +
                    std::to_string(r) + " reflexive"};
  }

  Outcome c4() {
    const fs::path out = work_ / "ws5.jsonl";
    const auto t0 = Clock::now();
    const int code = run({cli_, "classify", "--nweights", "5", "--flags", "span,transverse", "--jobs",
                          std::to_string(jobs_), "--format", "jsonl", "--out", out.string()},
                         work_ / "c4.log");
    const double s = seconds_since(t0);
    if (code != 0) return {false, "cli exit " + std::to_string(code) + ", see " + (work_ / "c4.log").string()};
    l5_ = read_records(out);
    l5_seconds_ = s;
    const TableOneStats t = stats(*l5_);
    const std::array<std::size_t, 6> span{1309, 2860, 4169, 14872, 23858, 38730};
    const std::array<std::size_t, 6> total{2390, 5165, 7555, 97036, 86990, 184026};
    Checker c;
    c.expect(l5_->size() == 184026, std::to_string(l5_->size()) + " systems");
    c.expect(t.counts[0] == span, "span row differs");
    c.expect(t.counts[1] == total, "total row differs");
    std::ostringstream os;
    os << l5_->size() << " systems, count table equal cell-for-cell, " << fmt_seconds(s) << " with " << jobs_
       << " jobs";
    return {c.ok, c.ok ? os.str() : c.summary() + "\n" + render_table_one(t)};
  }

  Outcome c5() {
    const auto& rs = l5();
    const auto table = testdata::load("l5_degree_upto_20.txt", 5);
    std::map<WeightSystem, bool> want;
    for (const auto& r : table) want[r.ws] = r.flag;
    Checker c;
    std::size_t n = 0;
    for (const auto& r : rs) {
      if (r.ws.degree() > 20) continue;
      ++n;
      auto it = want.find(r.ws);
      c.expect(it != want.end(), r.ws.to_string() + " not in the table");
      if (it != want.end()) c.expect(it->second == *r.transverse, "transverse flag of " + r.ws.to_string());
      c.expect(*r.span, r.ws.to_string() + " lacks span");
    }
    c.expect(n == want.size(), std::to_string(n) + " systems vs " + std::to_string(want.size()));
    c.expect(l5_seconds_ < 60.0, "classify(5) took " + fmt_seconds(l5_seconds_));
    return {c.ok, c.ok ? std::to_string(n) + " systems equal the table, flags equal, all span; classify(5) " +
                             fmt_seconds(l5_seconds_)
                       : c.summary()};
  }

  Outcome sweep(int64_t dmax) {
    const auto t0 = Clock::now();
    const auto brute = systems_of(enumerate_by_degree(5, dmax, jobs_));
    const double s = seconds_since(t0);
    std::vector<WeightSystem> rec;
    for (const auto& r : l5())
      if (r.ws.degree() <= dmax) rec.push_back(r.ws);
    const bool ok = brute == rec;
    std::ostringstream os;
    os << "brute(5, " << dmax << ") has " << brute.size() << " systems, restricted classify(5) has "
       << rec.size() << (ok ? ", equal" : ", DIFFERENT") << "; sweep " << fmt_seconds(s);
    return {ok, os.str()};
  }

  Outcome c7() {
    const auto& rs = l5();
    const ClassRecord* top = nullptr;
    const ClassRecord* top_odd = nullptr;
    for (const auto& r : rs) {
      if (!top || r.ws.degree() > top->ws.degree()) top = &r;
      if (2 * r.ws.numerators().back() < r.ws.degree() && (!top_odd || r.ws.degree() > top_odd->ws.degree()))
        top_odd = &r;
    }
    Checker c;
    c.expect(top && top->ws.to_string() == "41 42 498 1162 1743 3486" && *top->transverse,
             "max d: " + (top ? top->ws.to_string() : "none"));
    c.expect(top_odd && top_odd->ws.to_string() == "21 41 249 581 851 1743" && *top_odd->transverse,
             "max d with 2n5<d: " + (top_odd ? top_odd->ws.to_string() : "none"));
    std::size_t unique_top = 0;
    for (const auto& r : rs) unique_top += r.ws.degree() == 3486;
    c.expect(unique_top == 1, "several systems at d=3486");
    return {c.ok, c.ok ? "(41,42,498,1162,1743;3486) y and (21,41,249,581,851;1743) y" : c.summary()};
  }

  Outcome c8() {
    Checker c;
    const auto ws = WeightSystem::parse("1 1 1 4 5 12");
    const PointSet ps = enumerate_points(ws);
    auto v = vertices(ps);
    std::vector<std::vector<int64_t>> want{{12, 0, 0, 0, 0}, {0, 12, 0, 0, 0}, {0, 0, 12, 0, 0}, {0, 0, 0, 3, 0},
                                           {2, 0, 0, 0, 2},  {0, 2, 0, 0, 2},  {0, 0, 2, 0, 2}};
    std::sort(want.begin(), want.end());
    c.expect(v == want, "vertex list differs");
    const Hull h = hull_facets(ps);
    bool h6 = false;
    for (const auto& f : h.facets) {
      bool all = !f.points.empty();
      for (auto k : f.points) all = all && 2 * ps.coord(3, k) + 3 * ps.coord(4, k) == 6;
      // The hyperplane must be the one through these points and no other.
      std::vector<IntVector> diffs;
      for (auto k : f.points) {
        IntVector d;
        for (std::size_t i = 0; i < 5; ++i) d.push_back(Integer(ps.coord(i, k) - ps.coord(i, f.points[0])));
        diffs.push_back(d);
      }
      if (all && rank(diffs) == 3) h6 = f.offset == Integer(1);
    }
    c.expect(h6, "2x4+3x5=6 is not a facet at distance 1");
    const auto pm = pairing_matrix(ps, h);
    std::vector<std::vector<long>> m;
    for (const auto& row : pm.entries) {
      std::vector<long> r;
      for (const auto& x : row) r.push_back(x.to_int64());
      m.push_back(r);
    }
    c.expect(oracle::equal_up_to_permutation(m, {{12, 0, 0, 0, 2, 0, 0},
                                                 {0, 12, 0, 0, 0, 2, 0},
                                                 {0, 0, 12, 0, 0, 0, 2},
                                                 {0, 0, 0, 3, 0, 0, 0},
                                                 {0, 0, 0, 0, 2, 2, 2},
                                                 {6, 6, 6, 0, 0, 0, 0}}),
             "pairing matrix differs");
    for (const char* line : {"1 1 1 3 4 10", "1 1 1 4 5 12"}) {
      const auto w = WeightSystem::parse(line);
      c.expect(ip_check_verified(enumerate_points(w)), std::string(line) + " not IP");
      c.expect(!is_transverse(w), std::string(line) + " transverse");
    }
    return {c.ok, c.ok ? "7 vertices, H6 at distance 1, pairing matrix equal up to permutation; "
                         "(1,1,1,3,4;10), (1,1,1,4,5;12) IP and not transverse"
                       : c.summary()};
  }

  Outcome c9() {
    Checker c;
    const auto ws = WeightSystem::parse("40 41 486 1134 1701 3402");
    const PointSet ps = enumerate_points(ws);
    std::vector<std::vector<int64_t>> cols{
        {83, 2, 0, 0, 0}, {1, 82, 0, 0, 0}, {0, 0, 7, 0, 0}, {0, 0, 0, 3, 0}, {0, 0, 0, 0, 2}};
    std::sort(cols.begin(), cols.end());
    c.expect(vertices(ps) == cols, "vertices differ");
    const Hull h = hull_facets(ps);
    c.expect(h.facets.size() == 5, std::to_string(h.facets.size()) + " facets");
    c.expect(!span_check(ps), "span=true");
    const auto pm = pairing_matrix(ps, h);
    std::vector<std::vector<long>> m;
    for (const auto& row : pm.entries) {
      std::vector<long> r;
      for (const auto& x : row) r.push_back(x.to_int64());
      m.push_back(r);
    }
    c.expect(oracle::equal_up_to_permutation(
                 m, {{84, 0, 0, 0, 0}, {0, 84, 0, 0, 0}, {0, 0, 7, 0, 0}, {0, 0, 0, 3, 0}, {0, 0, 0, 0, 2}}),
             "pairing matrix is not diag(84,84,7,3,2)");
    return {c.ok, c.ok ? "simplex with the listed vertices, span=false, pairing diag(84,84,7,3,2)" : c.summary()};
  }

  Outcome c10() {
    Checker c;
    std::ostringstream os;

    // Walk against oracle.
    std::size_t compared = 0, inconclusive = 0;
    auto compare = [&](const WeightSystem& ws) {
      const PointSet ps = enumerate_points(ws);
      const bool o = ip_oracle(ps);
      if (auto w = ip_walk(ps)) {
        ++compared;
        c.expect(*w == o, "walk/oracle disagree on " + ws.to_string());
      } else {
        ++inconclusive;
      }
    };
    for (const auto& ws : enumerate_candidates(4).systems) compare(ws);
    for (int64_t d = 5; d <= 20; ++d)
      for (int64_t a = 1; 5 * a <= d; ++a)
        for (int64_t b = a; a + 4 * b <= d; ++b)
          for (int64_t e3 = b; a + b + 3 * e3 <= d; ++e3)
            for (int64_t e4 = e3; a + b + e3 + 2 * e4 <= d; ++e4) {
              const int64_t e5 = d - a - b - e3 - e4;
              if (std::gcd(std::gcd(std::gcd(a, b), std::gcd(e3, e4)), e5) != 1) continue;
              compare(WeightSystem::canonicalize({a, b, e3, e4, e5}, d));
            }
    os << "walk=oracle on " << compared << " systems (" << inconclusive << " inconclusive)";

    // Facets against the subset oracle.
    std::size_t hulls = 0;
    auto facet_check = [&](const std::vector<IntVector>& pts) {
      std::vector<std::vector<long>> raw;
      for (const auto& p : pts) {
        std::vector<long> r;
        for (const auto& x : p) r.push_back(x.to_int64());
        raw.push_back(r);
      }
      std::set<std::pair<std::vector<long>, long>> got;
      for (const auto& f : convex_hull_facets(pts)) {
        std::vector<long> n;
        for (const auto& x : f.normal) n.push_back(x.to_int64());
        got.insert({n, f.offset.to_int64()});
      }
      c.expect(got == oracle::brute_facets(raw), "facet set differs from the subset oracle");
      ++hulls;
    };
    for (const auto& r : classify(4, {}))
      if (count_points(r.ws) <= 30) facet_check(hull_facets(enumerate_points(r.ws)).chart_points);
    for (const auto& r : l5())
      if (count_points(r.ws) <= 30) facet_check(hull_facets(enumerate_points(r.ws)).chart_points);
    std::mt19937 rng(1009);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t m = 2 + trial % 3;
      std::vector<IntVector> pts;
      const std::size_t n = m + 1 + rng() % (30 - m);
      for (std::size_t k = 0; k < n; ++k) {
        IntVector p(m);
        for (auto& x : p) x = Integer(long(rng() % 11) - 5);
        pts.push_back(p);
      }
      std::sort(pts.begin(), pts.end());
      pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
      try {
        facet_check(pts);
      } catch (const DimensionDeficient&) {
      }
    }
    os << "; " << hulls << " hulls match the subset oracle";

    // Reflexivity on a fixed-seed sample.
    const auto& rs = l5();
    std::vector<std::size_t> idx(rs.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::vector<std::size_t> sample;
    std::sample(idx.begin(), idx.end(), std::back_inserter(sample), 1200, std::mt19937(20240601));
    std::size_t refl = 0;
    for (auto k : sample) {
      const bool r = is_reflexive(rs[k].ws);
      refl += r;
      c.expect(r, rs[k].ws.to_string() + " not reflexive");
    }
    for (const auto& r : classify(3, {Flag::kReflexive})) c.expect(*r.reflexive, r.ws.to_string() + " not reflexive");
    os << "; " << refl << "/" << sample.size() << " sampled l=5 systems reflexive";

    // Transverse implies IP over every candidate.
    std::size_t transverse = 0;
    for (std::size_t l : {std::size_t{4}, std::size_t{5}}) {
      const auto& cands = l == 5 ? candidates5() : enumerate_candidates(4).systems;
      for (const auto& ws : cands) {
        if (!is_transverse(ws)) continue;
        ++transverse;
        c.expect(ip_check(ws), ws.to_string() + " transverse but not IP");
      }
    }
    os << "; " << transverse << " transverse candidates all IP";

    // Pyramids.
    std::size_t nonempty = 0;
    for (int trial = 0; trial < 100; ++trial) nonempty += random_pyramid(rng, c);
    PyramidSpec counter{{{0, 0, 0, 0, 0}, {2, 0, 0, 0, 0}, {0, 2, 0, 0, 0}, {0, 0, 2, 0, 0}, {0, 0, 0, 2, 0}},
                        {2, 2, 2, 2, 4},
                        2};
    const bool counter_empty = pyramid_gap_points(counter).empty();
    c.expect(counter_empty, "five-dimensional counterexample has gap points");
    os << "; " << nonempty << "/100 random pyramids have gap points, counterexample "
       << (counter_empty ? "empty" : "NOT empty");
    return {c.ok, c.ok ? os.str() : c.summary() + " | " + os.str()};
  }

  Outcome c11() {
    Checker c;
    const std::string l4 = "4";
    auto classify_to = [&](const std::vector<std::string>& extra, const std::string& name) {
      std::vector<std::string> argv{cli_, "classify", "--nweights", l4};
      argv.insert(argv.end(), extra.begin(), extra.end());
      argv.push_back("--out");
      argv.push_back((work_ / name).string());
      return run(argv, work_ / (name + ".log"));
    };
    c.expect(classify_to({"--jobs", "1"}, "j1.txt") == 0, "jobs 1 run failed");
    c.expect(classify_to({"--jobs", "8"}, "j8.txt") == 0, "jobs 8 run failed");
    const std::string j1 = slurp(work_ / "j1.txt");
    c.expect(!j1.empty() && j1 == slurp(work_ / "j8.txt"), "jobs 1 and jobs 8 outputs differ");

    const fs::path rd = work_ / "run4";
    fs::remove_all(rd);
    const int stop = classify_to({"--run-dir", rd.string(), "--max-branches", "1"}, "partial.txt");
    c.expect(stop == 3, "interrupted run exit " + std::to_string(stop));
    c.expect(count_branch_lines(rd / "manifest.jsonl") == 1, "manifest after interruption");
    c.expect(classify_to({"--run-dir", rd.string(), "--resume", "--jobs", "2"}, "resumed.txt") == 0,
             "resume failed");
    c.expect(slurp(work_ / "resumed.txt") == j1, "resumed output differs");

    // A hard kill of an l=5 run part way through, then resume.
    const fs::path rd5 = work_ / "run5";
    fs::remove_all(rd5);
    const fs::path out5 = work_ / "kill5.txt";
    const pid_t pid = spawn({cli_, "classify", "--nweights", "5", "--jobs", "1", "--run-dir", rd5.string(), "--out",
                             out5.string()},
                            work_ / "kill5.log");
    bool killed = false;
    for (int i = 0; i < 6000; ++i) {
      if (count_branch_lines(rd5 / "manifest.jsonl") >= 1) {
        killed = kill(pid, SIGKILL) == 0;
        break;
      }
      if (waitpid(pid, nullptr, WNOHANG) == pid) break;
      std::this_thread::sleep_for(std::chrono::milliseconds(50));
    }
    const int status = wait_exit(pid);
    killed = killed && status == 128 + SIGKILL;
    const std::size_t done_before = count_branch_lines(rd5 / "manifest.jsonl");
    const int resumed = run({cli_, "classify", "--nweights", "5", "--jobs", std::to_string(jobs_), "--run-dir",
                             rd5.string(), "--resume", "--out", out5.string()},
                            work_ / "resume5.log");
    c.expect(resumed == 0, "l=5 resume exit " + std::to_string(resumed));
    std::ostringstream expect5;
    write_records(expect5, l5(), Format::kText);
    c.expect(slurp(out5) == expect5.str(), "l=5 output after kill and resume differs");

    std::ostringstream os;
    os << "l=4 byte-identical for jobs 1/8 and after interrupt+resume; l=5 "
       << (killed ? "SIGKILL after " + std::to_string(done_before) + " of 7 branches" : "run finished before kill")
       << ", resumed output identical";
    return {c.ok, c.ok ? os.str() : c.summary()};
  }

 private:
  // A lattice pyramid in Z^n, n <= 4, whose half-height pyramid is integral:
  // base vertices agree with the peak mod 2. Gap points are checked against
  // Cramer's rule on the simplex base.
  bool random_pyramid(std::mt19937& rng, Checker& c) {
    const std::size_t n = 2 + rng() % 3;
    const long h = 2 + static_cast<long>(rng() % 3);
    std::vector<long> peak(n);
    for (std::size_t i = 0; i + 1 < n; ++i) peak[i] = static_cast<long>(rng() % 9) - 4;
    peak[n - 1] = 2 * h;
    std::vector<std::vector<long>> base;
    while (true) {
      base.clear();
      for (std::size_t k = 0; k < n; ++k) {
        std::vector<long> v(n, 0);
        for (std::size_t i = 0; i + 1 < n; ++i) {
          const long par = ((peak[i] % 2) + 2) % 2;
          v[i] = par + 2 * (static_cast<long>(rng() % 7) - 3);
        }
        base.push_back(v);
      }
      oracle::Matrix m;
      for (const auto& v : base) {
        std::vector<long> row(v.begin(), v.end() - 1);
        row.push_back(1);
        m.push_back(row);
      }
      if (oracle::det_long(m) != 0) break;
    }
    PyramidSpec spec;
    for (const auto& v : base) spec.base_vertices.push_back(to_int_vector(v));
    spec.peak = to_int_vector(peak);
    spec.height = h;
    const auto gap = pyramid_gap_points(spec);

    // Membership by barycentric signs: columns (vertex, 1).
    std::vector<std::vector<long>> verts = base;
    verts.push_back(peak);
    auto inside = [&](const std::vector<long>& z) {
      oracle::Matrix m(n + 1, std::vector<long>(n + 1));
      for (std::size_t j = 0; j <= n; ++j) {
        for (std::size_t i = 0; i < n; ++i) m[i][j] = verts[j][i];
        m[n][j] = 1;
      }
      const long det = oracle::det_long(m);
      for (std::size_t j = 0; j <= n; ++j) {
        auto mj = m;
        for (std::size_t i = 0; i < n; ++i) mj[i][j] = z[i];
        mj[n][j] = 1;
        if ((det > 0 ? 1 : -1) * oracle::det_long(mj) < 0) return false;
      }
      return true;
    };
    std::set<std::vector<long>> want;
    std::vector<long> lo(n - 1, 100), hi(n - 1, -100);
    for (const auto& v : verts)
      for (std::size_t i = 0; i + 1 < n; ++i) {
        lo[i] = std::min(lo[i], v[i]);
        hi[i] = std::max(hi[i], v[i]);
      }
    std::vector<long> z(n);
    std::function<void(std::size_t)> walk = [&](std::size_t i) {
      if (i + 1 == n) {
        if (inside(z)) want.insert(z);
        return;
      }
      for (long x = lo[i]; x <= hi[i]; ++x) {
        z[i] = x;
        walk(i + 1);
      }
    };
    for (long t = 1; t < h; ++t) {
      z[n - 1] = t;
      walk(0);
    }
    std::set<std::vector<long>> got;
    for (const auto& p : gap) {
      std::vector<long> r;
      for (const auto& x : p) r.push_back(x.to_int64());
      got.insert(r);
    }
    c.expect(got == want, "pyramid gap points differ from the barycentric oracle");
    c.expect(!gap.empty(), "empty gap for a pyramid in dimension " + std::to_string(n));
    return !gap.empty();
  }

  std::string cli_;
  fs::path work_;
  unsigned jobs_;
  std::optional<std::vector<WeightSystem>> cands5_;
  std::optional<std::vector<ClassRecord>> l5_;
  double enum5_seconds_ = 0;
  double l5_seconds_ = 0;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::string cli, work = "acceptance-work", only;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  app.add_option("--cli", cli, "Path to the cyw executable")->required();
  app.add_option("--work", work, "Scratch directory");
  app.add_option("--only", only, "Comma list of criteria (default: all)");
  app.add_option("--jobs", jobs, "Worker threads for the heavy runs");
  CLI11_PARSE(app, argc, argv);

  Suite suite(cli, work, jobs);
  const std::vector<std::pair<std::string, std::function<Outcome()>>> all{
      {"1", [&] { return suite.c1(); }},
      {"2", [&] { return suite.c2(); }},
      {"3", [&] { return suite.c3(); }},
      {"4", [&] { return suite.c4(); }},
      {"5", [&] { return suite.c5(); }},
      {"6a", [&] { return suite.sweep(30); }},
      {"6b", [&] { return suite.sweep(230); }},
      {"7", [&] { return suite.c7(); }},
      {"8", [&] { return suite.c8(); }},
      {"9", [&] { return suite.c9(); }},
      {"10", [&] { return suite.c10(); }},
      {"11", [&] { return suite.c11(); }},
  };
  std::set<std::string> selected;
  for (std::stringstream ss(only); ss.good();) {
    std::string item;
    std::getline(ss, item, ',');
    if (!item.empty()) selected.insert(item);
  }
  bool all_ok = true;
  for (const auto& [id, fn] : all) {
    if (!selected.empty() && !selected.count(id)) continue;
    Outcome o;
    const auto t0 = Clock::now();
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all_ok = all_ok && o.ok;
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << id << ": " << o.detail << " ["
              << fmt_seconds(seconds_since(t0)) << "]" << std::endl;
  }
  return all_ok ? 0 : 1;
}
