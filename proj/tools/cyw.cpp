// cyw: enumerate and analyze IP weight systems.
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cyw/classifier.hpp"
#include "cyw/interior_point.hpp"
#include "cyw/io.hpp"
#include "cyw/polytope.hpp"
#include "cyw/transversality.hpp"

namespace {

constexpr int kExitInput = 1;
constexpr int kExitCrossCheck = 2;
constexpr int kExitInterrupted = 3;

const char* yn(bool b) { return b ? "true" : "false"; }

std::string summary(const std::vector<cyw::ClassRecord>& records, const std::set<cyw::Flag>& flags) {
  std::ostringstream os;
  os << records.size() << " systems";
  auto count = [&](auto member) {
    std::size_t c = 0;
    for (const auto& r : records)
      if ((r.*member).value_or(false)) ++c;
    return c;
  };
  if (flags.count(cyw::Flag::kSpan)) os << ", " << count(&cyw::ClassRecord::span) << " span";
  if (flags.count(cyw::Flag::kTransverse))
    os << ", " << count(&cyw::ClassRecord::transverse) << " transverse";
  if (flags.count(cyw::Flag::kReflexive))
    os << ", " << count(&cyw::ClassRecord::reflexive) << " reflexive";
  return os.str();
}

// Records go to --out or stdout; the summary to stdout when --out is set,
// otherwise stderr.
void emit(const std::vector<cyw::ClassRecord>& records, const std::string& out, cyw::Format format,
          const std::string& line) {
  if (out.empty()) {
    cyw::write_records(std::cout, records, format);
    std::cerr << line << '\n';
    return;
  }
  std::ofstream os(out);
  if (!os) throw cyw::InputError("cannot write " + out);
  cyw::write_records(os, records, format);
  if (!os.flush()) throw std::runtime_error("write failed: " + out);
  std::cout << line << '\n';
}

struct ClassifyArgs {
  std::size_t l = 0;
  std::string flags;
  unsigned jobs = 1;
  std::string out;
  std::string format = "text";
  std::string run_dir;
  bool resume = false;
  bool verify = false;
  std::size_t max_branches = 0;
};

int cmd_classify(const ClassifyArgs& a) {
  if (a.l < 3 || a.l > 5) throw cyw::InputError("--nweights must be 3, 4 or 5");
  if (a.resume && a.run_dir.empty()) throw cyw::InputError("--resume needs --run-dir");
  const std::set<cyw::Flag> flags = cyw::parse_flags(a.flags);
  const cyw::Format format = cyw::parse_format(a.format);

  std::optional<cyw::RunDirectory> rd;
  std::vector<cyw::WeightSystem> candidates;
  cyw::EnumerateOptions eo;
  eo.jobs = a.jobs;
  if (!a.run_dir.empty()) {
    rd.emplace(a.run_dir, a.l, "classify", a.out, a.resume);
    eo.skip_branches = rd->completed();
    for (std::size_t b : eo.skip_branches) {
      auto v = rd->load_branch(b);
      candidates.insert(candidates.end(), v.begin(), v.end());
    }
    eo.on_branch_done = [&](std::size_t b, const std::vector<cyw::WeightSystem>& v) {
      rd->complete_branch(b, v);
    };
  }
  if (a.max_branches > 0) eo.max_branches = a.max_branches;
  const std::size_t nbranches = cyw::root_branches(a.l).size();
  auto found = cyw::enumerate_candidates(a.l, eo);
  if (rd && rd->completed().size() < nbranches) {
    std::cerr << "interrupted after " << rd->completed().size() << " of " << nbranches
              << " branches; rerun with --resume\n";
    return kExitInterrupted;
  }
  if (!rd && eo.max_branches) {
    std::cerr << "--max-branches without --run-dir discards work\n";
    return kExitInterrupted;
  }
  candidates.insert(candidates.end(), found.systems.begin(), found.systems.end());
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  cyw::ClassifyOptions co;
  co.jobs = a.jobs;
  co.verify_ip = a.verify;
  const auto records = cyw::classify_candidates(candidates, flags, co);
  emit(records, a.out, format, summary(records, flags));
  if (rd) rd->finish();
  return 0;
}

int cmd_brute(std::size_t l, int64_t dmax, unsigned jobs, const std::string& out,
              const std::string& format) {
  if (l < 3) throw cyw::InputError("--nweights must be at least 3");
  const auto records = cyw::enumerate_by_degree(l, dmax, jobs);
  emit(records, out, cyw::parse_format(format), summary(records, {}));
  return 0;
}

int cmd_check(const std::string& kind, const std::string& line) {
  const cyw::WeightSystem ws = cyw::WeightSystem::parse(line);
  const cyw::PointSet ps = cyw::enumerate_points(ws);
  const bool ip = cyw::ip_check_verified(ps);
  std::cout << ws.to_string() << '\n';
  if (kind == "ip") {
    std::cout << "ip=" << yn(ip) << '\n';
  } else if (kind == "span") {
    std::cout << "span=" << yn(cyw::span_check(ps)) << '\n';
  } else if (kind == "transverse") {
    std::cout << "transverse=" << yn(cyw::is_transverse(ws)) << '\n';
  } else if (kind == "reflexive") {
    if (!ip) throw cyw::NotInteriorPoint(ws.to_string() + " lacks the IP property");
    std::cout << "reflexive=" << yn(cyw::is_reflexive(cyw::hull_facets(ps))) << '\n';
  } else if (kind == "all") {
    std::cout << "ip=" << yn(ip) << " span=" << yn(cyw::span_check(ps));
    if (ip) {
      const cyw::Hull h = cyw::hull_facets(ps);
      std::cout << " reflexive=" << yn(cyw::is_reflexive(h));
      std::cout << " transverse=" << yn(cyw::is_transverse(ws)) << '\n';
      std::cout << "npoints=" << ps.size() << " nvertices=" << h.vertices.size()
                << " nfacets=" << h.facets.size() << '\n';
    } else {
      std::cout << " reflexive=n/a transverse=" << yn(cyw::is_transverse(ws)) << '\n';
      std::cout << "npoints=" << ps.size() << '\n';
    }
  } else {
    throw cyw::InputError("unknown check '" + kind + "'");
  }
  return 0;
}

int cmd_pairing(const std::string& line) {
  const cyw::WeightSystem ws = cyw::WeightSystem::parse(line);
  const cyw::PointSet ps = cyw::enumerate_points(ws);
  if (!cyw::ip_check_verified(ps)) throw cyw::NotInteriorPoint(ws.to_string() + " lacks the IP property");
  const cyw::Hull h = cyw::hull_facets(ps);
  const cyw::PairingMatrix pm = cyw::pairing_matrix(ps, h);
  std::cout << "vertices " << pm.vertices.size() << '\n';
  for (const auto& v : pm.vertices) {
    for (std::size_t i = 0; i < v.size(); ++i) std::cout << (i ? " " : "") << v[i];
    std::cout << '\n';
  }
  std::cout << "facets " << pm.duals.size() << " (constant coefficients)\n";
  for (const auto& d : pm.duals) {
    std::cout << d.constant;
    for (const auto& c : d.coeffs) std::cout << ' ' << c;
    std::cout << '\n';
  }
  std::cout << "pairing " << pm.entries.size() << 'x' << pm.vertices.size() << '\n';
  for (const auto& row : pm.entries) {
    for (std::size_t j = 0; j < row.size(); ++j) std::cout << (j ? " " : "") << row[j];
    std::cout << '\n';
  }
  return 0;
}

int cmd_stats(const std::string& path) {
  const auto records = cyw::read_records(std::filesystem::path(path));
  std::cout << cyw::render_table_one(cyw::stats(records));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weight systems with the interior point property"};
  app.require_subcommand(1);

  ClassifyArgs ca;
  auto* classify = app.add_subcommand("classify", "Enumerate IP weight systems by recursive search");
  classify->add_option("--nweights,-l", ca.l, "Number of weights (3, 4 or 5)")->required();
  classify->add_option("--flags", ca.flags, "Comma list of span,transverse,reflexive");
  classify->add_option("--jobs,-j", ca.jobs, "Worker threads")->check(CLI::PositiveNumber);
  classify->add_option("--out,-o", ca.out, "Output file (default stdout)");
  classify->add_option("--format", ca.format, "text or jsonl")->check(CLI::IsMember({"text", "jsonl"}));
  classify->add_option("--run-dir", ca.run_dir, "Checkpoint directory");
  classify->add_flag("--resume", ca.resume, "Continue the run in --run-dir");
  classify->add_flag("--verify", ca.verify, "Cross-check every IP decision with the exact oracle");
  classify->add_option("--max-branches", ca.max_branches)->group("");

  std::size_t bl = 0;
  int64_t dmax = 0;
  unsigned bjobs = 1;
  std::string bout, bformat = "text";
  auto* brute = app.add_subcommand("brute", "Test every weight system up to a degree");
  brute->add_option("--nweights,-l", bl, "Number of weights")->required();
  brute->add_option("--dmax", dmax, "Largest degree")->required();
  brute->add_option("--jobs,-j", bjobs, "Worker threads")->check(CLI::PositiveNumber);
  brute->add_option("--out,-o", bout, "Output file (default stdout)");
  brute->add_option("--format", bformat, "text or jsonl")->check(CLI::IsMember({"text", "jsonl"}));

  std::string kind, check_line;
  auto* check = app.add_subcommand("check", "Flags of a single weight system");
  check->add_option("kind", kind, "ip, span, transverse, reflexive or all")
      ->required()
      ->check(CLI::IsMember({"ip", "span", "transverse", "reflexive", "all"}));
  check->add_option("system", check_line, "\"n_1 ... n_l d\"")->required();

  std::string pairing_line;
  auto* pairing = app.add_subcommand("pairing", "Vertices, dual vertices and pairing matrix");
  pairing->add_option("system", pairing_line, "\"n_1 ... n_l d\"")->required();

  std::string stats_path;
  auto* stats = app.add_subcommand("stats", "Table of counts from a JSONL file with span and transverse");
  stats->add_option("input", stats_path, "JSONL records")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*classify) return cmd_classify(ca);
    if (*brute) return cmd_brute(bl, dmax, bjobs, bout, bformat);
    if (*check) return cmd_check(kind, check_line);
    if (*pairing) return cmd_pairing(pairing_line);
    if (*stats) return cmd_stats(stats_path);
  } catch (const cyw::CrossCheckError& e) {
    std::cerr << "internal cross-check failed: " << e.what() << '\n';
    return kExitCrossCheck;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const cyw::NotInteriorPoint& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const cyw::NotReflexive& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return 0;
}
