#include "cyw/io.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace cyw {

using nlohmann::json;

namespace {

std::string now_utc() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n'))
    s.remove_suffix(1);
  return s;
}

template <class T>
void put_opt(json& j, const char* key, const std::optional<T>& v) {
  if (v) j[key] = *v;
}

template <class T>
std::optional<T> get_opt(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  return it->get<T>();
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "text") return Format::kText;
  if (name == "jsonl") return Format::kJsonl;
  throw InputError("unknown format '" + std::string(name) + "'");
}

std::string format_line(const WeightSystem& ws) { return ws.to_string(); }

std::string format_jsonl(const ClassRecord& r) {
  json j;
  j["n"] = r.ws.numerators();
  j["d"] = r.ws.degree();
  j["ip"] = r.ip;
  put_opt(j, "span", r.span);
  put_opt(j, "transverse", r.transverse);
  j["half"] = r.half();
  put_opt(j, "reflexive", r.reflexive);
  put_opt(j, "npoints", r.npoints);
  put_opt(j, "nvertices", r.nvertices);
  put_opt(j, "nfacets", r.nfacets);
  return j.dump();
}

std::string format_record(const ClassRecord& r, Format f) {
  return f == Format::kText ? format_line(r.ws) : format_jsonl(r);
}

ClassRecord parse_record(std::string_view line) {
  line = trim(line);
  if (line.empty() || line.front() != '{') return ClassRecord{WeightSystem::parse(line), true, {}, {}, {}, {}, {}, {}};
  json j;
  try {
    j = json::parse(line);
  } catch (const json::exception& e) {
    throw InputError(std::string("bad JSON record: ") + e.what());
  }
  try {
    const auto n = j.at("n").get<std::vector<int64_t>>();
    ClassRecord r{WeightSystem::canonicalize(n, j.at("d").get<int64_t>()),
                  j.value("ip", true), {}, {}, {}, {}, {}, {}};
    r.span = get_opt<bool>(j, "span");
    r.transverse = get_opt<bool>(j, "transverse");
    r.reflexive = get_opt<bool>(j, "reflexive");
    r.npoints = get_opt<std::size_t>(j, "npoints");
    r.nvertices = get_opt<std::size_t>(j, "nvertices");
    r.nfacets = get_opt<std::size_t>(j, "nfacets");
    if (auto h = get_opt<bool>(j, "half"); h && *h != r.half())
      throw InputError("record 'half' field contradicts its weights");
    return r;
  } catch (const json::exception& e) {
    throw InputError(std::string("bad JSON record: ") + e.what());
  }
}

void write_records(std::ostream& os, const std::vector<ClassRecord>& records, Format f) {
  for (const auto& r : records) os << format_record(r, f) << '\n';
}

std::vector<ClassRecord> read_records(std::istream& is) {
  std::vector<ClassRecord> out;
  std::string line;
  while (std::getline(is, line)) {
    if (trim(line).empty()) continue;
    out.push_back(parse_record(line));
  }
  return out;
}

std::vector<ClassRecord> read_records(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  return read_records(in);
}

std::vector<WeightSystem> read_systems(const std::filesystem::path& path) {
  std::vector<WeightSystem> out;
  for (auto& r : read_records(path)) out.push_back(std::move(r.ws));
  return out;
}

void write_systems(const std::filesystem::path& path, const std::vector<WeightSystem>& systems) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  for (const auto& ws : systems) out << format_line(ws) << '\n';
  if (!out.flush()) throw std::runtime_error("write failed: " + path.string());
}

std::set<Flag> parse_flags(std::string_view csv) {
  std::set<Flag> flags;
  while (!csv.empty()) {
    const auto comma = csv.find(',');
    const std::string_view item = trim(csv.substr(0, comma));
    csv = comma == std::string_view::npos ? std::string_view{} : csv.substr(comma + 1);
    if (item.empty()) continue;
    if (item == "span") flags.insert(Flag::kSpan);
    else if (item == "transverse") flags.insert(Flag::kTransverse);
    else if (item == "reflexive") flags.insert(Flag::kReflexive);
    else throw InputError("unknown flag '" + std::string(item) + "'");
  }
  return flags;
}

std::string render_table_one(const TableOneStats& t) {
  static const char* cols[] = {"P4&half", "P4&!half", "P4", "half", "!half", "total"};
  static const char* rows[] = {"span", "total"};
  std::ostringstream os;
  os << std::setw(6) << "";
  for (const char* c : cols) os << std::setw(10) << c;
  os << '\n';
  for (std::size_t r = 0; r < 2; ++r) {
    os << std::setw(6) << std::left << rows[r] << std::right;
    for (std::size_t c = 0; c < 6; ++c) os << std::setw(10) << t.counts[r][c];
    os << '\n';
  }
  return os.str();
}

RunDirectory::RunDirectory(std::filesystem::path dir, std::size_t l, std::string command,
                           std::string output_path, bool resume)
    : dir_(std::move(dir)) {
  std::filesystem::create_directories(dir_);
  const auto mpath = dir_ / "manifest.jsonl";
  if (resume && std::filesystem::exists(mpath)) {
    manifest_ = read_manifest(dir_);
    if (manifest_.l != l || manifest_.command != command)
      throw InputError("run directory " + dir_.string() + " belongs to a different run");
    drop_torn_tail();
    return;
  }
  std::filesystem::remove(mpath);
  for (const auto& e : std::filesystem::directory_iterator(dir_))
    if (e.path().filename().string().rfind("branch-", 0) == 0) std::filesystem::remove(e.path());
  manifest_ = RunManifest{l, std::move(command), std::move(output_path), {}, now_utc(), std::nullopt};
  json h{{"type", "header"},
         {"l", manifest_.l},
         {"command", manifest_.command},
         {"output", manifest_.output_path},
         {"started", manifest_.started}};
  append(h.dump());
}

std::set<std::size_t> RunDirectory::completed() const {
  return {manifest_.completed_branches.begin(), manifest_.completed_branches.end()};
}

std::filesystem::path RunDirectory::branch_path(std::size_t branch) const {
  return dir_ / ("branch-" + std::to_string(branch) + ".txt");
}

std::vector<WeightSystem> RunDirectory::load_branch(std::size_t branch) const {
  return read_systems(branch_path(branch));
}

void RunDirectory::complete_branch(std::size_t branch, const std::vector<WeightSystem>& candidates) {
  if (completed().count(branch)) throw std::logic_error("branch recorded twice");
  const auto final_path = branch_path(branch);
  auto tmp = final_path;
  tmp += ".tmp";
  write_systems(tmp, candidates);
  std::filesystem::rename(tmp, final_path);
  json j{{"type", "branch"}, {"branch", branch}, {"count", candidates.size()}};
  append(j.dump());
  manifest_.completed_branches.push_back(branch);
}

void RunDirectory::finish() {
  manifest_.finished = now_utc();
  json j{{"type", "finished"}, {"finished", *manifest_.finished}};
  append(j.dump());
}

void RunDirectory::append(const std::string& line) {
  std::ofstream out(dir_ / "manifest.jsonl", std::ios::app);
  out << line << '\n';
  if (!out.flush()) throw std::runtime_error("cannot append to manifest in " + dir_.string());
}

// Rewrites the manifest without a partial last line so later appends start
// on a fresh line.
void RunDirectory::drop_torn_tail() {
  const auto mpath = dir_ / "manifest.jsonl";
  std::string kept, line;
  {
    std::ifstream in(mpath);
    while (std::getline(in, line)) {
      if (trim(line).empty()) continue;
      if (!json::accept(line)) break;
      kept += line + '\n';
    }
  }
  if (std::filesystem::file_size(mpath) == kept.size()) return;
  auto tmp = mpath;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << kept;
    if (!out.flush()) throw std::runtime_error("cannot rewrite manifest in " + dir_.string());
  }
  std::filesystem::rename(tmp, mpath);
}

RunManifest RunDirectory::read_manifest(const std::filesystem::path& dir) {
  std::ifstream in(dir / "manifest.jsonl");
  if (!in) throw InputError("no manifest in " + dir.string());
  RunManifest m;
  std::string line;
  bool header = false;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception&) {
      break;  // a torn final line from an interrupted append
    }
    const std::string type = j.value("type", "");
    if (type == "header") {
      header = true;
      m.l = j.at("l").get<std::size_t>();
      m.command = j.at("command").get<std::string>();
      m.output_path = j.value("output", "");
      m.started = j.value("started", "");
    } else if (type == "branch") {
      m.completed_branches.push_back(j.at("branch").get<std::size_t>());
    } else if (type == "finished") {
      m.finished = j.value("finished", "");
    }
  }
  if (!header) throw InputError("manifest in " + dir.string() + " has no header");
  return m;
}

}  // namespace cyw
