#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "cyw/classifier.hpp"
#include "cyw/weight_system.hpp"

namespace cyw {

enum class Format { kText, kJsonl };

Format parse_format(std::string_view name);

// "n_1 ... n_l d".
std::string format_line(const WeightSystem& ws);
// One JSON object: n, d, ip, half and whichever optional fields are set.
std::string format_jsonl(const ClassRecord& r);
std::string format_record(const ClassRecord& r, Format f);

// A text line gives a record with ip = true and no flags; a line starting
// with '{' is read as JSON.
ClassRecord parse_record(std::string_view line);

void write_records(std::ostream& os, const std::vector<ClassRecord>& records, Format f);
std::vector<ClassRecord> read_records(std::istream& is);
std::vector<ClassRecord> read_records(const std::filesystem::path& path);

std::vector<WeightSystem> read_systems(const std::filesystem::path& path);
void write_systems(const std::filesystem::path& path, const std::vector<WeightSystem>& systems);

std::set<Flag> parse_flags(std::string_view csv);

std::string render_table_one(const TableOneStats& t);

struct RunManifest {
  std::size_t l = 0;
  std::string command;
  std::string output_path;
  std::vector<std::size_t> completed_branches;
  std::string started;
  std::optional<std::string> finished;
};

// A run directory: manifest.jsonl (append-only: a header line, one line per
// completed root branch, a final line) and branch-<i>.txt candidate files.
class RunDirectory {
 public:
  // Creates the directory. Without `resume` any previous manifest is
  // discarded; with it the previous header must match l and command.
  RunDirectory(std::filesystem::path dir, std::size_t l, std::string command,
               std::string output_path, bool resume);

  const RunManifest& manifest() const { return manifest_; }
  std::set<std::size_t> completed() const;
  std::vector<WeightSystem> load_branch(std::size_t branch) const;
  // Writes the branch file atomically, then records it in the manifest.
  void complete_branch(std::size_t branch, const std::vector<WeightSystem>& candidates);
  void finish();

  static RunManifest read_manifest(const std::filesystem::path& dir);

 private:
  void append(const std::string& line);
  void drop_torn_tail();
  std::filesystem::path branch_path(std::size_t branch) const;

  std::filesystem::path dir_;
  RunManifest manifest_;
};

}  // namespace cyw
