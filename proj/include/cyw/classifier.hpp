#pragma once

#include <array>
#include <atomic>
#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "cyw/linalg.hpp"
#include "cyw/weight_system.hpp"

namespace cyw {

struct SearchNode {
  std::vector<IntVector> chosen_points;  // starts with (1,...,1)
  AffineFormSpace form_space;
  std::size_t depth = 0;
};

SearchNode root_node(std::size_t l);

// Least-norm form if strictly positive, else the max-min form; nullopt prunes.
std::optional<RatForm> branching_form(const SearchNode& node);

// Points y >= 0 with a . y < 1 and some y_i >= 2 whose addition still admits
// a strictly positive form. Coordinates whose columns agree on every chosen
// point are taken non-increasing, which at the root leaves one representative
// per permutation orbit. Order: coordinate sum descending, then
// lexicographically descending.
std::vector<IntVector> child_points(const SearchNode& node, const RatForm& a);

SearchNode child_node(const SearchNode& node, const IntVector& y);

// Deduplicated, sorted by (d, numerators).
struct CandidateSet {
  std::vector<WeightSystem> systems;
};

struct EnumerateOptions {
  unsigned jobs = 1;
  // Root branches (indices into child_points of the root) to skip.
  std::set<std::size_t> skip_branches;
  // Called once per completed root branch with its sorted candidates; calls
  // are serialized.
  std::function<void(std::size_t, const std::vector<WeightSystem>&)> on_branch_done;
  // Stop after this many branches have completed (the result is then partial).
  std::optional<std::size_t> max_branches;
};

// Root-branch points for l weights, in branch-index order.
std::vector<IntVector> root_branches(std::size_t l);

// The recursive search. The candidates of skipped branches are not included;
// the root form is.
CandidateSet enumerate_candidates(std::size_t l, const EnumerateOptions& opts);
CandidateSet enumerate_candidates(std::size_t l);

enum class Flag { kSpan, kTransverse, kReflexive };

struct ClassifyOptions {
  unsigned jobs = 1;
  // Cross-check every walk decision against the exact oracle.
  bool verify_ip = false;
};

// IP filter plus the requested flags. Requesting kReflexive also fills the
// point, vertex and facet counts.
std::vector<ClassRecord> classify_candidates(const std::vector<WeightSystem>& candidates,
                                             const std::set<Flag>& flags,
                                             const ClassifyOptions& opts = {});
std::vector<ClassRecord> classify(std::size_t l, const std::set<Flag>& flags,
                                  const ClassifyOptions& opts = {});

// Cheap exact necessary conditions for the IP property: for every i, some
// point has x_i = 0 and some point has x_i >= 2.
bool passes_ip_prefilter(const WeightSystem& ws);

// Every ascending tuple with sum d <= dmax and gcd 1 that has the IP property.
std::vector<ClassRecord> enumerate_by_degree(std::size_t l, int64_t dmax, unsigned jobs = 1);

// Rows {span, total}; columns {P4&half, P4&!half, P4, half, !half, total}.
struct TableOneStats {
  std::array<std::array<std::size_t, 6>, 2> counts{};
  friend bool operator==(const TableOneStats&, const TableOneStats&) = default;
};

// Throws InputError when a record lacks the span or transverse flag.
TableOneStats stats(const std::vector<ClassRecord>& records);

}  // namespace cyw
