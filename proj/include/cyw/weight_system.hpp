#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cyw/linalg.hpp"

namespace cyw {

// A weight system n_1 <= ... <= n_l with sum n_i = d and gcd(n_i) = 1. The
// weights are q_i = n_i / d; the degree equation is sum n_i x_i = d.
class WeightSystem {
 public:
  WeightSystem() = default;

  // Sorts, divides by the gcd and checks sum == degree.
  static WeightSystem canonicalize(std::span<const int64_t> numerators, int64_t degree);
  static WeightSystem canonicalize(std::initializer_list<int64_t> numerators, int64_t degree);
  // Clears denominators of a strictly positive form with sum 1.
  static WeightSystem from_rational_form(const RatForm& a);
  // Parses "n_1 ... n_l d" (any numerator order) and canonicalizes.
  static WeightSystem parse(std::string_view line);

  std::size_t size() const { return numerators_.size(); }
  const std::vector<int64_t>& numerators() const { return numerators_; }
  int64_t numerator(std::size_t i) const { return numerators_[i]; }
  int64_t degree() const { return degree_; }
  // Largest weight equals 1/2.
  bool half() const { return 2 * numerators_.back() == degree_; }
  IntVector weights() const;

  // Canonical line "n_1 ... n_l d" without the trailing newline.
  std::string to_string() const;

  friend bool operator==(const WeightSystem&, const WeightSystem&) = default;
  // Order by degree, then numerators lexicographically.
  friend std::strong_ordering operator<=>(const WeightSystem& a, const WeightSystem& b) {
    if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
    return a.numerators_ <=> b.numerators_;
  }

 private:
  WeightSystem(std::vector<int64_t> n, int64_t d) : numerators_(std::move(n)), degree_(d) {}

  std::vector<int64_t> numerators_;
  int64_t degree_ = 0;
};

// All nonnegative integer solutions of the degree equation, in lexicographic
// order, stored axis-major for the data-parallel kernels.
class PointSet {
 public:
  PointSet() = default;

  const WeightSystem& weight_system() const { return ws_; }
  std::size_t dim() const { return l_; }  // ambient length l
  std::size_t size() const { return count_; }
  int32_t coord(std::size_t axis, std::size_t k) const { return coords_[axis * count_ + k]; }
  const int32_t* axis(std::size_t i) const { return coords_.data() + i * count_; }
  const int32_t* data() const { return coords_.data(); }
  int32_t max_abs_coord() const { return max_coord_; }

  std::vector<int64_t> point(std::size_t k) const;
  IntVector int_point(std::size_t k) const;
  // Index of (1,...,1).
  std::size_t interior_index() const { return interior_index_; }

  // Builds a point set from explicit rows (used by tests and geometry helpers).
  static PointSet from_points(const WeightSystem& ws, std::vector<std::vector<int64_t>> pts);

  friend bool operator==(const PointSet& a, const PointSet& b) {
    return a.ws_ == b.ws_ && a.coords_ == b.coords_;
  }

 private:
  friend PointSet enumerate_points(const WeightSystem& ws);

  WeightSystem ws_;
  std::size_t l_ = 0;
  std::size_t count_ = 0;
  std::size_t interior_index_ = 0;
  int32_t max_coord_ = 0;
  std::vector<int32_t> coords_;
};

PointSet enumerate_points(const WeightSystem& ws);

// Number of lattice points without materializing them.
std::size_t count_points(const WeightSystem& ws);

// (1,...,1) is the only point with all coordinates >= 1.
bool assert_unique_interior_candidate(const PointSet& ps);

struct ClassRecord {
  WeightSystem ws;
  bool ip = false;
  std::optional<bool> span;
  std::optional<bool> transverse;
  std::optional<bool> reflexive;
  std::optional<std::size_t> npoints;
  std::optional<std::size_t> nvertices;
  std::optional<std::size_t> nfacets;

  bool half() const { return ws.half(); }
  friend bool operator==(const ClassRecord&, const ClassRecord&) = default;
};

}  // namespace cyw
