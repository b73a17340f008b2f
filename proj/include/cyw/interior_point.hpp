#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cyw/linalg.hpp"
#include "cyw/weight_system.hpp"

namespace cyw {

// Raised when two independent computations of the same quantity disagree.
class CrossCheckError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// (1,...,1) written as an affine combination of chosen points.
struct BarycentricCoords {
  std::vector<std::size_t> points;  // PointSet indices
  RatForm lambdas;
};

// Coordinates of (1,...,1) with respect to l linearly independent points;
// nullopt if they are dependent.
std::optional<BarycentricCoords> barycentric(const PointSet& ps,
                                             const std::vector<std::size_t>& chosen);

// Indices of l independent points chosen greedily by largest coordinate, or
// fewer if the point set is dimension deficient.
std::vector<std::size_t> starting_points(const PointSet& ps);

// Exchange walk. nullopt means INCONCLUSIVE (iteration cap or a degenerate
// configuration the walk does not resolve).
std::optional<bool> ip_walk(const PointSet& ps);

// Exact decision through the facets of the hull.
bool ip_oracle(const PointSet& ps);

// Walk with the oracle as fallback.
bool ip_check(const PointSet& ps);
bool ip_check(const WeightSystem& ws);

// Runs both the walk and the oracle; throws CrossCheckError if a conclusive
// walk disagrees with the oracle.
bool ip_check_verified(const PointSet& ps);

}  // namespace cyw
