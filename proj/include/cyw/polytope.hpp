#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "cyw/linalg.hpp"
#include "cyw/weight_system.hpp"

namespace cyw {

// The points do not affinely span the expected dimension.
class DimensionDeficient : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// (1,...,1) is not an interior point of the polytope.
class NotInteriorPoint : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotReflexive : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Intrinsic coordinates on the degree hyperplane: P = origin + sum_j u_j basis[j]
// with origin = (1,...,1) and basis a Z-basis of {v : sum n_i v_i = 0}.
struct AffineLatticeChart {
  WeightSystem ws;
  std::vector<IntVector> basis;
  std::vector<IntVector> left_inverse;

  std::size_t dim() const { return basis.size(); }
  IntVector to_chart(std::span<const int64_t> ambient) const;
  IntVector to_ambient(const IntVector& u) const;
};

AffineLatticeChart chart(const WeightSystem& ws);

// Supporting inequality normal . u <= offset, normal primitive in the chart
// lattice. `points` lists the indices of all points on the facet.
struct Facet {
  IntVector normal;
  Integer offset;
  std::vector<std::size_t> points;
};

// Facets of conv(points) for points spanning Z^m affinely, by exact double
// description. Throws DimensionDeficient otherwise. Facets are sorted by
// (offset, normal).
std::vector<Facet> convex_hull_facets(std::span<const IntVector> points);

struct Hull {
  AffineLatticeChart chart;
  std::vector<IntVector> chart_points;  // parallel to the PointSet
  std::vector<Facet> facets;
  std::vector<std::size_t> vertices;    // PointSet indices, ascending (lexicographic)
  bool origin_interior = false;         // every offset > 0
};

Hull hull_facets(const PointSet& ps);

// Extreme points in ambient coordinates, lexicographic order.
std::vector<std::vector<int64_t>> vertices(const PointSet& ps);

// Throws NotInteriorPoint when the IP property fails.
bool is_reflexive(const WeightSystem& ws);
bool is_reflexive(const Hull& hull);

// A facet functional written on the ambient coordinates: for points of the
// polytope, <dual vertex, P> + 1 = constant + coeffs . P. The representative
// is fixed by 0 <= constant < d (it is unique up to multiples of n . P - d).
struct DualVertex {
  IntVector chart_vector;  // the dual lattice point, -normal
  IntVector coeffs;
  Integer constant;
};

std::vector<DualVertex> dual_vertices(const WeightSystem& ws);
std::vector<DualVertex> dual_vertices(const Hull& hull);

// Rows follow the sorted facets, columns the lexicographic vertices.
struct PairingMatrix {
  std::vector<std::vector<Integer>> entries;
  std::vector<std::vector<int64_t>> vertices;
  std::vector<DualVertex> duals;
};

// Throws NotReflexive (or NotInteriorPoint) when the pairing is undefined.
PairingMatrix pairing_matrix(const WeightSystem& ws);
PairingMatrix pairing_matrix(const PointSet& ps, const Hull& hull);

// Every coordinate hyperplane section spans dimension l-2.
bool span_check(const WeightSystem& ws);
bool span_check(const PointSet& ps);

// A lattice pyramid with base at height 0 and peak at height 2*height; the last
// coordinate is the height axis.
struct PyramidSpec {
  std::vector<IntVector> base_vertices;
  IntVector peak;
  long height = 0;
};

// Lattice points of the pyramid at heights 1 .. height-1.
std::vector<IntVector> pyramid_gap_points(const PyramidSpec& pyr);

}  // namespace cyw
