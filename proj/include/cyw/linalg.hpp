#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyw/integer.hpp"
#include "cyw/rational.hpp"

namespace cyw {

using IntVector = std::vector<Integer>;
using RatForm = std::vector<Rational>;
using RatMatrix = std::vector<std::vector<Rational>>;

// Raised when an operation is called with arguments violating its contract.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

IntVector to_int_vector(std::span<const long> v);
IntVector to_int_vector(std::initializer_list<long> v);
std::string to_string(const IntVector& v);
std::string to_string(const RatForm& v);

Rational dot(const RatForm& a, const IntVector& x);
Rational dot(const RatForm& a, const RatForm& b);

// The affine set {particular + sum_j t_j * directions[j]} of linear forms.
struct AffineFormSpace {
  RatForm particular;
  std::vector<RatForm> directions;

  std::size_t length() const { return particular.size(); }
  std::size_t dim() const { return directions.size(); }
  RatForm at(std::span<const Rational> params) const;
};

// All a in Q^l with a . P = 1 for every point; nullopt when the system is
// inconsistent. Directions come from the free columns of the reduced row
// echelon form, so they are linearly independent.
std::optional<AffineFormSpace> solve_form_space(std::span<const IntVector> points);

// Intersect a form space with further equations rows[k] . a = values[k].
std::optional<AffineFormSpace> restrict_space(const AffineFormSpace& space,
                                              std::span<const RatForm> rows,
                                              std::span<const Rational> values);

// Unique element of minimal Euclidean norm.
RatForm least_norm_element(const AffineFormSpace& space);

struct MaxMinResult {
  RatForm form;
  Rational min_coefficient;
};

// Maximise t subject to a in space and a_i >= t. Returns nullopt when the
// optimum is <= 0; otherwise the least-norm element of the optimal face.
std::optional<MaxMinResult> max_min_positive_element(const AffineFormSpace& space);

// Dense exact simplex for: maximise c.x subject to A x <= b, x >= 0, with b >= 0
// (so the origin is feasible). Bland's rule prevents cycling.
struct LinearProgram {
  RatMatrix A;
  RatForm b;
  RatForm c;
};

struct LpSolution {
  bool unbounded = false;
  Rational value;
  RatForm x;
};

LpSolution solve_lp(const LinearProgram& lp);

// Basis of the lattice {v in Z^l : weights . v = 0} read off a unimodular
// column transform, together with an integral left inverse.
struct KernelLattice {
  std::vector<IntVector> basis;         // l-1 vectors of length l
  std::vector<IntVector> left_inverse;  // l-1 rows of length l; left_inverse * basis = I
  Integer gcd;                          // gcd of the weights
};

KernelLattice kernel_lattice(std::span<const Integer> weights);
std::vector<IntVector> integer_kernel_basis(std::span<const Integer> weights);

IntVector primitive_reduce(const IntVector& v);

// Fraction-free echelon basis grown one vector at a time.
class IncrementalRank {
 public:
  explicit IncrementalRank(std::size_t length) : m_(length) {}
  std::size_t rank() const { return rows_.size(); }
  // Adds v; returns true when it was independent of the vectors so far.
  bool add(IntVector v);

 private:
  std::size_t m_;
  std::vector<IntVector> rows_;
  std::vector<std::size_t> pivot_;
};

// Rank over Q of a list of equal-length integer vectors.
std::size_t rank(std::span<const IntVector> rows);

// Solves M x = rhs for square nonsingular M; nullopt if singular.
std::optional<RatForm> solve_square(RatMatrix m, RatForm rhs);

// Determinant of a square integer matrix (fraction-free elimination).
Integer determinant(std::vector<IntVector> m);

// Adjugate of a square integer matrix: adj(M) * M = det(M) * I.
std::vector<IntVector> adjugate(const std::vector<IntVector>& m);

}  // namespace cyw
