#ifndef DBX_LINALG_HPP
#define DBX_LINALG_HPP

#include <dbx/numeric.hpp>

#include <initializer_list>
#include <optional>
#include <vector>

namespace dbx {

using RatVector = std::vector<Rational>;
using IntVector = std::vector<Integer>;

/// Dense row-major matrix of exact rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  RatMatrix(std::initializer_list<std::initializer_list<long>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  RatVector apply(const RatVector& v) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> a_;
};

/// Basis of the right kernel, one vector per free column (left to right),
/// each scaled to coprime integers with the first nonzero entry positive.
std::vector<IntVector> nullspace(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);

struct AffineSolution {
  RatVector particular;
  std::vector<IntVector> kernel;
};

/// Solves M n = b; nullopt when inconsistent. The particular solution has
/// every free variable set to zero. Throws std::invalid_argument on a
/// dimension mismatch.
std::optional<AffineSolution> solve_affine(const RatMatrix& m, const RatVector& b);

/// Determinant by fraction-free (Bareiss) elimination; `a` is row-major n x n.
Integer bareiss_determinant(std::vector<Integer> a, std::size_t n);

/// Scales a rational vector to coprime integers with the first nonzero
/// entry positive. The zero vector maps to zeros.
IntVector to_primitive_integer_vector(const RatVector& v);

}  // namespace dbx

#endif  // DBX_LINALG_HPP
