#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "blp/rational.hpp"

namespace blp {

/// Thrown when vector/matrix shapes do not line up. Shape mismatches are
/// always hard errors, never silently broadcast.
struct DimensionError : std::invalid_argument {
  explicit DimensionError(const std::string& what)
      : std::invalid_argument(what) {}
};

using Vec = std::vector<Rational>;

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  Vec row(std::size_t r) const;
  void append_row(const Vec& row);

  bool operator==(const Matrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Rational dot(const Vec& a, const Vec& b);
Vec matvec(const Matrix& m, const Vec& x);
Vec add(const Vec& a, const Vec& b);
Vec subtract(const Vec& a, const Vec& b);
Vec scale(const Vec& a, const Rational& s);
Vec zeros(std::size_t n);
bool is_zero(const Vec& a);

/// Lexicographic order on entries; used wherever a deterministic order of
/// points is needed (vertex lists, tie-breaking).
bool lex_less(const Vec& a, const Vec& b);

/// Solves M v = r for square M. Returns the unique solution, or nullopt
/// exactly when det(M) = 0. Uses fraction-free (Bareiss) elimination.
std::optional<Vec> solve_square_system(const Matrix& m, const Vec& r);

/// Multi-column variant: solves M V = R column by column in one elimination
/// pass. R has the same row count as M.
std::optional<Matrix> solve_square_system_multi(const Matrix& m,
                                                const Matrix& r);

/// Exact determinant via fraction-free elimination.
Rational determinant(const Matrix& m);

}  // namespace blp
