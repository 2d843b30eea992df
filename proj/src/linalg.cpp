#include "blp/linalg.hpp"

#include <utility>

namespace blp {

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows.size() == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) {
      throw DimensionError("matrix rows have inconsistent lengths");
    }
    for (const auto& entry : row) data_.push_back(entry);
  }
}

Vec Matrix::row(std::size_t r) const {
  Vec out(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out[c] = (*this)(r, c);
  return out;
}

void Matrix::append_row(const Vec& row) {
  if (rows_ == 0 && cols_ == 0) cols_ = row.size();
  if (row.size() != cols_) {
    throw DimensionError("appended row has wrong length");
  }
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

Rational dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionError("dot: size mismatch");
  Rational out = 0;
  for (std::size_t i = 0; i < a.size(); ++i) out += a[i] * b[i];
  return out;
}

Vec matvec(const Matrix& m, const Vec& x) {
  if (m.cols() != x.size()) throw DimensionError("matvec: size mismatch");
  Vec out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Rational acc = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) acc += m(r, c) * x[c];
    out[r] = std::move(acc);
  }
  return out;
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionError("add: size mismatch");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vec subtract(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionError("subtract: size mismatch");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vec scale(const Vec& a, const Rational& s) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * s;
  return out;
}

Vec zeros(std::size_t n) { return Vec(n); }

bool is_zero(const Vec& a) {
  for (const auto& v : a) {
    if (v != 0) return false;
  }
  return true;
}

bool lex_less(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionError("lex_less: size mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

namespace {

// One Bareiss elimination pass over [M | R]. Returns false when M is
// singular; otherwise leaves the augmented matrix in upper-triangular form.
bool fraction_free_eliminate(Matrix& aug, std::size_t n) {
  Rational previous_pivot = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot_row = k;
    while (pivot_row < n && aug(pivot_row, k) == 0) ++pivot_row;
    if (pivot_row == n) return false;
    if (pivot_row != k) {
      for (std::size_t c = 0; c < aug.cols(); ++c) {
        std::swap(aug(k, c), aug(pivot_row, c));
      }
      // Row swap flips the determinant sign; compensate so the triangular
      // pivots keep the Bareiss identity. Negating the pivot row suffices.
      for (std::size_t c = 0; c < aug.cols(); ++c) aug(k, c) = -aug(k, c);
    }
    const Rational pivot = aug(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < aug.cols(); ++j) {
        aug(i, j) = (aug(i, j) * pivot - aug(i, k) * aug(k, j)) / previous_pivot;
      }
      aug(i, k) = 0;
    }
    previous_pivot = pivot;
  }
  return true;
}

}  // namespace

std::optional<Matrix> solve_square_system_multi(const Matrix& m,
                                                const Matrix& r) {
  if (m.rows() != m.cols()) {
    throw DimensionError("solve_square_system: matrix not square");
  }
  if (r.rows() != m.rows()) {
    throw DimensionError("solve_square_system: rhs row count mismatch");
  }
  const std::size_t n = m.rows();
  const std::size_t w = r.cols();
  Matrix aug(n, n + w);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    for (std::size_t j = 0; j < w; ++j) aug(i, n + j) = r(i, j);
  }
  if (!fraction_free_eliminate(aug, n)) return std::nullopt;

  Matrix x(n, w);
  for (std::size_t col = 0; col < w; ++col) {
    for (std::size_t i = n; i-- > 0;) {
      Rational acc = aug(i, n + col);
      for (std::size_t j = i + 1; j < n; ++j) acc -= aug(i, j) * x(j, col);
      x(i, col) = acc / aug(i, i);
    }
  }
  return x;
}

std::optional<Vec> solve_square_system(const Matrix& m, const Vec& r) {
  Matrix rhs(r.size(), 1);
  for (std::size_t i = 0; i < r.size(); ++i) rhs(i, 0) = r[i];
  auto solved = solve_square_system_multi(m, rhs);
  if (!solved) return std::nullopt;
  Vec out(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) out[i] = (*solved)(i, 0);
  return out;
}

Rational determinant(const Matrix& m) {
  if (m.rows() != m.cols()) {
    throw DimensionError("determinant: matrix not square");
  }
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Matrix work = m;
  if (!fraction_free_eliminate(work, n)) return 0;
  // After Bareiss elimination the last pivot equals the determinant.
  return work(n - 1, n - 1);
}

}  // namespace blp
