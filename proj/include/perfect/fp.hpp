#ifndef PERFECT_FP_HPP_
#define PERFECT_FP_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace perfect {

using Scalar = std::uint8_t;
using Vector = std::vector<Scalar>;

// Arithmetic in the prime field F_p, p < 256.
inline Scalar fp_add(Scalar a, Scalar b, unsigned p) {
  unsigned s = unsigned(a) + b;
  return static_cast<Scalar>(s >= p ? s - p : s);
}
inline Scalar fp_sub(Scalar a, Scalar b, unsigned p) {
  return static_cast<Scalar>(a >= b ? a - b : a + p - b);
}
inline Scalar fp_neg(Scalar a, unsigned p) { return static_cast<Scalar>(a == 0 ? 0 : p - a); }
inline Scalar fp_mul(Scalar a, Scalar b, unsigned p) {
  return static_cast<Scalar>((unsigned(a) * b) % p);
}
Scalar fp_inv(Scalar a, unsigned p);
Scalar fp_pow(Scalar a, std::uint64_t e, unsigned p);
bool is_prime(std::uint64_t n);

// y += c * x
void axpy(Vector& y, Scalar c, Vector const& x, unsigned p);
void scale(Vector& v, Scalar c, unsigned p);
bool is_zero(Vector const& v);

// Dense row-major matrix over F_p. Modules act on row vectors from the right.
class Matrix {
 public:
  Matrix() = default;
  Matrix(unsigned p, std::size_t rows, std::size_t cols)
      : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  static Matrix identity(unsigned p, std::size_t n);
  static Matrix from_rows(unsigned p, std::vector<Vector> const& rows, std::size_t cols);
  static Matrix scalar(unsigned p, std::size_t n, Scalar c);

  unsigned prime() const noexcept { return p_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Scalar operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Scalar const* row_ptr(std::size_t i) const { return data_.data() + i * cols_; }
  Scalar* row_ptr(std::size_t i) { return data_.data() + i * cols_; }
  Vector row(std::size_t i) const { return Vector(row_ptr(i), row_ptr(i) + cols_); }
  void set_row(std::size_t i, Vector const& v);
  std::vector<Scalar> const& data() const noexcept { return data_; }

  Matrix operator*(Matrix const& o) const;
  Matrix operator+(Matrix const& o) const;
  Matrix operator-(Matrix const& o) const;
  Matrix scaled(Scalar c) const;
  Matrix transpose() const;
  Matrix pow(long long e) const;  // negative exponents need an invertible matrix
  std::optional<Matrix> inverse() const;
  std::size_t rank() const;
  bool is_zero() const;
  bool is_identity() const;
  // Rows [r0, r0+nr) and columns [c0, c0+nc).
  Matrix block(std::size_t r0, std::size_t nr, std::size_t c0, std::size_t nc) const;

  friend bool operator==(Matrix const& a, Matrix const& b) {
    return a.p_ == b.p_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator<(Matrix const& a, Matrix const& b) { return a.data_ < b.data_; }

 private:
  unsigned p_ = 2;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

Vector vec_mul(Vector const& v, Matrix const& a);  // v * a
Matrix kronecker(Matrix const& a, Matrix const& b);

// Incremental reduced row-echelon basis of a subspace of F_p^n.
class Echelon {
 public:
  Echelon() = default;
  Echelon(unsigned p, std::size_t n) : p_(p), n_(n), pivot_row_(n, -1) {}

  // Reduces v modulo the span; returns true when v reduces to zero.
  bool reduce(Vector& v) const;
  // Adds v to the span; returns false if it was already contained.
  bool add(Vector v);
  std::size_t rank() const noexcept { return rows_.size(); }
  std::size_t dim() const noexcept { return n_; }
  std::vector<Vector> const& basis() const noexcept { return rows_; }
  std::vector<std::size_t> const& pivots() const noexcept { return pivots_; }
  // Coordinates of v (assumed in the span) in terms of basis().
  Vector coordinates(Vector const& v) const;
  Matrix as_matrix() const { return Matrix::from_rows(p_, rows_, n_); }

 private:
  unsigned p_ = 2;
  std::size_t n_ = 0;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<long> pivot_row_;
};

// Basis (as rows) of {v : v * a = 0}.
Matrix left_nullspace(Matrix const& a);
// Basis (as rows) of {x : eqs * x^T = 0}.
Matrix solution_space(Matrix const& eqs);
// Some x with x * a = b, if one exists.
std::optional<Vector> solve_left(Matrix const& a, Vector const& b);

std::string to_string(Matrix const& m);

}  // namespace perfect

#endif  // PERFECT_FP_HPP_
