#include "perfect/fp.hpp"

#include <sstream>
#include <stdexcept>

namespace perfect {

Scalar fp_pow(Scalar a, std::uint64_t e, unsigned p) {
  unsigned r = 1 % p, b = a % p;
  while (e) {
    if (e & 1) r = (r * b) % p;
    b = (b * b) % p;
    e >>= 1;
  }
  return static_cast<Scalar>(r);
}

Scalar fp_inv(Scalar a, unsigned p) {
  if (a % p == 0) throw std::domain_error("fp_inv: zero has no inverse");
  return fp_pow(a, p - 2, p);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

void axpy(Vector& y, Scalar c, Vector const& x, unsigned p) {
  if (c == 0) return;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (x[i]) y[i] = static_cast<Scalar>((y[i] + unsigned(c) * x[i]) % p);
  }
}

void scale(Vector& v, Scalar c, unsigned p) {
  for (auto& x : v) x = fp_mul(x, c, p);
}

bool is_zero(Vector const& v) {
  for (Scalar x : v) {
    if (x) return false;
  }
  return true;
}

Matrix Matrix::identity(unsigned p, std::size_t n) { return scalar(p, n, 1); }

Matrix Matrix::scalar(unsigned p, std::size_t n, Scalar c) {
  Matrix m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = c;
  return m;
}

Matrix Matrix::from_rows(unsigned p, std::vector<Vector> const& rows, std::size_t cols) {
  Matrix m(p, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

void Matrix::set_row(std::size_t i, Vector const& v) {
  if (v.size() != cols_) throw std::invalid_argument("Matrix::set_row: length mismatch");
  std::copy(v.begin(), v.end(), row_ptr(i));
}

Matrix Matrix::operator*(Matrix const& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("Matrix: dimension mismatch in product");
  Matrix r(p_, rows_, o.cols_);
  std::vector<std::uint32_t> acc(o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    Scalar const* a = row_ptr(i);
    std::size_t pending = 0;
    for (std::size_t k = 0; k < cols_; ++k) {
      unsigned c = a[k];
      if (!c) continue;
      Scalar const* b = o.row_ptr(k);
      for (std::size_t j = 0; j < o.cols_; ++j) acc[j] += c * b[j];
      if (++pending == 60000) {
        for (auto& x : acc) x %= p_;
        pending = 0;
      }
    }
    Scalar* out = r.row_ptr(i);
    for (std::size_t j = 0; j < o.cols_; ++j) out[j] = static_cast<Scalar>(acc[j] % p_);
  }
  return r;
}

Matrix Matrix::operator+(Matrix const& o) const {
  Matrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = fp_add(data_[i], o.data_[i], p_);
  return r;
}

Matrix Matrix::operator-(Matrix const& o) const {
  Matrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = fp_sub(data_[i], o.data_[i], p_);
  return r;
}

Matrix Matrix::scaled(Scalar c) const {
  Matrix r = *this;
  for (auto& x : r.data_) x = fp_mul(x, c, p_);
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(p_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  }
  return r;
}

Matrix Matrix::pow(long long e) const {
  Matrix base = *this;
  if (e < 0) {
    auto inv = inverse();
    if (!inv) throw std::domain_error("Matrix::pow: singular matrix with negative exponent");
    base = *inv;
    e = -e;
  }
  Matrix r = identity(p_, rows_);
  while (e) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

std::optional<Matrix> Matrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  std::size_t n = rows_;
  Matrix a = *this;
  Matrix inv = identity(p_, n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a(piv, c) == 0) ++piv;
    if (piv == n) return std::nullopt;
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(piv, j), a(c, j));
        std::swap(inv(piv, j), inv(c, j));
      }
    }
    Scalar s = fp_inv(a(c, c), p_);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) = fp_mul(a(c, j), s, p_);
      inv(c, j) = fp_mul(inv(c, j), s, p_);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c) == 0) continue;
      Scalar f = fp_neg(a(i, c), p_);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) = static_cast<Scalar>((a(i, j) + unsigned(f) * a(c, j)) % p_);
        inv(i, j) = static_cast<Scalar>((inv(i, j) + unsigned(f) * inv(c, j)) % p_);
      }
    }
  }
  return inv;
}

std::size_t Matrix::rank() const {
  Echelon e(p_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) e.add(row(i));
  return e.rank();
}

bool Matrix::is_zero() const {
  for (Scalar x : data_) {
    if (x) return false;
  }
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
    }
  }
  return true;
}

Matrix Matrix::block(std::size_t r0, std::size_t nr, std::size_t c0, std::size_t nc) const {
  Matrix r(p_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i) {
    for (std::size_t j = 0; j < nc; ++j) r(i, j) = (*this)(r0 + i, c0 + j);
  }
  return r;
}

Vector vec_mul(Vector const& v, Matrix const& a) {
  unsigned p = a.prime();
  std::vector<std::uint32_t> acc(a.cols(), 0);
  for (std::size_t k = 0; k < v.size(); ++k) {
    unsigned c = v[k];
    if (!c) continue;
    Scalar const* b = a.row_ptr(k);
    for (std::size_t j = 0; j < a.cols(); ++j) acc[j] += c * b[j];
  }
  Vector r(a.cols());
  for (std::size_t j = 0; j < r.size(); ++j) r[j] = static_cast<Scalar>(acc[j] % p);
  return r;
}

Matrix kronecker(Matrix const& a, Matrix const& b) {
  unsigned p = a.prime();
  Matrix r(p, a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      Scalar c = a(i, j);
      if (!c) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          r(i * b.rows() + k, j * b.cols() + l) = fp_mul(c, b(k, l), p);
        }
      }
    }
  }
  return r;
}

bool Echelon::reduce(Vector& v) const {
  bool nonzero = false;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Scalar c = v[pivots_[i]];
    if (c) axpy(v, fp_neg(c, p_), rows_[i], p_);
  }
  for (Scalar x : v) {
    if (x) {
      nonzero = true;
      break;
    }
  }
  return !nonzero;
}

bool Echelon::add(Vector v) {
  if (reduce(v)) return false;
  std::size_t c = 0;
  while (v[c] == 0) ++c;
  scale(v, fp_inv(v[c], p_), p_);
  for (auto& r : rows_) {
    if (r[c]) axpy(r, fp_neg(r[c], p_), v, p_);
  }
  pivot_row_[c] = static_cast<long>(rows_.size());
  pivots_.push_back(c);
  rows_.push_back(std::move(v));
  return true;
}

Vector Echelon::coordinates(Vector const& v) const {
  Vector r(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) r[i] = v[pivots_[i]];
  return r;
}

Matrix left_nullspace(Matrix const& a) {
  unsigned p = a.prime();
  std::size_t m = a.rows(), n = a.cols();
  Echelon e(p, n + m);
  for (std::size_t i = 0; i < m; ++i) {
    Vector v(n + m, 0);
    std::copy(a.row_ptr(i), a.row_ptr(i) + n, v.begin());
    v[n + i] = 1;
    e.add(std::move(v));
  }
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < e.rank(); ++i) {
    if (e.pivots()[i] >= n) rows.emplace_back(e.basis()[i].begin() + n, e.basis()[i].end());
  }
  return Matrix::from_rows(p, rows, m);
}

Matrix solution_space(Matrix const& eqs) { return left_nullspace(eqs.transpose()); }

std::optional<Vector> solve_left(Matrix const& a, Vector const& b) {
  unsigned p = a.prime();
  std::size_t m = a.rows(), n = a.cols();
  Echelon e(p, n + m);
  for (std::size_t i = 0; i < m; ++i) {
    Vector v(n + m, 0);
    std::copy(a.row_ptr(i), a.row_ptr(i) + n, v.begin());
    v[n + i] = 1;
    e.add(std::move(v));
  }
  Vector v(n + m, 0);
  std::copy(b.begin(), b.end(), v.begin());
  e.reduce(v);
  for (std::size_t j = 0; j < n; ++j) {
    if (v[j]) return std::nullopt;
  }
  Vector x(v.begin() + n, v.end());
  for (auto& c : x) c = fp_neg(c, p);
  return x;
}

std::string to_string(Matrix const& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << int(m(i, j));
    os << '\n';
  }
  return os.str();
}

}  // namespace perfect
