#include "vvmf/matrix.hpp"

#include <stdexcept>

#include "vvmf/errors.hpp"

namespace vvmf {

namespace {

void require_same_shape(const CycMatrix& a, const CycMatrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument(std::string(what) + ": shape mismatch");
  }
}

}  // namespace

CycMatrix::CycMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

CycMatrix::CycMatrix(const std::vector<std::vector<Cyclotomic>>& rows) {
  rows_ = rows.size();
  cols_ = rows.empty() ? 0 : rows.front().size();
  a_.reserve(rows_ * cols_);
  long order = 1;
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix rows");
    for (const auto& x : r) {
      a_.push_back(x);
      order = lcm_order(order, x.order());
    }
  }
  unify(order);
}

CycMatrix CycMatrix::identity(std::size_t n, long order) {
  CycMatrix m(n, n);
  const Cyclotomic one = Cyclotomic(1).embed(order);
  const Cyclotomic zero = Cyclotomic(0).embed(order);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m.a_[i * n + j] = i == j ? one : zero;
  }
  m.order_ = order;
  return m;
}

CycMatrix CycMatrix::permutation(const std::vector<std::size_t>& perm) {
  const std::size_t n = perm.size();
  CycMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.a_[perm[i] * n + i] = Cyclotomic(1);
  return m;
}

CycMatrix CycMatrix::scalar(std::size_t n, const Cyclotomic& c) {
  CycMatrix m = identity(n, c.order());
  for (std::size_t i = 0; i < n; ++i) m.a_[i * n + i] = c;
  return m;
}

void CycMatrix::unify(long order) {
  order_ = order;
  for (auto& x : a_) {
    if (x.order() != order) x = x.embed(order);
  }
}

void CycMatrix::set(std::size_t i, std::size_t j, const Cyclotomic& v) {
  if (order_ % v.order() != 0) unify(lcm_order(order_, v.order()));
  a_[i * cols_ + j] = v.order() == order_ ? v : v.embed(order_);
}

CycMatrix CycMatrix::embed(long m) const {
  CycMatrix out = *this;
  out.unify(m);
  return out;
}

void CycMatrix::require_square(const char* what) const {
  if (!square()) throw std::invalid_argument(std::string(what) + " requires a square matrix");
}

CycMatrix CycMatrix::operator-() const {
  CycMatrix out = *this;
  for (auto& x : out.a_) x = -x;
  return out;
}

CycMatrix operator+(const CycMatrix& a, const CycMatrix& b) {
  require_same_shape(a, b, "matrix addition");
  const long m = lcm_order(a.order_, b.order_);
  CycMatrix out = a.order_ == m ? a : a.embed(m);
  const CycMatrix& bb = b.order_ == m ? b : b.embed(m);
  for (std::size_t k = 0; k < out.a_.size(); ++k) out.a_[k] += bb.a_[k];
  return out;
}

CycMatrix operator-(const CycMatrix& a, const CycMatrix& b) { return a + (-b); }

CycMatrix operator*(const CycMatrix& a, const CycMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: inner dimensions differ");
  const long m = lcm_order(a.order_, b.order_);
  const CycMatrix aa = a.order_ == m ? a : a.embed(m);
  const CycMatrix bb = b.order_ == m ? b : b.embed(m);
  CycMatrix out = CycMatrix::identity(0, m);
  out.rows_ = a.rows_;
  out.cols_ = b.cols_;
  out.a_.assign(out.rows_ * out.cols_, Cyclotomic(0).embed(m));
  // Representation matrices are mostly sparse; skip zero terms early.
  for (std::size_t i = 0; i < aa.rows_; ++i) {
    for (std::size_t k = 0; k < aa.cols_; ++k) {
      const Cyclotomic& x = aa.a_[i * aa.cols_ + k];
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < bb.cols_; ++j) {
        const Cyclotomic& y = bb.a_[k * bb.cols_ + j];
        if (y.is_zero()) continue;
        out.a_[i * out.cols_ + j] += x * y;
      }
    }
  }
  return out;
}

CycMatrix operator*(const Cyclotomic& c, const CycMatrix& m) {
  CycMatrix out = m;
  const long order = lcm_order(m.order_, c.order());
  out.unify(order);
  const Cyclotomic cc = c.embed(order);
  for (auto& x : out.a_) {
    if (!x.is_zero()) x *= cc;
  }
  return out;
}

bool operator==(const CycMatrix& a, const CycMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t k = 0; k < a.a_.size(); ++k) {
    if (!(a.a_[k] == b.a_[k])) return false;
  }
  return true;
}

CycMatrix CycMatrix::pow(long e) const {
  require_square("matrix power");
  if (e < 0) return inverse().pow(-e);
  CycMatrix result = identity(rows_, order_);
  CycMatrix base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Cyclotomic CycMatrix::trace() const {
  require_square("trace");
  Cyclotomic t = Cyclotomic(0).embed(order_);
  for (std::size_t i = 0; i < rows_; ++i) t += a_[i * cols_ + i];
  return t;
}

CycMatrix CycMatrix::transpose() const {
  CycMatrix out(cols_, rows_);
  out.order_ = order_;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out.a_[j * rows_ + i] = a_[i * cols_ + j];
  }
  return out;
}

CycMatrix CycMatrix::inverse() const {
  require_square("inverse");
  const std::size_t n = rows_;
  CycMatrix work = *this;
  CycMatrix inv = identity(n, order_);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && work.a_[p * n + col].is_zero()) ++p;
    if (p == n) throw SingularMatrix();
    if (p != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(work.a_[p * n + j], work.a_[col * n + j]);
        std::swap(inv.a_[p * n + j], inv.a_[col * n + j]);
      }
    }
    const Cyclotomic pivot_inv = work.a_[col * n + col].inverse();
    for (std::size_t j = 0; j < n; ++j) {
      work.a_[col * n + j] *= pivot_inv;
      inv.a_[col * n + j] *= pivot_inv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col) continue;
      const Cyclotomic f = work.a_[i * n + col];
      if (f.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!work.a_[col * n + j].is_zero()) work.a_[i * n + j] -= f * work.a_[col * n + j];
        if (!inv.a_[col * n + j].is_zero()) inv.a_[i * n + j] -= f * inv.a_[col * n + j];
      }
    }
  }
  return inv;
}

bool CycMatrix::is_identity() const {
  if (!square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      const auto& x = a_[i * cols_ + j];
      if (i == j ? !x.is_one() : !x.is_zero()) return false;
    }
  }
  return true;
}

bool CycMatrix::is_zero() const {
  for (const auto& x : a_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

std::size_t CycMatrix::rank() const {
  CycMatrix work = *this;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols_ && r < rows_; ++col) {
    std::size_t p = r;
    while (p < rows_ && work.a_[p * cols_ + col].is_zero()) ++p;
    if (p == rows_) continue;
    if (p != r) {
      for (std::size_t j = 0; j < cols_; ++j) std::swap(work.a_[p * cols_ + j], work.a_[r * cols_ + j]);
    }
    const Cyclotomic pivot_inv = work.a_[r * cols_ + col].inverse();
    for (std::size_t i = r + 1; i < rows_; ++i) {
      const Cyclotomic& head = work.a_[i * cols_ + col];
      if (head.is_zero()) continue;
      const Cyclotomic f = head * pivot_inv;
      for (std::size_t j = col; j < cols_; ++j) {
        const Cyclotomic& x = work.a_[r * cols_ + j];
        if (!x.is_zero()) work.a_[i * cols_ + j] -= f * x;
      }
    }
    ++r;
  }
  return r;
}

std::string CycMatrix::key() const {
  std::string out = std::to_string(rows_) + "x" + std::to_string(cols_) + ":" + std::to_string(order_);
  for (const auto& x : a_) {
    out += '|';
    if (x.is_zero()) continue;
    for (const auto& c : x.coeffs()) {
      out += c.get_str(36);
      out += ',';
    }
  }
  return out;
}

CycMatrix vstack(const CycMatrix& top, const CycMatrix& bottom) {
  if (top.cols() != bottom.cols()) throw std::invalid_argument("vstack: column counts differ");
  std::vector<std::vector<Cyclotomic>> rows;
  for (std::size_t i = 0; i < top.rows(); ++i) {
    std::vector<Cyclotomic> r;
    for (std::size_t j = 0; j < top.cols(); ++j) r.push_back(top(i, j));
    rows.push_back(std::move(r));
  }
  for (std::size_t i = 0; i < bottom.rows(); ++i) {
    std::vector<Cyclotomic> r;
    for (std::size_t j = 0; j < bottom.cols(); ++j) r.push_back(bottom(i, j));
    rows.push_back(std::move(r));
  }
  return CycMatrix(rows);
}

CycMatrix block_diag(const CycMatrix& a, const CycMatrix& b) {
  const std::size_t n = a.rows() + b.rows();
  const std::size_t m = a.cols() + b.cols();
  std::vector<std::vector<Cyclotomic>> rows(n, std::vector<Cyclotomic>(m));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) rows[i][j] = a(i, j);
  }
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) rows[a.rows() + i][a.cols() + j] = b(i, j);
  }
  return CycMatrix(rows);
}

}  // namespace vvmf
