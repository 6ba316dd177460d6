#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "vvmf/cyclotomic.hpp"

namespace vvmf {

// Dense row-major matrix over Q(zeta_N). Every entry is kept at the matrix's
// common order so that arithmetic never re-promotes inside inner loops.
class CycMatrix {
 public:
  CycMatrix() = default;
  CycMatrix(std::size_t rows, std::size_t cols);
  explicit CycMatrix(const std::vector<std::vector<Cyclotomic>>& rows);

  static CycMatrix identity(std::size_t n, long order = 1);
  // Column-permutation matrix: P e_i = e_{perm[i]} (0-based).
  static CycMatrix permutation(const std::vector<std::size_t>& perm);
  static CycMatrix scalar(std::size_t n, const Cyclotomic& c);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  long order() const { return order_; }

  const Cyclotomic& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, const Cyclotomic& v);

  // Re-embeds every entry into Q(zeta_M); requires order() | M.
  CycMatrix embed(long m) const;

  CycMatrix operator-() const;
  friend CycMatrix operator+(const CycMatrix& a, const CycMatrix& b);
  friend CycMatrix operator-(const CycMatrix& a, const CycMatrix& b);
  friend CycMatrix operator*(const CycMatrix& a, const CycMatrix& b);
  friend CycMatrix operator*(const Cyclotomic& c, const CycMatrix& m);
  friend bool operator==(const CycMatrix& a, const CycMatrix& b);

  CycMatrix pow(long e) const;
  Cyclotomic trace() const;
  CycMatrix transpose() const;
  // Throws SingularMatrix.
  CycMatrix inverse() const;

  bool is_identity() const;
  bool is_zero() const;

  std::size_t rank() const;
  std::size_t kernel_dim() const { return cols_ - rank(); }

  // Stable key for hash-based closure enumeration.
  std::string key() const;

 private:
  void unify(long order);
  void require_square(const char* what) const;

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  long order_ = 1;
  std::vector<Cyclotomic> a_;
};

CycMatrix vstack(const CycMatrix& top, const CycMatrix& bottom);
CycMatrix block_diag(const CycMatrix& a, const CycMatrix& b);

}  // namespace vvmf
