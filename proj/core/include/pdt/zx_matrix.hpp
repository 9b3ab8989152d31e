#ifndef PDT_ZX_MATRIX_HPP
#define PDT_ZX_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "pdt/zx_poly.hpp"

namespace pdt {

using ZxVector = std::vector<ZxPoly>;

ZxVector zero_vector(std::size_t n);
ZxVector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const ZxVector& v);
ZxPoly dot(const ZxVector& a, const ZxVector& b);
ZxVector operator+(const ZxVector& a, const ZxVector& b);
ZxVector operator-(const ZxVector& a, const ZxVector& b);
ZxVector operator-(const ZxVector& a);
ZxVector scale(const ZxPoly& g, const ZxVector& v);
/// acc += g * v
void axpy(ZxVector& acc, const ZxPoly& g, const ZxVector& v);
/// Sum of coeffs[i] * vecs[i]; all vectors must share a length n.
ZxVector combine(const std::vector<ZxVector>& vecs, const ZxVector& coeffs, std::size_t n);

/// Dense row-major matrix over Z[x].
class ZxMatrix {
 public:
  ZxMatrix() = default;
  ZxMatrix(std::size_t rows, std::size_t cols);

  static ZxMatrix identity(std::size_t n);
  static ZxMatrix from_rows(const std::vector<ZxVector>& rows, std::size_t cols);
  static ZxMatrix from_columns(const std::vector<ZxVector>& cols, std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  ZxPoly& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const ZxPoly& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  ZxVector row(std::size_t i) const;
  ZxVector column(std::size_t j) const;
  std::vector<ZxVector> row_list() const;
  std::vector<ZxVector> column_list() const;

  ZxMatrix transposed() const;
  ZxVector operator*(const ZxVector& v) const;
  friend ZxMatrix operator*(const ZxMatrix& a, const ZxMatrix& b);
  friend bool operator==(const ZxMatrix& a, const ZxMatrix& b) = default;

  void append_row(const ZxVector& r);
  void erase_row(std::size_t i);
  void erase_column(std::size_t j);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<ZxPoly> data_;
};

/// Rank over Q(x) by Bareiss fraction-free elimination.
std::size_t rank_qx(const ZxMatrix& a);
/// Rank of the span of a list of vectors of length n.
std::size_t rank_qx(const std::vector<ZxVector>& vecs, std::size_t n);

}  // namespace pdt

#endif  // PDT_ZX_MATRIX_HPP
