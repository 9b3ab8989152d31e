#include "pdt/zx_matrix.hpp"

#include <utility>

#include "pdt/error.hpp"

namespace pdt {

namespace {

void require_same_length(const ZxVector& a, const ZxVector& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::DimensionMismatch, "vector lengths " + std::to_string(a.size()) +
                                                  " and " + std::to_string(b.size()));
  }
}

}  // namespace

ZxVector zero_vector(std::size_t n) { return ZxVector(n); }

ZxVector unit_vector(std::size_t n, std::size_t i) {
  ZxVector v(n);
  v.at(i) = ZxPoly(1);
  return v;
}

bool is_zero(const ZxVector& v) {
  for (const auto& f : v) {
    if (!f.is_zero()) return false;
  }
  return true;
}

ZxPoly dot(const ZxVector& a, const ZxVector& b) {
  require_same_length(a, b);
  ZxPoly acc;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

ZxVector operator+(const ZxVector& a, const ZxVector& b) {
  require_same_length(a, b);
  ZxVector out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

ZxVector operator-(const ZxVector& a, const ZxVector& b) {
  require_same_length(a, b);
  ZxVector out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

ZxVector operator-(const ZxVector& a) {
  ZxVector out;
  out.reserve(a.size());
  for (const auto& f : a) out.push_back(-f);
  return out;
}

ZxVector scale(const ZxPoly& g, const ZxVector& v) {
  ZxVector out;
  out.reserve(v.size());
  for (const auto& f : v) out.push_back(g * f);
  return out;
}

void axpy(ZxVector& acc, const ZxPoly& g, const ZxVector& v) {
  require_same_length(acc, v);
  if (g.is_zero()) return;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) acc[i] += g * v[i];
  }
}

ZxVector combine(const std::vector<ZxVector>& vecs, const ZxVector& coeffs, std::size_t n) {
  if (vecs.size() != coeffs.size()) {
    throw Error(ErrorKind::DimensionMismatch, "coefficient count differs from vector count");
  }
  ZxVector out(n);
  for (std::size_t i = 0; i < vecs.size(); ++i) axpy(out, coeffs[i], vecs[i]);
  return out;
}

ZxMatrix::ZxMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ZxMatrix ZxMatrix::identity(std::size_t n) {
  ZxMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = ZxPoly(1);
  return m;
}

ZxMatrix ZxMatrix::from_rows(const std::vector<ZxVector>& rows, std::size_t cols) {
  ZxMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(ErrorKind::DimensionMismatch, "ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

ZxMatrix ZxMatrix::from_columns(const std::vector<ZxVector>& cols, std::size_t rows) {
  ZxMatrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw Error(ErrorKind::DimensionMismatch, "ragged matrix columns");
    for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

ZxVector ZxMatrix::row(std::size_t i) const {
  return ZxVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

ZxVector ZxMatrix::column(std::size_t j) const {
  ZxVector v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back(at(i, j));
  return v;
}

std::vector<ZxVector> ZxMatrix::row_list() const {
  std::vector<ZxVector> out;
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

std::vector<ZxVector> ZxMatrix::column_list() const {
  std::vector<ZxVector> out;
  for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
  return out;
}

ZxMatrix ZxMatrix::transposed() const {
  ZxMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  }
  return t;
}

ZxVector ZxMatrix::operator*(const ZxVector& v) const {
  if (v.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "matrix-vector product");
  ZxVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (!v[j].is_zero() && !at(i, j).is_zero()) out[i] += at(i, j) * v[j];
    }
  }
  return out;
}

ZxMatrix operator*(const ZxMatrix& a, const ZxMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product");
  ZxMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  }
  return out;
}

void ZxMatrix::append_row(const ZxVector& r) {
  if (rows_ == 0 && cols_ == 0) cols_ = r.size();
  if (r.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "appended row length");
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

void ZxMatrix::erase_row(std::size_t i) {
  if (i >= rows_) throw Error(ErrorKind::BadIndex, "row " + std::to_string(i));
  auto first = data_.begin() + static_cast<std::ptrdiff_t>(i * cols_);
  data_.erase(first, first + static_cast<std::ptrdiff_t>(cols_));
  --rows_;
}

void ZxMatrix::erase_column(std::size_t j) {
  if (j >= cols_) throw Error(ErrorKind::BadIndex, "column " + std::to_string(j));
  std::vector<ZxPoly> next;
  next.reserve(rows_ * (cols_ - 1));
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      if (k != j) next.push_back(std::move(at(i, k)));
    }
  }
  data_ = std::move(next);
  --cols_;
}

std::size_t rank_qx(const ZxMatrix& input) {
  ZxMatrix a = input;
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  std::size_t rank = 0;
  ZxPoly prev(1);
  for (std::size_t col = 0; col < n && rank < m; ++col) {
    std::size_t pivot = m;
    for (std::size_t i = rank; i < m; ++i) {
      if (!a.at(i, col).is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot == m) continue;
    if (pivot != rank) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(pivot, j), a.at(rank, j));
    }
    const ZxPoly p = a.at(rank, col);
    for (std::size_t i = rank + 1; i < m; ++i) {
      const ZxPoly q = a.at(i, col);
      for (std::size_t j = col; j < n; ++j) {
        ZxPoly v = p * a.at(i, j) - q * a.at(rank, j);
        auto d = divide_exact(v, prev);
        if (!d) throw Error(ErrorKind::InternalInconsistency, "Bareiss step not exact");
        a.at(i, j) = std::move(*d);
      }
    }
    prev = p;
    ++rank;
  }
  return rank;
}

std::size_t rank_qx(const std::vector<ZxVector>& vecs, std::size_t n) {
  return rank_qx(ZxMatrix::from_rows(vecs, n));
}

}  // namespace pdt
