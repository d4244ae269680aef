#include "trs/linalg.hpp"

#include <utility>

namespace trs {

std::vector<Elem> Matrix::column(std::size_t c) const {
  std::vector<Elem> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

RowEchelon rref(const Field& f, Matrix m) {
  RowEchelon out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c) == kZero) ++piv;
    if (piv == m.rows()) continue;
    m.swap_rows(r, piv);
    const Elem s = f.inv(m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = f.mul(m(r, j), s);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == kZero) continue;
      const Elem factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(r, j)));
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = Matrix(r, m.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.reduced(i, j) = m(i, j);
  return out;
}

std::size_t rank(const Field& f, const Matrix& m) { return rref(f, m).pivots.size(); }

Elem determinant(const Field& f, Matrix m) {
  if (m.rows() != m.cols()) throw DomainError("determinant of non-square matrix");
  const std::size_t n = m.rows();
  Elem det = kOne;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m(piv, c) == kZero) ++piv;
    if (piv == n) return kZero;
    if (piv != c) {
      m.swap_rows(c, piv);
      det = f.neg(det);
    }
    det = f.mul(det, m(c, c));
    const Elem s = f.inv(m(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c) == kZero) continue;
      const Elem factor = f.mul(m(i, c), s);
      for (std::size_t j = c; j < n; ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(c, j)));
    }
  }
  return det;
}

std::optional<Matrix> inverse(const Field& f, const Matrix& m) {
  if (m.rows() != m.cols()) throw DomainError("inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = kOne;
  }
  RowEchelon e = rref(f, std::move(aug));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = e.reduced(i, n + j);
  return out;
}

Matrix nullspace(const Field& f, const Matrix& m) {
  RowEchelon e = rref(f, m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;
  Matrix out(n - e.pivots.size(), n);
  std::size_t row = 0;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    out(row, free) = kOne;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) out(row, e.pivots[i]) = f.neg(e.reduced(i, free));
    ++row;
  }
  return out;
}

Matrix multiply(const Field& f, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw DomainError("matrix dimension mismatch");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const Elem x = a(i, l);
      if (x == kZero) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = f.add(out(i, j), f.mul(x, b(l, j)));
    }
  return out;
}

Matrix transpose(const Matrix& m) {
  Matrix out(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = m(i, j);
  return out;
}

Matrix select_columns(const Matrix& m, std::span<const std::size_t> cols) {
  Matrix out(m.rows(), cols.size());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = m(i, cols[j]);
  return out;
}

bool same_row_space(const Field& f, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) return false;
  return rref(f, a).reduced == rref(f, b).reduced;
}

}  // namespace trs
