#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "trs/galois.hpp"

namespace trs {

/// Dense row-major matrix over a finite field. Arithmetic goes through the
/// Field passed to the free functions below.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, kZero) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::vector<Elem> column(std::size_t c) const;

  void swap_rows(std::size_t a, std::size_t b);

  const std::vector<Elem>& data() const { return data_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

struct RowEchelon {
  Matrix reduced;                   // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;  // pivot column of each row
};

RowEchelon rref(const Field& f, Matrix m);
std::size_t rank(const Field& f, const Matrix& m);
Elem determinant(const Field& f, Matrix m);
std::optional<Matrix> inverse(const Field& f, const Matrix& m);
/// Rows form a basis of {x : m x = 0}.
Matrix nullspace(const Field& f, const Matrix& m);
Matrix multiply(const Field& f, const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& m);
Matrix select_columns(const Matrix& m, std::span<const std::size_t> cols);
bool same_row_space(const Field& f, const Matrix& a, const Matrix& b);

}  // namespace trs
