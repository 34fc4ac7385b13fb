#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "diffop/polynomial.hpp"

namespace diffop {

// Internal-degree bookkeeping for a matrix viewed as a graded map: entry
// (i, j) must be homogeneous of degree col_degrees[j] - row_degrees[i].
struct GradedFrame {
  std::vector<int> row_degrees;
  std::vector<int> col_degrees;
};

// Dense rectangular matrix over Q[x,y,z]. Sizes in this project top out at
// 22 x 21, so no sparsity machinery.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols);

  static PolyMatrix identity(std::size_t n);
  static PolyMatrix zero(std::size_t rows, std::size_t cols) { return PolyMatrix(rows, cols); }
  // Entries given as expression strings; convenient for transcribing tables.
  static PolyMatrix parse(const std::vector<std::vector<std::string>>& entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Polynomial& at(std::size_t i, std::size_t j) const;
  Polynomial& at(std::size_t i, std::size_t j);

  PolyMatrix operator*(const PolyMatrix& other) const;
  PolyMatrix operator+(const PolyMatrix& other) const;
  PolyMatrix operator-(const PolyMatrix& other) const;
  PolyMatrix operator-() const;
  PolyMatrix scaled(const Rational& c) const;
  PolyMatrix scaled(const Polynomial& p) const;
  PolyMatrix transpose() const;

  bool operator==(const PolyMatrix& other) const = default;
  bool is_zero() const;

  std::vector<Polynomial> column(std::size_t j) const;
  std::vector<Polynomial> row(std::size_t i) const;

  // True iff every nonzero entry (i,j) is homogeneous of degree
  // col_degrees[j] - row_degrees[i].
  bool check_homogeneous(const GradedFrame& frame) const;

  // True iff every entry has zero constant term, i.e. the matrix presents a
  // minimal differential.
  bool entries_in_max_ideal() const;

  std::string to_text() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Polynomial> entries_;
};

// A block grid entry is either a matrix or an m x n zero marker.
struct ZeroBlock {
  std::size_t rows;
  std::size_t cols;
};
using BlockEntry = std::variant<PolyMatrix, ZeroBlock>;

// Assemble a matrix from a grid of blocks. Row heights must agree across
// each block row and column widths down each block column.
PolyMatrix block_matrix(const std::vector<std::vector<BlockEntry>>& grid);

}  // namespace diffop
