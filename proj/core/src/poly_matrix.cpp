#include "diffop/poly_matrix.hpp"

#include <sstream>

#include "diffop/errors.hpp"
#include "diffop/parser.hpp"

namespace diffop {

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

PolyMatrix PolyMatrix::identity(std::size_t n) {
  PolyMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Polynomial{Rational(1)};
  return m;
}

PolyMatrix PolyMatrix::parse(const std::vector<std::vector<std::string>>& entries) {
  if (entries.empty()) return PolyMatrix();
  PolyMatrix m(entries.size(), entries.front().size());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (entries[i].size() != m.cols())
      throw DimensionMismatchError("ragged entry grid");
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = parse_poly(entries[i][j]);
  }
  return m;
}

const Polynomial& PolyMatrix::at(std::size_t i, std::size_t j) const {
  return entries_[i * cols_ + j];
}

Polynomial& PolyMatrix::at(std::size_t i, std::size_t j) {
  return entries_[i * cols_ + j];
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& other) const {
  if (cols_ != other.rows_)
    throw DimensionMismatchError("matrix product: " + std::to_string(cols_) +
                                 " columns vs " + std::to_string(other.rows_) + " rows");
  PolyMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Polynomial& a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        const Polynomial& b = other.at(k, j);
        if (!b.is_zero()) out.at(i, j) += a * b;
      }
    }
  return out;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw DimensionMismatchError("matrix sum of unequal shapes");
  PolyMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i)
    out.entries_[i] = entries_[i] + other.entries_[i];
  return out;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw DimensionMismatchError("matrix difference of unequal shapes");
  PolyMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i)
    out.entries_[i] = entries_[i] - other.entries_[i];
  return out;
}

PolyMatrix PolyMatrix::operator-() const {
  PolyMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = -entries_[i];
  return out;
}

PolyMatrix PolyMatrix::scaled(const Rational& c) const {
  PolyMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] * c;
  return out;
}

PolyMatrix PolyMatrix::scaled(const Polynomial& p) const {
  PolyMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] * p;
  return out;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

bool PolyMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

std::vector<Polynomial> PolyMatrix::column(std::size_t j) const {
  std::vector<Polynomial> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(at(i, j));
  return out;
}

std::vector<Polynomial> PolyMatrix::row(std::size_t i) const {
  std::vector<Polynomial> out;
  out.reserve(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out.push_back(at(i, j));
  return out;
}

bool PolyMatrix::check_homogeneous(const GradedFrame& frame) const {
  if (frame.row_degrees.size() != rows_ || frame.col_degrees.size() != cols_)
    throw DimensionMismatchError("frame does not match matrix dimensions");
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const Polynomial& e = at(i, j);
      if (e.is_zero()) continue;
      auto deg = e.homogeneous_degree();
      if (!deg || *deg != frame.col_degrees[j] - frame.row_degrees[i]) return false;
    }
  return true;
}

bool PolyMatrix::entries_in_max_ideal() const {
  for (const auto& e : entries_)
    if (e.constant_term() != 0) return false;
  return true;
}

std::string PolyMatrix::to_text() const {
  std::vector<std::string> rendered(entries_.size());
  std::vector<std::size_t> widths(cols_, 0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      rendered[i * cols_ + j] = render_poly(at(i, j));
      widths[j] = std::max(widths[j], rendered[i * cols_ + j].size());
    }
  std::ostringstream out;
  for (std::size_t i = 0; i < rows_; ++i) {
    out << "[ ";
    for (std::size_t j = 0; j < cols_; ++j) {
      const std::string& s = rendered[i * cols_ + j];
      out << s << std::string(widths[j] - s.size(), ' ');
      out << (j + 1 == cols_ ? " ]\n" : "  ");
    }
  }
  return out.str();
}

PolyMatrix block_matrix(const std::vector<std::vector<BlockEntry>>& grid) {
  if (grid.empty()) return PolyMatrix();
  auto block_rows = [](const BlockEntry& b) {
    return std::holds_alternative<ZeroBlock>(b) ? std::get<ZeroBlock>(b).rows
                                                : std::get<PolyMatrix>(b).rows();
  };
  auto block_cols = [](const BlockEntry& b) {
    return std::holds_alternative<ZeroBlock>(b) ? std::get<ZeroBlock>(b).cols
                                                : std::get<PolyMatrix>(b).cols();
  };

  std::size_t ncols_blocks = grid.front().size();
  std::vector<std::size_t> row_heights(grid.size()), col_widths(ncols_blocks, 0);
  for (std::size_t bi = 0; bi < grid.size(); ++bi) {
    if (grid[bi].size() != ncols_blocks)
      throw DimensionMismatchError("ragged block grid");
    row_heights[bi] = block_rows(grid[bi][0]);
    for (std::size_t bj = 0; bj < ncols_blocks; ++bj) {
      if (block_rows(grid[bi][bj]) != row_heights[bi])
        throw DimensionMismatchError("inconsistent block heights in row " + std::to_string(bi));
      if (bi == 0)
        col_widths[bj] = block_cols(grid[bi][bj]);
      else if (block_cols(grid[bi][bj]) != col_widths[bj])
        throw DimensionMismatchError("inconsistent block widths in column " + std::to_string(bj));
    }
  }

  std::size_t total_rows = 0, total_cols = 0;
  for (auto h : row_heights) total_rows += h;
  for (auto w : col_widths) total_cols += w;

  PolyMatrix out(total_rows, total_cols);
  std::size_t row_off = 0;
  for (std::size_t bi = 0; bi < grid.size(); ++bi) {
    std::size_t col_off = 0;
    for (std::size_t bj = 0; bj < ncols_blocks; ++bj) {
      if (const auto* m = std::get_if<PolyMatrix>(&grid[bi][bj])) {
        for (std::size_t i = 0; i < m->rows(); ++i)
          for (std::size_t j = 0; j < m->cols(); ++j)
            out.at(row_off + i, col_off + j) = m->at(i, j);
      }
      col_off += col_widths[bj];
    }
    row_off += row_heights[bi];
  }
  return out;
}

}  // namespace diffop
