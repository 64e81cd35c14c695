#include "mtrs/matrix.hpp"

#include <utility>

#include "mtrs/error.hpp"

namespace mtrs {

namespace {

void require(bool cond, const char* what) {
  if (!cond) throw Error(ErrorKind::dimension_mismatch, what);
}

struct Elimination {
  std::vector<std::size_t> pivots;
  Elem pivot_product;
  bool odd_swaps = false;
};

// Gauss(-Jordan) elimination in place. With full_reduce the result is the
// RREF; otherwise only rows below each pivot are cleared.
Elimination eliminate(const Field& f, std::span<Elem> buf, std::size_t rows, std::size_t cols, bool full_reduce) {
  Elimination out;
  out.pivot_product = f.one();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && buf[sel * cols + c].is_zero()) ++sel;
    if (sel == rows) continue;
    if (sel != r) {
      for (std::size_t j = c; j < cols; ++j) std::swap(buf[sel * cols + j], buf[r * cols + j]);
      out.odd_swaps = !out.odd_swaps;
    }
    const Elem pv = buf[r * cols + c];
    out.pivot_product = f.mul(out.pivot_product, pv);
    const Elem pinv = f.inv(pv);
    for (std::size_t j = c; j < cols; ++j) buf[r * cols + j] = f.mul(buf[r * cols + j], pinv);
    for (std::size_t i = full_reduce ? 0 : r + 1; i < rows; ++i) {
      if (i == r) continue;
      const Elem factor = buf[i * cols + c];
      if (factor.is_zero()) continue;
      for (std::size_t j = c; j < cols; ++j) {
        buf[i * cols + j] = f.sub(buf[i * cols + j], f.mul(factor, buf[r * cols + j]));
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  return out;
}

}  // namespace

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols, std::vector<Elem> data)
    : f_(std::move(f)), rows_(rows), cols_(cols), data_(std::move(data)) {
  require(data_.size() == rows_ * cols_, "matrix data length does not match rows*cols");
}

Matrix Matrix::identity(const Field& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
  return m;
}

Matrix Matrix::parse(const Field& f, const std::vector<std::vector<std::string>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    require(rows[i].size() == c, "ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = f.parse(rows[i][j]);
  }
  return m;
}

bool Matrix::is_zero() const {
  for (auto e : data_)
    if (!e.is_zero()) return false;
  return true;
}

std::vector<std::vector<std::string>> Matrix::to_strings() const {
  std::vector<std::vector<std::string>> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    out[i].reserve(cols_);
    for (std::size_t j = 0; j < cols_; ++j) out[i].push_back(f_.format(at(i, j)));
  }
  return out;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  require(a.cols() == b.rows(), "multiply: inner dimensions differ");
  const Field& f = a.field();
  Matrix out(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const Elem x = a.at(i, l);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out.at(i, j) = f.add(out.at(i, j), f.mul(x, b.at(l, j)));
    }
  }
  return out;
}

Matrix add(const Matrix& a, const Matrix& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), "add: shapes differ");
  Matrix out(a.field(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.field().add(a.at(i, j), b.at(i, j));
  return out;
}

Matrix transpose(const Matrix& a) {
  Matrix out(a.field(), a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(j, i) = a.at(i, j);
  return out;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  require(a.cols() == b.cols(), "vstack: column counts differ");
  std::vector<Elem> data(a.data().begin(), a.data().end());
  data.insert(data.end(), b.data().begin(), b.data().end());
  return Matrix(a.field(), a.rows() + b.rows(), a.cols(), std::move(data));
}

Matrix select_columns(const Matrix& a, std::span<const std::size_t> cols) {
  Matrix out(a.field(), a.rows(), cols.size());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) {
      require(cols[j] < a.cols(), "column index out of range");
      out.at(i, j) = a.at(i, cols[j]);
    }
  return out;
}

Matrix select_rows(const Matrix& a, std::span<const std::size_t> rows) {
  Matrix out(a.field(), rows.size(), a.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require(rows[i] < a.rows(), "row index out of range");
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(rows[i], j);
  }
  return out;
}

RrefResult rref(const Matrix& a) {
  std::vector<Elem> buf(a.data().begin(), a.data().end());
  auto el = eliminate(a.field(), buf, a.rows(), a.cols(), true);
  return RrefResult{Matrix(a.field(), a.rows(), a.cols(), std::move(buf)), std::move(el.pivots)};
}

std::size_t rank(const Matrix& a) {
  std::vector<Elem> buf(a.data().begin(), a.data().end());
  return eliminate(a.field(), buf, a.rows(), a.cols(), false).pivots.size();
}

namespace detail {

Elem det_in_place(const Field& f, std::span<Elem> buf, std::size_t n) {
  auto el = eliminate(f, buf, n, n, false);
  if (el.pivots.size() < n) return f.zero();
  return el.odd_swaps ? f.neg(el.pivot_product) : el.pivot_product;
}

}  // namespace detail

Elem det(const Matrix& a) {
  require(a.is_square(), "det: matrix is not square");
  std::vector<Elem> buf(a.data().begin(), a.data().end());
  return detail::det_in_place(a.field(), buf, a.rows());
}

bool is_nonsingular(const Matrix& a) {
  require(a.is_square(), "is_nonsingular: matrix is not square");
  return rank(a) == a.rows();
}

Matrix null_space(const Matrix& a) {
  const Field& f = a.field();
  const auto rr = rref(a);
  const std::size_t n = a.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto c : rr.pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  Matrix basis(f, free_cols.size(), n);
  for (std::size_t b = 0; b < free_cols.size(); ++b) {
    const std::size_t fc = free_cols[b];
    basis.at(b, fc) = f.one();
    for (std::size_t r = 0; r < rr.pivots.size(); ++r) {
      basis.at(b, rr.pivots[r]) = f.neg(rr.reduced.at(r, fc));
    }
  }
  return basis;
}

Matrix row_basis(const Matrix& a) {
  auto rr = rref(a);
  std::vector<std::size_t> keep(rr.pivots.size());
  for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = i;
  return select_rows(rr.reduced, keep);
}

Matrix row_space_intersection(const Matrix& a, const Matrix& b) {
  require(a.cols() == b.cols(), "row_space_intersection: column counts differ");
  const Field& f = a.field();
  const std::size_t n = a.cols();
  // Solutions (x, y) of x A = y B, i.e. kernel of [A^T | -B^T].
  Matrix stacked(f, n, a.rows() + b.rows());
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < a.rows(); ++i) stacked.at(j, i) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i) stacked.at(j, a.rows() + i) = f.neg(b.at(i, j));
  }
  const Matrix kernel = null_space(stacked);
  Matrix vecs(f, kernel.rows(), n);
  for (std::size_t s = 0; s < kernel.rows(); ++s) {
    for (std::size_t i = 0; i < a.rows(); ++i) {
      const Elem x = kernel.at(s, i);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) vecs.at(s, j) = f.add(vecs.at(s, j), f.mul(x, a.at(i, j)));
    }
  }
  return row_basis(vecs);
}

}  // namespace mtrs
