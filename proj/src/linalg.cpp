#include "pbw/linalg.hpp"

#include <stdexcept>

#include "pbw/flag_type.hpp"

namespace pbw {

std::string to_string(const Rational& q) {
  return boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str();
}

Rational parse_rational(const std::string& text) {
  try {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(BigInt(text));
    const BigInt num(text.substr(0, slash));
    const BigInt den(text.substr(slash + 1));
    if (den == 0) throw ValidationError("rational with zero denominator: " + text);
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw ValidationError("not a rational number: '" + text + "'");
  }
}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix RationalMatrix::identity(std::size_t size) {
  RationalMatrix m(size, size);
  for (std::size_t k = 0; k < size; ++k) m(k, k) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_integers(const std::vector<std::vector<long>>& rows) {
  const std::size_t c = rows.empty() ? 0 : rows.front().size();
  RationalMatrix m(rows.size(), c);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != c) throw ValidationError("ragged matrix");
    for (std::size_t k = 0; k < c; ++k) m(r, k) = rows[r][k];
  }
  return m;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const {
  if (cols_ != other.rows_) throw ValidationError("matrix product: shape mismatch");
  RationalMatrix out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      if ((*this)(r, k) == 0) continue;
      for (std::size_t c = 0; c < other.cols_; ++c) out(r, c) += (*this)(r, k) * other(k, c);
    }
  return out;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

RationalMatrix RationalMatrix::row_block(std::size_t r0, std::size_t r1) const {
  if (r0 > r1 || r1 > rows_) throw ValidationError("row block out of range");
  RationalMatrix out(r1 - r0, cols_);
  for (std::size_t r = r0; r < r1; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(r - r0, c) = (*this)(r, c);
  return out;
}

RationalMatrix RationalMatrix::hconcat(const RationalMatrix& other) const {
  if (rows_ != other.rows_) throw ValidationError("hconcat: row mismatch");
  RationalMatrix out(rows_, cols_ + other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c);
    for (std::size_t c = 0; c < other.cols_; ++c) out(r, cols_ + c) = other(r, c);
  }
  return out;
}

bool RationalMatrix::is_zero() const {
  for (const auto& v : data_)
    if (v != 0) return false;
  return true;
}

RationalMatrix RationalMatrix::rref(std::vector<std::size_t>* pivots) const {
  RationalMatrix m = *this;
  std::vector<std::size_t> piv;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t sel = row;
    while (sel < rows_ && m(sel, col) == 0) ++sel;
    if (sel == rows_) continue;
    if (sel != row)
      for (std::size_t c = 0; c < cols_; ++c) std::swap(m(sel, c), m(row, c));
    const Rational lead = m(row, col);
    for (std::size_t c = col; c < cols_; ++c) m(row, c) /= lead;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == row || m(r, col) == 0) continue;
      const Rational factor = m(r, col);
      for (std::size_t c = col; c < cols_; ++c) m(r, c) -= factor * m(row, c);
    }
    piv.push_back(col);
    ++row;
  }
  if (pivots) *pivots = std::move(piv);
  return m;
}

std::size_t RationalMatrix::rank() const {
  std::vector<std::size_t> piv;
  rref(&piv);
  return piv.size();
}

std::vector<std::vector<Rational>> RationalMatrix::kernel() const {
  std::vector<std::size_t> piv;
  const RationalMatrix r = rref(&piv);
  std::vector<char> is_pivot(cols_, 0);
  for (auto p : piv) is_pivot[p] = 1;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols_);
    v[free] = 1;
    for (std::size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -r(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t intersection_dim(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows()) throw ValidationError("intersection: ambient mismatch");
  return a.rank() + b.rank() - a.hconcat(b).rank();
}

bool column_span_contains(const RationalMatrix& space, const RationalMatrix& sub) {
  if (space.rows() != sub.rows()) throw ValidationError("span containment: ambient mismatch");
  return space.rank() == space.hconcat(sub).rank();
}

}  // namespace pbw
