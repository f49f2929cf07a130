#ifndef PBW_LINALG_HPP
#define PBW_LINALG_HPP

#include <boost/multiprecision/gmp.hpp>
#include <string>
#include <vector>

namespace pbw {

using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

/// "p/q" with q >= 1; integers are written "p/1".
std::string to_string(const Rational& q);
/// Accepts "p/q" or "p".
Rational parse_rational(const std::string& text);

/// Dense row-major matrix over Q.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  static RationalMatrix identity(std::size_t size);
  static RationalMatrix from_integers(const std::vector<std::vector<long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalMatrix operator*(const RationalMatrix& other) const;
  RationalMatrix transpose() const;
  /// Rows [r0, r1) and all columns.
  RationalMatrix row_block(std::size_t r0, std::size_t r1) const;
  /// Columns side by side.
  RationalMatrix hconcat(const RationalMatrix& other) const;
  bool is_zero() const;

  std::size_t rank() const;
  /// Basis of {v : A v = 0}, one vector per free column of the RREF.
  std::vector<std::vector<Rational>> kernel() const;
  /// Reduced row echelon form and pivot columns.
  RationalMatrix rref(std::vector<std::size_t>* pivots = nullptr) const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// dim(span(A) ∩ span(B)) for column spaces inside the same ambient space.
std::size_t intersection_dim(const RationalMatrix& a, const RationalMatrix& b);

/// True iff every column of sub lies in the column span of space.
bool column_span_contains(const RationalMatrix& space, const RationalMatrix& sub);

}  // namespace pbw

#endif
