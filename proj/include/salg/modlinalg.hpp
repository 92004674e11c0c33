#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace salg {

using Row = std::vector<std::int64_t>;

/// Dense matrix over Z/m, stored row-major with entries in [0, m).
class MatrixOverFactor {
public:
  MatrixOverFactor(std::int64_t modulus, std::size_t rows, std::size_t cols);
  /// Takes ownership of `rows` (each of length `cols`) and reduces entries mod m.
  MatrixOverFactor(std::int64_t modulus, std::size_t cols, std::vector<Row> rows);

  std::int64_t modulus() const { return modulus_; }
  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  std::int64_t at(std::size_t r, std::size_t c) const { return rows_[r][c]; }
  void set(std::size_t r, std::size_t c, std::int64_t value);
  const Row& row(std::size_t r) const { return rows_[r]; }
  const std::vector<Row>& row_data() const { return rows_; }

  void append_row(Row row);

  MatrixOverFactor transpose() const;

private:
  std::int64_t modulus_;
  std::size_t cols_;
  std::vector<Row> rows_;
};

/// Howell normal form of a submodule of (Z/m)^c.
///
/// Rows are in strict echelon order; every pivot is a proper divisor of m,
/// entries above a pivot d lie in [0, d), and for each j the rows with
/// pivot column >= j span every element of the module whose first j
/// entries vanish. Two submodules are equal iff their forms are identical.
class HowellBasis {
public:
  HowellBasis(std::int64_t modulus, std::size_t cols) : modulus_(modulus), cols_(cols) {}

  std::int64_t modulus() const { return modulus_; }
  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }
  bool empty() const { return rows_.empty(); }

  const std::vector<Row>& rows() const { return rows_; }
  std::size_t pivot(std::size_t r) const { return pivots_[r]; }

  friend bool operator==(const HowellBasis&, const HowellBasis&) = default;

private:
  friend HowellBasis howell_form(const MatrixOverFactor&);

  std::int64_t modulus_;
  std::size_t cols_;
  std::vector<Row> rows_;
  std::vector<std::size_t> pivots_;
};

HowellBasis howell_form(const MatrixOverFactor& matrix);

/// Canonical basis of {v : M v = 0}, with v a column vector; returned as rows.
HowellBasis kernel(const MatrixOverFactor& matrix);

/// Decides v in span(B) by pivot elimination.
bool in_row_span(std::span<const std::int64_t> v, const HowellBasis& basis);

/// Howell basis of the sum of two submodules of the same ambient module.
HowellBasis module_sum(const HowellBasis& lhs, const HowellBasis& rhs);

/// Howell basis of the intersection of two submodules.
HowellBasis module_intersect(const HowellBasis& lhs, const HowellBasis& rhs);

/// Scalar helpers over Z/m.
struct Gcdex {
  std::int64_t g, s, t;
};
/// g = gcd(a, b) = s a + t b over the integers (a, b >= 0, not both zero).
Gcdex gcdex(std::int64_t a, std::int64_t b);

/// A unit u of Z/m with u a = gcd(a, m) mod m; a must be nonzero mod m.
std::int64_t normalizing_unit(std::int64_t a, std::int64_t m);

}  // namespace salg
