#include "salg/modlinalg.hpp"

#include <numeric>
#include <stdexcept>

#include "salg/ring.hpp"

namespace salg {

namespace {

bool is_zero_row(const Row& row) {
  for (std::int64_t v : row) {
    if (v != 0)
      return false;
  }
  return true;
}

// a*x + b*y over Z/m; entries before `from` are zero in both inputs.
Row combine(const Row& x, std::int64_t a, const Row& y, std::int64_t b, std::int64_t m, std::size_t from) {
  Row out(x.size(), 0);
  for (std::size_t c = from; c < x.size(); ++c)
    out[c] = (a * x[c] % m + b * y[c] % m) % m;
  return out;
}

void scale_in_place(Row& row, std::int64_t factor, std::int64_t m) {
  for (std::int64_t& v : row)
    v = v * factor % m;
}

// row -= q * other, over Z/m; `other` vanishes before `from`.
void sub_multiple(Row& row, const Row& other, std::int64_t q, std::int64_t m, std::size_t from = 0) {
  if (q == 0)
    return;
  for (std::size_t c = from; c < row.size(); ++c) {
    row[c] = (row[c] - q * other[c] % m) % m;
    if (row[c] < 0)
      row[c] += m;
  }
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  Gcdex e = gcdex(mod_reduce(a, m), m);
  if (e.g != 1)
    throw std::logic_error("mod_inverse: not a unit");
  return mod_reduce(e.s, m);
}

}  // namespace

MatrixOverFactor::MatrixOverFactor(std::int64_t modulus, std::size_t rows, std::size_t cols)
    : modulus_(modulus), cols_(cols), rows_(rows, Row(cols, 0)) {
  if (modulus < 1)
    throw std::invalid_argument("modulus must be positive");
}

MatrixOverFactor::MatrixOverFactor(std::int64_t modulus, std::size_t cols, std::vector<Row> rows)
    : modulus_(modulus), cols_(cols), rows_(std::move(rows)) {
  if (modulus < 1)
    throw std::invalid_argument("modulus must be positive");
  for (Row& row : rows_) {
    if (row.size() != cols_)
      throw std::invalid_argument("row length does not match column count");
    for (std::int64_t& v : row)
      v = mod_reduce(v, modulus_);
  }
}

void MatrixOverFactor::set(std::size_t r, std::size_t c, std::int64_t value) {
  rows_[r][c] = mod_reduce(value, modulus_);
}

void MatrixOverFactor::append_row(Row row) {
  if (row.size() != cols_)
    throw std::invalid_argument("row length does not match column count");
  for (std::int64_t& v : row)
    v = mod_reduce(v, modulus_);
  rows_.push_back(std::move(row));
}

MatrixOverFactor MatrixOverFactor::transpose() const {
  MatrixOverFactor t(modulus_, cols_, rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (std::size_t c = 0; c < cols_; ++c)
      t.rows_[c][r] = rows_[r][c];
  }
  return t;
}

Gcdex gcdex(std::int64_t a, std::int64_t b) {
  std::int64_t old_r = a, r = b;
  std::int64_t old_s = 1, s = 0;
  std::int64_t old_t = 0, t = 1;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  return {old_r, old_s, old_t};
}

std::int64_t normalizing_unit(std::int64_t a, std::int64_t m) {
  a = mod_reduce(a, m);
  if (a == 0)
    throw std::invalid_argument("normalizing_unit: zero has no normalizing unit");
  std::int64_t g = std::gcd(a, m);
  std::int64_t reduced_m = m / g;
  std::int64_t s = reduced_m == 1 ? 0 : mod_inverse(a / g, reduced_m);
  // s is a unit mod m/g; some lift s + k*(m/g) is a unit mod m.
  for (std::int64_t u = s; u < m + s; u += reduced_m) {
    std::int64_t candidate = mod_reduce(u, m);
    if (std::gcd(candidate, m) == 1)
      return candidate;
  }
  throw std::logic_error("normalizing_unit: no unit lift found");
}

HowellBasis howell_form(const MatrixOverFactor& matrix) {
  const std::int64_t m = matrix.modulus();
  const std::size_t cols = matrix.cols();
  HowellBasis out(m, cols);

  // Rows still to be placed; all of them vanish on columns < col.
  std::vector<Row> pending;
  for (const Row& row : matrix.row_data()) {
    if (!is_zero_row(row))
      pending.push_back(row);
  }

  for (std::size_t col = 0; col < cols && !pending.empty(); ++col) {
    std::vector<Row> rest;
    rest.reserve(pending.size());
    Row pivot;
    bool have_pivot = false;
    for (Row& row : pending) {
      if (row[col] == 0) {
        rest.push_back(std::move(row));
        continue;
      }
      if (!have_pivot) {
        pivot = std::move(row);
        have_pivot = true;
        continue;
      }
      std::int64_t a = pivot[col], b = row[col];
      if (b % a == 0) {
        sub_multiple(row, pivot, b / a, m, col);
        if (!is_zero_row(row))
          rest.push_back(std::move(row));
        continue;
      }
      // Unimodular 2x2 step: new pivot gets gcd, the other row loses col.
      Gcdex e = gcdex(a, b);
      Row new_pivot = combine(pivot, mod_reduce(e.s, m), row, mod_reduce(e.t, m), m, col);
      Row cleared = combine(pivot, mod_reduce(-(b / e.g), m), row, mod_reduce(a / e.g, m), m, col);
      pivot = std::move(new_pivot);
      if (!is_zero_row(cleared))
        rest.push_back(std::move(cleared));
    }
    if (have_pivot) {
      scale_in_place(pivot, normalizing_unit(pivot[col], m), m);
      std::int64_t d = pivot[col];
      // Saturation: (m/d) * pivot vanishes at col and must stay in the span.
      Row saturated = pivot;
      scale_in_place(saturated, m / d, m);
      if (!is_zero_row(saturated))
        rest.push_back(std::move(saturated));
      out.rows_.push_back(std::move(pivot));
      out.pivots_.push_back(col);
    }
    pending = std::move(rest);
  }

  // Reduce entries above each pivot into [0, d).
  for (std::size_t i = 0; i < out.rows_.size(); ++i) {
    std::size_t pc = out.pivots_[i];
    std::int64_t d = out.rows_[i][pc];
    for (std::size_t k = 0; k < i; ++k)
      sub_multiple(out.rows_[k], out.rows_[i], out.rows_[k][pc] / d, m, pc);
  }
  return out;
}

HowellBasis kernel(const MatrixOverFactor& matrix) {
  const std::int64_t m = matrix.modulus();
  const std::size_t n = matrix.cols();
  // Kernel of M equals the kernel of any generating set of its row span,
  // which has at most n rows once in Howell form.
  HowellBasis reduced = howell_form(matrix);
  const std::size_t r = reduced.rank();

  // Rows (column k of H, e_k): their span is {((H v)^T, v)}, and the Howell
  // property isolates the part with H v = 0.
  MatrixOverFactor augmented(m, n, r + n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < r; ++i)
      augmented.set(k, i, reduced.rows()[i][k]);
    augmented.set(k, r + k, 1);
  }
  HowellBasis full = howell_form(augmented);

  MatrixOverFactor kernel_rows(m, 0, n);
  for (std::size_t i = 0; i < full.rank(); ++i) {
    if (full.pivot(i) < r)
      continue;
    const Row& row = full.rows()[i];
    kernel_rows.append_row(Row(row.begin() + static_cast<std::ptrdiff_t>(r), row.end()));
  }
  return howell_form(kernel_rows);
}

bool in_row_span(std::span<const std::int64_t> v, const HowellBasis& basis) {
  if (v.size() != basis.cols())
    throw std::invalid_argument("in_row_span: dimension mismatch");
  const std::int64_t m = basis.modulus();
  Row work(v.size());
  for (std::size_t c = 0; c < v.size(); ++c)
    work[c] = mod_reduce(v[c], m);
  std::size_t checked = 0;
  for (std::size_t i = 0; i < basis.rank(); ++i) {
    std::size_t pc = basis.pivot(i);
    for (; checked < pc; ++checked) {
      if (work[checked] != 0)
        return false;
    }
    std::int64_t d = basis.rows()[i][pc];
    if (work[pc] % d != 0)
      return false;
    sub_multiple(work, basis.rows()[i], work[pc] / d, m, pc);
  }
  for (std::int64_t x : work) {
    if (x != 0)
      return false;
  }
  return true;
}

HowellBasis module_sum(const HowellBasis& lhs, const HowellBasis& rhs) {
  if (lhs.modulus() != rhs.modulus() || lhs.cols() != rhs.cols())
    throw std::invalid_argument("module_sum: incompatible modules");
  std::vector<Row> rows = lhs.rows();
  rows.insert(rows.end(), rhs.rows().begin(), rhs.rows().end());
  return howell_form(MatrixOverFactor(lhs.modulus(), lhs.cols(), std::move(rows)));
}

HowellBasis module_intersect(const HowellBasis& lhs, const HowellBasis& rhs) {
  if (lhs.modulus() != rhs.modulus() || lhs.cols() != rhs.cols())
    throw std::invalid_argument("module_intersect: incompatible modules");
  const std::int64_t m = lhs.modulus();
  const std::size_t n = lhs.cols();
  // Zassenhaus: rows (a, a) for a in lhs and (b, 0) for b in rhs; the part of
  // the span vanishing on the first block is {(0, x) : x in lhs and rhs}.
  std::vector<Row> rows;
  for (const Row& a : lhs.rows()) {
    Row r(2 * n);
    std::copy(a.begin(), a.end(), r.begin());
    std::copy(a.begin(), a.end(), r.begin() + static_cast<std::ptrdiff_t>(n));
    rows.push_back(std::move(r));
  }
  for (const Row& b : rhs.rows()) {
    Row r(2 * n, 0);
    std::copy(b.begin(), b.end(), r.begin());
    rows.push_back(std::move(r));
  }
  HowellBasis full = howell_form(MatrixOverFactor(m, 2 * n, std::move(rows)));
  std::vector<Row> picked;
  for (std::size_t i = 0; i < full.rank(); ++i) {
    if (full.pivot(i) >= n)
      picked.emplace_back(full.rows()[i].begin() + static_cast<std::ptrdiff_t>(n), full.rows()[i].end());
  }
  return howell_form(MatrixOverFactor(m, n, std::move(picked)));
}

}  // namespace salg
