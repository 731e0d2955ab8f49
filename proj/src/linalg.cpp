#include "hesse/linalg.hpp"

#include <utility>

namespace hesse {
namespace {

using IntMatrix = std::vector<std::vector<mpz_class>>;

struct IntEchelon {
  IntMatrix rows;
  std::vector<std::size_t> pivot_cols;
  bool odd_permutation = false;
};

// Fraction-free elimination. After k pivots every entry below the pivot rows is
// a (k+1)x(k+1) minor of the input, so the division by the previous pivot is exact.
IntEchelon bareiss(IntMatrix a) {
  IntEchelon out;
  const std::size_t m = a.size();
  const std::size_t n = m == 0 ? 0 : a[0].size();
  mpz_class previous = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && a[p][c] == 0) ++p;
    if (p == m) continue;
    if (p != r) {
      std::swap(a[p], a[r]);
      out.odd_permutation = !out.odd_permutation;
    }
    for (std::size_t i = r + 1; i < m; ++i) {
      for (std::size_t j = c + 1; j < n; ++j) {
        mpz_class t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
      }
      a[i][c] = 0;
    }
    previous = a[r][c];
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.rows = std::move(a);
  return out;
}

Echelon gaussian(Matrix a) {
  Echelon out{a, {}, false};
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && a(p, c).is_zero()) ++p;
    if (p == m) continue;
    if (p != r) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(r, j));
      out.odd_permutation = !out.odd_permutation;
    }
    const Scalar pivot_inv = a(r, c).inv();
    for (std::size_t i = r + 1; i < m; ++i) {
      if (a(i, c).is_zero()) continue;
      const Scalar factor = a(i, c) * pivot_inv;
      for (std::size_t j = c; j < n; ++j) a(i, j) -= factor * a(r, j);
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.reduced = std::move(a);
  return out;
}

// Scales each row by the lcm of its denominators. Returns the integer rows and
// the product of the scale factors.
std::pair<IntMatrix, mpz_class> clear_denominators(const Matrix& m) {
  IntMatrix rows(m.rows(), std::vector<mpz_class>(m.cols()));
  mpz_class scale = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).rational().get_den_mpz_t());
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const mpq_class& q = m(i, j).rational();
      rows[i][j] = q.get_num() * (l / q.get_den());
    }
    scale *= l;
  }
  return {std::move(rows), scale};
}

}  // namespace

Matrix::Matrix(const Field& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
  if (rows.empty() || rows.front().empty()) throw ShapeError("matrix must be non-empty");
  const Field field = rows.front().front().field();
  Matrix m(field, rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) {
      throw ShapeError("row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                       " entries, expected " + std::to_string(m.cols_));
    }
    for (std::size_t j = 0; j < m.cols_; ++j) {
      if (!(rows[i][j].field() == field)) {
        throw FieldMismatchError("matrix entries come from different fields");
      }
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

Matrix Matrix::identity(const Field& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
  return m;
}

Vector Matrix::apply(std::span<const Scalar> v) const {
  if (v.size() != cols_) {
    throw ShapeError("vector of length " + std::to_string(v.size()) + " applied to a " +
                     std::to_string(rows_) + "x" + std::to_string(cols_) + " matrix");
  }
  Vector out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(dot(row(i), v));
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Scalar dot(std::span<const Scalar> u, std::span<const Scalar> v) {
  if (u.size() != v.size() || u.empty()) {
    throw ShapeError("dot product of vectors with lengths " + std::to_string(u.size()) +
                     " and " + std::to_string(v.size()));
  }
  Scalar sum = u[0] * v[0];
  for (std::size_t i = 1; i < u.size(); ++i) sum += u[i] * v[i];
  return sum;
}

Echelon row_echelon(const Matrix& m) {
  if (m.field().is_finite()) return gaussian(m);
  auto [ints, scale] = clear_denominators(m);
  IntEchelon e = bareiss(std::move(ints));
  Matrix reduced(m.field(), m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      reduced(i, j) = Scalar::from_rational(mpq_class(e.rows[i][j]));
    }
  }
  return Echelon{std::move(reduced), std::move(e.pivot_cols), e.odd_permutation};
}

std::size_t rank(const Matrix& m) { return row_echelon(m).pivot_cols.size(); }

Scalar determinant(const Matrix& m) {
  if (!m.is_square()) throw ShapeError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (m.field().is_finite()) {
    const Echelon e = gaussian(m);
    if (e.pivot_cols.size() < n) return Scalar::zero(m.field());
    Scalar det = Scalar::one(m.field());
    for (std::size_t i = 0; i < n; ++i) det *= e.reduced(i, i);
    return e.odd_permutation ? -det : det;
  }
  auto [ints, scale] = clear_denominators(m);
  const IntEchelon e = bareiss(std::move(ints));
  if (e.pivot_cols.size() < n) return Scalar::zero(m.field());
  // The last Bareiss pivot equals the determinant of the integer matrix.
  mpz_class det = e.rows[n - 1][n - 1];
  if (e.odd_permutation) det = -det;
  return Scalar::from_fraction(m.field(), det, scale);
}

std::vector<Vector> kernel_basis(const Matrix& m) {
  const Echelon e = row_echelon(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (const auto c : e.pivot_cols) is_pivot[c] = true;

  std::vector<Vector> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vector x(n, Scalar::zero(m.field()));
    x[free] = Scalar::one(m.field());
    for (std::size_t k = e.pivot_cols.size(); k-- > 0;) {
      const std::size_t pc = e.pivot_cols[k];
      Scalar acc = Scalar::zero(m.field());
      for (std::size_t j = pc + 1; j < n; ++j) acc += e.reduced(k, j) * x[j];
      x[pc] = -acc / e.reduced(k, pc);
    }
    if (!m.field().is_finite()) {
      // primitive integer representative
      mpz_class l = 1, g = 0;
      for (const auto& s : x) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), s.rational().get_den_mpz_t());
      std::vector<mpz_class> ints;
      for (const auto& s : x) {
        ints.push_back(s.rational().get_num() * (l / s.rational().get_den()));
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints.back().get_mpz_t());
      }
      for (std::size_t j = 0; j < n; ++j) x[j] = Scalar::from_fraction(m.field(), ints[j] / g, 1);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace hesse
