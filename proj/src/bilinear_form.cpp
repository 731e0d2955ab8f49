#include "hesse/bilinear_form.hpp"

#include "hesse/random.hpp"

namespace hesse {

BilinearForm::BilinearForm(Matrix matrix) : matrix_(std::move(matrix)) {
  if (!matrix_.is_square()) {
    throw ShapeError("form matrix must be square, got " + std::to_string(matrix_.rows()) + "x" +
                     std::to_string(matrix_.cols()));
  }
  for (std::size_t i = 0; i < matrix_.rows(); ++i) {
    for (std::size_t j = i + 1; j < matrix_.cols(); ++j) {
      if (!(matrix_(i, j) == matrix_(j, i))) {
        throw NotSymmetricError("form matrix is not symmetric at (" + std::to_string(i) + ", " +
                                std::to_string(j) + "): " + matrix_(i, j).to_string() +
                                " != " + matrix_(j, i).to_string());
      }
    }
  }
}

BilinearForm BilinearForm::identity(const Field& field, std::size_t size) {
  return BilinearForm(Matrix::identity(field, size));
}

BilinearForm BilinearForm::zero(const Field& field, std::size_t size) {
  return BilinearForm(Matrix(field, size, size));
}

Vector BilinearForm::covector(std::span<const Scalar> u) const { return matrix_.apply(u); }

Scalar BilinearForm::pair(std::span<const Scalar> u, std::span<const Scalar> v) const {
  if (u.size() != size() || v.size() != size()) {
    throw ShapeError("form of size " + std::to_string(size()) + " paired with vectors of length " +
                     std::to_string(u.size()) + " and " + std::to_string(v.size()));
  }
  return dot(u, matrix_.apply(v));
}

void BilinearForm::require_point(const ProjectivePoint& p) const {
  if (p.coords().size() != size()) {
    throw ShapeError("point in P^" + std::to_string(p.dim()) + " used with a form of size " +
                     std::to_string(size()));
  }
  if (!(p.field() == field())) {
    throw FieldMismatchError("point over " + p.field().name() + " used with a form over " +
                             field().name());
  }
}

Scalar BilinearForm::pair(const ProjectivePoint& p, const ProjectivePoint& q) const {
  require_point(p);
  require_point(q);
  return pair(p.coords(), q.coords());
}

bool on_quadric(const BilinearForm& form, const ProjectivePoint& p) {
  return form.pair(p, p).is_zero();
}

Scalar form_determinant(const BilinearForm& form) { return determinant(form.matrix()); }

bool is_degenerate(const BilinearForm& form) { return form_determinant(form).is_zero(); }

std::vector<Vector> radical(const BilinearForm& form) { return kernel_basis(form.matrix()); }

BilinearForm restrict_to_line(const BilinearForm& form, const ProjectiveLine& line) {
  const auto& a = line.first();
  const auto& b = line.second();
  const Scalar ab = form.pair(a, b);
  return BilinearForm(Matrix::from_rows({{form.pair(a, a), ab}, {ab, form.pair(b, b)}}));
}

bool line_in_radical(const BilinearForm& form, const ProjectiveLine& line) {
  const auto is_zero_vector = [](const Vector& v) {
    for (const auto& s : v) {
      if (!s.is_zero()) return false;
    }
    return true;
  };
  return is_zero_vector(form.covector(line.first().coords())) &&
         is_zero_vector(form.covector(line.second().coords()));
}

namespace {

bool quadruple_identity_holds(const BilinearForm& form, const ProjectivePoint& a,
                              const ProjectivePoint& b, const ProjectivePoint& c,
                              const ProjectivePoint& d) {
  return form.pair(a, c) * form.pair(b, d) == form.pair(a, d) * form.pair(b, c);
}

ProjectivePoint sample_point(const Field& field, std::size_t size, Rng& rng) {
  for (;;) {
    Vector v;
    for (std::size_t i = 0; i < size; ++i) v.push_back(sample_scalar(field, rng));
    for (const auto& s : v) {
      if (!s.is_zero()) return ProjectivePoint(std::move(v));
    }
  }
}

}  // namespace

DegeneracyTestResult dim2_hesse_degeneracy_test(const BilinearForm& form,
                                                const DegeneracyTestOptions& options) {
  if (form.size() != 2) {
    throw ShapeError("the quadruple criterion applies to 2x2 forms, got size " +
                     std::to_string(form.size()));
  }
  DegeneracyTestResult result;
  result.degenerate = true;

  if (options.mode == DegeneracyMode::exhaustive) {
    if (!form.field().is_finite()) {
      throw UnsupportedModeError("exhaustive mode needs a finite field");
    }
    const auto line = enumerate_projective_space(form.field(), 1);
    const std::size_t m = line.size();
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        for (std::size_t c = 0; c < m; ++c) {
          for (std::size_t d = 0; d < m; ++d) {
            if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
            ++result.quadruples_checked;
            if (!quadruple_identity_holds(form, line[a], line[b], line[c], line[d])) {
              result.degenerate = false;
              result.counterexample = {line[a], line[b], line[c], line[d]};
              return result;
            }
          }
        }
      }
    }
    return result;
  }

  Rng rng(options.seed);
  for (std::size_t trial = 0; trial < options.samples; ++trial) {
    std::array<std::optional<ProjectivePoint>, 4> q;
    for (std::size_t k = 0; k < 4;) {
      auto p = sample_point(form.field(), 2, rng);
      bool fresh = true;
      for (std::size_t j = 0; j < k; ++j) fresh = fresh && !points_equal(*q[j], p);
      if (fresh) q[k++] = std::move(p);
    }
    ++result.quadruples_checked;
    if (!quadruple_identity_holds(form, *q[0], *q[1], *q[2], *q[3])) {
      result.degenerate = false;
      result.counterexample = {*q[0], *q[1], *q[2], *q[3]};
      return result;
    }
  }
  return result;
}

}  // namespace hesse
