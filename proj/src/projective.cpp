#include "hesse/projective.hpp"

namespace hesse {

ProjectivePoint::ProjectivePoint(Vector coords) : coords_(std::move(coords)) {
  if (coords_.size() < 2) {
    throw ShapeError("a projective point needs at least 2 coordinates, got " +
                     std::to_string(coords_.size()));
  }
  bool nonzero = false;
  for (const auto& c : coords_) {
    if (!(c.field() == coords_.front().field())) {
      throw FieldMismatchError("point coordinates come from different fields");
    }
    nonzero = nonzero || !c.is_zero();
  }
  if (!nonzero) throw ZeroVectorError("the zero vector does not represent a projective point");
}

ProjectivePoint ProjectivePoint::from_ints(const Field& field,
                                           std::initializer_list<long long> coords) {
  Vector v;
  v.reserve(coords.size());
  for (const long long c : coords) v.push_back(Scalar::from_int(field, c));
  return ProjectivePoint(std::move(v));
}

ProjectivePoint ProjectivePoint::scaled(const Scalar& lambda) const {
  Vector v = coords_;
  for (auto& c : v) c *= lambda;
  return ProjectivePoint(std::move(v));
}

Vector ProjectivePoint::normalized() const {
  Vector v = coords_;
  for (const auto& c : coords_) {
    if (!c.is_zero()) {
      const Scalar inv = c.inv();
      for (auto& x : v) x *= inv;
      break;
    }
  }
  return v;
}

void require_compatible(const ProjectivePoint& p, const ProjectivePoint& q) {
  if (!(p.field() == q.field())) {
    throw MismatchError("points over " + p.field().name() + " and " + q.field().name());
  }
  if (p.dim() != q.dim()) {
    throw MismatchError("points of dimensions " + std::to_string(p.dim()) + " and " +
                        std::to_string(q.dim()));
  }
}

bool points_equal(const ProjectivePoint& p, const ProjectivePoint& q) {
  require_compatible(p, q);
  const std::size_t n = p.coords().size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!(p[i] * q[j] == p[j] * q[i])) return false;
    }
  }
  return true;
}

ProjectivePoint combine(const Scalar& alpha, const ProjectivePoint& p, const Scalar& beta,
                        const ProjectivePoint& q) {
  require_compatible(p, q);
  Vector v;
  v.reserve(p.coords().size());
  for (std::size_t i = 0; i < p.coords().size(); ++i) v.push_back(alpha * p[i] + beta * q[i]);
  return ProjectivePoint(std::move(v));
}

std::size_t span_rank(std::span<const ProjectivePoint> points) {
  std::vector<Vector> rows;
  rows.reserve(points.size());
  for (const auto& p : points) {
    require_compatible(points.front(), p);
    rows.emplace_back(p.coords().begin(), p.coords().end());
  }
  return rank(Matrix::from_rows(rows));
}

bool ProjectiveLine::contains(const ProjectivePoint& p) const {
  const std::array<ProjectivePoint, 3> pts{first_, second_, p};
  return span_rank(pts) == 2;
}

bool operator==(const ProjectiveLine& a, const ProjectiveLine& b) {
  const std::array<ProjectivePoint, 4> pts{a.first_, a.second_, b.first_, b.second_};
  return span_rank(pts) == 2;
}

ProjectiveLine line_span(const ProjectivePoint& p, const ProjectivePoint& q) {
  if (points_equal(p, q)) {
    throw DegenerateSpanError("cannot span a line from two equal points");
  }
  return ProjectiveLine(p, q);
}

bool collinear(const ProjectivePoint& p, const ProjectivePoint& q, const ProjectivePoint& r) {
  const std::array<ProjectivePoint, 3> pts{p, q, r};
  return span_rank(pts) <= 2;
}

CrossRatio cross_ratio(const ProjectivePoint& p1, const ProjectivePoint& p2,
                       const ProjectivePoint& p3, const ProjectivePoint& p4) {
  const std::array<const ProjectivePoint*, 4> pts{&p1, &p2, &p3, &p4};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (points_equal(*pts[i], *pts[j])) {
        throw DuplicatePointError("cross-ratio needs four distinct points; p" +
                                  std::to_string(i + 1) + " = p" + std::to_string(j + 1));
      }
    }
  }
  const ProjectiveLine line = line_span(p1, p2);
  if (!line.contains(p3) || !line.contains(p4)) {
    throw NotCollinearError("cross-ratio needs four collinear points");
  }

  // A coordinate pair (i, j) on which p1, p2 are independent; Cramer's rule
  // there gives the coefficients up to the common factor 1/minor, which cancels.
  const std::size_t n = p1.coords().size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Scalar minor = p1[i] * p2[j] - p1[j] * p2[i];
      if (minor.is_zero()) continue;
      const auto coeffs = [&](const ProjectivePoint& x) {
        return std::pair{x[i] * p2[j] - x[j] * p2[i], p1[i] * x[j] - p1[j] * x[i]};
      };
      const auto [a1, b1] = coeffs(p3);
      const auto [a2, b2] = coeffs(p4);
      const Scalar den = a1 * b2;
      if (den.is_zero()) return CrossRatio::infinity();
      return CrossRatio::finite(b1 * a2 / den);
    }
  }
  throw DegenerateSpanError("p1 and p2 are proportional");
}

std::vector<ProjectivePoint> enumerate_projective_space(const Field& field, std::size_t dim) {
  if (!field.is_finite()) {
    throw UnsupportedFieldError("cannot enumerate projective space over the rationals");
  }
  const auto p = field.modulus();
  const std::size_t n = dim + 1;
  std::vector<ProjectivePoint> out;
  for (std::size_t lead = 0; lead < n; ++lead) {
    const std::size_t tail = n - lead - 1;
    std::vector<std::uint64_t> digits(tail, 0);
    for (;;) {
      Vector v(n, Scalar::zero(field));
      v[lead] = Scalar::one(field);
      for (std::size_t k = 0; k < tail; ++k) {
        v[lead + 1 + k] = Scalar::from_int(field, static_cast<long long>(digits[k]));
      }
      out.emplace_back(std::move(v));
      std::size_t k = tail;
      while (k > 0 && ++digits[k - 1] == p) digits[--k] = 0;
      if (k == 0) break;
    }
  }
  return out;
}

}  // namespace hesse
