#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hesse/field.hpp"
#include "hesse/linalg.hpp"

namespace hesse {

/// A point of P^n over a field, held as one representative vector of length n+1.
/// The representative is stored verbatim; equality is up to a nonzero scale.
class ProjectivePoint {
 public:
  /// Throws ShapeError for fewer than two coordinates, FieldMismatchError for
  /// mixed fields and ZeroVectorError for the zero vector.
  explicit ProjectivePoint(Vector coords);

  static ProjectivePoint from_ints(const Field& field, std::initializer_list<long long> coords);

  const Field& field() const noexcept { return coords_.front().field(); }
  std::size_t dim() const noexcept { return coords_.size() - 1; }
  std::span<const Scalar> coords() const noexcept { return coords_; }
  const Scalar& operator[](std::size_t i) const { return coords_[i]; }

  ProjectivePoint scaled(const Scalar& lambda) const;

  /// The representative whose first nonzero coordinate is 1. For output and
  /// hashing only; arithmetic always uses the stored representative.
  Vector normalized() const;

 private:
  Vector coords_;
};

/// Throws MismatchError when the two points live in different spaces.
void require_compatible(const ProjectivePoint& p, const ProjectivePoint& q);

/// True iff the representatives are proportional (every 2x2 minor vanishes).
bool points_equal(const ProjectivePoint& p, const ProjectivePoint& q);

/// alpha*p + beta*q on the representatives. Throws ZeroVectorError if the
/// combination vanishes.
ProjectivePoint combine(const Scalar& alpha, const ProjectivePoint& p, const Scalar& beta,
                        const ProjectivePoint& q);

/// Rank of the matrix whose rows are the given representatives.
std::size_t span_rank(std::span<const ProjectivePoint> points);

/// The line spanned by two distinct points. Points on it are alpha*A + beta*B.
class ProjectiveLine {
 public:
  const ProjectivePoint& first() const noexcept { return first_; }
  const ProjectivePoint& second() const noexcept { return second_; }
  const Field& field() const noexcept { return first_.field(); }
  std::size_t dim() const noexcept { return first_.dim(); }

  bool contains(const ProjectivePoint& p) const;

  /// Equal as sets of points, whatever spanning pairs were used.
  friend bool operator==(const ProjectiveLine& a, const ProjectiveLine& b);

 private:
  friend ProjectiveLine line_span(const ProjectivePoint&, const ProjectivePoint&);
  ProjectiveLine(ProjectivePoint a, ProjectivePoint b)
      : first_(std::move(a)), second_(std::move(b)) {}

  ProjectivePoint first_;
  ProjectivePoint second_;
};

/// Throws DegenerateSpanError when p and q are the same projective point.
ProjectiveLine line_span(const ProjectivePoint& p, const ProjectivePoint& q);

bool collinear(const ProjectivePoint& p, const ProjectivePoint& q, const ProjectivePoint& r);

/// A cross-ratio value: a field element or the point at infinity.
class CrossRatio {
 public:
  static CrossRatio infinity() { return CrossRatio(std::nullopt); }
  static CrossRatio finite(Scalar value) { return CrossRatio(std::move(value)); }

  bool is_infinite() const noexcept { return !value_.has_value(); }
  /// Precondition: !is_infinite().
  const Scalar& value() const { return *value_; }

  std::string to_string() const { return value_ ? value_->to_string() : "Infinity"; }

  friend bool operator==(const CrossRatio& a, const CrossRatio& b) {
    if (a.is_infinite() || b.is_infinite()) return a.is_infinite() == b.is_infinite();
    return *a.value_ == *b.value_;
  }

 private:
  explicit CrossRatio(std::optional<Scalar> v) : value_(std::move(v)) {}
  std::optional<Scalar> value_;
};

/// Writes p3 = a1*p1 + b1*p2 and p4 = a2*p1 + b2*p2 and returns (b1*a2)/(a1*b2),
/// so that cross_ratio((1,0),(0,1),x,y) = (x2*y1)/(x1*y2).
///
/// Throws DuplicatePointError unless the four points are pairwise distinct and
/// NotCollinearError unless they share a line.
CrossRatio cross_ratio(const ProjectivePoint& p1, const ProjectivePoint& p2,
                       const ProjectivePoint& p3, const ProjectivePoint& p4);

/// Every point of P^n(GF(p)) once, as normalized representatives. Ordered by
/// the position of the leading 1, then lexicographically by the remaining
/// residues. Throws UnsupportedFieldError over Q.
std::vector<ProjectivePoint> enumerate_projective_space(const Field& field, std::size_t dim);

}  // namespace hesse
