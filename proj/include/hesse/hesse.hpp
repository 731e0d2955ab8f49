#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>

#include "hesse/bilinear_form.hpp"
#include "hesse/projective.hpp"
#include "hesse/random.hpp"

namespace hesse {

/// <p,r><q,s> - <p,s><q,r> on the stored representatives. Its value depends on
/// the representatives; whether it vanishes does not.
///
/// Throws DegenerateSpanError if p = q or r = s.
Scalar conjugacy_expression(const BilinearForm& form, const ProjectivePoint& p,
                            const ProjectivePoint& q, const ProjectivePoint& r,
                            const ProjectivePoint& s);

/// Some point of l1 is orthogonal to every point of l2 (equivalently, the
/// conjugacy expression of their spanning pairs vanishes). Symmetric in l1, l2;
/// a line may be compared with itself.
bool lines_conjugate(const BilinearForm& form, const ProjectiveLine& l1, const ProjectiveLine& l2);

bool points_orthogonal(const BilinearForm& form, const ProjectivePoint& p,
                       const ProjectivePoint& q);

using Quadrangle = std::array<ProjectivePoint, 4>;
using LinePair = std::pair<ProjectiveLine, ProjectiveLine>;

/// (ab, cd), (ac, bd), (ad, bc) in that order. Throws DuplicatePointError.
std::array<LinePair, 3> opposite_pairs(const Quadrangle& points);

/// Four pairwise distinct points (collinear subsets allowed) and a form on the
/// same space. Points keep the caller's order.
class QuadrangleConfig {
 public:
  /// Throws DuplicatePointError, MismatchError or ShapeError.
  QuadrangleConfig(Quadrangle points, BilinearForm form);

  const Quadrangle& points() const noexcept { return points_; }
  const BilinearForm& form() const noexcept { return form_; }
  const Field& field() const noexcept { return form_.field(); }
  std::size_t dim() const noexcept { return points_[0].dim(); }

 private:
  Quadrangle points_;
  BilinearForm form_;
};

enum class Verdict { hesse_confirmed, not_applicable, violation };

std::string to_string(Verdict v);

/// Two flags true and one false is the only impossible pattern.
Verdict classify(const std::array<bool, 3>& conjugate);

/// Names of the six sides in report order: ab, cd, ac, bd, ad, bc.
inline constexpr std::array<const char*, 6> kSideNames{"ab", "cd", "ac", "bd", "ad", "bc"};

struct HesseReport {
  /// h1 = <a,c><b,d> - <a,d><b,c>   (ab | cd)
  /// h2 = <a,b><c,d> - <a,d><b,c>   (ac | bd)
  /// h3 = <a,b><c,d> - <a,c><b,d>   (ad | bc)
  /// so that h1 - h2 + h3 = 0 identically.
  std::array<Scalar, 3> h;
  std::array<bool, 3> conjugate{};
  Verdict verdict = Verdict::not_applicable;
  /// Sides (indexed as in kSideNames) lying entirely in the radical of the
  /// form. Such a side is conjugate to every line.
  std::array<bool, 6> radical_sides{};
};

HesseReport hesse_verdict(const QuadrangleConfig& config);

struct SamplerOptions {
  std::size_t max_attempts = 1000;
  RationalBounds bounds{};
};

/// A random symmetric form, every entry drawn independently.
BilinearForm sample_form(const Field& field, std::size_t size, Rng& rng,
                         RationalBounds bounds = {});
/// Redraws until det != 0. Throws RetryBudgetExceeded after 1000 draws.
BilinearForm sample_nondegenerate_form(const Field& field, std::size_t size, Rng& rng,
                                       RationalBounds bounds = {});
/// C^T S C with S random symmetric and C random with its last row zero, so the
/// rank is at most size - 1.
BilinearForm sample_degenerate_form(const Field& field, std::size_t size, Rng& rng,
                                    RationalBounds bounds = {});
ProjectivePoint sample_point(const Field& field, std::size_t dim, Rng& rng,
                             RationalBounds bounds = {});

/// Four random distinct points and a random form, with no constraint.
QuadrangleConfig sample_config(const Field& field, std::size_t dim, Rng& rng,
                               RationalBounds bounds = {});

/// A random configuration in which (ab, cd) and (ac, bd) are conjugate.
///
/// The form and a, b, c are drawn at random. Both conditions are linear in d:
/// h1 = <<a,c>b - <b,c>a, d> and h2 = <<a,b>c - <b,c>a, d>, so d is taken
/// from the kernel of that 2 x (n+1) system, which has dimension >= n-1.
/// The whole draw is repeated when d vanishes or coincides with a, b or c.
///
/// Throws ShapeError for dim < 2 and RetryBudgetExceeded after
/// options.max_attempts failed draws.
QuadrangleConfig sample_hesse_config(const Field& field, std::size_t dim, std::uint64_t seed,
                                     const SamplerOptions& options = {});

/// Affine point of the real-like plane over Q.
struct AffinePoint {
  Scalar x;
  Scalar y;
};

struct AltitudeDemoOptions {
  bool allow_degenerate = false;
};

struct AltitudeDemoReport {
  std::array<AffinePoint, 3> triangle;
  AffinePoint orthocenter;
  Scalar radius_sq;
  /// Homogenized (A, B, C, H) with the circle form centered at H.
  QuadrangleConfig config;
  HesseReport report;
  /// H lies on all three altitudes, checked directly in the affine chart.
  bool concurrent = false;
  /// (H - A) . (C - B) == 0.
  bool ah_perpendicular_bc = false;
  /// The third conjugacy flag agrees with ah_perpendicular_bc.
  bool third_pair_matches_perpendicularity = false;
};

/// Orthocenter of a triangle over Q as the intersection of the altitudes from
/// B and C. Throws DegenerateTriangleError for collinear vertices.
AffinePoint orthocenter(const std::array<AffinePoint, 3>& triangle);

/// x^2 + y^2 - 2 h_x x z - 2 h_y y z + (h_x^2 + h_y^2 - r^2) z^2.
BilinearForm circle_form(const AffinePoint& center, const Scalar& radius_sq);

/// Runs the quadrangle check on A, B, C and their orthocenter H with a circle
/// centered at H. radius_sq = 0 throws DegenerateCircleError unless
/// options.allow_degenerate is set.
AltitudeDemoReport altitude_demo(const std::array<AffinePoint, 3>& triangle,
                                 const Scalar& radius_sq, const AltitudeDemoOptions& options = {});

}  // namespace hesse
