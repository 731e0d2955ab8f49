#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hesse/linalg.hpp"
#include "hesse/projective.hpp"

namespace hesse {

/// A symmetric bilinear form <u, v> = u^T M v on K^(n+1). The associated
/// quadric is the zero set of q(x) = <x, x>. The zero matrix is allowed.
class BilinearForm {
 public:
  /// Throws ShapeError for non-square input and NotSymmetricError if M != M^T.
  explicit BilinearForm(Matrix matrix);

  static BilinearForm identity(const Field& field, std::size_t size);
  static BilinearForm zero(const Field& field, std::size_t size);

  const Matrix& matrix() const noexcept { return matrix_; }
  const Field& field() const noexcept { return matrix_.field(); }
  /// Number of coordinates (n+1 for a form on P^n).
  std::size_t size() const noexcept { return matrix_.rows(); }

  Scalar pair(std::span<const Scalar> u, std::span<const Scalar> v) const;
  Scalar pair(const ProjectivePoint& p, const ProjectivePoint& q) const;
  /// The covector v -> <u, v>, i.e. M u.
  Vector covector(std::span<const Scalar> u) const;

  friend bool operator==(const BilinearForm& a, const BilinearForm& b) {
    return a.matrix_ == b.matrix_;
  }

 private:
  void require_point(const ProjectivePoint& p) const;
  Matrix matrix_;
};

bool on_quadric(const BilinearForm& form, const ProjectivePoint& p);

Scalar form_determinant(const BilinearForm& form);
bool is_degenerate(const BilinearForm& form);
/// Basis of {r : <r, v> = 0 for all v}; empty iff the form is nondegenerate.
std::vector<Vector> radical(const BilinearForm& form);

/// The 2x2 Gram matrix [[<a,a>, <a,b>], [<a,b>, <b,b>]] of the line's spanning pair.
BilinearForm restrict_to_line(const BilinearForm& form, const ProjectiveLine& line);

/// True iff every basis direction of the line lies in the radical.
bool line_in_radical(const BilinearForm& form, const ProjectiveLine& line);

enum class DegeneracyMode { exhaustive, sampled };

struct DegeneracyTestOptions {
  DegeneracyMode mode = DegeneracyMode::exhaustive;
  std::size_t samples = 1000;
  std::uint64_t seed = 0;
};

/// Outcome of the quadruple-identity degeneracy criterion on a 2-dimensional form.
struct DegeneracyTestResult {
  bool degenerate = false;
  std::size_t quadruples_checked = 0;
  /// First quadruple (a, b, c, d) with Q(a,c)Q(b,d) != Q(a,d)Q(b,c), if any.
  std::optional<std::array<ProjectivePoint, 4>> counterexample;
};

/// Decides degeneracy of a 2x2 form by testing Q(a,c)Q(b,d) = Q(a,d)Q(b,c) on
/// quadruples of pairwise non-proportional vectors.
///
/// Exhaustive mode walks every ordered quadruple of distinct points of
/// P^1(GF(p)) and is a decision procedure. Sampled mode draws `samples` seeded
/// quadruples; it is one-sided: a violation proves the form nondegenerate,
/// while the absence of one is only evidence.
///
/// Throws ShapeError unless the form is 2x2 and UnsupportedModeError for
/// exhaustive mode over Q.
DegeneracyTestResult dim2_hesse_degeneracy_test(const BilinearForm& form,
                                                const DegeneracyTestOptions& options = {});

}  // namespace hesse
