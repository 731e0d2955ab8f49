#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "hesse/bilinear_form.hpp"
#include "hesse/projective.hpp"

namespace hesse::oracle {

/// All p+1 points of a line over GF(p): A + tB for every residue t, then B.
struct LineEnumeration {
  ProjectiveLine line;
  std::vector<ProjectivePoint> points;
};

/// Throws UnsupportedFieldError over Q.
LineEnumeration enumerate_line_points(const ProjectiveLine& line);

struct BruteResult {
  bool conjugate = false;
  /// A point of l1 orthogonal to every point of l2, when one exists.
  std::optional<ProjectivePoint> witness;
};

/// Checks literally whether some point of l1 is orthogonal to all p+1 points of
/// l2. No shortcut through the spanning pair of l2 is taken.
BruteResult brute_conjugate(const BilinearForm& form, const ProjectiveLine& l1,
                            const ProjectiveLine& l2);

/// (p^(n+1) - 1) / (p - 1)
std::uint64_t projective_space_size(std::uint64_t p, std::size_t dim);

/// Default ceiling on N^4 * |forms| with N = |P^n(GF(p))|. Admits P^2(GF(5))
/// with up to five forms and rejects P^2(GF(7)).
inline constexpr std::uint64_t kDefaultScanBudget = 5'000'000;

struct ScanOptions {
  std::uint64_t budget = kDefaultScanBudget;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

struct ScanMismatch {
  std::size_t form_index;
  std::array<std::size_t, 4> tuple;  // indices into enumerate_projective_space()
  bool brute;
  bool determinant;
};

struct ScanReport {
  Field field;
  std::size_t dim;
  std::size_t forms;
  std::uint64_t tuples_scanned = 0;
  std::uint64_t conjugate_count = 0;
  std::vector<ScanMismatch> mismatches;
  std::chrono::milliseconds wall_time{0};
};

/// Compares brute_conjugate(ab, cd) with the vanishing of the conjugacy
/// expression on every ordered 4-tuple of distinct points of P^n(GF(p)), for
/// every form. The tuple space is split by first-point index across threads;
/// mismatches come back sorted by (form, tuple).
///
/// Throws UnsupportedFieldError over Q and ScanTooLargeError when the budget
/// guard trips.
ScanReport lemma_agreement_scan(const Field& field, std::size_t dim,
                                const std::vector<BilinearForm>& forms,
                                const ScanOptions& options = {});

}  // namespace hesse::oracle
