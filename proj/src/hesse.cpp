#include "hesse/hesse.hpp"

namespace hesse {

Scalar conjugacy_expression(const BilinearForm& form, const ProjectivePoint& p,
                            const ProjectivePoint& q, const ProjectivePoint& r,
                            const ProjectivePoint& s) {
  if (points_equal(p, q) || points_equal(r, s)) {
    throw DegenerateSpanError("conjugacy expression needs two lines; a spanning pair coincides");
  }
  return form.pair(p, r) * form.pair(q, s) - form.pair(p, s) * form.pair(q, r);
}

bool lines_conjugate(const BilinearForm& form, const ProjectiveLine& l1,
                     const ProjectiveLine& l2) {
  return conjugacy_expression(form, l1.first(), l1.second(), l2.first(), l2.second()).is_zero();
}

bool points_orthogonal(const BilinearForm& form, const ProjectivePoint& p,
                       const ProjectivePoint& q) {
  return form.pair(p, q).is_zero();
}

namespace {

void require_distinct(const Quadrangle& pts) {
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (points_equal(pts[i], pts[j])) {
        throw DuplicatePointError("quadrangle points " + std::to_string(i) + " and " +
                                  std::to_string(j) + " coincide");
      }
    }
  }
}

}  // namespace

std::array<LinePair, 3> opposite_pairs(const Quadrangle& pts) {
  require_distinct(pts);
  const auto& [a, b, c, d] = pts;
  return {LinePair{line_span(a, b), line_span(c, d)}, LinePair{line_span(a, c), line_span(b, d)},
          LinePair{line_span(a, d), line_span(b, c)}};
}

QuadrangleConfig::QuadrangleConfig(Quadrangle points, BilinearForm form)
    : points_(std::move(points)), form_(std::move(form)) {
  for (const auto& p : points_) {
    require_compatible(points_[0], p);
    if (p.coords().size() != form_.size()) {
      throw ShapeError("points in P^" + std::to_string(p.dim()) + " but the form has size " +
                       std::to_string(form_.size()));
    }
    if (!(p.field() == form_.field())) {
      throw MismatchError("points over " + p.field().name() + " but the form is over " +
                          form_.field().name());
    }
  }
  require_distinct(points_);
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::hesse_confirmed: return "hesse-confirmed";
    case Verdict::not_applicable: return "not-applicable";
    case Verdict::violation: return "VIOLATION";
  }
  return "unknown";
}

Verdict classify(const std::array<bool, 3>& conjugate) {
  const int count = conjugate[0] + conjugate[1] + conjugate[2];
  if (count == 3) return Verdict::hesse_confirmed;
  if (count == 2) return Verdict::violation;
  return Verdict::not_applicable;
}

HesseReport hesse_verdict(const QuadrangleConfig& config) {
  const auto& f = config.form();
  const auto& [a, b, c, d] = config.points();
  const Scalar ab = f.pair(a, b), ac = f.pair(a, c), ad = f.pair(a, d);
  const Scalar bc = f.pair(b, c), bd = f.pair(b, d), cd = f.pair(c, d);

  HesseReport report{{ac * bd - ad * bc, ab * cd - ad * bc, ab * cd - ac * bd}};
  for (std::size_t i = 0; i < 3; ++i) report.conjugate[i] = report.h[i].is_zero();
  report.verdict = classify(report.conjugate);

  const auto pairs = opposite_pairs(config.points());
  for (std::size_t i = 0; i < 3; ++i) {
    report.radical_sides[2 * i] = line_in_radical(f, pairs[i].first);
    report.radical_sides[2 * i + 1] = line_in_radical(f, pairs[i].second);
  }
  return report;
}

BilinearForm sample_form(const Field& field, std::size_t size, Rng& rng, RationalBounds bounds) {
  Matrix m(field, size, size);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = i; j < size; ++j) {
      m(i, j) = sample_scalar(field, rng, bounds);
      m(j, i) = m(i, j);
    }
  }
  return BilinearForm(std::move(m));
}

BilinearForm sample_nondegenerate_form(const Field& field, std::size_t size, Rng& rng,
                                       RationalBounds bounds) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    auto f = sample_form(field, size, rng, bounds);
    if (!is_degenerate(f)) return f;
  }
  throw RetryBudgetExceeded("no nondegenerate form found in 1000 draws");
}

BilinearForm sample_degenerate_form(const Field& field, std::size_t size, Rng& rng,
                                    RationalBounds bounds) {
  const auto s = sample_form(field, size, rng, bounds);
  Matrix c(field, size, size);
  for (std::size_t i = 0; i + 1 < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) c(i, j) = sample_scalar(field, rng, bounds);
  }
  Matrix m(field, size, size);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      Scalar acc = Scalar::zero(field);
      for (std::size_t k = 0; k < size; ++k) {
        for (std::size_t l = 0; l < size; ++l) acc += c(k, i) * s.matrix()(k, l) * c(l, j);
      }
      m(i, j) = acc;
    }
  }
  return BilinearForm(std::move(m));
}

ProjectivePoint sample_point(const Field& field, std::size_t dim, Rng& rng,
                             RationalBounds bounds) {
  for (;;) {
    Vector v;
    v.reserve(dim + 1);
    bool nonzero = false;
    for (std::size_t i = 0; i <= dim; ++i) {
      v.push_back(sample_scalar(field, rng, bounds));
      nonzero = nonzero || !v.back().is_zero();
    }
    if (nonzero) return ProjectivePoint(std::move(v));
  }
}

QuadrangleConfig sample_config(const Field& field, std::size_t dim, Rng& rng,
                               RationalBounds bounds) {
  auto form = sample_form(field, dim + 1, rng, bounds);
  std::vector<ProjectivePoint> pts;
  while (pts.size() < 4) {
    auto p = sample_point(field, dim, rng, bounds);
    bool fresh = true;
    for (const auto& q : pts) fresh = fresh && !points_equal(p, q);
    if (fresh) pts.push_back(std::move(p));
  }
  return QuadrangleConfig({pts[0], pts[1], pts[2], pts[3]}, std::move(form));
}

QuadrangleConfig sample_hesse_config(const Field& field, std::size_t dim, std::uint64_t seed,
                                     const SamplerOptions& options) {
  if (dim < 2) throw ShapeError("sample_hesse_config needs dim >= 2");
  Rng rng(seed);
  const std::size_t n = dim + 1;
  for (std::size_t attempt = 0; attempt < options.max_attempts; ++attempt) {
    auto form = sample_form(field, n, rng, options.bounds);
    auto a = sample_point(field, dim, rng, options.bounds);
    auto b = sample_point(field, dim, rng, options.bounds);
    auto c = sample_point(field, dim, rng, options.bounds);
    if (points_equal(a, b) || points_equal(a, c) || points_equal(b, c)) continue;

    const Scalar ab = form.pair(a, b), ac = form.pair(a, c), bc = form.pair(b, c);
    Vector u1, u2;
    for (std::size_t i = 0; i < n; ++i) {
      u1.push_back(ac * b[i] - bc * a[i]);
      u2.push_back(ab * c[i] - bc * a[i]);
    }
    const auto kernel =
        kernel_basis(Matrix::from_rows({form.covector(u1), form.covector(u2)}));

    Vector d(n, Scalar::zero(field));
    for (const auto& k : kernel) {
      const Scalar t = sample_scalar(field, rng, options.bounds);
      for (std::size_t i = 0; i < n; ++i) d[i] += t * k[i];
    }
    bool nonzero = false;
    for (const auto& s : d) nonzero = nonzero || !s.is_zero();
    if (!nonzero) continue;
    ProjectivePoint dp(std::move(d));
    if (points_equal(dp, a) || points_equal(dp, b) || points_equal(dp, c)) continue;
    return QuadrangleConfig({std::move(a), std::move(b), std::move(c), std::move(dp)},
                            std::move(form));
  }
  throw RetryBudgetExceeded("sample_hesse_config gave up after " +
                            std::to_string(options.max_attempts) + " attempts (seed " +
                            std::to_string(seed) + ", " + field.name() + ", dim " +
                            std::to_string(dim) + ")");
}

namespace {

Scalar affine_dot(const AffinePoint& u, const AffinePoint& v) { return u.x * v.x + u.y * v.y; }

AffinePoint affine_sub(const AffinePoint& u, const AffinePoint& v) {
  return {u.x - v.x, u.y - v.y};
}

ProjectivePoint homogenize(const AffinePoint& p) {
  return ProjectivePoint({p.x, p.y, Scalar::one(p.x.field())});
}

}  // namespace

AffinePoint orthocenter(const std::array<AffinePoint, 3>& triangle) {
  const auto& [a, b, c] = triangle;
  // X.(C-A) = B.(C-A) and X.(B-A) = C.(B-A)
  const AffinePoint r1 = affine_sub(c, a), r2 = affine_sub(b, a);
  const Scalar rhs1 = affine_dot(b, r1), rhs2 = affine_dot(c, r2);
  const Scalar det = r1.x * r2.y - r1.y * r2.x;
  if (det.is_zero()) throw DegenerateTriangleError("triangle vertices are collinear");
  return {(rhs1 * r2.y - r1.y * rhs2) / det, (r1.x * rhs2 - rhs1 * r2.x) / det};
}

BilinearForm circle_form(const AffinePoint& center, const Scalar& radius_sq) {
  const Field& k = center.x.field();
  const Scalar one = Scalar::one(k), zero = Scalar::zero(k);
  const Scalar constant = center.x * center.x + center.y * center.y - radius_sq;
  return BilinearForm(Matrix::from_rows(
      {{one, zero, -center.x}, {zero, one, -center.y}, {-center.x, -center.y, constant}}));
}

AltitudeDemoReport altitude_demo(const std::array<AffinePoint, 3>& triangle,
                                 const Scalar& radius_sq, const AltitudeDemoOptions& options) {
  if (radius_sq.is_zero() && !options.allow_degenerate) {
    throw DegenerateCircleError("radius^2 = 0 gives a point circle; pass allow_degenerate");
  }
  const AffinePoint h = orthocenter(triangle);
  const auto& [a, b, c] = triangle;
  QuadrangleConfig config({homogenize(a), homogenize(b), homogenize(c), homogenize(h)},
                          circle_form(h, radius_sq));
  HesseReport report = hesse_verdict(config);

  const bool from_a = affine_dot(affine_sub(h, a), affine_sub(c, b)).is_zero();
  const bool from_b = affine_dot(affine_sub(h, b), affine_sub(c, a)).is_zero();
  const bool from_c = affine_dot(affine_sub(h, c), affine_sub(b, a)).is_zero();

  AltitudeDemoReport out{triangle, h, radius_sq, std::move(config), std::move(report)};
  out.concurrent = from_a && from_b && from_c;
  out.ah_perpendicular_bc = from_a;
  out.third_pair_matches_perpendicularity = out.report.conjugate[2] == from_a;
  return out;
}

}  // namespace hesse
