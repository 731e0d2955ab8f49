#include <doctest.h>

#include "hesse/hesse.hpp"
#include "hesse/random.hpp"

using namespace hesse;

namespace {

ProjectivePoint pt(const Field& f, std::initializer_list<long long> c) {
  return ProjectivePoint::from_ints(f, c);
}

BilinearForm orthocenter_form(const Field& f) {
  const auto s = [&](long long v) { return Scalar::from_int(f, v); };
  return BilinearForm(
      Matrix::from_rows({{s(1), s(0), s(-1)}, {s(0), s(1), s(-1)}, {s(-1), s(-1), s(1)}}));
}

// Orthocenter configuration with plain integers, independent of the library.
struct IntConfig {
  std::vector<std::vector<long long>> m{{1, 0, -1}, {0, 1, -1}, {-1, -1, 1}};
  std::array<std::vector<long long>, 4> pts{{{0, 0, 1}, {4, 0, 1}, {1, 3, 1}, {1, 1, 1}}};
  long long pair(int i, int j) const {
    long long s = 0;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) s += pts[i][r] * m[r][c] * pts[j][c];
    return s;
  }
};

bool same_unordered_pair(const LinePair& x, const LinePair& y) {
  return (x.first == y.first && x.second == y.second) ||
         (x.first == y.second && x.second == y.first);
}

std::vector<Field> fields() {
  return {Field::rationals(), Field::prime(3),  Field::prime(5),
          Field::prime(7),    Field::prime(11), Field::prime(13)};
}

}  // namespace

TEST_CASE("conjugacy_expression examples") {
  const Field q = Field::rationals();
  const auto s = BilinearForm::identity(q, 3);
  const auto e1 = pt(q, {1, 0, 0}), e2 = pt(q, {0, 1, 0});
  CHECK(conjugacy_expression(s, e1, e2, pt(q, {0, 0, 1}), pt(q, {1, 1, 1})).is_zero());
  CHECK(conjugacy_expression(s, e1, e2, pt(q, {1, 1, 1}), pt(q, {1, 2, 0})).to_string() == "1");
  CHECK(conjugacy_expression(BilinearForm::zero(q, 3), e1, e2, pt(q, {1, 1, 1}),
                             pt(q, {1, 2, 0}))
            .is_zero());
  CHECK_THROWS_AS(conjugacy_expression(s, e1, e1.scaled(Scalar::from_int(q, 3)), e2,
                                       pt(q, {0, 0, 1})),
                  DegenerateSpanError);
  CHECK_THROWS_AS(conjugacy_expression(s, pt(q, {1, 0}), e2, e1, pt(q, {0, 0, 1})),
                  MismatchError);
}

TEST_CASE("lines_conjugate examples") {
  const Field q = Field::rationals();
  const auto s = BilinearForm::identity(q, 3);
  CHECK(lines_conjugate(s, line_span(pt(q, {0, 0, 1}), pt(q, {1, 1, 1})),
                        line_span(pt(q, {1, 0, 0}), pt(q, {0, 1, 0}))));

  const IntConfig oracle;
  CHECK(oracle.pair(1, 0) * oracle.pair(3, 2) - oracle.pair(1, 2) * oracle.pair(3, 0) == 0);
  const auto m = orthocenter_form(q);
  const auto bh = line_span(pt(q, {4, 0, 1}), pt(q, {1, 1, 1}));
  const auto ac = line_span(pt(q, {0, 0, 1}), pt(q, {1, 3, 1}));
  CHECK(lines_conjugate(m, bh, ac));

  // the same configuration reduced mod 7
  const Field f7 = Field::prime(7);
  CHECK(lines_conjugate(orthocenter_form(f7), line_span(pt(f7, {4, 0, 1}), pt(f7, {1, 1, 1})),
                        line_span(pt(f7, {0, 0, 1}), pt(f7, {1, 3, 1}))));

  for (const auto& field : fields()) {
    Rng rng(derive_seed(41, field.modulus()));
    for (int i = 0; i < 300; ++i) {
      const auto cfg = sample_config(field, 2 + i % 3, rng, {3, 2});
      const auto& p = cfg.points();
      const auto l1 = line_span(p[0], p[1]), l2 = line_span(p[2], p[3]);
      REQUIRE(lines_conjugate(cfg.form(), l1, l2) == lines_conjugate(cfg.form(), l2, l1));
    }
  }
}

TEST_CASE("points_orthogonal examples") {
  const Field q = Field::rationals();
  const auto s = BilinearForm::identity(q, 3);
  CHECK(points_orthogonal(s, pt(q, {1, 0, 0}), pt(q, {0, 1, 0})));
  CHECK_FALSE(points_orthogonal(s, pt(q, {1, 0, 0}), pt(q, {1, 1, 0})));
  CHECK(points_orthogonal(BilinearForm::zero(q, 3), pt(q, {1, 0, 0}), pt(q, {1, 1, 0})));
}

TEST_CASE("opposite_pairs follows the partition order") {
  const Field q = Field::rationals();
  const auto a = pt(q, {1, 0, 0}), b = pt(q, {0, 1, 0}), c = pt(q, {0, 0, 1}),
             d = pt(q, {1, 1, 1});
  const auto pairs = opposite_pairs({a, b, c, d});
  CHECK(pairs[0].first == line_span(a, b));
  CHECK(pairs[0].second == line_span(c, d));
  CHECK(pairs[1].first == line_span(a, c));
  CHECK(pairs[1].second == line_span(b, d));
  CHECK(pairs[2].first == line_span(a, d));
  CHECK(pairs[2].second == line_span(b, c));

  const auto relabeled = opposite_pairs({b, a, d, c});
  for (const auto& x : pairs) {
    bool found = false;
    for (const auto& y : relabeled) found = found || same_unordered_pair(x, y);
    CHECK(found);
  }

  // a, b, c collinear; d off the line
  const auto cc = pt(q, {1, 1, 0});
  const auto degenerate = opposite_pairs({a, b, cc, d});
  CHECK(degenerate[0].first == degenerate[1].first);
  CHECK(degenerate[0].first == degenerate[2].second);

  CHECK_THROWS_AS(opposite_pairs({a, b, a.scaled(Scalar::from_int(q, 2)), d}),
                  DuplicatePointError);
}

TEST_CASE("QuadrangleConfig validation") {
  const Field q = Field::rationals();
  const auto a = pt(q, {1, 0, 0}), b = pt(q, {0, 1, 0}), c = pt(q, {0, 0, 1});
  CHECK_THROWS_AS(QuadrangleConfig({a, b, c, pt(q, {0, 0, 5})}, BilinearForm::identity(q, 3)),
                  DuplicatePointError);
  CHECK_THROWS_AS(QuadrangleConfig({a, b, c, pt(q, {1, 1, 1})}, BilinearForm::identity(q, 4)),
                  ShapeError);
  CHECK_THROWS_AS(QuadrangleConfig({a, b, c, pt(q, {1, 1, 1})},
                                   BilinearForm::identity(Field::prime(3), 3)),
                  MismatchError);
}

TEST_CASE("orthocenter configuration is fully conjugate") {
  const Field q = Field::rationals();
  const QuadrangleConfig cfg(
      {pt(q, {0, 0, 1}), pt(q, {4, 0, 1}), pt(q, {1, 3, 1}), pt(q, {1, 1, 1})},
      orthocenter_form(q));
  const auto report = hesse_verdict(cfg);

  const IntConfig o;
  const long long h1 = o.pair(0, 2) * o.pair(1, 3) - o.pair(0, 3) * o.pair(1, 2);
  const long long h2 = o.pair(0, 1) * o.pair(2, 3) - o.pair(0, 3) * o.pair(1, 2);
  const long long h3 = o.pair(0, 1) * o.pair(2, 3) - o.pair(0, 2) * o.pair(1, 3);
  CHECK(report.h[0] == Scalar::from_int(q, h1));
  CHECK(report.h[1] == Scalar::from_int(q, h2));
  CHECK(report.h[2] == Scalar::from_int(q, h3));
  CHECK(h1 == 0);
  CHECK(h2 == 0);
  CHECK(h3 == 0);
  CHECK(report.conjugate == std::array<bool, 3>{true, true, true});
  CHECK(report.verdict == Verdict::hesse_confirmed);
  CHECK(report.radical_sides == std::array<bool, 6>{});
}

TEST_CASE("classify covers every flag pattern") {
  CHECK(classify({true, true, true}) == Verdict::hesse_confirmed);
  CHECK(classify({true, true, false}) == Verdict::violation);
  CHECK(classify({false, true, true}) == Verdict::violation);
  CHECK(classify({true, false, false}) == Verdict::not_applicable);
  CHECK(classify({false, false, false}) == Verdict::not_applicable);
  CHECK(to_string(Verdict::violation) == "VIOLATION");
}

TEST_CASE("generic configuration over GF(7) is not applicable") {
  const Field f7 = Field::prime(7);
  Rng rng(2);
  for (int attempt = 0;; ++attempt) {
    REQUIRE(attempt < 1000);
    const auto cfg = sample_config(f7, 2, rng);
    const auto report = hesse_verdict(cfg);
    if (report.conjugate != std::array<bool, 3>{}) continue;
    CHECK(report.verdict == Verdict::not_applicable);
    break;
  }
}

TEST_CASE("three-term identity on random configurations") {
  for (const auto& field : fields()) {
    CAPTURE(field.name());
    Rng rng(derive_seed(3, field.modulus()));
    for (int i = 0; i < 1000; ++i) {
      const auto r = hesse_verdict(sample_config(field, 2 + i % 3, rng));
      REQUIRE((r.h[0] - r.h[1] + r.h[2]).is_zero());
      REQUIRE(r.verdict != Verdict::violation);
    }
  }
}

TEST_CASE("scale covariance of the h-values") {
  for (const auto& field : fields()) {
    Rng rng(derive_seed(13, field.modulus()));
    for (int i = 0; i < 300; ++i) {
      const auto cfg = sample_config(field, 2 + i % 2, rng);
      std::array<Scalar, 4> lambda{sample_nonzero_scalar(field, rng),
                                   sample_nonzero_scalar(field, rng),
                                   sample_nonzero_scalar(field, rng),
                                   sample_nonzero_scalar(field, rng)};
      const auto& p = cfg.points();
      const QuadrangleConfig scaled({p[0].scaled(lambda[0]), p[1].scaled(lambda[1]),
                                     p[2].scaled(lambda[2]), p[3].scaled(lambda[3])},
                                    cfg.form());
      const auto r = hesse_verdict(cfg), s = hesse_verdict(scaled);
      const Scalar factor = lambda[0] * lambda[1] * lambda[2] * lambda[3];
      for (int k = 0; k < 3; ++k) REQUIRE(s.h[k] == factor * r.h[k]);
      REQUIRE(s.conjugate == r.conjugate);

      // a single rescaled point multiplies both terms by the same factor
      const auto& f = cfg.form();
      const Scalar t1 = f.pair(p[0], p[2]) * f.pair(p[1], p[3]);
      const Scalar t2 = f.pair(p[0], p[3]) * f.pair(p[1], p[2]);
      const auto a = p[0].scaled(lambda[0]);
      REQUIRE(f.pair(a, p[2]) * f.pair(p[1], p[3]) == lambda[0] * t1);
      REQUIRE(f.pair(a, p[3]) * f.pair(p[1], p[2]) == lambda[0] * t2);
    }
  }
}

TEST_CASE("antisymmetry and pair symmetry of the conjugacy expression") {
  for (const auto& field : fields()) {
    Rng rng(derive_seed(17, field.modulus()));
    for (int i = 0; i < 300; ++i) {
      const auto cfg = sample_config(field, 2 + i % 3, rng);
      const auto& f = cfg.form();
      const auto& [p, q, r, s] = cfg.points();
      const Scalar e = conjugacy_expression(f, p, q, r, s);
      REQUIRE(conjugacy_expression(f, q, p, r, s) == -e);
      REQUIRE(conjugacy_expression(f, p, q, s, r) == -e);
      REQUIRE(conjugacy_expression(f, r, s, p, q) == e);
    }
  }
}

TEST_CASE("lines_conjugate is invariant under re-spanning, exhaustively over GF(3)") {
  const Field f3 = Field::prime(3);
  const auto pts = enumerate_projective_space(f3, 2);
  Rng rng(23);
  std::vector<BilinearForm> forms{BilinearForm::identity(f3, 3), BilinearForm::zero(f3, 3),
                                  sample_form(f3, 3, rng)};
  // all distinct lines of P^2(GF(3)) by their first spanning pair
  std::vector<ProjectiveLine> lines;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      auto l = line_span(pts[i], pts[j]);
      bool fresh = true;
      for (const auto& m : lines) fresh = fresh && !(m == l);
      if (fresh) lines.push_back(std::move(l));
    }
  }
  REQUIRE(lines.size() == 13);
  for (const auto& f : forms) {
    for (const auto& l1 : lines) {
      for (const auto& l2 : lines) {
        const bool base = lines_conjugate(f, l1, l2);
        for (long long alpha = 0; alpha < 3; ++alpha) {
          for (long long beta = 1; beta < 3; ++beta) {
            const auto moved = combine(Scalar::from_int(f3, alpha), l1.first(),
                                       Scalar::from_int(f3, beta), l1.second());
            const auto respanned = line_span(l1.first(), moved);
            REQUIRE(respanned == l1);
            REQUIRE(lines_conjugate(f, respanned, l2) == base);
            REQUIRE(lines_conjugate(f, l2, respanned) == base);
          }
        }
      }
    }
  }
}

TEST_CASE("sample_hesse_config satisfies the hypothesis") {
  const Field f5 = Field::prime(5);
  const auto cfg = sample_hesse_config(f5, 2, 7);
  const auto r = hesse_verdict(cfg);
  CHECK(r.conjugate == std::array<bool, 3>{true, true, true});
  CHECK(r.verdict == Verdict::hesse_confirmed);

  const auto again = sample_hesse_config(f5, 2, 7);
  for (int i = 0; i < 4; ++i) {
    for (std::size_t k = 0; k < 3; ++k) CHECK(again.points()[i][k] == cfg.points()[i][k]);
  }
  CHECK(again.form() == cfg.form());

  for (const auto& field : fields()) {
    for (std::size_t dim = 2; dim <= 4; ++dim) {
      for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto report = hesse_verdict(sample_hesse_config(field, dim, seed));
        REQUIRE(report.conjugate[0]);
        REQUIRE(report.conjugate[1]);
        REQUIRE(report.verdict == Verdict::hesse_confirmed);
      }
    }
  }

  CHECK_THROWS_AS(sample_hesse_config(f5, 1, 0), ShapeError);
  CHECK_THROWS_AS(sample_hesse_config(f5, 2, 0, {0, {}}), RetryBudgetExceeded);
}

TEST_CASE("zero form satisfies the hypothesis for any points") {
  const Field q = Field::rationals();
  const QuadrangleConfig cfg(
      {pt(q, {1, 0, 0}), pt(q, {0, 1, 0}), pt(q, {0, 0, 1}), pt(q, {1, 2, 3})},
      BilinearForm::zero(q, 3));
  const auto r = hesse_verdict(cfg);
  CHECK(r.verdict == Verdict::hesse_confirmed);
  CHECK(r.radical_sides == std::array<bool, 6>{true, true, true, true, true, true});
}

TEST_CASE("radical sides are flagged") {
  const Field q = Field::rationals();
  const auto s = [&](long long v) { return Scalar::from_int(q, v); };
  // radical is span(e1, e2); the side ab = span(e1, e2) lies in it
  const BilinearForm f(Matrix::from_rows({{s(0), s(0), s(0)}, {s(0), s(0), s(0)}, {s(0), s(0), s(1)}}));
  const QuadrangleConfig cfg(
      {pt(q, {1, 0, 0}), pt(q, {0, 1, 0}), pt(q, {1, 1, 1}), pt(q, {2, 1, 5})}, f);
  const auto r = hesse_verdict(cfg);
  CHECK(r.radical_sides[0]);
  CHECK(r.conjugate[0]);
  for (std::size_t i = 1; i < 6; ++i) CHECK_FALSE(r.radical_sides[i]);
}

TEST_CASE("altitude demo") {
  const Field q = Field::rationals();
  const auto s = [&](const char* v) { return Scalar::parse(q, v); };
  const std::array<AffinePoint, 3> t1{AffinePoint{s("0"), s("0")}, AffinePoint{s("4"), s("0")},
                                      AffinePoint{s("1"), s("3")}};
  const auto demo = altitude_demo(t1, s("1"));
  CHECK(demo.orthocenter.x.to_string() == "1");
  CHECK(demo.orthocenter.y.to_string() == "1");
  CHECK(demo.config.form() == orthocenter_form(q));
  CHECK(demo.report.conjugate == std::array<bool, 3>{true, true, true});
  CHECK(demo.concurrent);
  CHECK(demo.ah_perpendicular_bc);
  CHECK(demo.third_pair_matches_perpendicularity);

  const std::array<AffinePoint, 3> t2{AffinePoint{s("0"), s("0")}, AffinePoint{s("2"), s("0")},
                                      AffinePoint{s("1"), s("2")}};
  const auto h2 = orthocenter(t2);
  CHECK(h2.x.to_string() == "1");
  CHECK(h2.y.to_string() == "1/2");

  CHECK_THROWS_AS(altitude_demo(t1, s("0")), DegenerateCircleError);
  const auto point_circle = altitude_demo(t1, s("0"), {true});
  CHECK(point_circle.report.verdict == Verdict::hesse_confirmed);

  const std::array<AffinePoint, 3> flat{AffinePoint{s("0"), s("0")}, AffinePoint{s("1"), s("1")},
                                        AffinePoint{s("3"), s("3")}};
  CHECK_THROWS_AS(altitude_demo(flat, s("1")), DegenerateTriangleError);
}

TEST_CASE("seeded degenerate and nondegenerate form samplers") {
  for (const auto& field : fields()) {
    Rng rng(derive_seed(61, field.modulus()));
    for (int i = 0; i < 100; ++i) {
      const std::size_t n = 2 + i % 3;
      REQUIRE_FALSE(is_degenerate(sample_nondegenerate_form(field, n, rng)));
      REQUIRE(is_degenerate(sample_degenerate_form(field, n, rng)));
    }
  }
}
