#include <doctest.h>

#include "hesse/hesse.hpp"
#include "hesse/oracle.hpp"
#include "hesse/random.hpp"

using namespace hesse;
using namespace hesse::oracle;

namespace {

ProjectivePoint pt(const Field& f, std::initializer_list<long long> c) {
  return ProjectivePoint::from_ints(f, c);
}

}  // namespace

TEST_CASE("enumerate_line_points") {
  const Field f3 = Field::prime(3);
  const auto e = enumerate_line_points(line_span(pt(f3, {1, 0, 0}), pt(f3, {0, 1, 0})));
  REQUIRE(e.points.size() == 4);
  const std::array<ProjectivePoint, 4> expected{pt(f3, {1, 0, 0}), pt(f3, {1, 1, 0}),
                                                pt(f3, {1, 2, 0}), pt(f3, {0, 1, 0})};
  for (std::size_t i = 0; i < 4; ++i) CHECK(points_equal(e.points[i], expected[i]));

  const Field f5 = Field::prime(5);
  Rng rng(1);
  for (int i = 0; i < 50; ++i) {
    const auto a = sample_point(f5, 3, rng), b = sample_point(f5, 3, rng);
    if (points_equal(a, b)) continue;
    const auto l = line_span(a, b);
    const auto pts = enumerate_line_points(l).points;
    REQUIRE(pts.size() == 6);
    for (std::size_t x = 0; x < pts.size(); ++x) {
      REQUIRE(l.contains(pts[x]));
      for (std::size_t y = x + 1; y < pts.size(); ++y) REQUIRE_FALSE(points_equal(pts[x], pts[y]));
    }
  }

  const Field q = Field::rationals();
  CHECK_THROWS_AS(enumerate_line_points(line_span(pt(q, {1, 0}), pt(q, {0, 1}))),
                  UnsupportedFieldError);
}

TEST_CASE("brute_conjugate examples") {
  const Field f3 = Field::prime(3);
  const auto s = BilinearForm::identity(f3, 3);
  const auto l1 = line_span(pt(f3, {1, 0, 0}), pt(f3, {0, 1, 0}));

  const auto yes = brute_conjugate(s, l1, line_span(pt(f3, {0, 0, 1}), pt(f3, {1, 1, 1})));
  CHECK(yes.conjugate);
  REQUIRE(yes.witness.has_value());
  CHECK(points_equal(*yes.witness, pt(f3, {1, 2, 0})));

  const auto no = brute_conjugate(s, l1, line_span(pt(f3, {1, 1, 1}), pt(f3, {1, 2, 0})));
  CHECK_FALSE(no.conjugate);
  CHECK_FALSE(no.witness.has_value());

  CHECK(brute_conjugate(BilinearForm::zero(f3, 3), l1, l1).conjugate);

  const Field q = Field::rationals();
  CHECK_THROWS_AS(brute_conjugate(BilinearForm::identity(q, 2),
                                  line_span(pt(q, {1, 0}), pt(q, {0, 1})),
                                  line_span(pt(q, {1, 0}), pt(q, {0, 1}))),
                  UnsupportedFieldError);
}

TEST_CASE("witnesses are sound and agree with the determinant criterion") {
  for (const std::uint64_t p : {3u, 5u, 7u}) {
    const Field field = Field::prime(p);
    Rng rng(p);
    for (int i = 0; i < 300; ++i) {
      const auto cfg = sample_config(field, 2 + i % 2, rng);
      const auto& [a, b, c, d] = cfg.points();
      const auto l1 = line_span(a, b), l2 = line_span(c, d);
      const auto r = brute_conjugate(cfg.form(), l1, l2);
      REQUIRE(r.conjugate == lines_conjugate(cfg.form(), l1, l2));
      if (r.conjugate) {
        REQUIRE(l1.contains(*r.witness));
        for (const auto& f : enumerate_line_points(l2).points) {
          REQUIRE(cfg.form().pair(*r.witness, f).is_zero());
        }
      }
    }
  }
}

TEST_CASE("scan over P^2(GF(3))") {
  const Field f3 = Field::prime(3);
  const auto identity = lemma_agreement_scan(f3, 2, {BilinearForm::identity(f3, 3)});
  CHECK(identity.tuples_scanned == 13 * 12 * 11 * 10);
  CHECK(identity.mismatches.empty());

  const auto zero = lemma_agreement_scan(f3, 2, {BilinearForm::zero(f3, 3)}, {kDefaultScanBudget, 2});
  CHECK(zero.mismatches.empty());
  CHECK(zero.conjugate_count == zero.tuples_scanned);
}

TEST_CASE("scan result does not depend on the thread count") {
  const Field f3 = Field::prime(3);
  Rng rng(9);
  const std::vector<BilinearForm> forms{sample_form(f3, 3, rng)};
  const auto one = lemma_agreement_scan(f3, 2, forms, {kDefaultScanBudget, 1});
  const auto three = lemma_agreement_scan(f3, 2, forms, {kDefaultScanBudget, 3});
  CHECK(one.tuples_scanned == three.tuples_scanned);
  CHECK(one.conjugate_count == three.conjugate_count);
  CHECK(one.mismatches.empty());
}

TEST_CASE("scan budget guard") {
  CHECK(projective_space_size(3, 2) == 13);
  CHECK(projective_space_size(5, 2) == 31);
  CHECK(projective_space_size(13, 3) == 2380);
  const Field f13 = Field::prime(13);
  CHECK_THROWS_AS(lemma_agreement_scan(f13, 3, {BilinearForm::identity(f13, 4)}),
                  ScanTooLargeError);
  const Field f7 = Field::prime(7);
  CHECK_THROWS_AS(lemma_agreement_scan(f7, 2, {BilinearForm::identity(f7, 3)}),
                  ScanTooLargeError);
  CHECK_THROWS_AS(lemma_agreement_scan(Field::rationals(), 2, {}), UnsupportedFieldError);
  const Field f3 = Field::prime(3);
  CHECK_THROWS_AS(lemma_agreement_scan(f3, 2, {BilinearForm::identity(f3, 4)}), ShapeError);
}
