#include "doctest.h"

#include <cmath>
#include <cstring>
#include <limits>

#include "anosov/errors.hpp"
#include "anosov/lab.hpp"
#include "oracles.hpp"

using namespace anosov;

namespace {

const SweepRow* find_row(const SweepResult& res, double t, int k) {
  for (const SweepRow& row : res.rows)
    if (row.k == k && std::abs(row.t - t) <= 1e-12 * (1.0 + std::abs(t))) return &row;
  return nullptr;
}

}  // namespace

TEST_CASE("verdict names") {
  CHECK(std::strcmp(to_string(Verdict::inside), "inside") == 0);
  CHECK(std::strcmp(to_string(Verdict::outside), "outside") == 0);
  CHECK(std::strcmp(to_string(Verdict::indeterminate), "indeterminate") == 0);
}

TEST_CASE("thresholds on both routes") {
  ComposedFuchsian cf = compose_fuchsian(schottky_rep(2), 4);
  DomainSource fu = DomainSource::fuchsian(cf);
  DomainSource ge = DomainSource::generic(cf.composed);

  CHECK(fu.is_fuchsian());
  CHECK_FALSE(ge.is_fuchsian());
  CHECK(fu.threshold(1, 1) == doctest::Approx(5.0 / 12.0).epsilon(1e-15));
  CHECK(fu.threshold(1, 2) == doctest::Approx(5.0 / 4.0).epsilon(1e-15));
  CHECK(ge.threshold(1, 1) == doctest::Approx(5.0 / 4.0).epsilon(1e-15));
  CHECK(fu.threshold(2, 1) == doctest::Approx(6.0 / 24.0).epsilon(1e-15));

  CHECK_THROWS_AS(fu.validate_k(0), ValidationError);
  CHECK_THROWS_AS(fu.validate_k(3), ValidationError);
  CHECK_THROWS_AS(fu.threshold(0, 1), ValidationError);

  CHECK_THROWS_AS(DomainSource::fuchsian(
                      ComposedFuchsian{cf.composed, 4, cf.composed}),
                  ValidationError);
}

TEST_CASE("the two membership routes agree on composed representations") {
  ComposedFuchsian cf = compose_fuchsian(schottky_rep(2), 4);
  DomainSource fu = DomainSource::fuchsian(cf);
  DomainSource ge = DomainSource::generic(cf.composed);
  BallIndex ball = enumerate_ball(cf.base.presentation(), 4);

  RealCharacter small(std::vector<double>{0.3, 0.1});
  DomainEstimate mf = membership(fu, 1, 1, small, ball);
  DomainEstimate mg = membership(ge, 1, 1, small, ball);
  CHECK(mf.verdict == Verdict::inside);
  CHECK(mg.verdict == Verdict::inside);
  CHECK(mf.fuchsian_route);
  CHECK_FALSE(mg.fuchsian_route);
  // same infimum up to the exponent factor q - 2k + 1 = 3
  CHECK(mg.criterion == doctest::Approx(3.0 * mf.criterion).epsilon(1e-9));
  CHECK(mg.threshold == doctest::Approx(3.0 * mf.threshold).epsilon(1e-15));

  RealCharacter big(std::vector<double>{9.0, 9.0});
  CHECK(membership(fu, 1, 1, big, ball).verdict == Verdict::outside);
  CHECK(membership(ge, 1, 1, big, ball).verdict == Verdict::outside);
}

TEST_CASE("criterion scales inversely with the character") {
  DomainSource src = DomainSource::fuchsian(compose_fuchsian(schottky_rep(2), 3));
  BallIndex ball = enumerate_ball(src.presentation(), 4);
  RealCharacter phi(std::vector<double>{1.0, 0.3});

  CriterionValue c1 = criterion_inf(src, 1, phi, ball);
  CriterionValue c2 = criterion_inf(src, 1, phi.scaled(2.0), ball);
  CHECK(c1.used > 0);
  CHECK(c1.used == c2.used);
  CHECK(c2.value == doctest::Approx(0.5 * c1.value).epsilon(1e-12));
  CHECK(c1.witness == c2.witness);

  CHECK_THROWS_AS(criterion_inf(src, 1, RealCharacter({0.0, 0.0}), ball),
                  ValidationError);
  CHECK_THROWS_AS(criterion_inf(src, 1, RealCharacter({1.0}), ball), ValidationError);
}

TEST_CASE("membership flips across the predicted boundary") {
  DomainSource src = DomainSource::fuchsian(compose_fuchsian(schottky_rep(2), 4));
  BallIndex ball = enumerate_ball(src.presentation(), 6);
  RealCharacter phi(std::vector<double>{1.0, 0.3});

  double c = criterion_inf(src, 1, phi, ball).value;
  double thr = src.threshold(1, 1);
  double t_star = c / thr;

  DomainEstimate in = membership(src, 1, 1, phi.scaled(t_star * (1.0 - 1e-3)), ball);
  DomainEstimate out = membership(src, 1, 1, phi.scaled(t_star * (1.0 + 1e-3)), ball);
  DomainEstimate edge = membership(src, 1, 1, phi.scaled(t_star), ball);
  CHECK(in.verdict == Verdict::inside);
  CHECK(in.margin > 0.0);
  CHECK(out.verdict == Verdict::outside);
  CHECK(out.margin < 0.0);
  CHECK(!out.witness.empty());
  CHECK(edge.verdict == Verdict::indeterminate);
}

TEST_CASE("growth rate estimate matches a direct scan") {
  Representation base = schottky_rep(2);
  DomainSource src = DomainSource::generic(base);
  BallIndex ball = enumerate_ball(base.presentation(), 4);

  SkEstimate est = s_k_estimate(src, 1, ball);
  CHECK(est.min_norm == 2);

  double best = std::numeric_limits<double>::infinity();
  int used = 0;
  for (const BallEntry& e : ball.entries) {
    if (e.trans_len < 2) continue;
    ++used;
    std::vector<double> mags = oracle::eigen_mags(base.eval(e.word));
    best = std::min(best, std::log(mags[0]) / e.trans_len);
  }
  REQUIRE(used > 0);
  CHECK(est.used == used);
  CHECK(est.value == doctest::Approx(best).epsilon(1e-9));
  CHECK(est.value > 0.0);
}

TEST_CASE("gap series follows the exponent ladder of a composite") {
  ComposedFuchsian cf = compose_fuchsian(schottky_rep(2), 3);
  BallIndex ball = enumerate_ball(cf.base.presentation(), 3);
  GapSeries series = gap_series(cf.composed, 1, ball);
  CHECK(series.k == 1);
  CHECK(series.radius == 3);
  REQUIRE(series.points.size() == ball.entries.size());
  for (std::size_t i = 0; i < series.points.size(); ++i) {
    const BallEntry& e = ball.entries[i];
    double l1 = cf.base.word_spectrum(e.word).log_lambda(1);
    CHECK(series.points[i].norm == e.trans_len);
    CHECK(series.points[i].gap == doctest::Approx(2.0 * l1).epsilon(1e-10));
  }
  CHECK_THROWS_AS(gap_series(cf.composed, 3, ball), ValidationError);
  CHECK_THROWS_AS(gap_series(cf.composed, 0, ball), ValidationError);
}

TEST_CASE("slope fit on frozen series") {
  GapSeries s;
  s.k = 1;
  s.radius = 4;
  s.points = {{1, 1.0, "a"}, {2, 2.0, "ab"}, {4, 4.4, "abab"}};
  SlopeFit fit = growth_slope(s, 0.5);
  CHECK(fit.a == 1.0);
  CHECK(fit.b == 0.0);
  CHECK(fit.used == 2);
  CHECK(fit.witness == "ab");

  GapSeries s2;
  s2.k = 1;
  s2.radius = 4;
  s2.points = {{1, 0.5, "a"}, {4, 3.0, "ab"}};
  SlopeFit fit2 = growth_slope(s2, 0.5);
  CHECK(fit2.a == 0.75);
  CHECK(fit2.b == 0.25);
  CHECK(fit2.used == 1);

  GapSeries empty;
  empty.radius = 4;
  CHECK_THROWS_AS(growth_slope(empty, 0.5), ValidationError);
  CHECK_THROWS_AS(growth_slope(s, 2.0), ValidationError);
}

TEST_CASE("slice boundary is centrally symmetric") {
  DomainSource src = DomainSource::generic(schottky_rep(2));
  BallIndex ball = enumerate_ball(src.presentation(), 4);
  RealCharacter e1(std::vector<double>{1.0, 0.0});
  RealCharacter e2(std::vector<double>{0.0, 1.0});

  SliceResult slice = slice_domain(src, 1, 1, e1, e2, 16, ball);
  REQUIRE(slice.rows.size() == 16);
  CHECK(slice.p == 1);
  CHECK(slice.q == 2);
  for (int j = 0; j < 8; ++j) {
    const SliceAngle& x = slice.rows[j];
    const SliceAngle& y = slice.rows[j + 8];
    CHECK_FALSE(x.degenerate);
    CHECK(x.radius > 0.0);
    CHECK(std::abs(x.radius - y.radius) <= 1e-12 * std::max(1.0, x.radius));
  }
}

TEST_CASE("slice marks invisible directions as degenerate") {
  DomainSource src = DomainSource::generic(schottky_rep(2));
  BallIndex ball = enumerate_ball(src.presentation(), 4);
  RealCharacter e1(std::vector<double>{1.0, 0.0});

  SliceResult slice = slice_domain(src, 1, 1, e1, e1, 8, ball);
  REQUIRE(slice.rows.size() == 8);
  // cos(theta) + sin(theta) vanishes at 3pi/4 and 7pi/4
  CHECK(slice.rows[3].degenerate);
  CHECK(std::isinf(slice.rows[3].radius));
  CHECK(slice.rows[7].degenerate);
  CHECK_FALSE(slice.rows[1].degenerate);
  CHECK_FALSE(slice.rows[5].degenerate);
}

TEST_CASE("ball bounds sandwich the domain") {
  DomainSource src = DomainSource::fuchsian(compose_fuchsian(schottky_rep(2), 4));
  BallIndex ball = enumerate_ball(src.presentation(), 8);
  BoundsReport rep = ball_bounds_check(src, 1, 1, ball, 8, 20240601u);
  CHECK(rep.s_k > 0.0);
  CHECK(rep.r_in > 0.0);
  CHECK(rep.r_in < rep.r_out);
  CHECK(rep.inner_factor == 0.95);
  CHECK(rep.outer_factor == 1.05);
  REQUIRE(rep.rows.size() == 8);
  for (const BoundsRow& row : rep.rows) {
    CHECK(row.inner == Verdict::inside);
    CHECK(row.outer == Verdict::outside);
    CHECK(row.ok);
  }
  CHECK(rep.all_ok);

  CHECK_THROWS_AS(ball_bounds_check(src, 1, 1, ball, 0, 1u), ValidationError);
  CHECK_THROWS_AS(ball_bounds_check(src, 1, 1, ball, 4, 1u, kDefaultBand, 1.2, 1.05),
                  ValidationError);
}

TEST_CASE("nesting relations hold exactly and along rays") {
  Representation base = schottky_rep(2);
  BallIndex ball = enumerate_ball(base.presentation(), 3);
  NestingReport rep = nesting_check(base, 3, 4, ball, 4);
  CHECK(rep.thresholds_ok);
  CHECK(rep.radii_ok);
  CHECK(rep.comparisons > 0);
  CHECK(rep.ray_checks > 0);
  CHECK(rep.violations.empty());
}

TEST_CASE("deformation sweep places the transitions") {
  ComposedFuchsian cf = compose_fuchsian(schottky_rep(2), 4);
  BallIndex ball = enumerate_ball(cf.base.presentation(), 4);
  RealCharacter phi(std::vector<double>{1.0, 0.3});

  DomainSource src = DomainSource::fuchsian(cf);
  double c = criterion_inf(src, 1, phi, ball).value;
  REQUIRE(c > 0.0);

  std::vector<double> grid = {0.0,      0.4 * c,  0.79 * c, 0.81 * c,
                              1.5 * c,  2.39 * c, 2.41 * c, 3.0 * c};
  SweepResult res = deformation_sweep(cf, phi, grid, ball);
  CHECK(res.d == 5);
  CHECK(res.p == 1);
  CHECK(res.q == 4);
  CHECK(res.c == c);
  REQUIRE(res.transitions.size() == 2);
  CHECK(res.transitions[0] / c == doctest::Approx(12.0 / 5.0).epsilon(1e-14));
  CHECK(res.transitions[1] / c == doctest::Approx(4.0 / 5.0).epsilon(1e-14));
  CHECK(res.rows.size() == grid.size() * 2);

  // k = 1 exits at 2.4c, k = 2 at 0.8c
  CHECK(find_row(res, 0.0, 1)->verdict == Verdict::inside);
  CHECK(find_row(res, 0.0, 2)->verdict == Verdict::inside);
  CHECK(find_row(res, 0.4 * c, 2)->verdict == Verdict::inside);
  CHECK(find_row(res, 0.79 * c, 2)->verdict == Verdict::inside);
  CHECK(find_row(res, 0.81 * c, 2)->verdict == Verdict::outside);
  CHECK(find_row(res, 1.5 * c, 1)->verdict == Verdict::inside);
  CHECK(find_row(res, 2.39 * c, 1)->verdict == Verdict::inside);
  CHECK(find_row(res, 2.41 * c, 1)->verdict == Verdict::outside);
  CHECK(find_row(res, 3.0 * c, 1)->verdict == Verdict::outside);
  CHECK(res.pattern_consistent);

  CHECK_THROWS_AS(deformation_sweep(cf, phi, {0.5, 0.5}, ball), ValidationError);
  CHECK_THROWS_AS(deformation_sweep(cf, phi, {-1.0, 0.5}, ball), ValidationError);
}

TEST_CASE("boundary formula") {
  CHECK(boundary_formula(1, 4, 2, 2.0) == doctest::Approx(1.6).epsilon(1e-15));
  CHECK(boundary_formula(1, 4, 1, 1.0) == doctest::Approx(2.4).epsilon(1e-15));
  CHECK_THROWS_AS(boundary_formula(0, 4, 1, 1.0), ValidationError);
  CHECK_THROWS_AS(boundary_formula(1, 4, 3, 1.0), ValidationError);
  CHECK_THROWS_AS(boundary_formula(1, 1, 1, 1.0), ValidationError);
}

TEST_CASE("intersection character") {
  RealCharacter chi = intersection_character(GroupPresentation::surface(2));
  CHECK(chi.rank() == 4);
  CHECK(chi.value(0) == 1.0);
  CHECK(chi.value(1) == 0.0);
  CHECK(chi.eval(Word::parse("acACbdBD")) == 0.0);
  CHECK_THROWS_AS(intersection_character(GroupPresentation::free_group(2)),
                  ValidationError);
}
