#include "doctest.h"

#include <string>

#include "anosov/errors.hpp"
#include "anosov/scenario.hpp"

using namespace anosov;

namespace {

template <class Fn>
std::string error_message(Fn&& fn) {
  try {
    fn();
  } catch (const ValidationError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("minimal schottky scenario") {
  Scenario s = parse_scenario_text(R"({
    "name": "pair",
    "presentation": {"kind": "free", "rank": 2},
    "representation": {"builder": "schottky"}
  })");
  CHECK(s.name == "pair");
  CHECK(s.presentation.kind() == PresentationKind::free_group);
  CHECK(s.presentation.rank() == 2);
  CHECK(s.rep.dim() == 2);
  CHECK_FALSE(s.composed.has_value());
  CHECK_FALSE(s.fuchsian_route());
  CHECK_FALSE(s.phi.has_value());
}

TEST_CASE("sym_power scenario with route override") {
  const std::string body = R"({
    "presentation": {"kind": "free", "rank": 2},
    "representation": {"builder": "sym_power", "q": 3,
                       "base": {"builder": "schottky", "mu": 2.5}},
    "characters": {"phi": [1.0, 0.5]}
  })";
  Scenario s = parse_scenario_text(body);
  REQUIRE(s.composed.has_value());
  CHECK(s.composed->q == 3);
  CHECK(s.composed->base.dim() == 2);
  CHECK(s.rep.dim() == 3);
  CHECK(s.fuchsian_route());
  CHECK(s.domain_source().is_fuchsian());
  REQUIRE(s.phi.has_value());
  CHECK(s.phi->value(1) == 0.5);

  Scenario g = parse_scenario_text(R"({
    "presentation": {"kind": "free", "rank": 2},
    "representation": {"builder": "sym_power", "q": 3,
                       "base": {"builder": "schottky"}},
    "route": "generic"
  })");
  CHECK(g.composed.has_value());
  CHECK_FALSE(g.fuchsian_route());
  CHECK_FALSE(g.domain_source().is_fuchsian());

  CHECK_THROWS_AS(parse_scenario_text(R"({
    "presentation": {"kind": "free", "rank": 2},
    "representation": {"builder": "schottky"},
    "route": "fuchsian"
  })"),
                  ValidationError);
}

TEST_CASE("unknown keys are rejected by name") {
  std::string msg = error_message([] {
    parse_scenario_text(R"({
      "presentation": {"kind": "free", "rank": 2},
      "representation": {"builder": "schottky"},
      "bogus": 1
    })");
  });
  CHECK(msg.find("bogus") != std::string::npos);

  msg = error_message([] {
    parse_scenario_text(R"({
      "presentation": {"kind": "free", "rank": 2, "genus": 2},
      "representation": {"builder": "schottky"}
    })");
  });
  CHECK(msg.find("rank") != std::string::npos);
}

TEST_CASE("genus2 builder needs the matching presentation") {
  Scenario s = parse_scenario_text(R"({
    "presentation": {"kind": "surface", "genus": 2},
    "representation": {"builder": "genus2"},
    "characters": {"phi": [1, 0, 0, 0]}
  })");
  CHECK(s.presentation.kind() == PresentationKind::surface);
  CHECK(s.rep.dim() == 2);
  REQUIRE(s.phi.has_value());
  CHECK(s.phi->rank() == 4);

  CHECK_THROWS_AS(parse_scenario_text(R"({
    "presentation": {"kind": "free", "rank": 4},
    "representation": {"builder": "genus2"}
  })"),
                  ValidationError);
}

TEST_CASE("characters must vanish on relators") {
  CHECK_THROWS_AS(parse_scenario_text(R"({
    "presentation": {"kind": "custom", "rank": 2, "relators": ["ab"]},
    "representation": {"builder": "explicit",
                       "images": [[[2, 0], [0, 0.5]], [[0.5, 0], [0, 2]]]},
    "characters": {"phi": [1.0, 0.5]}
  })"),
                  ValidationError);
}

TEST_CASE("explicit matrices, real and complex") {
  Scenario s = parse_scenario_text(R"({
    "presentation": {"kind": "free", "rank": 1},
    "representation": {"builder": "explicit", "images": [[[2, 0], [0, 0.5]]]}
  })");
  CHECK(s.rep.dim() == 2);
  CHECK(s.rep.field() == Field::real);
  CHECK(s.rep.image(0).m(0, 0) == Cplx(2.0, 0.0));

  Scenario c = parse_scenario_text(R"({
    "presentation": {"kind": "free", "rank": 1},
    "representation": {"builder": "explicit",
                       "images": [[[[0, 1], [0, 0]], [[0, 0], [0, -1]]]]}
  })");
  CHECK(c.rep.field() == Field::complex_field);
  CHECK(c.rep.image(0).m(0, 0) == Cplx(0.0, 1.0));

  // ragged rows
  CHECK_THROWS_AS(parse_scenario_text(R"({
    "presentation": {"kind": "free", "rank": 1},
    "representation": {"builder": "explicit", "images": [[[2, 0], [0]]]}
  })"),
                  ValidationError);
  // not square
  CHECK_THROWS_AS(parse_scenario_text(R"({
    "presentation": {"kind": "free", "rank": 1},
    "representation": {"builder": "explicit", "images": [[[2, 0, 0], [0, 1, 0]]]}
  })"),
                  ValidationError);
  // wrong count
  CHECK_THROWS_AS(parse_scenario_text(R"({
    "presentation": {"kind": "free", "rank": 2},
    "representation": {"builder": "explicit", "images": [[[2, 0], [0, 0.5]]]}
  })"),
                  ValidationError);
  // singular
  CHECK_THROWS_AS(parse_scenario_text(R"({
    "presentation": {"kind": "free", "rank": 1},
    "representation": {"builder": "explicit", "images": [[[1, 0], [1, 0]]]}
  })"),
                  ValidationError);
}

TEST_CASE("suspension block") {
  Scenario s = parse_scenario_text(R"({
    "presentation": {"kind": "free", "rank": 2},
    "representation": {"builder": "sym_power", "q": 3,
                       "base": {"builder": "schottky"}},
    "characters": {"phi": [0.3, -0.1]},
    "suspension": {"p": 1,
                   "xi": {"type": "signs", "params": [1, -1]},
                   "kappa": {"type": "coboundary", "seed": [[0.2, 0.1, -0.3]]}}
  })");
  REQUIRE(s.suspension.has_value());
  CHECK(s.suspension->p == 1);
  CHECK(s.suspension->q == 3);
  CHECK(s.suspension->xi.type == XiSpec::Type::signs);
  CHECK(s.suspension->kappa.type == KappaSpec::Type::coboundary);
  CHECK(s.suspension->kappa.seed.rows() == 1);
  CHECK(s.suspension->kappa.seed.cols() == 3);
  Suspension built = build_suspension(*s.suspension);
  CHECK(built.dim() == 4);

  std::string msg = error_message([] {
    parse_scenario_text(R"({
      "presentation": {"kind": "free", "rank": 2},
      "representation": {"builder": "schottky"},
      "suspension": {"p": 1}
    })");
  });
  CHECK(msg.find("phi") != std::string::npos);
}

TEST_CASE("scenario-driven membership smoke test") {
  Scenario s = parse_scenario_text(R"({
    "presentation": {"kind": "free", "rank": 2},
    "representation": {"builder": "sym_power", "q": 3,
                       "base": {"builder": "schottky"}},
    "route": "fuchsian",
    "characters": {"phi": [0.2, 0.1]}
  })");
  BallIndex ball = enumerate_ball(s.presentation, 3);
  DomainEstimate est = membership(s.domain_source(), 1, 1, *s.phi, ball);
  CHECK(est.fuchsian_route);
  CHECK(est.verdict == Verdict::inside);
}

TEST_CASE("file loading errors") {
  CHECK_THROWS_AS(load_scenario("/nonexistent/path/to/scenario.json"),
                  ValidationError);
  CHECK_THROWS_AS(parse_scenario_text("{not json"), ValidationError);
}
