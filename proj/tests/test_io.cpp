#include <cstdlib>
#include <random>
#include <sstream>

#include "doctest.h"

#include "anosov/ball.hpp"
#include "anosov/factory.hpp"
#include "anosov/io.hpp"
#include "anosov/lab.hpp"

using namespace anosov;

TEST_CASE("format_double round-trips through strtod") {
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(0.1) == "0.10000000000000001");

  std::mt19937 rng(11u);
  for (int i = 0; i < 500; ++i) {
    double v = (rng() * 0x1p-32 - 0.5) * std::pow(10.0, int(rng() % 41) - 20);
    std::string s = format_double(v);
    CHECK(std::strtod(s.c_str(), nullptr) == v);
  }
}

TEST_CASE("csv_field quotes only when needed") {
  CHECK(csv_field("abAB") == "abAB");
  CHECK(csv_field("a,b") == "\"a,b\"");
  CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(csv_field("two\nlines") == "\"two\nlines\"");
}

TEST_CASE("membership text is key=value with a verdict") {
  ComposedFuchsian cf = compose_fuchsian(schottky_rep(2), 3);
  BallIndex ball = enumerate_ball(GroupPresentation::free_group(2), 4);
  DomainEstimate e = membership(DomainSource::fuchsian(cf), 1, 1,
                                RealCharacter({0.2, 0.1}), ball);
  std::ostringstream os;
  write_membership_text(os, e);
  std::string text = os.str();
  CHECK(text.find("verdict=inside") != std::string::npos);
  CHECK(text.find("threshold=") != std::string::npos);
  CHECK(text.find("criterion=") != std::string::npos);
  CHECK(text.find("units=nats") != std::string::npos);
}

TEST_CASE("slice csv carries metadata and one row per angle") {
  ComposedFuchsian cf = compose_fuchsian(schottky_rep(2), 2);
  BallIndex ball = enumerate_ball(GroupPresentation::free_group(2), 4);
  SliceResult s = slice_domain(DomainSource::fuchsian(cf), 1, 1,
                               RealCharacter({1.0, 0.0}), RealCharacter({0.0, 1.0}),
                               8, ball);
  std::ostringstream os;
  write_slice_csv(os, s);
  std::string text = os.str();
  CHECK(text.find("# units=nats") != std::string::npos);
  CHECK(text.find("theta,radius,degenerate") != std::string::npos);
  int rows = 0;
  for (char c : text)
    if (c == '\n') ++rows;
  CHECK(rows >= 9);

  std::ostringstream svg;
  write_slice_svg(svg, s);
  CHECK(svg.str().find("<svg") != std::string::npos);
  CHECK(svg.str().find("<polygon") != std::string::npos);
}

TEST_CASE("sweep csv records the translation-length convention") {
  SweepResult s;
  s.d = 3;
  s.p = 1;
  s.q = 2;
  s.c = 1.5;
  s.transitions = {1.0};
  s.rows = {{0.0, 1, 0.75, 0.75, Verdict::inside}};
  s.pattern_consistent = true;
  std::ostringstream os;
  write_sweep_csv(os, s);
  std::string text = os.str();
  CHECK(text.find("# translation_length=log_lambda_1") != std::string::npos);
  CHECK(text.find("# transition_k1=1\n") != std::string::npos);
  CHECK(text.find("t,k,threshold,margin,verdict") != std::string::npos);
}
