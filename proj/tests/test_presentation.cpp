#include "doctest.h"

#include <unordered_map>

#include "anosov/ball.hpp"
#include "anosov/errors.hpp"
#include "anosov/factory.hpp"
#include "anosov/presentation.hpp"
#include "oracles.hpp"

using namespace anosov;

TEST_CASE("presentation construction and validation") {
  GroupPresentation f2 = GroupPresentation::free_group(2);
  CHECK(f2.kind() == PresentationKind::free_group);
  CHECK(f2.rank() == 2);
  CHECK(f2.relators().empty());
  CHECK(f2.generator_name(0) == "a");
  CHECK(f2.generator_name(1) == "b");
  CHECK_THROWS_AS(GroupPresentation::free_group(0), ValidationError);

  GroupPresentation s2 = GroupPresentation::surface(2);
  CHECK(s2.rank() == 4);
  CHECK(s2.genus() == 2);
  CHECK(s2.relators().size() == 1);
  // alphas a, b then betas c, d: commutators pair alpha_i with beta_i
  CHECK(s2.relators()[0].render() == "acACbdBD");
  CHECK_THROWS_AS(GroupPresentation::surface(1), ValidationError);

  CHECK_THROWS_AS(GroupPresentation::custom(2, {Word::parse("aA")}), ValidationError);
  CHECK_THROWS_AS(GroupPresentation::custom(1, {Word::parse("abAB")}), ValidationError);
}

TEST_CASE("free word and translation lengths are exact") {
  GroupPresentation f2 = GroupPresentation::free_group(2);
  CHECK(f2.word_length(Word::parse("abB")) == 1);
  CHECK(f2.word_length(Word::parse("aA")) == 0);
  CHECK(f2.word_length(Word::parse("abab")) == 4);
  CHECK(f2.translation_length(Word::parse("Aba")) == 1);
  CHECK(f2.translation_length(Word::parse("abAB")) == 4);
}

TEST_CASE("surface word lengths by Dehn plus certified search") {
  GroupPresentation s2 = GroupPresentation::surface(2);
  const Word rel = s2.relators()[0];

  CHECK(s2.word_length(rel) == 0);
  CHECK(s2.translation_length(rel) == 0);
  CHECK(s2.word_length(Word::parse("a")) == 1);
  CHECK(s2.word_length(Word::parse("ac")) == 2);
  // half the relator is geodesic at exactly half length
  CHECK(s2.word_length(Word::parse("acAC")) == 4);
  // relator minus its last letter is distance 1 from the identity
  CHECK(s2.word_length(Word::parse("acACbdB")) == 1);
  // six-letter prefix: acACbd = (bdBD)^{-1} bd = db
  CHECK(s2.word_length(Word::parse("acACbd")) == 2);
  CHECK(s2.translation_length(rotate(rel, 3)) == 0);
}

TEST_CASE("surface lengths agree with the representation image oracle") {
  GroupPresentation s2 = GroupPresentation::surface(2);
  Representation rho = genus2_rep();

  // All freely reduced words of length <= 3, with their images.
  std::vector<Word> words;
  std::vector<CMat> images;
  std::vector<Letter> stack;
  auto rec = [&](auto&& self, int depth) -> void {
    words.push_back(Word(stack));
    images.push_back(rho.eval(words.back()));
    if (depth == 3) return;
    for (int g = 0; g < 4; ++g) {
      for (int s : {+1, -1}) {
        Letter l(g, s);
        if (!stack.empty() && stack.back() == l.inverse()) continue;
        stack.push_back(l);
        self(self, depth + 1);
        stack.pop_back();
      }
    }
  };
  rec(rec, 0);

  // The representation is faithful and discrete, so group elements at word
  // distance <= 3 are separated in matrix space; 1e-6 is far below the gap.
  auto oracle_len = [&](const CMat& m) {
    int best = 99;
    for (std::size_t i = 0; i < words.size(); ++i)
      if ((images[i] - m).norm() < 1e-6)
        best = std::min(best, static_cast<int>(words[i].size()));
    return best;
  };

  int checked = 0;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (words[i].empty()) continue;
    auto wl = s2.word_length(words[i], 8);
    REQUIRE(wl.has_value());
    int ol = oracle_len(images[i]);
    if (ol < 99) {
      CHECK(*wl == ol);
      ++checked;
    }
  }
  CHECK(checked > 400);
}

TEST_CASE("unsupported custom presentations answer only what Dehn certifies") {
  GroupPresentation torus = GroupPresentation::custom(2, {Word::parse("abAB")});
  // The commutator itself collapses by a full-relator match.
  CHECK(torus.word_length(Word::parse("abAB")) == 0);
  // Trivial in the group, but invisible to Dehn: honest Unknown.
  CHECK_FALSE(torus.word_length(Word::parse("aabbAABB")).has_value());

  // The genus-2 relator as a custom presentation passes the screen and
  // behaves like the surface kind.
  GroupPresentation g2 = GroupPresentation::custom(4, {Word::parse("acACbdBD")});
  CHECK(g2.word_length(Word::parse("acACbd")) == 2);
  CHECK(g2.word_length(Word::parse("acAC")) == 4);
}

TEST_CASE("free ball enumeration: counts, order, exclusions") {
  GroupPresentation f2 = GroupPresentation::free_group(2);
  BallOptions opts;
  opts.dedup = false;
  BallIndex ball = enumerate_ball(f2, 3, opts);
  // 4 + 4*3 + 4*9 freely reduced nontrivial words
  CHECK(ball.entries.size() == 52);
  CHECK(ball.entries[0].word.render() == "a");
  CHECK(ball.entries[1].word.render() == "A");
  CHECK(ball.entries[2].word.render() == "b");
  CHECK(ball.entries[3].word.render() == "B");
  CHECK(ball.entries[4].word.render() == "aa");
  for (std::size_t i = 1; i < ball.entries.size(); ++i)
    CHECK(shortlex_compare(ball.entries[i - 1].word, ball.entries[i].word) < 0);
  for (const BallEntry& e : ball.entries) {
    CHECK(e.word_len == static_cast<int>(e.word.size()));
    CHECK(e.trans_len == static_cast<int>(cyclic_reduce(e.word).size()));
    CHECK(e.class_key == conjugacy_canonical(e.word).render());
  }

  BallOptions with_id;
  with_id.dedup = false;
  with_id.include_identity = true;
  CHECK(enumerate_ball(f2, 1, with_id).entries.size() == 5);
}

TEST_CASE("dedup ball holds exactly the canonical class representatives") {
  GroupPresentation f2 = GroupPresentation::free_group(2);
  for (int radius : {2, 3, 5}) {
    BallIndex ball = enumerate_ball(f2, radius);
    CHECK(ball.dedup);
    CHECK(ball.entries.size() == oracle::conjugacy_class_count(2, radius));
    for (const BallEntry& e : ball.entries) {
      CHECK(conjugacy_canonical(e.word) == e.word);
      CHECK(e.trans_len == static_cast<int>(e.word.size()));
    }
  }
  GroupPresentation f3 = GroupPresentation::free_group(3);
  BallIndex b3 = enumerate_ball(f3, 3);
  CHECK(b3.entries.size() == oracle::conjugacy_class_count(3, 3));
}

TEST_CASE("surface ball keeps every word and certified lengths") {
  GroupPresentation s2 = GroupPresentation::surface(2);
  BallIndex ball = enumerate_ball(s2, 2);
  CHECK_FALSE(ball.dedup);  // dedup is a free-group device
  CHECK(ball.entries.size() == 8 + 8 * 7);
  for (const BallEntry& e : ball.entries) {
    CHECK(e.word_len <= static_cast<int>(e.word.size()));
    CHECK(e.trans_len <= e.word_len);
  }
}

TEST_CASE("ball guards") {
  GroupPresentation f2 = GroupPresentation::free_group(2);
  BallOptions tiny;
  tiny.entry_limit = 10;
  CHECK_THROWS_AS(enumerate_ball(f2, 4, tiny), LimitError);
  CHECK_THROWS_AS(enumerate_ball(f2, -1), ValidationError);
  CHECK(enumerate_ball(f2, 0).entries.empty());
}
