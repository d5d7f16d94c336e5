#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace anosov {

// One letter of a group word: a generator index together with a sign,
// sign = +1 for the generator itself and -1 for its inverse.
struct Letter {
  int gen = 0;
  int sign = 1;

  Letter() = default;
  Letter(int g, int s) : gen(g), sign(s) {}

  Letter inverse() const { return Letter(gen, -sign); }

  // Total order used for shortlex comparisons: generator-major, with the
  // positive letter before its inverse (a < A < b < B < ...).
  int code() const { return 2 * gen + (sign < 0 ? 1 : 0); }

  friend bool operator==(const Letter& x, const Letter& y) {
    return x.gen == y.gen && x.sign == y.sign;
  }
};

// A word in the generators, not necessarily freely reduced.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  static Word identity() { return Word(); }

  // Compact textual form: lowercase = generator, uppercase = inverse
  // ("aB" is a * b^{-1}). Only generators 0..25 are renderable this way.
  static Word parse(const std::string& text);
  std::string render() const;

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const std::vector<Letter>& letters() const { return letters_; }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }

  void push_back(Letter l) { letters_.push_back(l); }

  Word inverse() const;
  Word concat(const Word& other) const;

  // Largest generator index occurring in the word, -1 when empty.
  int max_generator() const;

  friend bool operator==(const Word& x, const Word& y) {
    return x.letters_ == y.letters_;
  }

 private:
  std::vector<Letter> letters_;
};

// Shortlex comparison: length first, then letter codes. Returns <0, 0, >0.
int shortlex_compare(const Word& x, const Word& y);

// Removes adjacent inverse pairs until none remain.
Word free_reduce(const Word& w);

// Freely reduces, then strips matching first/last inverse pairs.
Word cyclic_reduce(const Word& w);

// Rotation of w by r positions: w[r..] + w[..r).
Word rotate(const Word& w, std::size_t r);

// Canonical conjugacy form for free groups: the lexicographically least
// cyclic rotation of the cyclic reduction, compared against the rotations of
// its inverse as well (so a word and its inverse share one key).
Word conjugacy_canonical(const Word& w);

struct WordHash {
  std::size_t operator()(const Word& w) const;
};

}  // namespace anosov
