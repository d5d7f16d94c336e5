#include "anosov/words.hpp"

#include <algorithm>

#include "anosov/errors.hpp"

namespace anosov {

Word Word::parse(const std::string& text) {
  std::string body;
  for (char c : text)
    if (c != ' ' && c != '\t') body.push_back(c);
  if (body == "1") return Word();  // matches render() of the identity
  std::vector<Letter> out;
  out.reserve(body.size());
  for (char c : body) {
    if (c >= 'a' && c <= 'z') {
      out.emplace_back(c - 'a', 1);
    } else if (c >= 'A' && c <= 'Z') {
      out.emplace_back(c - 'A', -1);
    } else {
      throw ValidationError(std::string("word parse: unexpected character '") + c + "'");
    }
  }
  return Word(std::move(out));
}

std::string Word::render() const {
  std::string s;
  s.reserve(letters_.size());
  for (const Letter& l : letters_) {
    if (l.gen < 0 || l.gen > 25)
      throw ValidationError("word render: generator index out of a..z range");
    s.push_back(static_cast<char>((l.sign > 0 ? 'a' : 'A') + l.gen));
  }
  if (s.empty()) s = "1";
  return s;
}

Word Word::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    out.push_back(it->inverse());
  return Word(std::move(out));
}

Word Word::concat(const Word& other) const {
  std::vector<Letter> out = letters_;
  out.insert(out.end(), other.letters_.begin(), other.letters_.end());
  return Word(std::move(out));
}

int Word::max_generator() const {
  int m = -1;
  for (const Letter& l : letters_) m = std::max(m, l.gen);
  return m;
}

int shortlex_compare(const Word& x, const Word& y) {
  if (x.size() != y.size()) return x.size() < y.size() ? -1 : 1;
  for (std::size_t i = 0; i < x.size(); ++i) {
    int cx = x[i].code(), cy = y[i].code();
    if (cx != cy) return cx < cy ? -1 : 1;
  }
  return 0;
}

Word free_reduce(const Word& w) {
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (const Letter& l : w.letters()) {
    if (!stack.empty() && stack.back() == l.inverse()) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return Word(std::move(stack));
}

Word cyclic_reduce(const Word& w) {
  Word r = free_reduce(w);
  std::size_t lo = 0, hi = r.size();
  while (hi - lo >= 2 && r[lo] == r[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  std::vector<Letter> out(r.letters().begin() + lo, r.letters().begin() + hi);
  return Word(std::move(out));
}

Word rotate(const Word& w, std::size_t r) {
  if (w.empty()) return w;
  r %= w.size();
  std::vector<Letter> out;
  out.reserve(w.size());
  out.insert(out.end(), w.letters().begin() + r, w.letters().end());
  out.insert(out.end(), w.letters().begin(), w.letters().begin() + r);
  return Word(std::move(out));
}

namespace {

// Lexicographically least rotation, by letter codes. Plain quadratic scan;
// words here are short.
Word least_rotation(const Word& w) {
  if (w.empty()) return w;
  Word best = w;
  for (std::size_t r = 1; r < w.size(); ++r) {
    Word cand = rotate(w, r);
    if (shortlex_compare(cand, best) < 0) best = cand;
  }
  return best;
}

}  // namespace

Word conjugacy_canonical(const Word& w) {
  Word c = cyclic_reduce(w);
  if (c.empty()) return c;
  Word a = least_rotation(c);
  Word b = least_rotation(c.inverse());
  return shortlex_compare(a, b) <= 0 ? a : b;
}

std::size_t WordHash::operator()(const Word& w) const {
  std::size_t h = 1469598103934665603ull;
  for (const Letter& l : w.letters()) {
    h ^= static_cast<std::size_t>(l.code()) + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace anosov
