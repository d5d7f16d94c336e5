#include "anosov/ball.hpp"

#include <algorithm>

#include "anosov/cayley.hpp"
#include "anosov/errors.hpp"

namespace anosov {

namespace {

inline int inv_code(int c) { return c ^ 1; }

// True when the freely reduced word given by letter codes equals its own
// conjugacy canonical form: cyclically reduced and lexicographically minimal
// among its rotations and the rotations of its inverse. Runs in place.
bool is_conjugacy_canonical(const std::vector<int>& w) {
  const int n = static_cast<int>(w.size());
  if (n == 0) return false;
  if (n > 1 && w[0] == inv_code(w[n - 1])) return false;  // not cyclically reduced
  for (int r = 1; r < n; ++r) {
    for (int i = 0; i < n; ++i) {
      int a = w[(r + i) % n], b = w[i];
      if (a != b) {
        if (a < b) return false;
        break;
      }
    }
  }
  std::vector<int> inv(n);
  for (int i = 0; i < n; ++i) inv[i] = inv_code(w[n - 1 - i]);
  for (int r = 0; r < n; ++r) {
    for (int i = 0; i < n; ++i) {
      int a = inv[(r + i) % n], b = w[i];
      if (a != b) {
        if (a < b) return false;
        break;
      }
    }
  }
  return true;
}

Word word_from_codes(const std::vector<int>& codes) {
  std::vector<Letter> ls;
  ls.reserve(codes.size());
  for (int c : codes) ls.emplace_back(c / 2, (c & 1) ? -1 : 1);
  return Word(std::move(ls));
}

}  // namespace

BallIndex enumerate_ball(const GroupPresentation& P, int radius, const BallOptions& opts) {
  if (radius < 0) throw ValidationError("enumerate_ball: radius must be >= 0");
  const bool is_free =
      P.kind() == PresentationKind::free_group || P.relators().empty();
  const bool dedup = opts.dedup && is_free;
  const int letters = 2 * P.rank();

  BallIndex index{P, radius, dedup, {}};
  if (opts.include_identity)
    index.entries.push_back(BallEntry{Word::identity(), 0, 0, "1"});

  std::size_t visited = 0;
  std::vector<int> codes;
  for (int n = 1; n <= radius; ++n) {
    // Least freely reduced word of length n is a^n (code 0 repeated; code 0's
    // inverse is code 1, so the all-zero word is reduced).
    codes.assign(n, 0);
    bool done = false;
    while (!done) {
      if (++visited > opts.entry_limit)
        throw LimitError("enumerate_ball: entry limit exceeded");

      bool emit = true;
      if (dedup) emit = is_conjugacy_canonical(codes);
      if (emit) {
        BallEntry e;
        e.word = word_from_codes(codes);
        if (is_free) {
          e.word_len = n;
          if (dedup) {
            e.trans_len = n;  // canonical forms are cyclically reduced
            e.class_key = e.word.render();
          } else {
            Word canon = conjugacy_canonical(e.word);
            e.trans_len = static_cast<int>(canon.size());
            e.class_key = canon.render();
          }
        } else {
          SmallCancellationSolver* solver = P.solver();
          auto wl = P.word_length(e.word, std::min(radius, 15));
          auto tl = P.translation_length(e.word, std::min(radius, 15));
          // Certified exact lengths when the solver supports this
          // presentation; otherwise fall back to the free-reduction upper
          // bound so estimators remain conservative.
          e.word_len = wl ? *wl : n;
          e.trans_len = tl ? *tl : static_cast<int>(cyclic_reduce(e.word).size());
          e.class_key = conjugacy_canonical(e.word).render();
          (void)solver;
        }
        index.entries.push_back(std::move(e));
      }

      // Odometer step to the next freely reduced word of length n.
      int i = n - 1;
      for (; i >= 0; --i) {
        int c = codes[i] + 1;
        while (c < letters && i > 0 && c == inv_code(codes[i - 1])) ++c;
        if (c < letters) {
          codes[i] = c;
          bool ok = true;
          for (int j = i + 1; j < n; ++j) {
            int s = 0;
            while (s < letters && s == inv_code(codes[j - 1])) ++s;
            if (s >= letters) {
              ok = false;
              break;
            }
            codes[j] = s;
          }
          if (ok) break;
        }
      }
      if (i < 0) done = true;
    }
  }
  return index;
}

}  // namespace anosov
