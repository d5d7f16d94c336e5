#include "anosov/cayley.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "anosov/errors.hpp"

namespace anosov {

namespace {

std::vector<int> to_codes(const Word& w) {
  std::vector<int> c;
  c.reserve(w.size());
  for (const Letter& l : w.letters()) c.push_back(l.code());
  return c;
}

Word from_codes(const std::vector<int>& c) {
  std::vector<Letter> ls;
  ls.reserve(c.size());
  for (int x : c) ls.emplace_back(x / 2, (x & 1) ? -1 : 1);
  return Word(std::move(ls));
}

// Letter-code inverse: the positive letter has an even code, its inverse is
// the next odd code, so inversion is xor 1.
inline int inv_code(int c) { return c ^ 1; }

std::vector<int> reduce_codes(const std::vector<int>& in) {
  std::vector<int> st;
  st.reserve(in.size());
  for (int c : in) {
    if (!st.empty() && st.back() == inv_code(c))
      st.pop_back();
    else
      st.push_back(c);
  }
  return st;
}

std::vector<int> invert_codes(const std::vector<int>& in) {
  std::vector<int> out;
  out.reserve(in.size());
  for (auto it = in.rbegin(); it != in.rend(); ++it) out.push_back(inv_code(*it));
  return out;
}

}  // namespace

SmallCancellationSolver::SmallCancellationSolver(int rank, const std::vector<Word>& relators)
    : rank_(rank) {
  std::set<std::vector<int>> rots;
  bool uniform_even = !relators.empty();
  int len = -1;
  for (const Word& r : relators) {
    Word cr = cyclic_reduce(r);
    if (cr.empty()) throw ValidationError("solver: trivial relator");
    std::vector<int> base = to_codes(cr);
    if (len < 0) len = static_cast<int>(base.size());
    if (static_cast<int>(base.size()) != len || len % 2 != 0 || len < 4)
      uniform_even = false;
    std::vector<int> binv = invert_codes(base);
    for (std::size_t s = 0; s < base.size(); ++s) {
      std::vector<int> a(base.begin() + s, base.end());
      a.insert(a.end(), base.begin(), base.begin() + s);
      rots.insert(a);
      std::vector<int> b(binv.begin() + s, binv.end());
      b.insert(b.end(), binv.begin(), binv.begin() + s);
      rots.insert(b);
    }
  }
  for (auto& r : rots) rotations_.push_back(Rotation{r});

  if (uniform_even && !rotations_.empty()) {
    relator_len_ = len;
    half_ = len / 2;
    // Metric small cancellation screen: the longest common prefix of two
    // distinct symmetrized relators bounds the piece length.
    int max_piece = 0;
    for (std::size_t i = 0; i < rotations_.size(); ++i) {
      for (std::size_t j = i + 1; j < rotations_.size(); ++j) {
        const auto& a = rotations_[i].codes;
        const auto& b = rotations_[j].codes;
        int m = 0;
        while (m < len && a[m] == b[m]) ++m;
        max_piece = std::max(max_piece, m);
      }
    }
    supported_ = (6 * max_piece < len);
    packable_ = (rank_ <= 8);
  }

  dist_[pack({})] = 0;
  levels_.push_back({pack({})});
  built_level_ = 0;
}

bool SmallCancellationSolver::try_long_match(std::vector<int>& codes) const {
  const int n = static_cast<int>(codes.size());
  for (int i = 0; i < n; ++i) {
    int best = 0;
    const Rotation* best_rot = nullptr;
    for (const Rotation& rot : rotations_) {
      const int rl = static_cast<int>(rot.codes.size());
      int m = 0;
      while (m < rl && i + m < n && codes[i + m] == rot.codes[m]) ++m;
      if (m > best) {
        best = m;
        best_rot = &rot;
      }
    }
    const int rl = best_rot ? static_cast<int>(best_rot->codes.size()) : 0;
    if (best_rot && 2 * best > rl) {
      // codes[i..i+best) equals u where rot = u v; replace u by v^{-1}.
      std::vector<int> repl(best_rot->codes.begin() + best, best_rot->codes.end());
      repl = invert_codes(repl);
      std::vector<int> out(codes.begin(), codes.begin() + i);
      out.insert(out.end(), repl.begin(), repl.end());
      out.insert(out.end(), codes.begin() + i + best, codes.end());
      codes = reduce_codes(out);
      return true;
    }
  }
  return false;
}

std::vector<std::vector<int>> SmallCancellationSolver::half_swaps(
    const std::vector<int>& codes) const {
  std::vector<std::vector<int>> out;
  const int n = static_cast<int>(codes.size());
  for (int i = 0; i + half_ <= n; ++i) {
    for (const Rotation& rot : rotations_) {
      bool eq = true;
      for (int t = 0; t < half_; ++t) {
        if (codes[i + t] != rot.codes[t]) {
          eq = false;
          break;
        }
      }
      if (!eq) continue;
      std::vector<int> repl(rot.codes.begin() + half_, rot.codes.end());
      repl = invert_codes(repl);
      std::vector<int> cand(codes.begin(), codes.begin() + i);
      cand.insert(cand.end(), repl.begin(), repl.end());
      cand.insert(cand.end(), codes.begin() + i + half_, codes.end());
      out.push_back(std::move(cand));
    }
  }
  return out;
}

Word SmallCancellationSolver::dehn_reduce(const Word& w) const {
  std::vector<int> codes = reduce_codes(to_codes(w));
  while (try_long_match(codes)) {
  }
  return from_codes(codes);
}

Word SmallCancellationSolver::canonical(const Word& w) const {
  if (!supported_) throw ValidationError("solver: canonical form not available");
  std::vector<int> cur = reduce_codes(to_codes(w));
  constexpr std::size_t kClosureLimit = 50'000;
  for (;;) {
    while (try_long_match(cur)) {
    }
    // Same-length closure under exact-half swaps; any free cancellation after
    // a swap shortens the word and restarts the outer loop.
    std::set<std::vector<int>> closure{cur};
    std::deque<std::vector<int>> queue{cur};
    bool restarted = false;
    while (!queue.empty()) {
      std::vector<int> u = std::move(queue.front());
      queue.pop_front();
      for (auto& cand : half_swaps(u)) {
        std::vector<int> fr = reduce_codes(cand);
        if (fr.size() < cur.size()) {
          cur = std::move(fr);
          restarted = true;
          break;
        }
        if (closure.insert(fr).second) {
          if (closure.size() > kClosureLimit)
            throw LimitError("solver: half-swap closure limit exceeded");
          queue.push_back(std::move(fr));
        }
      }
      if (restarted) break;
    }
    if (!restarted) return from_codes(*closure.begin());
  }
}

std::uint64_t SmallCancellationSolver::pack(const std::vector<int>& codes) const {
  if (codes.size() > 15) throw LimitError("solver: word too long to pack (max 15 letters)");
  std::uint64_t k = static_cast<std::uint64_t>(codes.size());
  int shift = 4;
  for (int c : codes) {
    k |= static_cast<std::uint64_t>(c) << shift;
    shift += 4;
  }
  return k;
}

void SmallCancellationSolver::grow_to(int level) {
  if (!supported_ || !packable_)
    throw ValidationError("solver: BFS ball not available for this presentation");
  for (int l = built_level_ + 1; l <= level; ++l) {
    levels_.push_back({});
    const auto& prev = levels_[l - 1];
    for (std::uint64_t key : prev) {
      // Unpack.
      std::vector<int> codes(key & 0xF);
      std::uint64_t k = key >> 4;
      for (auto& c : codes) {
        c = static_cast<int>(k & 0xF);
        k >>= 4;
      }
      for (int c = 0; c < 2 * rank_; ++c) {
        if (!codes.empty() && c == inv_code(codes.back())) continue;
        std::vector<int> ext = codes;
        ext.push_back(c);
        Word cw = canonical(from_codes(ext));
        std::uint64_t ck = pack(to_codes(cw));
        if (dist_.find(ck) == dist_.end()) {
          dist_[ck] = l;
          levels_[l].push_back(ck);
          if (dist_.size() > node_limit_)
            throw LimitError("solver: BFS node limit exceeded");
        }
      }
    }
    std::sort(levels_[l].begin(), levels_[l].end());
    built_level_ = l;
  }
}

std::optional<int> SmallCancellationSolver::word_length(const Word& w, int cap) {
  if (cap < 1) throw ValidationError("word_length: cap must be at least 1");
  Word d = dehn_reduce(w);
  if (d.empty()) return 0;
  if (!supported_ || !packable_) return std::nullopt;
  if (cap > 15) cap = 15;
  Word c = canonical(w);
  if (c.empty()) return 0;
  const int len = static_cast<int>(c.size());
  if (len > 15) return std::nullopt;  // geodesic representative beyond packing range
  grow_to(std::min(len, cap));
  auto it = dist_.find(pack(to_codes(c)));
  if (it != dist_.end() && it->second <= cap) return it->second;
  return std::nullopt;
}

std::int64_t SmallCancellationSolver::sphere_size(int level) {
  grow_to(level);
  return static_cast<std::int64_t>(levels_[level].size());
}

}  // namespace anosov
