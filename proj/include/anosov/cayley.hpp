#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "anosov/words.hpp"

namespace anosov {

// Word-problem machinery for one-relator-style small cancellation
// presentations. Two layers:
//
//  * dehn_reduce: repeatedly replace any subword that is strictly more than
//    half of a (symmetrized) relator by the inverse of the complement, then
//    freely reduce. Reaching the empty word proves triviality in any
//    presentation, since each move multiplies by a conjugate of a relator.
//
//  * canonical: for presentations that pass the supported() screen (metric
//    C'(1/6) with all relators of one even length, which covers the standard
//    surface presentations), extends Dehn reduction with exact-half swaps and
//    returns the least word of the closure. That is a complete normal form on
//    such presentations, which makes a breadth-first Cayley ball possible:
//    word_length grows the ball lazily and certifies exact distances.
class SmallCancellationSolver {
 public:
  SmallCancellationSolver(int rank, const std::vector<Word>& relators);

  // True when the canonical form (and therefore BFS lengths) is available.
  bool supported() const { return supported_; }

  Word dehn_reduce(const Word& w) const;
  Word canonical(const Word& w) const;

  // Exact word length if certified within `cap`, nullopt otherwise.
  // Dehn-trivial words report 0 even when unsupported.
  std::optional<int> word_length(const Word& w, int cap);

  // Number of distinct elements at BFS distance exactly `level` (grows the
  // ball as needed). Exposed for cross-checks.
  std::int64_t sphere_size(int level);

  // Safety valve for the lazy BFS (number of stored group elements).
  void set_node_limit(std::size_t limit) { node_limit_ = limit; }

 private:
  struct Rotation {
    std::vector<int> codes;  // letter codes of one symmetrized relator rotation
  };

  bool try_long_match(std::vector<int>& codes) const;  // one >half replacement
  std::vector<std::vector<int>> half_swaps(const std::vector<int>& codes) const;

  void grow_to(int level);
  std::uint64_t pack(const std::vector<int>& codes) const;

  int rank_ = 0;
  int relator_len_ = 0;  // uniform length when supported
  int half_ = 0;
  bool supported_ = false;
  bool packable_ = false;
  std::vector<Rotation> rotations_;

  // BFS state: canonical words (packed) -> distance, plus per-level lists.
  std::unordered_map<std::uint64_t, int> dist_;
  std::vector<std::vector<std::uint64_t>> levels_;
  int built_level_ = -1;
  std::size_t node_limit_ = 20'000'000;
};

}  // namespace anosov
