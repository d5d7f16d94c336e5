#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "anosov/presentation.hpp"
#include "anosov/words.hpp"

namespace anosov {

struct BallEntry {
  Word word;
  int word_len = 0;   // word metric length of `word`
  int trans_len = 0;  // translation length of its conjugacy class
  std::string class_key;
};

// Enumerated ball of the group, in shortlex order (length-major, then letter
// codes with a < A < b < B < ...).
//
// Free presentations support conjugacy deduplication: exactly one entry per
// conjugacy class, namely the canonical form (least cyclic rotation of the
// cyclic reduction compared against the rotations of its inverse, so a class
// and its inverse class share one entry). Non-free presentations enumerate
// all freely reduced words; duplicates only slow estimators down, they never
// corrupt an infimum.
struct BallIndex {
  GroupPresentation presentation;
  int radius = 0;
  bool dedup = false;
  std::vector<BallEntry> entries;  // identity excluded
};

struct BallOptions {
  bool dedup = true;
  std::size_t entry_limit = 8'000'000;  // guard on enumerated (visited) words
  bool include_identity = false;
};

BallIndex enumerate_ball(const GroupPresentation& P, int radius,
                         const BallOptions& opts = BallOptions{});

}  // namespace anosov
