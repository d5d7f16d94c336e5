#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "anosov/words.hpp"

namespace anosov {

enum class PresentationKind { free_group, surface, custom };

class SmallCancellationSolver;

// Finite presentation of the group under study. Three kinds are supported:
//   free     — free group of the given rank, no relators;
//   surface  — closed orientable surface group of genus g >= 2, generators
//              a..(per genus) where the first g letters are the alpha curves
//              and the next g the beta curves, single relator
//              [alpha_1,beta_1]...[alpha_g,beta_g];
//   custom   — arbitrary finite relator list.
class GroupPresentation {
 public:
  static GroupPresentation free_group(int rank);
  static GroupPresentation surface(int genus);
  static GroupPresentation custom(int rank, std::vector<Word> relators);

  PresentationKind kind() const { return kind_; }
  int rank() const { return rank_; }
  int genus() const { return genus_; }  // 0 unless surface kind
  const std::vector<Word>& relators() const { return relators_; }

  std::string generator_name(int g) const;

  // Word metric. Free kind is exact; surface kind (and custom presentations
  // that pass an internal small-cancellation screen) certify exact lengths by
  // a breadth-first search of the Cayley ball up to `cap`; anything beyond the
  // cap, or in an unsupported custom presentation, is Unknown (nullopt).
  // Dehn-trivial words report 0 for every kind.
  std::optional<int> word_length(const Word& w, int cap = kDefaultLengthCap) const;

  // Minimum of word_length over the cyclic rotations of the cyclic reduction.
  std::optional<int> translation_length(const Word& w, int cap = kDefaultLengthCap) const;

  // Shared word-problem machinery for non-free kinds (nullptr for free).
  SmallCancellationSolver* solver() const;

  static constexpr int kDefaultLengthCap = 8;

  friend bool operator==(const GroupPresentation& x, const GroupPresentation& y) {
    return x.kind_ == y.kind_ && x.rank_ == y.rank_ && x.genus_ == y.genus_ &&
           x.relators_ == y.relators_;
  }

 private:
  GroupPresentation(PresentationKind kind, int rank, int genus, std::vector<Word> relators);

  void check_word(const Word& w) const;

  PresentationKind kind_;
  int rank_ = 0;
  int genus_ = 0;
  std::vector<Word> relators_;
  mutable std::shared_ptr<SmallCancellationSolver> solver_;
};

}  // namespace anosov
