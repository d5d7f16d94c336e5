#include "anosov/presentation.hpp"

#include <algorithm>

#include "anosov/cayley.hpp"
#include "anosov/errors.hpp"

namespace anosov {

GroupPresentation::GroupPresentation(PresentationKind kind, int rank, int genus,
                                     std::vector<Word> relators)
    : kind_(kind), rank_(rank), genus_(genus), relators_(std::move(relators)) {}

GroupPresentation GroupPresentation::free_group(int rank) {
  if (rank < 1) throw ValidationError("presentation: free rank must be >= 1");
  return GroupPresentation(PresentationKind::free_group, rank, 0, {});
}

GroupPresentation GroupPresentation::surface(int genus) {
  if (genus < 2) throw ValidationError("presentation: surface genus must be >= 2");
  if (2 * genus > 26) throw ValidationError("presentation: surface genus too large to name");
  // Generators: indices 0..g-1 are the alpha curves, g..2g-1 the betas.
  // Relator: [alpha_1, beta_1] ... [alpha_g, beta_g].
  std::vector<Letter> rel;
  for (int i = 0; i < genus; ++i) {
    int a = i, b = genus + i;
    rel.emplace_back(a, 1);
    rel.emplace_back(b, 1);
    rel.emplace_back(a, -1);
    rel.emplace_back(b, -1);
  }
  return GroupPresentation(PresentationKind::surface, 2 * genus, genus, {Word(std::move(rel))});
}

GroupPresentation GroupPresentation::custom(int rank, std::vector<Word> relators) {
  if (rank < 1) throw ValidationError("presentation: rank must be >= 1");
  for (const Word& r : relators) {
    if (free_reduce(r).empty())
      throw ValidationError("presentation: custom relator is freely trivial");
    if (r.max_generator() >= rank)
      throw ValidationError("presentation: relator uses a generator outside the rank");
  }
  return GroupPresentation(PresentationKind::custom, rank, 0, std::move(relators));
}

std::string GroupPresentation::generator_name(int g) const {
  if (g < 0 || g >= rank_) throw ValidationError("presentation: generator index out of range");
  return std::string(1, static_cast<char>('a' + g));
}

void GroupPresentation::check_word(const Word& w) const {
  if (w.max_generator() >= rank_)
    throw ValidationError("word uses a generator outside the presentation rank");
}

SmallCancellationSolver* GroupPresentation::solver() const {
  if (kind_ == PresentationKind::free_group) return nullptr;
  if (!solver_) solver_ = std::make_shared<SmallCancellationSolver>(rank_, relators_);
  return solver_.get();
}

std::optional<int> GroupPresentation::word_length(const Word& w, int cap) const {
  if (cap < 1) throw ValidationError("word_length: cap must be at least 1");
  check_word(w);
  if (kind_ == PresentationKind::free_group) {
    return static_cast<int>(free_reduce(w).size());
  }
  if (relators_.empty()) {
    // Relator-free custom presentation behaves like a free group.
    return static_cast<int>(free_reduce(w).size());
  }
  return solver()->word_length(w, cap);
}

std::optional<int> GroupPresentation::translation_length(const Word& w, int cap) const {
  if (cap < 1) throw ValidationError("translation_length: cap must be at least 1");
  check_word(w);
  Word c = cyclic_reduce(w);
  if (kind_ == PresentationKind::free_group || relators_.empty()) {
    return static_cast<int>(c.size());
  }
  if (c.empty()) return 0;
  int best = -1;
  for (std::size_t r = 0; r < c.size(); ++r) {
    auto len = word_length(rotate(c, r), cap);
    if (!len) return std::nullopt;
    if (best < 0 || *len < best) best = *len;
  }
  return best;
}

}  // namespace anosov
