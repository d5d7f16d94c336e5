#pragma once

#include <vector>

#include "anosov/presentation.hpp"
#include "anosov/words.hpp"

namespace anosov {

// Real character of the group: an element of hom(Gamma, R), stored as one
// real value per generator. Evaluation is the signed sum over the letters of
// a word, which is automatically conjugation-invariant.
class RealCharacter {
 public:
  RealCharacter() = default;
  explicit RealCharacter(std::vector<double> values) : values_(std::move(values)) {}

  int rank() const { return static_cast<int>(values_.size()); }
  const std::vector<double>& values() const { return values_; }
  double value(int gen) const { return values_.at(gen); }

  double eval(const Word& w) const;

  bool is_zero() const;

  RealCharacter scaled(double t) const;
  RealCharacter plus(const RealCharacter& other, double coeff = 1.0) const;

 private:
  std::vector<double> values_;
};

// A character descends to the group only if it vanishes on every relator.
// Throws ValidationError when |chi(r)| > tol for some relator r.
void character_validate(const GroupPresentation& P, const RealCharacter& chi,
                        double tol = 1e-12);

// Sup norm over the generators.
double uniform_norm(const RealCharacter& chi);

}  // namespace anosov
