#include "anosov/character.hpp"

#include <cmath>

#include "anosov/errors.hpp"

namespace anosov {

double RealCharacter::eval(const Word& w) const {
  double s = 0.0;
  for (const Letter& l : w.letters()) {
    if (l.gen >= rank()) throw ValidationError("character: word generator out of range");
    s += l.sign * values_[l.gen];
  }
  return s;
}

bool RealCharacter::is_zero() const {
  for (double v : values_)
    if (v != 0.0) return false;
  return true;
}

RealCharacter RealCharacter::scaled(double t) const {
  std::vector<double> v = values_;
  for (double& x : v) x *= t;
  return RealCharacter(std::move(v));
}

RealCharacter RealCharacter::plus(const RealCharacter& other, double coeff) const {
  if (other.rank() != rank()) throw ValidationError("character: rank mismatch");
  std::vector<double> v = values_;
  for (int i = 0; i < rank(); ++i) v[i] += coeff * other.values_[i];
  return RealCharacter(std::move(v));
}

void character_validate(const GroupPresentation& P, const RealCharacter& chi, double tol) {
  if (chi.rank() != P.rank())
    throw ValidationError("character: value count does not match presentation rank");
  for (const Word& r : P.relators()) {
    if (std::abs(chi.eval(r)) > tol)
      throw ValidationError("character: does not vanish on relator " + r.render());
  }
}

double uniform_norm(const RealCharacter& chi) {
  double m = 0.0;
  for (double v : chi.values()) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace anosov
