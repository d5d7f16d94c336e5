#include "anosov/matrix.hpp"

namespace anosov {

double frobenius(const CMat& a) { return a.norm(); }

}  // namespace anosov
