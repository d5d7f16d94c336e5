#pragma once

// Independent reference implementations used only by the tests. Each oracle
// recomputes a quantity along a different route than the library: polynomial
// root finding instead of dense eigensolvers, scan-until-fixpoint reduction
// instead of the stack algorithm, explicit rotation search instead of the
// canonical-form shortcut.

#include <algorithm>
#include <cmath>
#include <complex>
#include <unordered_set>
#include <utility>
#include <vector>

#include "anosov/matrix.hpp"
#include "anosov/words.hpp"

namespace oracle {

// Characteristic polynomial coefficients of det(zI - A) = z^d + c[d-1]z^{d-1}
// + ... + c[0], by the Faddeev-LeVerrier recursion.
inline std::vector<anosov::Cplx> charpoly(const anosov::CMat& a) {
  const int d = static_cast<int>(a.rows());
  std::vector<anosov::Cplx> c(d);
  anosov::CMat b = a;
  anosov::Cplx ck = -b.trace();
  c[d - 1] = ck;
  for (int k = 2; k <= d; ++k) {
    b = a * (b + ck * anosov::CMat::Identity(d, d));
    ck = -b.trace() / static_cast<double>(k);
    c[d - k] = ck;
  }
  return c;
}

// Durand-Kerner simultaneous root iteration for a monic polynomial.
inline std::vector<anosov::Cplx> poly_roots(const std::vector<anosov::Cplx>& c) {
  const int d = static_cast<int>(c.size());
  std::vector<anosov::Cplx> r(d);
  anosov::Cplx seed(0.4, 0.9);
  anosov::Cplx acc(1.0, 0.0);
  for (int j = 0; j < d; ++j) {
    acc *= seed;
    r[j] = acc;
  }
  auto eval = [&](anosov::Cplx z) {
    anosov::Cplx v(1.0, 0.0);
    for (int k = d - 1; k >= 0; --k) v = v * z + c[k];
    return v;
  };
  for (int it = 0; it < 2000; ++it) {
    double shift = 0.0;
    for (int j = 0; j < d; ++j) {
      anosov::Cplx denom(1.0, 0.0);
      for (int m = 0; m < d; ++m)
        if (m != j) denom *= (r[j] - r[m]);
      anosov::Cplx delta = eval(r[j]) / denom;
      r[j] -= delta;
      shift = std::max(shift, std::abs(delta));
    }
    if (shift < 1e-15) break;
  }
  return r;
}

// Eigenvalue magnitudes by characteristic polynomial roots, descending.
inline std::vector<double> eigen_mags(const anosov::CMat& a) {
  std::vector<anosov::Cplx> roots = poly_roots(charpoly(a));
  std::vector<double> mags;
  mags.reserve(roots.size());
  for (anosov::Cplx z : roots) mags.push_back(std::abs(z));
  std::sort(mags.begin(), mags.end(), std::greater<double>());
  return mags;
}

// Free reduction by repeated full scans.
inline anosov::Word naive_free_reduce(const anosov::Word& w) {
  std::vector<anosov::Letter> cur(w.letters());
  for (;;) {
    bool changed = false;
    std::vector<anosov::Letter> next;
    for (std::size_t i = 0; i < cur.size(); ++i) {
      if (i + 1 < cur.size() && cur[i + 1] == cur[i].inverse()) {
        ++i;
        changed = true;
      } else {
        next.push_back(cur[i]);
      }
    }
    cur = std::move(next);
    if (!changed) break;
  }
  return anosov::Word(cur);
}

// Conjugacy canonical form by explicit search over every rotation of the
// cyclic reduction and of its inverse.
inline anosov::Word brute_conjugacy_canonical(const anosov::Word& w) {
  anosov::Word cyc = anosov::cyclic_reduce(w);
  if (cyc.empty()) return cyc;
  anosov::Word best = cyc;
  for (const anosov::Word& base : {cyc, cyc.inverse()}) {
    for (std::size_t r = 0; r < base.size(); ++r) {
      anosov::Word cand = anosov::rotate(base, r);
      if (anosov::shortlex_compare(cand, best) < 0) best = cand;
    }
  }
  return best;
}

// Number of conjugacy classes (a class and its inverse identified) met by the
// nontrivial reduced words of length <= radius in the free group of the rank.
inline std::size_t conjugacy_class_count(int rank, int radius) {
  std::unordered_set<std::string> keys;
  std::vector<anosov::Letter> stack;
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth > 0)
      keys.insert(brute_conjugacy_canonical(anosov::Word(stack)).render());
    if (depth == radius) return;
    for (int g = 0; g < rank; ++g) {
      for (int s : {+1, -1}) {
        anosov::Letter l(g, s);
        if (!stack.empty() && stack.back() == l.inverse()) continue;
        stack.push_back(l);
        self(self, depth + 1);
        stack.pop_back();
      }
    }
  };
  rec(rec, 0);
  return keys.size();
}

// Convex hull, monotone chain, strictly convex turns (collinear points are
// dropped). Input order does not matter; output is counterclockwise.
inline std::vector<std::pair<double, double>> convex_hull(
    std::vector<std::pair<double, double>> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const std::size_t n = pts.size();
  if (n < 3) return pts;
  auto cross = [](const std::pair<double, double>& o, const std::pair<double, double>& a,
                  const std::pair<double, double>& b) {
    return (a.first - o.first) * (b.second - o.second) -
           (a.second - o.second) * (b.first - o.first);
  };
  std::vector<std::pair<double, double>> h(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = n - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

}  // namespace oracle
