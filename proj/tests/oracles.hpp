#pragma once

// Reference implementations for finite-type data with no windowing: exact
// Laurent-polynomial arithmetic over the full Weyl group. Slow and simple
// on purpose; the engine under test must match these wherever windows
// overlap.

#include <iterator>
#include <map>
#include <utility>
#include <vector>

#include "kmsatake/satake.hpp"

namespace kmsatake {
namespace oracle {

// High enough that no product formed by these inputs ever reaches it.
inline constexpr int kOracleTdeg = 64;

// Exact finitely-supported sum of c_w(t) e^w, keyed by absolute weight.
using Laurent = std::map<Vec, Poly>;

inline void lau_add(Laurent& f, const Vec& w, const Poly& p) {
  if (p.is_zero()) return;
  Poly& slot = f[w];
  slot = poly_add(slot, p);
  if (slot.is_zero()) f.erase(w);
}

inline Laurent lau_mul(const Laurent& a, const Laurent& b) {
  Laurent out;
  for (const auto& [wa, pa] : a) {
    for (const auto& [wb, pb] : b) {
      lau_add(out, vec_add(wa, wb), poly_mul(pa, pb, kOracleTdeg));
    }
  }
  return out;
}

inline std::vector<Word> full_weyl_group(const RootDatum& datum) {
  internal_check(datum.cls.type == GcmType::Finite,
                 "oracle requires a finite-type datum");
  return elements_up_to_length(datum, 64);
}

inline std::vector<Vec> finite_positive_roots(const RootDatum& datum) {
  RootTable table = enumerate_roots(datum, 32);
  std::vector<Vec> out;
  for (const auto& [coords, entry] : table.entries) {
    internal_check(entry.real && entry.mult == 1,
                   "finite root systems have only real multiplicity-1 roots");
    out.push_back(coords);
  }
  return out;
}

inline Laurent brute_J(const RootDatum& datum, const Laurent& f) {
  Laurent out;
  for (const Word& w : full_weyl_group(datum)) {
    int sign = length_and_sign(datum, w).second;
    for (const auto& [eta, p] : f) {
      lau_add(out, act(datum, w, eta), poly_scale(p, sign));
    }
  }
  return out;
}

inline Int lau_height(const RootDatum& datum, const Vec& base, const Vec& w) {
  auto off = datum.root_decompose(vec_sub(base, w));
  internal_check(off.has_value() && vec_nonneg(*off),
                 "oracle: support escaped base - Q^+");
  Int h = 0;
  for (Int x : *off) h += x;
  return h;
}

// num / den where den's unique lowest term is 1 * e^rho and every support
// lies below its base. Exact: a nonzero remainder cannot terminate and is
// caught by the step bound.
inline Laurent lau_divide(const RootDatum& datum, Laurent num,
                          const Laurent& den, const Vec& num_base) {
  internal_check(den.count(datum.rho) != 0 &&
                     den.at(datum.rho) == poly_one(),
                 "oracle: denominator must be monic at rho");
  Laurent quot;
  int guard = 100000;
  while (!num.empty()) {
    internal_check(--guard > 0, "oracle: division does not terminate");
    auto best = num.begin();
    Int best_h = lau_height(datum, num_base, best->first);
    for (auto it = std::next(num.begin()); it != num.end(); ++it) {
      Int h = lau_height(datum, num_base, it->first);
      if (h < best_h) {
        best = it;
        best_h = h;
      }
    }
    Vec w = best->first;
    Poly p = best->second;
    Vec qw = vec_sub(w, datum.rho);
    lau_add(quot, qw, p);
    for (const auto& [dw, dp] : den) {
      lau_add(num, vec_add(qw, dw), poly_scale(poly_mul(p, dp, kOracleTdeg), -1));
    }
  }
  return quot;
}

// P_lambda by the untruncated defining formula.
inline Laurent brute_hl(const RootDatum& datum, const Vec& lambda) {
  internal_check(datum.weight_dominant(lambda), "oracle: lambda not dominant");
  Laurent f{{vec_add(lambda, datum.rho), poly_one()}};
  for (const Vec& alpha : finite_positive_roots(datum)) {
    Laurent factor;
    factor[Vec(datum.r, 0)] = poly_one();
    factor[vec_sub(Vec(datum.r, 0), datum.q_to_weight(alpha))] =
        poly_monomial(-1, 1);
    f = lau_mul(f, factor);
  }
  Laurent num = brute_J(datum, f);
  Laurent den = brute_J(datum, {{datum.rho, poly_one()}});
  Laurent quot = lau_divide(datum, num, den, vec_add(lambda, datum.rho));

  Poly stab = stabilizer_poincare_weight(datum, lambda, kOracleTdeg);
  Poly inv = poly_invert(stab, kOracleTdeg);
  Laurent out;
  for (const auto& [w, p] : quot) {
    Poly c = poly_mul(p, inv, kOracleTdeg);
    internal_check(poly_mul(c, stab, kOracleTdeg) == p,
                   "oracle: stabilizer Poincare division must be exact");
    lau_add(out, w, c);
  }
  return out;
}

// True when the engine series equals the exact expansion restricted to the
// series' window.
inline bool matches_series(const RootDatum& datum, const Laurent& exact,
                           const CharSeries& s) {
  std::map<Vec, Poly> expected;
  for (const auto& [w, p] : exact) {
    auto off = datum.root_decompose(vec_sub(s.win.base, w));
    if (!off.has_value() || !vec_nonneg(*off)) return false;
    Int h = 0;
    for (Int x : *off) h += x;
    if (h > s.win.depth) continue;
    Poly t = poly_truncate(p, s.win.tdeg);
    if (!t.is_zero()) expected[*off] = t;
  }
  return expected == s.terms;
}

}  // namespace oracle
}  // namespace kmsatake
