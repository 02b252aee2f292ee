#include "kmsatake/characters.hpp"

#include <algorithm>

#include "kmsatake/errors.hpp"

namespace kmsatake {

namespace {

Int height(const Vec& gamma) {
  Int h = 0;
  for (Int g : gamma) h += g;
  return h;
}

}  // namespace

CharSeries weyl_kac_character(const RootDatum& datum, const RootTable& table,
                              const Vec& lambda, int depth) {
  input_check(datum.weight_dominant(lambda),
              "highest weight must be dominant");
  input_check(table.depth >= depth, "root table is shallower than the window");
  Window top = make_window(datum, vec_add(lambda, datum.rho), depth, 0);
  CharSeries numer =
      apply_J(datum, monomial_at_offset(top, Vec(datum.n, 0), poly_one()));
  CharSeries res = numer;
  Vec zero_base(datum.r, 0);
  Window factor_win{zero_base, depth, 0};
  for (const auto& [alpha, entry] : table.entries) {
    if (height(alpha) > depth) continue;
    res = multiply(res,
                   geometric_factor(factor_win, alpha, entry.mult, false,
                                    true));
  }
  Vec neg_rho(datum.r);
  for (int j = 0; j < datum.r; ++j) neg_rho[j] = -datum.rho[j];
  res = multiply(res, CharSeries{Window{neg_rho, depth, 0},
                                 {{Vec(datum.n, 0), poly_one()}}});
  internal_check(res.win.base == lambda,
                 "character window base drifted from the highest weight");
  for (const auto& [gamma, p] : res.terms) {
    (void)gamma;
    internal_check(p.degree() <= 0 && p.at_zero() >= 0,
                   "character coefficients must be nonnegative t-constants");
  }
  internal_check(coefficient_at_offset(res, Vec(datum.n, 0)).at_zero() == 1,
                 "character must have coefficient 1 at the highest weight");
  return res;
}

CharacterTable freudenthal_table(const RootDatum& datum,
                                 const RootTable& table, const Vec& lambda,
                                 int depth) {
  input_check(datum.weight_dominant(lambda),
              "highest weight must be dominant");
  input_check(depth >= 0, "depth must be nonnegative");
  input_check(table.depth >= depth, "root table is shallower than the window");
  CharacterTable out;
  out.lambda = lambda;
  out.depth = depth;
  out.mults[Vec(datum.n, 0)] = 1;

  auto rho_form = [&](const Vec& gamma) {
    // (rho, sum g_i alpha_i) = sum g_i d_i.
    Int s = 0;
    for (int i = 0; i < datum.n; ++i) s += gamma[i] * datum.d[i];
    return s;
  };

  for (int h = 1; h <= depth; ++h) {
    for (const auto& gamma : compositions(datum.n, h)) {
      Vec nu = vec_sub(lambda, datum.q_to_weight(gamma));
      // Non-dominant nu: ascend to the dominant orbit representative,
      // tracking the offset from lambda. If a coordinate of the offset goes
      // negative, some orbit point lies outside lambda - Q^+, so nu is not
      // a weight of L(lambda). Each step lowers the offset height, so this
      // terminates.
      int neg = -1;
      for (int i = 0; i < datum.n; ++i) {
        if (nu[i] < 0) {
          neg = i;
          break;
        }
      }
      if (neg >= 0) {
        Vec x = nu;
        Vec off = gamma;
        Int m = 0;
        for (;;) {
          int j = -1;
          for (int i = 0; i < datum.n; ++i) {
            if (x[i] < 0) {
              j = i;
              break;
            }
          }
          if (j < 0) {
            auto it = out.mults.find(off);
            m = (it == out.mults.end()) ? 0 : it->second;
            break;
          }
          off[j] += x[j];  // x[j] < 0: reflecting adds |x_j| alpha_j
          if (off[j] < 0) {
            m = 0;
            break;
          }
          x = datum.reflect_weight(j, x);
        }
        if (m != 0) out.mults[gamma] = m;
        continue;
      }

      // Dominant nu < lambda: Freudenthal recursion. The divisor
      // (lambda+nu+2rho, lambda-nu) = sum_i gamma_i d_i (lambda+nu+2rho)_i
      // is strictly positive since every summand with gamma_i > 0 is >= 2.
      Vec s = vec_add(lambda, nu);
      for (int i = 0; i < datum.n; ++i) s[i] += 2;
      Int divisor = 0;
      for (int i = 0; i < datum.n; ++i) divisor += gamma[i] * datum.d[i] * s[i];
      internal_check(divisor > 0,
                     "Freudenthal divisor must be positive at a dominant "
                     "weight below the highest weight");
      __int128 rhs = 0;
      for (const auto& [alpha, entry] : table.entries) {
        Int ha = height(alpha);
        if (ha > h) continue;
        for (Int k = 1; k * ha <= h; ++k) {
          Vec up(datum.n);
          bool ok = true;
          for (int i = 0; i < datum.n; ++i) {
            up[i] = gamma[i] - k * alpha[i];
            if (up[i] < 0) {
              ok = false;
              break;
            }
          }
          if (!ok) continue;
          auto it = out.mults.find(up);
          if (it == out.mults.end()) continue;
          // (nu + k alpha, alpha)
          Int pr = datum.form_wq(nu, alpha) + k * datum.form_qq(alpha, alpha);
          rhs += (__int128)2 * entry.mult * it->second * pr;
        }
      }
      internal_check(rhs >= 0 && rhs % divisor == 0,
                     "Freudenthal recursion produced a non-integral or "
                     "negative multiplicity");
      Int m = (Int)(rhs / divisor);
      if (m != 0) out.mults[gamma] = m;
    }
  }
  return out;
}

Int freudenthal_multiplicity(const RootDatum& datum, const RootTable& table,
                             const Vec& lambda, const Vec& nu) {
  input_check(datum.weight_dominant(lambda),
              "highest weight must be dominant");
  auto gamma = datum.root_decompose(vec_sub(lambda, nu));
  bool below = gamma.has_value();
  if (below) {
    for (Int g : *gamma) below = below && g >= 0;
  }
  input_check(below, "weight is not below the highest weight");
  Int h = height(*gamma);
  if (h > table.depth) {
    throw WindowError("root table is shallower than the requested weight");
  }
  CharacterTable ct = freudenthal_table(datum, table, lambda, (int)h);
  auto it = ct.mults.find(*gamma);
  return it == ct.mults.end() ? 0 : it->second;
}

Int weight_multiplicity(const RootDatum& datum, const RootTable& table,
                        const Vec& lambda, const Vec& nu) {
  auto gamma = datum.root_decompose(vec_sub(lambda, nu));
  if (!gamma) return 0;
  for (Int g : *gamma) {
    if (g < 0) return 0;
  }
  Int h = height(*gamma);
  if (h > table.depth) {
    throw WindowError("root table is shallower than the requested weight");
  }
  CharSeries chi = weyl_kac_character(datum, table, lambda, (int)h);
  return coefficient_at_offset(chi, *gamma).at_zero();
}

}  // namespace kmsatake
