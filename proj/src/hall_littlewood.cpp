#include "kmsatake/hall_littlewood.hpp"

#include <algorithm>
#include <set>

#include "kmsatake/errors.hpp"

namespace kmsatake {

namespace {

constexpr Int kHorizonCap = 4096;

Int height(const Vec& gamma) {
  Int h = 0;
  for (Int g : gamma) h += g;
  return h;
}

bool has_indefinite_component(const RootDatum& datum) {
  for (GcmType t : datum.cls.component_types) {
    if (t == GcmType::Indefinite) return true;
  }
  return false;
}

bool all_components_finite(const RootDatum& datum) {
  for (GcmType t : datum.cls.component_types) {
    if (t != GcmType::Finite) return false;
  }
  return true;
}

// For a finite root system, enumerate all positive roots: once a height
// level is empty no higher root exists (beta of height h+1 has beta-alpha_i
// a root of height h for some i).
RootTable full_finite_root_table(const RootDatum& datum) {
  for (int cap = 8; cap <= kHorizonCap; cap *= 2) {
    RootTable table = enumerate_roots(datum, cap);
    std::vector<char> occupied(cap + 1, 0);
    for (const auto& [alpha, entry] : table.entries) {
      (void)entry;
      occupied[(size_t)height(alpha)] = 1;
    }
    for (int h = 1; h <= cap; ++h) {
      if (!occupied[(size_t)h]) return table;
    }
  }
  throw WindowError("finite root system enumeration exceeded the engine cap");
}

// Input horizon for J(f_lambda): offsets of f_lambda deeper than this either
// vanish modulo t^{T+1} or belong to terms whose Weyl orbit misses every
// window weight. Derived from (x,x)-invariance: a surviving offset is a sum
// of at most T positive roots, so 2(beta,gamma) <= 2 maxd T^2 + c_max with
// c_max = max over window offsets zeta of 2(beta,zeta) - (zeta,zeta).
Int j_input_horizon(const RootDatum& datum, const Vec& beta, int depth,
                    int tdeg) {
  if (all_components_finite(datum)) {
    const RootTable full = full_finite_root_table(datum);
    Int h = 0;
    for (const auto& [alpha, entry] : full.entries) {
      h += entry.mult * height(alpha);
    }
    return std::max<Int>(h, depth);
  }
  Int b = 0;
  for (int i = 0; i < datum.n; ++i) {
    Int bi = datum.d[i] * beta[i];
    internal_check(bi > 0, "horizon needs a strictly dominant base");
    if (b == 0 || bi < b) b = bi;
  }
  Int maxd = 0;
  for (int i = 0; i < datum.n; ++i) maxd = std::max(maxd, datum.d[i]);
  Int c_max = 0;
  for (int h = 0; h <= depth; ++h) {
    for (const auto& zeta : compositions(datum.n, h)) {
      Int c = 2 * datum.form_wq(beta, zeta) - datum.form_qq(zeta, zeta);
      c_max = std::max(c_max, c);
    }
  }
  Int h = (2 * maxd * (Int)tdeg * (Int)tdeg + c_max) / (2 * b);
  return std::max<Int>(h, depth);
}

// prod_{hgt(alpha) <= win.depth} (1 - t e^{-alpha})^{m_alpha}, based at zero.
CharSeries t_factor_product(const RootDatum& datum, const RootTable& table,
                            const Window& win) {
  Vec zero_base(datum.r, 0);
  Window w0{zero_base, win.depth, win.tdeg};
  CharSeries prod = monomial_at_offset(w0, Vec(datum.n, 0), poly_one());
  for (const auto& [alpha, entry] : table.entries) {
    if (height(alpha) > win.depth) continue;
    prod = multiply(prod, geometric_factor(w0, alpha, entry.mult, true, false));
  }
  return prod;
}

const RootTable& table_at_least(const RootDatum& datum, const RootTable& table,
                                int depth, RootTable& own) {
  if (table.depth >= depth) return table;
  own = enumerate_roots(datum, depth);
  return own;
}

}  // namespace

CharSeries f_lambda(const RootDatum& datum, const RootTable& table,
                    const Vec& lambda, int depth, int tdeg) {
  input_check(datum.weight_dominant(lambda),
              "Hall-Littlewood weight must be dominant");
  Window win = make_window(datum, vec_add(lambda, datum.rho), depth, tdeg);
  RootTable own;
  const RootTable& rt = table_at_least(datum, table, depth, own);
  CharSeries head = monomial_at_offset(win, Vec(datum.n, 0), poly_one());
  return multiply(head, t_factor_product(datum, rt, win));
}

CharSeries hl_function(const RootDatum& datum, const RootTable& table,
                       const Vec& lambda, int depth, int tdeg) {
  input_check(datum.weight_dominant(lambda),
              "Hall-Littlewood weight must be dominant");
  make_window(datum, lambda, depth, tdeg);
  if (has_indefinite_component(datum)) {
    // The dominant-chamber ascent inside apply_J is not guaranteed to
    // terminate outside the Tits cone, so indefinite data use the orbit-sum
    // formula, which truncates soundly in every type.
    return macdonald_H(datum, table, lambda, depth, tdeg);
  }
  Vec beta = vec_add(lambda, datum.rho);
  Int horizon = j_input_horizon(datum, beta, depth, tdeg);
  if (horizon > kHorizonCap) {
    throw WindowError("required truncation horizon " + std::to_string(horizon) +
                      " exceeds the engine cap");
  }
  RootTable own;
  const RootTable& rt = table_at_least(datum, table, (int)horizon, own);

  Window wide{beta, (int)horizon, tdeg};
  CharSeries f = multiply(monomial_at_offset(wide, Vec(datum.n, 0), poly_one()),
                          t_factor_product(datum, rt, wide));
  CharSeries jf = apply_J(datum, f);
  jf = rewindow(datum, jf, Window{beta, depth, tdeg});

  Window rho_win{datum.rho, depth, tdeg};
  CharSeries jrho = apply_J(
      datum, monomial_at_offset(rho_win, Vec(datum.n, 0), poly_one()));
  CharSeries p = multiply(jf, invert(jrho));

  Poly w_inv = poly_invert(stabilizer_poincare_weight(datum, lambda, tdeg),
                           tdeg);
  p = series_scale(p, w_inv);
  internal_check(p.win.base == lambda &&
                     coefficient_at_offset(p, Vec(datum.n, 0)) == poly_one(),
                 "Hall-Littlewood function must be monic at lambda");
  return p;
}

Poly hl_coeff_direct(const RootDatum& datum, const RootTable& table,
                     const Vec& lambda, const Vec& mu, int depth, int tdeg) {
  input_check(datum.weight_dominant(lambda) && datum.weight_dominant(mu),
              "both weights must be dominant");
  auto gap = datum.root_decompose(vec_sub(lambda, mu));
  bool below = gap.has_value();
  if (below) {
    for (Int g : *gap) below = below && g >= 0;
  }
  input_check(below, "mu is not below lambda in the dominance order");
  make_window(datum, lambda, depth, tdeg);
  if (height(*gap) > depth) {
    throw WindowError("lambda - mu is deeper than the window");
  }
  if (has_indefinite_component(datum)) {
    throw WindowError(
        "the direct coefficient method requires finite or affine type "
        "(no sound orbit horizon exists otherwise)");
  }

  Vec beta = vec_add(lambda, datum.rho);
  Int b = 0;
  for (int i = 0; i < datum.n; ++i) {
    Int bi = datum.d[i] * beta[i];
    if (b == 0 || bi < b) b = bi;
  }
  Int maxd = 0;
  for (int i = 0; i < datum.n; ++i) maxd = std::max(maxd, datum.d[i]);
  // |lambda+rho|^2 - |mu+rho|^2 expressed through the root-lattice gap.
  Int cc = 2 * datum.form_wq(beta, *gap) - datum.form_qq(*gap, *gap);
  Int horizon = (cc + 2 * maxd * (Int)tdeg * (Int)tdeg) / (2 * b);
  horizon = std::max<Int>(horizon, 0);
  if (horizon > kHorizonCap) {
    throw WindowError("required truncation horizon " + std::to_string(horizon) +
                      " exceeds the engine cap");
  }

  Poly c_raw;
  Int orbit_bound = horizon - height(*gap);
  if (orbit_bound >= 0) {
    RootTable own;
    const RootTable& rt = table_at_least(datum, table, (int)horizon, own);
    Vec zero_base(datum.r, 0);
    CharSeries phi = t_factor_product(
        datum, rt, Window{zero_base, (int)horizon, tdeg});
    OrbitSlice orbit =
        orbit_within_depth(datum, vec_add(mu, datum.rho), (int)orbit_bound);
    for (const auto& entry : orbit.entries) {
      auto tau = datum.root_decompose(vec_sub(orbit.base, entry.weight));
      internal_check(tau.has_value(), "orbit point left the root lattice");
      Vec gamma = vec_add(*gap, *tau);
      Poly term = coefficient_at_offset(phi, gamma);
      if (term.c.empty()) continue;
      c_raw = poly_add(c_raw, poly_scale(term, entry.sign));
    }
  }
  Poly w_inv =
      poly_invert(stabilizer_poincare_weight(datum, lambda, tdeg), tdeg);
  return poly_mul(c_raw, w_inv, tdeg);
}

HlExpansion hl_coeff_triangular(const RootDatum& datum, const RootTable& table,
                                const Vec& lambda, int depth, int tdeg) {
  HlExpansion out;
  out.lambda = lambda;
  out.depth = depth;
  out.tdeg = tdeg;
  CharSeries residual = hl_function(datum, table, lambda, depth, tdeg);
  RootTable own;
  const RootTable& rt = table_at_least(datum, table, depth, own);
  for (int h = 0; h <= depth; ++h) {
    for (const auto& gamma : compositions(datum.n, h)) {
      Vec mu = vec_sub(lambda, datum.q_to_weight(gamma));
      if (!datum.weight_dominant(mu)) continue;
      Poly c = coefficient_at_offset(residual, gamma);
      out.coeffs[gamma] = c;
      if (c.c.empty()) continue;
      CharSeries chi = weyl_kac_character(datum, rt, mu, depth - h);
      // chi carries a tdeg-0 window; widen before scaling by c.
      CharSeries piece = series_scale(
          rewindow(datum, chi, Window{lambda, depth, tdeg}), c);
      for (const auto& [g, p] : piece.terms) {
        add_term(residual, g, poly_scale(p, -1));
      }
    }
  }
  internal_check(residual.terms.empty(),
                 "triangular extraction left a nonzero residual; the "
                 "expansion over dominant window weights must be exact");
  return out;
}

CharSeries macdonald_H(const RootDatum& datum, const RootTable& table,
                       const Vec& lambda, int depth, int tdeg) {
  input_check(datum.weight_dominant(lambda),
              "Hall-Littlewood weight must be dominant");
  Window win = make_window(datum, lambda, depth, tdeg);
  RootTable own;
  const RootTable& rt = table_at_least(datum, table, depth, own);
  Vec zero_base(datum.r, 0);
  Window factor_win{zero_base, depth, tdeg};

  CharSeries sum = series_zero(win);
  // Terms of w(Delta)e^{w lambda} all sit at offsets >= lambda - w lambda,
  // and every monomial contributed by the l(w) rewritten factors has
  // t-degree plus extra depth at least l(w), so words with
  // l(w) + depth(lambda - w lambda) > T + D are invisible in the window.
  for (const auto& word : elements_up_to_length(datum, depth + tdeg)) {
    Vec wl = act(datum, word, lambda);
    auto gamma_w = datum.root_decompose(vec_sub(lambda, wl));
    internal_check(gamma_w.has_value() && vec_nonneg(*gamma_w),
                   "w lambda must stay below lambda");
    Int dep = height(*gamma_w);
    if ((Int)word.size() + dep > (Int)(depth + tdeg)) continue;
    if (dep > depth) continue;

    Word rev(word.rbegin(), word.rend());
    std::vector<Vec> inv = inversion_set(datum, rev);

    CharSeries term = monomial_at_offset(win, *gamma_w, poly_one());
    int t_shift = 0;
    std::set<Vec> flipped;
    for (const auto& beta_q : inv) {
      if (height(beta_q) > depth) {
        ++t_shift;  // factor is t + (t-1)e^{-beta} + ..., only t is visible
      } else {
        flipped.insert(beta_q);
        term = multiply(term, flipped_hl_factor(factor_win, beta_q));
      }
    }
    if (t_shift > 0) {
      term = series_scale(term, poly_monomial(1, t_shift));
    }
    for (const auto& [alpha, entry] : rt.entries) {
      if (height(alpha) > depth) continue;
      if (flipped.count(alpha)) {
        internal_check(entry.real && entry.mult == 1,
                       "inversion sets contain only real roots");
        continue;
      }
      term = multiply(term,
                      geometric_factor(factor_win, alpha, entry.mult, true,
                                       false));
      term = multiply(term,
                      geometric_factor(factor_win, alpha, entry.mult, false,
                                       true));
    }
    internal_check(term.win.base == lambda,
                   "orbit term window drifted from lambda");
    sum = series_add(sum, term);
  }
  Poly w_inv =
      poly_invert(stabilizer_poincare_weight(datum, lambda, tdeg), tdeg);
  return series_scale(sum, w_inv);
}

CpropReport check_cprop(const HlExpansion& expansion) {
  CpropReport report;
  report.integral_and_support = true;
  for (const auto& [gamma, c] : expansion.coeffs) {
    (void)c;
    if (!vec_nonneg(gamma) || height(gamma) > expansion.depth) {
      report.integral_and_support = false;
    }
  }
  Vec zero(expansion.coeffs.empty()
               ? (size_t)0
               : expansion.coeffs.begin()->first.size(),
           0);
  auto lead = expansion.coeffs.find(zero);
  report.leading_one =
      lead != expansion.coeffs.end() && lead->second == poly_one();
  report.vanishing_at_zero = true;
  for (const auto& [gamma, c] : expansion.coeffs) {
    if (gamma == zero) continue;
    if (c.at_zero() != 0) report.vanishing_at_zero = false;
  }
  return report;
}

}  // namespace kmsatake
