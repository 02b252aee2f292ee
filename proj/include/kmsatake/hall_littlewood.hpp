#pragma once

#include "kmsatake/characters.hpp"
#include "kmsatake/weyl.hpp"

namespace kmsatake {

// Expansion P_lambda = sum c_{lambda,mu} chi_mu over dominant mu in the
// window, keyed by the offset gamma with mu = lambda - gamma in root
// coordinates. Every dominant window weight gets an entry (possibly zero).
struct HlExpansion {
  Vec lambda;
  int depth = 0;
  int tdeg = 0;
  std::map<Vec, Poly> coeffs;
};

struct CpropReport {
  bool integral_and_support = false;
  bool leading_one = false;
  bool vanishing_at_zero = false;
  bool pass() const {
    return integral_and_support && leading_one && vanishing_at_zero;
  }
};

// e^{lambda+rho} prod_{hgt(alpha) <= D} (1 - t e^{-alpha})^{m_alpha}.
CharSeries f_lambda(const RootDatum& datum, const RootTable& table,
                    const Vec& lambda, int depth, int tdeg);

// P_lambda(t). Finite and affine components use
// W_lambda(t)^{-1} J(e^rho)^{-1} J(f_lambda) with an exact input horizon;
// data with an indefinite component fall back to the orbit-sum formula
// (macdonald_H), whose truncation is sound in every type.
CharSeries hl_function(const RootDatum& datum, const RootTable& table,
                       const Vec& lambda, int depth, int tdeg);

// c_{lambda,mu}(t) from the orbit sum over w(mu+rho) with the
// restricted-partition coefficients of f_lambda. Finite/affine only.
Poly hl_coeff_direct(const RootDatum& datum, const RootTable& table,
                     const Vec& lambda, const Vec& mu, int depth, int tdeg);

// Greedy top-down extraction of all c_{lambda,mu} in the window.
HlExpansion hl_coeff_triangular(const RootDatum& datum, const RootTable& table,
                                const Vec& lambda, int depth, int tdeg);

// H_lambda(t) = W_lambda(t)^{-1} sum_w w(Delta) e^{w lambda}.
CharSeries macdonald_H(const RootDatum& datum, const RootTable& table,
                       const Vec& lambda, int depth, int tdeg);

CpropReport check_cprop(const HlExpansion& expansion);

}  // namespace kmsatake
