#pragma once

#include <map>

#include "kmsatake/poly.hpp"
#include "kmsatake/root_datum.hpp"

namespace kmsatake {

// Hard engine caps on window parameters; larger requests raise
// WindowError rather than silently degrading.
inline constexpr int kMaxWindowDepth = 32;
inline constexpr int kMaxWindowTdeg = 32;

struct Window {
  Vec base;      // weight, length r
  int depth = 0;  // height cutoff on base - support
  int tdeg = 0;   // t-degree cutoff
};

Window make_window(const RootDatum& datum, const Vec& base, int depth,
                   int tdeg);

// Element of the truncated ring E_t: finitely many terms
// c_gamma(t) e^{base - gamma}, keyed by the offset gamma in root
// coordinates (all entries >= 0, height <= depth). Zero polynomials are
// never stored.
struct CharSeries {
  Window win;
  std::map<Vec, Poly> terms;
};

CharSeries series_zero(const Window& win);
// nu is a weight; it must lie in the window.
CharSeries monomial(const RootDatum& datum, const Window& win, const Vec& nu,
                    const Poly& coeff);
CharSeries monomial_at_offset(const Window& win, const Vec& gamma,
                              const Poly& coeff);
Poly coefficient(const RootDatum& datum, const CharSeries& f, const Vec& nu);
Poly coefficient_at_offset(const CharSeries& f, const Vec& gamma);

void add_term(CharSeries& f, const Vec& gamma, const Poly& p);
CharSeries series_add(const CharSeries& f, const CharSeries& g);
CharSeries series_scale(const CharSeries& f, const Poly& p);

// Bases add; depth and tdeg are the minima of the inputs.
CharSeries multiply(const CharSeries& f, const CharSeries& g);

// Requires the offset-zero coefficient to have constant term +-1.
CharSeries invert(const CharSeries& f);

// Truncate and/or move to a window whose base differs by an element of the
// root lattice (new_base - old_base need not be positive).
CharSeries rewindow(const RootDatum& datum, const CharSeries& f,
                    const Window& win);

// Expansion of (1 - t^eps e^{-alpha})^{+-m}, eps = with_t, truncated.
CharSeries geometric_factor(const Window& win, const Vec& alpha_q, Int m,
                            bool with_t, bool inverse);

// (t - e^{-beta}) / (1 - e^{-beta}) = t + (t-1)(e^{-beta} + e^{-2 beta} + ...)
CharSeries flipped_hl_factor(const Window& win, const Vec& beta_q);

// J(f) = sum_w (-1)^w w(f) restricted to f's window, computed exactly term
// by term: each term is lifted to its dominant orbit representative (terms
// with a singular representative cancel to zero) and the representative's
// orbit is walked back down into the window. The window base must be
// strictly dominant.
CharSeries apply_J(const RootDatum& datum, const CharSeries& f);

// Substitute t = 0.
CharSeries at_t_zero(const CharSeries& f);

bool series_equal(const CharSeries& f, const CharSeries& g);

}  // namespace kmsatake
