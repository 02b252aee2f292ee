#include "doctest.h"
#include "kmsatake/charseries.hpp"
#include "test_util.hpp"

using namespace kmsatake;

namespace {

const Mat kAffA1{{2, -2}, {-2, 2}};

}  // namespace

TEST_CASE("window construction") {
  RootDatum rd = datum_of(kAffA1);
  Window w = make_window(rd, rd.rho, 4, 3);
  CHECK(w.depth == 4);
  CHECK(w.tdeg == 3);
  CHECK_THROWS_AS(make_window(rd, rd.rho, -1, 0), InputError);
  CHECK_THROWS_AS(make_window(rd, rd.rho, 0, -2), InputError);
  CHECK_THROWS_AS(make_window(rd, {1, 0}, 2, 2), InputError);
  CHECK_THROWS_AS(make_window(rd, rd.rho, kMaxWindowDepth + 1, 0),
                  WindowError);
  CHECK_THROWS_AS(make_window(rd, rd.rho, 0, kMaxWindowTdeg + 1),
                  WindowError);
}

TEST_CASE("term access and ring laws") {
  RootDatum rd = datum_of(kAffA1);
  Window w = make_window(rd, rd.rho, 5, 5);

  CharSeries f = monomial(rd, w, rd.rho, pl({1}));
  add_term(f, {1, 0}, pl({0, -1}));
  CHECK(coefficient_at_offset(f, {0, 0}) == pl({1}));
  CHECK(coefficient(rd, f, vec_sub(rd.rho, rd.simple_root(0))) ==
        pl({0, -1}));
  // In-window weights without a stored term read as zero.
  CHECK(coefficient(rd, f, {1, 1, -4}).is_zero());
  CHECK(coefficient_at_offset(f, {2, 2}).is_zero());
  // Out-of-window reads are errors, not zeros.
  CHECK_THROWS_AS(coefficient_at_offset(f, {4, 2}), WindowError);
  CHECK_THROWS_AS(coefficient(rd, f, {0, 0, 7}), WindowError);

  // Adding the negation cancels the stored term entirely.
  add_term(f, {1, 0}, pl({0, 1}));
  CHECK(f.terms.size() == 1);

  CHECK_THROWS_AS(monomial(rd, w, vec_add(rd.rho, rd.simple_root(0)), pl({1})),
                  WindowError);
  // Writes outside the window are dropped, matching truncated arithmetic.
  add_term(f, {3, 3}, pl({1}));
  CHECK(f.terms.size() == 1);

  CharSeries g = monomial_at_offset(w, {0, 1}, pl({2}));
  CharSeries sum = series_add(f, g);
  CHECK(coefficient_at_offset(sum, {0, 1}) == pl({2}));
  CHECK(coefficient_at_offset(sum, {0, 0}) == pl({1}));

  CharSeries prod = multiply(f, g);
  // Product base is rho + rho; the only term is at offset (0,1) with the
  // t-degrees truncated at the window.
  CHECK(prod.win.base == vec_add(rd.rho, rd.rho));
  CHECK(coefficient_at_offset(prod, {0, 1}) == pl({2}));
  CHECK(prod.terms.size() == 1);

  CharSeries scaled = series_scale(g, pl({0, 0, 0, 0, 0, 0, 1}));
  CHECK(scaled.terms.empty());
  CHECK(coefficient_at_offset(series_scale(g, pl({0, 1})), {0, 1}) ==
        pl({0, 2}));
}

TEST_CASE("inversion") {
  RootDatum rd = datum_of(kAffA1);
  Window w = make_window(rd, rd.rho, 6, 4);

  // e^rho - e^{rho - alpha_0} inverts to a geometric series in e^{-alpha_0}.
  CharSeries f = monomial(rd, w, rd.rho, pl({1}));
  add_term(f, {1, 0}, pl({-1}));
  CharSeries inv = invert(f);
  CHECK(inv.win.base == vec_sub(Vec(rd.r, 0), rd.rho));
  for (int k = 0; k <= 3; ++k) {
    CHECK(coefficient_at_offset(inv, {k, 0}) == pl({1}));
  }
  CHECK(coefficient_at_offset(inv, {0, 1}).is_zero());

  CharSeries prod = multiply(f, inv);
  CHECK(prod.terms.size() == 1);
  CHECK(coefficient_at_offset(prod, {0, 0}) == pl({1}));

  CharSeries bad = monomial(rd, w, rd.rho, pl({2}));
  CHECK_THROWS_AS(invert(bad), InputError);
  CHECK_THROWS_AS(invert(series_zero(w)), InputError);
}

TEST_CASE("rewindow") {
  RootDatum rd = datum_of(kAffA1);
  Window w = make_window(rd, rd.rho, 4, 4);
  CharSeries f = monomial(rd, w, rd.rho, pl({1}));
  add_term(f, {2, 1}, pl({1, 1}));

  // Deepen within the same base: terms survive unchanged.
  CharSeries wide = rewindow(rd, f, make_window(rd, rd.rho, 8, 8));
  CHECK(coefficient_at_offset(wide, {2, 1}) == pl({1, 1}));

  // Shift the base down by alpha_0: offsets drop by (1,0) and the term
  // at the old base falls outside (negative offset).
  Vec base2 = vec_sub(rd.rho, rd.simple_root(0));
  CharSeries shifted = rewindow(rd, f, Window{base2, 4, 4});
  CHECK(shifted.terms.size() == 1);
  CHECK(coefficient_at_offset(shifted, {1, 1}) == pl({1, 1}));

  // Cutting the depth below the deep term drops it; the base term stays.
  CharSeries cut = rewindow(rd, f, make_window(rd, rd.rho, 2, 4));
  CHECK(cut.terms.size() == 1);
  CHECK(coefficient_at_offset(cut, {0, 0}) == pl({1}));

  // Truncating t-degree truncates coefficients.
  CharSeries flat = rewindow(rd, f, make_window(rd, rd.rho, 4, 0));
  CHECK(coefficient_at_offset(flat, {2, 1}) == pl({1}));

  CHECK_THROWS_AS(rewindow(rd, f, Window{{0, 0, 1}, 4, 4}), InternalError);
}

TEST_CASE("geometric factors") {
  RootDatum rd = datum_of(kAffA1);
  Window w = make_window(rd, Vec(rd.r, 0), 6, 6);

  // (1 - e^{-alpha_0})^2 = 1 - 2e^{-alpha_0} + e^{-2 alpha_0}, no t.
  CharSeries sq = geometric_factor(w, {1, 0}, 2, false, false);
  CHECK(coefficient_at_offset(sq, {0, 0}) == pl({1}));
  CHECK(coefficient_at_offset(sq, {1, 0}) == pl({-2}));
  CHECK(coefficient_at_offset(sq, {2, 0}) == pl({1}));
  CHECK(sq.terms.size() == 3);

  // (1 - t e^{-delta})^{-2}: multiset coefficients with t powers.
  CharSeries inv2 = geometric_factor(w, {1, 1}, 2, true, true);
  CHECK(coefficient_at_offset(inv2, {0, 0}) == pl({1}));
  CHECK(coefficient_at_offset(inv2, {1, 1}) == pl({0, 2}));
  CHECK(coefficient_at_offset(inv2, {2, 2}) == pl({0, 0, 3}));
  CHECK(coefficient_at_offset(inv2, {1, 0}).is_zero());

  CharSeries prod = multiply(geometric_factor(w, {1, 0}, 1, false, false),
                             geometric_factor(w, {1, 0}, 1, false, true));
  CHECK(prod.terms.size() == 1);
  CHECK(coefficient_at_offset(prod, {0, 0}) == pl({1}));

  // (t - e^{-beta})/(1 - e^{-beta}) = t + (t-1) e^{-beta} + ...
  CharSeries flip = flipped_hl_factor(w, {0, 1});
  CHECK(coefficient_at_offset(flip, {0, 0}) == pl({0, 1}));
  CHECK(coefficient_at_offset(flip, {0, 1}) == pl({-1, 1}));
  CHECK(coefficient_at_offset(flip, {0, 3}) == pl({-1, 1}));
}

TEST_CASE("apply_J in finite rank one") {
  RootDatum a1 = datum_of({{2}});
  Window w = make_window(a1, a1.rho, 3, 3);
  CharSeries f = monomial(a1, w, a1.rho, pl({1}));
  add_term(f, {1}, pl({0, -1}));

  // J(e^rho) = e^rho - e^{-rho}; the second term's weight rho - alpha = -rho
  // reflects back onto the same pair with a sign flip, so the images add.
  CharSeries jf = apply_J(a1, f);
  CHECK(jf.terms.size() == 2);
  CHECK(coefficient_at_offset(jf, {0}) == pl({1, 1}));
  CHECK(coefficient_at_offset(jf, {1}) == pl({-1, -1}));
}

TEST_CASE("apply_J singular cancellation in A2") {
  RootDatum a2 = datum_of({{2, -1}, {-1, 2}});

  // rho - 2 alpha_0 = (-3, 3) lifts to the dominant weight (3, 0), which
  // the reflection s_1 fixes, so the whole term cancels.
  Window w2 = make_window(a2, a2.rho, 2, 2);
  CharSeries f = monomial_at_offset(w2, {2, 0}, pl({1}));
  CHECK(apply_J(a2, f).terms.empty());

  // J of the rho-monomial has |W| = 6 terms; depth 2 keeps three of them.
  CharSeries jg = apply_J(a2, monomial(a2, w2, a2.rho, pl({1})));
  CHECK(coefficient_at_offset(jg, {0, 0}) == pl({1}));
  CHECK(coefficient_at_offset(jg, {1, 0}) == pl({-1}));
  CHECK(coefficient_at_offset(jg, {0, 1}) == pl({-1}));
  CHECK(jg.terms.size() == 3);

  // At depth 4 the full alternating orbit sum fits.
  Window w4 = make_window(a2, a2.rho, 4, 2);
  CharSeries jfull = apply_J(a2, monomial(a2, w4, a2.rho, pl({1})));
  CHECK(jfull.terms.size() == 6);
  CHECK(coefficient_at_offset(jfull, {2, 1}) == pl({1}));
  CHECK(coefficient_at_offset(jfull, {2, 2}) == pl({-1}));
}

TEST_CASE("apply_J affine") {
  RootDatum rd = datum_of(kAffA1);
  Window w = make_window(rd, rd.rho, 4, 2);
  CharSeries jr = apply_J(rd, monomial(rd, w, rd.rho, pl({1})));
  CHECK(coefficient_at_offset(jr, {0, 0}) == pl({1}));
  CHECK(coefficient_at_offset(jr, {1, 0}) == pl({-1}));
  CHECK(coefficient_at_offset(jr, {0, 1}) == pl({-1}));
  CHECK(coefficient_at_offset(jr, {3, 1}) == pl({1}));
  CHECK(coefficient_at_offset(jr, {1, 3}) == pl({1}));
  CHECK(jr.terms.size() == 5);

  CHECK_THROWS_AS(apply_J(rd, monomial_at_offset(
                               make_window(rd, {1, 0, 0}, 2, 2), {0, 0},
                               pl({1}))),
                  InputError);
}

TEST_CASE("t evaluation and equality") {
  RootDatum rd = datum_of(kAffA1);
  Window w = make_window(rd, rd.rho, 3, 3);
  CharSeries f = monomial(rd, w, rd.rho, pl({1, 5}));
  add_term(f, {1, 1}, pl({0, 2}));
  CharSeries z = at_t_zero(f);
  CHECK(coefficient_at_offset(z, {0, 0}) == pl({1}));
  CHECK(z.terms.size() == 1);

  CHECK(series_equal(f, f));
  CHECK_FALSE(series_equal(f, z));
  CHECK_FALSE(series_equal(f, rewindow(rd, f, make_window(rd, rd.rho, 3, 0))));
}
