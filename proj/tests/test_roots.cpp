#include <set>

#include "doctest.h"
#include "kmsatake/roots.hpp"
#include "kmsatake/weyl.hpp"

using namespace kmsatake;

TEST_CASE("finite root tables") {
  RootDatum a1 = build_datum(validate_gcm({{2}}));
  RootTable t1 = enumerate_roots(a1, 5);
  CHECK(t1.entries.size() == 1);
  CHECK(multiplicity(t1, {1}) == 1);
  CHECK(multiplicity(t1, {-1}) == 1);
  CHECK(multiplicity(t1, {2}) == 0);
  CHECK(is_real(t1, {1}));

  RootDatum a2 = build_datum(validate_gcm({{2, -1}, {-1, 2}}));
  RootTable t2 = enumerate_roots(a2, 6);
  CHECK(t2.entries.size() == 3);
  CHECK(multiplicity(t2, {1, 1}) == 1);
  CHECK(multiplicity(t2, {2, 1}) == 0);
  CHECK(is_real(t2, {1, 1}));
}

TEST_CASE("affine A1 roots to height 6") {
  RootDatum rd = build_datum(validate_gcm({{2, -2}, {-2, 2}}));
  RootTable t = enumerate_roots(rd, 6);

  // Real: a delta + alpha_i (height 2a+1) and the height <= 6 cutoff
  // gives 6 of them; imaginary: delta, 2delta, 3delta.
  std::set<Vec> real, imag;
  for (const auto& [g, e] : t.entries) {
    (e.real ? real : imag).insert(g);
    CHECK(e.mult == 1);
  }
  CHECK(real == std::set<Vec>{{1, 0}, {0, 1}, {2, 1}, {1, 2}, {3, 2}, {2, 3}});
  CHECK(imag == std::set<Vec>{{1, 1}, {2, 2}, {3, 3}});

  CHECK(multiplicity(t, {1, 1}) == 1);
  CHECK(is_real(t, {1, 2}));
  CHECK_FALSE(is_real(t, {2, 2}));
  CHECK_THROWS_AS(multiplicity(t, {4, 4}), WindowError);
  CHECK_THROWS_AS(is_real(t, {2, 1, 0}), InputError);
  CHECK_THROWS_AS(is_real(t, {1, -1}), InputError);
}

TEST_CASE("affine A2 imaginary multiplicity") {
  RootDatum rd =
      build_datum(validate_gcm({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}));
  RootTable t = enumerate_roots(rd, 7);
  CHECK(multiplicity(t, {1, 1, 1}) == 2);
  CHECK(multiplicity(t, {2, 2, 2}) == 2);
  CHECK(multiplicity(t, {2, 1, 1}) == 1);
}

TEST_CASE("indefinite multiplicities are Weyl invariant") {
  RootDatum rd = build_datum(validate_gcm({{2, -3}, {-3, 2}}));
  RootTable t = enumerate_roots(rd, 8);
  CHECK(multiplicity(t, {1, 1}) == 1);
  // Fold each root through short reflection words; multiplicity must not
  // change while the image stays inside the window.
  for (const auto& [g, e] : t.entries) {
    for (int i = 0; i < rd.n; ++i) {
      Vec img = rd.reflect_q(i, g);
      Int h = vec_sum(img);
      if (h < 1 || h > t.depth) continue;
      CHECK(multiplicity(t, img) == e.mult);
      CHECK(is_real(t, img) == e.real);
    }
  }
}

TEST_CASE("compositions") {
  CHECK(compositions(2, 3) ==
        std::vector<Vec>{{0, 3}, {1, 2}, {2, 1}, {3, 0}});
  CHECK(compositions(1, 0) == std::vector<Vec>{{0}});
  CHECK(compositions(3, 1).size() == 3);
}
