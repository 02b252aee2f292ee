#include "doctest.h"
#include "kmsatake/root_datum.hpp"

using namespace kmsatake;

TEST_CASE("affine A1 coordinates") {
  RootDatum rd = build_datum(validate_gcm({{2, -2}, {-2, 2}}));
  CHECK(rd.n == 2);
  CHECK(rd.corank == 1);
  CHECK(rd.r == 3);

  CHECK(rd.simple_root(0) == Vec{2, -2, 1});
  CHECK(rd.simple_root(1) == Vec{-2, 2, 1});
  CHECK(rd.simple_coroot(0) == Vec{1, 0, 0});
  CHECK(rd.rho == Vec{1, 1, 0});
  CHECK(rd.pairing(rd.simple_root(0), rd.simple_coroot(1)) == -2);
  CHECK(rd.pairing(rd.rho, rd.simple_coroot(0)) == 1);
  CHECK(rd.fundamental_weight(1) == Vec{0, 1, 0});

  // (delta, delta) = 0 and (alpha_0, alpha_1) = -2 for d = (1,1).
  CHECK(rd.form_qq({1, 1}, {1, 1}) == 0);
  CHECK(rd.form_qq({1, 0}, {0, 1}) == -2);
  CHECK(rd.form_qq({1, 0}, {1, 0}) == 2);
  CHECK(rd.form_wq(rd.rho, {1, 1}) == 2);

  CHECK(rd.reflect_weight(0, rd.rho) ==
        vec_sub(rd.rho, rd.simple_root(0)));
  CHECK(rd.reflect_q(0, {0, 1}) == Vec{2, 1});
  // <alpha_1, e_2> = 1 (extra coordinate), so s_1 moves the derivation
  // direction by one coroot.
  CHECK(rd.reflect_coweight(1, Vec{0, 0, 1}) == Vec{0, -1, 1});
}

TEST_CASE("finite type sanity") {
  RootDatum a2 = build_datum(validate_gcm({{2, -1}, {-1, 2}}), "A2");
  CHECK(a2.r == 2);
  CHECK(a2.name == "A2");
  CHECK(a2.rho == Vec{1, 1});
  CHECK(a2.simple_root(0) == Vec{2, -1});
  // Highest root alpha_1 + alpha_2 has pairing 1 with each coroot.
  CHECK(a2.q_to_weight({1, 1}) == Vec{1, 1});

  RootDatum a1 = build_datum(validate_gcm({{2}}));
  CHECK(a1.rho_check == FVec{Frac(1, 2)});
}

TEST_CASE("root decomposition") {
  RootDatum rd = build_datum(validate_gcm({{2, -2}, {-2, 2}}));
  // 2 delta = 2 alpha_0 + 2 alpha_1 lands on (0,0,4).
  CHECK(rd.root_decompose({0, 0, 4}) == Vec{2, 2});
  CHECK(rd.root_decompose({0, 0, 3}) == std::nullopt);
  CHECK(rd.root_decompose({4, -4, 2}) == Vec{2, 0});
  CHECK(rd.root_decompose({1, 0, 0}) == std::nullopt);
}

TEST_CASE("dominance") {
  RootDatum rd = build_datum(validate_gcm({{2, -2}, {-2, 2}}));
  CHECK(rd.weight_dominant({0, 0, 0}));
  CHECK(rd.weight_dominant({1, 0, 5}));
  CHECK_FALSE(rd.weight_dominant({-1, 2, 0}));
  CHECK(rd.weight_regular_dominant({1, 1, 0}));
  CHECK_FALSE(rd.weight_regular_dominant({1, 0, 0}));

  // Coweight dominance pairs against the simple roots, not coordinates.
  CHECK(rd.coweight_dominant({1, 1, 1}));
  CHECK_FALSE(rd.coweight_dominant({2, 1, 1}));

  CHECK(rd.weight_leq(vec_sub(rd.rho, rd.simple_root(0)), rd.rho));
  CHECK_FALSE(rd.weight_leq(rd.rho, vec_sub(rd.rho, rd.simple_root(0))));
  CHECK(rd.coweight_leq({0, 0, 1}, {1, 1, 1}));
  CHECK_FALSE(rd.coweight_leq({1, 1, 1}, {0, 0, 1}));

  RootDatum hyp = build_datum(validate_gcm({{2, -3}, {-3, 2}}));
  CHECK(hyp.coweight_dominant({-1, -1}));
  CHECK_FALSE(hyp.coweight_dominant({1, 1}));
}

TEST_CASE("duality") {
  RootDatum c2 = build_datum(validate_gcm({{2, -1}, {-2, 2}}));
  RootDatum b2 = c2.dual();
  CHECK(b2.gcm.a == Mat{{2, -2}, {-1, 2}});
  CHECK(b2.dual().gcm.a == c2.gcm.a);

  RootDatum aff = build_datum(validate_gcm({{2, -2}, {-2, 2}}));
  RootDatum affd = aff.dual();
  Mat phi = aff.coweight_to_dual_weight_map(affd);
  // Simple coroots map to the dual simple roots.
  for (int i = 0; i < aff.n; ++i) {
    CHECK(mat_apply(phi, aff.simple_coroot(i)) == affd.simple_root(i));
  }
  CHECK(affd.weight_dominant(mat_apply(phi, {1, 1, 1})));
  CHECK_FALSE(affd.weight_dominant(mat_apply(phi, {2, 1, 1})));
}

TEST_CASE("json parsing") {
  RootDatum rd = datum_from_json(
      R"({"name": "aff", "cartan": [[2,-2],[-2,2]]})");
  CHECK(rd.name == "aff");
  CHECK(rd.r == 3);

  RootDatum scaled = datum_from_json(
      R"({"cartan": [[2,-1],[-1,2]], "symmetrizer": [2,2]})");
  CHECK(scaled.d == Vec{2, 2});
  CHECK(scaled.form_qq({1, 0}, {1, 0}) == 4);

  CHECK_THROWS_AS(datum_from_json("{"), InputError);
  CHECK_THROWS_AS(datum_from_json(R"({"cartan": [[2,0],[-1,2]]})"),
                  InputError);
  // Symmetrizer rows must satisfy d_i a_ij = d_j a_ji.
  CHECK_THROWS_AS(
      datum_from_json(R"({"cartan": [[2,-1],[-1,2]], "symmetrizer": [2,1]})"),
      InputError);
}
