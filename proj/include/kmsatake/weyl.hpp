#pragma once

#include "kmsatake/poly.hpp"
#include "kmsatake/root_datum.hpp"

namespace kmsatake {

// Words list simple-reflection indices in application order: [i,j] is the
// map x -> s_j(s_i(x)). Canonical form is the ShortLex-least reduced word.
using Word = std::vector<int>;

// Action of s_i on weight coordinates, as an r x r matrix.
Mat reflection_matrix(const RootDatum& datum, int i);
Mat mat_mul(const Mat& a, const Mat& b);
Mat identity_matrix(int r);

Vec act(const RootDatum& datum, const Word& word, const Vec& weight);
Vec act_coweight(const RootDatum& datum, const Word& word, const Vec& coweight);

Word canonical_word(const RootDatum& datum, const Word& word);
std::pair<int, int> length_and_sign(const RootDatum& datum, const Word& word);

// Positive real roots sent negative, in root coordinates, telescoped from
// the canonical word: {alpha_{i_1}, s_{i_1}(alpha_{i_2}), ...}.
std::vector<Vec> inversion_set(const RootDatum& datum, const Word& word);

struct OrbitEntry {
  Vec weight;
  int sign = 1;
  Word word;  // w with w(base) = weight
  int depth = 0;
};

struct OrbitSlice {
  Vec base;
  int depth = 0;
  std::vector<OrbitEntry> entries;  // sorted by (depth, weight)
};

// Every w(base) with base - w(base) in Q^+ of height <= depth, once each.
// The base must be strictly dominant so depth is strictly monotone along
// reduced words and the BFS prune is complete.
OrbitSlice orbit_within_depth(const RootDatum& datum, const Vec& base,
                              int depth);

// Canonical words of all elements with length <= max_len, sorted by
// (length, lex).
std::vector<Word> elements_up_to_length(const RootDatum& datum, int max_len);

// Poincare series of the parabolic generated by {s_i : <lambda,coroot_i>=0}
// (weight case) or {s_i : <alpha_i,lambda>=0} (coweight case), truncated
// at t-degree tdeg.
Poly stabilizer_poincare_weight(const RootDatum& datum, const Vec& lambda,
                                int tdeg);
Poly stabilizer_poincare_coweight(const RootDatum& datum, const Vec& lambda,
                                  int tdeg);

}  // namespace kmsatake
