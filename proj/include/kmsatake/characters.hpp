#pragma once

#include "kmsatake/charseries.hpp"
#include "kmsatake/roots.hpp"

namespace kmsatake {

// chi_lambda as a series based at lambda, coefficients constant in t.
CharSeries weyl_kac_character(const RootDatum& datum, const RootTable& table,
                              const Vec& lambda, int depth);

// Weight multiplicities dim L(lambda)_nu for all nu = lambda - gamma with
// hgt(gamma) <= depth, keyed by the offset gamma.
struct CharacterTable {
  Vec lambda;
  int depth = 0;
  std::map<Vec, Int> mults;
};

CharacterTable freudenthal_table(const RootDatum& datum,
                                 const RootTable& table, const Vec& lambda,
                                 int depth);

Int freudenthal_multiplicity(const RootDatum& datum, const RootTable& table,
                             const Vec& lambda, const Vec& nu);

// Primary multiplicity API: the Weyl-Kac coefficient.
Int weight_multiplicity(const RootDatum& datum, const RootTable& table,
                        const Vec& lambda, const Vec& nu);

}  // namespace kmsatake
