#pragma once

#include <map>

#include "kmsatake/root_datum.hpp"

namespace kmsatake {

// Positive roots of height <= depth with multiplicities, in simple-root
// coordinates. Built once by the Peterson recursion; immutable after.
struct RootTable {
  int depth = 0;
  struct Entry {
    Int mult = 0;
    bool real = false;
  };
  std::map<Vec, Entry> entries;
};

RootTable enumerate_roots(const RootDatum& datum, int depth);

// 0 when alpha_q (in root coordinates, either sign) is not a root.
// Throws WindowError past the table depth.
Int multiplicity(const RootTable& table, const Vec& alpha_q);

// Throws InputError when alpha_q is not a root of the window.
bool is_real(const RootTable& table, const Vec& alpha_q);

// All vectors in Z_{>=0}^n with coordinate sum exactly h, lexicographic.
std::vector<Vec> compositions(int n, int h);

}  // namespace kmsatake
