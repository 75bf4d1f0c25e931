#pragma once

#include "distgroup/cayley_table.hpp"

namespace tables {

// the unique distributive group of order 3
inline distgroup::CayleyTable order3() {
  return distgroup::CayleyTable::from_rows({{0, 2, 1}, {2, 1, 0}, {1, 0, 2}});
}

// canonical representative of the single order-4 class
inline distgroup::CayleyTable order4() {
  return distgroup::CayleyTable::from_rows(
      {{0, 2, 3, 1}, {3, 1, 0, 2}, {1, 3, 2, 0}, {2, 0, 1, 3}});
}

// Z2 x Z2 under xor: latin, has a unit, neither idempotent nor distributive
inline distgroup::CayleyTable xor4() {
  return distgroup::CayleyTable::from_rows(
      {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}});
}

// x.y = y: satisfies both distributive laws but is not latin
inline distgroup::CayleyTable projection3() {
  return distgroup::CayleyTable::from_rows({{0, 1, 2}, {0, 1, 2}, {0, 1, 2}});
}

// Idempotent latin square with closed triples {0,1,2} and {3,4,5} whose
// complex product {0,1,2}.{3,4,5} = {6,7,8,9} has four elements, so no
// family of size-3 blocks can absorb it. Not distributive.
inline distgroup::CayleyTable blocks10() {
  return distgroup::CayleyTable::from_rows({{0, 2, 1, 6, 7, 8, 3, 4, 9, 5},
                                            {2, 1, 0, 7, 6, 9, 4, 3, 5, 8},
                                            {1, 0, 2, 8, 9, 6, 7, 5, 3, 4},
                                            {6, 7, 8, 3, 5, 4, 0, 9, 1, 2},
                                            {7, 6, 9, 5, 4, 3, 1, 8, 2, 0},
                                            {8, 9, 6, 4, 3, 5, 2, 0, 7, 1},
                                            {3, 4, 5, 9, 8, 1, 6, 2, 0, 7},
                                            {9, 8, 3, 0, 1, 2, 5, 7, 4, 6},
                                            {4, 5, 7, 1, 2, 0, 9, 6, 8, 3},
                                            {5, 3, 4, 2, 0, 7, 8, 1, 6, 9}});
}

}  // namespace tables
