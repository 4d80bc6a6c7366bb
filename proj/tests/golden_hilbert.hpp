// Frozen coefficient tables for the matrix Hilbert series of the E-type
// algebras, computed independently from (1 + P t^h)(1 - C t + t^2)^{-1}.
#pragma once

namespace golden {

// index [i-1][j-1][d], d = 0..10
inline constexpr int e6_hilbert[6][6][11] = {
  {{1,0,0,0,0,0,1,0,0,0,0},
   {0,1,0,0,0,1,0,1,0,0,0},
   {0,0,1,0,1,0,1,0,1,0,0},
   {0,0,0,1,0,1,0,0,0,1,0},
   {0,0,0,0,1,0,0,0,0,0,1},
   {0,0,0,1,0,0,0,1,0,0,0}},
  {{0,1,0,0,0,1,0,1,0,0,0},
   {1,0,1,0,1,0,2,0,1,0,0},
   {0,1,0,2,0,2,0,2,0,1,0},
   {0,0,1,0,2,0,1,0,1,0,1},
   {0,0,0,1,0,1,0,0,0,1,0},
   {0,0,1,0,1,0,1,0,1,0,0}},
  {{0,0,1,0,1,0,1,0,1,0,0},
   {0,1,0,2,0,2,0,2,0,1,0},
   {1,0,2,0,3,0,3,0,2,0,1},
   {0,1,0,2,0,2,0,2,0,1,0},
   {0,0,1,0,1,0,1,0,1,0,0},
   {0,1,0,1,0,2,0,1,0,1,0}},
  {{0,0,0,1,0,1,0,0,0,1,0},
   {0,0,1,0,2,0,1,0,1,0,1},
   {0,1,0,2,0,2,0,2,0,1,0},
   {1,0,1,0,1,0,2,0,1,0,0},
   {0,1,0,0,0,1,0,1,0,0,0},
   {0,0,1,0,1,0,1,0,1,0,0}},
  {{0,0,0,0,1,0,0,0,0,0,1},
   {0,0,0,1,0,1,0,0,0,1,0},
   {0,0,1,0,1,0,1,0,1,0,0},
   {0,1,0,0,0,1,0,1,0,0,0},
   {1,0,0,0,0,0,1,0,0,0,0},
   {0,0,0,1,0,0,0,1,0,0,0}},
  {{0,0,0,1,0,0,0,1,0,0,0},
   {0,0,1,0,1,0,1,0,1,0,0},
   {0,1,0,1,0,2,0,1,0,1,0},
   {0,0,1,0,1,0,1,0,1,0,0},
   {0,0,0,1,0,0,0,1,0,0,0},
   {1,0,0,0,1,0,1,0,0,0,1}}
};

// index [i-1][j-1][d], d = 0..16
inline constexpr int e7_hilbert[7][7][17] = {
  {{1,0,0,0,0,0,0,0,1,0,0,0,0,0,0,0,1},
   {0,1,0,0,0,0,0,1,0,1,0,0,0,0,0,1,0},
   {0,0,1,0,0,0,1,0,1,0,1,0,0,0,1,0,0},
   {0,0,0,1,0,1,0,1,0,1,0,1,0,1,0,0,0},
   {0,0,0,0,1,0,1,0,0,0,1,0,1,0,0,0,0},
   {0,0,0,0,0,1,0,0,0,0,0,1,0,0,0,0,0},
   {0,0,0,0,1,0,0,0,1,0,0,0,1,0,0,0,0}},
  {{0,1,0,0,0,0,0,1,0,1,0,0,0,0,0,1,0},
   {1,0,1,0,0,0,1,0,2,0,1,0,0,0,1,0,1},
   {0,1,0,1,0,1,0,2,0,2,0,1,0,1,0,1,0},
   {0,0,1,0,2,0,2,0,2,0,2,0,2,0,1,0,0},
   {0,0,0,1,0,2,0,1,0,1,0,2,0,1,0,0,0},
   {0,0,0,0,1,0,1,0,0,0,1,0,1,0,0,0,0},
   {0,0,0,1,0,1,0,1,0,1,0,1,0,1,0,0,0}},
  {{0,0,1,0,0,0,1,0,1,0,1,0,0,0,1,0,0},
   {0,1,0,1,0,1,0,2,0,2,0,1,0,1,0,1,0},
   {1,0,1,0,2,0,2,0,3,0,2,0,2,0,1,0,1},
   {0,1,0,2,0,3,0,3,0,3,0,3,0,2,0,1,0},
   {0,0,1,0,2,0,2,0,2,0,2,0,2,0,1,0,0},
   {0,0,0,1,0,1,0,1,0,1,0,1,0,1,0,0,0},
   {0,0,1,0,1,0,2,0,1,0,2,0,1,0,1,0,0}},
  {{0,0,0,1,0,1,0,1,0,1,0,1,0,1,0,0,0},
   {0,0,1,0,2,0,2,0,2,0,2,0,2,0,1,0,0},
   {0,1,0,2,0,3,0,3,0,3,0,3,0,2,0,1,0},
   {1,0,2,0,3,0,4,0,4,0,4,0,3,0,2,0,1},
   {0,1,0,2,0,2,0,3,0,3,0,2,0,2,0,1,0},
   {0,0,1,0,1,0,1,0,2,0,1,0,1,0,1,0,0},
   {0,1,0,1,0,2,0,2,0,2,0,2,0,1,0,1,0}},
  {{0,0,0,0,1,0,1,0,0,0,1,0,1,0,0,0,0},
   {0,0,0,1,0,2,0,1,0,1,0,2,0,1,0,0,0},
   {0,0,1,0,2,0,2,0,2,0,2,0,2,0,1,0,0},
   {0,1,0,2,0,2,0,3,0,3,0,2,0,2,0,1,0},
   {1,0,1,0,1,0,2,0,2,0,2,0,1,0,1,0,1},
   {0,1,0,0,0,1,0,1,0,1,0,1,0,0,0,1,0},
   {0,0,1,0,1,0,1,0,2,0,1,0,1,0,1,0,0}},
  {{0,0,0,0,0,1,0,0,0,0,0,1,0,0,0,0,0},
   {0,0,0,0,1,0,1,0,0,0,1,0,1,0,0,0,0},
   {0,0,0,1,0,1,0,1,0,1,0,1,0,1,0,0,0},
   {0,0,1,0,1,0,1,0,2,0,1,0,1,0,1,0,0},
   {0,1,0,0,0,1,0,1,0,1,0,1,0,0,0,1,0},
   {1,0,0,0,0,0,1,0,0,0,1,0,0,0,0,0,1},
   {0,0,0,1,0,0,0,1,0,1,0,0,0,1,0,0,0}},
  {{0,0,0,0,1,0,0,0,1,0,0,0,1,0,0,0,0},
   {0,0,0,1,0,1,0,1,0,1,0,1,0,1,0,0,0},
   {0,0,1,0,1,0,2,0,1,0,2,0,1,0,1,0,0},
   {0,1,0,1,0,2,0,2,0,2,0,2,0,1,0,1,0},
   {0,0,1,0,1,0,1,0,2,0,1,0,1,0,1,0,0},
   {0,0,0,1,0,0,0,1,0,1,0,0,0,1,0,0,0},
   {1,0,0,0,1,0,1,0,1,0,1,0,1,0,0,0,1}}
};

// index [i-1][j-1][d], d = 0..28
inline constexpr int e8_hilbert[8][8][29] = {
  {{1,0,0,0,0,0,0,0,0,0,1,0,0,0,0,0,0,0,1,0,0,0,0,0,0,0,0,0,1},
   {0,1,0,0,0,0,0,0,0,1,0,1,0,0,0,0,0,1,0,1,0,0,0,0,0,0,0,1,0},
   {0,0,1,0,0,0,0,0,1,0,1,0,1,0,0,0,1,0,1,0,1,0,0,0,0,0,1,0,0},
   {0,0,0,1,0,0,0,1,0,1,0,1,0,1,0,1,0,1,0,1,0,1,0,0,0,1,0,0,0},
   {0,0,0,0,1,0,1,0,1,0,1,0,1,0,2,0,1,0,1,0,1,0,1,0,1,0,0,0,0},
   {0,0,0,0,0,1,0,1,0,0,0,1,0,1,0,1,0,1,0,0,0,1,0,1,0,0,0,0,0},
   {0,0,0,0,0,0,1,0,0,0,0,0,1,0,0,0,1,0,0,0,0,0,1,0,0,0,0,0,0},
   {0,0,0,0,0,1,0,0,0,1,0,0,0,1,0,1,0,0,0,1,0,0,0,1,0,0,0,0,0}},
  {{0,1,0,0,0,0,0,0,0,1,0,1,0,0,0,0,0,1,0,1,0,0,0,0,0,0,0,1,0},
   {1,0,1,0,0,0,0,0,1,0,2,0,1,0,0,0,1,0,2,0,1,0,0,0,0,0,1,0,1},
   {0,1,0,1,0,0,0,1,0,2,0,2,0,1,0,1,0,2,0,2,0,1,0,0,0,1,0,1,0},
   {0,0,1,0,1,0,1,0,2,0,2,0,2,0,2,0,2,0,2,0,2,0,1,0,1,0,1,0,0},
   {0,0,0,1,0,2,0,2,0,2,0,2,0,3,0,3,0,2,0,2,0,2,0,2,0,1,0,0,0},
   {0,0,0,0,1,0,2,0,1,0,1,0,2,0,2,0,2,0,1,0,1,0,2,0,1,0,0,0,0},
   {0,0,0,0,0,1,0,1,0,0,0,1,0,1,0,1,0,1,0,0,0,1,0,1,0,0,0,0,0},
   {0,0,0,0,1,0,1,0,1,0,1,0,1,0,2,0,1,0,1,0,1,0,1,0,1,0,0,0,0}},
  {{0,0,1,0,0,0,0,0,1,0,1,0,1,0,0,0,1,0,1,0,1,0,0,0,0,0,1,0,0},
   {0,1,0,1,0,0,0,1,0,2,0,2,0,1,0,1,0,2,0,2,0,1,0,0,0,1,0,1,0},
   {1,0,1,0,1,0,1,0,2,0,3,0,2,0,2,0,2,0,3,0,2,0,1,0,1,0,1,0,1},
   {0,1,0,1,0,2,0,2,0,3,0,3,0,3,0,3,0,3,0,3,0,2,0,2,0,1,0,1,0},
   {0,0,1,0,2,0,3,0,3,0,3,0,4,0,4,0,4,0,3,0,3,0,3,0,2,0,1,0,0},
   {0,0,0,1,0,2,0,2,0,2,0,2,0,3,0,3,0,2,0,2,0,2,0,2,0,1,0,0,0},
   {0,0,0,0,1,0,1,0,1,0,1,0,1,0,2,0,1,0,1,0,1,0,1,0,1,0,0,0,0},
   {0,0,0,1,0,1,0,2,0,1,0,2,0,2,0,2,0,2,0,1,0,2,0,1,0,1,0,0,0}},
  {{0,0,0,1,0,0,0,1,0,1,0,1,0,1,0,1,0,1,0,1,0,1,0,0,0,1,0,0,0},
   {0,0,1,0,1,0,1,0,2,0,2,0,2,0,2,0,2,0,2,0,2,0,1,0,1,0,1,0,0},
   {0,1,0,1,0,2,0,2,0,3,0,3,0,3,0,3,0,3,0,3,0,2,0,2,0,1,0,1,0},
   {1,0,1,0,2,0,3,0,3,0,4,0,4,0,4,0,4,0,4,0,3,0,3,0,2,0,1,0,1},
   {0,1,0,2,0,3,0,4,0,4,0,5,0,5,0,5,0,5,0,4,0,4,0,3,0,2,0,1,0},
   {0,0,1,0,2,0,2,0,3,0,3,0,3,0,4,0,3,0,3,0,3,0,2,0,2,0,1,0,0},
   {0,0,0,1,0,1,0,1,0,2,0,1,0,2,0,2,0,1,0,2,0,1,0,1,0,1,0,0,0},
   {0,0,1,0,1,0,2,0,2,0,2,0,3,0,2,0,3,0,2,0,2,0,2,0,1,0,1,0,0}},
  {{0,0,0,0,1,0,1,0,1,0,1,0,1,0,2,0,1,0,1,0,1,0,1,0,1,0,0,0,0},
   {0,0,0,1,0,2,0,2,0,2,0,2,0,3,0,3,0,2,0,2,0,2,0,2,0,1,0,0,0},
   {0,0,1,0,2,0,3,0,3,0,3,0,4,0,4,0,4,0,3,0,3,0,3,0,2,0,1,0,0},
   {0,1,0,2,0,3,0,4,0,4,0,5,0,5,0,5,0,5,0,4,0,4,0,3,0,2,0,1,0},
   {1,0,2,0,3,0,4,0,5,0,6,0,6,0,6,0,6,0,6,0,5,0,4,0,3,0,2,0,1},
   {0,1,0,2,0,2,0,3,0,4,0,4,0,4,0,4,0,4,0,4,0,3,0,2,0,2,0,1,0},
   {0,0,1,0,1,0,1,0,2,0,2,0,2,0,2,0,2,0,2,0,2,0,1,0,1,0,1,0,0},
   {0,1,0,1,0,2,0,2,0,3,0,3,0,3,0,3,0,3,0,3,0,2,0,2,0,1,0,1,0}},
  {{0,0,0,0,0,1,0,1,0,0,0,1,0,1,0,1,0,1,0,0,0,1,0,1,0,0,0,0,0},
   {0,0,0,0,1,0,2,0,1,0,1,0,2,0,2,0,2,0,1,0,1,0,2,0,1,0,0,0,0},
   {0,0,0,1,0,2,0,2,0,2,0,2,0,3,0,3,0,2,0,2,0,2,0,2,0,1,0,0,0},
   {0,0,1,0,2,0,2,0,3,0,3,0,3,0,4,0,3,0,3,0,3,0,2,0,2,0,1,0,0},
   {0,1,0,2,0,2,0,3,0,4,0,4,0,4,0,4,0,4,0,4,0,3,0,2,0,2,0,1,0},
   {1,0,1,0,1,0,2,0,2,0,3,0,3,0,2,0,3,0,3,0,2,0,2,0,1,0,1,0,1},
   {0,1,0,0,0,1,0,1,0,1,0,2,0,1,0,1,0,2,0,1,0,1,0,1,0,0,0,1,0},
   {0,0,1,0,1,0,1,0,2,0,2,0,2,0,2,0,2,0,2,0,2,0,1,0,1,0,1,0,0}},
  {{0,0,0,0,0,0,1,0,0,0,0,0,1,0,0,0,1,0,0,0,0,0,1,0,0,0,0,0,0},
   {0,0,0,0,0,1,0,1,0,0,0,1,0,1,0,1,0,1,0,0,0,1,0,1,0,0,0,0,0},
   {0,0,0,0,1,0,1,0,1,0,1,0,1,0,2,0,1,0,1,0,1,0,1,0,1,0,0,0,0},
   {0,0,0,1,0,1,0,1,0,2,0,1,0,2,0,2,0,1,0,2,0,1,0,1,0,1,0,0,0},
   {0,0,1,0,1,0,1,0,2,0,2,0,2,0,2,0,2,0,2,0,2,0,1,0,1,0,1,0,0},
   {0,1,0,0,0,1,0,1,0,1,0,2,0,1,0,1,0,2,0,1,0,1,0,1,0,0,0,1,0},
   {1,0,0,0,0,0,1,0,0,0,1,0,1,0,0,0,1,0,1,0,0,0,1,0,0,0,0,0,1},
   {0,0,0,1,0,0,0,1,0,1,0,1,0,1,0,1,0,1,0,1,0,1,0,0,0,1,0,0,0}},
  {{0,0,0,0,0,1,0,0,0,1,0,0,0,1,0,1,0,0,0,1,0,0,0,1,0,0,0,0,0},
   {0,0,0,0,1,0,1,0,1,0,1,0,1,0,2,0,1,0,1,0,1,0,1,0,1,0,0,0,0},
   {0,0,0,1,0,1,0,2,0,1,0,2,0,2,0,2,0,2,0,1,0,2,0,1,0,1,0,0,0},
   {0,0,1,0,1,0,2,0,2,0,2,0,3,0,2,0,3,0,2,0,2,0,2,0,1,0,1,0,0},
   {0,1,0,1,0,2,0,2,0,3,0,3,0,3,0,3,0,3,0,3,0,2,0,2,0,1,0,1,0},
   {0,0,1,0,1,0,1,0,2,0,2,0,2,0,2,0,2,0,2,0,2,0,1,0,1,0,1,0,0},
   {0,0,0,1,0,0,0,1,0,1,0,1,0,1,0,1,0,1,0,1,0,1,0,0,0,1,0,0,0},
   {1,0,0,0,1,0,1,0,1,0,2,0,1,0,2,0,1,0,2,0,1,0,1,0,1,0,0,0,1}}
};

}  // namespace golden
