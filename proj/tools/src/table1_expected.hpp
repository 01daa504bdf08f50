#pragma once

#include <array>

namespace aont::cli {

// Expected counts of reduced and inequivalent linear (2,q,q)-AONT.
inline constexpr int kTable1FixtureVersion = 1;

struct Table1Row {
  unsigned q;
  unsigned long long reduced;
  unsigned long long inequivalent;
};

inline constexpr std::array<Table1Row, 7> kTable1Expected{{
    {3, 2, 1},
    {4, 3, 2},
    {5, 38, 5},
    {7, 13, 1},
    {8, 0, 0},
    {9, 0, 0},
    {11, 21, 1},
}};

}  // namespace aont::cli
