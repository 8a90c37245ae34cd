#pragma once

// Published tables of S(n;Z), Q_n/R_n under z1, and Q_n under z2 and z3,
// transcribed as text, and the comparison against freshly computed values.

#include <string>
#include <string_view>
#include <vector>

#include "trident/polyring.hpp"

namespace trident {

struct TableRow {
  std::string table;  // "S", "Q1", "R1", "Q2", "Q3"
  unsigned n = 0;
  std::string expected;  // published text
  std::string computed;  // pretty form of the computed polynomial
  bool matches = false;
};

struct ReferenceEntry {
  std::string_view table;
  unsigned n;
  std::string_view text;
};

/// Every published row, in table order.
const std::vector<ReferenceEntry>& reference_entries();

/// Recomputes every row and compares coefficient for coefficient.
std::vector<TableRow> check_reference_tables();

}  // namespace trident
