#pragma once

// Brute-force ground truth for restricted colored base-3 partitions: every
// power of 3 may appear at most once overlined, at most once with a tilde,
// and at most twice unmarked.

#include <cstdint>
#include <string>
#include <vector>

#include "trident/polyring.hpp"

namespace trident {

/// Multiplicities of one power of 3 inside a partition.
struct DigitRecord {
  std::uint8_t over = 0;   // 0 or 1
  std::uint8_t tilde = 0;  // 0 or 1
  std::uint8_t plain = 0;  // 0, 1 or 2

  unsigned count() const { return unsigned{over} + tilde + plain; }
  friend auto operator<=>(const DigitRecord&, const DigitRecord&) = default;
};

/// digits[j] describes the part 3^j. No trailing all-zero records.
struct ColoredPartition {
  std::vector<DigitRecord> digits;

  /// Sum of the parts.
  BigInt value() const;
  /// Digit-sum identity and the per-power bounds.
  bool is_valid_for(std::uint64_t n) const;
  std::size_t total_parts() const;
  /// Parts listed from small to large, "-" overline and "~" tilde, e.g.
  /// "1+1+1-". The empty partition renders as "0".
  std::string render() const;

  friend bool operator==(const ColoredPartition&, const ColoredPartition&) = default;
};

/// Exponents of (w, x, y, z): overlined parts, tilde parts, powers used
/// exactly once unmarked, powers used twice unmarked.
struct PartitionStats {
  std::uint32_t overlined = 0;
  std::uint32_t tilde = 0;
  std::uint32_t single_plain = 0;
  std::uint32_t paired_plain = 0;

  static PartitionStats of(const ColoredPartition& p);
  Exponents exponents() const;
};

struct OracleOptions {
  std::uint64_t list_cap = 10000;
};

/// Every partition of n in lexicographic digit order (record j = 0 first,
/// records compared as (over, tilde, plain)). Throws CapExceeded when the
/// number of partitions exceeds `opts.list_cap`.
std::vector<ColoredPartition> enumerate_partitions(std::uint64_t n,
                                                   const OracleOptions& opts = {});

/// Visits every partition of n without materialising the list.
template <class Visitor>
void for_each_partition(std::uint64_t n, Visitor&& visit);

/// S(n;Z) assembled monomial by monomial from the enumeration.
MultiPoly oracle_poly(std::uint64_t n, const OracleOptions& opts = {});

/// Number of partitions of n by a digit recursion on n; no enumeration.
BigInt count_partitions(std::uint64_t n);

/// Number of partitions of n obtained by walking the enumeration tree.
std::uint64_t count_by_enumeration(std::uint64_t n);

namespace detail {

template <class Visitor>
void walk(std::uint64_t remaining, std::vector<DigitRecord>& prefix,
          Visitor& visit) {
  if (remaining == 0) {
    ColoredPartition p{prefix};
    while (!p.digits.empty() && p.digits.back().count() == 0) p.digits.pop_back();
    visit(static_cast<const ColoredPartition&>(p));
    return;
  }
  for (std::uint8_t over = 0; over <= 1; ++over) {
    for (std::uint8_t tilde = 0; tilde <= 1; ++tilde) {
      for (std::uint8_t plain = 0; plain <= 2; ++plain) {
        const unsigned c = unsigned{over} + tilde + plain;
        if (c > remaining || (remaining - c) % 3 != 0) continue;
        prefix.push_back(DigitRecord{over, tilde, plain});
        walk((remaining - c) / 3, prefix, visit);
        prefix.pop_back();
      }
    }
  }
}

}  // namespace detail

template <class Visitor>
void for_each_partition(std::uint64_t n, Visitor&& visit) {
  std::vector<DigitRecord> prefix;
  detail::walk(n, prefix, visit);
}

}  // namespace trident
