#include "trident/partition_oracle.hpp"

#include <map>
#include <sstream>
#include <unordered_map>

#include "trident/errors.hpp"

namespace trident {

BigInt ColoredPartition::value() const {
  BigInt total = 0;
  BigInt power = 1;
  for (const auto& d : digits) {
    total += power * d.count();
    power *= 3;
  }
  return total;
}

bool ColoredPartition::is_valid_for(std::uint64_t n) const {
  for (const auto& d : digits) {
    if (d.over > 1 || d.tilde > 1 || d.plain > 2) return false;
  }
  return value() == BigInt(std::to_string(n));
}

std::size_t ColoredPartition::total_parts() const {
  std::size_t k = 0;
  for (const auto& d : digits) k += d.count();
  return k;
}

std::string ColoredPartition::render() const {
  if (digits.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  BigInt power = 1;
  auto emit = [&](const char* mark) {
    if (!first) os << '+';
    os << power.get_str() << mark;
    first = false;
  };
  for (const auto& d : digits) {
    for (unsigned k = 0; k < d.plain; ++k) emit("");
    if (d.over) emit("-");
    if (d.tilde) emit("~");
    power *= 3;
  }
  return os.str();
}

PartitionStats PartitionStats::of(const ColoredPartition& p) {
  PartitionStats s;
  for (const auto& d : p.digits) {
    s.overlined += d.over;
    s.tilde += d.tilde;
    if (d.plain == 1) ++s.single_plain;
    if (d.plain == 2) ++s.paired_plain;
  }
  return s;
}

Exponents PartitionStats::exponents() const {
  return Exponents{{overlined, tilde, single_plain, paired_plain}};
}

std::vector<ColoredPartition> enumerate_partitions(std::uint64_t n,
                                                   const OracleOptions& opts) {
  const BigInt expected = count_partitions(n);
  if (expected > BigInt(std::to_string(opts.list_cap))) {
    throw CapExceeded("partition list for n=" + std::to_string(n),
                      expected.fits_ulong_p() ? expected.get_ui() : ~0ULL,
                      opts.list_cap);
  }
  std::vector<ColoredPartition> out;
  out.reserve(expected.get_ui());
  for_each_partition(n, [&](const ColoredPartition& p) { out.push_back(p); });
  return out;
}

MultiPoly oracle_poly(std::uint64_t n, const OracleOptions& opts) {
  const BigInt expected = count_partitions(n);
  if (expected > BigInt(std::to_string(opts.list_cap))) {
    throw CapExceeded("oracle polynomial for n=" + std::to_string(n),
                      expected.fits_ulong_p() ? expected.get_ui() : ~0ULL,
                      opts.list_cap);
  }
  std::map<Exponents, std::uint64_t> counts;
  for_each_partition(n, [&](const ColoredPartition& p) {
    ++counts[PartitionStats::of(p).exponents()];
  });
  std::vector<Monomial4> terms;
  terms.reserve(counts.size());
  for (const auto& [e, c] : counts) terms.push_back(Monomial4{e, BigInt(std::to_string(c))});
  return MultiPoly::from_terms(std::move(terms));
}

namespace {

// Ways to place c copies of one power: (over, tilde, plain) with sum c.
constexpr unsigned kPlacements[5] = {1, 3, 4, 3, 1};

BigInt count_rec(std::uint64_t m, std::unordered_map<std::uint64_t, BigInt>& memo) {
  if (m == 0) return 1;
  if (auto it = memo.find(m); it != memo.end()) return it->second;
  BigInt total = 0;
  for (unsigned c = static_cast<unsigned>(m % 3); c <= 4 && c <= m; c += 3) {
    total += kPlacements[c] * count_rec((m - c) / 3, memo);
  }
  memo.emplace(m, total);
  return total;
}

}  // namespace

BigInt count_partitions(std::uint64_t n) {
  std::unordered_map<std::uint64_t, BigInt> memo;
  return count_rec(n, memo);
}

std::uint64_t count_by_enumeration(std::uint64_t n) {
  std::uint64_t k = 0;
  for_each_partition(n, [&](const ColoredPartition&) { ++k; });
  return k;
}

}  // namespace trident
