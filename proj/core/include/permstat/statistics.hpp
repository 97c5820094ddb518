#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "permstat/permutation.hpp"

namespace permstat {

enum class StatisticId {
  des,
  maj,
  inv,
  baj,
  baj_minus_inv,
  cdes,
  exc,
  weak_exc,
  aexc,
  cda,
  cdd,
  cv,
  cpk,
  ile,
  den,
  fix,
};

inline constexpr std::array<StatisticId, 16> kAllStatistics = {
    StatisticId::des,  StatisticId::maj,      StatisticId::inv,  StatisticId::baj,
    StatisticId::baj_minus_inv, StatisticId::cdes, StatisticId::exc, StatisticId::weak_exc,
    StatisticId::aexc, StatisticId::cda,      StatisticId::cdd,  StatisticId::cv,
    StatisticId::cpk,  StatisticId::ile,      StatisticId::den,  StatisticId::fix,
};

/// Lowercase identifier used on the command line and in JSON/CSV output.
std::string_view statistic_name(StatisticId id);
/// Throws ParseError on an unknown name.
StatisticId parse_statistic(std::string_view name);

// Evaluators follow the textbook definitions literally; they are the trusted
// base of every brute-force check.

long long des(const Permutation& w);
long long maj(const Permutation& w);
long long inv(const Permutation& w);
/// sum over descents i of i (n - i)
long long baj(const Permutation& w);
/// Descents with the wraparound comparison w(n) > w(1). Zero on S_1.
long long cdes(const Permutation& w);
long long fix(const Permutation& w);

struct ExcedanceCounts {
  long long exc = 0;       // w(i) > i
  long long weak_exc = 0;  // w(i) >= i
  long long aexc = 0;      // w(i) < i
};
ExcedanceCounts exc_family(const Permutation& w);

struct CyclicCounts {
  long long cv = 0;   // w^{-1}(i) > i < w(i)
  long long cpk = 0;  // w^{-1}(i) < i > w(i)
  long long cda = 0;  // w^{-1}(i) < i < w(i)
  long long cdd = 0;  // w^{-1}(i) > i > w(i)
};
CyclicCounts cyclic_family(const Permutation& w);

/// #{(i, j) : i < j < w(j) < w(i) and w^{-1}(j) < j}
long long ile(const Permutation& w);

/// Denert's statistic: over i < j, count w(j) < w(i) <= j, plus
/// w(i) <= j < w(j), plus j < w(j) < w(i).
long long den(const Permutation& w);

long long evaluate(StatisticId id, const Permutation& w);

}  // namespace permstat
