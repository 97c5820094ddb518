#include "permstat/statistics.hpp"

#include "permstat/errors.hpp"

namespace permstat {

std::string_view statistic_name(StatisticId id) {
  switch (id) {
    case StatisticId::des: return "des";
    case StatisticId::maj: return "maj";
    case StatisticId::inv: return "inv";
    case StatisticId::baj: return "baj";
    case StatisticId::baj_minus_inv: return "baj_minus_inv";
    case StatisticId::cdes: return "cdes";
    case StatisticId::exc: return "exc";
    case StatisticId::weak_exc: return "weak_exc";
    case StatisticId::aexc: return "aexc";
    case StatisticId::cda: return "cda";
    case StatisticId::cdd: return "cdd";
    case StatisticId::cv: return "cv";
    case StatisticId::cpk: return "cpk";
    case StatisticId::ile: return "ile";
    case StatisticId::den: return "den";
    case StatisticId::fix: return "fix";
  }
  return "?";
}

StatisticId parse_statistic(std::string_view name) {
  for (StatisticId id : kAllStatistics) {
    if (statistic_name(id) == name) return id;
  }
  throw ParseError("unknown statistic '" + std::string(name) + "'");
}

long long des(const Permutation& w) {
  long long count = 0;
  for (int i = 1; i < w.n(); ++i) count += w(i) > w(i + 1);
  return count;
}

long long maj(const Permutation& w) {
  long long sum = 0;
  for (int i = 1; i < w.n(); ++i) {
    if (w(i) > w(i + 1)) sum += i;
  }
  return sum;
}

long long inv(const Permutation& w) {
  long long count = 0;
  for (int i = 1; i <= w.n(); ++i) {
    for (int j = i + 1; j <= w.n(); ++j) count += w(i) > w(j);
  }
  return count;
}

long long baj(const Permutation& w) {
  const long long n = w.n();
  long long sum = 0;
  for (int i = 1; i < w.n(); ++i) {
    if (w(i) > w(i + 1)) sum += i * (n - i);
  }
  return sum;
}

long long cdes(const Permutation& w) {
  const int n = w.n();
  long long count = 0;
  for (int i = 1; i <= n; ++i) {
    const int next = i == n ? w(1) : w(i + 1);
    count += w(i) > next;
  }
  return count;
}

long long fix(const Permutation& w) {
  long long count = 0;
  for (int i = 1; i <= w.n(); ++i) count += w(i) == i;
  return count;
}

ExcedanceCounts exc_family(const Permutation& w) {
  ExcedanceCounts out;
  for (int i = 1; i <= w.n(); ++i) {
    out.exc += w(i) > i;
    out.weak_exc += w(i) >= i;
    out.aexc += w(i) < i;
  }
  return out;
}

CyclicCounts cyclic_family(const Permutation& w) {
  const Permutation winv = w.inverse();
  CyclicCounts out;
  for (int i = 1; i <= w.n(); ++i) {
    const int before = winv(i);
    const int after = w(i);
    out.cv += before > i && i < after;
    out.cpk += before < i && i > after;
    out.cda += before < i && i < after;
    out.cdd += before > i && i > after;
  }
  return out;
}

long long ile(const Permutation& w) {
  const Permutation winv = w.inverse();
  long long count = 0;
  for (int i = 1; i <= w.n(); ++i) {
    for (int j = i + 1; j <= w.n(); ++j) {
      if (j < w(j) && w(j) < w(i) && winv(j) < j) ++count;
    }
  }
  return count;
}

long long den(const Permutation& w) {
  long long count = 0;
  for (int i = 1; i <= w.n(); ++i) {
    for (int j = i + 1; j <= w.n(); ++j) {
      const int wi = w(i);
      const int wj = w(j);
      count += wj < wi && wi <= j;
      count += wi <= j && j < wj;
      count += j < wj && wj < wi;
    }
  }
  return count;
}

long long evaluate(StatisticId id, const Permutation& w) {
  switch (id) {
    case StatisticId::des: return des(w);
    case StatisticId::maj: return maj(w);
    case StatisticId::inv: return inv(w);
    case StatisticId::baj: return baj(w);
    case StatisticId::baj_minus_inv: return baj(w) - inv(w);
    case StatisticId::cdes: return cdes(w);
    case StatisticId::exc: return exc_family(w).exc;
    case StatisticId::weak_exc: return exc_family(w).weak_exc;
    case StatisticId::aexc: return exc_family(w).aexc;
    case StatisticId::cda: return cyclic_family(w).cda;
    case StatisticId::cdd: return cyclic_family(w).cdd;
    case StatisticId::cv: return cyclic_family(w).cv;
    case StatisticId::cpk: return cyclic_family(w).cpk;
    case StatisticId::ile: return ile(w);
    case StatisticId::den: return den(w);
    case StatisticId::fix: return fix(w);
  }
  throw DomainError("unregistered statistic");
}

}  // namespace permstat
