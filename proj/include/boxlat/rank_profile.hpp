#pragma once

// Rank profile of L(m,n): p_r = number of partitions of rank r in the box.
// The generating polynomial sum_r p_r q^r is the Gaussian binomial
// [m+n choose m]_q = prod_{i=1..m} (1-q^{n+i})/(1-q^i).
//
// The profile is computed two independent ways, by direct level counting
// and by coefficient extraction from the product formula using exact
// polynomial division, and the two are cross-checked; counting is
// authoritative.  All arithmetic is exact.

#include <boost/multiprecision/cpp_int.hpp>

#include "boxlat/partition.hpp"

namespace boxlat {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt binomial(int a, int b) {
  if (b < 0 || b > a) return 0;
  BigInt r = 1;
  for (int i = 1; i <= b; ++i) {
    r *= a - b + i;
    r /= i;
  }
  return r;
}

namespace detail {

// p *= (1 - q^s), exactly.
inline void poly_mul_cyclotomic_factor(std::vector<BigInt>& p, int s) {
  std::vector<BigInt> out(p.size() + static_cast<size_t>(s));
  for (size_t i = 0; i < p.size(); ++i) {
    out[i] += p[i];
    out[i + static_cast<size_t>(s)] -= p[i];
  }
  p = std::move(out);
}

// p /= (1 - q^s); the division must be exact.
inline void poly_div_cyclotomic_factor(std::vector<BigInt>& p, int s) {
  // (1 - q^s) * r = p  implies  r_j = p_j + r_{j-s}.
  std::vector<BigInt> r(p.size() - static_cast<size_t>(s));
  for (size_t j = 0; j < p.size(); ++j) {
    BigInt c = p[j];
    if (j >= static_cast<size_t>(s) && j - static_cast<size_t>(s) < r.size())
      c += r[j - static_cast<size_t>(s)];
    if (j < r.size()) {
      r[j] = c;
    } else if (c != 0) {
      throw std::logic_error("gaussian_coefficients: inexact division");
    }
  }
  p = std::move(r);
}

}  // namespace detail

// Coefficients of [m+n choose m]_q, degree mn.
inline std::vector<BigInt> gaussian_coefficients(int m, int n) {
  std::vector<BigInt> p{1};
  for (int i = 1; i <= m; ++i) detail::poly_mul_cyclotomic_factor(p, n + i);
  for (int i = 1; i <= m; ++i) detail::poly_div_cyclotomic_factor(p, i);
  return p;
}

struct RankProfile {
  BoxShape box;
  std::vector<BigInt> counts;  // counts[r] = p_r, r = 0..mn

  const BigInt& at(int r) const { return counts[static_cast<size_t>(r)]; }
  BigInt total() const {
    BigInt t = 0;
    for (const BigInt& c : counts) t += c;
    return t;
  }
  bool symmetric() const {
    size_t k = counts.size();
    for (size_t r = 0; r < k; ++r)
      if (counts[r] != counts[k - 1 - r]) return false;
    return true;
  }
  bool unimodal() const {
    size_t mid = static_cast<size_t>(box.middle_rank());
    for (size_t r = 0; r < mid; ++r)
      if (counts[r] > counts[r + 1]) return false;
    for (size_t r = mid; r + 1 < counts.size(); ++r)
      if (counts[r] < counts[r + 1]) return false;
    return true;
  }
};

inline RankProfile rank_profile(const BoxShape& box) {
  std::vector<BigInt> counted(static_cast<size_t>(box.cell_count()) + 1);
  for (int r = 0; r <= box.cell_count(); ++r)
    counted[static_cast<size_t>(r)] = enumerate_level(box, r).size();
  std::vector<BigInt> product = gaussian_coefficients(box.rows, box.cols);
  if (counted != product)
    throw std::logic_error("rank_profile: level counts disagree with the "
                           "Gaussian binomial product formula");
  return RankProfile{box, std::move(counted)};
}

}  // namespace boxlat
