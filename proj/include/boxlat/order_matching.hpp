#pragma once

// The explicit order matching phi on the three-row lattice L(3,n).
//
// Distinguished boundary sets:
//   S_{3,n} = { (4k+l, 2k, 0) : k >= 0, l >= 0, l != 1,
//               4k+l <= n, 6k+l <= 3n/2 }          (chain starts)
//   E_{3,n} = S_{3,n}^*  (elementwise duals, chain ends)
//
// Membership in E_{3,w} has a local test: a partition (a,b,c) lies in
// E_{3,w} iff a = w, a-b is even, and 2b-a-c is a nonnegative integer
// other than 1.
//
// phi maps L(3,n) \ E_{3,n} onto L(3,n) \ S_{3,n}, adding one cell:
//   (1) if the partition lies in E_{3,a}:          add to row 1;
//   (2) if b+c is even and (a-1,b+1,c) is not in E_{3,a-1}: add to row 2;
//   (3) if b+c is odd  and (a-1,b,c+1) is     in E_{3,a-1}: add to row 2;
//   (4) if b+c is odd  and (a-1,b,c+1) is not in E_{3,a-1}: add to row 3.
// The remaining combination (b+c even, (a-1,b+1,c) in E_{3,a-1}, not
// case 1) never occurs; hitting it raises ExhaustiveCaseViolation.

#include <set>

#include "boxlat/partition.hpp"

namespace boxlat {

// Local membership test for E_{3,width}; total over arbitrary integer
// triples, false on anything that is not a partition.
inline bool in_E3(int a, int b, int c, int width) {
  if (!(a >= b && b >= c && c >= 0)) return false;
  if (a != width) return false;
  if ((a - b) % 2 != 0) return false;
  int l = 2 * b - a - c;
  return l >= 0 && l != 1;
}

inline bool in_E3(const Partition& p, int width) {
  if (p.length() != 3)
    throw lattice_error(errc::wrong_length, to_string(p) + " is not a triple");
  return in_E3(p[0], p[1], p[2], width);
}

// Membership test for S_{3,n}.  With (a,b,0) = (4k+l, 2k, 0) we have
// k = b/2, l = a-2b, and 6k+l = a+b; the bound 6k+l <= 3n/2 is compared
// exactly as 2(a+b) <= 3n.
inline bool in_S3(int a, int b, int c, int n) {
  if (!(a >= b && b >= c && c == 0)) return false;
  if (a > n) return false;
  if (b % 2 != 0) return false;
  int l = a - 2 * b;
  if (l < 0 || l == 1) return false;
  return 2 * (a + b) <= 3 * n;
}

inline bool in_S3(const Partition& p, int n) {
  if (p.length() != 3)
    throw lattice_error(errc::wrong_length, to_string(p) + " is not a triple");
  return in_S3(p[0], p[1], p[2], n);
}

struct BoundarySets {
  int n = 0;
  std::set<Partition> starts;  // S_{3,n}
  std::set<Partition> ends;    // E_{3,n}
};

inline BoundarySets boundary_sets(int n) {
  BoundarySets bs;
  bs.n = n;
  BoxShape box{3, n};
  for (int k = 0; 4 * k <= n; ++k) {
    for (int l = 0; 4 * k + l <= n; ++l) {
      if (l == 1) continue;
      if (2 * (6 * k + l) > 3 * n) continue;
      Partition mu = make_partition({4 * k + l, 2 * k, 0}, box);
      bs.ends.insert(dual(mu, box));
      bs.starts.insert(std::move(mu));
    }
  }
  return bs;
}

inline Partition phi(const Partition& p, int n) {
  BoxShape box{3, n};
  if (!fits_box(p, box))
    throw lattice_error(p.length() == 3 ? errc::out_of_box : errc::wrong_length,
                        to_string(p));
  int a = p[0], b = p[1], c = p[2];
  if (in_E3(a, b, c, n))
    throw lattice_error(errc::not_in_domain,
                        to_string(p) + " lies in E_{3," + std::to_string(n) + "}");
  if (in_E3(a, b, c, a)) return make_partition({a + 1, b, c}, box);
  if ((b + c) % 2 == 0) {
    if (!in_E3(a - 1, b + 1, c, a - 1)) return make_partition({a, b + 1, c}, box);
    throw lattice_error(errc::exhaustive_case_violation, to_string(p));
  }
  if (in_E3(a - 1, b, c + 1, a - 1)) return make_partition({a, b + 1, c}, box);
  return make_partition({a, b, c + 1}, box);
}

// Conjugated map *phi: an involution on L(3,n) \ E_{3,n}.
inline Partition star_phi(const Partition& p, int n) {
  return dual(phi(p, n), BoxShape{3, n});
}

// Inverse matching, via phi^{-1}(mu) = [phi(mu*)]*.
inline Partition phi_inverse(const Partition& p, int n) {
  BoxShape box{3, n};
  if (!fits_box(p, box))
    throw lattice_error(p.length() == 3 ? errc::out_of_box : errc::wrong_length,
                        to_string(p));
  if (in_S3(p, n))
    throw lattice_error(errc::not_in_range,
                        to_string(p) + " lies in S_{3," + std::to_string(n) + "}");
  return dual(phi(dual(p, box), n), box);
}

// Case classes of phi.  F1 feeds row 1, F2e/F2o row 2, F3o row 3.
enum class FClass { F1, F2e, F2o, F3o };

inline const char* fclass_name(FClass f) {
  switch (f) {
    case FClass::F1: return "F1";
    case FClass::F2e: return "F2e";
    case FClass::F2o: return "F2o";
    case FClass::F3o: return "F3o";
  }
  return "?";
}

inline FClass f_classify(const Partition& p) {
  if (p.length() != 3)
    throw lattice_error(errc::wrong_length, to_string(p) + " is not a triple");
  int a = p[0], b = p[1], c = p[2];
  if (!is_partition_shape(p.parts))
    throw lattice_error(errc::not_weakly_decreasing, to_string(p));
  if (in_E3(a, b, c, a)) return FClass::F1;
  if ((b + c) % 2 == 0) {
    if (!in_E3(a - 1, b + 1, c, a - 1)) return FClass::F2e;
    throw lattice_error(errc::exhaustive_case_violation, to_string(p));
  }
  return in_E3(a - 1, b, c + 1, a - 1) ? FClass::F2o : FClass::F3o;
}

}  // namespace boxlat
