#pragma once

// Parametric classification of box partitions by their position inside
// the closed-form chains.
//
// Three rows: every (p1,p2,p3) matches exactly one of seven shapes,
// decided by the consecutive differences alpha = p1-p2, beta = p2-p3:
//
//   A1  (4k+c,   2k+c,   c)      alpha-beta  = 0,  alpha even
//   A2  (4k+c+1, 2k+c,   c)      alpha-beta  = 1,  beta even
//   A3  (4k+c+1, 2k+c+1, c)      alpha-beta  = -1, alpha even
//   B2  (4k+l,   2k+c,   c)      alpha-beta >= 2,  beta even
//   B3  (4k+l,   2k+c+1, c)      alpha-beta >= 0,  beta odd
//   C1  (4k+l+c, 2k+l+c, l-2)    alpha-beta <= -2, alpha even
//   C2  (4k+l+c+1, 2k+l+c, l-2)  alpha-beta <= -1, alpha odd
//
// Four rows: twenty shapes in four families (A, B, Ca/Cb, Da/Db/Dc),
// decided by alpha = p1-p2, beta = p2-p3, gamma = p3-p4.  Each decision
// row pins the recovered parameters (k,l,r,c); the reconstruction is
// verified before a type is returned, which also resolves the rows whose
// inequality cells overlap.

#include <array>
#include <optional>

#include "boxlat/partition.hpp"

namespace boxlat {

enum class TypeL3 { A1, A2, A3, B2, B3, C1, C2 };

inline const char* type_l3_name(TypeL3 t) {
  switch (t) {
    case TypeL3::A1: return "A1";
    case TypeL3::A2: return "A2";
    case TypeL3::A3: return "A3";
    case TypeL3::B2: return "B2";
    case TypeL3::B3: return "B3";
    case TypeL3::C1: return "C1";
    case TypeL3::C2: return "C2";
  }
  return "?";
}

struct ClassificationL3 {
  TypeL3 tag;
  int k = 0, c = 0, l = 0;  // l unused for A types
  int alpha = 0, beta = 0;
};

inline Partition reconstruct_l3(TypeL3 tag, int k, int c, int l) {
  std::array<int, 3> p{};
  switch (tag) {
    case TypeL3::A1: p = {4 * k + c, 2 * k + c, c}; break;
    case TypeL3::A2: p = {4 * k + c + 1, 2 * k + c, c}; break;
    case TypeL3::A3: p = {4 * k + c + 1, 2 * k + c + 1, c}; break;
    case TypeL3::B2: p = {4 * k + l, 2 * k + c, c}; break;
    case TypeL3::B3: p = {4 * k + l, 2 * k + c + 1, c}; break;
    case TypeL3::C1: p = {4 * k + l + c, 2 * k + l + c, l - 2}; break;
    case TypeL3::C2: p = {4 * k + l + c + 1, 2 * k + l + c, l - 2}; break;
  }
  return Partition({p[0], p[1], p[2]});
}

inline ClassificationL3 classify_l3(const Partition& p) {
  if (p.length() != 3)
    throw lattice_error(errc::wrong_length, to_string(p) + " is not a triple");
  if (!is_partition_shape(p.parts))
    throw lattice_error(errc::not_weakly_decreasing, to_string(p));
  ClassificationL3 out{TypeL3::A1, 0, 0, 0, p[0] - p[1], p[1] - p[2]};
  int a = out.alpha, b = out.beta, d = a - b;
  if (d == 0 && a % 2 == 0) {
    out.tag = TypeL3::A1; out.k = a / 2; out.c = p[2];
  } else if (d == 1 && a % 2 == 1) {
    out.tag = TypeL3::A2; out.k = b / 2; out.c = p[2];
  } else if (d == -1 && a % 2 == 0) {
    out.tag = TypeL3::A3; out.k = a / 2; out.c = p[2];
  } else if (d >= 2 && b % 2 == 0) {
    out.tag = TypeL3::B2; out.k = b / 2; out.c = p[2]; out.l = d + p[2];
  } else if (d >= 0 && b % 2 == 1) {
    out.tag = TypeL3::B3; out.k = (b - 1) / 2; out.c = p[2]; out.l = d + p[2] + 2;
  } else if (d <= -2 && a % 2 == 0) {
    out.tag = TypeL3::C1; out.k = a / 2; out.c = -d - 2; out.l = p[2] + 2;
  } else if (d <= -1 && a % 2 == 1) {
    out.tag = TypeL3::C2; out.k = (a - 1) / 2; out.c = -d - 1; out.l = p[2] + 2;
  } else {
    throw lattice_error(errc::classification_failure, to_string(p));
  }
  if (reconstruct_l3(out.tag, out.k, out.c, out.l) != p)
    throw lattice_error(errc::classification_failure,
                        to_string(p) + " does not round-trip");
  return out;
}

enum class TypeL4 {
  A1, A2, A3, A4,
  B1, B2, B3, B4,
  Ca2, Ca3, Ca4, Cb1, Cb2, Cb3,
  Da3, Da4, Db2, Db3, Dc1, Dc2,
};

inline const char* type_l4_name(TypeL4 t) {
  switch (t) {
    case TypeL4::A1: return "A1";
    case TypeL4::A2: return "A2";
    case TypeL4::A3: return "A3";
    case TypeL4::A4: return "A4";
    case TypeL4::B1: return "B1";
    case TypeL4::B2: return "B2";
    case TypeL4::B3: return "B3";
    case TypeL4::B4: return "B4";
    case TypeL4::Ca2: return "Ca2";
    case TypeL4::Ca3: return "Ca3";
    case TypeL4::Ca4: return "Ca4";
    case TypeL4::Cb1: return "Cb1";
    case TypeL4::Cb2: return "Cb2";
    case TypeL4::Cb3: return "Cb3";
    case TypeL4::Da3: return "Da3";
    case TypeL4::Da4: return "Da4";
    case TypeL4::Db2: return "Db2";
    case TypeL4::Db3: return "Db3";
    case TypeL4::Dc1: return "Dc1";
    case TypeL4::Dc2: return "Dc2";
  }
  return "?";
}

struct ClassificationL4 {
  TypeL4 tag;
  int k = 0, l = 0, r = 0, c = 0;  // l and r only where the family has them
  int alpha = 0, beta = 0, gamma = 0;
};

inline Partition reconstruct_l4(TypeL4 tag, int k, int l, int r, int c) {
  std::array<int, 4> p{};
  switch (tag) {
    case TypeL4::A1: p = {6*k+c, 4*k+c, 2*k+c, c}; break;
    case TypeL4::A2: p = {6*k+c+1, 4*k+c, 2*k+c, c}; break;
    case TypeL4::A3: p = {6*k+c+1, 4*k+c+1, 2*k+c, c}; break;
    case TypeL4::A4: p = {6*k+c+1, 4*k+c+1, 2*k+c+1, c}; break;
    case TypeL4::B1: p = {6*k+l+c, 4*k+l+c, 2*k+c, c}; break;
    case TypeL4::B3: p = {6*k+l+c+1, 4*k+l+c, 2*k+c, c}; break;
    case TypeL4::B2: p = {6*k+l+c+1, 4*k+l+c, 2*k+c+1, c}; break;
    case TypeL4::B4: p = {6*k+l+c+1, 4*k+l+c+1, 2*k+c+1, c}; break;
    case TypeL4::Ca2: p = {6*k+r, 4*k+c, 2*k+c, c}; break;
    case TypeL4::Ca3: p = {6*k+r, 4*k+c+1, 2*k+c, c}; break;
    case TypeL4::Ca4: p = {6*k+r, 4*k+c+1, 2*k+c+1, c}; break;
    case TypeL4::Cb2: p = {6*k+r+c, 4*k+r-1+c, 2*k+r-1+c, r-2}; break;
    case TypeL4::Cb3: p = {6*k+r+c, 4*k+r+c, 2*k+r-1+c, r-2}; break;
    case TypeL4::Cb1: p = {6*k+r+c, 4*k+r+c, 2*k+r+c, r-2}; break;
    case TypeL4::Da3: p = {6*k+l+r, 4*k+l, 2*k+c, c}; break;
    case TypeL4::Da4: p = {6*k+l+r, 4*k+l, 2*k+c+1, c}; break;
    case TypeL4::Db2: p = {6*k+l+r, 4*k+l+c, 2*k+l+c, l-2}; break;
    case TypeL4::Db3: p = {6*k+l+r, 4*k+l+c+1, 2*k+l+c, l-2}; break;
    case TypeL4::Dc1: p = {6*k+l+r+c, 4*k+l+r+c, 2*k+l+r-2, l-2}; break;
    case TypeL4::Dc2: p = {6*k+l+r+c+1, 4*k+l+r+c, 2*k+l+r-2, l-2}; break;
  }
  return Partition({p[0], p[1], p[2], p[3]});
}

// Parameter ranges of each shape (the box-width bound is not part of the
// classification).
inline bool l4_params_valid(TypeL4 tag, int k, int l, int r, int c) {
  if (k < 0 || c < 0) return false;
  switch (tag) {
    case TypeL4::A1: case TypeL4::A2: case TypeL4::A3: case TypeL4::A4:
      return true;
    case TypeL4::B1: case TypeL4::B2: case TypeL4::B3: case TypeL4::B4:
      return l >= 2;
    case TypeL4::Ca2: case TypeL4::Ca3:
      return r >= 2 && c <= r - 2;
    case TypeL4::Ca4:
      return r >= 2 && c <= r - 3;
    case TypeL4::Cb1: case TypeL4::Cb2: case TypeL4::Cb3:
      return r >= 2;
    case TypeL4::Da3: case TypeL4::Da4:
      return l >= 2 && r >= 2 && c <= l - 2;
    case TypeL4::Db2: case TypeL4::Db3:
      return l >= 2 && r >= 2 && c <= r - 2;
    case TypeL4::Dc1: case TypeL4::Dc2:
      return l >= 2 && r >= 2;
  }
  return false;
}

namespace detail {

// One decision row: bounds on the three pairwise differences (open ends
// encoded as +-infinity) and parity constraints (-1 = unconstrained).
struct L4Row {
  TypeL4 tag;
  int ab_lo, ab_hi;  // alpha - beta
  int ag_lo, ag_hi;  // alpha - gamma
  int bg_lo, bg_hi;  // beta - gamma
  int pa, pb, pg;    // required parity of alpha, beta, gamma
};

inline constexpr int kNoLo = -1000000, kNoHi = 1000000;

inline const std::array<L4Row, 20>& l4_rows() {
  static const std::array<L4Row, 20> rows{{
      {TypeL4::A1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
      {TypeL4::A2, 1, 1, 1, 1, 0, 0, 1, 0, 0},
      {TypeL4::A3, -1, -1, 0, 0, 1, 1, 0, 1, 0},
      {TypeL4::A4, 0, 0, -1, -1, -1, -1, 0, 0, 1},
      {TypeL4::B1, kNoLo, -2, 0, 0, 2, kNoHi, 0, -1, 0},
      {TypeL4::B3, kNoLo, -1, 1, 1, 2, kNoHi, 1, -1, 0},
      {TypeL4::B2, kNoLo, 0, 0, 0, 0, kNoHi, 1, -1, 1},
      {TypeL4::B4, kNoLo, -2, -1, -1, 1, kNoHi, 0, -1, 1},
      {TypeL4::Ca2, 2, kNoHi, 2, kNoHi, 0, 0, -1, 0, 0},
      {TypeL4::Ca3, 0, kNoHi, 1, kNoHi, 1, 1, -1, 1, 0},
      {TypeL4::Ca4, 2, kNoHi, 1, kNoHi, -1, -1, -1, 0, 1},
      {TypeL4::Cb2, 1, 1, kNoLo, 0, kNoLo, -1, 1, 0, -1},
      {TypeL4::Cb3, -1, -1, kNoLo, -1, kNoLo, 0, 0, 1, -1},
      {TypeL4::Cb1, 0, 0, kNoLo, -2, kNoLo, -2, 0, 0, -1},
      {TypeL4::Da3, kNoLo, kNoHi, 2, kNoHi, 2, kNoHi, -1, -1, 0},
      {TypeL4::Da4, kNoLo, kNoHi, 1, kNoHi, 0, kNoHi, -1, -1, 1},
      {TypeL4::Db2, 2, kNoHi, kNoLo, kNoHi, kNoLo, -2, -1, 0, -1},
      {TypeL4::Db3, 0, kNoHi, kNoLo, kNoHi, kNoLo, -1, -1, 1, -1},
      {TypeL4::Dc1, kNoLo, -2, kNoLo, -2, kNoLo, kNoHi, 0, -1, -1},
      {TypeL4::Dc2, kNoLo, -1, kNoLo, -1, kNoLo, kNoHi, 1, -1, -1},
  }};
  return rows;
}

// Parameters from the differences and p4; inverts each shape's algebra.
inline std::array<int, 4> l4_recover(TypeL4 tag, int a, int b, int g, int p4) {
  int k = 0, l = 0, r = 0, c = 0;
  switch (tag) {
    case TypeL4::A1: k = a / 2; c = p4; break;
    case TypeL4::A2: k = b / 2; c = p4; break;
    case TypeL4::A3: k = a / 2; c = p4; break;
    case TypeL4::A4: k = a / 2; c = p4; break;
    case TypeL4::B1: k = a / 2; l = b - a; c = p4; break;
    case TypeL4::B3: k = (a - 1) / 2; l = b - a + 1; c = p4; break;
    case TypeL4::B2: k = (a - 1) / 2; l = b - a + 2; c = p4; break;
    case TypeL4::B4: k = a / 2; l = b - a; c = p4; break;
    case TypeL4::Ca2: k = b / 2; r = a - b + p4; c = p4; break;
    case TypeL4::Ca3: k = (b - 1) / 2; r = a - b + p4 + 2; c = p4; break;
    case TypeL4::Ca4: k = b / 2; r = a - b + p4 + 1; c = p4; break;
    case TypeL4::Cb2: k = b / 2; r = p4 + 2; c = g - b - 1; break;
    case TypeL4::Cb3: k = a / 2; r = p4 + 2; c = g - a - 1; break;
    case TypeL4::Cb1: k = a / 2; r = p4 + 2; c = g - a - 2; break;
    case TypeL4::Da3: k = g / 2; l = b - g + p4; r = a - g; c = p4; break;
    case TypeL4::Da4: k = (g - 1) / 2; l = b - g + p4 + 2; r = a - g + 1; c = p4; break;
    case TypeL4::Db2: k = b / 2; l = p4 + 2; r = a + g - 2 * b - 2; c = g - b - 2; break;
    case TypeL4::Db3: k = (b - 1) / 2; l = p4 + 2; r = a + g - 2 * b + 1; c = g - b - 1; break;
    case TypeL4::Dc1: k = a / 2; l = p4 + 2; r = g - a; c = b - a - 2; break;
    case TypeL4::Dc2: k = (a - 1) / 2; l = p4 + 2; r = g - a + 1; c = b - a - 1; break;
  }
  return {k, l, r, c};
}

}  // namespace detail

// Attempts a single shape; nullopt unless the parameters land in range
// and reproduce p exactly.
inline std::optional<ClassificationL4> try_classify_l4_as(TypeL4 tag,
                                                          const Partition& p) {
  int a = p[0] - p[1], b = p[1] - p[2], g = p[2] - p[3];
  auto [k, l, r, c] = detail::l4_recover(tag, a, b, g, p[3]);
  if (!l4_params_valid(tag, k, l, r, c)) return std::nullopt;
  if (reconstruct_l4(tag, k, l, r, c) != p) return std::nullopt;
  return ClassificationL4{tag, k, l, r, c, a, b, g};
}

inline ClassificationL4 classify_l4(const Partition& p) {
  if (p.length() != 4)
    throw lattice_error(errc::wrong_length, to_string(p) + " is not a 4-tuple");
  if (!is_partition_shape(p.parts))
    throw lattice_error(errc::not_weakly_decreasing, to_string(p));
  int a = p[0] - p[1], b = p[1] - p[2], g = p[2] - p[3];
  auto parity_ok = [](int want, int v) { return want < 0 || (v & 1) == want; };
  for (const detail::L4Row& row : detail::l4_rows()) {
    if (a - b < row.ab_lo || a - b > row.ab_hi) continue;
    if (a - g < row.ag_lo || a - g > row.ag_hi) continue;
    if (b - g < row.bg_lo || b - g > row.bg_hi) continue;
    if (!parity_ok(row.pa, a) || !parity_ok(row.pb, b) || !parity_ok(row.pg, g))
      continue;
    if (auto hit = try_classify_l4_as(row.tag, p)) return *hit;
  }
  throw lattice_error(errc::classification_failure, to_string(p));
}

}  // namespace boxlat
