#pragma once

// Partitions inside an m x n box: weakly decreasing tuples
// n >= p_1 >= p_2 >= ... >= p_m >= 0, stored at fixed length m with
// trailing zeros, so (2,1) in a three-row box is {2,1,0}.  Ordered by
// containment they form the distributive lattice L(m,n); the rank of a
// partition is the number of cells |p|, and covers add a single cell.
//
// All comparisons between partitions of equal length are lexicographic:
// the first differing coordinate decides.

#include <algorithm>
#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace boxlat {

enum class errc {
  not_weakly_decreasing,
  wrong_length,
  out_of_box,
  rank_out_of_range,
  not_in_domain,
  not_in_range,
  exhaustive_case_violation,
  not_a_start,
  not_saturated,
  classification_failure,
  knead_failure,
  recud_failure,
  decomposition_invalid,
};

inline const char* errc_name(errc e) {
  switch (e) {
    case errc::not_weakly_decreasing: return "NotWeaklyDecreasing";
    case errc::wrong_length: return "WrongLength";
    case errc::out_of_box: return "OutOfBox";
    case errc::rank_out_of_range: return "RankOutOfRange";
    case errc::not_in_domain: return "NotInDomain";
    case errc::not_in_range: return "NotInRange";
    case errc::exhaustive_case_violation: return "ExhaustiveCaseViolation";
    case errc::not_a_start: return "NotAStart";
    case errc::not_saturated: return "NotSaturated";
    case errc::classification_failure: return "ClassificationFailure";
    case errc::knead_failure: return "KneadFailure";
    case errc::recud_failure: return "RecUDFailure";
    case errc::decomposition_invalid: return "DecompositionInvalid";
  }
  return "UnknownError";
}

class lattice_error : public std::runtime_error {
 public:
  lattice_error(errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail),
        code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

struct BoxShape {
  int rows = 0;  // m
  int cols = 0;  // n

  friend bool operator==(const BoxShape&, const BoxShape&) = default;

  int cell_count() const { return rows * cols; }
  // Rank of the middle level, floor(mn/2).
  int middle_rank() const { return rows * cols / 2; }
  // Top rank of the half lattice, d_{m,n} = floor((mn+1)/2).
  int half_rank() const { return (rows * cols + 1) / 2; }
};

struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p) : parts(std::move(p)) {}

  int length() const { return static_cast<int>(parts.size()); }
  int operator[](int i) const { return parts[static_cast<size_t>(i)]; }

  // Lexicographic; also equality.  Only meaningful at equal length.
  friend auto operator<=>(const Partition&, const Partition&) = default;
};

inline std::string to_string(const Partition& p) {
  std::string s = "(";
  for (int i = 0; i < p.length(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + ")";
}

inline int rank(const Partition& p) {
  int r = 0;
  for (int v : p.parts) r += v;
  return r;
}

inline bool is_partition_shape(const std::vector<int>& parts) {
  for (size_t i = 0; i + 1 < parts.size(); ++i)
    if (parts[i] < parts[i + 1]) return false;
  return parts.empty() || parts.back() >= 0;
}

inline bool fits_box(const Partition& p, const BoxShape& box) {
  return p.length() == box.rows &&
         (p.parts.empty() || p.parts.front() <= box.cols);
}

inline Partition make_partition(std::vector<int> parts, const BoxShape& box) {
  if (static_cast<int>(parts.size()) != box.rows)
    throw lattice_error(errc::wrong_length,
                        "expected " + std::to_string(box.rows) + " parts, got " +
                            std::to_string(parts.size()));
  if (!is_partition_shape(parts))
    throw lattice_error(errc::not_weakly_decreasing,
                        to_string(Partition(parts)));
  if (!parts.empty() && parts.front() > box.cols)
    throw lattice_error(errc::out_of_box,
                        to_string(Partition(parts)) + " exceeds width " +
                            std::to_string(box.cols));
  return Partition(std::move(parts));
}

// (n - p_m, ..., n - p_1): the rank-reversing involution of L(m,n).
inline Partition dual(const Partition& p, const BoxShape& box) {
  if (!fits_box(p, box))
    throw lattice_error(errc::out_of_box,
                        to_string(p) + " not in box " + std::to_string(box.rows) +
                            "x" + std::to_string(box.cols));
  std::vector<int> d(p.parts.size());
  for (int i = 0; i < p.length(); ++i)
    d[static_cast<size_t>(i)] = box.cols - p[p.length() - 1 - i];
  return Partition(std::move(d));
}

// Partitions covering p in L(m,n) (one cell added), ascending lex.
// Row i may grow iff it stays within the box and below row i-1; growing a
// later row yields a lex-smaller result, so emit rows last to first.
inline std::vector<Partition> covers(const Partition& p, const BoxShape& box) {
  if (!fits_box(p, box))
    throw lattice_error(errc::out_of_box, to_string(p));
  std::vector<Partition> out;
  for (int i = box.rows - 1; i >= 0; --i) {
    int cap = (i == 0) ? box.cols : p[i - 1];
    if (p[i] < cap) {
      Partition q = p;
      ++q.parts[static_cast<size_t>(i)];
      out.push_back(std::move(q));
    }
  }
  return out;
}

// Partitions covered by p (one cell removed), ascending lex.
inline std::vector<Partition> cocovers(const Partition& p,
                                       const BoxShape& box) {
  if (!fits_box(p, box))
    throw lattice_error(errc::out_of_box, to_string(p));
  std::vector<Partition> out;
  for (int i = 0; i < box.rows; ++i) {
    int floor_i = (i == box.rows - 1) ? 0 : p[i + 1];
    if (p[i] > floor_i) {
      Partition q = p;
      --q.parts[static_cast<size_t>(i)];
      out.push_back(std::move(q));
    }
  }
  return out;
}

// All partitions of rank r in L(m,n), ascending lex.
inline std::vector<Partition> enumerate_level(const BoxShape& box, int r) {
  if (r < 0 || r > box.cell_count())
    throw lattice_error(errc::rank_out_of_range,
                        "rank " + std::to_string(r) + " outside 0.." +
                            std::to_string(box.cell_count()));
  std::vector<Partition> out;
  std::vector<int> acc(static_cast<size_t>(box.rows));
  // Choose parts left to right, smallest feasible value first; the
  // remaining rows can hold at most (rows left) * (current value) cells.
  auto rec = [&](auto&& self, int row, int cap, int remaining) -> void {
    if (row == box.rows) {
      if (remaining == 0) out.emplace_back(acc);
      return;
    }
    int rows_left = box.rows - row;
    int lo = (remaining + rows_left - 1) / rows_left;
    int hi = std::min(cap, remaining);
    for (int v = lo; v <= hi; ++v) {
      acc[static_cast<size_t>(row)] = v;
      self(self, row + 1, v, remaining - v);
    }
  };
  rec(rec, 0, box.cols, r);
  return out;
}

}  // namespace boxlat
