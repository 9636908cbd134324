#pragma once

// Greedy level matching GA on L(m,n).
//
// At level r, partitions are processed in ascending lex order and each is
// matched to its lex-smallest cover not already taken.  An element whose
// covers are all taken stays unmatched; GA(p) is then undefined.
//
// A full order matching needs upward matchings below the middle rank and
// downward matchings above it.  Downward matchings are obtained by running
// the upward greedy on the dual lattice (the image of L(m,n) under *) and
// dualizing the resulting pairs.

#include <map>
#include <set>
#include <vector>

#include "boxlat/order_matching.hpp"
#include "boxlat/partition.hpp"

namespace boxlat {

enum class MatchDirection { up, down };

struct LevelMatching {
  int from_rank = 0;
  MatchDirection direction = MatchDirection::up;
  std::map<Partition, Partition> pairs;   // source -> target
  std::vector<Partition> unmatched;       // sources left unmatched, lex order

  bool complete() const { return unmatched.empty(); }
};

struct OrderMatching {
  BoxShape box;
  std::vector<LevelMatching> levels;
};

// Upward greedy at level r: sources rank r, targets rank r+1.
inline LevelMatching ga_level(const BoxShape& box, int r) {
  if (r < 0 || r >= box.cell_count())
    throw lattice_error(errc::rank_out_of_range,
                        "no covers above rank " + std::to_string(r));
  LevelMatching lm;
  lm.from_rank = r;
  lm.direction = MatchDirection::up;
  std::set<Partition> taken;
  for (const Partition& p : enumerate_level(box, r)) {
    bool matched = false;
    for (const Partition& q : covers(p, box)) {
      if (taken.insert(q).second) {
        lm.pairs.emplace(p, q);
        matched = true;
        break;
      }
    }
    if (!matched) lm.unmatched.push_back(p);
  }
  return lm;
}

// Downward matching with sources at rank r, targets at rank r-1: the
// upward greedy at rank mn-r of the dual lattice, dualized back.
inline LevelMatching ga_level_down(const BoxShape& box, int r) {
  if (r <= 0 || r > box.cell_count())
    throw lattice_error(errc::rank_out_of_range,
                        "no cocovers below rank " + std::to_string(r));
  LevelMatching up = ga_level(box, box.cell_count() - r);
  LevelMatching lm;
  lm.from_rank = r;
  lm.direction = MatchDirection::down;
  for (const auto& [src, tgt] : up.pairs)
    lm.pairs.emplace(dual(src, box), dual(tgt, box));
  for (const Partition& u : up.unmatched) lm.unmatched.push_back(dual(u, box));
  std::sort(lm.unmatched.begin(), lm.unmatched.end());
  return lm;
}

// Upward matchings into the middle rank, downward matchings out of every
// rank above it; together they cover every adjacent pair of levels once.
inline OrderMatching ga_full(const BoxShape& box) {
  OrderMatching om;
  om.box = box;
  int mid = box.middle_rank();
  for (int r = 0; r < mid; ++r) om.levels.push_back(ga_level(box, r));
  for (int r = mid + 1; r <= box.cell_count(); ++r)
    om.levels.push_back(ga_level_down(box, r));
  return om;
}

// Pointwise comparison of GA with phi on L(3,n), all levels, upward.
// GA(p) should be defined exactly when p is outside E_{3,n}, and should
// then equal phi(p).
struct PhiAgreement {
  int n = 0;
  bool agree = true;
  long long checked = 0;
  std::string first_mismatch;
};

inline PhiAgreement compare_with_phi(int n) {
  PhiAgreement rep;
  rep.n = n;
  BoxShape box{3, n};
  for (int r = 0; r < box.cell_count(); ++r) {
    LevelMatching lm = ga_level(box, r);
    for (const Partition& p : enumerate_level(box, r)) {
      ++rep.checked;
      auto it = lm.pairs.find(p);
      bool defined = it != lm.pairs.end();
      bool expected = !in_E3(p, n);
      std::string bad;
      if (defined != expected)
        bad = to_string(p) + ": GA " + (defined ? "defined" : "undefined") +
              " but E-membership says otherwise";
      else if (defined && it->second != phi(p, n))
        bad = to_string(p) + ": GA gives " + to_string(it->second) +
              ", phi gives " + to_string(phi(p, n));
      if (!bad.empty() && rep.agree) {
        rep.agree = false;
        rep.first_mismatch = std::move(bad);
      }
    }
  }
  return rep;
}

}  // namespace boxlat
