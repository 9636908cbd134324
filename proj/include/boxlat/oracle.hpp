#pragma once

// Independent certification.  The matching oracle computes a maximum
// bipartite matching between adjacent levels by plain augmenting-path
// search over the cover graph, sharing nothing with phi or the greedy
// matcher, so a claimed matching can be checked against the true optimum.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "boxlat/chains.hpp"
#include "boxlat/greedy.hpp"
#include "boxlat/order_matching.hpp"
#include "boxlat/partition.hpp"
#include "boxlat/rank_profile.hpp"
#include "boxlat/recursive.hpp"

namespace boxlat {

struct LevelCertificate {
  int from_rank = 0;        // matching between ranks from_rank, from_rank+1
  int lower_size = 0;
  int upper_size = 0;
  int max_matching = 0;
  bool full = false;        // max_matching == min(lower_size, upper_size)
};

// Maximum matching between levels r and r+1, augmenting-path search in
// fixed lex order.
inline LevelCertificate max_level_matching(const BoxShape& box, int r) {
  if (r < 0 || r + 1 > box.cell_count())
    throw lattice_error(errc::rank_out_of_range, std::to_string(r));
  std::vector<Partition> lower = enumerate_level(box, r);
  std::vector<Partition> upper = enumerate_level(box, r + 1);
  std::map<Partition, int> upper_index;
  for (size_t i = 0; i < upper.size(); ++i)
    upper_index.emplace(upper[i], static_cast<int>(i));
  std::vector<std::vector<int>> adj(lower.size());
  for (size_t i = 0; i < lower.size(); ++i)
    for (const Partition& q : covers(lower[i], box))
      adj[i].push_back(upper_index.at(q));
  std::vector<int> match_upper(upper.size(), -1);
  std::vector<char> visited;
  auto augment = [&](auto&& self, int i) -> bool {
    for (int j : adj[static_cast<size_t>(i)]) {
      if (visited[static_cast<size_t>(j)]) continue;
      visited[static_cast<size_t>(j)] = 1;
      if (match_upper[static_cast<size_t>(j)] < 0 ||
          self(self, match_upper[static_cast<size_t>(j)])) {
        match_upper[static_cast<size_t>(j)] = i;
        return true;
      }
    }
    return false;
  };
  int size = 0;
  for (size_t i = 0; i < lower.size(); ++i) {
    visited.assign(upper.size(), 0);
    if (augment(augment, static_cast<int>(i))) ++size;
  }
  LevelCertificate cert;
  cert.from_rank = r;
  cert.lower_size = static_cast<int>(lower.size());
  cert.upper_size = static_cast<int>(upper.size());
  cert.max_matching = size;
  cert.full = size == std::min(cert.lower_size, cert.upper_size);
  return cert;
}

struct MatchingCertificate {
  bool structurally_valid = true;   // cover steps, injectivity, ranks
  std::string detail;               // first structural violation
  std::vector<LevelCertificate> oracle;  // per level, aligned with input
  std::vector<int> matched;              // pairs per level
  bool all_levels_maximum = true;   // every level reaches the oracle optimum
};

inline MatchingCertificate certify_matching(const OrderMatching& om) {
  MatchingCertificate cert;
  auto fail = [&](std::string d) {
    if (cert.structurally_valid) {
      cert.structurally_valid = false;
      cert.detail = std::move(d);
    }
  };
  for (const LevelMatching& lm : om.levels) {
    bool up = lm.direction == MatchDirection::up;
    std::set<Partition> targets;
    for (const auto& [src, tgt] : lm.pairs) {
      if (rank(src) != lm.from_rank)
        fail(to_string(src) + " not at rank " + std::to_string(lm.from_rank));
      if (!is_cover_step(up ? src : tgt, up ? tgt : src))
        fail(to_string(src) + " -> " + to_string(tgt) + " is not a cover step");
      if (!targets.insert(tgt).second)
        fail(to_string(tgt) + " matched twice");
    }
    for (const Partition& u : lm.unmatched)
      if (lm.pairs.count(u)) fail(to_string(u) + " both matched and unmatched");
    int sources = static_cast<int>(lm.pairs.size() + lm.unmatched.size());
    int expect = static_cast<int>(
        enumerate_level(om.box, lm.from_rank).size());
    if (sources != expect)
      fail("level " + std::to_string(lm.from_rank) + " lists " +
           std::to_string(sources) + " sources, expected " +
           std::to_string(expect));
    LevelCertificate oc =
        max_level_matching(om.box, up ? lm.from_rank : lm.from_rank - 1);
    cert.matched.push_back(static_cast<int>(lm.pairs.size()));
    if (static_cast<int>(lm.pairs.size()) != oc.max_matching)
      cert.all_levels_maximum = false;
    cert.oracle.push_back(oc);
  }
  return cert;
}

struct ProfileCertificate {
  BoxShape box;
  bool symmetric = false;
  bool unimodal = false;
  BigInt width = 0;              // p_{floor(mn/2)}
  bool decomposition_checked = false;  // a construction exists for this m
  bool sperner_verified = false;       // it has exactly `width` chains
  int chain_count = 0;
};

// Profile symmetry and unimodality from the exact counts; the Sperner
// width is certified by exhibiting a chain decomposition with exactly
// p_middle chains (constructions exist for m <= 4).
inline ProfileCertificate certify_profile(const BoxShape& box) {
  ProfileCertificate cert;
  cert.box = box;
  RankProfile prof = rank_profile(box);
  cert.symmetric = prof.symmetric();
  cert.unimodal = prof.unimodal();
  cert.width = prof.at(box.middle_rank());
  if (box.rows <= 4) {
    ChainDecomposition cd;
    switch (box.rows) {
      case 3: cd = chains_from_phi(box.cols); break;
      case 4: cd = chains_l4(box.cols); break;
      default: cd = knead(u_decomposition(box.rows, box.cols)); break;
    }
    cert.decomposition_checked = true;
    cert.chain_count = static_cast<int>(cd.chains.size());
    cert.sperner_verified = BigInt(cert.chain_count) == cert.width;
  }
  return cert;
}

}  // namespace boxlat
