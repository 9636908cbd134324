#pragma once

// Chain decompositions of L(m,n).
//
// A decomposition is a list of saturated chains partitioning a ground set.
// Kinds:
//   sperner          every chain touches the middle rank floor(mn/2);
//                    the chain count then equals the largest level.
//   symmetric        sperner, and each chain's rank span is symmetric
//                    (min rank + max rank = mn).
//   u_decomposition  chains partition the half lattice (ranks <= d_{m,n})
//                    and every chain tops out at rank exactly d_{m,n}.
//
// For m = 3 the decomposition is generated either by iterating phi from
// each start in S_{3,n} until the chain enters E_{3,n}, or directly from
// the closed-form description of those chains; the two agree.  For m = 4
// chains are threaded out of the greedy order matching.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "boxlat/greedy.hpp"
#include "boxlat/order_matching.hpp"
#include "boxlat/partition.hpp"

namespace boxlat {

enum class DecompKind { sperner, symmetric, u_decomposition };

inline const char* decomp_kind_name(DecompKind k) {
  switch (k) {
    case DecompKind::sperner: return "sperner";
    case DecompKind::symmetric: return "symmetric";
    case DecompKind::u_decomposition: return "u_decomposition";
  }
  return "?";
}

struct Chain {
  std::vector<Partition> elements;  // ascending, consecutive ranks

  const Partition& start() const { return elements.front(); }
  const Partition& end() const { return elements.back(); }
  int size() const { return static_cast<int>(elements.size()); }
};

struct ChainDecomposition {
  BoxShape box;
  DecompKind kind = DecompKind::sperner;
  std::vector<Chain> chains;

  std::set<Partition> starts() const {
    std::set<Partition> s;
    for (const Chain& c : chains) s.insert(c.start());
    return s;
  }
  std::set<Partition> ends() const {
    std::set<Partition> s;
    for (const Chain& c : chains) s.insert(c.end());
    return s;
  }
};

struct ValidationReport {
  bool ok = true;
  std::string detail;
};

inline bool is_cover_step(const Partition& a, const Partition& b) {
  if (a.length() != b.length()) return false;
  int grown = 0;
  for (int i = 0; i < a.length(); ++i) {
    if (b[i] == a[i] + 1)
      ++grown;
    else if (b[i] != a[i])
      return false;
  }
  return grown == 1;
}

// Checks saturation, disjoint exact coverage of the ground set, and the
// rank conditions of the claimed kind.
inline ValidationReport validate_decomposition(
    const ChainDecomposition& cd, const std::vector<Partition>& ground) {
  auto fail = [](std::string d) { return ValidationReport{false, std::move(d)}; };
  std::map<Partition, int> seen;
  for (const Chain& c : cd.chains) {
    if (c.elements.empty()) return fail("empty chain");
    for (size_t i = 0; i + 1 < c.elements.size(); ++i)
      if (!is_cover_step(c.elements[i], c.elements[i + 1]))
        return fail("not saturated at " + to_string(c.elements[i]) + " -> " +
                    to_string(c.elements[i + 1]));
    for (const Partition& p : c.elements)
      if (++seen[p] > 1) return fail(to_string(p) + " covered twice");
    int lo = rank(c.start()), hi = rank(c.end());
    int mid = cd.box.middle_rank();
    switch (cd.kind) {
      case DecompKind::symmetric:
        if (lo + hi != cd.box.cell_count())
          return fail("chain at " + to_string(c.start()) +
                      " has asymmetric rank span");
        [[fallthrough]];
      case DecompKind::sperner:
        if (lo > mid || hi < mid)
          return fail("chain at " + to_string(c.start()) +
                      " misses the middle rank");
        break;
      case DecompKind::u_decomposition:
        if (hi != cd.box.half_rank())
          return fail("chain at " + to_string(c.start()) +
                      " tops at rank " + std::to_string(hi) + ", not d=" +
                      std::to_string(cd.box.half_rank()));
        break;
    }
  }
  for (const Partition& p : ground)
    if (!seen.count(p)) return fail(to_string(p) + " not covered");
  if (seen.size() != ground.size()) return fail("coverage exceeds ground set");
  return {};
}

inline std::vector<Partition> enumerate_box(const BoxShape& box) {
  std::vector<Partition> all;
  for (int r = 0; r <= box.cell_count(); ++r)
    for (Partition& p : enumerate_level(box, r)) all.push_back(std::move(p));
  return all;
}

// Sperner chain decomposition of L(3,n): iterate phi from each start in
// S_{3,n} until the chain enters E_{3,n}.
inline ChainDecomposition chains_from_phi(int n) {
  BoxShape box{3, n};
  ChainDecomposition cd{box, DecompKind::sperner, {}};
  for (const Partition& mu : boundary_sets(n).starts) {
    Chain c;
    Partition cur = mu;
    while (!in_E3(cur, n)) {
      c.elements.push_back(cur);
      cur = phi(cur, n);
    }
    c.elements.push_back(cur);
    cd.chains.push_back(std::move(c));
  }
  ValidationReport rep = validate_decomposition(cd, enumerate_box(box));
  if (!rep.ok) throw lattice_error(errc::decomposition_invalid, rep.detail);
  return cd;
}

// Closed form of the phi-chain starting at mu = (4k+l, 2k, 0) in S_{3,n}.
//
// l = 0: cycle rows 1,2,3 through (4k+c, 2k+c, c), ending at
//        (n, n-2k, n-4k) after 3n-12k steps.
// l >= 2: alternate rows 2,3 through (4k+l, 2k+c, c) up to c = l-2, add
//        row 2 twice more, then cycle rows 1,2 through
//        (4k+l+c, 2k+l+c, l-2), ending at (n, n-2k, l-2) after 2n-8k-2
//        steps.
inline Chain closed_form_chain_l3(const Partition& mu, int n) {
  if (!in_S3(mu, n))
    throw lattice_error(errc::not_a_start,
                        to_string(mu) + " not in S_{3," + std::to_string(n) + "}");
  BoxShape box{3, n};
  int k = mu[1] / 2;
  int l = mu[0] - 2 * mu[1];
  Chain chain;
  auto push = [&](int a, int b, int c) {
    chain.elements.push_back(make_partition({a, b, c}, box));
  };
  if (l == 0) {
    for (int c = 0; c <= n - 4 * k; ++c) {
      push(4 * k + c, 2 * k + c, c);
      if (c < n - 4 * k) {
        push(4 * k + c + 1, 2 * k + c, c);
        push(4 * k + c + 1, 2 * k + c + 1, c);
      }
    }
  } else {
    for (int c = 0; c <= l - 2; ++c) {
      push(4 * k + l, 2 * k + c, c);
      push(4 * k + l, 2 * k + c + 1, c);
    }
    for (int c = 0; c <= n - 4 * k - l; ++c) {
      push(4 * k + l + c, 2 * k + l + c, l - 2);
      if (c < n - 4 * k - l) push(4 * k + l + c + 1, 2 * k + l + c, l - 2);
    }
  }
  return chain;
}

// Pairing of starts with ends: the chain from mu finishes at [psi(mu)]*.
// Type-i starts are fixed; (4k+l, 2k, 0) with l >= 2 maps to
// (n-l+2, 2k, 0).
inline Partition psi(const Partition& mu, int n) {
  if (!in_S3(mu, n))
    throw lattice_error(errc::not_a_start,
                        to_string(mu) + " not in S_{3," + std::to_string(n) + "}");
  int l = mu[0] - 2 * mu[1];
  if (l == 0) return mu;
  return make_partition({n - l + 2, mu[1], 0}, BoxShape{3, n});
}

// Threads the per-level pairs of an order matching into maximal chains.
// Downward pairs are reversed into upward edges first; every element then
// has at most one incoming and one outgoing edge.
inline ChainDecomposition chains_from_matching(const OrderMatching& om,
                                               DecompKind kind = DecompKind::sperner) {
  std::map<Partition, Partition> next;
  std::set<Partition> has_incoming;
  for (const LevelMatching& lm : om.levels) {
    for (const auto& [src, tgt] : lm.pairs) {
      if (lm.direction == MatchDirection::up) {
        next.emplace(src, tgt);
        has_incoming.insert(tgt);
      } else {
        next.emplace(tgt, src);
        has_incoming.insert(src);
      }
    }
  }
  ChainDecomposition cd{om.box, kind, {}};
  for (const Partition& p : enumerate_box(om.box)) {
    if (has_incoming.count(p)) continue;
    Chain c;
    Partition cur = p;
    c.elements.push_back(cur);
    for (auto it = next.find(cur); it != next.end(); it = next.find(cur)) {
      cur = it->second;
      c.elements.push_back(cur);
    }
    cd.chains.push_back(std::move(c));
  }
  std::sort(cd.chains.begin(), cd.chains.end(),
            [](const Chain& a, const Chain& b) { return a.start() < b.start(); });
  return cd;
}

// S_{4,n} = { (6k+s+l, 4k+l, 2k, 0) : s,l,k >= 0, s != 1, l != 1,
//             6k+s+l <= n }.
inline std::set<Partition> s4_starting_set(int n) {
  std::set<Partition> out;
  BoxShape box{4, n};
  for (int k = 0; 6 * k <= n; ++k)
    for (int s = 0; 6 * k + s <= n; ++s) {
      if (s == 1) continue;
      for (int l = 0; 6 * k + s + l <= n; ++l) {
        if (l == 1) continue;
        out.insert(make_partition({6 * k + s + l, 4 * k + l, 2 * k, 0}, box));
      }
    }
  return out;
}

// Sperner chain decomposition of L(4,n), threaded from the greedy order
// matching; the set of chain starts must come out as S_{4,n}.
inline ChainDecomposition chains_l4(int n) {
  BoxShape box{4, n};
  ChainDecomposition cd = chains_from_matching(ga_full(box));
  ValidationReport rep = validate_decomposition(cd, enumerate_box(box));
  if (!rep.ok) throw lattice_error(errc::decomposition_invalid, rep.detail);
  if (cd.starts() != s4_starting_set(n))
    throw lattice_error(errc::decomposition_invalid,
                        "chain starts differ from S_{4," + std::to_string(n) + "}");
  return cd;
}

}  // namespace boxlat
