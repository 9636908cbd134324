#pragma once

// Recursive route to Sperner chain decompositions.
//
// L^U(m,n) is the half lattice: all partitions of rank at most
// d_{m,n} = floor((mn+1)/2).  A U-decomposition covers L^U(m,n) by
// disjoint saturated chains, each topping out at rank exactly d_{m,n}.
//
// Kneading glues every chain C_i to a dual chain (the elementwise duals
// of some C_j, reversed).  For even mn the partner is the dual chain
// whose minimum equals C_i's top, and the shared element is kept once.
// For odd mn the rank-d elements coincide with the duals of the
// rank-(d-1) elements; the partner is the dual chain whose second
// element equals C_i's top, and the partner's minimum is dropped (it has
// rank d-1, so it already lies in some chain).  The result is a Sperner
// chain decomposition of L(m,n) whose starts are the chain starts and
// whose ends are their duals.
//
// A U-decomposition of L^U(m,n) is built from one of L^U(m,n-1) (kneaded,
// then cut back) and one of L^U(m-1,n) (prefixed with a full first row of
// n, then cut); chains of the kneaded part that fall short of d_{m,n} are
// extended by gluing a candidate chain onto their end.  The same
// recursion on starting sets alone is rec_smn.

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "boxlat/chains.hpp"
#include "boxlat/partition.hpp"

namespace boxlat {

inline std::vector<Partition> half_lattice(const BoxShape& box) {
  std::vector<Partition> out;
  for (int r = 0; r <= box.half_rank(); ++r)
    for (Partition& p : enumerate_level(box, r)) out.push_back(std::move(p));
  return out;
}

inline ChainDecomposition knead(const ChainDecomposition& u) {
  const BoxShape box = u.box;
  {
    ValidationReport rep = validate_decomposition(u, half_lattice(box));
    if (!rep.ok) throw lattice_error(errc::knead_failure, rep.detail);
  }
  const bool odd = box.cell_count() % 2 != 0;
  // Partner lookup: for even mn by the partner's top (= dual of our top);
  // for odd mn by the partner's second-to-top.
  std::map<Partition, size_t> by_key;
  for (size_t j = 0; j < u.chains.size(); ++j) {
    const Chain& c = u.chains[j];
    if (odd) {
      if (c.size() >= 2)
        by_key.emplace(c.elements[c.elements.size() - 2], j);
    } else {
      by_key.emplace(c.end(), j);
    }
  }
  ChainDecomposition out{box, DecompKind::sperner, {}};
  for (const Chain& c : u.chains) {
    auto it = by_key.find(dual(c.end(), box));
    if (it == by_key.end())
      throw lattice_error(errc::knead_failure,
                          "no gluing partner for chain top " +
                              to_string(c.end()));
    const Chain& partner = u.chains[it->second];
    Chain glued = c;
    // Append the partner's dual chain above rank d: skip its top (the
    // shared rank-d element, or for odd mn the dropped rank-(d-1)
    // minimum plus the shared element).
    int skip = odd ? 2 : 1;
    for (int i = partner.size() - 1 - skip; i >= 0; --i)
      glued.elements.push_back(dual(partner.elements[static_cast<size_t>(i)], box));
    out.chains.push_back(std::move(glued));
  }
  ValidationReport rep = validate_decomposition(out, enumerate_box(box));
  if (!rep.ok) throw lattice_error(errc::knead_failure, rep.detail);
  return out;
}

// One recursion step: u_left decomposes L^U(m,n-1), u_top decomposes
// L^U(m-1,n); the result decomposes L^U(m,n).
inline ChainDecomposition rec_ud(const ChainDecomposition& u_left,
                                 const ChainDecomposition& u_top) {
  const int m = u_left.box.rows;
  const int n = u_left.box.cols + 1;
  if (u_top.box.rows != m - 1 || u_top.box.cols != n)
    throw lattice_error(errc::recud_failure,
                        "box mismatch between the two inputs");
  const BoxShape box{m, n};
  const int d = box.half_rank();

  ChainDecomposition sperner_left = knead(u_left);
  std::vector<Chain> good, bad;
  for (const Chain& c : sperner_left.chains) {
    if (rank(c.end()) < d) {
      bad.push_back(c);
    } else {
      Chain cut;
      for (const Partition& p : c.elements)
        if (rank(p) <= d) cut.elements.push_back(p);
      good.push_back(std::move(cut));
    }
  }

  // Prefix a full first row onto the top decomposition and cut at d;
  // chains that start above d vanish.
  std::vector<Chain> candidates;
  std::map<Partition, size_t> start_of;
  for (const Chain& c : u_top.chains) {
    Chain pref;
    for (const Partition& p : c.elements) {
      std::vector<int> parts{n};
      parts.insert(parts.end(), p.parts.begin(), p.parts.end());
      Partition q{std::move(parts)};
      if (rank(q) <= d) pref.elements.push_back(std::move(q));
    }
    if (!pref.elements.empty()) {
      start_of.emplace(pref.start(), candidates.size());
      candidates.push_back(std::move(pref));
    }
  }

  std::vector<bool> used(candidates.size(), false);
  for (Chain& b : bad) {
    Partition want = b.end();
    want.parts.front() += 1;
    auto it = start_of.find(want);
    if (it == start_of.end() || used[it->second])
      throw lattice_error(errc::recud_failure,
                          "bad chain ends at " + to_string(b.end()) +
                              " and no candidate starts at " + to_string(want));
    used[it->second] = true;
    const Chain& cand = candidates[it->second];
    b.elements.insert(b.elements.end(), cand.elements.begin(),
                      cand.elements.end());
  }

  ChainDecomposition out{box, DecompKind::u_decomposition, {}};
  out.chains = std::move(good);
  for (Chain& b : bad) out.chains.push_back(std::move(b));
  for (size_t i = 0; i < candidates.size(); ++i)
    if (!used[i]) out.chains.push_back(std::move(candidates[i]));
  ValidationReport rep = validate_decomposition(out, half_lattice(box));
  if (!rep.ok) throw lattice_error(errc::recud_failure, rep.detail);
  return out;
}

// Starting-set recursion.  E' collects duals of the previous starts that
// sit below rank d_{m,n}, shifted one cell in the first row; they must
// all be absorbed by the prefixed starts S (members of rank > d_{m,n}
// correspond to candidate chains emptied by the cut and are dropped).
struct RecSmnResult {
  bool ok = false;
  std::set<Partition> value;
  Partition offending;  // the E' member missing from S, when !ok
};

inline RecSmnResult rec_smn(const std::set<Partition>& s_left,
                            const std::set<Partition>& s_top,
                            const BoxShape& box) {
  const int m = box.rows, n = box.cols;
  const int d = box.half_rank();
  const BoxShape left_box{m, n - 1};
  std::set<Partition> eprime;
  for (const Partition& p : s_left) {
    Partition q = dual(p, left_box);
    if (rank(q) < d) {
      q.parts.front() += 1;
      eprime.insert(std::move(q));
    }
  }
  std::set<Partition> s;
  for (const Partition& p : s_top) {
    std::vector<int> parts{n};
    parts.insert(parts.end(), p.parts.begin(), p.parts.end());
    Partition q{std::move(parts)};
    if (rank(q) <= d) s.insert(std::move(q));
  }
  RecSmnResult res;
  for (const Partition& e : eprime)
    if (!s.count(e)) {
      res.offending = e;
      return res;
    }
  res.ok = true;
  res.value = s_left;
  for (const Partition& p : s) res.value.insert(p);
  for (const Partition& e : eprime) res.value.erase(e);
  return res;
}

inline std::set<Partition> s2_formula(int n) {
  std::set<Partition> out;
  for (int k = 0; 2 * k <= n; ++k)
    out.insert(Partition({2 * k, 0}));
  return out;
}

// Iterates rec_smn from the one-row base S_{1,n} = {(0)} up to S_{m,n}.
inline RecSmnResult smn_set(int m, int n) {
  std::vector<std::set<Partition>> prev_row(static_cast<size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) prev_row[static_cast<size_t>(j)] = {Partition({0})};
  RecSmnResult res;
  res.ok = true;
  res.value = prev_row[static_cast<size_t>(n)];
  for (int mm = 2; mm <= m; ++mm) {
    std::vector<std::set<Partition>> row(static_cast<size_t>(n) + 1);
    row[0] = {Partition(std::vector<int>(static_cast<size_t>(mm), 0))};
    for (int nn = 1; nn <= n; ++nn) {
      RecSmnResult step = rec_smn(row[static_cast<size_t>(nn - 1)],
                                  prev_row[static_cast<size_t>(nn)],
                                  BoxShape{mm, nn});
      if (!step.ok) return step;
      row[static_cast<size_t>(nn)] = std::move(step.value);
    }
    prev_row = std::move(row);
    res.value = prev_row[static_cast<size_t>(n)];
  }
  return res;
}

// U-decomposition of L^U(3,n) read off the phi chains: cut each at
// d_{3,n}.
inline ChainDecomposition udec_from_phi(int n) {
  BoxShape box{3, n};
  const int d = box.half_rank();
  ChainDecomposition cd = chains_from_phi(n);
  ChainDecomposition out{box, DecompKind::u_decomposition, {}};
  for (const Chain& c : cd.chains) {
    Chain cut;
    for (const Partition& p : c.elements)
      if (rank(p) <= d) cut.elements.push_back(p);
    out.chains.push_back(std::move(cut));
  }
  ValidationReport rep = validate_decomposition(out, half_lattice(box));
  if (!rep.ok) throw lattice_error(errc::decomposition_invalid, rep.detail);
  return out;
}

// Recursive driver.  One-row and one-column boxes are single chains; the
// four-row recursion takes its top input from the phi chains.
inline ChainDecomposition u_decomposition(int m, int n) {
  auto base_chain = [](const BoxShape& box) {
    ChainDecomposition cd{box, DecompKind::u_decomposition, {}};
    Chain c;
    for (const Partition& p : half_lattice(box)) c.elements.push_back(p);
    cd.chains.push_back(std::move(c));
    return cd;
  };
  std::map<std::pair<int, int>, ChainDecomposition> memo;
  auto rec = [&](auto&& self, int mm, int nn) -> const ChainDecomposition& {
    auto key = std::make_pair(mm, nn);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    ChainDecomposition cd;
    if (mm == 1 || nn == 1) {
      cd = base_chain(BoxShape{mm, nn});
    } else if (mm == 4) {
      cd = rec_ud(self(self, mm, nn - 1), udec_from_phi(nn));
    } else {
      cd = rec_ud(self(self, mm, nn - 1), self(self, mm - 1, nn));
    }
    return memo.emplace(key, std::move(cd)).first->second;
  };
  return rec(rec, m, n);
}

}  // namespace boxlat
