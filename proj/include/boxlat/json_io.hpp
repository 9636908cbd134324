#pragma once

// JSON serialization for CLI output.  Ordered maps keep key order stable
// so identical inputs produce byte-identical documents.

#include <string>

#include <json.hpp>

#include "boxlat/chains.hpp"
#include "boxlat/greedy.hpp"
#include "boxlat/oracle.hpp"
#include "boxlat/order_matching.hpp"
#include "boxlat/partition.hpp"
#include "boxlat/rank_profile.hpp"

namespace boxlat {

using ordered_json = nlohmann::ordered_json;

inline ordered_json partition_json(const Partition& p) {
  return ordered_json(p.parts);
}

template <typename Range>
inline ordered_json level_json(const Range& level) {
  ordered_json arr = ordered_json::array();
  for (const Partition& p : level) arr.push_back(partition_json(p));
  return arr;
}

inline ordered_json box_json(const BoxShape& box) {
  return ordered_json::array({box.rows, box.cols});
}

// Rank counts as decimal strings; they outgrow 64 bits quickly.
inline ordered_json profile_json(const RankProfile& prof) {
  ordered_json j;
  j["box"] = box_json(prof.box);
  ordered_json counts = ordered_json::array();
  for (const BigInt& c : prof.counts) counts.push_back(c.str());
  j["profile"] = counts;
  return j;
}

inline ordered_json boundary_json(const BoundarySets& b) {
  ordered_json j;
  j["n"] = b.n;
  j["starts"] = level_json(b.starts);
  j["ends"] = level_json(b.ends);
  return j;
}

inline ordered_json level_matching_json(const LevelMatching& lm) {
  ordered_json j;
  j["rank"] = lm.from_rank;
  j["complete"] = lm.complete();
  ordered_json pairs = ordered_json::array();
  for (const auto& [src, tgt] : lm.pairs)
    pairs.push_back(ordered_json::array({partition_json(src),
                                         partition_json(tgt)}));
  j["pairs"] = pairs;
  j["unmatched"] = level_json(lm.unmatched);
  return j;
}

inline ordered_json matching_json(const OrderMatching& om) {
  ordered_json j;
  j["box"] = box_json(om.box);
  ordered_json levels = ordered_json::array();
  for (const LevelMatching& lm : om.levels) levels.push_back(level_matching_json(lm));
  j["levels"] = levels;
  return j;
}

inline ordered_json chain_json(const Chain& c) {
  ordered_json j;
  j["start"] = partition_json(c.start());
  j["elements"] = level_json(c.elements);
  return j;
}

inline ordered_json decomposition_json(const ChainDecomposition& cd) {
  ordered_json j;
  j["box"] = box_json(cd.box);
  j["kind"] = decomp_kind_name(cd.kind);
  ordered_json chains = ordered_json::array();
  for (const Chain& c : cd.chains) chains.push_back(chain_json(c));
  j["chains"] = chains;
  return j;
}

inline ordered_json level_certificate_json(const BoxShape& box,
                                           const LevelCertificate& cert) {
  ordered_json j;
  j["box"] = box_json(box);
  j["rank"] = cert.from_rank;
  j["max"] = cert.max_matching;
  j["full"] = cert.full;
  return j;
}

inline ordered_json profile_certificate_json(const ProfileCertificate& cert) {
  ordered_json j;
  j["box"] = box_json(cert.box);
  j["symmetric"] = cert.symmetric;
  j["unimodal"] = cert.unimodal;
  j["width"] = cert.width.str();
  j["decomposition_checked"] = cert.decomposition_checked;
  if (cert.decomposition_checked) {
    j["chain_count"] = cert.chain_count;
    j["sperner_verified"] = cert.sperner_verified;
  }
  return j;
}

}  // namespace boxlat
