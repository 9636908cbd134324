#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "boxlat/greedy.hpp"
#include "boxlat/oracle.hpp"
#include "boxlat/partition.hpp"
#include "boxlat/rank_profile.hpp"

using namespace boxlat;

namespace {

Partition pt(std::vector<int> v) { return Partition(std::move(v)); }

// Exhaustive maximum matching by backtracking over the lower level,
// independent of the augmenting-path search.
int brute_force_max_matching(const BoxShape& box, int r) {
  std::vector<Partition> lower = enumerate_level(box, r);
  std::vector<Partition> upper = enumerate_level(box, r + 1);
  std::map<Partition, int> upper_index;
  for (size_t i = 0; i < upper.size(); ++i)
    upper_index.emplace(upper[i], static_cast<int>(i));
  std::vector<std::vector<int>> adj(lower.size());
  for (size_t i = 0; i < lower.size(); ++i)
    for (const Partition& q : covers(lower[i], box))
      adj[i].push_back(upper_index.at(q));
  std::vector<char> used(upper.size(), 0);
  auto best = [&](auto&& self, size_t i) -> int {
    if (i == adj.size()) return 0;
    int b = self(self, i + 1);  // leave lower[i] unmatched
    for (int j : adj[i]) {
      if (used[static_cast<size_t>(j)]) continue;
      used[static_cast<size_t>(j)] = 1;
      b = std::max(b, 1 + self(self, i + 1));
      used[static_cast<size_t>(j)] = 0;
    }
    return b;
  };
  return best(best, 0);
}

}  // namespace

TEST_CASE("level matching oracle on fixed levels") {
  BoxShape box{3, 8};
  LevelCertificate bottom = max_level_matching(box, 0);
  CHECK(bottom.lower_size == 1);
  CHECK(bottom.upper_size == 1);
  CHECK(bottom.max_matching == 1);
  CHECK(bottom.full);

  LevelCertificate near_middle = max_level_matching(box, 11);
  int p11 = rank_profile(box).at(11).convert_to<int>();
  CHECK(near_middle.lower_size == p11);
  CHECK(near_middle.max_matching == p11);
  CHECK(near_middle.full);
}

TEST_CASE("level matching oracle agrees with exhaustive search") {
  for (BoxShape box : {BoxShape{2, 3}, BoxShape{3, 3}, BoxShape{2, 5},
                       BoxShape{4, 2}}) {
    for (int r = 0; r < box.cell_count(); ++r) {
      LevelCertificate cert = max_level_matching(box, r);
      CHECK(cert.max_matching == brute_force_max_matching(box, r));
    }
  }
}

TEST_CASE("lower half levels admit full matchings") {
  BoxShape box{5, 5};
  for (int r = 0; r < box.middle_rank(); ++r)
    CHECK(max_level_matching(box, r).full);
}

TEST_CASE("oracle rejects out-of-range levels") {
  CHECK_THROWS_AS(max_level_matching(BoxShape{2, 2}, 4), lattice_error);
  CHECK_THROWS_AS(max_level_matching(BoxShape{2, 2}, -1), lattice_error);
}

TEST_CASE("greedy matchings certify as maximum") {
  for (BoxShape box : {BoxShape{3, 8}, BoxShape{4, 6}}) {
    MatchingCertificate cert = certify_matching(ga_full(box));
    CHECK(cert.structurally_valid);
    CHECK(cert.all_levels_maximum);
    REQUIRE(cert.oracle.size() == static_cast<size_t>(box.cell_count()));
    for (size_t i = 0; i < cert.oracle.size(); ++i)
      CHECK(cert.matched[i] == cert.oracle[i].max_matching);
  }
}

TEST_CASE("certification catches a doubly used target") {
  OrderMatching om;
  om.box = BoxShape{3, 3};
  LevelMatching lm;
  lm.from_rank = 2;
  lm.direction = MatchDirection::up;
  lm.pairs.emplace(pt({1, 1, 0}), pt({2, 1, 0}));
  lm.pairs.emplace(pt({2, 0, 0}), pt({2, 1, 0}));
  om.levels.push_back(lm);
  MatchingCertificate cert = certify_matching(om);
  CHECK_FALSE(cert.structurally_valid);
  CHECK(cert.detail.find("matched twice") != std::string::npos);
}

TEST_CASE("certification catches missing sources") {
  OrderMatching om;
  om.box = BoxShape{3, 3};
  LevelMatching lm;
  lm.from_rank = 0;
  om.levels.push_back(lm);
  MatchingCertificate cert = certify_matching(om);
  CHECK_FALSE(cert.structurally_valid);
  CHECK(cert.detail.find("expected") != std::string::npos);
}

TEST_CASE("certification catches a non-cover pair") {
  OrderMatching om;
  om.box = BoxShape{3, 3};
  LevelMatching lm;
  lm.from_rank = 1;
  lm.pairs.emplace(pt({1, 0, 0}), pt({2, 1, 0}));
  om.levels.push_back(lm);
  MatchingCertificate cert = certify_matching(om);
  CHECK_FALSE(cert.structurally_valid);
  CHECK(cert.detail.find("cover step") != std::string::npos);
}

TEST_CASE("profile certificates on fixed boxes") {
  ProfileCertificate three = certify_profile(BoxShape{3, 8});
  CHECK(three.symmetric);
  CHECK(three.unimodal);
  CHECK(three.width == 13);
  CHECK(three.decomposition_checked);
  CHECK(three.sperner_verified);
  CHECK(three.chain_count == 13);

  ProfileCertificate four = certify_profile(BoxShape{4, 4});
  CHECK(four.width == 8);
  CHECK(four.sperner_verified);
  CHECK(four.chain_count == 8);

  ProfileCertificate row = certify_profile(BoxShape{1, 7});
  CHECK(row.width == 1);
  CHECK(row.sperner_verified);
  CHECK(row.chain_count == 1);

  ProfileCertificate five = certify_profile(BoxShape{5, 6});
  CHECK(five.symmetric);
  CHECK(five.unimodal);
  CHECK_FALSE(five.decomposition_checked);
  CHECK_FALSE(five.sperner_verified);
}
