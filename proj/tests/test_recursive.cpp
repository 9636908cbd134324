#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <vector>

#include "boxlat/chains.hpp"
#include "boxlat/order_matching.hpp"
#include "boxlat/rank_profile.hpp"
#include "boxlat/recursive.hpp"

using namespace boxlat;

namespace {

Partition pt(std::vector<int> v) { return Partition(std::move(v)); }

Chain ch(std::vector<Partition> ps) {
  Chain c;
  c.elements = std::move(ps);
  return c;
}

}  // namespace

TEST_CASE("half lattice collects the ranks up to d") {
  std::vector<Partition> half = half_lattice(BoxShape{3, 3});
  CHECK(half.size() == 13);
  for (const Partition& p : half) CHECK(rank(p) <= 5);
}

TEST_CASE("kneading a two-by-two half decomposition") {
  BoxShape box{2, 2};
  ChainDecomposition u{box,
                       DecompKind::u_decomposition,
                       {ch({pt({0, 0}), pt({1, 0}), pt({1, 1})}),
                        ch({pt({2, 0})})}};
  ChainDecomposition glued = knead(u);
  REQUIRE(glued.chains.size() == 2);
  CHECK(glued.chains[0].elements ==
        std::vector<Partition>{pt({0, 0}), pt({1, 0}), pt({1, 1}), pt({2, 1}),
                               pt({2, 2})});
  CHECK(glued.chains[1].elements == std::vector<Partition>{pt({2, 0})});
  CHECK(validate_decomposition(glued, enumerate_box(box)).ok);
}

TEST_CASE("kneading the one-cell box glues a chain to itself") {
  BoxShape box{1, 1};
  ChainDecomposition u{box, DecompKind::u_decomposition,
                       {ch({pt({0}), pt({1})})}};
  ChainDecomposition glued = knead(u);
  REQUIRE(glued.chains.size() == 1);
  CHECK(glued.chains[0].elements == std::vector<Partition>{pt({0}), pt({1})});
}

TEST_CASE("kneading rejects inputs that are not half decompositions") {
  BoxShape box{2, 2};
  ChainDecomposition low{box, DecompKind::u_decomposition,
                         {ch({pt({0, 0}), pt({1, 0})}), ch({pt({1, 1})}),
                          ch({pt({2, 0})})}};
  try {
    knead(low);
    FAIL("expected a knead failure");
  } catch (const lattice_error& e) {
    CHECK(e.code() == errc::knead_failure);
  }
}

TEST_CASE("recursion step rejects mismatched boxes") {
  ChainDecomposition left = u_decomposition(3, 3);
  ChainDecomposition top = u_decomposition(2, 3);
  try {
    rec_ud(left, top);
    FAIL("expected a recursion failure");
  } catch (const lattice_error& e) {
    CHECK(e.code() == errc::recud_failure);
  }
}

TEST_CASE("recursive half decompositions validate") {
  for (int n = 1; n <= 8; ++n) {
    ChainDecomposition u3 = u_decomposition(3, n);
    CHECK(u3.kind == DecompKind::u_decomposition);
    CHECK(validate_decomposition(u3, half_lattice(u3.box)).ok);
    BigInt width = rank_profile(u3.box).at(u3.box.half_rank());
    CHECK(BigInt(static_cast<long long>(u3.chains.size())) == width);
  }
  for (int n = 1; n <= 6; ++n) {
    ChainDecomposition u4 = u_decomposition(4, n);
    CHECK(validate_decomposition(u4, half_lattice(u4.box)).ok);
  }
}

TEST_CASE("kneaded half decompositions are sperner") {
  ChainDecomposition sp = knead(u_decomposition(3, 3));
  CHECK(sp.chains.size() == 3);
  CHECK(validate_decomposition(sp, enumerate_box(BoxShape{3, 3})).ok);
  for (BoxShape box : {BoxShape{2, 5}, BoxShape{3, 4}, BoxShape{4, 4}}) {
    ChainDecomposition glued = knead(u_decomposition(box.rows, box.cols));
    CHECK(validate_decomposition(glued, enumerate_box(box)).ok);
    BigInt width = rank_profile(box).at(box.middle_rank());
    CHECK(BigInt(static_cast<long long>(glued.chains.size())) == width);
    // Ends are the duals of the starts.
    std::set<Partition> want;
    for (const Partition& s : glued.starts()) want.insert(dual(s, box));
    CHECK(glued.ends() == want);
  }
}

TEST_CASE("phi chains cut at the half rank form a half decomposition") {
  for (int n = 1; n <= 8; ++n) {
    ChainDecomposition u = udec_from_phi(n);
    CHECK(validate_decomposition(u, half_lattice(u.box)).ok);
  }
}

TEST_CASE("two-row starting sets match the even-row formula") {
  CHECK(s2_formula(4) ==
        std::set<Partition>{pt({0, 0}), pt({2, 0}), pt({4, 0})});
  for (int n = 0; n <= 12; ++n) {
    RecSmnResult res = smn_set(2, n);
    REQUIRE(res.ok);
    CHECK(res.value == s2_formula(n));
  }
}

TEST_CASE("recursive starting sets match the known families") {
  for (int n = 0; n <= 12; ++n) {
    RecSmnResult s3 = smn_set(3, n);
    REQUIRE(s3.ok);
    CHECK(s3.value == boundary_sets(n).starts);
    RecSmnResult s4 = smn_set(4, n);
    REQUIRE(s4.ok);
    CHECK(s4.value == s4_starting_set(n));
  }
}

TEST_CASE("starting sets agree with the half decompositions") {
  for (int mn : {2, 3, 4}) {
    for (int n = 1; n <= (mn == 4 ? 6 : 8); ++n) {
      ChainDecomposition u = u_decomposition(mn, n);
      RecSmnResult s = smn_set(mn, n);
      REQUIRE(s.ok);
      CHECK(u.starts() == s.value);
    }
  }
}
