#include <catch2/catch_amalgamated.hpp>

#include <functional>
#include <map>
#include <set>

#include "boxlat/chains.hpp"
#include "boxlat/order_matching.hpp"

using namespace boxlat;

namespace {

Partition pt(std::vector<int> v) { return Partition(std::move(v)); }

errc thrown_code(std::function<void()> fn) {
  try {
    fn();
  } catch (const lattice_error& e) {
    return e.code();
  }
  throw std::logic_error("expected a lattice_error");
}

}  // namespace

TEST_CASE("boundary sets at fixed points") {
  BoundarySets b2 = boundary_sets(2);
  CHECK(b2.starts == std::set<Partition>{pt({0, 0, 0}), pt({2, 0, 0})});
  CHECK(b2.ends == std::set<Partition>{pt({2, 2, 0}), pt({2, 2, 2})});
  BoundarySets b8 = boundary_sets(8);
  CHECK(b8.starts.size() == 13);
  CHECK(b8.ends.size() == 13);
  CHECK(b8.starts.count(pt({8, 4, 0})) == 1);
  CHECK(b8.ends.count(pt({8, 4, 0})) == 1);
}

TEST_CASE("membership tests match the generated sets and dualize") {
  for (int n = 0; n <= 10; ++n) {
    BoxShape box{3, n};
    BoundarySets bs = boundary_sets(n);
    for (const Partition& p : enumerate_box(box)) {
      CHECK(in_S3(p, n) == (bs.starts.count(p) == 1));
      CHECK(in_E3(p, n) == (bs.ends.count(p) == 1));
      CHECK(in_E3(p, n) == in_S3(dual(p, box), n));
    }
  }
}

TEST_CASE("phi at fixed points") {
  CHECK(phi(pt({0, 0, 0}), 8) == pt({1, 0, 0}));
  CHECK(phi(pt({1, 1, 0}), 8) == pt({1, 1, 1}));
  CHECK(phi(pt({2, 2, 1}), 2) == pt({2, 2, 2}));
  CHECK(phi(pt({2, 1, 0}), 8) == pt({2, 2, 0}));
  CHECK(thrown_code([] { phi(pt({8, 4, 0}), 8); }) == errc::not_in_domain);
  CHECK(thrown_code([] { phi(pt({9, 0, 0}), 8); }) == errc::out_of_box);
  CHECK(thrown_code([] { phi(pt({1, 0}), 8); }) == errc::wrong_length);
}

TEST_CASE("phi is a covering bijection onto the complement of the starts") {
  for (int n = 0; n <= 12; ++n) {
    BoxShape box{3, n};
    std::set<Partition> images;
    long long domain = 0, codomain = 0;
    for (const Partition& p : enumerate_box(box)) {
      if (!in_S3(p, n)) ++codomain;
      if (in_E3(p, n)) continue;
      ++domain;
      Partition q = phi(p, n);
      CHECK(is_cover_step(p, q));
      CHECK(!in_S3(q, n));
      CHECK(images.insert(q).second);
    }
    CHECK(static_cast<long long>(images.size()) == domain);
    CHECK(domain == codomain);
  }
}

TEST_CASE("case analysis is exhaustive on valid triples") {
  // The fourth combination (even row sum, shifted partition in the end
  // set) must never come up; f_classify throws if it does.
  std::map<FClass, long long> seen;
  for (int n = 0; n <= 12; ++n)
    for (const Partition& p : enumerate_box(BoxShape{3, n}))
      if (p[0] == n) ++seen[f_classify(p)];
  CHECK(seen.size() == 4);
  CHECK(f_classify(pt({1, 0, 0})) == FClass::F2e);
  CHECK(f_classify(pt({1, 1, 0})) == FClass::F3o);
  CHECK(f_classify(pt({2, 1, 0})) == FClass::F2o);
  CHECK(f_classify(pt({0, 0, 0})) == FClass::F1);
}

TEST_CASE("star phi is an involution and phi inverts") {
  CHECK(star_phi(pt({0, 0, 0}), 2) == pt({2, 2, 1}));
  CHECK(star_phi(pt({2, 1, 0}), 8) == pt({8, 6, 6}));
  CHECK(phi_inverse(pt({1, 0, 0}), 8) == pt({0, 0, 0}));
  CHECK(thrown_code([] { phi_inverse(pt({2, 0, 0}), 8); }) ==
        errc::not_in_range);
  for (int n = 0; n <= 10; ++n) {
    for (const Partition& p : enumerate_box(BoxShape{3, n})) {
      if (!in_E3(p, n)) CHECK(star_phi(star_phi(p, n), n) == p);
      if (!in_E3(p, n)) CHECK(phi_inverse(phi(p, n), n) == p);
      if (!in_S3(p, n)) CHECK(phi(phi_inverse(p, n), n) == p);
    }
  }
}
