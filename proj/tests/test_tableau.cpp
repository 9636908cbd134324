#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "boxlat/chains.hpp"
#include "boxlat/tableau.hpp"

using namespace boxlat;

namespace {

Partition pt(std::vector<int> v) { return Partition(std::move(v)); }

}  // namespace

TEST_CASE("tableau of a short chain") {
  BoxShape box{3, 2};
  Chain c{{pt({2, 0, 0}), pt({2, 1, 0}), pt({2, 2, 0})}};
  ChainTableau t = tableau_of_chain(c, box);
  CHECK(t.base == pt({2, 0, 0}));
  CHECK(t.steps == std::vector<std::pair<int, int>>{{2, 1}, {2, 2}});
  CHECK(render_ascii(t) == "|##|##|\n| 1| 2|\n|  |  |\n");
}

TEST_CASE("tableau of a singleton chain is all base") {
  BoxShape box{3, 8};
  ChainTableau t = tableau_of_chain(Chain{{pt({8, 4, 0})}}, box);
  CHECK(t.last_label() == 0);
  CHECK(render_ascii(t) ==
        "|##|##|##|##|##|##|##|##|\n"
        "|##|##|##|##|  |  |  |  |\n"
        "|  |  |  |  |  |  |  |  |\n");
}

TEST_CASE("tableau json matches the documented shape") {
  BoxShape box{3, 8};
  ChainTableau t = tableau_of_chain(Chain{{pt({0, 0, 0}), pt({1, 0, 0})}}, box);
  nlohmann::ordered_json expect = {
      {"box", {3, 8}}, {"base", {0, 0, 0}}, {"labels", {{1, 1, 1}}}};
  CHECK(tableau_json(t) == expect);
  CHECK(tableau_json(t).dump() ==
        R"({"box":[3,8],"base":[0,0,0],"labels":[[1,1,1]]})");
}

TEST_CASE("labels wider than two digits stretch the cells") {
  BoxShape box{1, 120};
  Chain c;
  for (int r = 0; r <= box.cell_count(); ++r)
    c.elements.push_back(enumerate_level(box, r).front());
  std::string text = render_ascii(tableau_of_chain(c, box));
  CHECK(text.find("|  1|") != std::string::npos);
  CHECK(text.find("|120|") != std::string::npos);
}

TEST_CASE("non-chains are rejected") {
  BoxShape box{3, 4};
  CHECK_THROWS_AS(tableau_of_chain(Chain{}, box), lattice_error);
  CHECK_THROWS_AS(
      tableau_of_chain(Chain{{pt({0, 0, 0}), pt({1, 1, 0})}}, box),
      lattice_error);
}

TEST_CASE("svg rendering carries one group per tableau") {
  ChainDecomposition cd = chains_from_phi(2);
  std::vector<ChainTableau> ts;
  for (const Chain& c : cd.chains) ts.push_back(tableau_of_chain(c, cd.box));
  std::string svg = render_svg(ts);
  CHECK(svg.rfind("<svg xmlns=\"http://www.w3.org/2000/svg\"", 0) == 0);
  size_t groups = 0, fills = 0;
  for (size_t pos = 0; (pos = svg.find("<g ", pos)) != std::string::npos; ++pos)
    ++groups;
  for (size_t pos = 0; (pos = svg.find("#c0c0c0", pos)) != std::string::npos;
       ++pos)
    ++fills;
  CHECK(groups == ts.size());
  CHECK(fills == 2);  // the (2,0,0) base occupies two cells
}
