#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "edp/catalog.hpp"
#include "edp/error.hpp"
#include "edp/io.hpp"

#ifndef EDP_TEST_DATA
#define EDP_TEST_DATA "tests/data"
#endif

using namespace edp;

TEST_CASE("group refs") {
  const GroupPtr c = group_from_json(Json::parse(R"({"type":"cyclic","order":9})"));
  CHECK(c->order() == 9);
  CHECK(group_to_json(*c) == Json::parse(R"({"type":"cyclic","order":9})"));

  const GroupPtr k = group_from_json(
      Json::parse(R"({"type":"product","factors":[{"type":"cyclic","order":2},{"type":"cyclic","order":2}]})"));
  CHECK(k->order() == 4);
  for (Element x = 1; x < 4; ++x) CHECK(k->element_order(x) == 2);

  const GroupPtr t = group_from_json(group_to_json(*k));
  CHECK(t->order() == 4);
  for (Element a = 0; a < 4; ++a)
    for (Element b = 0; b < 4; ++b) CHECK(t->mul(a, b) == k->mul(a, b));

  CHECK_THROWS_AS(group_from_json(Json::parse(R"({"type":"dihedral","order":8})")), ValidationError);
  CHECK_THROWS_AS(group_from_json(Json::parse(R"({"type":"table","cayley":[[0,1],[0,1]]})")), ValidationError);
}

TEST_CASE("module round trip") {
  for (const auto& e : list_L_entries(3)) {
    const GaloisModule back = module_from_json(module_to_json(e.module));
    CHECK(back.free_rank() == e.module.free_rank());
    CHECK(back.actions() == e.module.actions());
  }
  const CatalogEntry z = build_twisted_cyclic(2, 3, {3, 5});
  const GaloisModule back = module_from_json(Json::parse(module_to_json(z.module).dump()));
  CHECK(back.torsion() == z.module.torsion());
  CHECK(back.actions() == z.module.actions());
}

TEST_CASE("torsion given out of order is sorted") {
  const Json j = Json::parse(R"({"group":{"type":"cyclic","order":2},"free_rank":0,"torsion":[4,2],
                                  "action":{"1":[["3","0"],["0","1"]]}})");
  const GaloisModule m = module_from_json(j);
  CHECK(m.torsion() == std::vector<Integer>{2, 4});
  // the Z/4 factor moved to the second coordinate and keeps its action
  CHECK(m.action(1)(1, 1) == 3);
  CHECK(m.action(1)(0, 0) == 1);
}

TEST_CASE("bad modules") {
  CHECK_THROWS_AS(module_from_json(Json::parse(R"({"group":{"type":"cyclic","order":2},"free_rank":1,
                                                    "action":{"1":[[2]]}})")),
                  ValidationError);
  CHECK_THROWS_AS(module_from_json(Json::parse(R"({"group":{"type":"cyclic","order":2},"free_rank":2,
                                                    "action":{"1":[[1,0]]}})")),
                  ValidationError);
  CHECK_THROWS_AS(module_from_json(Json::parse(R"({"free_rank":1})")), ValidationError);
  CHECK_THROWS_AS(module_from_json(Json::parse(R"({"group":{"type":"cyclic","order":2},"free_rank":1,
                                                    "action":{"1":[["x"]]}})")),
                  ValidationError);
  CHECK_THROWS_AS(module_from_json(Json::parse(R"({"group":{"type":"cyclic","order":2},"free_rank":1,
                                                    "action":{"5":[[1]]}})")),
                  ValidationError);
}

TEST_CASE("data files") {
  const std::string dir = EDP_TEST_DATA;
  CHECK(module_from_json(read_json_file(dir + "/M7_p3.json")).free_rank() == 6);
  CHECK(module_from_json(read_json_file(dir + "/klein_on_z8.json")).group().order() == 4);
  CHECK_THROWS_AS(read_json_file(dir + "/malformed.json"), ValidationError);
  CHECK_THROWS_AS(read_json_file(dir + "/does_not_exist.json"), ValidationError);

  const Presentation pr = presentation_from_json(read_json_file(dir + "/norm_one_index3.json"));
  CHECK(pr.group->order() == 9);
  REQUIRE(pr.orbits.size() == 1);
  CHECK(pr.orbits[0].index == 3);
  CHECK(pr.m == IntVector{1, 1, 1});
}

TEST_CASE("result json") {
  EdResult r;
  r.min_rank = 9;
  r.ed = 3;
  r.verified = true;
  const Json j = result_to_json(r);
  CHECK(j["min_rank"] == 9);
  CHECK(j["ed"] == 3);
  CHECK(j["verified"] == true);
  CHECK(j["certificate"]["summands"].is_array());
}
