#include <doctest.h>

#include <set>

#include "nmsflow/classifier.hpp"
#include "nmsflow/errors.hpp"
#include "nmsflow/expr.hpp"

using namespace nmsflow;

namespace {

std::size_t error_position(const std::string& text) {
  try {
    parse_manifold(text);
  } catch (const ParseError& e) {
    return e.position();
  }
  return std::string::npos;
}

}  // namespace

TEST_CASE("parse_manifold examples") {
  CHECK(parse_manifold("L(7,9)") == Manifold(Lens{{7, 2}}));
  CHECK(parse_manifold("S3 # RP3") == Manifold(RP3{}));
  CHECK(parse_manifold("SFS(S2; (2,1),(3,1),(5,2))") ==
        Manifold(SeifertOverS2{{{{2, 1}, {3, 1}, {5, 2}}}}));
  CHECK(parse_manifold("  L ( -7 , 9 )#RP3 ") == sum_normalize({Lens{{7, 2}}, RP3{}}));
  CHECK(parse_manifold("S2xS1") == Manifold(S2xS1{}));
  CHECK(parse_manifold("SFS(S2;(2,3))") == Manifold(SeifertOverS2{{{{1, 1}, {2, 1}}}}));
  CHECK(parse_manifold("L(1,0) # S3") == Manifold(Sphere{}));
}

TEST_CASE("parse errors carry positions") {
  CHECK(error_position("L(7,") == 4);
  CHECK(error_position("RP3 #") == 5);
  CHECK(error_position("T2") == 0);
  CHECK(error_position("L(7,2) RP3") == 7);
  CHECK(error_position("SFS(T2; (2,1))") == 4);
  CHECK(error_position("L(99999999999999999999,1)") == 2);
  CHECK(error_position("") == 0);
}

TEST_CASE("invalid parameters name the rule") {
  try {
    parse_manifold("L(4,2)");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.rule() == "invalid-lens-parameters");
  }
  CHECK_THROWS_AS(parse_manifold("SFS(S2; (4,2))"), InvalidFiber);
}

TEST_CASE("render") {
  CHECK(render(sum_normalize({Lens{{5, 2}}, RP3{}})) == "L(5,2) # RP3");
  CHECK(render(sum_normalize({RP3{}, S2xS1{}})) == "S2xS1 # RP3");
  CHECK(render(seifert_space({{{3, 2}, {2, 1}, {2, 1}}})) == "SFS(S2; (2,1),(2,1),(3,2))");
  CHECK(render(seifert_space({{{5, -2}}})) == "SFS(S2; (1,-1),(5,3))");
}

TEST_CASE("render/parse round trip on classifier outputs up to bound 8") {
  std::set<Manifold> forms;
  for (const auto& inv : valid_invariants(8)) forms.insert(classify(inv).manifold);
  for (const auto& m : forms) REQUIRE(parse_manifold(render(m)) == m);
  CHECK(forms.size() > 50);
}
