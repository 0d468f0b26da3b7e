#include "doctest.h"
#include "legfront/front.hpp"

using namespace legfront;

namespace {

FrontWord fw(const std::string& s) { return parse_front(s); }

}  // namespace

TEST_CASE("parse and serialize round trip") {
  const std::string text = "L1 L3 X2 X2 X2 R1 R1";
  FrontWord w = fw(text);
  CHECK(w.size() == 7);
  CHECK(w.events[0] == Event{EventKind::LeftCusp, 1});
  CHECK(w.events[2] == Event{EventKind::Crossing, 2});
  CHECK(w.events[6] == Event{EventKind::RightCusp, 1});
  CHECK(serialize_front(w) == text);
}

TEST_CASE("parse accepts comments and tight spacing") {
  FrontWord w = fw("L1  # birth\nX1 R1");
  CHECK(serialize_front(w) == "L1 X1 R1");
  CHECK(fw("L1X1R1") == w);
  CHECK(fw("  \n\t ").events.empty());
}

TEST_CASE("parse rejects malformed tokens") {
  CHECK_THROWS_AS(fw("Q1"), FrontError);
  CHECK_THROWS_AS(fw("L"), FrontError);
  CHECK_THROWS_AS(fw("L0"), FrontError);
  CHECK_THROWS_AS(fw("L01"), FrontError);
  CHECK_THROWS_AS(fw("L1 R1 2"), FrontError);
  try {
    fw("L1 Z2");
  } catch (const FrontError& e) {
    CHECK(e.where() == 3);
  }
}

TEST_CASE("validation catches position and closure violations") {
  CHECK(validate_front(fw("L1 R1")).ok());
  CHECK(validate_front(fw("L1 X1 R1")).ok());

  ValidationReport r = validate_front(fw("L1 X2 R1"));  // X2 needs 3 strands
  REQUIRE_FALSE(r.ok());
  CHECK(r.violations[0].event_index == 1);

  r = validate_front(fw("L1 L1"));  // never closes
  REQUIRE_FALSE(r.ok());
  CHECK(r.violations[0].event_index == kWholeWord);

  r = validate_front(fw("L3 R1"));  // birth above the existing strands
  REQUIRE_FALSE(r.ok());
  CHECK(r.violations[0].event_index == 0);

  CHECK_FALSE(validate_front(FrontWord{}).ok());
}

TEST_CASE("validation flags multi component fronts") {
  // Two nested circles wired through three crossings of the middle pair.
  ValidationReport r = validate_front(fw("L1 L2 X2 X2 X2 R2 R1"));
  REQUIRE_FALSE(r.ok());
  CHECK(r.violations[0].event_index == kWholeWord);
  CHECK(compute_geometry(fw("L1 L2 X2 X2 X2 R2 R1")).num_components == 2);
}

TEST_CASE("geometry of the plain unknot") {
  FrontGeometry g = compute_geometry(fw("L1 R1"));
  CHECK(g.num_segments == 2);
  CHECK(g.num_components == 1);
  CHECK(g.slices.size() == 3);
  CHECK(g.slices[1] == std::vector<int>{0, 1});
  CHECK(max_width(fw("L1 R1")) == 2);
}

TEST_CASE("geometry of the right trefoil front") {
  FrontWord w = fw("L1 L3 X2 X2 X2 R1 R1");
  FrontGeometry g = compute_geometry(w);
  CHECK(g.num_segments == 10);
  CHECK(g.num_components == 1);
  CHECK(max_width(w) == 4);

  // The middle crossings cut only the two crossing strands; the outer
  // strands run uncut from their cusp to their cusp.
  CHECK(g.at_event[2].a == 1);
  CHECK(g.at_event[2].b == 2);
  CHECK(g.slices[5] == std::vector<int>{0, 8, 9, 3});
}

TEST_CASE("unknot invariants") {
  ClassicalInvariants inv = classical_invariants(fw("L1 R1"));
  CHECK(inv.tb == -1);
  CHECK(inv.rot == 0);
  CHECK(inv.writhe == 0);
  CHECK(inv.up_cusps == 1);
  CHECK(inv.down_cusps == 1);
  CHECK(inv.components == 1);
}

TEST_CASE("one crossing curl is a stabilized unknot") {
  // A 2-cusp 1-crossing front is an unknot, and tb <= -1 forces the curl
  // crossing to count -1: the word is a destabilization target, not a
  // maximal representative.
  ClassicalInvariants inv = classical_invariants(fw("L1 X1 R1"));
  CHECK(inv.writhe == -1);
  CHECK(inv.tb == -2);
  CHECK((inv.rot == 1 || inv.rot == -1));
  CHECK(inv.components == 1);
}

TEST_CASE("right trefoil invariants pin the sign convention") {
  // All three crossings are traversed with both strands leftward, so each
  // counts +1 and tb = 3 - 2 = 1, the maximal value for the right trefoil.
  ClassicalInvariants inv = classical_invariants(fw("L1 L3 X2 X2 X2 R1 R1"));
  CHECK(inv.writhe == 3);
  CHECK(inv.tb == 1);
  CHECK(inv.rot == 0);
  CHECK(inv.up_cusps == 2);
  CHECK(inv.down_cusps == 2);
  CHECK(inv.components == 1);
}

TEST_CASE("tb plus rot is odd on knots") {
  for (const char* s :
       {"L1 R1", "L1 X1 R1", "L1 L3 X2 X2 X2 R1 R1", "L1 L1 X2 X2 X2 R3 R1",
        "L1 L2 R2 R1", "L1 L1 R1 R1", "L1 L2 X1 X3 R2 R1"}) {
    FrontWord w = fw(s);
    if (compute_geometry(w).num_components != 1) continue;
    ClassicalInvariants inv = classical_invariants(w);
    CHECK(((inv.tb + inv.rot) % 2 + 2) % 2 == 1);
    CHECK(inv.tb == inv.writhe - inv.cusps() / 2);
    CHECK(2 * inv.rot == inv.down_cusps - inv.up_cusps);
  }
}

TEST_CASE("orientation reversal negates rot and keeps tb") {
  for (const char* s : {"L1 R1", "L1 L3 X2 X2 X2 R1 R1", "L1 L2 R2 R1"}) {
    OrientedFront f = orient_front(fw(s));
    ClassicalInvariants a = invariants_of(f);
    ClassicalInvariants b = invariants_of(reverse_orientation(f));
    CHECK(a.tb == b.tb);
    CHECK(a.writhe == b.writhe);
    CHECK(a.rot == -b.rot);
  }
}

TEST_CASE("mirror reflection preserves the classical invariants") {
  for (const char* s :
       {"L1 R1", "L1 X1 R1", "L1 L3 X2 X2 X2 R1 R1", "L1 L2 R2 R1",
        "L1 L1 X2 X2 X2 R3 R1"}) {
    FrontWord w = fw(s);
    FrontWord m = mirror_x(w);
    CHECK(structurally_valid(m));
    CHECK(mirror_x(m) == w);
    ClassicalInvariants a = classical_invariants(w);
    ClassicalInvariants b = classical_invariants(m);
    CHECK(a.tb == b.tb);
    CHECK(a.rot == b.rot);
    CHECK(a.writhe == b.writhe);
    CHECK(a.components == b.components);
  }
}

TEST_CASE("connected sum with the unknot is the identity splice") {
  FrontWord tref = fw("L1 L3 X2 X2 X2 R1 R1");
  FrontWord u = fw("L1 R1");
  CHECK(connect_sum(u, tref) == tref);
  ClassicalInvariants inv = classical_invariants(connect_sum(tref, u));
  CHECK(inv.tb == 1);
  CHECK(inv.rot == 0);
}

TEST_CASE("connected sum adds tb with offset one") {
  FrontWord tref = fw("L1 L3 X2 X2 X2 R1 R1");
  FrontWord sum = connect_sum(tref, tref);
  ClassicalInvariants inv = classical_invariants(sum);
  CHECK(inv.tb == 3);  // 1 + 1 + 1
  CHECK(inv.rot == 0);
  CHECK(inv.components == 1);

  OrientedFront osum = connect_sum(orient_front(tref), orient_front(tref));
  ClassicalInvariants oinv = invariants_of(osum);
  CHECK(oinv.tb == 3);
  CHECK(oinv.rot == 0);
}

TEST_CASE("geometry rejects invalid words") {
  CHECK_THROWS_AS(compute_geometry(fw("L1 L1")), FrontError);
  CHECK_THROWS_AS(compute_geometry(fw("X1 L1 R1")), FrontError);
  CHECK_THROWS_AS(compute_geometry(FrontWord{}), FrontError);
}
