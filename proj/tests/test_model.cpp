#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "socrank/model.hpp"

using namespace socrank;

namespace {
Roster xyzw() { return Roster::of({"x", "y", "z", "w"}); }
}  // namespace

TEST_CASE("roster indexing and tie-break order") {
  Roster r = xyzw();
  CHECK(r.size() == 4);
  CHECK(r.index("x") == 0);
  CHECK(r.index("w") == 3);
  CHECK(r.index("q") == -1);
  CHECK(r.tiebreak_before(0, 1));
  CHECK_FALSE(r.tiebreak_before(3, 0));

  Roster custom = Roster::of({"x", "y", "z"}, {"z", "x", "y"});
  CHECK(custom.index("x") == 0);
  CHECK(custom.priority(custom.index("z")) == 0);
  CHECK(custom.tiebreak_before(custom.index("z"), custom.index("x")));
}

TEST_CASE("coalitions are nonempty bitsets") {
  Roster r = xyzw();
  Coalition s = Coalition::of(r, {"x", "z"});
  CHECK(s.size() == 2);
  CHECK(s.contains(0));
  CHECK_FALSE(s.contains(1));
  CHECK(s.members() == std::vector<int>{0, 2});
  CHECK_THROWS_AS(Coalition(0), std::invalid_argument);
}

TEST_CASE("canonical order puts the top singleton first") {
  Roster r = xyzw();
  CHECK(canonical_key(r, Coalition::of(r, {"x"})) <
        canonical_key(r, Coalition::of(r, {"y"})));
  CHECK(canonical_key(r, Coalition::of(r, {"x", "y"})) <
        canonical_key(r, Coalition::of(r, {"z"})));
  // A custom tie-break order rearranges the keys accordingly.
  Roster zfirst = Roster::of({"x", "y", "z", "w"}, {"z", "x", "y", "w"});
  CHECK(canonical_key(zfirst, Coalition::of(zfirst, {"z"})) <
        canonical_key(zfirst, Coalition::of(zfirst, {"x"})));
}

TEST_CASE("ranking structure and class lookup") {
  Roster r = xyzw();
  CoalitionalRanking ranking{{{Coalition::of(r, {"x"}), Coalition::of(r, {"y"})},
                             {Coalition::of(r, {"z"})}}};
  CHECK(ranking.class_count() == 2);
  CHECK(ranking.domain_size() == 3);
  CHECK(ranking.class_index(Coalition::of(r, {"y"})) == 1);
  CHECK(ranking.class_index(Coalition::of(r, {"z"})) == 2);
  CHECK_FALSE(ranking.class_index(Coalition::of(r, {"w"})).has_value());
  CHECK(CoalitionalRanking{}.empty_domain());
  CHECK(CoalitionalRanking{}.domain_size() == 0);
}

TEST_CASE("validation rejects duplicates and foreign members") {
  Roster r = xyzw();
  CoalitionalRanking dup{{{Coalition::of(r, {"x"})}, {Coalition::of(r, {"x"})}}};
  CHECK(validate(r, dup).error == ValidationError::DuplicateCoalition);

  CoalitionalRanking foreign{{{Coalition(1u << 5)}}};
  CHECK(validate(r, foreign).error == ValidationError::ForeignMember);

  CoalitionalRanking ok{{{Coalition::of(r, {"x", "w"})}}};
  CHECK(validate(r, ok).ok());
  CHECK(validate(r, CoalitionalRanking{}).ok());
}

TEST_CASE("restriction drops empty classes, reversal flips order") {
  Roster r = xyzw();
  Coalition x = Coalition::of(r, {"x"}), y = Coalition::of(r, {"y"}),
            z = Coalition::of(r, {"z"});
  CoalitionalRanking ranking{{{x}, {y}, {z}}};
  std::vector<Coalition> keep = {x, z};
  CoalitionalRanking cut = ranking.restricted(keep);
  CHECK(cut == CoalitionalRanking{{{x}, {z}}});
  CHECK(ranking.reversed() == CoalitionalRanking{{{z}, {y}, {x}}});
  CHECK(ranking.reversed().reversed() == ranking);
}

TEST_CASE("verdict flip and names") {
  CHECK(flip(Verdict::P) == Verdict::InverseP);
  CHECK(flip(Verdict::I) == Verdict::I);
  CHECK(verdict_name(Verdict::P) == "P");
  CHECK(verdict_name(Verdict::InverseP) == "P^-1");
  CHECK(verdict_name(Verdict::I) == "I");
}

TEST_CASE("social relation partitions and cycle detection") {
  // x > {y,z}
  SocialRelation rel = SocialRelation::from_compare(3, [](int a, int b) {
    if (a == 0) return Verdict::P;
    (void)b;
    return Verdict::I;
  });
  CHECK(rel.is_weak_order());
  auto parts = rel.as_ordered_partition();
  REQUIRE(parts.has_value());
  CHECK(*parts == std::vector<std::vector<int>>{{0}, {1, 2}});

  // x beats y beats z beats x: complete but cyclic.
  SocialRelation cyc = SocialRelation::from_compare(3, [](int a, int b) {
    if (a == 0 && b == 2) return Verdict::InverseP;
    return Verdict::P;
  });
  CHECK_FALSE(cyc.is_weak_order());
  CHECK_FALSE(cyc.as_ordered_partition().has_value());
}
