#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "socrank/axioms.hpp"
#include "socrank/parse.hpp"

using namespace socrank;

namespace {

const Roster kXyz = Roster::of({"x", "y", "z"});

CoalitionalRanking r(const char* text) { return parse_ranking(kXyz, text); }

SearchBounds small() {
  SearchBounds b;
  b.roster_size = 3;
  b.max_domain = 3;
  return b;
}

}  // namespace

TEST_CASE("axiom names round-trip") {
  CHECK(all_axioms().size() == kAxiomCount);
  for (AxiomId id : all_axioms()) {
    auto back = axiom_from_name(axiom_name(id));
    REQUIRE(back.has_value());
    CHECK(*back == id);
  }
  CHECK(axiom_from_name("ip_ccon") == AxiomId::IP_CCON);
  CHECK(axiom_from_name("IP-CCON") == AxiomId::IP_CCON);
  CHECK_FALSE(axiom_from_name("nope").has_value());
}

TEST_CASE("consistency instances detect clause violations in both roles") {
  CoalitionalRanking a = r("{x,y}");
  CoalitionalRanking b = r("{x}");
  auto w = check_consistency_instance(SrsId::SL, kXyz, a, b,
                                      top_aligned_sum(a, b), 0, 1);
  REQUIRE(w.has_value());
  CHECK(w->clause == 2);
  CHECK(w->axiom == AxiomId::CON);  // standalone instances carry the generic id
  CHECK(w->rankings.size() == 2);
  CHECK(w->sum == top_aligned_sum(a, b));
  CHECK(replay(kXyz, *w));
  // Roles swapped: the same violation surfaces through clause 3.
  auto swapped = check_consistency_instance(SrsId::SL, kXyz, b, a,
                                            top_aligned_sum(b, a), 0, 1);
  REQUIRE(swapped.has_value());
  CHECK(swapped->clause == 3);
  // A sum that does not restrict to the parts is rejected.
  CHECK_THROWS_AS(
      check_consistency_instance(SrsId::SL, kXyz, a, b, r("{x,y} > {z}"), 0, 1),
      NotASumError);
}

TEST_CASE("neutrality instances compare relabeled verdicts") {
  std::vector<int> swap = {1, 0, 2};
  auto w = check_nt_instance(SrsId::L_TB, kXyz, r("{x,y}"), swap);
  REQUIRE(w.has_value());
  CHECK(w->sigma == swap);
  CHECK(replay(kXyz, *w));
  CHECK_FALSE(check_nt_instance(SrsId::L, kXyz, r("{x,y}"), swap).has_value());
}

TEST_CASE("weak coalitional anonymity instances validate the permutation") {
  std::vector<uint32_t> pi(8);
  for (uint32_t s = 0; s < 8; ++s) pi[s] = s;
  CHECK_FALSE(check_wca_instance(SrsId::P, kXyz, r("{x} > {y}"), 0, 1, pi)
                  .has_value());
  // Swapping {x} and {y} changes the x-membership cell: invalid.
  std::vector<uint32_t> bad = pi;
  std::swap(bad[1], bad[2]);
  CHECK_THROWS_AS(check_wca_instance(SrsId::P, kXyz, r("{x} > {y}"), 0, 1, bad),
                  std::invalid_argument);
  // Swapping {x} and {x,z} preserves both memberships but halves x's
  // split score, which plain plurality ignores and split-plurality sees.
  std::vector<uint32_t> good = pi;
  std::swap(good[Coalition::of(kXyz, {"x"}).bits()],
            good[Coalition::of(kXyz, {"x", "z"}).bits()]);
  CHECK_FALSE(
      check_wca_instance(SrsId::P, kXyz, r("{x} {y}"), 0, 1, good).has_value());
  auto w = check_wca_instance(SrsId::SPLIT_P, kXyz, r("{x} {y}"), 0, 1, good);
  REQUIRE(w.has_value());
  CHECK(replay(kXyz, *w));
}

TEST_CASE("worst-set decomposition instances validate their shape") {
  auto w = check_idws_instance(SrsId::L, kXyz, r("{x} > {y} {y,z}"),
                               r("{x} > {y} > {y,z}"));
  CHECK_FALSE(w.has_value());  // lex-cel keeps x on top here
  auto v = check_idws_instance(SrsId::SSUM_SL, kXyz, r("{x} > {y} {y,z}"),
                               r("{x} > {y} > {y,z}"));
  CHECK(v.has_value());
  CHECK_THROWS_AS(
      check_idws_instance(SrsId::L, kXyz, r("{x} > {y}"), r("{y} > {x}")),
      std::invalid_argument);
  // The trivial one-part decomposition is valid and never violates.
  CHECK_FALSE(check_idws_instance(SrsId::L, kXyz, r("{x} > {y}"), r("{x} > {y}"))
                  .has_value());
}

TEST_CASE("worst-set addition instances validate their shape") {
  auto w = check_iaws_instance(SrsId::IDSL, kXyz, r("{x}"), r("{x} > {y}"));
  REQUIRE(w.has_value());
  CHECK(replay(kXyz, *w));
  CHECK_FALSE(
      check_iaws_instance(SrsId::L, kXyz, r("{x}"), r("{x} > {y}")).has_value());
  CHECK_THROWS_AS(
      check_iaws_instance(SrsId::L, kXyz, r("{x}"), r("{y} > {x}")),
      std::invalid_argument);
  CHECK_THROWS_AS(
      check_iaws_instance(SrsId::L, kXyz, r("{x}"), r("{x} > {x,y} > {y}")),
      std::invalid_argument);
}

TEST_CASE("tops-only instances require a shared best class") {
  auto w = check_to_instance(SrsId::L, kXyz, r("{x,y} > {x}"), r("{x,y} > {y}"));
  REQUIRE(w.has_value());
  CHECK(replay(kXyz, *w));
  CHECK_FALSE(check_to_instance(SrsId::P, kXyz, r("{x,y} > {x}"),
                                r("{x,y} > {y}"))
                  .has_value());
  CHECK_THROWS_AS(check_to_instance(SrsId::L, kXyz, r("{x}"), r("{y}")),
                  std::invalid_argument);
}

TEST_CASE("pointwise instances enforce their class-count shape") {
  auto w = check_aiaw_instance(SrsId::L, kXyz, r("{x,y} {x}"));
  REQUIRE(w.has_value());
  CHECK(replay(kXyz, *w));
  CHECK_FALSE(check_aiaw_instance(SrsId::SL, kXyz, r("{x,y} {x}")).has_value());
  CHECK_THROWS_AS(check_aiaw_instance(SrsId::L, kXyz, r("{x} > {y}")),
                  std::invalid_argument);

  auto v = check_wuvip_instance(SrsId::CONST_X, kXyz, r("{x} > {y}"));
  CHECK(v.has_value());
  CHECK_FALSE(check_wuvip_instance(SrsId::P, kXyz, r("{x} > {y}")).has_value());
  CHECK_THROWS_AS(check_wuvip_instance(SrsId::P, kXyz, r("{x}")),
                  std::invalid_argument);
}

TEST_CASE("replay rejects tampered witnesses") {
  auto w = check_iaws_instance(SrsId::IDSL, kXyz, r("{x}"), r("{x} > {y}"));
  REQUIRE(w.has_value());
  Witness broken = *w;
  broken.srs = SrsId::L;  // lex-cel does satisfy the axiom here
  CHECK_FALSE(replay(kXyz, broken));
}

TEST_CASE("audits find the expected verdicts at small bounds") {
  AuditResult pass = audit_axiom(SrsId::P, AxiomId::TCON, kXyz, small());
  CHECK(pass.status == AuditStatus::PassUpToBounds);
  CHECK_FALSE(pass.witness.has_value());
  CHECK(pass.instances > 0);

  AuditResult fail = audit_axiom(SrsId::P, AxiomId::CCON, kXyz, small());
  CHECK(fail.status == AuditStatus::Violated);
  REQUIRE(fail.witness.has_value());
  CHECK(replay(kXyz, *fail.witness));

  // The smallest lex-cel counterexample needs a three-coalition worst
  // class, hence domain size four.
  CHECK(audit_axiom(SrsId::L, AxiomId::IDWS, kXyz, small()).status ==
        AuditStatus::PassUpToBounds);
  SearchBounds wider = small();
  wider.max_domain = 4;
  AuditResult idws = audit_axiom(SrsId::L, AxiomId::IDWS, kXyz, wider);
  CHECK(idws.status == AuditStatus::Violated);
  REQUIRE(idws.witness.has_value());
  CHECK(replay(kXyz, *idws.witness));
}

TEST_CASE("audits are deterministic") {
  AuditResult a = audit_axiom(SrsId::SL, AxiomId::TCON, kXyz, small());
  AuditResult b = audit_axiom(SrsId::SL, AxiomId::TCON, kXyz, small());
  CHECK(a.status == b.status);
  REQUIRE(a.witness.has_value() == b.witness.has_value());
  if (a.witness)
    CHECK(canonical_witness_key(kXyz, *a.witness) ==
          canonical_witness_key(kXyz, *b.witness));
  CHECK(a.instances == b.instances);
}

TEST_CASE("full consistency decomposes into the four clause axioms") {
  for (SrsId srs : {SrsId::P, SrsId::SL, SrsId::CONST_X}) {
    bool clause_violated = false;
    for (AxiomId clause : {AxiomId::II_CCON, AxiomId::IP_CCON, AxiomId::PI_CCON,
                           AxiomId::PP_CCON}) {
      AuditResult cell = audit_axiom(srs, clause, kXyz, small());
      clause_violated |= cell.status == AuditStatus::Violated;
    }
    AuditResult whole = audit_axiom(srs, AxiomId::CCON, kXyz, small());
    CHECK((whole.status == AuditStatus::Violated) == clause_violated);
  }
}

TEST_CASE("consistency for every sum implies the three named forms") {
  // The three named sums are particular sums, so a CON pass must come with
  // CCON, TCON, and BCON passes.
  AuditResult con = audit_axiom(SrsId::CONST_X, AxiomId::CON, kXyz, small());
  CHECK(con.status == AuditStatus::PassUpToBounds);
  for (AxiomId named : {AxiomId::CCON, AxiomId::TCON, AxiomId::BCON})
    CHECK(audit_axiom(SrsId::CONST_X, named, kXyz, small()).status ==
          AuditStatus::PassUpToBounds);
  // And a named-form violation forces a CON violation.
  CHECK(audit_axiom(SrsId::P, AxiomId::CON, kXyz, small()).status ==
        AuditStatus::Violated);
}

TEST_CASE("sampled mode is seeded and reproducible") {
  SearchBounds bounds = small();
  bounds.mode = SearchMode::Sampled;
  bounds.seed = 7;
  bounds.trials = 20000;
  AuditResult a = audit_axiom(SrsId::P, AxiomId::CCON, kXyz, bounds);
  AuditResult b = audit_axiom(SrsId::P, AxiomId::CCON, kXyz, bounds);
  CHECK(a.status == AuditStatus::Violated);
  REQUIRE(a.witness.has_value());
  REQUIRE(b.witness.has_value());
  CHECK(replay(kXyz, *a.witness));
  CHECK(a.witness->rankings == b.witness->rankings);
}

TEST_CASE("oversized exhaustive audits report bounds_too_large") {
  SearchBounds bounds = small();
  bounds.budget = 10;
  AuditResult out = audit_axiom(SrsId::P, AxiomId::CCON, kXyz, bounds);
  CHECK(out.status == AuditStatus::BoundsTooLarge);
  CHECK_FALSE(out.witness.has_value());
}

TEST_CASE("audit matrix covers the requested grid") {
  std::vector<SrsId> srs = {SrsId::P, SrsId::L};
  std::vector<AxiomId> axioms = {AxiomId::TCON, AxiomId::NT};
  std::vector<AuditResult> grid = audit_matrix(srs, axioms, kXyz, small());
  REQUIRE(grid.size() == 4);
  CHECK(grid[0].srs == SrsId::P);
  CHECK(grid[0].axiom == AxiomId::TCON);
  CHECK(grid[3].srs == SrsId::L);
  CHECK(grid[3].axiom == AxiomId::NT);
}

TEST_CASE("implication checks report premise and conclusion audits") {
  std::vector<AxiomId> premises = {AxiomId::CCON, AxiomId::AIAW, AxiomId::IDWS};
  ImplicationResult imp =
      check_implication(premises, AxiomId::WUVIP, SrsId::SL, kXyz, small());
  CHECK(imp.consistent);
  CHECK(imp.audits.size() == 4);
  // The constant rule fails the conclusion but is saved by failing the
  // all-indifference premise, so the implication stays consistent.
  ImplicationResult saved =
      check_implication(premises, AxiomId::WUVIP, SrsId::CONST_X, kXyz, small());
  CHECK(saved.consistent);
  CHECK_FALSE(saved.counter.has_value());
  REQUIRE(saved.audits.size() == 4);
  CHECK(saved.audits[1].axiom == AxiomId::AIAW);
  CHECK(saved.audits[1].status == AuditStatus::Violated);
  CHECK(saved.audits.back().axiom == AxiomId::WUVIP);
  CHECK(saved.audits.back().status == AuditStatus::Violated);
}

TEST_CASE("canonical witness keys identify relabeled witnesses") {
  auto w1 = check_aiaw_instance(SrsId::L, kXyz, r("{x,y} {x}"));
  auto w2 = check_aiaw_instance(SrsId::L, kXyz, r("{y,z} {y}"));
  REQUIRE(w1.has_value());
  REQUIRE(w2.has_value());
  CHECK(canonical_witness_key(kXyz, *w1) == canonical_witness_key(kXyz, *w2));
  auto w3 = check_aiaw_instance(SrsId::L, kXyz, r("{x,y} {x} {z}"));
  REQUIRE(w3.has_value());
  CHECK(canonical_witness_key(kXyz, *w1) != canonical_witness_key(kXyz, *w3));
}

TEST_CASE("audit bounds must match the roster") {
  SearchBounds bounds = small();
  bounds.roster_size = 4;
  CHECK_THROWS_AS(audit_axiom(SrsId::P, AxiomId::NT, kXyz, bounds),
                  std::invalid_argument);
}
