#include "socrank/fixtures.hpp"

#include <functional>
#include <sstream>

#include "socrank/axioms.hpp"
#include "socrank/parse.hpp"
#include "socrank/scores.hpp"
#include "socrank/solutions.hpp"
#include "socrank/sums.hpp"

namespace socrank {

int FixtureReport::assertion_count() const {
  int n = 0;
  for (const auto& e : entries) n += e.assertions;
  return n;
}

int FixtureReport::disputed_count() const {
  int n = 0;
  for (const auto& e : entries) n += e.disputed ? 1 : 0;
  return n;
}

bool FixtureReport::ok() const {
  for (const auto& e : entries)
    if (!e.passed) return false;
  return true;
}

namespace {

struct Harness {
  FixtureReport report;
  FixtureResult* current = nullptr;

  void fixture(const std::string& id, bool disputed,
               const std::function<void()>& body) {
    report.entries.push_back({id, disputed, true, 0, {}});
    current = &report.entries.back();
    body();
    current = nullptr;
  }

  void check(bool condition, const std::string& detail) {
    ++current->assertions;
    if (!condition) {
      current->passed = false;
      current->failures.push_back(detail);
    }
  }
};

ScoreVector sv(std::initializer_list<long long> values) {
  ScoreVector out;
  for (long long v : values) out.emplace_back(v);
  return out;
}

// Expected relation from an ordered partition of individual names.
SocialRelation expected(const Roster& roster,
                        std::vector<std::vector<std::string>> classes) {
  std::vector<int> position(static_cast<size_t>(roster.size()), -1);
  for (size_t k = 0; k < classes.size(); ++k)
    for (const std::string& name : classes[k])
      position[static_cast<size_t>(roster.index(name))] = static_cast<int>(k);
  return SocialRelation::from_compare(roster.size(), [&](int x, int y) {
    int px = position[static_cast<size_t>(x)], py = position[static_cast<size_t>(y)];
    if (px < py) return Verdict::P;
    if (px > py) return Verdict::InverseP;
    return Verdict::I;
  });
}

Verdict v(SrsId srs, const Roster& roster, const CoalitionalRanking& r,
          const std::string& x, const std::string& y) {
  return compare(srs, roster, r, roster.index(x), roster.index(y));
}

std::string name_of(SrsId srs) { return std::string(srs_name(srs)); }

}  // namespace

FixtureReport run_fixture_suite() {
  Harness h;

  // --- Worked example: the four-individual pair of rankings -------------
  Roster xyzw = Roster::of({"x", "y", "z", "w"});
  CoalitionalRanking ex1_r1 =
      parse_ranking(xyzw, "{x,y,z} {x,y} > {x} {x,z} {y} > {z} {w}");
  CoalitionalRanking ex1_r2 = parse_ranking(xyzw, "{x,w} {y,w} {z,w}");

  h.fixture("example1-score-table", false, [&] {
    auto id = [&](const std::string& n) { return xyzw.index(n); };
    h.check(theta(ex1_r1, id("x")) == sv({2, 2, 0}), "theta_1(x)");
    h.check(theta(ex1_r1, id("y")) == sv({2, 1, 0}), "theta_1(y)");
    h.check(theta(ex1_r1, id("z")) == sv({1, 1, 1}), "theta_1(z)");
    h.check(theta(ex1_r1, id("w")) == sv({0, 0, 1}), "theta_1(w)");
    h.check(sign_theta(ex1_r1, id("x")) == sv({1, 1, 0}), "sign_theta_1(x)");
    h.check(sign_theta(ex1_r1, id("y")) == sv({1, 1, 0}), "sign_theta_1(y)");
    h.check(sign_theta(ex1_r1, id("z")) == sv({1, 1, 1}), "sign_theta_1(z)");
    h.check(sign_theta(ex1_r1, id("w")) == sv({0, 0, 1}), "sign_theta_1(w)");
    h.check(theta(ex1_r2, id("x")) == sv({1}), "theta_2(x)");
    h.check(theta(ex1_r2, id("y")) == sv({1}), "theta_2(y)");
    h.check(theta(ex1_r2, id("z")) == sv({1}), "theta_2(z)");
    h.check(theta(ex1_r2, id("w")) == sv({3}), "theta_2(w)");
    h.check(iis_depth(ex1_r1, id("x")) == 1, "e_1(x)");
    h.check(iis_depth(ex1_r1, id("y")) == 1, "e_1(y)");
    h.check(iis_depth(ex1_r1, id("z")) == 0, "e_1(z)");
    h.check(iis_depth(ex1_r1, id("w")) == 0, "e_1(w)");
    h.check(iis_depth(ex1_r2, id("x")) == 0, "e_2(x)");
    h.check(iis_depth(ex1_r2, id("y")) == 0, "e_2(y)");
    h.check(iis_depth(ex1_r2, id("z")) == 0, "e_2(z)");
    h.check(iis_depth(ex1_r2, id("w")) == 1, "e_2(w)");
  });

  h.fixture("example1-relations", false, [&] {
    auto same = [&](SrsId srs, const CoalitionalRanking& r,
                    std::vector<std::vector<std::string>> classes,
                    const std::string& which) {
      h.check(apply(srs, xyzw, r) == expected(xyzw, std::move(classes)),
              name_of(srs) + " over " + which);
    };
    same(SrsId::L, ex1_r1, {{"x"}, {"y"}, {"z"}, {"w"}}, "ranking 1");
    same(SrsId::SL, ex1_r1, {{"z"}, {"x", "y"}, {"w"}}, "ranking 1");
    same(SrsId::SP, ex1_r1, {{"x", "y", "z"}, {"w"}}, "ranking 1");
    same(SrsId::CPM, ex1_r1, {{"x", "y"}, {"z", "w"}}, "ranking 1");
    same(SrsId::P, ex1_r1, {{"x", "y"}, {"z"}, {"w"}}, "ranking 1");
    same(SrsId::AP, ex1_r1, {{"x", "y"}, {"z", "w"}}, "ranking 1");
    same(SrsId::IIS, ex1_r1, {{"x", "y"}, {"z", "w"}}, "ranking 1");
    h.check(apply(SrsId::IIS, xyzw, ex1_r1) == apply(SrsId::AP, xyzw, ex1_r1),
            "IIS equals AP over ranking 1");
    same(SrsId::L, ex1_r2, {{"w"}, {"x", "y", "z"}}, "ranking 2");
    same(SrsId::SL, ex1_r2, {{"x", "y", "z", "w"}}, "ranking 2");
    same(SrsId::CPM, ex1_r2, {{"x", "y", "z", "w"}}, "ranking 2");
    same(SrsId::P, ex1_r2, {{"w"}, {"x", "y", "z"}}, "ranking 2");
    same(SrsId::SP, ex1_r2, {{"x", "y", "z", "w"}}, "ranking 2");
    same(SrsId::AP, ex1_r2, {{"x", "y", "z"}, {"w"}}, "ranking 2");
    h.check(apply(SrsId::IIS, xyzw, ex1_r2) == apply(SrsId::P, xyzw, ex1_r2),
            "IIS equals P over ranking 2");
  });

  // --- Worked example: the three canonical sums -------------------------
  Roster xyz = Roster::of({"x", "y", "z"});
  h.fixture("example2-sums", false, [&] {
    CoalitionalRanking a = parse_ranking(xyz, "{x} > {y} > {z}");
    CoalitionalRanking b = parse_ranking(xyz, "{x,y} > {x,z}");
    h.check(concat_sum(a, b) ==
                parse_ranking(xyz, "{x} > {y} > {z} > {x,y} > {x,z}"),
            "concatenation sum");
    h.check(top_aligned_sum(a, b) ==
                parse_ranking(xyz, "{x} {x,y} > {y} {x,z} > {z}"),
            "top-aligned sum");
    h.check(bottom_aligned_sum(a, b) ==
                parse_ranking(xyz, "{x} > {y} {x,y} > {z} {x,z}"),
            "bottom-aligned sum");
  });

  // --- Consistency landscape of the six basic rules ---------------------
  h.fixture("consistency-sign-lexcel", false, [&] {
    CoalitionalRanking r1 = parse_ranking(xyz, "{x,y}");
    CoalitionalRanking r2 = parse_ranking(xyz, "{x}");
    h.check(v(SrsId::SL, xyz, r1, "x", "y") == Verdict::I, "x I y in part 1");
    h.check(v(SrsId::SL, xyz, r2, "x", "y") == Verdict::P, "x P y in part 2");
    for (auto [sum, label] :
         {std::pair{top_aligned_sum(r1, r2), "top-aligned"},
          std::pair{bottom_aligned_sum(r1, r2), "bottom-aligned"}}) {
      auto w = check_consistency_instance(SrsId::SL, xyz, r1, r2, sum, 0, 1);
      h.check(w && w->clause == 2, std::string(label) + " sum breaks clause 2");
      if (w) h.check(replay(xyz, *w), std::string(label) + " witness replays");
    }
    auto ok = check_consistency_instance(SrsId::SL, xyz, r1, r2,
                                         concat_sum(r1, r2), 0, 1);
    h.check(!ok, "concatenation sum is consistent");
  });

  h.fixture("consistency-plurality", false, [&] {
    CoalitionalRanking r1 = parse_ranking(xyz, "{x,y} > {z}");
    CoalitionalRanking r2 = parse_ranking(xyz, "{x}");
    for (auto [sum, label] :
         {std::pair{concat_sum(r1, r2), "concatenation"},
          std::pair{bottom_aligned_sum(r1, r2), "bottom-aligned"}}) {
      auto w = check_consistency_instance(SrsId::P, xyz, r1, r2, sum, 0, 1);
      h.check(w && w->clause == 2, std::string(label) + " sum breaks clause 2");
      if (w) h.check(replay(xyz, *w), std::string(label) + " witness replays");
    }
    auto ok = check_consistency_instance(SrsId::P, xyz, r1, r2,
                                         top_aligned_sum(r1, r2), 0, 1);
    h.check(!ok, "top-aligned sum is consistent");
  });

  h.fixture("consistency-anti-plurality", false, [&] {
    // Mirror of the plurality argument; the sources leave it implicit.
    CoalitionalRanking r1 = parse_ranking(xyz, "{y}");
    CoalitionalRanking r2 = parse_ranking(xyz, "{z}");
    auto w = check_consistency_instance(SrsId::AP, xyz, r1, r2,
                                        concat_sum(r1, r2), 0, 1);
    h.check(w && w->clause == 3, "concatenation sum breaks clause 3");
    CoalitionalRanking r2b = parse_ranking(xyz, "{z} > {x,y}");
    auto wt = check_consistency_instance(SrsId::AP, xyz, r1, r2b,
                                         top_aligned_sum(r1, r2b), 0, 1);
    h.check(wt && wt->clause == 3, "top-aligned sum breaks clause 3");
    auto ok = check_consistency_instance(SrsId::AP, xyz, r1, r2,
                                         bottom_aligned_sum(r1, r2), 0, 1);
    h.check(!ok, "bottom-aligned sum is consistent");
  });

  h.fixture("consistency-iis", false, [&] {
    CoalitionalRanking r1 = parse_ranking(xyz, "{z}");
    CoalitionalRanking r2 = parse_ranking(xyz, "{x}");
    for (auto [sum, label] :
         {std::pair{concat_sum(r1, r2), "concatenation"},
          std::pair{top_aligned_sum(r1, r2), "top-aligned"},
          std::pair{bottom_aligned_sum(r1, r2), "bottom-aligned"}}) {
      auto w = check_consistency_instance(SrsId::IIS, xyz, r1, r2, sum, 0, 1);
      h.check(w && w->clause == 2, std::string(label) + " sum breaks clause 2");
    }
  });

  h.fixture("consistency-cp-majority", false, [&] {
    CoalitionalRanking r1 = parse_ranking(xyz, "{x} > {x,y,z}");
    CoalitionalRanking r2 = parse_ranking(xyz, "{z} > {y}");
    for (auto [sum, label] :
         {std::pair{concat_sum(r1, r2), "concatenation"},
          std::pair{top_aligned_sum(r1, r2), "top-aligned"},
          std::pair{bottom_aligned_sum(r1, r2), "bottom-aligned"}}) {
      auto w = check_consistency_instance(SrsId::CPM, xyz, r1, r2, sum, 0, 1);
      h.check(w && w->clause == 1, std::string(label) + " sum breaks clause 1");
      if (w) h.check(replay(xyz, *w), std::string(label) + " witness replays");
    }
  });

  // --- Clause-level profile of CP majority at four individuals ----------
  h.fixture("cpm-ip-concatenation", true, [&] {
    // The quoted pair is ({z}) and ({x,z},{x}) > ({y,z}); its concatenation
    // actually yields x P y, so it breaks no clause.
    CoalitionalRanking r1 = parse_ranking(xyz, "{z}");
    CoalitionalRanking r2 = parse_ranking(xyz, "{x,z} {x} > {y,z}");
    h.check(v(SrsId::CPM, xyz, r1, "x", "y") == Verdict::I, "x I y in part 1");
    h.check(v(SrsId::CPM, xyz, r2, "x", "y") == Verdict::P, "x P y in part 2");
    h.check(v(SrsId::CPM, xyz, concat_sum(r1, r2), "x", "y") == Verdict::P,
            "concatenation keeps x P y: the quoted violation does not occur");
    // Replacement witness found by bounded search.
    CoalitionalRanking d1 = parse_ranking(xyz, "{y,z}");
    CoalitionalRanking d2 = parse_ranking(xyz, "{x} > {y} {x,z}");
    auto w = check_consistency_instance(SrsId::CPM, xyz, d1, d2,
                                        concat_sum(d1, d2), 0, 1);
    h.check(w && w->clause == 2, "replacement pair breaks clause 2");
    if (w) h.check(replay(xyz, *w), "replacement witness replays");
  });

  h.fixture("cpm-pp-concatenation", true, [&] {
    // The quoted pair shares the coalition {y,z} across its two domains,
    // so it is not a valid concatenation instance.
    CoalitionalRanking r1 =
        parse_ranking(xyzw, "{x} > {y} {y,w} {y,z,w} {y,z}");
    CoalitionalRanking r2 = parse_ranking(xyzw, "{x,z} > {y,z} {x,w} {x,z,w}");
    h.check(!are_disjoint(r1, r2), "quoted rankings are not disjoint");
    // Replacement witness found by bounded search.
    CoalitionalRanking d1 = parse_ranking(xyzw, "{x} > {y} {y,z} {y,w}");
    CoalitionalRanking d2 =
        parse_ranking(xyzw, "{x,z,w} > {y,z,w} {x,z} {x,w}");
    h.check(v(SrsId::CPM, xyzw, d1, "x", "y") == Verdict::P, "x P y in part 1");
    h.check(v(SrsId::CPM, xyzw, d2, "x", "y") == Verdict::P, "x P y in part 2");
    auto w = check_consistency_instance(SrsId::CPM, xyzw, d1, d2,
                                        concat_sum(d1, d2), 0, 1);
    h.check(w && w->clause == 4, "replacement pair breaks clause 4");
    if (w) h.check(replay(xyzw, *w), "replacement witness replays");
  });

  h.fixture("cpm-pi-concatenation", false, [&] {
    // The sources leave this case implicit ("for similar reasons").
    CoalitionalRanking r1 = parse_ranking(xyz, "{x,z} > {y,z} {y}");
    CoalitionalRanking r2 = parse_ranking(xyz, "{x}");
    auto w = check_consistency_instance(SrsId::CPM, xyz, r1, r2,
                                        concat_sum(r1, r2), 0, 1);
    h.check(w && w->clause == 3, "concatenation sum breaks clause 3");
    if (w) h.check(replay(xyz, *w), "witness replays");
  });

  h.fixture("dual-iis-pi-concatenation", false, [&] {
    CoalitionalRanking r1 = parse_ranking(xyz, "{y}");
    CoalitionalRanking r2 = parse_ranking(xyz, "{z}");
    h.check(v(SrsId::DUAL_IIS, xyz, r1, "x", "y") == Verdict::P,
            "x P y in part 1");
    h.check(v(SrsId::DUAL_IIS, xyz, r2, "x", "y") == Verdict::I,
            "x I y in part 2");
    auto w = check_consistency_instance(SrsId::DUAL_IIS, xyz, r1, r2,
                                        concat_sum(r1, r2), 0, 1);
    h.check(w && w->clause == 3, "concatenation sum breaks clause 3");
  });

  // --- Lex-cel and the decomposition of the worst class -----------------
  Roster digits = Roster::of({"1", "2", "3"});
  h.fixture("lexcel-idws", false, [&] {
    CoalitionalRanking r = parse_ranking(digits, "{3} > {1} {1,3} {2}");
    CoalitionalRanking rp = parse_ranking(digits, "{3} > {2} > {1} {1,3}");
    h.check(v(SrsId::L, digits, r, "1", "2") == Verdict::P, "1 P 2 before");
    h.check(v(SrsId::L, digits, rp, "2", "1") == Verdict::P, "2 P 1 after");
    auto w = check_idws_instance(SrsId::L, digits, r, rp);
    h.check(w.has_value(), "decomposition reverses a strict verdict");
    if (w) h.check(replay(digits, *w), "witness replays");
  });

  // --- Independence fixtures --------------------------------------------
  h.fixture("idsl-iaws", false, [&] {
    CoalitionalRanking r = parse_ranking(xyz, "{x}");
    CoalitionalRanking rp = parse_ranking(xyz, "{x} > {y}");
    h.check(v(SrsId::IDSL, xyz, r, "x", "y") == Verdict::P, "x P y before");
    h.check(v(SrsId::IDSL, xyz, rp, "y", "x") == Verdict::P, "y P x after");
    auto w = check_iaws_instance(SrsId::IDSL, xyz, r, rp);
    h.check(w.has_value(), "appending a worst class reverses the verdict");
    if (w) h.check(replay(xyz, *w), "witness replays");
  });

  h.fixture("lexcel-aiaw", false, [&] {
    // Left implicit in the sources: lex-cel breaks unanimity on one class.
    CoalitionalRanking r = parse_ranking(xyz, "{x,y} {x}");
    h.check(v(SrsId::L, xyz, r, "x", "y") == Verdict::P,
            "x P y though all coalitions tie");
    auto w = check_aiaw_instance(SrsId::L, xyz, r);
    h.check(w.has_value(), "all-indifference violated");
  });

  h.fixture("sign-plurality-ip-concatenation", true, [&] {
    // The quoted roles are reversed: with parts ({x,y}) and ({y}), the
    // strict verdict in the second part favours y, not x.
    CoalitionalRanking r1 = parse_ranking(xyz, "{x,y}");
    CoalitionalRanking r2 = parse_ranking(xyz, "{y}");
    h.check(v(SrsId::SP, xyz, r1, "x", "y") == Verdict::I, "x I y in part 1");
    h.check(v(SrsId::SP, xyz, r2, "y", "x") == Verdict::P,
            "y P x (not x P y) in part 2");
    h.check(v(SrsId::SP, xyz, concat_sum(r1, r2), "x", "y") == Verdict::I,
            "concatenation makes them indifferent");
    auto w = check_consistency_instance(SrsId::SP, xyz, r1, r2,
                                        concat_sum(r1, r2), 0, 1);
    h.check(w && w->clause == 2 && xyz.name(w->x) == "y",
            "clause 2 still breaks with the roles swapped");
    if (w) h.check(replay(xyz, *w), "witness replays");
  });

  h.fixture("slneh-nt", false, [&] {
    // Left implicit in the sources: the tie-break order is not neutral.
    CoalitionalRanking r = parse_ranking(xyz, "{z}");
    std::vector<int> swap = {1, 0, 2};  // exchange x and y
    h.check(v(SrsId::SLNEH, xyz, r, "x", "y") == Verdict::P,
            "tie broken in favour of x");
    auto w = check_nt_instance(SrsId::SLNEH, xyz, r, swap);
    h.check(w.has_value(), "relabeling flips the verdict");
    if (w) h.check(replay(xyz, *w), "witness replays");
  });

  h.fixture("ssum-sl-idws", false, [&] {
    CoalitionalRanking r = parse_ranking(xyz, "{x} > {y} {y,z}");
    CoalitionalRanking rp = parse_ranking(xyz, "{x} > {y} > {y,z}");
    h.check(v(SrsId::SSUM_SL, xyz, r, "x", "y") == Verdict::P, "x P y before");
    h.check(v(SrsId::SSUM_SL, xyz, rp, "y", "x") == Verdict::P, "y P x after");
    auto w = check_idws_instance(SrsId::SSUM_SL, xyz, r, rp);
    h.check(w.has_value(), "decomposition reverses the verdict");
    if (w) h.check(replay(xyz, *w), "witness replays");
  });

  h.fixture("slun-aiaw", false, [&] {
    CoalitionalRanking r = parse_ranking(xyz, "{x,y} {x}");
    h.check(v(SrsId::SLUN, xyz, r, "x", "y") == Verdict::P,
            "x P y though all coalitions tie");
    auto w = check_aiaw_instance(SrsId::SLUN, xyz, r);
    h.check(w.has_value(), "all-indifference violated");
  });

  h.fixture("slne-nt", false, [&] {
    CoalitionalRanking r = parse_ranking(xyz, "{z}");
    std::vector<int> swap = {1, 0, 2};
    h.check(v(SrsId::SLNE, xyz, r, "x", "y") == Verdict::P,
            "tie broken in favour of x");
    auto w = check_nt_instance(SrsId::SLNE, xyz, r, swap);
    h.check(w.has_value(), "relabeling flips the verdict");
  });

  std::string rest_of_x3 = "{x} {y} {z} {x,z} {y,z} {x,y,z}";
  h.fixture("lexcel-tops-only", false, [&] {
    CoalitionalRanking r = parse_ranking(xyz, "{x,y} > " + rest_of_x3);
    CoalitionalRanking rp =
        parse_ranking(xyz, "{x,y} > {x} > {y} {z} {x,z} {y,z} {x,y,z}");
    h.check(v(SrsId::L, xyz, r, "x", "y") == Verdict::I,
            "x I y under the flat tail");
    h.check(v(SrsId::L, xyz, rp, "x", "y") == Verdict::P,
            "x P y once {x} moves up");
    auto w = check_to_instance(SrsId::L, xyz, r, rp);
    h.check(w.has_value(), "same best class, different relations");
    if (w) h.check(replay(xyz, *w), "witness replays");
  });

  h.fixture("sign-plurality-tcon", false, [&] {
    // The quoted pair is not disjoint (both rankings cover every
    // coalition); this is the same argument on a disjoint pair.
    CoalitionalRanking r1 = parse_ranking(xyz, "{x}");
    CoalitionalRanking r2 = parse_ranking(xyz, "{x,y}");
    h.check(v(SrsId::SP, xyz, r1, "x", "y") == Verdict::P, "x P y in part 1");
    h.check(v(SrsId::SP, xyz, r2, "x", "y") == Verdict::I, "x I y in part 2");
    auto w = check_consistency_instance(SrsId::SP, xyz, r1, r2,
                                        top_aligned_sum(r1, r2), 0, 1);
    h.check(w && w->clause == 3, "top-aligned sum breaks clause 3");
    if (w) h.check(replay(xyz, *w), "witness replays");
  });

  h.fixture("constant-wuvip", false, [&] {
    CoalitionalRanking r = parse_ranking(xyz, "{x} > {y}");
    auto w = check_wuvip_instance(SrsId::CONST_X, xyz, r);
    h.check(w.has_value(), "constant rule never ranks strictly");
    if (w) h.check(replay(xyz, *w), "witness replays");
  });

  Roster five = Roster::of({"a", "b", "c", "x", "y"});
  auto five_wca = [&](SrsId srs, Harness& hh) {
    // Best class {x,a} and {y,b,c}; swap {x,a} with {x,b,c} and {y,b,c}
    // with {y,a}: an {x,y}-invariant permutation flipping the verdict.
    std::vector<Coalition> top = {Coalition::of(five, {"x", "a"}),
                                  Coalition::of(five, {"y", "b", "c"})};
    std::vector<std::vector<Coalition>> classes = {top, {}};
    for (uint32_t bits = 1; bits < (1u << 5); ++bits) {
      Coalition s(bits);
      if (s == top[0] || s == top[1]) continue;
      classes[1].push_back(s);
    }
    CoalitionalRanking r{classes};
    uint32_t xa = Coalition::of(five, {"x", "a"}).bits();
    uint32_t xbc = Coalition::of(five, {"x", "b", "c"}).bits();
    uint32_t ybc = Coalition::of(five, {"y", "b", "c"}).bits();
    uint32_t ya = Coalition::of(five, {"y", "a"}).bits();
    std::vector<uint32_t> pi(1u << 5);
    for (uint32_t bits = 1; bits < (1u << 5); ++bits) pi[bits] = bits;
    std::swap(pi[xa], pi[xbc]);
    std::swap(pi[ybc], pi[ya]);
    int x = five.index("x"), y = five.index("y");
    hh.check(compare(srs, five, r, x, y) == Verdict::P, "x P y before");
    hh.check(compare(srs, five, apply_pi(r, pi), y, x) == Verdict::P,
             "y P x after the permutation");
    auto w = check_wca_instance(srs, five, r, x, y, pi);
    hh.check(w.has_value(), "pair verdict not invariant");
    if (w) hh.check(replay(five, *w), "witness replays");
  };

  h.fixture("split-plurality-wca", false, [&] { five_wca(SrsId::SPLIT_P, h); });
  h.fixture("split-lexcel-wca", false, [&] { five_wca(SrsId::SPLIT_L, h); });

  auto tiebreak_nt = [&](SrsId srs, Harness& hh) {
    CoalitionalRanking r = parse_ranking(xyz, "{x,y} > " + rest_of_x3);
    std::vector<int> swap = {1, 0, 2};
    hh.check(v(srs, xyz, r, "x", "y") == Verdict::P,
             "tie broken in favour of x");
    auto w = check_nt_instance(srs, xyz, r, swap);
    hh.check(w.has_value(), "relabeling flips the verdict");
    if (w) hh.check(replay(xyz, *w), "witness replays");
  };

  h.fixture("plurality-tiebreak-nt", false, [&] { tiebreak_nt(SrsId::P_TB, h); });
  h.fixture("lexcel-tiebreak-nt", false, [&] { tiebreak_nt(SrsId::L_TB, h); });

  h.fixture("sum-lexcel-iaws", true, [&] {
    // The quoted extension ({x}) > ({x,y}) > ({y}) actually keeps x P y:
    // the sums tie at 2 and lex-cel breaks the tie towards x.
    CoalitionalRanking r = parse_ranking(xyz, "{x} > {x,y}");
    CoalitionalRanking rp = parse_ranking(xyz, "{x} > {x,y} > {y}");
    h.check(v(SrsId::SUM_L, xyz, r, "x", "y") == Verdict::P, "x P y before");
    h.check(v(SrsId::SUM_L, xyz, rp, "x", "y") == Verdict::P,
            "x P y still holds: the quoted indifference does not occur");
    h.check(!check_iaws_instance(SrsId::SUM_L, xyz, r, rp).has_value(),
            "quoted extension is not a counterexample");
    // Replacement witness found by bounded search.
    CoalitionalRanking d = parse_ranking(xyz, "{x}");
    CoalitionalRanking dp = parse_ranking(xyz, "{x} > {y} {y,z}");
    h.check(v(SrsId::SUM_L, xyz, d, "x", "y") == Verdict::P,
            "x P y before the extension");
    h.check(v(SrsId::SUM_L, xyz, dp, "y", "x") == Verdict::P,
            "y P x after the extension");
    auto w = check_iaws_instance(SrsId::SUM_L, xyz, d, dp);
    h.check(w.has_value(), "replacement extension reverses the verdict");
    if (w) h.check(replay(xyz, *w), "replacement witness replays");
  });

  return h.report;
}

}  // namespace socrank
