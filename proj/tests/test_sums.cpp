#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "socrank/enumeration.hpp"
#include "socrank/parse.hpp"
#include "socrank/sums.hpp"

using namespace socrank;

namespace {

const Roster kXyz = Roster::of({"x", "y", "z"});

CoalitionalRanking r(const char* text) { return parse_ranking(kXyz, text); }

// Oracle: all weak orders over the union domain that restrict to both parts.
std::vector<CoalitionalRanking> brute_force_sums(const CoalitionalRanking& a,
                                                 const CoalitionalRanking& b) {
  std::vector<Coalition> domain = a.domain();
  std::vector<Coalition> db = b.domain();
  domain.insert(domain.end(), db.begin(), db.end());
  std::sort(domain.begin(), domain.end());
  std::vector<CoalitionalRanking> out;
  for_each_weak_order(domain, static_cast<int>(domain.size()),
                      [&](const CoalitionalRanking& candidate) {
                        if (candidate.restricted(a.domain()) == a &&
                            candidate.restricted(b.domain()) == b)
                          out.push_back(candidate);
                        return true;
                      });
  return out;
}

uint64_t delannoy(int l, int m) {
  // Recurrence over the three-way merge of class sequences.
  std::vector<std::vector<uint64_t>> d(static_cast<size_t>(l) + 1,
                                       std::vector<uint64_t>(static_cast<size_t>(m) + 1, 1));
  for (int i = 1; i <= l; ++i)
    for (int j = 1; j <= m; ++j)
      d[i][j] = d[i - 1][j] + d[i][j - 1] + d[i - 1][j - 1];
  return d[static_cast<size_t>(l)][static_cast<size_t>(m)];
}

}  // namespace

TEST_CASE("disjointness check and error") {
  CHECK(are_disjoint(r("{x} > {y}"), r("{z}")));
  CHECK_FALSE(are_disjoint(r("{x}"), r("{x} > {y}")));
  CHECK_THROWS_AS(concat_sum(r("{x}"), r("{x}")), NotDisjointError);
  CHECK_THROWS_AS(top_aligned_sum(r("{x}"), r("{x}")), NotDisjointError);
}

TEST_CASE("named sums on a concrete pair") {
  CoalitionalRanking a = r("{x} > {y} > {z}");
  CoalitionalRanking b = r("{x,y} > {x,z}");
  CHECK(concat_sum(a, b) == r("{x} > {y} > {z} > {x,y} > {x,z}"));
  CHECK(top_aligned_sum(a, b) == r("{x} {x,y} > {y} {x,z} > {z}"));
  CHECK(bottom_aligned_sum(a, b) == r("{x} > {y} {x,y} > {z} {x,z}"));
}

TEST_CASE("bottom alignment is the reverse of top alignment") {
  CoalitionalRanking a = r("{x} > {y} > {z}");
  CoalitionalRanking b = r("{x,y} > {x,z}");
  CHECK(bottom_aligned_sum(a, b) ==
        top_aligned_sum(a.reversed(), b.reversed()).reversed());
}

TEST_CASE("sums with the empty ranking echo the other part") {
  CoalitionalRanking a = r("{x} > {y}");
  CoalitionalRanking none;
  CHECK(concat_sum(a, none) == a);
  CHECK(concat_sum(none, a) == a);
  CHECK(top_aligned_sum(a, none) == a);
  CHECK(bottom_aligned_sum(none, a) == a);
}

TEST_CASE("enumerated sums match the brute-force oracle") {
  std::vector<std::pair<CoalitionalRanking, CoalitionalRanking>> pairs = {
      {r("{x}"), r("{y}")},                                  // (1,1)
      {r("{x} > {y}"), r("{z}")},                            // (2,1)
      {r("{x} > {y}"), r("{z} > {x,y}")},                    // (2,2)
      {r("{x} > {y} > {z}"), r("{x,y} > {x,z}")},            // (3,2)
      {r("{x} > {y} > {z}"), r("{x,y} > {x,z} > {y,z}")},    // (3,3)
  };
  std::vector<uint64_t> expected_counts = {3, 5, 13, 25, 63};
  for (size_t k = 0; k < pairs.size(); ++k) {
    const auto& [a, b] = pairs[k];
    std::vector<CoalitionalRanking> enumerated = all_sums(a, b);
    std::vector<CoalitionalRanking> oracle = brute_force_sums(a, b);
    CHECK(enumerated.size() == expected_counts[k]);
    CHECK(enumerated.size() ==
          delannoy(a.class_count(), b.class_count()));
    CHECK(enumerated.size() == oracle.size());
    for (const auto& s : enumerated) {
      CHECK(std::count(oracle.begin(), oracle.end(), s) == 1);
      CHECK(is_sum_of(s, a, b));
    }
    // No duplicates in the enumeration.
    for (size_t i = 0; i < enumerated.size(); ++i)
      for (size_t j = i + 1; j < enumerated.size(); ++j)
        CHECK_FALSE(enumerated[i] == enumerated[j]);
  }
}

TEST_CASE("the named sums are enumerated") {
  CoalitionalRanking a = r("{x} > {y}");
  CoalitionalRanking b = r("{z} > {x,y}");
  std::vector<CoalitionalRanking> sums = all_sums(a, b);
  for (const CoalitionalRanking& named :
       {concat_sum(a, b), top_aligned_sum(a, b), bottom_aligned_sum(a, b)})
    CHECK(std::count(sums.begin(), sums.end(), named) == 1);
}

TEST_CASE("for_each_sum stops early on request") {
  CoalitionalRanking a = r("{x} > {y}");
  CoalitionalRanking b = r("{z} > {x,y}");
  int seen = 0;
  bool finished = for_each_sum(a, b, [&](const CoalitionalRanking&) {
    return ++seen < 4;
  });
  CHECK_FALSE(finished);
  CHECK(seen == 4);
}

TEST_CASE("is_sum_of rejects non-sums") {
  CoalitionalRanking a = r("{x} > {y}");
  CoalitionalRanking b = r("{z}");
  CHECK_FALSE(is_sum_of(r("{y} > {x} > {z}"), a, b));   // breaks part 1
  CHECK_FALSE(is_sum_of(r("{x} > {y}"), a, b));          // misses part 2
  CHECK_FALSE(is_sum_of(r("{x} > {y} > {z} > {x,y}"), a, b));  // extra
}
