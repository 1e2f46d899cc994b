#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "socrank/model.hpp"

namespace socrank {

enum class SearchMode { Exhaustive, Sampled };

struct SearchBounds {
  int roster_size = 3;
  int max_domain = 3;   // cap on |D| of each enumerated ranking
  int max_classes = 8;  // cap on the class count of each enumerated ranking
  SearchMode mode = SearchMode::Exhaustive;
  uint64_t seed = 0;
  int trials = 100000;  // sampled mode only
  // Pair audits additionally cap |D1| + |D2|; 0 means 2 * max_domain.
  int max_combined_domain = 0;
  // Pair audits skip strata with |D1| + |D2| below this (witness search
  // window); a pass under a nonzero floor covers only the remaining strata.
  int min_combined_domain = 0;
  uint64_t budget = 2'000'000'000;  // estimated-instance ceiling

  int combined_cap() const {
    return max_combined_domain > 0 ? max_combined_domain : 2 * max_domain;
  }
};

/// All 2^|X| - 1 coalitions in canonical order (the singleton of the
/// highest-priority individual first).
std::vector<Coalition> all_coalitions(const Roster& roster);

/// Visits every ordered set partition of `domain` with at most
/// `max_classes` classes, each exactly once; the visitor returns false to
/// stop. Returns false iff stopped.
bool for_each_weak_order(
    std::span<const Coalition> domain, int max_classes,
    const std::function<bool(const CoalitionalRanking&)>& visit);

/// All weak orders over all domains D with |D| <= bounds.max_domain and
/// class count <= bounds.max_classes, in a fixed deterministic order
/// (domains by size then canonical order, partitions by generation rank).
/// Includes the empty-domain ranking.
bool for_each_ranking(
    const Roster& roster, const SearchBounds& bounds,
    const std::function<bool(const CoalitionalRanking&)>& visit);

/// Weak-order count on an n-element set (Fubini numbers), for tests and
/// budget estimates; capped class counts are handled by the enumerators.
uint64_t fubini(int n);

/// All |X|! bijections on roster indices, identity first.
bool for_each_roster_permutation(
    int n, const std::function<bool(std::span<const int>)>& visit);

/// All coalition permutations preserving the membership of x and of y,
/// generated as independent permutations of the four membership cells.
/// pi is indexed by coalition bits: pi[s] = image bits (pi[0] unused).
bool for_each_xy_invariant_permutation(
    const Roster& roster, int x, int y,
    const std::function<bool(std::span<const uint32_t>)>& visit);

/// Image of a ranking under an individual relabeling sigma.
CoalitionalRanking apply_sigma(const CoalitionalRanking& r,
                               std::span<const int> sigma);

/// Image of a ranking under a coalition permutation pi (indexed by bits).
CoalitionalRanking apply_pi(const CoalitionalRanking& r,
                            std::span<const uint32_t> pi);

/// Seeded deterministic generator of rankings within bounds; not uniform.
class RankingSampler {
public:
  RankingSampler(const Roster& roster, const SearchBounds& bounds);
  CoalitionalRanking next();

private:
  std::vector<Coalition> coalitions_;
  SearchBounds bounds_;
  std::mt19937_64 rng_;
};

}  // namespace socrank
