#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "socrank/model.hpp"

namespace socrank {

struct NotDisjointError : std::invalid_argument {
  NotDisjointError() : std::invalid_argument("rankings share a coalition") {}
};

bool are_disjoint(const CoalitionalRanking& a, const CoalitionalRanking& b);

/// Every class of `a` ranked above every class of `b`.
CoalitionalRanking concat_sum(const CoalitionalRanking& a,
                              const CoalitionalRanking& b);

/// Classes merged pairwise from the best class downwards; the longer
/// ranking's tail follows unchanged.
CoalitionalRanking top_aligned_sum(const CoalitionalRanking& a,
                                   const CoalitionalRanking& b);

/// Classes merged pairwise from the worst class upwards; the longer
/// ranking's head leads unchanged.
CoalitionalRanking bottom_aligned_sum(const CoalitionalRanking& a,
                                      const CoalitionalRanking& b);

/// Visits every weak order on the union domain that restricts to `a` and
/// to `b`, each exactly once, in a fixed deterministic order. The visitor
/// returns false to stop early; for_each_sum returns false iff stopped.
bool for_each_sum(const CoalitionalRanking& a, const CoalitionalRanking& b,
                  const std::function<bool(const CoalitionalRanking&)>& visit);

std::vector<CoalitionalRanking> all_sums(const CoalitionalRanking& a,
                                         const CoalitionalRanking& b);

/// True iff `sum` restricts to `a` over D(a) and to `b` over D(b) and has
/// domain D(a) union D(b).
bool is_sum_of(const CoalitionalRanking& sum, const CoalitionalRanking& a,
               const CoalitionalRanking& b);

}  // namespace socrank
