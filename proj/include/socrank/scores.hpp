#pragma once

#include <boost/rational.hpp>
#include <cstdint>

#include "socrank/model.hpp"

namespace socrank {

using Rat = boost::rational<long long>;

/// One exact entry per equivalence class, best class first.
using ScoreVector = std::vector<Rat>;

/// Per-class appearance counts of `x`.
ScoreVector theta(const CoalitionalRanking& r, int x);

/// Per-class presence indicator (componentwise sign of theta).
ScoreVector sign_theta(const CoalitionalRanking& r, int x);

/// Per-class sum of 1/|S| over the coalitions of the class containing `x`.
ScoreVector split_theta(const CoalitionalRanking& r, int x);

/// Per-class entry in {0,1,2}: 2 when x is in every coalition of the
/// class, 1 when in some but not all, 0 when absent.
ScoreVector tilde_theta(const CoalitionalRanking& r, int x);

/// Total appearance count of x over the whole domain.
long long sum_score(const CoalitionalRanking& r, int x);

/// Number of classes in which x appears.
long long sign_sum_score(const CoalitionalRanking& r, int x);

/// Deepest k such that x lies in every coalition of the top k classes
/// (0 when x is missing from some coalition of the best class).
int iis_depth(const CoalitionalRanking& r, int x);

/// iis_depth of x under the ranking with class order reversed: depth of
/// membership in the intersections of the bottom segments. Higher = worse.
int dual_iis_depth(const CoalitionalRanking& r, int x);

struct CpCounts {
  int for_x = 0;  // comparisons S+x > S+y
  int for_y = 0;  // comparisons S+y > S+x
};

/// Counts of ceteris-paribus comparisons between x and y over all
/// teammate sets S subseteq X\{x,y}, including S = empty.
CpCounts cp_counts(int roster_size, const CoalitionalRanking& r, int x, int y);

enum class Ordering { Less, Equal, Greater };

/// Lexicographic comparison from the first entry; larger entries win.
Ordering lex_compare(const ScoreVector& a, const ScoreVector& b);

/// Bottom-up comparison: Greater when, at the last differing entry,
/// `a` is smaller (appearing less in the worst differing class is better).
Ordering dual_lex_compare(const ScoreVector& a, const ScoreVector& b);

}  // namespace socrank
