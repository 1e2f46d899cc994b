#include "socrank/sums.hpp"

#include <algorithm>

namespace socrank {

namespace {

std::vector<Coalition> merge_classes(const std::vector<Coalition>& a,
                                     const std::vector<Coalition>& b) {
  std::vector<Coalition> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

void require_disjoint(const CoalitionalRanking& a, const CoalitionalRanking& b) {
  if (!are_disjoint(a, b)) throw NotDisjointError{};
}

}  // namespace

bool are_disjoint(const CoalitionalRanking& a, const CoalitionalRanking& b) {
  auto da = a.domain();
  for (Coalition s : b.domain())
    if (std::binary_search(da.begin(), da.end(), s)) return false;
  return true;
}

CoalitionalRanking concat_sum(const CoalitionalRanking& a,
                              const CoalitionalRanking& b) {
  require_disjoint(a, b);
  std::vector<std::vector<Coalition>> classes = a.classes();
  classes.insert(classes.end(), b.classes().begin(), b.classes().end());
  return CoalitionalRanking(std::move(classes));
}

CoalitionalRanking top_aligned_sum(const CoalitionalRanking& a,
                                   const CoalitionalRanking& b) {
  require_disjoint(a, b);
  size_t l = a.classes().size(), m = b.classes().size();
  std::vector<std::vector<Coalition>> classes;
  for (size_t k = 0; k < std::max(l, m); ++k) {
    if (k < l && k < m)
      classes.push_back(merge_classes(a.classes()[k], b.classes()[k]));
    else if (k < l)
      classes.push_back(a.classes()[k]);
    else
      classes.push_back(b.classes()[k]);
  }
  return CoalitionalRanking(std::move(classes));
}

CoalitionalRanking bottom_aligned_sum(const CoalitionalRanking& a,
                                      const CoalitionalRanking& b) {
  require_disjoint(a, b);
  return top_aligned_sum(a.reversed(), b.reversed()).reversed();
}

namespace {

// Each sum interleaves the class sequences of the two parts, optionally
// merging one class of each at a step; recursion over the three choices.
bool visit_sums(const CoalitionalRanking& a, const CoalitionalRanking& b,
                size_t ia, size_t ib, std::vector<std::vector<Coalition>>& acc,
                const std::function<bool(const CoalitionalRanking&)>& visit) {
  size_t l = a.classes().size(), m = b.classes().size();
  if (ia == l && ib == m) return visit(CoalitionalRanking(acc));
  if (ia < l) {
    acc.push_back(a.classes()[ia]);
    bool keep = visit_sums(a, b, ia + 1, ib, acc, visit);
    acc.pop_back();
    if (!keep) return false;
  }
  if (ib < m) {
    acc.push_back(b.classes()[ib]);
    bool keep = visit_sums(a, b, ia, ib + 1, acc, visit);
    acc.pop_back();
    if (!keep) return false;
  }
  if (ia < l && ib < m) {
    acc.push_back(merge_classes(a.classes()[ia], b.classes()[ib]));
    bool keep = visit_sums(a, b, ia + 1, ib + 1, acc, visit);
    acc.pop_back();
    if (!keep) return false;
  }
  return true;
}

}  // namespace

bool for_each_sum(const CoalitionalRanking& a, const CoalitionalRanking& b,
                  const std::function<bool(const CoalitionalRanking&)>& visit) {
  require_disjoint(a, b);
  std::vector<std::vector<Coalition>> acc;
  return visit_sums(a, b, 0, 0, acc, visit);
}

std::vector<CoalitionalRanking> all_sums(const CoalitionalRanking& a,
                                         const CoalitionalRanking& b) {
  std::vector<CoalitionalRanking> out;
  for_each_sum(a, b, [&](const CoalitionalRanking& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

bool is_sum_of(const CoalitionalRanking& sum, const CoalitionalRanking& a,
               const CoalitionalRanking& b) {
  if (!are_disjoint(a, b)) return false;
  auto da = a.domain(), db = b.domain();
  if (sum.domain_size() != static_cast<int>(da.size() + db.size()))
    return false;
  return sum.restricted(da) == a && sum.restricted(db) == b;
}

}  // namespace socrank
