#include "socrank/enumeration.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace socrank {

std::vector<Coalition> all_coalitions(const Roster& roster) {
  std::vector<Coalition> out;
  uint32_t full = (1u << roster.size()) - 1;
  for (uint32_t bits = 1; bits <= full; ++bits) out.emplace_back(bits);
  std::sort(out.begin(), out.end(), [&](Coalition a, Coalition b) {
    return canonical_key(roster, a) < canonical_key(roster, b);
  });
  return out;
}

namespace {

// First equivalence class = any nonempty subset of the remaining domain,
// then recurse on the rest.
bool visit_partitions(std::span<const Coalition> domain, uint32_t remaining,
                      int classes_left,
                      std::vector<std::vector<Coalition>>& acc,
                      const std::function<bool(const CoalitionalRanking&)>& visit) {
  if (remaining == 0) return visit(CoalitionalRanking(acc));
  if (classes_left == 0) return true;
  for (uint32_t sub = remaining; sub; sub = (sub - 1) & remaining) {
    std::vector<Coalition> cls;
    for (uint32_t rest = sub; rest; rest &= rest - 1)
      cls.push_back(domain[static_cast<size_t>(std::countr_zero(rest))]);
    acc.push_back(std::move(cls));
    bool keep =
        visit_partitions(domain, remaining & ~sub, classes_left - 1, acc, visit);
    acc.pop_back();
    if (!keep) return false;
  }
  return true;
}

}  // namespace

bool for_each_weak_order(
    std::span<const Coalition> domain, int max_classes,
    const std::function<bool(const CoalitionalRanking&)>& visit) {
  uint32_t remaining = domain.empty()
                           ? 0u
                           : (domain.size() >= 32
                                  ? ~0u
                                  : (1u << domain.size()) - 1);
  std::vector<std::vector<Coalition>> acc;
  return visit_partitions(domain, remaining, max_classes, acc, visit);
}

namespace {

// Size-ascending combinations of indices [0, m); each combination is
// emitted in ascending index order.
bool visit_combinations(int m, int max_size,
                        const std::function<bool(std::span<const int>)>& visit) {
  std::vector<int> pick;
  if (!visit(pick)) return false;
  for (int d = 1; d <= std::min(m, max_size); ++d) {
    pick.assign(static_cast<size_t>(d), 0);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      if (!visit(pick)) return false;
      int i = d - 1;
      while (i >= 0 && pick[static_cast<size_t>(i)] == m - d + i) --i;
      if (i < 0) break;
      ++pick[static_cast<size_t>(i)];
      for (int j = i + 1; j < d; ++j)
        pick[static_cast<size_t>(j)] = pick[static_cast<size_t>(j - 1)] + 1;
    }
  }
  return true;
}

}  // namespace

bool for_each_ranking(
    const Roster& roster, const SearchBounds& bounds,
    const std::function<bool(const CoalitionalRanking&)>& visit) {
  std::vector<Coalition> coalitions = all_coalitions(roster);
  int m = static_cast<int>(coalitions.size());
  return visit_combinations(m, bounds.max_domain, [&](std::span<const int> pick) {
    std::vector<Coalition> domain;
    domain.reserve(pick.size());
    for (int i : pick) domain.push_back(coalitions[static_cast<size_t>(i)]);
    return for_each_weak_order(domain, bounds.max_classes, visit);
  });
}

uint64_t fubini(int n) {
  std::vector<uint64_t> a(static_cast<size_t>(n) + 1, 0);
  a[0] = 1;
  for (int k = 1; k <= n; ++k) {
    uint64_t binom = 1;
    for (int j = 1; j <= k; ++j) {
      binom = binom * static_cast<uint64_t>(k - j + 1) / static_cast<uint64_t>(j);
      a[static_cast<size_t>(k)] += binom * a[static_cast<size_t>(k - j)];
    }
  }
  return a[static_cast<size_t>(n)];
}

bool for_each_roster_permutation(
    int n, const std::function<bool(std::span<const int>)>& visit) {
  std::vector<int> sigma(static_cast<size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    if (!visit(sigma)) return false;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return true;
}

namespace {

// Recurse over the four membership cells, permuting each independently.
bool visit_cell_permutations(
    std::vector<std::vector<uint32_t>>& cells, size_t k,
    std::vector<uint32_t>& pi,
    const std::vector<std::vector<uint32_t>>& originals,
    const std::function<bool(std::span<const uint32_t>)>& visit) {
  if (k == cells.size()) return visit(pi);
  std::vector<uint32_t>& cell = cells[k];
  const std::vector<uint32_t>& orig = originals[k];
  do {
    for (size_t i = 0; i < cell.size(); ++i) pi[orig[i]] = cell[i];
    if (!visit_cell_permutations(cells, k + 1, pi, originals, visit))
      return false;
  } while (std::next_permutation(cell.begin(), cell.end()));
  return true;
}

}  // namespace

bool for_each_xy_invariant_permutation(
    const Roster& roster, int x, int y,
    const std::function<bool(std::span<const uint32_t>)>& visit) {
  uint32_t bx = 1u << x, by = 1u << y;
  uint32_t full = (1u << roster.size()) - 1;
  std::vector<std::vector<uint32_t>> cells(4);
  for (uint32_t s = 1; s <= full; ++s) {
    size_t cell = (s & bx ? 1u : 0u) | (s & by ? 2u : 0u);
    cells[cell].push_back(s);
  }
  for (auto& cell : cells) std::sort(cell.begin(), cell.end());
  std::vector<std::vector<uint32_t>> originals = cells;
  std::vector<uint32_t> pi(static_cast<size_t>(full) + 1, 0);
  for (uint32_t s = 1; s <= full; ++s) pi[s] = s;
  return visit_cell_permutations(cells, 0, pi, originals, visit);
}

CoalitionalRanking apply_sigma(const CoalitionalRanking& r,
                               std::span<const int> sigma) {
  std::vector<std::vector<Coalition>> classes;
  classes.reserve(r.classes().size());
  for (const auto& cls : r.classes()) {
    std::vector<Coalition> image;
    image.reserve(cls.size());
    for (Coalition s : cls) {
      uint32_t bits = 0;
      for (int i : s.members()) bits |= 1u << sigma[static_cast<size_t>(i)];
      image.emplace_back(bits);
    }
    classes.push_back(std::move(image));
  }
  return CoalitionalRanking(std::move(classes));
}

CoalitionalRanking apply_pi(const CoalitionalRanking& r,
                            std::span<const uint32_t> pi) {
  std::vector<std::vector<Coalition>> classes;
  classes.reserve(r.classes().size());
  for (const auto& cls : r.classes()) {
    std::vector<Coalition> image;
    image.reserve(cls.size());
    for (Coalition s : cls) image.emplace_back(pi[s.bits()]);
    classes.push_back(std::move(image));
  }
  return CoalitionalRanking(std::move(classes));
}

RankingSampler::RankingSampler(const Roster& roster, const SearchBounds& bounds)
    : coalitions_(all_coalitions(roster)), bounds_(bounds), rng_(bounds.seed) {}

CoalitionalRanking RankingSampler::next() {
  int m = static_cast<int>(coalitions_.size());
  int d = std::uniform_int_distribution<int>(
      0, std::min(bounds_.max_domain, m))(rng_);
  if (d == 0) return CoalitionalRanking{};
  std::vector<Coalition> pool = coalitions_;
  std::shuffle(pool.begin(), pool.end(), rng_);
  pool.erase(pool.begin() + d, pool.end());
  int classes = std::uniform_int_distribution<int>(
      1, std::min(d, bounds_.max_classes))(rng_);
  std::vector<std::vector<Coalition>> cls(static_cast<size_t>(classes));
  // Seed one coalition per class, then scatter the rest.
  for (int k = 0; k < classes; ++k) cls[static_cast<size_t>(k)].push_back(pool[static_cast<size_t>(k)]);
  for (int i = classes; i < d; ++i)
    cls[static_cast<size_t>(std::uniform_int_distribution<int>(0, classes - 1)(
            rng_))].push_back(pool[static_cast<size_t>(i)]);
  return CoalitionalRanking(std::move(cls));
}

}  // namespace socrank
