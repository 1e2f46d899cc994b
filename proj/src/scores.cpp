#include "socrank/scores.hpp"

#include <stdexcept>

namespace socrank {

ScoreVector theta(const CoalitionalRanking& r, int x) {
  ScoreVector out;
  out.reserve(static_cast<size_t>(r.class_count()));
  for (const auto& cls : r.classes()) {
    long long count = 0;
    for (Coalition s : cls)
      if (s.contains(x)) ++count;
    out.emplace_back(count);
  }
  return out;
}

ScoreVector sign_theta(const CoalitionalRanking& r, int x) {
  ScoreVector out;
  out.reserve(static_cast<size_t>(r.class_count()));
  for (const auto& cls : r.classes()) {
    bool present = false;
    for (Coalition s : cls)
      if (s.contains(x)) { present = true; break; }
    out.emplace_back(present ? 1 : 0);
  }
  return out;
}

ScoreVector split_theta(const CoalitionalRanking& r, int x) {
  ScoreVector out;
  out.reserve(static_cast<size_t>(r.class_count()));
  for (const auto& cls : r.classes()) {
    Rat total(0);
    for (Coalition s : cls)
      if (s.contains(x)) total += Rat(1, s.size());
    out.push_back(total);
  }
  return out;
}

ScoreVector tilde_theta(const CoalitionalRanking& r, int x) {
  ScoreVector out;
  out.reserve(static_cast<size_t>(r.class_count()));
  for (const auto& cls : r.classes()) {
    size_t count = 0;
    for (Coalition s : cls)
      if (s.contains(x)) ++count;
    long long entry = count == 0 ? 0 : (count == cls.size() ? 2 : 1);
    out.emplace_back(entry);
  }
  return out;
}

long long sum_score(const CoalitionalRanking& r, int x) {
  long long total = 0;
  for (const auto& cls : r.classes())
    for (Coalition s : cls)
      if (s.contains(x)) ++total;
  return total;
}

long long sign_sum_score(const CoalitionalRanking& r, int x) {
  long long total = 0;
  for (const auto& cls : r.classes())
    for (Coalition s : cls)
      if (s.contains(x)) { ++total; break; }
  return total;
}

int iis_depth(const CoalitionalRanking& r, int x) {
  int depth = 0;
  for (const auto& cls : r.classes()) {
    for (Coalition s : cls)
      if (!s.contains(x)) return depth;
    ++depth;
  }
  return depth;
}

int dual_iis_depth(const CoalitionalRanking& r, int x) {
  int depth = 0;
  const auto& classes = r.classes();
  for (auto it = classes.rbegin(); it != classes.rend(); ++it) {
    for (Coalition s : *it)
      if (!s.contains(x)) return depth;
    ++depth;
  }
  return depth;
}

CpCounts cp_counts(int roster_size, const CoalitionalRanking& r, int x, int y) {
  if (x == y) throw std::invalid_argument("cp_counts needs distinct individuals");
  CpCounts counts;
  uint32_t others = ((1u << roster_size) - 1u) & ~(1u << x) & ~(1u << y);
  // Iterate all S subseteq X\{x,y}, including S = empty.
  uint32_t s = 0;
  while (true) {
    Coalition with_x(s | (1u << x));
    Coalition with_y(s | (1u << y));
    auto kx = r.class_index(with_x);
    auto ky = r.class_index(with_y);
    if (kx && ky) {
      if (*kx < *ky) ++counts.for_x;
      else if (*ky < *kx) ++counts.for_y;
    }
    if (s == others) break;
    s = (s - others) & others;  // next subset
  }
  return counts;
}

Ordering lex_compare(const ScoreVector& a, const ScoreVector& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("score vectors differ in length");
  for (size_t k = 0; k < a.size(); ++k) {
    if (a[k] > b[k]) return Ordering::Greater;
    if (a[k] < b[k]) return Ordering::Less;
  }
  return Ordering::Equal;
}

Ordering dual_lex_compare(const ScoreVector& a, const ScoreVector& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("score vectors differ in length");
  for (size_t k = a.size(); k-- > 0;) {
    if (a[k] < b[k]) return Ordering::Greater;
    if (a[k] > b[k]) return Ordering::Less;
  }
  return Ordering::Equal;
}

}  // namespace socrank
