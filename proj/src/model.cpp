#include "socrank/model.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <stdexcept>

namespace socrank {

Roster Roster::of(std::vector<std::string> names,
                  std::vector<std::string> tiebreak) {
  if (names.size() < 3)
    throw std::invalid_argument("roster needs at least 3 individuals");
  if (names.size() > 16) throw std::invalid_argument("roster too large");
  std::set<std::string> seen(names.begin(), names.end());
  if (seen.size() != names.size())
    throw std::invalid_argument("duplicate individual in roster");

  Roster r;
  r.names_ = std::move(names);
  r.priority_.assign(r.names_.size(), -1);
  if (tiebreak.empty()) {
    for (size_t i = 0; i < r.names_.size(); ++i)
      r.priority_[i] = static_cast<int>(i);
  } else {
    if (tiebreak.size() != r.names_.size())
      throw std::invalid_argument("tiebreak must list every roster member once");
    for (size_t rank = 0; rank < tiebreak.size(); ++rank) {
      int idx = r.index(tiebreak[rank]);
      if (idx < 0) throw std::invalid_argument("tiebreak names unknown individual");
      if (r.priority_[static_cast<size_t>(idx)] != -1)
        throw std::invalid_argument("tiebreak repeats an individual");
      r.priority_[static_cast<size_t>(idx)] = static_cast<int>(rank);
    }
  }
  return r;
}

int Roster::index(std::string_view name) const {
  for (size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

Coalition::Coalition(uint32_t bits) : bits_(bits) {
  if (bits == 0) throw std::invalid_argument("coalition must be nonempty");
}

Coalition Coalition::of(const Roster& roster,
                        std::initializer_list<std::string_view> members) {
  uint32_t bits = 0;
  for (auto m : members) {
    int idx = roster.index(m);
    if (idx < 0) throw std::invalid_argument("coalition member not in roster");
    bits |= 1u << idx;
  }
  return Coalition(bits);
}

int Coalition::size() const { return std::popcount(bits_); }

std::vector<int> Coalition::members() const {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i)
    if ((bits_ >> i) & 1u) out.push_back(i);
  return out;
}

uint64_t canonical_key(const Roster& roster, Coalition s) {
  uint64_t key = 0;
  for (int i = 0; i < roster.size(); ++i)
    if (s.contains(i)) key |= uint64_t{1} << roster.priority(i);
  return key;
}

CoalitionalRanking::CoalitionalRanking(
    std::vector<std::vector<Coalition>> classes)
    : classes_(std::move(classes)) {
  for (auto& cls : classes_) std::sort(cls.begin(), cls.end());
}

std::vector<Coalition> CoalitionalRanking::domain() const {
  std::vector<Coalition> out;
  for (const auto& cls : classes_) out.insert(out.end(), cls.begin(), cls.end());
  std::sort(out.begin(), out.end());
  return out;
}

int CoalitionalRanking::domain_size() const {
  int n = 0;
  for (const auto& cls : classes_) n += static_cast<int>(cls.size());
  return n;
}

bool CoalitionalRanking::domain_contains(Coalition s) const {
  return class_index(s).has_value();
}

std::optional<int> CoalitionalRanking::class_index(Coalition s) const {
  for (size_t k = 0; k < classes_.size(); ++k) {
    const auto& cls = classes_[k];
    if (std::binary_search(cls.begin(), cls.end(), s))
      return static_cast<int>(k) + 1;
  }
  return std::nullopt;
}

CoalitionalRanking CoalitionalRanking::restricted(
    std::span<const Coalition> keep) const {
  std::vector<Coalition> sorted(keep.begin(), keep.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::vector<Coalition>> out;
  for (const auto& cls : classes_) {
    std::vector<Coalition> kept;
    for (Coalition s : cls)
      if (std::binary_search(sorted.begin(), sorted.end(), s)) kept.push_back(s);
    if (!kept.empty()) out.push_back(std::move(kept));
  }
  return CoalitionalRanking(std::move(out));
}

CoalitionalRanking CoalitionalRanking::reversed() const {
  std::vector<std::vector<Coalition>> out(classes_.rbegin(), classes_.rend());
  return CoalitionalRanking(std::move(out));
}

ValidationResult validate(const Roster& roster, const CoalitionalRanking& r) {
  uint32_t roster_mask =
      roster.size() >= 32 ? ~0u : ((1u << roster.size()) - 1u);
  std::set<uint32_t> seen;
  for (const auto& cls : r.classes()) {
    if (cls.empty()) return {ValidationError::EmptyClass, "empty class"};
    for (Coalition s : cls) {
      if (s.bits() & ~roster_mask)
        return {ValidationError::ForeignMember, "coalition member not in roster"};
      if (!seen.insert(s.bits()).second)
        return {ValidationError::DuplicateCoalition,
                "coalition appears more than once"};
    }
  }
  return {};
}

Verdict flip(Verdict v) {
  switch (v) {
    case Verdict::P: return Verdict::InverseP;
    case Verdict::InverseP: return Verdict::P;
    case Verdict::I: return Verdict::I;
  }
  return Verdict::I;
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::P: return "P";
    case Verdict::InverseP: return "P^-1";
    case Verdict::I: return "I";
  }
  return "?";
}

SocialRelation::SocialRelation(int n) : n_(n), r_(static_cast<size_t>(n) * n, 1) {}

bool SocialRelation::related(int x, int y) const {
  return r_[static_cast<size_t>(x) * n_ + y] != 0;
}

Verdict SocialRelation::parts(int x, int y) const {
  if (x == y) return Verdict::I;
  bool xy = related(x, y), yx = related(y, x);
  if (xy && yx) return Verdict::I;
  return xy ? Verdict::P : Verdict::InverseP;
}

void SocialRelation::set(int x, int y, Verdict v) {
  r_[static_cast<size_t>(x) * n_ + y] = v != Verdict::InverseP;
  r_[static_cast<size_t>(y) * n_ + x] = v != Verdict::P;
}

bool SocialRelation::is_weak_order() const {
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y)
      for (int z = 0; z < n_; ++z)
        if (related(x, y) && related(y, z) && !related(x, z)) return false;
  return true;
}

std::optional<std::vector<std::vector<int>>>
SocialRelation::as_ordered_partition() const {
  if (!is_weak_order()) return std::nullopt;
  // Score each individual by how many others it strictly beats; within a
  // weak order this sorts the equivalence classes.
  std::vector<int> beats(static_cast<size_t>(n_), 0);
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y)
      if (x != y && parts(x, y) == Verdict::P) ++beats[static_cast<size_t>(x)];
  std::map<int, std::vector<int>, std::greater<>> by_score;
  for (int x = 0; x < n_; ++x) by_score[beats[static_cast<size_t>(x)]].push_back(x);
  std::vector<std::vector<int>> out;
  for (auto& [score, members] : by_score) out.push_back(std::move(members));
  return out;
}

}  // namespace socrank
