#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace socrank {

/// The fixed individual set together with its tie-break linear order.
/// Individuals are addressed by index into `names`; the tie-break order
/// defaults to the listing order (index 0 has the highest priority).
class Roster {
public:
  static Roster of(std::vector<std::string> names,
                   std::vector<std::string> tiebreak = {});

  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int i) const { return names_[static_cast<size_t>(i)]; }

  /// Index of a named individual, or -1 if absent.
  int index(std::string_view name) const;

  /// Rank of individual `i` in the tie-break order (0 = highest priority).
  int priority(int i) const { return priority_[static_cast<size_t>(i)]; }

  /// True iff `a` precedes `b` in the tie-break order.
  bool tiebreak_before(int a, int b) const { return priority(a) < priority(b); }

private:
  std::vector<std::string> names_;
  std::vector<int> priority_;  // priority_[index] = rank in tie-break order
};

/// A nonempty subset of the roster, stored as a bitset over roster indices.
class Coalition {
public:
  explicit Coalition(uint32_t bits);
  static Coalition of(const Roster& roster,
                      std::initializer_list<std::string_view> members);

  uint32_t bits() const { return bits_; }
  bool contains(int i) const { return (bits_ >> i) & 1u; }
  int size() const;
  std::vector<int> members() const;

  friend bool operator==(Coalition a, Coalition b) { return a.bits_ == b.bits_; }
  friend bool operator<(Coalition a, Coalition b) { return a.bits_ < b.bits_; }

private:
  uint32_t bits_;
};

/// Key under which coalitions sort canonically for a given roster: the
/// singleton of the highest-priority individual comes first.
uint64_t canonical_key(const Roster& roster, Coalition s);

enum class ValidationError {
  EmptyClass,
  DuplicateCoalition,
  ForeignMember,
};

struct ValidationResult {
  std::optional<ValidationError> error;
  std::string detail;
  bool ok() const { return !error.has_value(); }
};

/// A weak order over a domain of coalitions, stored as its ordered
/// equivalence classes (best class first). Zero classes encode the
/// empty-domain ranking.
class CoalitionalRanking {
public:
  CoalitionalRanking() = default;
  explicit CoalitionalRanking(std::vector<std::vector<Coalition>> classes);

  const std::vector<std::vector<Coalition>>& classes() const { return classes_; }
  int class_count() const { return static_cast<int>(classes_.size()); }
  bool empty_domain() const { return classes_.empty(); }

  /// All coalitions of the domain, sorted.
  std::vector<Coalition> domain() const;
  int domain_size() const;
  bool domain_contains(Coalition s) const;

  /// 1-based class index of `s`, or nullopt if `s` is outside the domain.
  std::optional<int> class_index(Coalition s) const;

  /// Restriction to the coalitions in `keep`; classes that become empty
  /// are dropped.
  CoalitionalRanking restricted(std::span<const Coalition> keep) const;

  /// The ranking with class order flipped (worst class first).
  CoalitionalRanking reversed() const;

  friend bool operator==(const CoalitionalRanking& a,
                         const CoalitionalRanking& b) {
    return a.classes_ == b.classes_;
  }

private:
  std::vector<std::vector<Coalition>> classes_;  // each class sorted
};

ValidationResult validate(const Roster& roster, const CoalitionalRanking& r);

enum class Verdict {
  P,         // first argument strictly better
  InverseP,  // second argument strictly better
  I,         // indifferent
};

Verdict flip(Verdict v);
std::string_view verdict_name(Verdict v);

/// A reflexive, complete (not necessarily transitive) binary relation on
/// the roster, stored as pairwise verdicts.
class SocialRelation {
public:
  explicit SocialRelation(int n);

  template <typename Fn>  // Fn: (int x, int y) -> Verdict, called for x < y
  static SocialRelation from_compare(int n, Fn&& fn) {
    SocialRelation rel(n);
    for (int x = 0; x < n; ++x)
      for (int y = x + 1; y < n; ++y) rel.set(x, y, fn(x, y));
    return rel;
  }

  int size() const { return n_; }
  bool related(int x, int y) const;  // xRy
  Verdict parts(int x, int y) const;
  void set(int x, int y, Verdict v);

  bool is_weak_order() const;  // checks transitivity of R

  /// Equivalence classes from best to worst, when the relation is a weak
  /// order; nullopt otherwise.
  std::optional<std::vector<std::vector<int>>> as_ordered_partition() const;

  friend bool operator==(const SocialRelation& a, const SocialRelation& b) {
    return a.n_ == b.n_ && a.r_ == b.r_;
  }

private:
  int n_;
  std::vector<uint8_t> r_;  // r_[x * n_ + y] = xRy
};

}  // namespace socrank
