#include "socrank/solutions.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace socrank {

namespace {

constexpr std::array<SrsId, kSrsCount> kAll = {
    SrsId::L,       SrsId::SL,      SrsId::P,       SrsId::SP,
    SrsId::AP,      SrsId::CPM,     SrsId::IIS,     SrsId::DSL,
    SrsId::IDSL,    SrsId::SPLIT_L, SrsId::L_TB,    SrsId::SLNE,
    SrsId::SLNEH,   SrsId::SLUN,    SrsId::SUM,     SrsId::SSUM,
    SrsId::SUM_L,   SrsId::SSUM_SL, SrsId::SPLIT_P, SrsId::P_TB,
    SrsId::CONST_X, SrsId::DUAL_IIS};

Verdict from_ordering(Ordering o) {
  switch (o) {
    case Ordering::Greater: return Verdict::P;
    case Ordering::Less: return Verdict::InverseP;
    case Ordering::Equal: return Verdict::I;
  }
  return Verdict::I;
}

Verdict from_values(Rat x, Rat y) {
  if (x > y) return Verdict::P;
  if (x < y) return Verdict::InverseP;
  return Verdict::I;
}

Verdict tiebreak_verdict(const Roster& roster, int x, int y) {
  return roster.tiebreak_before(x, y) ? Verdict::P : Verdict::InverseP;
}

Rat first_entry(const ScoreVector& v) { return v.empty() ? Rat(0) : v.front(); }
Rat last_entry(const ScoreVector& v) { return v.empty() ? Rat(0) : v.back(); }

// Rat literals only: comparing boost::rational<long long> against an int
// picks the mixed-type operator template, which recurses on itself.
const Rat kZero(0), kOne(1);

bool has_common_zero(const ScoreVector& a, const ScoreVector& b) {
  for (size_t k = 0; k < a.size(); ++k)
    if (a[k] == kZero && b[k] == kZero) return true;
  return false;
}

// True when the common prefix of both-present entries ends with an entry
// where both individuals are absent.
bool ones_prefix_ends_in_common_zero(const ScoreVector& a,
                                     const ScoreVector& b) {
  for (size_t k = 0; k < a.size(); ++k) {
    if (a[k] == kOne && b[k] == kOne) continue;
    return a[k] == kZero && b[k] == kZero;
  }
  return false;
}

}  // namespace

std::span<const SrsId> all_srs() { return kAll; }

std::string_view srs_name(SrsId id) {
  switch (id) {
    case SrsId::L: return "L";
    case SrsId::SL: return "SL";
    case SrsId::P: return "P";
    case SrsId::SP: return "SP";
    case SrsId::AP: return "AP";
    case SrsId::CPM: return "CPM";
    case SrsId::IIS: return "IIS";
    case SrsId::DSL: return "DSL";
    case SrsId::IDSL: return "IDSL";
    case SrsId::SPLIT_L: return "SPLIT_L";
    case SrsId::L_TB: return "L_TB";
    case SrsId::SLNE: return "SLNE";
    case SrsId::SLNEH: return "SLNEH";
    case SrsId::SLUN: return "SLUN";
    case SrsId::SUM: return "SUM";
    case SrsId::SSUM: return "SSUM";
    case SrsId::SUM_L: return "SUM_L";
    case SrsId::SSUM_SL: return "SSUM_SL";
    case SrsId::SPLIT_P: return "SPLIT_P";
    case SrsId::P_TB: return "P_TB";
    case SrsId::CONST_X: return "CONST_X";
    case SrsId::DUAL_IIS: return "DUAL_IIS";
  }
  return "?";
}

std::optional<SrsId> srs_from_name(std::string_view name) {
  std::string upper(name);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  for (SrsId id : kAll)
    if (srs_name(id) == upper) return id;
  return std::nullopt;
}

Verdict compare(SrsId id, const Roster& roster, const CoalitionalRanking& r,
                int x, int y) {
  if (x == y) return Verdict::I;
  switch (id) {
    case SrsId::L:
      return from_ordering(lex_compare(theta(r, x), theta(r, y)));
    case SrsId::SL:
      return from_ordering(lex_compare(sign_theta(r, x), sign_theta(r, y)));
    case SrsId::P:
      return from_values(first_entry(theta(r, x)), first_entry(theta(r, y)));
    case SrsId::SP:
      return from_values(first_entry(sign_theta(r, x)),
                         first_entry(sign_theta(r, y)));
    case SrsId::AP:
      // Fewer appearances in the worst class is better.
      return from_values(last_entry(theta(r, y)), last_entry(theta(r, x)));
    case SrsId::CPM: {
      CpCounts c = cp_counts(roster.size(), r, x, y);
      return from_values(Rat(c.for_x), Rat(c.for_y));
    }
    case SrsId::IIS:
      return from_values(Rat(iis_depth(r, x)), Rat(iis_depth(r, y)));
    case SrsId::DSL:
      return from_ordering(
          dual_lex_compare(sign_theta(r, x), sign_theta(r, y)));
    case SrsId::IDSL:
      return flip(compare(SrsId::DSL, roster, r, x, y));
    case SrsId::SPLIT_L:
      return from_ordering(lex_compare(split_theta(r, x), split_theta(r, y)));
    case SrsId::L_TB: {
      Verdict base = compare(SrsId::L, roster, r, x, y);
      return base == Verdict::I ? tiebreak_verdict(roster, x, y) : base;
    }
    case SrsId::SLNE: {
      ScoreVector a = sign_theta(r, x), b = sign_theta(r, y);
      if (a == b && has_common_zero(a, b)) return tiebreak_verdict(roster, x, y);
      return from_ordering(lex_compare(a, b));
    }
    case SrsId::SLNEH: {
      ScoreVector a = sign_theta(r, x), b = sign_theta(r, y);
      if (ones_prefix_ends_in_common_zero(a, b))
        return tiebreak_verdict(roster, x, y);
      return from_ordering(lex_compare(a, b));
    }
    case SrsId::SLUN:
      return from_ordering(lex_compare(tilde_theta(r, x), tilde_theta(r, y)));
    case SrsId::SUM:
      return from_values(Rat(sum_score(r, x)), Rat(sum_score(r, y)));
    case SrsId::SSUM:
      return from_values(Rat(sign_sum_score(r, x)), Rat(sign_sum_score(r, y)));
    case SrsId::SUM_L: {
      Verdict base = compare(SrsId::SUM, roster, r, x, y);
      return base == Verdict::I ? compare(SrsId::L, roster, r, x, y) : base;
    }
    case SrsId::SSUM_SL: {
      Verdict base = compare(SrsId::SSUM, roster, r, x, y);
      return base == Verdict::I ? compare(SrsId::SL, roster, r, x, y) : base;
    }
    case SrsId::SPLIT_P:
      return from_values(first_entry(split_theta(r, x)),
                         first_entry(split_theta(r, y)));
    case SrsId::P_TB: {
      Verdict base = compare(SrsId::P, roster, r, x, y);
      return base == Verdict::I ? tiebreak_verdict(roster, x, y) : base;
    }
    case SrsId::CONST_X:
      return Verdict::I;
    case SrsId::DUAL_IIS:
      // Mirror of IIS: lower depth in the bottom-segment intersections wins.
      return from_values(Rat(dual_iis_depth(r, y)), Rat(dual_iis_depth(r, x)));
  }
  throw std::invalid_argument("unknown SRS");
}

SocialRelation apply(SrsId id, const Roster& roster,
                     const CoalitionalRanking& r) {
  return SocialRelation::from_compare(
      roster.size(), [&](int x, int y) { return compare(id, roster, r, x, y); });
}

namespace {

std::string format_vector(const ScoreVector& v) {
  std::ostringstream os;
  os << '(';
  for (size_t k = 0; k < v.size(); ++k) {
    if (k) os << ',';
    os << v[k].numerator();
    if (v[k].denominator() != 1) os << '/' << v[k].denominator();
  }
  os << ')';
  return os.str();
}

std::optional<int> first_difference(const ScoreVector& a, const ScoreVector& b) {
  for (size_t k = 0; k < a.size(); ++k)
    if (a[k] != b[k]) return static_cast<int>(k) + 1;
  return std::nullopt;
}

}  // namespace

ExplanationTrace explain(SrsId id, const Roster& roster,
                         const CoalitionalRanking& r, int x, int y) {
  ExplanationTrace trace;
  trace.srs = id;
  trace.verdict = compare(id, roster, r, x, y);
  switch (id) {
    case SrsId::L:
    case SrsId::SUM:
    case SrsId::SUM_L:
    case SrsId::P:
    case SrsId::AP:
      trace.x_scores = theta(r, x);
      trace.y_scores = theta(r, y);
      break;
    case SrsId::SL:
    case SrsId::SP:
    case SrsId::DSL:
    case SrsId::IDSL:
    case SrsId::SLNE:
    case SrsId::SLNEH:
    case SrsId::SSUM:
    case SrsId::SSUM_SL:
      trace.x_scores = sign_theta(r, x);
      trace.y_scores = sign_theta(r, y);
      break;
    case SrsId::SPLIT_L:
    case SrsId::SPLIT_P:
      trace.x_scores = split_theta(r, x);
      trace.y_scores = split_theta(r, y);
      break;
    case SrsId::SLUN:
      trace.x_scores = tilde_theta(r, x);
      trace.y_scores = tilde_theta(r, y);
      break;
    case SrsId::CPM: {
      CpCounts c = cp_counts(roster.size(), r, x, y);
      trace.x_scores = {Rat(c.for_x)};
      trace.y_scores = {Rat(c.for_y)};
      break;
    }
    case SrsId::IIS:
      trace.x_scores = {Rat(iis_depth(r, x))};
      trace.y_scores = {Rat(iis_depth(r, y))};
      break;
    case SrsId::DUAL_IIS:
      trace.x_scores = {Rat(dual_iis_depth(r, x))};
      trace.y_scores = {Rat(dual_iis_depth(r, y))};
      break;
    case SrsId::L_TB:
      trace.x_scores = theta(r, x);
      trace.y_scores = theta(r, y);
      trace.tie_broken = trace.x_scores == trace.y_scores && x != y;
      break;
    case SrsId::P_TB:
      trace.x_scores = theta(r, x);
      trace.y_scores = theta(r, y);
      trace.tie_broken =
          first_entry(trace.x_scores) == first_entry(trace.y_scores) && x != y;
      break;
    case SrsId::CONST_X:
      break;
  }
  if (id == SrsId::SLNE)
    trace.tie_broken = trace.x_scores == trace.y_scores &&
                       has_common_zero(trace.x_scores, trace.y_scores) && x != y;
  if (id == SrsId::SLNEH)
    trace.tie_broken =
        ones_prefix_ends_in_common_zero(trace.x_scores, trace.y_scores) && x != y;
  trace.deciding_index = first_difference(trace.x_scores, trace.y_scores);

  std::ostringstream os;
  os << srs_name(id) << ": " << roster.name(x) << ' '
     << format_vector(trace.x_scores) << " vs " << roster.name(y) << ' '
     << format_vector(trace.y_scores);
  if (trace.deciding_index) os << ", first difference at index " << *trace.deciding_index;
  if (trace.tie_broken) os << ", tie broken by the roster order";
  os << " -> " << verdict_name(trace.verdict);
  trace.summary = os.str();
  return trace;
}

}  // namespace socrank
