#include "socrank/axioms.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <chrono>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>

namespace socrank {

namespace {

constexpr std::array<AxiomId, kAxiomCount> kAll = {
    AxiomId::CON,     AxiomId::CCON,    AxiomId::TCON,    AxiomId::BCON,
    AxiomId::II_CCON, AxiomId::IP_CCON, AxiomId::PI_CCON, AxiomId::PP_CCON,
    AxiomId::NT,      AxiomId::WCA,     AxiomId::IDWS,    AxiomId::IAWS,
    AxiomId::TO,      AxiomId::AIAW,    AxiomId::WUVIP};

}  // namespace

std::span<const AxiomId> all_axioms() { return kAll; }

std::string_view axiom_name(AxiomId id) {
  switch (id) {
    case AxiomId::CON: return "CON";
    case AxiomId::CCON: return "CCON";
    case AxiomId::TCON: return "TCON";
    case AxiomId::BCON: return "BCON";
    case AxiomId::II_CCON: return "II-CCON";
    case AxiomId::IP_CCON: return "IP-CCON";
    case AxiomId::PI_CCON: return "PI-CCON";
    case AxiomId::PP_CCON: return "PP-CCON";
    case AxiomId::NT: return "NT";
    case AxiomId::WCA: return "WCA";
    case AxiomId::IDWS: return "IDWS";
    case AxiomId::IAWS: return "IAWS";
    case AxiomId::TO: return "TO";
    case AxiomId::AIAW: return "AIAW";
    case AxiomId::WUVIP: return "WUVIP";
  }
  return "?";
}

std::optional<AxiomId> axiom_from_name(std::string_view name) {
  std::string upper(name);
  for (char& c : upper) {
    c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (c == '_') c = '-';
  }
  for (AxiomId id : kAll) {
    std::string canonical(axiom_name(id));
    if (canonical == upper) return id;
  }
  return std::nullopt;
}

std::string_view audit_status_name(AuditStatus s) {
  switch (s) {
    case AuditStatus::PassUpToBounds: return "pass_up_to_bounds";
    case AuditStatus::Violated: return "violated";
    case AuditStatus::BoundsTooLarge: return "bounds_too_large";
  }
  return "?";
}

namespace {

// Consistency clause applicable to the ordered pair with part verdicts
// (v1, v2); 0 when the pair premises no clause in this orientation.
int applicable_clause(Verdict v1, Verdict v2) {
  if (v1 == Verdict::I && v2 == Verdict::I) return 1;
  if (v1 == Verdict::I && v2 == Verdict::P) return 2;
  if (v1 == Verdict::P && v2 == Verdict::I) return 3;
  if (v1 == Verdict::P && v2 == Verdict::P) return 4;
  return 0;
}

bool clause_violated(int clause, Verdict sum_verdict) {
  return clause == 1 ? sum_verdict != Verdict::I : sum_verdict != Verdict::P;
}

std::string pair_verdicts(const Roster& roster, int x, int y, Verdict v1,
                          Verdict v2, Verdict vs) {
  std::ostringstream os;
  const std::string &nx = roster.name(x), &ny = roster.name(y);
  os << nx << ' ' << verdict_name(v1) << "_1 " << ny << ", " << nx << ' '
     << verdict_name(v2) << "_2 " << ny << ", " << nx << ' '
     << verdict_name(vs) << "_sum " << ny;
  return os.str();
}

uint32_t domain_union_bits(const CoalitionalRanking& r) {
  uint32_t u = 0;
  for (const auto& cls : r.classes())
    for (Coalition s : cls) u |= s.bits();
  return u;
}

}  // namespace

std::optional<Witness> check_consistency_instance(
    SrsId srs, const Roster& roster, const CoalitionalRanking& r1,
    const CoalitionalRanking& r2, const CoalitionalRanking& sum, int x,
    int y) {
  if (!is_sum_of(sum, r1, r2)) throw NotASumError{};
  for (auto [a, b] : {std::pair{x, y}, std::pair{y, x}}) {
    Verdict v1 = compare(srs, roster, r1, a, b);
    Verdict v2 = compare(srs, roster, r2, a, b);
    int clause = applicable_clause(v1, v2);
    if (clause == 0) continue;
    Verdict vs = compare(srs, roster, sum, a, b);
    if (!clause_violated(clause, vs)) continue;
    Witness w;
    w.srs = srs;
    w.rankings = {r1, r2};
    w.sum = sum;
    w.x = a;
    w.y = b;
    w.clause = clause;
    w.observed = pair_verdicts(roster, a, b, v1, v2, vs);
    return w;
  }
  return std::nullopt;
}

std::optional<Witness> check_nt_instance(SrsId srs, const Roster& roster,
                                         const CoalitionalRanking& r,
                                         std::span<const int> sigma) {
  if (static_cast<int>(sigma.size()) != roster.size())
    throw std::invalid_argument("sigma must permute the whole roster");
  CoalitionalRanking image = apply_sigma(r, sigma);
  int n = roster.size();
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      Verdict v = compare(srs, roster, r, x, y);
      Verdict vi = compare(srs, roster, image, sigma[static_cast<size_t>(x)],
                           sigma[static_cast<size_t>(y)]);
      if (v == vi) continue;
      Witness w;
      w.srs = srs;
      w.axiom = AxiomId::NT;
      w.rankings = {r};
      w.sigma = std::vector<int>(sigma.begin(), sigma.end());
      w.x = x;
      w.y = y;
      std::ostringstream os;
      os << roster.name(x) << ' ' << verdict_name(v) << ' ' << roster.name(y)
         << " before relabeling, "
         << roster.name(sigma[static_cast<size_t>(x)]) << ' '
         << verdict_name(vi) << ' '
         << roster.name(sigma[static_cast<size_t>(y)]) << " after";
      w.observed = os.str();
      return w;
    }
  return std::nullopt;
}

std::optional<Witness> check_wca_instance(SrsId srs, const Roster& roster,
                                          const CoalitionalRanking& r, int x,
                                          int y,
                                          std::span<const uint32_t> pi) {
  uint32_t full = (1u << roster.size()) - 1;
  if (pi.size() != static_cast<size_t>(full) + 1)
    throw std::invalid_argument("pi must map every coalition");
  uint32_t bx = 1u << x, by = 1u << y;
  for (uint32_t s = 1; s <= full; ++s) {
    uint32_t t = pi[s];
    if (t == 0 || t > full || (s & bx) != (t & bx) || (s & by) != (t & by))
      throw std::invalid_argument("pi is not {x,y}-invariant");
  }
  Verdict v = compare(srs, roster, r, x, y);
  Verdict vp = compare(srs, roster, apply_pi(r, pi), x, y);
  if (v == vp) return std::nullopt;
  Witness w;
  w.srs = srs;
  w.axiom = AxiomId::WCA;
  w.rankings = {r};
  w.pi = std::vector<uint32_t>(pi.begin(), pi.end());
  w.x = x;
  w.y = y;
  std::ostringstream os;
  os << roster.name(x) << ' ' << verdict_name(v) << ' ' << roster.name(y)
     << " before the coalition permutation, " << verdict_name(vp) << " after";
  w.observed = os.str();
  return w;
}

namespace {

// Shared body of IDWS and IAWS: strict verdicts of `r` must survive in `rp`.
std::optional<Witness> strict_preservation(SrsId srs, AxiomId axiom,
                                           const Roster& roster,
                                           const CoalitionalRanking& r,
                                           const CoalitionalRanking& rp) {
  int n = roster.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y || compare(srs, roster, r, x, y) != Verdict::P) continue;
      Verdict after = compare(srs, roster, rp, x, y);
      if (after == Verdict::P) continue;
      Witness w;
      w.srs = srs;
      w.axiom = axiom;
      w.rankings = {r, rp};
      w.x = x;
      w.y = y;
      std::ostringstream os;
      os << roster.name(x) << " P " << roster.name(y)
         << " before, " << verdict_name(after) << " after";
      w.observed = os.str();
      return w;
    }
  return std::nullopt;
}

}  // namespace

std::optional<Witness> check_idws_instance(
    SrsId srs, const Roster& roster, const CoalitionalRanking& r,
    const CoalitionalRanking& decomposed) {
  int l = r.class_count();
  if (l < 2) throw std::invalid_argument("IDWS needs at least two classes");
  if (decomposed.class_count() < l)
    throw std::invalid_argument("not a decomposition of the worst class");
  for (int k = 0; k + 1 < l; ++k)
    if (decomposed.classes()[static_cast<size_t>(k)] !=
        r.classes()[static_cast<size_t>(k)])
      throw std::invalid_argument("decomposition must keep the head classes");
  std::vector<Coalition> tail;
  for (size_t k = static_cast<size_t>(l) - 1;
       k < decomposed.classes().size(); ++k)
    for (Coalition s : decomposed.classes()[k]) tail.push_back(s);
  std::sort(tail.begin(), tail.end());
  if (tail != r.classes().back())
    throw std::invalid_argument("tail classes must partition the worst class");
  return strict_preservation(srs, AxiomId::IDWS, roster, r, decomposed);
}

std::optional<Witness> check_iaws_instance(
    SrsId srs, const Roster& roster, const CoalitionalRanking& r,
    const CoalitionalRanking& extended) {
  int l = r.class_count();
  if (extended.class_count() != l + 1)
    throw std::invalid_argument("extension must append exactly one class");
  for (int k = 0; k < l; ++k)
    if (extended.classes()[static_cast<size_t>(k)] !=
        r.classes()[static_cast<size_t>(k)])
      throw std::invalid_argument("extension must keep the existing classes");
  for (Coalition s : extended.classes().back())
    if (r.domain_contains(s))
      throw std::invalid_argument("appended class overlaps the domain");
  return strict_preservation(srs, AxiomId::IAWS, roster, r, extended);
}

std::optional<Witness> check_to_instance(SrsId srs, const Roster& roster,
                                         const CoalitionalRanking& r1,
                                         const CoalitionalRanking& r2) {
  if (r1.empty_domain() || r2.empty_domain() ||
      r1.classes().front() != r2.classes().front())
    throw std::invalid_argument("rankings must share their best class");
  int n = roster.size();
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      Verdict v1 = compare(srs, roster, r1, x, y);
      Verdict v2 = compare(srs, roster, r2, x, y);
      if (v1 == v2) continue;
      Witness w;
      w.srs = srs;
      w.axiom = AxiomId::TO;
      w.rankings = {r1, r2};
      w.x = x;
      w.y = y;
      std::ostringstream os;
      os << roster.name(x) << ' ' << verdict_name(v1) << ' ' << roster.name(y)
         << " under the first ranking, " << verdict_name(v2)
         << " under the second";
      w.observed = os.str();
      return w;
    }
  return std::nullopt;
}

std::optional<Witness> check_aiaw_instance(SrsId srs, const Roster& roster,
                                           const CoalitionalRanking& r) {
  if (r.class_count() > 1)
    throw std::invalid_argument("ranking is not all-indifferent");
  uint32_t u = domain_union_bits(r);
  int n = roster.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y || !((u >> x) & 1u)) continue;
      bool y_in = (u >> y) & 1u;
      if (y_in && y < x) continue;  // each participant pair once
      Verdict v = compare(srs, roster, r, x, y);
      bool bad = y_in ? v != Verdict::I : v != Verdict::P;
      if (!bad) continue;
      Witness w;
      w.srs = srs;
      w.axiom = AxiomId::AIAW;
      w.rankings = {r};
      w.x = x;
      w.y = y;
      std::ostringstream os;
      os << roster.name(x) << ' ' << verdict_name(v) << ' ' << roster.name(y)
         << (y_in ? " though both participate"
                  : " though only the former participates");
      w.observed = os.str();
      return w;
    }
  return std::nullopt;
}

std::optional<Witness> check_wuvip_instance(SrsId srs, const Roster& roster,
                                            const CoalitionalRanking& r) {
  if (r.class_count() != 2)
    throw std::invalid_argument("WUVIP needs exactly two classes");
  uint32_t u1 = 0;
  for (Coalition s : r.classes().front()) u1 |= s.bits();
  int n = roster.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y || !((u1 >> x) & 1u) || ((u1 >> y) & 1u)) continue;
      Verdict v = compare(srs, roster, r, x, y);
      if (v == Verdict::P) continue;
      Witness w;
      w.srs = srs;
      w.axiom = AxiomId::WUVIP;
      w.rankings = {r};
      w.x = x;
      w.y = y;
      std::ostringstream os;
      os << roster.name(x) << ' ' << verdict_name(v) << ' ' << roster.name(y)
         << " though only the former joins a best-class coalition";
      w.observed = os.str();
      return w;
    }
  return std::nullopt;
}

bool replay(const Roster& roster, const Witness& w) {
  switch (w.axiom) {
    case AxiomId::CON:
    case AxiomId::CCON:
    case AxiomId::TCON:
    case AxiomId::BCON:
    case AxiomId::II_CCON:
    case AxiomId::IP_CCON:
    case AxiomId::PI_CCON:
    case AxiomId::PP_CCON: {
      if (w.rankings.size() != 2 || !w.sum) return false;
      auto found = check_consistency_instance(w.srs, roster, w.rankings[0],
                                              w.rankings[1], *w.sum, w.x, w.y);
      return found && found->x == w.x && found->y == w.y &&
             found->clause == w.clause;
    }
    case AxiomId::NT: {
      if (w.rankings.size() != 1 || !w.sigma) return false;
      const auto& sigma = *w.sigma;
      CoalitionalRanking image = apply_sigma(w.rankings[0], sigma);
      return compare(w.srs, roster, w.rankings[0], w.x, w.y) !=
             compare(w.srs, roster, image, sigma[static_cast<size_t>(w.x)],
                     sigma[static_cast<size_t>(w.y)]);
    }
    case AxiomId::WCA:
      if (w.rankings.size() != 1 || !w.pi) return false;
      return compare(w.srs, roster, w.rankings[0], w.x, w.y) !=
             compare(w.srs, roster, apply_pi(w.rankings[0], *w.pi), w.x, w.y);
    case AxiomId::IDWS:
    case AxiomId::IAWS:
      if (w.rankings.size() != 2) return false;
      return compare(w.srs, roster, w.rankings[0], w.x, w.y) == Verdict::P &&
             compare(w.srs, roster, w.rankings[1], w.x, w.y) != Verdict::P;
    case AxiomId::TO:
      if (w.rankings.size() != 2) return false;
      return compare(w.srs, roster, w.rankings[0], w.x, w.y) !=
             compare(w.srs, roster, w.rankings[1], w.x, w.y);
    case AxiomId::AIAW: {
      if (w.rankings.size() != 1) return false;
      uint32_t u = domain_union_bits(w.rankings[0]);
      if (!((u >> w.x) & 1u)) return false;
      Verdict v = compare(w.srs, roster, w.rankings[0], w.x, w.y);
      return ((u >> w.y) & 1u) ? v != Verdict::I : v != Verdict::P;
    }
    case AxiomId::WUVIP: {
      if (w.rankings.size() != 1 || w.rankings[0].class_count() != 2)
        return false;
      uint32_t u1 = 0;
      for (Coalition s : w.rankings[0].classes().front()) u1 |= s.bits();
      if (!((u1 >> w.x) & 1u) || ((u1 >> w.y) & 1u)) return false;
      return compare(w.srs, roster, w.rankings[0], w.x, w.y) != Verdict::P;
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// Bounded audits
// ---------------------------------------------------------------------------

namespace {

using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                               start)
      .count();
}

uint64_t sat_mul(uint64_t a, uint64_t b) {
  if (a != 0 && b > std::numeric_limits<uint64_t>::max() / a)
    return std::numeric_limits<uint64_t>::max();
  return a * b;
}

uint64_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  uint64_t out = 1;
  for (int j = 1; j <= k; ++j)
    out = out * static_cast<uint64_t>(n - j + 1) / static_cast<uint64_t>(j);
  return out;
}

// Ordered set partitions of an n-set into at most c classes.
uint64_t fubini_capped(int n, int c) {
  std::vector<std::vector<uint64_t>> a(
      static_cast<size_t>(n) + 1, std::vector<uint64_t>(static_cast<size_t>(c) + 1, 0));
  for (int j = 0; j <= c; ++j) a[0][static_cast<size_t>(j)] = 1;
  for (int k = 1; k <= n; ++k)
    for (int j = 1; j <= c; ++j)
      for (int first = 1; first <= k; ++first)
        a[static_cast<size_t>(k)][static_cast<size_t>(j)] +=
            binom(k, first) * a[static_cast<size_t>(k - first)][static_cast<size_t>(j - 1)];
  return a[static_cast<size_t>(n)][static_cast<size_t>(c)];
}

// Ranking counts per domain size under the bounds.
std::vector<uint64_t> bucket_counts(int coalition_count,
                                    const SearchBounds& bounds) {
  int cap = std::min(bounds.max_domain, coalition_count);
  std::vector<uint64_t> cnt(static_cast<size_t>(cap) + 1, 0);
  for (int d = 0; d <= cap; ++d)
    cnt[static_cast<size_t>(d)] =
        binom(coalition_count, d) * fubini_capped(d, std::min(d == 0 ? 1 : d, bounds.max_classes));
  return cnt;
}

struct Pool {
  std::vector<CoalitionalRanking> rankings;
  std::vector<uint32_t> dmask;          // bit s.bits() set per domain member
  std::vector<size_t> size_begin;       // index of first ranking of size d
};

Pool build_pool(const Roster& roster, const SearchBounds& bounds) {
  Pool pool;
  pool.size_begin.assign(static_cast<size_t>(bounds.max_domain) + 2, 0);
  int last_size = -1;
  for_each_ranking(roster, bounds, [&](const CoalitionalRanking& r) {
    int d = r.domain_size();
    while (last_size < d) pool.size_begin[static_cast<size_t>(++last_size)] = pool.rankings.size();
    uint32_t mask = 0;
    for (const auto& cls : r.classes())
      for (Coalition s : cls) mask |= 1u << s.bits();
    pool.rankings.push_back(r);
    pool.dmask.push_back(mask);
    return true;
  });
  while (last_size <= bounds.max_domain)
    pool.size_begin[static_cast<size_t>(++last_size) ] = pool.rankings.size();
  return pool;
}

// Ordered-pair bitmasks of a relation: strict wins and mutual indifference.
struct PairMasks {
  uint32_t strict = 0;  // bit x*n+y set when x P y
  uint32_t indiff = 0;  // bits x*n+y and y*n+x set when x I y
};

PairMasks relation_masks(SrsId srs, const Roster& roster,
                         const CoalitionalRanking& r) {
  PairMasks m;
  int n = roster.size();
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      Verdict v = compare(srs, roster, r, x, y);
      uint32_t xy = 1u << (x * n + y), yx = 1u << (y * n + x);
      if (v == Verdict::P) m.strict |= xy;
      else if (v == Verdict::InverseP) m.strict |= yx;
      else m.indiff |= xy | yx;
    }
  return m;
}

struct AuditContext {
  SrsId srs;
  AxiomId axiom;
  const Roster& roster;
  SearchBounds bounds;
  AuditResult result;
  Clock::time_point start = Clock::now();

  AuditContext(SrsId s, AxiomId a, const Roster& ro, const SearchBounds& b)
      : srs(s), axiom(a), roster(ro), bounds(b) {
    result.srs = s;
    result.axiom = a;
    result.bounds = b;
  }

  AuditResult finish(AuditStatus status, std::optional<Witness> w = {}) {
    result.status = status;
    result.witness = std::move(w);
    if (result.witness) result.witness->axiom = axiom;
    result.elapsed_ms = ms_since(start);
    return std::move(result);
  }
};

// Clauses audited per consistency axiom, as a bitmask over clauses 1-4.
unsigned clause_set(AxiomId axiom) {
  switch (axiom) {
    case AxiomId::II_CCON: return 1u << 1;
    case AxiomId::IP_CCON: return 1u << 2;
    case AxiomId::PI_CCON: return 1u << 3;
    case AxiomId::PP_CCON: return 1u << 4;
    default: return (1u << 1) | (1u << 2) | (1u << 3) | (1u << 4);
  }
}

enum class SumChoice { Concat, Top, Bottom, Every };

SumChoice sum_choice(AxiomId axiom) {
  switch (axiom) {
    case AxiomId::TCON: return SumChoice::Top;
    case AxiomId::BCON: return SumChoice::Bottom;
    case AxiomId::CON: return SumChoice::Every;
    default: return SumChoice::Concat;
  }
}

// Violation scan of one sum at the premise pairs; pm is indexed by clause.
std::optional<Witness> scan_sum(AuditContext& ctx,
                                const CoalitionalRanking& r1,
                                const CoalitionalRanking& r2,
                                const CoalitionalRanking& sum,
                                const std::array<uint32_t, 5>& pm,
                                unsigned clauses) {
  int n = ctx.roster.size();
  for (int c = 1; c <= 4; ++c) {
    if (!(clauses & (1u << c))) continue;
    for (uint32_t bits = pm[static_cast<size_t>(c)]; bits; bits &= bits - 1) {
      int p = std::countr_zero(bits);
      int x = p / n, y = p % n;
      Verdict vs = compare(ctx.srs, ctx.roster, sum, x, y);
      if (!clause_violated(c, vs)) continue;
      Witness w;
      w.srs = ctx.srs;
      w.rankings = {r1, r2};
      w.sum = sum;
      w.x = x;
      w.y = y;
      w.clause = c;
      w.observed = pair_verdicts(ctx.roster, x, y,
                                 compare(ctx.srs, ctx.roster, r1, x, y),
                                 compare(ctx.srs, ctx.roster, r2, x, y), vs);
      return w;
    }
  }
  return std::nullopt;
}

AuditResult audit_consistency(AuditContext& ctx) {
  const SearchBounds& b = ctx.bounds;
  std::vector<Coalition> coalitions = all_coalitions(ctx.roster);
  int m = static_cast<int>(coalitions.size());
  unsigned clauses = clause_set(ctx.axiom);
  SumChoice choice = sum_choice(ctx.axiom);

  // Budget: pairs within the strata window, with a sum-count factor for CON.
  std::vector<uint64_t> cnt = bucket_counts(m, b);
  int dmax = static_cast<int>(cnt.size()) - 1;
  uint64_t est = 0;
  for (int d1 = 0; d1 <= dmax; ++d1)
    for (int d2 = 0; d2 <= dmax; ++d2) {
      int t = d1 + d2;
      if (t < b.min_combined_domain || t > b.combined_cap()) continue;
      est += sat_mul(cnt[static_cast<size_t>(d1)], cnt[static_cast<size_t>(d2)]);
    }
  if (choice == SumChoice::Every) est = sat_mul(est, 16);
  if (est > b.budget) return ctx.finish(AuditStatus::BoundsTooLarge);

  Pool pool = build_pool(ctx.roster, b);
  std::vector<PairMasks> masks(pool.rankings.size());
  std::vector<char> have(pool.rankings.size(), 0);
  auto mask_of = [&](size_t i) -> const PairMasks& {
    if (!have[i]) {
      masks[i] = relation_masks(ctx.srs, ctx.roster, pool.rankings[i]);
      have[i] = 1;
    }
    return masks[i];
  };

  for (int t = std::max(0, b.min_combined_domain); t <= b.combined_cap(); ++t) {
    for (int d1 = std::max(0, t - dmax); d1 <= std::min(t, dmax); ++d1) {
      int d2 = t - d1;
      for (size_t i = pool.size_begin[static_cast<size_t>(d1)];
           i < pool.size_begin[static_cast<size_t>(d1) + 1]; ++i) {
        uint32_t mi = pool.dmask[i];
        const PairMasks* pmi = nullptr;
        for (size_t j = pool.size_begin[static_cast<size_t>(d2)];
             j < pool.size_begin[static_cast<size_t>(d2) + 1]; ++j) {
          if (mi & pool.dmask[j]) continue;
          if (!pmi) pmi = &mask_of(i);
          const PairMasks& pmj = mask_of(j);
          std::array<uint32_t, 5> pm{};
          if (clauses & (1u << 1)) pm[1] = pmi->indiff & pmj.indiff;
          if (clauses & (1u << 2)) pm[2] = pmi->indiff & pmj.strict;
          if (clauses & (1u << 3)) pm[3] = pmi->strict & pmj.indiff;
          if (clauses & (1u << 4)) pm[4] = pmi->strict & pmj.strict;
          if (!(pm[1] | pm[2] | pm[3] | pm[4])) continue;
          const CoalitionalRanking& r1 = pool.rankings[i];
          const CoalitionalRanking& r2 = pool.rankings[j];
          std::optional<Witness> w;
          if (choice == SumChoice::Every) {
            for_each_sum(r1, r2, [&](const CoalitionalRanking& sum) {
              ++ctx.result.instances;
              w = scan_sum(ctx, r1, r2, sum, pm, clauses);
              return !w;
            });
          } else {
            CoalitionalRanking sum =
                choice == SumChoice::Concat  ? concat_sum(r1, r2)
                : choice == SumChoice::Top   ? top_aligned_sum(r1, r2)
                                             : bottom_aligned_sum(r1, r2);
            ++ctx.result.instances;
            w = scan_sum(ctx, r1, r2, sum, pm, clauses);
          }
          if (w) return ctx.finish(AuditStatus::Violated, std::move(w));
        }
      }
    }
  }
  return ctx.finish(AuditStatus::PassUpToBounds);
}

AuditResult audit_nt(AuditContext& ctx) {
  std::vector<Coalition> coalitions = all_coalitions(ctx.roster);
  uint64_t fact = 1;
  for (int k = 2; k <= ctx.roster.size(); ++k) fact *= static_cast<uint64_t>(k);
  std::vector<uint64_t> cnt = bucket_counts(static_cast<int>(coalitions.size()), ctx.bounds);
  uint64_t rankings = 0;
  for (uint64_t c : cnt) rankings += c;
  if (sat_mul(rankings, fact) > ctx.bounds.budget)
    return ctx.finish(AuditStatus::BoundsTooLarge);

  std::optional<Witness> found;
  for_each_ranking(ctx.roster, ctx.bounds, [&](const CoalitionalRanking& r) {
    bool first = true;
    for_each_roster_permutation(ctx.roster.size(), [&](std::span<const int> sigma) {
      if (first) {  // identity
        first = false;
        return true;
      }
      ++ctx.result.instances;
      found = check_nt_instance(ctx.srs, ctx.roster, r, sigma);
      return !found;
    });
    return !found;
  });
  if (found) return ctx.finish(AuditStatus::Violated, std::move(found));
  return ctx.finish(AuditStatus::PassUpToBounds);
}

AuditResult audit_wca(AuditContext& ctx) {
  int n = ctx.roster.size();
  uint64_t perms = 1;
  {
    std::array<uint64_t, 4> cell_sizes{};
    uint32_t full = (1u << n) - 1;
    for (uint32_t s = 1; s <= full; ++s)
      ++cell_sizes[(s & 1u ? 1u : 0u) | (s & 2u ? 2u : 0u)];
    for (uint64_t size : cell_sizes)
      for (uint64_t k = 2; k <= size; ++k) perms = sat_mul(perms, k);
  }
  std::vector<uint64_t> cnt =
      bucket_counts((1 << n) - 1, ctx.bounds);
  uint64_t rankings = 0;
  for (uint64_t c : cnt) rankings += c;
  uint64_t pairs = static_cast<uint64_t>(n) * static_cast<uint64_t>(n - 1) / 2;
  if (sat_mul(sat_mul(rankings, pairs), perms) > ctx.bounds.budget)
    return ctx.finish(AuditStatus::BoundsTooLarge);

  std::optional<Witness> found;
  for_each_ranking(ctx.roster, ctx.bounds, [&](const CoalitionalRanking& r) {
    for (int x = 0; x < n && !found; ++x)
      for (int y = x + 1; y < n && !found; ++y) {
        bool first = true;
        for_each_xy_invariant_permutation(
            ctx.roster, x, y, [&](std::span<const uint32_t> pi) {
              if (first) {  // identity
                first = false;
                return true;
              }
              ++ctx.result.instances;
              found = check_wca_instance(ctx.srs, ctx.roster, r, x, y, pi);
              return !found;
            });
      }
    return !found;
  });
  if (found) return ctx.finish(AuditStatus::Violated, std::move(found));
  return ctx.finish(AuditStatus::PassUpToBounds);
}

AuditResult audit_idws(AuditContext& ctx) {
  std::optional<Witness> found;
  for_each_ranking(ctx.roster, ctx.bounds, [&](const CoalitionalRanking& r) {
    if (r.class_count() < 2) return true;
    PairMasks pm = relation_masks(ctx.srs, ctx.roster, r);
    if (!pm.strict) return true;
    const std::vector<Coalition>& worst = r.classes().back();
    for_each_weak_order(
        worst, static_cast<int>(worst.size()),
        [&](const CoalitionalRanking& split) {
          if (split.class_count() < 2) return true;  // unchanged ranking
          std::vector<std::vector<Coalition>> classes(
              r.classes().begin(), r.classes().end() - 1);
          classes.insert(classes.end(), split.classes().begin(),
                         split.classes().end());
          ++ctx.result.instances;
          found = check_idws_instance(ctx.srs, ctx.roster, r,
                                      CoalitionalRanking(std::move(classes)));
          return !found;
        });
    return !found;
  });
  if (found) return ctx.finish(AuditStatus::Violated, std::move(found));
  return ctx.finish(AuditStatus::PassUpToBounds);
}

AuditResult audit_iaws(AuditContext& ctx) {
  std::vector<Coalition> coalitions = all_coalitions(ctx.roster);
  std::optional<Witness> found;
  for_each_ranking(ctx.roster, ctx.bounds, [&](const CoalitionalRanking& r) {
    PairMasks pm = relation_masks(ctx.srs, ctx.roster, r);
    if (!pm.strict) return true;
    int room = ctx.bounds.max_domain - r.domain_size();
    if (room <= 0) return true;
    std::vector<Coalition> outside;
    for (Coalition s : coalitions)
      if (!r.domain_contains(s)) outside.push_back(s);
    uint32_t all = outside.size() >= 32 ? ~0u : (1u << outside.size()) - 1;
    for (uint32_t sub = 1; sub <= all && !found; ++sub) {
      if (std::popcount(sub) > room) continue;
      std::vector<Coalition> gamma;
      for (uint32_t bits = sub; bits; bits &= bits - 1)
        gamma.push_back(outside[static_cast<size_t>(std::countr_zero(bits))]);
      std::vector<std::vector<Coalition>> classes = r.classes();
      classes.push_back(std::move(gamma));
      ++ctx.result.instances;
      found = check_iaws_instance(ctx.srs, ctx.roster, r,
                                  CoalitionalRanking(std::move(classes)));
    }
    return !found;
  });
  if (found) return ctx.finish(AuditStatus::Violated, std::move(found));
  return ctx.finish(AuditStatus::PassUpToBounds);
}

AuditResult audit_to(AuditContext& ctx) {
  Pool pool = build_pool(ctx.roster, ctx.bounds);
  if (sat_mul(pool.rankings.size(), pool.rankings.size()) > ctx.bounds.budget)
    return ctx.finish(AuditStatus::BoundsTooLarge);
  std::map<std::vector<Coalition>, std::vector<size_t>> by_top;
  for (size_t i = 0; i < pool.rankings.size(); ++i)
    if (!pool.rankings[i].empty_domain())
      by_top[pool.rankings[i].classes().front()].push_back(i);
  for (const auto& [top, members] : by_top) {
    std::vector<PairMasks> masks(members.size());
    for (size_t a = 0; a < members.size(); ++a)
      masks[a] = relation_masks(ctx.srs, ctx.roster, pool.rankings[members[a]]);
    for (size_t a = 0; a < members.size(); ++a)
      for (size_t b = a + 1; b < members.size(); ++b) {
        ++ctx.result.instances;
        if (masks[a].strict == masks[b].strict &&
            masks[a].indiff == masks[b].indiff)
          continue;
        auto w = check_to_instance(ctx.srs, ctx.roster,
                                   pool.rankings[members[a]],
                                   pool.rankings[members[b]]);
        if (w) return ctx.finish(AuditStatus::Violated, std::move(w));
      }
  }
  return ctx.finish(AuditStatus::PassUpToBounds);
}

AuditResult audit_pointwise(AuditContext& ctx) {
  // AIAW and WUVIP quantify over single rankings of a fixed shape.
  std::optional<Witness> found;
  for_each_ranking(ctx.roster, ctx.bounds, [&](const CoalitionalRanking& r) {
    if (ctx.axiom == AxiomId::AIAW) {
      if (r.class_count() > 1) return true;
      ++ctx.result.instances;
      found = check_aiaw_instance(ctx.srs, ctx.roster, r);
    } else {
      if (r.class_count() != 2) return true;
      ++ctx.result.instances;
      found = check_wuvip_instance(ctx.srs, ctx.roster, r);
    }
    return !found;
  });
  if (found) return ctx.finish(AuditStatus::Violated, std::move(found));
  return ctx.finish(AuditStatus::PassUpToBounds);
}

AuditResult audit_sampled(AuditContext& ctx) {
  RankingSampler sampler(ctx.roster, ctx.bounds);
  std::mt19937_64 rng(ctx.bounds.seed ^ 0x9e3779b97f4a7c15ull);
  int n = ctx.roster.size();
  std::vector<Coalition> coalitions = all_coalitions(ctx.roster);
  for (int trial = 0; trial < ctx.bounds.trials; ++trial) {
    std::optional<Witness> found;
    switch (ctx.axiom) {
      case AxiomId::CON:
      case AxiomId::CCON:
      case AxiomId::TCON:
      case AxiomId::BCON:
      case AxiomId::II_CCON:
      case AxiomId::IP_CCON:
      case AxiomId::PI_CCON:
      case AxiomId::PP_CCON: {
        CoalitionalRanking r1 = sampler.next(), r2 = sampler.next();
        if (!are_disjoint(r1, r2)) continue;
        SumChoice choice = sum_choice(ctx.axiom);
        if (choice == SumChoice::Every)
          choice = static_cast<SumChoice>(
              std::uniform_int_distribution<int>(0, 2)(rng));
        CoalitionalRanking sum =
            choice == SumChoice::Concat  ? concat_sum(r1, r2)
            : choice == SumChoice::Top   ? top_aligned_sum(r1, r2)
                                         : bottom_aligned_sum(r1, r2);
        unsigned clauses = clause_set(ctx.axiom);
        ++ctx.result.instances;
        for (int x = 0; x < n && !found; ++x)
          for (int y = x + 1; y < n && !found; ++y) {
            auto w = check_consistency_instance(ctx.srs, ctx.roster, r1, r2,
                                                sum, x, y);
            if (w && (clauses & (1u << w->clause))) found = w;
          }
        break;
      }
      case AxiomId::NT: {
        CoalitionalRanking r = sampler.next();
        std::vector<int> sigma(static_cast<size_t>(n));
        std::iota(sigma.begin(), sigma.end(), 0);
        std::shuffle(sigma.begin(), sigma.end(), rng);
        ++ctx.result.instances;
        found = check_nt_instance(ctx.srs, ctx.roster, r, sigma);
        break;
      }
      case AxiomId::WCA: {
        CoalitionalRanking r = sampler.next();
        int x = std::uniform_int_distribution<int>(0, n - 1)(rng);
        int y = std::uniform_int_distribution<int>(0, n - 2)(rng);
        if (y >= x) ++y;
        uint32_t full = (1u << n) - 1;
        std::vector<std::vector<uint32_t>> cells(4);
        for (uint32_t s = 1; s <= full; ++s)
          cells[(s & (1u << x) ? 1u : 0u) | (s & (1u << y) ? 2u : 0u)].push_back(s);
        std::vector<uint32_t> pi(static_cast<size_t>(full) + 1, 0);
        for (auto& cell : cells) {
          std::vector<uint32_t> image = cell;
          std::shuffle(image.begin(), image.end(), rng);
          for (size_t k = 0; k < cell.size(); ++k) pi[cell[k]] = image[k];
        }
        ++ctx.result.instances;
        found = check_wca_instance(ctx.srs, ctx.roster, r, x, y, pi);
        break;
      }
      case AxiomId::IDWS: {
        CoalitionalRanking r = sampler.next();
        if (r.class_count() < 2) continue;
        const std::vector<Coalition>& worst = r.classes().back();
        if (worst.size() < 2) continue;
        int parts = std::uniform_int_distribution<int>(
            2, static_cast<int>(worst.size()))(rng);
        std::vector<std::vector<Coalition>> split(static_cast<size_t>(parts));
        for (size_t k = 0; k < worst.size(); ++k) {
          size_t slot = k < static_cast<size_t>(parts)
                            ? k
                            : static_cast<size_t>(std::uniform_int_distribution<int>(
                                  0, parts - 1)(rng));
          split[slot].push_back(worst[k]);
        }
        std::vector<std::vector<Coalition>> classes(r.classes().begin(),
                                                    r.classes().end() - 1);
        classes.insert(classes.end(), split.begin(), split.end());
        ++ctx.result.instances;
        found = check_idws_instance(ctx.srs, ctx.roster, r,
                                    CoalitionalRanking(std::move(classes)));
        break;
      }
      case AxiomId::IAWS: {
        CoalitionalRanking r = sampler.next();
        std::vector<Coalition> outside;
        for (Coalition s : coalitions)
          if (!r.domain_contains(s)) outside.push_back(s);
        if (outside.empty()) continue;
        std::shuffle(outside.begin(), outside.end(), rng);
        int take = std::uniform_int_distribution<int>(
            1, static_cast<int>(outside.size()))(rng);
        outside.erase(outside.begin() + take, outside.end());
        std::vector<std::vector<Coalition>> classes = r.classes();
        classes.push_back(std::move(outside));
        ++ctx.result.instances;
        found = check_iaws_instance(ctx.srs, ctx.roster, r,
                                    CoalitionalRanking(std::move(classes)));
        break;
      }
      case AxiomId::TO: {
        CoalitionalRanking r1 = sampler.next(), r2 = sampler.next();
        if (r1.empty_domain() || r2.empty_domain() ||
            r1.classes().front() != r2.classes().front())
          continue;
        ++ctx.result.instances;
        found = check_to_instance(ctx.srs, ctx.roster, r1, r2);
        break;
      }
      case AxiomId::AIAW: {
        CoalitionalRanking r = sampler.next();
        if (r.class_count() > 1) continue;
        ++ctx.result.instances;
        found = check_aiaw_instance(ctx.srs, ctx.roster, r);
        break;
      }
      case AxiomId::WUVIP: {
        CoalitionalRanking r = sampler.next();
        if (r.class_count() != 2) continue;
        ++ctx.result.instances;
        found = check_wuvip_instance(ctx.srs, ctx.roster, r);
        break;
      }
    }
    if (found) return ctx.finish(AuditStatus::Violated, std::move(found));
  }
  return ctx.finish(AuditStatus::PassUpToBounds);
}

}  // namespace

AuditResult audit_axiom(SrsId srs, AxiomId axiom, const Roster& roster,
                        const SearchBounds& bounds) {
  if (bounds.roster_size != roster.size())
    throw std::invalid_argument("bounds roster_size must match the roster");
  if (bounds.max_domain < 1 || bounds.max_classes < 1)
    throw std::invalid_argument("bounds caps must be at least 1");
  AuditContext ctx(srs, axiom, roster, bounds);
  if (bounds.mode == SearchMode::Sampled) return audit_sampled(ctx);
  switch (axiom) {
    case AxiomId::CON:
    case AxiomId::CCON:
    case AxiomId::TCON:
    case AxiomId::BCON:
    case AxiomId::II_CCON:
    case AxiomId::IP_CCON:
    case AxiomId::PI_CCON:
    case AxiomId::PP_CCON:
      return audit_consistency(ctx);
    case AxiomId::NT: return audit_nt(ctx);
    case AxiomId::WCA: return audit_wca(ctx);
    case AxiomId::IDWS: return audit_idws(ctx);
    case AxiomId::IAWS: return audit_iaws(ctx);
    case AxiomId::TO: return audit_to(ctx);
    case AxiomId::AIAW:
    case AxiomId::WUVIP:
      return audit_pointwise(ctx);
  }
  throw std::invalid_argument("unknown axiom");
}

std::vector<AuditResult> audit_matrix(std::span<const SrsId> srs_list,
                                      std::span<const AxiomId> axiom_list,
                                      const Roster& roster,
                                      const SearchBounds& bounds) {
  std::vector<AuditResult> out;
  out.reserve(srs_list.size() * axiom_list.size());
  for (SrsId srs : srs_list)
    for (AxiomId axiom : axiom_list)
      out.push_back(audit_axiom(srs, axiom, roster, bounds));
  return out;
}

ImplicationResult check_implication(std::span<const AxiomId> premises,
                                    AxiomId conclusion, SrsId srs,
                                    const Roster& roster,
                                    const SearchBounds& bounds) {
  ImplicationResult out;
  bool premises_hold = true;
  for (AxiomId premise : premises) {
    out.audits.push_back(audit_axiom(srs, premise, roster, bounds));
    if (out.audits.back().status != AuditStatus::PassUpToBounds)
      premises_hold = false;
  }
  out.audits.push_back(audit_axiom(srs, conclusion, roster, bounds));
  const AuditResult& conclusion_audit = out.audits.back();
  if (premises_hold && conclusion_audit.status == AuditStatus::Violated) {
    out.consistent = false;
    out.counter = conclusion_audit.witness;
  }
  return out;
}

namespace {

std::string serialize_witness(const Roster& roster, const Witness& w,
                              std::span<const int> sigma) {
  std::ostringstream os;
  os << axiom_name(w.axiom) << '|' << w.clause << '|'
     << sigma[static_cast<size_t>(w.x)] << '|' << sigma[static_cast<size_t>(w.y)];
  auto relabel = [&](Coalition s) {
    uint32_t bits = 0;
    for (int i : s.members()) bits |= 1u << sigma[static_cast<size_t>(i)];
    return bits;
  };
  std::vector<CoalitionalRanking> rankings = w.rankings;
  if (w.sum) rankings.push_back(*w.sum);
  for (const auto& r : rankings) {
    os << "|R";
    for (const auto& cls : r.classes()) {
      std::vector<uint32_t> image;
      for (Coalition s : cls) image.push_back(relabel(s));
      std::sort(image.begin(), image.end());
      os << '/';
      for (uint32_t bits : image) os << bits << ',';
    }
  }
  (void)roster;
  return os.str();
}

}  // namespace

std::string canonical_witness_key(const Roster& roster, const Witness& w) {
  std::vector<int> identity(static_cast<size_t>(roster.size()));
  std::iota(identity.begin(), identity.end(), 0);
  if (w.axiom == AxiomId::NT || w.sigma || w.pi)
    return serialize_witness(roster, w, identity);
  std::string best;
  for_each_roster_permutation(roster.size(), [&](std::span<const int> sigma) {
    std::string key = serialize_witness(roster, w, sigma);
    if (best.empty() || key < best) best = std::move(key);
    return true;
  });
  return best;
}

}  // namespace socrank
