#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "socrank/enumeration.hpp"
#include "socrank/model.hpp"
#include "socrank/solutions.hpp"
#include "socrank/sums.hpp"

namespace socrank {

enum class AxiomId {
  CON,      // consistency with respect to every sum
  CCON,     // concatenation consistency
  TCON,     // top-aligned consistency
  BCON,     // bottom-aligned consistency
  II_CCON,  // clause (1) of CCON only
  IP_CCON,  // clause (2) of CCON only
  PI_CCON,  // clause (3) of CCON only
  PP_CCON,  // clause (4) of CCON only
  NT,       // neutrality
  WCA,      // weak coalitional anonymity
  IDWS,     // independence of the decomposition of the worst sets
  IAWS,     // independence of the addition of the worst sets
  TO,       // tops-only
  AIAW,     // all indifference all winners
  WUVIP,    // weak union very important person property
};

inline constexpr int kAxiomCount = 15;

std::span<const AxiomId> all_axioms();
std::string_view axiom_name(AxiomId id);

/// Case-insensitive; accepts both "IP_CCON" and "IP-CCON" spellings.
std::optional<AxiomId> axiom_from_name(std::string_view name);

struct NotASumError : std::invalid_argument {
  NotASumError()
      : std::invalid_argument("ranking is not a sum of the given parts") {}
};

/// A replayable violation record. `rankings` holds the quantified ranking
/// inputs (one or two, axiom-dependent); `sum`, `sigma`, and `pi` are set
/// only for the axioms that quantify over them.
struct Witness {
  SrsId srs{};
  AxiomId axiom{};
  std::vector<CoalitionalRanking> rankings;
  std::optional<CoalitionalRanking> sum;
  std::optional<std::vector<int>> sigma;
  std::optional<std::vector<uint32_t>> pi;
  int x = 0;
  int y = 0;
  int clause = 0;  // consistency clause (1)-(4); 0 elsewhere
  std::string observed;
};

/// Clause check of Definition-6 style consistency at the pair (x, y), in
/// both orientations. Throws NotASumError when `sum` does not restrict to
/// the two parts.
std::optional<Witness> check_consistency_instance(
    SrsId srs, const Roster& roster, const CoalitionalRanking& r1,
    const CoalitionalRanking& r2, const CoalitionalRanking& sum, int x, int y);

std::optional<Witness> check_nt_instance(SrsId srs, const Roster& roster,
                                         const CoalitionalRanking& r,
                                         std::span<const int> sigma);

std::optional<Witness> check_wca_instance(SrsId srs, const Roster& roster,
                                          const CoalitionalRanking& r, int x,
                                          int y, std::span<const uint32_t> pi);

/// `decomposed` must equal `r` with the worst class split into a sequence
/// of classes; throws std::invalid_argument otherwise.
std::optional<Witness> check_idws_instance(SrsId srs, const Roster& roster,
                                           const CoalitionalRanking& r,
                                           const CoalitionalRanking& decomposed);

/// `extended` must equal `r` with one extra worst class drawn from outside
/// the domain of `r`; throws std::invalid_argument otherwise.
std::optional<Witness> check_iaws_instance(SrsId srs, const Roster& roster,
                                           const CoalitionalRanking& r,
                                           const CoalitionalRanking& extended);

/// `r1` and `r2` must share their best equivalence class.
std::optional<Witness> check_to_instance(SrsId srs, const Roster& roster,
                                         const CoalitionalRanking& r1,
                                         const CoalitionalRanking& r2);

std::optional<Witness> check_aiaw_instance(SrsId srs, const Roster& roster,
                                           const CoalitionalRanking& r);

std::optional<Witness> check_wuvip_instance(SrsId srs, const Roster& roster,
                                            const CoalitionalRanking& r);

/// Feeds a witness back through its instance check; true iff the recorded
/// violation reproduces at the recorded pair (and clause, if any).
bool replay(const Roster& roster, const Witness& w);

enum class AuditStatus { PassUpToBounds, Violated, BoundsTooLarge };

std::string_view audit_status_name(AuditStatus s);

struct AuditResult {
  SrsId srs{};
  AxiomId axiom{};
  AuditStatus status = AuditStatus::PassUpToBounds;
  std::optional<Witness> witness;
  SearchBounds bounds;
  uint64_t instances = 0;  // instance checks actually performed
  long long elapsed_ms = 0;
};

/// Exhaustive (or seeded sampled) search for a violation within bounds;
/// deterministic, first witness in the canonical enumeration order.
AuditResult audit_axiom(SrsId srs, AxiomId axiom, const Roster& roster,
                        const SearchBounds& bounds);

std::vector<AuditResult> audit_matrix(std::span<const SrsId> srs_list,
                                      std::span<const AxiomId> axiom_list,
                                      const Roster& roster,
                                      const SearchBounds& bounds);

struct ImplicationResult {
  bool consistent = true;  // no bounded instance defeats the implication
  std::optional<Witness> counter;  // conclusion witness when not consistent
  std::vector<AuditResult> audits;  // premise audits, then the conclusion's
};

/// Checks premises ⊢ conclusion over the bounded instance space: a counter
/// instance is a conclusion violation while every premise passes.
ImplicationResult check_implication(std::span<const AxiomId> premises,
                                    AxiomId conclusion, SrsId srs,
                                    const Roster& roster,
                                    const SearchBounds& bounds);

/// Deduplication key: minimal serialization of the witness over all roster
/// relabelings. Witnesses carrying a sigma or pi (and all NT witnesses)
/// serialize as-is.
std::string canonical_witness_key(const Roster& roster, const Witness& w);

}  // namespace socrank
