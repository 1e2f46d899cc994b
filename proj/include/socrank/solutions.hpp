#pragma once

#include <optional>
#include <span>
#include <string>

#include "socrank/model.hpp"
#include "socrank/scores.hpp"

namespace socrank {

enum class SrsId {
  L,         // lexicographic excellence
  SL,        // sign lexicographic excellence
  P,         // plurality
  SP,        // sign plurality
  AP,        // anti-plurality
  CPM,       // ceteris-paribus majority
  IIS,       // intersection initial segment
  DSL,       // dual sign lex-cel
  IDSL,      // inverse dual sign lex-cel
  SPLIT_L,   // split lex-cel
  L_TB,      // lex-cel with tie-breaking
  SLNE,      // sign lex-cel, attention to non-existence
  SLNEH,     // sign lex-cel, attention to non-existence in higher classes
  SLUN,      // sign lex-cel, precedence on unanimity
  SUM,       // sum rule
  SSUM,      // sign sum rule
  SUM_L,     // sum rule, ties broken by lex-cel
  SSUM_SL,   // sign sum rule, ties broken by sign lex-cel
  SPLIT_P,   // split plurality
  P_TB,      // plurality with tie-breaking
  CONST_X,   // constant full indifference
  DUAL_IIS,  // mirror of IIS over reversed class order
};

inline constexpr int kSrsCount = 22;

std::span<const SrsId> all_srs();
std::string_view srs_name(SrsId id);
std::optional<SrsId> srs_from_name(std::string_view name);  // case-insensitive

/// Pairwise verdict of the named rule on (x, y).
Verdict compare(SrsId id, const Roster& roster, const CoalitionalRanking& r,
                int x, int y);

/// Full relation over the roster; complete and reflexive by construction.
SocialRelation apply(SrsId id, const Roster& roster,
                     const CoalitionalRanking& r);

struct ExplanationTrace {
  SrsId srs;
  Verdict verdict = Verdict::I;
  ScoreVector x_scores;  // vectors, counts, or depths consulted, x side
  ScoreVector y_scores;
  std::optional<int> deciding_index;  // 1-based first differing index
  bool tie_broken = false;            // verdict came from the tie-break order
  std::string summary;
};

ExplanationTrace explain(SrsId id, const Roster& roster,
                         const CoalitionalRanking& r, int x, int y);

}  // namespace socrank
