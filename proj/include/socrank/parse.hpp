#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "socrank/model.hpp"

namespace socrank {

/// Syntax error with 1-based source position.
struct ParseError : std::runtime_error {
  int line;
  int column;
  ParseError(const std::string& message, int line, int column);
};

/// Well-formed text that fails model validation (duplicate coalitions etc.).
struct ValidationFailure : std::runtime_error {
  ValidationResult result;
  explicit ValidationFailure(ValidationResult r);
};

/// One ranking line: classes separated by `>`, coalitions as `{a,b}`,
/// whitespace insignificant; the single word `empty` is the empty-domain
/// ranking. `line` is used for error positions.
CoalitionalRanking parse_ranking(const Roster& roster, std::string_view text,
                                 int line = 1);

struct ParsedInput {
  Roster roster;
  std::vector<CoalitionalRanking> rankings;
};

/// A whole input file: a `roster: a b c` line (listing order doubles as the
/// tie-break order), then one ranking per non-empty line. Lines starting
/// with `#` are comments.
ParsedInput parse_input(std::string_view text);

std::string render_coalition(const Roster& roster, Coalition s);
std::string render_ranking(const Roster& roster, const CoalitionalRanking& r);

/// Ordered partition notation (`x > {y,z} > w`) when the relation is a weak
/// order; otherwise a pair matrix flagged CYCLIC.
std::string render_relation(const Roster& roster, const SocialRelation& rel);

}  // namespace socrank
