#include "socrank/parse.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace socrank {

ParseError::ParseError(const std::string& message, int line, int column)
    : std::runtime_error("parse error at line " + std::to_string(line) +
                         ", column " + std::to_string(column) + ": " + message),
      line(line),
      column(column) {}

ValidationFailure::ValidationFailure(ValidationResult r)
    : std::runtime_error("invalid ranking: " + r.detail), result(std::move(r)) {}

namespace {

struct Cursor {
  std::string_view text;
  size_t pos = 0;
  int line;

  int column() const { return static_cast<int>(pos) + 1; }

  void skip_space() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  bool done() {
    skip_space();
    return pos >= text.size();
  }

  char peek() const { return text[pos]; }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, line, column());
  }
};

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

std::string read_name(Cursor& c) {
  c.skip_space();
  size_t start = c.pos;
  while (c.pos < c.text.size() && is_name_char(c.text[c.pos])) ++c.pos;
  if (c.pos == start) c.fail("expected an individual name");
  return std::string(c.text.substr(start, c.pos - start));
}

Coalition read_coalition(const Roster& roster, Cursor& c) {
  c.skip_space();
  if (c.peek() != '{') c.fail("expected '{'");
  int open_column = c.column();
  ++c.pos;
  uint32_t bits = 0;
  while (true) {
    c.skip_space();
    if (c.pos >= c.text.size()) c.fail("unterminated coalition");
    if (c.peek() == '}') {
      ++c.pos;
      break;
    }
    if (bits != 0) {
      if (c.peek() != ',') c.fail("expected ',' or '}'");
      ++c.pos;
    }
    int at = c.column();
    std::string name = read_name(c);
    int idx = roster.index(name);
    if (idx < 0) throw ParseError("unknown individual '" + name + "'", c.line, at);
    bits |= 1u << idx;
  }
  if (bits == 0) throw ParseError("empty coalition", c.line, open_column);
  return Coalition(bits);
}

}  // namespace

CoalitionalRanking parse_ranking(const Roster& roster, std::string_view text,
                                 int line) {
  Cursor c{text, 0, line};
  if (c.done()) c.fail("expected a ranking");
  {
    Cursor probe = c;
    std::string word;
    if (is_name_char(probe.peek())) word = read_name(probe);
    if (word == "empty") {
      if (!probe.done()) probe.fail("unexpected input after 'empty'");
      return CoalitionalRanking{};
    }
  }
  std::vector<std::vector<Coalition>> classes;
  std::vector<Coalition> current;
  while (!c.done()) {
    if (c.peek() == '>') {
      if (current.empty()) c.fail("empty equivalence class");
      ++c.pos;
      classes.push_back(std::move(current));
      current.clear();
      continue;
    }
    current.push_back(read_coalition(roster, c));
  }
  if (current.empty()) c.fail("empty equivalence class");
  classes.push_back(std::move(current));
  CoalitionalRanking r{std::move(classes)};
  ValidationResult check = validate(roster, r);
  if (!check.ok()) throw ValidationFailure(std::move(check));
  return r;
}

ParsedInput parse_input(std::string_view text) {
  std::vector<std::pair<int, std::string_view>> lines;
  {
    int number = 0;
    size_t start = 0;
    while (start <= text.size()) {
      size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      ++number;
      std::string_view body = text.substr(start, end - start);
      size_t first = body.find_first_not_of(" \t\r");
      if (first != std::string_view::npos && body[first] != '#')
        lines.emplace_back(number, body);
      start = end + 1;
    }
  }
  if (lines.empty()) throw ParseError("expected a 'roster:' line", 1, 1);

  auto [roster_line, roster_text] = lines.front();
  Cursor c{roster_text, 0, roster_line};
  std::string keyword = read_name(c);
  if (keyword != "roster" || c.done() || c.peek() != ':')
    throw ParseError("expected 'roster:'", roster_line, 1);
  ++c.pos;
  std::vector<std::string> names;
  while (!c.done()) names.push_back(read_name(c));
  if (names.empty()) c.fail("roster lists no individuals");

  ParsedInput out{Roster::of(std::move(names)), {}};
  for (size_t k = 1; k < lines.size(); ++k)
    out.rankings.push_back(
        parse_ranking(out.roster, lines[k].second, lines[k].first));
  return out;
}

std::string render_coalition(const Roster& roster, Coalition s) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < roster.size(); ++i) {
    if (!s.contains(i)) continue;
    if (!first) out += ',';
    out += roster.name(i);
    first = false;
  }
  out += '}';
  return out;
}

std::string render_ranking(const Roster& roster, const CoalitionalRanking& r) {
  if (r.empty_domain()) return "empty";
  std::string out;
  for (size_t k = 0; k < r.classes().size(); ++k) {
    if (k) out += " > ";
    std::vector<Coalition> cls = r.classes()[k];
    std::sort(cls.begin(), cls.end(), [&](Coalition a, Coalition b) {
      return canonical_key(roster, a) < canonical_key(roster, b);
    });
    for (size_t j = 0; j < cls.size(); ++j) {
      if (j) out += ' ';
      out += render_coalition(roster, cls[j]);
    }
  }
  return out;
}

std::string render_relation(const Roster& roster, const SocialRelation& rel) {
  if (auto partition = rel.as_ordered_partition()) {
    std::string out;
    for (size_t k = 0; k < partition->size(); ++k) {
      if (k) out += " > ";
      const std::vector<int>& cls = (*partition)[k];
      if (cls.size() == 1) {
        out += roster.name(cls.front());
        continue;
      }
      out += '{';
      for (size_t j = 0; j < cls.size(); ++j) {
        if (j) out += ',';
        out += roster.name(cls[j]);
      }
      out += '}';
    }
    return out;
  }
  std::ostringstream os;
  os << "CYCLIC\n";
  for (int x = 0; x < rel.size(); ++x)
    for (int y = x + 1; y < rel.size(); ++y)
      os << roster.name(x) << ' ' << verdict_name(rel.parts(x, y)) << ' '
         << roster.name(y) << '\n';
  return os.str();
}

}  // namespace socrank
