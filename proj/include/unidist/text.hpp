#pragma once

#include <cctype>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "unidist/decompose.hpp"
#include "unidist/degree_sequence.hpp"
#include "unidist/graph.hpp"

namespace unidist {

/// Malformed textual input; `where` is a byte offset for sequence text and a
/// 1-based line number for edge lists.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& message, u64 where)
      : std::runtime_error(message + " (at " + std::to_string(where) + ")"), where_(where) {}

  u64 where() const { return where_; }

 private:
  u64 where_;
};

using ParsedSequence = std::variant<DegreeSequence, PairedDegreeSequence>;

namespace detail {

struct SeqCursor {
  std::string_view text;
  u64 pos = 0;

  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }

  void skip_spaces() {
    while (!done() && (peek() == ' ' || peek() == '\t')) ++pos;
  }

  u64 parse_number() {
    skip_spaces();
    if (done() || !std::isdigit(static_cast<unsigned char>(peek())))
      throw parse_error("expected a number", pos);
    u64 value = 0;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
      const u64 digit = static_cast<u64>(peek() - '0');
      if (value > (UINT64_MAX - digit) / 10) throw parse_error("number too large", pos);
      value = value * 10 + digit;
      ++pos;
    }
    skip_spaces();
    return value;
  }
};

/// Parses one part: comma-separated `d` or `d^r` terms, or `-` for empty.
inline RunList parse_part(SeqCursor& cur, char terminator) {
  RunList runs;
  cur.skip_spaces();
  if (!cur.done() && cur.peek() == '-') {
    ++cur.pos;
    cur.skip_spaces();
    if (!cur.done() && cur.peek() != terminator)
      throw parse_error("unexpected input after empty-part marker", cur.pos);
    return runs;
  }
  while (true) {
    const u64 at = cur.pos;
    const u64 degree = cur.parse_number();
    u64 count = 1;
    if (!cur.done() && cur.peek() == '^') {
      ++cur.pos;
      count = cur.parse_number();
      if (count == 0) throw parse_error("multiplicity must be positive", at);
    }
    if (!runs.empty() && runs.back().degree <= degree)
      throw parse_error("degrees must be strictly decreasing", at);
    runs.push_back({degree, count});
    cur.skip_spaces();
    if (cur.done() || cur.peek() == terminator) return runs;
    if (cur.peek() != ',') throw parse_error("expected ',' between terms", cur.pos);
    ++cur.pos;
  }
}

}  // namespace detail

/// Parses `d^r` sequence text, optionally paired with a single `;`.
/// Examples: "16^3,12^4,9^5,5^2,3,2,1^4", "4^3;2,1^4", "-;0^4".
inline ParsedSequence parse_degree_sequence_text(std::string_view text) {
  detail::SeqCursor cur{text};
  const auto semi = text.find(';');
  if (semi == std::string_view::npos) {
    auto runs = detail::parse_part(cur, '\0');
    if (!cur.done()) throw parse_error("trailing input", cur.pos);
    if (runs.empty()) throw parse_error("empty degree sequence", 0);
    return make_sequence(std::move(runs));
  }
  if (text.find(';', semi + 1) != std::string_view::npos)
    throw parse_error("more than one ';'", text.find(';', semi + 1));
  auto k_runs = detail::parse_part(cur, ';');
  if (cur.done() || cur.peek() != ';') throw parse_error("expected ';'", cur.pos);
  ++cur.pos;
  auto s_runs = detail::parse_part(cur, '\0');
  if (!cur.done()) throw parse_error("trailing input", cur.pos);
  return make_paired(std::move(k_runs), std::move(s_runs));
}

/// Parses an edge list: first non-comment line the vertex count, then one
/// "u v" pair per line. `#` starts a comment; blank lines are skipped.
inline Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  u64 line_no = 0;
  bool have_n = false;
  Graph g;

  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    if (!have_n) {
      long long n = -1;
      if (!(ls >> n)) continue;  // blank or comment-only line
      std::string rest;
      if (n < 0 || (ls >> rest)) throw parse_error("expected a vertex count", line_no);
      g = Graph(static_cast<u64>(n));
      have_n = true;
      continue;
    }
    long long u = 0, v = 0;
    if (!(ls >> u)) continue;
    std::string rest;
    if (!(ls >> v) || (ls >> rest)) throw parse_error("expected 'u v'", line_no);
    if (u < 0 || v < 0 || static_cast<u64>(u) >= g.vertex_count() ||
        static_cast<u64>(v) >= g.vertex_count())
      throw parse_error("vertex id out of range", line_no);
    if (u == v) throw parse_error("self-loop", line_no);
    if (g.has_edge(static_cast<u64>(u), static_cast<u64>(v)))
      throw parse_error("duplicate edge", line_no);
    g.add_edge(static_cast<u64>(u), static_cast<u64>(v));
  }
  if (!have_n) throw parse_error("missing vertex count line", line_no);
  return g;
}

inline std::string format_sequence(const DegreeSequence& seq) {
  if (seq.entries.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < seq.entries.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(seq.entries[i].degree);
    if (seq.entries[i].count > 1) out += '^' + std::to_string(seq.entries[i].count);
  }
  return out;
}

inline std::string format_paired(const PairedDegreeSequence& pseq) {
  return format_sequence(pseq.k_part) + ";" + format_sequence(pseq.s_part);
}

inline std::string format_component(const Component& comp) {
  if (const auto* s = std::get_if<SplitComponent>(&comp)) return format_paired(s->pseq);
  return format_sequence(std::get<TailComponent>(comp).seq);
}

inline std::string format_edge_list(const Graph& g) {
  std::string out = std::to_string(g.vertex_count()) + "\n";
  for (u64 u = 0; u < g.vertex_count(); ++u)
    for (u64 v : g.neighbors(u))
      if (u < v) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

}  // namespace unidist
