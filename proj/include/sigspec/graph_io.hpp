#pragma once

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sigspec/signed_graph.hpp"

namespace sigspec {

/// Malformed graph text. line() is 1-based; 0 means end of input.
class GraphParseError : public std::runtime_error {
 public:
  GraphParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

namespace detail {

inline std::vector<std::string> tokens_of(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

inline int parse_int(const std::string& tok, int line, const char* what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(tok, &used);
  } catch (const std::exception&) {
    throw GraphParseError(line, std::string("expected integer ") + what + ", got '" + tok + "'");
  }
  if (used != tok.size()) throw GraphParseError(line, std::string("expected integer ") + what + ", got '" + tok + "'");
  return v;
}

inline Sign parse_sign(const std::string& tok, int line) {
  if (tok == "+" || tok == "+1" || tok == "1") return Sign::plus;
  if (tok == "-" || tok == "-1") return Sign::minus;
  throw GraphParseError(line, "bad sign token '" + tok + "'");
}

}  // namespace detail

/// Reads the text format:
///   n m
///   i j s          (m lines, s in {+, -})
///   marking s ...  (optional, n signs)
/// '#' starts a comment. Without a marking line the canonical marking is used.
inline MarkedSignedGraph parse_graph(std::string_view text) {
  struct Line {
    int number;
    std::vector<std::string> tokens;
  };
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = text.find('\n', pos);
    const std::string_view raw = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
    ++number;
    auto toks = detail::tokens_of(raw);
    if (!toks.empty()) lines.push_back({number, std::move(toks)});
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  if (lines.empty()) throw GraphParseError(0, "empty graph description");

  const Line& header = lines.front();
  if (header.tokens.size() != 2) throw GraphParseError(header.number, "header must be 'n m'");
  const int n = detail::parse_int(header.tokens[0], header.number, "vertex count");
  const int m = detail::parse_int(header.tokens[1], header.number, "edge count");
  if (n < 0 || m < 0) throw GraphParseError(header.number, "counts must be non-negative");
  if (lines.size() < static_cast<std::size_t>(m) + 1)
    throw GraphParseError(0, "expected " + std::to_string(m) + " edge lines, found " + std::to_string(lines.size() - 1));

  std::vector<Edge> edges;
  std::vector<std::vector<bool>> seen(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
  for (int k = 0; k < m; ++k) {
    const Line& l = lines[static_cast<std::size_t>(k) + 1];
    if (l.tokens.size() != 3) throw GraphParseError(l.number, "edge line must be 'i j s'");
    int i = detail::parse_int(l.tokens[0], l.number, "vertex");
    int j = detail::parse_int(l.tokens[1], l.number, "vertex");
    const Sign s = detail::parse_sign(l.tokens[2], l.number);
    if (i < 0 || i >= n || j < 0 || j >= n)
      throw GraphParseError(l.number, "vertex index out of range 0.." + std::to_string(n - 1));
    if (i == j) throw GraphParseError(l.number, "self-loop at vertex " + std::to_string(i));
    if (i > j) std::swap(i, j);
    auto&& flag = seen[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    if (flag) throw GraphParseError(l.number, "duplicate edge (" + std::to_string(i) + ", " + std::to_string(j) + ")");
    flag = true;
    edges.push_back({i, j, s});
  }
  SignedGraph g(n, std::move(edges));

  std::optional<Marking> marking;
  for (std::size_t k = static_cast<std::size_t>(m) + 1; k < lines.size(); ++k) {
    const Line& l = lines[k];
    if (l.tokens.front() != "marking") throw GraphParseError(l.number, "unexpected content after edge list");
    if (marking) throw GraphParseError(l.number, "marking given twice");
    if (l.tokens.size() != static_cast<std::size_t>(n) + 1)
      throw GraphParseError(l.number, "marking needs exactly " + std::to_string(n) + " signs");
    std::vector<Sign> mu;
    for (std::size_t t = 1; t < l.tokens.size(); ++t) mu.push_back(detail::parse_sign(l.tokens[t], l.number));
    marking = Marking(std::move(mu));
  }
  if (!marking) marking = canonical_marking(g);
  return {std::move(g), std::move(*marking)};
}

/// Writes the text format, always including the marking line. Each entry
/// of `comments` becomes a leading '# ' line.
inline std::string serialize_graph(const MarkedSignedGraph& mg, const std::vector<std::string>& comments = {}) {
  std::ostringstream out;
  for (const auto& c : comments) out << "# " << c << '\n';
  out << mg.graph.order() << ' ' << mg.graph.size() << '\n';
  for (const auto& e : mg.graph.edges()) out << e.u << ' ' << e.v << ' ' << to_char(e.sign) << '\n';
  out << "marking";
  for (Sign s : mg.marking.values()) out << ' ' << to_char(s);
  out << '\n';
  return out.str();
}

}  // namespace sigspec
