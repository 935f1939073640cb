#pragma once

// Text forms of partitions and diagrams.
//
//   partition:  "4,3,2"
//   diagram:    "p:4,3,2"            French diagram of a partition
//               "c:0,0;1,0;0,1"      explicit (column,row) cells
//
// Whitespace is ignored everywhere.

#include <string>
#include <vector>

#include "yamhall/shapes.hpp"

namespace yamhall {

namespace detail {

inline std::string strip_spaces(const std::string& s) {
  std::string out;
  for (char ch : s)
    if (ch != ' ' && ch != '\t' && ch != '\n' && ch != '\r') out += ch;
  return out;
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    auto end = s.find(sep, start);
    out.push_back(s.substr(start, end == std::string::npos ? std::string::npos : end - start));
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return out;
}

inline int parse_int(const std::string& tok, const std::string& context) {
  std::size_t i = 0;
  if (!tok.empty() && tok[0] == '-') i = 1;
  if (i == tok.size() || tok.find_first_not_of("0123456789", i) != std::string::npos || tok.size() > 9)
    throw InvalidInput(context + ": bad integer '" + tok + "'");
  return std::stoi(tok);
}

}  // namespace detail

inline Partition parse_partition(const std::string& text) {
  const std::string t = detail::strip_spaces(text);
  if (t.empty()) return Partition{};
  std::vector<int> parts;
  for (const auto& tok : detail::split(t, ',')) {
    const int v = detail::parse_int(tok, "partition");
    if (v <= 0) throw InvalidInput("partition: parts must be positive");
    parts.push_back(v);
  }
  return Partition(parts);
}

inline Diagram parse_diagram_spec(const std::string& text) {
  const std::string t = detail::strip_spaces(text);
  if (t.rfind("p:", 0) == 0) return diagram_from_partition(parse_partition(t.substr(2)));
  if (t.rfind("c:", 0) != 0) throw InvalidInput("diagram: expected 'p:' or 'c:' prefix in '" + text + "'");
  const std::string body = t.substr(2);
  std::vector<Cell> cells;
  if (!body.empty())
    for (const auto& item : detail::split(body, ';')) {
      const auto xy = detail::split(item, ',');
      if (xy.size() != 2) throw InvalidInput("diagram: cell '" + item + "' is not 'col,row'");
      cells.push_back({detail::parse_int(xy[0], "diagram"), detail::parse_int(xy[1], "diagram")});
    }
  return Diagram(std::move(cells));
}

}  // namespace yamhall
