#pragma once

// Realizable descent sets, the leading Yamanouchi word and the leading Schur
// term of R_{gamma, delta}.

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "yamhall/rsk_yam.hpp"
#include "yamhall/shapes.hpp"
#include "yamhall/words.hpp"

namespace yamhall {

/// Part 1: every cell of gamma has a cell of delta directly below it.
/// Part 2: for no interval I with |I| >= 2 and columns x1 < x2 is (x1, I) a
/// run of descents capped by non-descents at both ends, the bottom one a cell
/// of delta, while (x2, I minus its minimum) are all descents.
inline bool is_realizable(const Diagram& gamma, const Diagram& dg) {
  if (!dg.contains(gamma)) throw InvalidInput("is_realizable: descent set is not contained in the diagram");
  for (Cell c : gamma.cells())
    if (!dg.contains(c.below())) return false;
  if (gamma.empty()) return true;

  std::set<int> cols;
  int lo = dg.cells().front().row, hi = lo;
  for (Cell c : dg.cells()) {
    cols.insert(c.col);
    lo = std::min(lo, c.row);
    hi = std::max(hi, c.row);
  }
  // Longest run of descents starting at (x, y) and going up.
  auto run_up = [&](int x, int y) {
    int k = 0;
    while (gamma.contains(Cell{x, y + k})) ++k;
    return k;
  };

  for (int x1 : cols)
    for (int bottom = lo; bottom <= hi; ++bottom) {
      const Cell base{x1, bottom};
      if (!dg.contains(base) || gamma.contains(base)) continue;
      // With I = [bottom, top] the hypothesis forces top to be the first
      // non-descent above bottom in column x1.
      const int height = run_up(x1, bottom + 1) + 1;
      for (int x2 : cols)
        if (x2 > x1 && run_up(x2, bottom + 1) >= height) return false;
    }
  return true;
}

/// Reading word of the filling with 1 on delta minus gamma and, going up each
/// column, 1 + the entry below on gamma.
inline Word leading_yam_word(const Diagram& gamma, const Diagram& dg) {
  if (!is_realizable(gamma, dg)) throw InvalidInput("leading_yam_word: descent set is not realizable");
  std::map<Cell, int> value;
  std::vector<Cell> by_row = dg.cells();
  std::sort(by_row.begin(), by_row.end(), [](Cell a, Cell b) { return a.row != b.row ? a.row < b.row : a.col < b.col; });
  for (Cell c : by_row) value[c] = gamma.contains(c) ? value.at(c.below()) + 1 : 1;
  Word w;
  for (Cell c : dg.cells()) w.push_back(value.at(c));
  return w;
}

/// Content of the leading Yamanouchi word.
inline Partition leading_term(const Diagram& gamma, const Diagram& dg) {
  const Word w = leading_yam_word(gamma, dg);
  auto content = is_yamanouchi(w);
  if (!content) throw std::logic_error("leading_term: leading word is not Yamanouchi");
  return *content;
}

}  // namespace yamhall
