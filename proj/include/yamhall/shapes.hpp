#pragma once

// Lattice diagrams in Z x Z: cells, partitions (French notation), reading
// order, pistols, legs and the inversion templates used by inv.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace yamhall {

struct InvalidInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct BoundExceeded : std::length_error {
  using std::length_error::length_error;
};

struct Cell {
  int col = 0;
  int row = 0;

  friend constexpr bool operator==(const Cell&, const Cell&) = default;

  // Reading-order comparison: higher rows first, then left to right.
  friend constexpr std::strong_ordering operator<=>(const Cell& a, const Cell& b) {
    if (a.row != b.row) return b.row <=> a.row;
    return a.col <=> b.col;
  }

  constexpr Cell below() const { return {col, row - 1}; }
  constexpr Cell above() const { return {col, row + 1}; }
};

class Partition {
public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 0) throw InvalidInput("partition parts must be nonnegative");
      if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
        throw InvalidInput("partition parts must be weakly decreasing");
    }
  }

  const std::vector<int>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }

  // 1-based part, zero past the end.
  int operator[](std::size_t i) const {
    return i >= 1 && i <= parts_.size() ? parts_[i - 1] : 0;
  }

  int size() const {
    int s = 0;
    for (int p : parts_) s += p;
    return s;
  }

  Partition conjugate() const {
    std::vector<int> c;
    for (int j = 1; parts_.size() > 0 && j <= parts_.front(); ++j) {
      int k = 0;
      for (int p : parts_)
        if (p >= j) ++k;
      c.push_back(k);
    }
    return Partition(std::move(c));
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(parts_[i]);
    }
    return s + ")";
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  // Plain lexicographic order on the parts.
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

private:
  std::vector<int> parts_;
};

// Descending lexicographic order, the canonical order for Schur terms.
struct ReverseLex {
  bool operator()(const Partition& a, const Partition& b) const { return b < a; }
};

/// All partitions of n in descending lexicographic order.
inline std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

/// Origin-anchored containment of partition diagrams.
inline bool partition_contains(const Partition& mu, const Partition& nu) {
  if (mu.length() < nu.length()) return false;
  for (std::size_t i = 1; i <= nu.length(); ++i)
    if (mu[i] < nu[i]) return false;
  return true;
}

/// A finite set of cells. Cells are kept sorted in reading order, so the
/// position of a cell in cells() is its (0-based) reading index.
class Diagram {
public:
  Diagram() = default;

  explicit Diagram(std::vector<Cell> cells) : cells_(std::move(cells)) {
    std::sort(cells_.begin(), cells_.end());
    if (std::adjacent_find(cells_.begin(), cells_.end()) != cells_.end())
      throw InvalidInput("diagram contains a duplicate cell");
  }

  const std::vector<Cell>& cells() const { return cells_; }
  int size() const { return static_cast<int>(cells_.size()); }
  bool empty() const { return cells_.empty(); }

  bool contains(Cell c) const { return std::binary_search(cells_.begin(), cells_.end(), c); }

  bool contains(const Diagram& other) const {
    return std::includes(cells_.begin(), cells_.end(), other.cells_.begin(), other.cells_.end());
  }

  std::optional<int> index_of(Cell c) const {
    auto it = std::lower_bound(cells_.begin(), cells_.end(), c);
    if (it == cells_.end() || *it != c) return std::nullopt;
    return static_cast<int>(it - cells_.begin());
  }

  Diagram conjugate() const {
    std::vector<Cell> out;
    out.reserve(cells_.size());
    for (Cell c : cells_) out.push_back({c.row, c.col});
    return Diagram(std::move(out));
  }

  /// Translate so that the minimal column and minimal row are both zero.
  Diagram normalized() const {
    if (cells_.empty()) return *this;
    int mc = cells_.front().col, mr = cells_.front().row;
    for (Cell c : cells_) {
      mc = std::min(mc, c.col);
      mr = std::min(mr, c.row);
    }
    std::vector<Cell> out;
    for (Cell c : cells_) out.push_back({c.col - mc, c.row - mr});
    return Diagram(std::move(out));
  }

  /// The partition whose French diagram is this one, if any.
  std::optional<Partition> as_partition() const {
    if (cells_.empty()) return Partition{};
    int top = cells_.front().row;
    std::vector<int> rows(static_cast<std::size_t>(top) + 1, 0);
    for (Cell c : cells_) {
      if (c.row < 0 || c.row > top || c.col < 0) return std::nullopt;
      ++rows[static_cast<std::size_t>(c.row)];
    }
    for (Cell c : cells_)
      if (c.col >= rows[static_cast<std::size_t>(c.row)]) return std::nullopt;
    for (std::size_t i = 0; i + 1 < rows.size(); ++i)
      if (rows[i] < rows[i + 1] || rows[i + 1] == 0) return std::nullopt;
    return Partition(rows);
  }

  std::string to_string() const {
    std::string s = "c:";
    for (std::size_t i = 0; i < cells_.size(); ++i) {
      if (i) s += ";";
      s += std::to_string(cells_[i].col) + "," + std::to_string(cells_[i].row);
    }
    return s;
  }

  friend bool operator==(const Diagram&, const Diagram&) = default;
  friend auto operator<=>(const Diagram& a, const Diagram& b) { return a.cells_ <=> b.cells_; }

private:
  std::vector<Cell> cells_;
};

/// French diagram of a partition: row y has parts[y] cells starting at x = 0.
inline Diagram diagram_from_partition(const Partition& lambda) {
  std::vector<Cell> cells;
  for (std::size_t y = 0; y < lambda.length(); ++y)
    for (int x = 0; x < lambda.parts()[y]; ++x) cells.push_back({x, static_cast<int>(y)});
  return Diagram(std::move(cells));
}

inline std::vector<Cell> reading_order(const Diagram& d) { return d.cells(); }

/// Number of cells strictly above c in its column.
inline int leg(const Diagram& d, Cell c) {
  if (!d.contains(c)) throw InvalidInput("leg: cell is not in the diagram");
  int k = 0;
  for (Cell o : d.cells())
    if (o.col == c.col && o.row > c.row) ++k;
  return k;
}

/// Reading-index intervals [first, last] (0-based, inclusive) of all pistols.
/// The pistol of c runs from c to the last cell whose reading position does
/// not pass the lattice point directly below c; that point need not be a cell.
struct Pistol {
  int first = 0;
  int last = 0;
  int length() const { return last - first + 1; }
  friend bool operator==(const Pistol&, const Pistol&) = default;
};

inline std::vector<Pistol> pistols(const Diagram& d) {
  const auto& cells = d.cells();
  std::vector<Pistol> out;
  out.reserve(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const Cell limit = cells[i].below();
    std::size_t j = i;
    while (j + 1 < cells.size() && !(limit < cells[j + 1])) ++j;
    out.push_back({static_cast<int>(i), static_cast<int>(j)});
  }
  return out;
}

/// Answers "is this set of reading indices contained in one pistol" in O(1)
/// given the minimum and maximum of the set.
class PistolIndex {
public:
  PistolIndex() = default;

  explicit PistolIndex(const Diagram& d) {
    auto ps = pistols(d);
    reach_.resize(ps.size());
    int best = -1;
    for (std::size_t i = 0; i < ps.size(); ++i) {
      best = std::max(best, ps[i].last);
      reach_[i] = best;
    }
    max_len_ = 0;
    for (const auto& p : ps) max_len_ = std::max(max_len_, p.length());
  }

  // 0-based indices, lo <= hi.
  bool spans(int lo, int hi) const {
    if (lo < 0 || hi >= static_cast<int>(reach_.size()) || lo > hi) return false;
    return reach_[static_cast<std::size_t>(lo)] >= hi;
  }

  template <class Range>
  bool pistoled(const Range& indices) const {
    bool any = false;
    int lo = 0, hi = 0;
    for (int i : indices) {
      if (!any) {
        lo = hi = i;
        any = true;
      } else {
        lo = std::min(lo, i);
        hi = std::max(hi, i);
      }
    }
    return !any || spans(lo, hi);
  }

  int max_pistol_length() const { return max_len_; }

private:
  std::vector<int> reach_;
  int max_len_ = 0;
};

/// S is 1-based reading indices, as in the CLI and the index tuples reported
/// by pattern search.
inline bool is_pistoled(const Diagram& d, const std::vector<int>& one_based) {
  std::vector<int> z;
  for (int i : one_based) z.push_back(i - 1);
  return PistolIndex(d).pistoled(z);
}

struct CellTriple {
  Cell c, d, e;
  friend bool operator==(const CellTriple&, const CellTriple&) = default;
};

struct CellPair {
  Cell first, second;
  friend bool operator==(const CellPair&, const CellPair&) = default;
};

struct TripleTemplates {
  std::vector<CellTriple> triples;  // c, d in one row, e directly below c
  std::vector<CellPair> pairs_cd;   // (c, d), the position below c empty
  std::vector<CellPair> pairs_de;   // (d, e), the position of c empty
  int max_inv = 0;
};

/// Every (c, d, e) placement with c, d in one row (c strictly left of d) and e
/// directly below c, classified by which of c and e belong to the diagram.
inline TripleTemplates triple_templates(const Diagram& dg) {
  TripleTemplates t;
  // Candidate positions for c: cells, and empty points directly above a cell.
  std::vector<Cell> cand = dg.cells();
  for (Cell c : dg.cells())
    if (!dg.contains(c.above())) cand.push_back(c.above());
  std::sort(cand.begin(), cand.end());

  for (Cell c : cand) {
    const bool has_c = dg.contains(c);
    const bool has_e = dg.contains(c.below());
    if (!has_c && !has_e) continue;
    for (Cell d : dg.cells()) {
      if (d.row != c.row || d.col <= c.col) continue;
      if (has_c && has_e)
        t.triples.push_back({c, d, c.below()});
      else if (has_c)
        t.pairs_cd.push_back({c, d});
      else
        t.pairs_de.push_back({d, c.below()});
    }
  }
  t.max_inv = static_cast<int>(t.triples.size() + t.pairs_cd.size() + t.pairs_de.size());
  return t;
}

/// Cells that have a cell directly below them; the only possible descents.
inline Diagram descent_capable(const Diagram& d) {
  std::vector<Cell> out;
  for (Cell c : d.cells())
    if (d.contains(c.below())) out.push_back(c);
  return Diagram(std::move(out));
}

}  // namespace yamhall
