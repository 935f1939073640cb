#pragma once

// Row insertion, superstandard tableaux, Yamanouchi words and jamming.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "yamhall/fillings.hpp"
#include "yamhall/shapes.hpp"
#include "yamhall/words.hpp"

namespace yamhall {

/// Rows listed bottom (longest) first, French notation.
struct Tableau {
  std::vector<std::vector<int>> rows;

  Partition shape() const {
    std::vector<int> p;
    for (const auto& r : rows) p.push_back(static_cast<int>(r.size()));
    return Partition(p);
  }

  /// Top row first, each row left to right.
  Word reading_word() const {
    Word w;
    for (auto it = rows.rbegin(); it != rows.rend(); ++it) w.insert(w.end(), it->begin(), it->end());
    return w;
  }

  friend bool operator==(const Tableau&, const Tableau&) = default;
};

struct RskPair {
  Tableau insertion;
  Tableau recording;
};

/// Row bumping. A letter bumps the leftmost entry strictly larger than it,
/// so a later copy of a value counts as larger than an earlier one.
inline RskPair rsk(const Word& w) {
  RskPair out;
  auto& P = out.insertion.rows;
  auto& Q = out.recording.rows;
  for (std::size_t k = 0; k < w.size(); ++k) {
    int x = w[k];
    std::size_t r = 0;
    for (;; ++r) {
      if (r == P.size()) {
        P.push_back({x});
        Q.push_back({static_cast<int>(k) + 1});
        break;
      }
      auto it = std::upper_bound(P[r].begin(), P[r].end(), x);
      if (it == P[r].end()) {
        P[r].push_back(x);
        Q[r].push_back(static_cast<int>(k) + 1);
        break;
      }
      std::swap(x, *it);
    }
  }
  return out;
}

inline Tableau insertion_tableau(const Word& w) { return rsk(w).insertion; }

/// U_lambda: 1..n filled row by row from the bottom.
inline Tableau superstandard(const Partition& lambda) {
  Tableau t;
  int v = 1;
  for (int len : lambda.parts()) {
    std::vector<int> row;
    for (int j = 0; j < len; ++j) row.push_back(v++);
    t.rows.push_back(std::move(row));
  }
  return t;
}

/// All standard Young tableaux of shape lambda, ordered by reading word.
inline std::vector<Tableau> standard_tableaux(const Partition& lambda) {
  const int n = lambda.size();
  std::vector<Tableau> out;
  Tableau cur;
  cur.rows.assign(lambda.length(), {});
  auto rec = [&](auto&& self, int v) -> void {
    if (v > n) {
      out.push_back(cur);
      return;
    }
    for (std::size_t r = 0; r < lambda.length(); ++r) {
      const auto len = cur.rows[r].size();
      if (static_cast<int>(len) >= lambda.parts()[r]) continue;
      if (r > 0 && cur.rows[r - 1].size() <= len) continue;
      cur.rows[r].push_back(v);
      self(self, v + 1);
      cur.rows[r].pop_back();
    }
  };
  rec(rec, 1);
  std::sort(out.begin(), out.end(),
            [](const Tableau& a, const Tableau& b) { return a.reading_word() < b.reading_word(); });
  return out;
}

/// Content lambda when every suffix has at least as many i's as (i+1)'s.
inline std::optional<Partition> is_yamanouchi(const Word& w) {
  std::vector<int> count;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    const int v = *it;
    if (v < 1) return std::nullopt;
    if (static_cast<std::size_t>(v) > count.size()) count.resize(static_cast<std::size_t>(v), 0);
    ++count[static_cast<std::size_t>(v - 1)];
    if (v > 1 && count[static_cast<std::size_t>(v - 1)] > count[static_cast<std::size_t>(v - 2)]) return std::nullopt;
  }
  return Partition(count);
}

/// The partition lambda with P(pi) = U_lambda, if pi is a standardized
/// Yamanouchi word.
inline std::optional<Partition> syam_shape(const Word& perm) {
  Tableau p = insertion_tableau(perm);
  Partition shape = p.shape();
  if (p == superstandard(shape)) return shape;
  return std::nullopt;
}

namespace detail {

// Reading indices (0-based) of each letter, listed from the right end.
inline std::vector<std::vector<int>> indices_from_last(const Word& w) {
  std::vector<std::vector<int>> out;
  for (int i = static_cast<int>(w.size()) - 1; i >= 0; --i) {
    const auto v = static_cast<std::size_t>(w[static_cast<std::size_t>(i)]);
    if (v > out.size()) out.resize(v);
    out[v - 1].push_back(i);
  }
  return out;
}

inline bool jams_with(const Word& u, const PistolIndex& pistols) {
  const auto from_last = indices_from_last(u);
  for (std::size_t i = 0; i + 1 < from_last.size(); ++i) {
    const auto& lo = from_last[i];
    const auto& hi = from_last[i + 1];
    // j-th from last i against (j+1)-th from last i+1, j >= 1.
    for (std::size_t j = 0; j < lo.size() && j + 1 < hi.size(); ++j) {
      const int a = lo[j], b = hi[j + 1];
      if (pistols.spans(std::min(a, b), std::max(a, b))) return true;
    }
  }
  return false;
}

}  // namespace detail

/// Whether w jams d. Permutations and other words are first unstandardized,
/// which leaves Yamanouchi words unchanged.
inline bool jams(const Word& w, const Diagram& d) {
  if (static_cast<int>(w.size()) != d.size())
    throw InvalidInput("jams: word length " + std::to_string(w.size()) + " differs from diagram size " +
                       std::to_string(d.size()));
  return detail::jams_with(unstandardize(w), PistolIndex(d));
}

inline bool syam_member(const Word& perm, const Partition& lambda, const Diagram& d) {
  require_permutation(perm, "syam_member");
  if (static_cast<int>(perm.size()) != lambda.size() || lambda.size() != d.size())
    throw InvalidInput("syam_member: sizes of permutation, shape and diagram differ");
  if (insertion_tableau(perm) != superstandard(lambda)) return false;
  return !jams(perm, d);
}

struct YamFilters {
  bool no_jam = false;
  bool inv_zero = false;
  // For partition shapes with no_jam and inv_zero: restrict the bottom three
  // rows to the admissible patterns while generating. Same output.
  bool first_three_rows = false;
};

namespace detail {

// Bottom three rows of a non-jamming inv-free Yamanouchi filling of a
// partition shape: 1...1 / 2^k 1... / 3^j 1^a 2^b 1^c with j <= k, where a
// block of 2's needs j + a <= k, and 1's after the 2's need j + a = k.
inline bool row_admissible(int row, const std::vector<int>& r, int k) {
  auto run = [&](std::size_t& at, int v) {
    const std::size_t from = at;
    while (at < r.size() && r[at] == v) ++at;
    return static_cast<int>(at - from);
  };
  std::size_t at = 0;
  if (row == 0) return run(at, 1) == static_cast<int>(r.size());
  if (row == 1) {
    run(at, 2);
    run(at, 1);
    return at == r.size();
  }
  const int j = run(at, 3), a = run(at, 1), b = run(at, 2), c = run(at, 1);
  if (at != r.size() || j > k) return false;
  if (b > 0 && j + a > k) return false;
  return !(b > 0 && c > 0 && j + a != k);
}

}  // namespace detail

/// Yam(lambda), optionally restricted to words that do not jam d and/or have
/// inv_d = 0. Built right to left as a backtracking tree; output sorted.
inline std::vector<Word> generate_yam(const Partition& lambda, const std::optional<Diagram>& d = std::nullopt,
                                      YamFilters filters = {}) {
  const int n = lambda.size();
  if ((filters.no_jam || filters.inv_zero) && !d)
    throw InvalidInput("generate_yam: jamming and inversion filters need a diagram");
  if (d && d->size() != n)
    throw InvalidInput("generate_yam: diagram size " + std::to_string(d->size()) + " differs from |lambda| = " +
                       std::to_string(n));

  std::optional<FillingIndex> fx;
  if (d) fx.emplace(*d);

  // Row bookkeeping for the first-three-rows pruning.
  std::optional<Partition> shape;
  if (filters.first_three_rows && filters.no_jam && filters.inv_zero && d) shape = d->as_partition();
  std::vector<int> row_start;  // reading index where row y begins
  if (shape) {
    row_start.assign(shape->length() + 1, 0);
    int acc = n;
    for (std::size_t y = 0; y < shape->length(); ++y) {
      acc -= shape->parts()[y];
      row_start[y] = acc;
    }
  }

  const std::size_t k = lambda.length();
  std::vector<int> count(k + 1, 0);
  std::vector<std::vector<int>> placed(k + 1);  // indices per letter, from last
  Word w(static_cast<std::size_t>(n), 0);
  std::vector<Word> out;
  int second_row_twos = 0;

  auto rows_ok = [&](int p) {
    if (!shape) return true;
    for (std::size_t y = 0; y < std::min<std::size_t>(3, shape->length()); ++y) {
      if (row_start[y] != p) continue;
      const int len = shape->parts()[y];
      std::vector<int> r(w.begin() + p, w.begin() + p + len);
      if (y == 1) {
        second_row_twos = 0;
        while (second_row_twos < len && r[static_cast<std::size_t>(second_row_twos)] == 2) ++second_row_twos;
      }
      if (!detail::row_admissible(static_cast<int>(y), r, second_row_twos)) return false;
    }
    return true;
  };

  auto rec = [&](auto&& self, int p) -> void {
    if (p < 0) {
      out.push_back(w);
      return;
    }
    for (std::size_t letter = 1; letter <= k; ++letter) {
      if (count[letter] >= lambda.parts()[letter - 1]) continue;
      if (letter > 1 && count[letter] + 1 > count[letter - 1]) continue;
      if (filters.no_jam && letter > 1) {
        // This is the (j+1)-th from last of `letter`; compare with the j-th
        // from last of letter - 1.
        const std::size_t j = static_cast<std::size_t>(count[letter]);
        if (j >= 1) {
          const int other = placed[letter - 1][j - 1];
          if (fx->pistols().spans(p, other)) continue;
        }
      }
      w[static_cast<std::size_t>(p)] = static_cast<int>(letter);
      if (filters.inv_zero) {
        bool bad = false;
        for (int t : fx->templates_from(p))
          if (FillingIndex::is_inversion(fx->templates()[static_cast<std::size_t>(t)], w)) {
            bad = true;
            break;
          }
        if (bad) continue;
      }
      if (!rows_ok(p)) continue;
      ++count[letter];
      placed[letter].push_back(p);
      self(self, p - 1);
      placed[letter].pop_back();
      --count[letter];
    }
    w[static_cast<std::size_t>(p)] = 0;
  };
  if (n > 0) rec(rec, n - 1);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace yamhall
