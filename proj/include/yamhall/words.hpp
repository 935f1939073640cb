#pragma once

// Words, permutations and signatures, plus the value-level operations on them.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "yamhall/shapes.hpp"

namespace yamhall {

/// Letters are positive integers; permutations are words that are bijections
/// onto 1..n.
using Word = std::vector<int>;

/// +/- string with one sign per consecutive value pair.
class Signature {
public:
  Signature() = default;
  explicit Signature(std::string signs) : signs_(std::move(signs)) {
    for (char ch : signs_)
      if (ch != '+' && ch != '-') throw InvalidInput("signature must be a +/- string");
  }

  const std::string& str() const { return signs_; }
  std::size_t size() const { return signs_.size(); }
  // 1-based, sign at position i compares i and i + 1.
  bool plus(std::size_t i) const { return signs_[i - 1] == '+'; }

  // Bit j-1 set iff position j is a minus sign.
  std::uint32_t minus_mask() const {
    std::uint32_t m = 0;
    for (std::size_t j = 0; j < signs_.size(); ++j)
      if (signs_[j] == '-') m |= std::uint32_t{1} << j;
    return m;
  }

  static Signature from_minus_mask(std::uint32_t mask, std::size_t length) {
    std::string s(length, '+');
    for (std::size_t j = 0; j < length; ++j)
      if (mask >> j & 1u) s[j] = '-';
    return Signature(std::move(s));
  }

  friend bool operator==(const Signature&, const Signature&) = default;
  friend auto operator<=>(const Signature& a, const Signature& b) { return a.signs_ <=> b.signs_; }

private:
  std::string signs_;
};

inline bool is_permutation_word(const Word& w) {
  std::vector<char> seen(w.size() + 1, 0);
  for (int v : w) {
    if (v < 1 || v > static_cast<int>(w.size()) || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = 1;
  }
  return true;
}

inline void require_permutation(const Word& w, const char* what) {
  if (!is_permutation_word(w)) throw InvalidInput(std::string(what) + ": not a permutation");
}

/// positions[v] = 0-based index of value v (entry 0 unused).
inline std::vector<int> positions(const Word& perm) {
  std::vector<int> pos(perm.size() + 1, -1);
  for (std::size_t i = 0; i < perm.size(); ++i) pos[static_cast<std::size_t>(perm[i])] = static_cast<int>(i);
  return pos;
}

/// Minus mask of the signature of a permutation (bit i-1 set iff i+1 precedes i).
inline std::uint32_t signature_mask(const Word& perm) {
  auto pos = positions(perm);
  std::uint32_t m = 0;
  for (std::size_t i = 1; i < perm.size(); ++i)
    if (pos[i] > pos[i + 1]) m |= std::uint32_t{1} << (i - 1);
  return m;
}

inline Signature signature(const Word& perm) {
  if (perm.empty()) throw InvalidInput("signature of the empty permutation");
  require_permutation(perm, "signature");
  return Signature::from_minus_mask(signature_mask(perm), perm.size() - 1);
}

/// Equal letters are numbered left to right, smaller letters first.
inline Word standardize(const Word& w) {
  std::vector<int> order(w.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return w[a] < w[b]; });
  Word out(w.size());
  for (std::size_t k = 0; k < order.size(); ++k) out[static_cast<std::size_t>(order[k])] = static_cast<int>(k) + 1;
  return out;
}

/// Value i becomes 1 + #{j < i : j + 1 occurs before j} in st(w).
inline Word unstandardize(const Word& w) {
  Word p = standardize(w);
  auto pos = positions(p);
  std::vector<int> label(p.size() + 1, 1);
  for (std::size_t i = 2; i <= p.size(); ++i)
    label[i] = label[i - 1] + (pos[i] < pos[i - 1] ? 1 : 0);
  Word out(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) out[k] = label[static_cast<std::size_t>(p[k])];
  return out;
}

/// Subword of the letters lying in `values`, order preserved.
inline Word restrict_word(const Word& w, const std::vector<int>& values) {
  Word out;
  for (int v : w)
    if (std::find(values.begin(), values.end(), v) != values.end()) out.push_back(v);
  return out;
}

inline Word reverse_values(const Word& perm) {
  require_permutation(perm, "reverse_values");
  const int n = static_cast<int>(perm.size());
  Word out;
  out.reserve(perm.size());
  for (int v : perm) out.push_back(n + 1 - v);
  return out;
}

struct PatternOccurrence {
  int shift = 0;             // pi at index i_j equals p_j + shift
  std::vector<int> indices;  // 1-based, increasing
  friend bool operator==(const PatternOccurrence&, const PatternOccurrence&) = default;
};

/// Occurrences of p in pi whose letters are consecutive values, ordered by shift.
inline std::vector<PatternOccurrence> strict_pattern_find(const Word& pi, const Word& p) {
  std::vector<PatternOccurrence> out;
  const int n = static_cast<int>(pi.size());
  const int m = static_cast<int>(p.size());
  if (m == 0 || m > n) return out;
  auto pos = positions(pi);
  // Value k + p_j must sit at increasing positions as j grows.
  for (int k = 0; k + m <= n; ++k) {
    bool ok = true;
    for (int j = 0; j + 1 < m && ok; ++j)
      ok = pos[static_cast<std::size_t>(k + p[j])] < pos[static_cast<std::size_t>(k + p[j + 1])];
    if (!ok) continue;
    PatternOccurrence occ{k, {}};
    for (int j = 0; j < m; ++j) occ.indices.push_back(pos[static_cast<std::size_t>(k + p[j])] + 1);
    out.push_back(std::move(occ));
  }
  return out;
}

/// Digit string when every letter is at most 9, comma separated otherwise.
inline std::string format_word(const Word& w) {
  bool small = std::all_of(w.begin(), w.end(), [](int v) { return v >= 0 && v <= 9; });
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!small && i) s += ",";
    s += std::to_string(w[i]);
  }
  return s;
}

inline Word parse_word(const std::string& text) {
  std::string t;
  for (char ch : text)
    if (ch != ' ' && ch != '\t') t += ch;
  if (t.empty()) return {};
  Word w;
  if (t.find(',') == std::string::npos) {
    for (char ch : t) {
      if (ch < '1' || ch > '9') throw InvalidInput("word: bad letter '" + std::string(1, ch) + "'");
      w.push_back(ch - '0');
    }
    return w;
  }
  std::size_t start = 0;
  while (start <= t.size()) {
    auto end = t.find(',', start);
    if (end == std::string::npos) end = t.size();
    std::string tok = t.substr(start, end - start);
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      throw InvalidInput("word: bad letter '" + tok + "'");
    int v = std::stoi(tok);
    if (v < 1) throw InvalidInput("word: letters must be positive");
    w.push_back(v);
    start = end + 1;
  }
  return w;
}

}  // namespace yamhall
