#pragma once

// Fillings of diagrams and the statistics inv, maj and Des.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "yamhall/shapes.hpp"
#include "yamhall/words.hpp"

namespace yamhall {

/// Size limits for the brute-force enumerations. YAMHALL_MAX_N overrides both
/// defaults.
struct Bounds {
  int max_fill = 10;
  int max_graph = 8;
  bool force = false;

  static Bounds from_env() {
    Bounds b;
    if (const char* s = std::getenv("YAMHALL_MAX_N")) {
      int v = std::atoi(s);
      if (v > 0) b.max_fill = b.max_graph = v;
    }
    return b;
  }

  void check_fill(int n, const char* what) const {
    if (!force && n > max_fill)
      throw BoundExceeded(std::string(what) + ": diagram size " + std::to_string(n) +
                          " exceeds enumeration bound " + std::to_string(max_fill));
  }
  void check_graph(int n, const char* what) const {
    if (!force && n > max_graph)
      throw BoundExceeded(std::string(what) + ": size " + std::to_string(n) + " exceeds graph bound " +
                          std::to_string(max_graph));
  }
};

/// Reading-index view of a diagram: everything inv, maj and Des need, keyed
/// by 0-based reading index so statistics run directly on reading words.
class FillingIndex {
public:
  enum class Kind : std::uint8_t { Triple, PairCD, PairDE };
  struct Template {
    Kind kind;
    int a, b, c;  // triple: (c, d, e); pairCD: (c, d, -1); pairDE: (d, e, -1)
  };

  FillingIndex() = default;

  explicit FillingIndex(const Diagram& d) : diagram_(d), pistols_(d) {
    const auto& cells = d.cells();
    const int n = d.size();
    below_.assign(static_cast<std::size_t>(n), -1);
    weight_.assign(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
      if (auto b = d.index_of(cells[static_cast<std::size_t>(i)].below())) {
        below_[static_cast<std::size_t>(i)] = *b;
        weight_[static_cast<std::size_t>(i)] = 1 + leg(d, cells[static_cast<std::size_t>(i)]);
        capable_mask_ |= std::uint32_t{1} << i;
        max_maj_ += weight_[static_cast<std::size_t>(i)];
      }
    }
    const auto t = triple_templates(d);
    auto idx = [&](Cell c) { return *d.index_of(c); };
    for (const auto& x : t.triples) templates_.push_back({Kind::Triple, idx(x.c), idx(x.d), idx(x.e)});
    for (const auto& x : t.pairs_cd) templates_.push_back({Kind::PairCD, idx(x.first), idx(x.second), -1});
    for (const auto& x : t.pairs_de) templates_.push_back({Kind::PairDE, idx(x.first), idx(x.second), -1});
    by_first_.assign(static_cast<std::size_t>(n), {});
    for (std::size_t k = 0; k < templates_.size(); ++k)
      by_first_[static_cast<std::size_t>(templates_[k].a)].push_back(static_cast<int>(k));
  }

  const Diagram& diagram() const { return diagram_; }
  int size() const { return diagram_.size(); }
  const PistolIndex& pistols() const { return pistols_; }
  const std::vector<Template>& templates() const { return templates_; }
  int max_inv() const { return static_cast<int>(templates_.size()); }
  int max_maj() const { return max_maj_; }
  int below(int i) const { return below_[static_cast<std::size_t>(i)]; }
  int maj_weight(int i) const { return weight_[static_cast<std::size_t>(i)]; }
  std::uint32_t capable_mask() const { return capable_mask_; }
  // Templates whose smallest reading index is i.
  const std::vector<int>& templates_from(int i) const { return by_first_[static_cast<std::size_t>(i)]; }

  static bool is_inversion(const Template& t, std::span<const int> w) {
    switch (t.kind) {
      case Kind::Triple: {
        const int c = w[static_cast<std::size_t>(t.a)], d = w[static_cast<std::size_t>(t.b)],
                  e = w[static_cast<std::size_t>(t.c)];
        return (e < d && d < c) || (c <= e && e < d) || (d < c && c <= e);
      }
      case Kind::PairCD:
        return w[static_cast<std::size_t>(t.a)] > w[static_cast<std::size_t>(t.b)];
      case Kind::PairDE:
        return w[static_cast<std::size_t>(t.a)] > w[static_cast<std::size_t>(t.b)];
    }
    return false;
  }

  int inv(std::span<const int> w) const {
    int k = 0;
    for (const auto& t : templates_) k += is_inversion(t, w) ? 1 : 0;
    return k;
  }

  bool inv_is_zero(std::span<const int> w) const {
    for (const auto& t : templates_)
      if (is_inversion(t, w)) return false;
    return true;
  }

  /// Bit i set iff reading index i is a descent.
  std::uint32_t descent_mask(std::span<const int> w) const {
    std::uint32_t m = 0;
    for (std::size_t i = 0; i < below_.size(); ++i)
      if (below_[i] >= 0 && w[i] > w[static_cast<std::size_t>(below_[i])]) m |= std::uint32_t{1} << i;
    return m;
  }

  int maj_of_mask(std::uint32_t mask) const {
    int s = 0;
    for (std::size_t i = 0; i < weight_.size(); ++i)
      if (mask >> i & 1u) s += weight_[i];
    return s;
  }

  int maj(std::span<const int> w) const { return maj_of_mask(descent_mask(w)); }

  std::uint32_t mask_of(const Diagram& subset) const {
    std::uint32_t m = 0;
    for (Cell c : subset.cells()) {
      auto i = diagram_.index_of(c);
      if (!i) throw InvalidInput("descent set is not contained in the diagram");
      m |= std::uint32_t{1} << *i;
    }
    return m;
  }

  Diagram cells_of(std::uint32_t mask) const {
    std::vector<Cell> out;
    for (int i = 0; i < size(); ++i)
      if (mask >> i & 1u) out.push_back(diagram_.cells()[static_cast<std::size_t>(i)]);
    return Diagram(std::move(out));
  }

private:
  Diagram diagram_;
  PistolIndex pistols_;
  std::vector<int> below_;
  std::vector<int> weight_;
  std::vector<Template> templates_;
  std::vector<std::vector<int>> by_first_;
  std::uint32_t capable_mask_ = 0;
  int max_maj_ = 0;
};

class Filling {
public:
  /// T_delta(w): the cell at reading index i receives w_i.
  Filling(Diagram d, Word w) : diagram_(std::move(d)), word_(std::move(w)) {
    if (static_cast<int>(word_.size()) != diagram_.size())
      throw InvalidInput("filling: word length " + std::to_string(word_.size()) + " differs from diagram size " +
                         std::to_string(diagram_.size()));
    for (int v : word_)
      if (v < 1) throw InvalidInput("filling: values must be positive");
  }

  const Diagram& diagram() const { return diagram_; }
  const Word& reading_word() const { return word_; }
  bool is_standard() const { return is_permutation_word(word_); }

  int at(Cell c) const {
    auto i = diagram_.index_of(c);
    if (!i) throw InvalidInput("filling: cell is not in the diagram");
    return word_[static_cast<std::size_t>(*i)];
  }

private:
  Diagram diagram_;
  Word word_;
};

inline Filling fill(const Diagram& d, const Word& w) { return Filling(d, w); }

inline Diagram descent_cells(const Filling& t) {
  FillingIndex fx(t.diagram());
  return fx.cells_of(fx.descent_mask(t.reading_word()));
}

inline int maj_of_descents(const Diagram& d, const Diagram& gamma) {
  int s = 0;
  for (Cell c : gamma.cells()) {
    if (!d.contains(c)) throw InvalidInput("maj_of_descents: cell is not in the diagram");
    s += 1 + leg(d, c);
  }
  return s;
}

inline int maj(const Filling& t) { return maj_of_descents(t.diagram(), descent_cells(t)); }

inline int inv(const Filling& t) { return FillingIndex(t.diagram()).inv(t.reading_word()); }

/// Visits every standard filling of d once, as its reading word, in
/// lexicographic order. The visitor may return false to stop early.
template <class Visitor>
void for_each_standard_filling(const Diagram& d, Visitor&& visit, const Bounds& bounds = Bounds::from_env()) {
  bounds.check_fill(d.size(), "enumerate_standard_fillings");
  Word w(static_cast<std::size_t>(d.size()));
  std::iota(w.begin(), w.end(), 1);
  do {
    if constexpr (std::is_same_v<std::invoke_result_t<Visitor&, const Word&>, bool>) {
      if (!visit(static_cast<const Word&>(w))) return;
    } else {
      visit(static_cast<const Word&>(w));
    }
  } while (std::next_permutation(w.begin(), w.end()));
}

inline std::vector<Filling> enumerate_standard_fillings(
    const Diagram& d, const std::function<bool(const Word&)>& filter = {},
    const Bounds& bounds = Bounds::from_env()) {
  std::vector<Filling> out;
  for_each_standard_filling(
      d,
      [&](const Word& w) {
        if (!filter || filter(w)) out.emplace_back(d, w);
      },
      bounds);
  return out;
}

}  // namespace yamhall
