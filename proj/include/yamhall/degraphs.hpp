#pragma once

// Signed colored graphs: Haiman's involutions, the Assaf graph of a diagram,
// standard dual equivalence graphs, restriction, isomorphism and the checks
// that decide whether a component is a dual equivalence graph.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "yamhall/fillings.hpp"
#include "yamhall/qsym_schur.hpp"
#include "yamhall/rsk_yam.hpp"
#include "yamhall/shapes.hpp"
#include "yamhall/words.hpp"

namespace yamhall {

/// Vertices are words (permutations or tableau reading words). Edges of each
/// color form a matching, stored as a partner array per color.
class SignedColoredGraph {
public:
  SignedColoredGraph() = default;

  explicit SignedColoredGraph(int degree) : n_(degree) {
    partner_.assign(static_cast<std::size_t>(std::max(0, degree - 2)), {});
  }

  int degree() const { return n_; }
  int vertex_count() const { return static_cast<int>(keys_.size()); }
  const std::vector<Word>& vertices() const { return keys_; }
  const Word& vertex(int v) const { return keys_[static_cast<std::size_t>(v)]; }

  // Colors run over 2..degree-1.
  int min_color() const { return 2; }
  int max_color() const { return n_ - 1; }

  Signature signature(int v) const {
    return Signature::from_minus_mask(sig_[static_cast<std::size_t>(v)], static_cast<std::size_t>(std::max(0, n_ - 1)));
  }
  std::uint32_t signature_mask(int v) const { return sig_[static_cast<std::size_t>(v)]; }

  int add_vertex(Word key, std::uint32_t minus_mask) {
    keys_.push_back(std::move(key));
    sig_.push_back(minus_mask);
    for (auto& p : partner_) p.push_back(-1);
    return vertex_count() - 1;
  }

  /// -1 when v has no i-edge.
  int partner(int color, int v) const {
    return partner_[static_cast<std::size_t>(color - 2)][static_cast<std::size_t>(v)];
  }

  void add_edge(int color, int u, int v) {
    if (color < 2 || color > n_ - 1) throw InvalidInput("edge color out of range");
    auto& p = partner_[static_cast<std::size_t>(color - 2)];
    const int pu = p[static_cast<std::size_t>(u)], pv = p[static_cast<std::size_t>(v)];
    if (pu == v && pv == u) return;
    if (pu != -1 || pv != -1 || u == v) throw InvalidInput("edges of one color must form a matching");
    p[static_cast<std::size_t>(u)] = v;
    p[static_cast<std::size_t>(v)] = u;
  }

  /// Unordered pairs {u, v} with u < v.
  std::vector<std::pair<int, int>> edges(int color) const {
    std::vector<std::pair<int, int>> out;
    const auto& p = partner_[static_cast<std::size_t>(color - 2)];
    for (std::size_t u = 0; u < p.size(); ++u)
      if (p[u] > static_cast<int>(u)) out.emplace_back(static_cast<int>(u), p[u]);
    return out;
  }

  std::optional<int> find(const Word& key) const {
    for (int v = 0; v < vertex_count(); ++v)
      if (keys_[static_cast<std::size_t>(v)] == key) return v;
    return std::nullopt;
  }

private:
  int n_ = 0;
  std::vector<Word> keys_;
  std::vector<std::uint32_t> sig_;
  std::vector<std::vector<int>> partner_;
};

namespace detail {

inline void check_color(int i, std::size_t n, const char* what) {
  if (i < 2 || i + 1 > static_cast<int>(n))
    throw InvalidInput(std::string(what) + ": color " + std::to_string(i) + " out of range for n = " +
                       std::to_string(n));
}

// Which of the values i-1, i, i+1 sits between the other two (by position).
inline int middle_value(const std::vector<int>& pos, int i) {
  const int a = pos[static_cast<std::size_t>(i - 1)], b = pos[static_cast<std::size_t>(i)],
            c = pos[static_cast<std::size_t>(i + 1)];
  if ((a < b && b < c) || (c < b && b < a)) return i;
  if ((b < a && a < c) || (c < a && a < b)) return i - 1;
  return i + 1;
}

inline Word swap_values(Word w, const std::vector<int>& pos, int x, int y) {
  std::swap(w[static_cast<std::size_t>(pos[static_cast<std::size_t>(x)])],
            w[static_cast<std::size_t>(pos[static_cast<std::size_t>(y)])]);
  return w;
}

}  // namespace detail

/// Haiman's elementary dual equivalence.
inline Word d(int i, const Word& pi) {
  require_permutation(pi, "d");
  detail::check_color(i, pi.size(), "d");
  const auto pos = positions(pi);
  const int mid = detail::middle_value(pos, i);
  if (mid == i - 1) return detail::swap_values(pi, pos, i, i + 1);
  if (mid == i + 1) return detail::swap_values(pi, pos, i, i - 1);
  return pi;
}

/// The cyclic variant: (i, i-1, i+1) -> (i-1, i+1, i) and (i, i+1, i-1) ->
/// (i+1, i-1, i) in left-to-right order, together with the inverse moves.
inline Word d_tilde(int i, const Word& pi) {
  require_permutation(pi, "d_tilde");
  detail::check_color(i, pi.size(), "d_tilde");
  const auto pos = positions(pi);
  const int p_lo = pos[static_cast<std::size_t>(i - 1)], p_mid = pos[static_cast<std::size_t>(i)],
            p_hi = pos[static_cast<std::size_t>(i + 1)];
  if ((p_lo < p_mid && p_mid < p_hi) || (p_hi < p_mid && p_mid < p_lo)) return pi;
  std::vector<int> slots{p_lo, p_mid, p_hi};
  std::sort(slots.begin(), slots.end());
  Word order{pi[static_cast<std::size_t>(slots[0])], pi[static_cast<std::size_t>(slots[1])],
             pi[static_cast<std::size_t>(slots[2])]};
  const Word a{i, i - 1, i + 1}, b{i - 1, i + 1, i}, c{i, i + 1, i - 1}, e{i + 1, i - 1, i};
  Word next;
  if (order == a) next = b;
  else if (order == b) next = a;
  else if (order == c) next = e;
  else next = c;
  Word out = pi;
  for (std::size_t k = 0; k < 3; ++k) out[static_cast<std::size_t>(slots[k])] = next[k];
  return out;
}

/// D_i: the cyclic variant when the positions of i-1, i, i+1 lie in one
/// pistol of the diagram, Haiman's involution otherwise.
inline Word D(int i, const PistolIndex& pistols, const Word& pi) {
  detail::check_color(i, pi.size(), "D");
  const auto pos = positions(pi);
  const int lo = std::min({pos[static_cast<std::size_t>(i - 1)], pos[static_cast<std::size_t>(i)],
                           pos[static_cast<std::size_t>(i + 1)]});
  const int hi = std::max({pos[static_cast<std::size_t>(i - 1)], pos[static_cast<std::size_t>(i)],
                           pos[static_cast<std::size_t>(i + 1)]});
  return pistols.spans(lo, hi) ? d_tilde(i, pi) : d(i, pi);
}

inline Word D(int i, const Diagram& dg, const Word& pi) {
  require_permutation(pi, "D");
  if (static_cast<int>(pi.size()) != dg.size()) throw InvalidInput("D: permutation and diagram sizes differ");
  return D(i, PistolIndex(dg), pi);
}

struct VertexFilter {
  enum class Kind { All, InvZero, InvZeroDescents } kind = Kind::All;
  Diagram gamma;

  static VertexFilter all() { return {}; }
  static VertexFilter inv_zero() { return {Kind::InvZero, {}}; }
  static VertexFilter inv_zero_descents(Diagram g) { return {Kind::InvZeroDescents, std::move(g)}; }
};

namespace detail {

// Index of a permutation of 1..n among all permutations in lexicographic
// order (Lehmer code).
inline int perm_rank(const Word& w) {
  const int n = static_cast<int>(w.size());
  int rank = 0;
  std::uint32_t used = 0;
  int fact = 1;
  for (int k = 2; k < n; ++k) fact *= k;
  for (int k = 0; k < n; ++k) {
    const int v = w[static_cast<std::size_t>(k)];
    const int smaller = v - 1 - std::popcount(used & ((std::uint32_t{1} << (v - 1)) - 1));
    rank += smaller * fact;
    used |= std::uint32_t{1} << (v - 1);
    if (n - 1 - k > 0) fact /= (n - 1 - k);
  }
  return rank;
}

}  // namespace detail

/// The Assaf graph on S_n, or one of its inv = 0 subgraphs. Vertices are in
/// lexicographic order of the permutations.
inline SignedColoredGraph assaf_graph(const Diagram& dg, const VertexFilter& filter = VertexFilter::all(),
                                      const Bounds& bounds = Bounds::from_env()) {
  bounds.check_graph(dg.size(), "assaf_graph");
  const int n = dg.size();
  FillingIndex fx(dg);
  std::optional<std::uint32_t> target;
  if (filter.kind == VertexFilter::Kind::InvZeroDescents) target = fx.mask_of(filter.gamma);

  SignedColoredGraph g(n);
  // Lehmer rank -> vertex id, -1 when filtered out.
  int total = 1;
  for (int k = 2; k <= n; ++k) total *= k;
  std::vector<int> id(static_cast<std::size_t>(total), -1);
  for_each_standard_filling(
      dg,
      [&](const Word& w) {
        const int r = detail::perm_rank(w);
        if (filter.kind != VertexFilter::Kind::All) {
          if (!fx.inv_is_zero(w)) return;
          if (target && fx.descent_mask(w) != *target) return;
        }
        id[static_cast<std::size_t>(r)] = g.add_vertex(w, signature_mask(w));
      },
      Bounds{.force = true});

  for (int v = 0; v < g.vertex_count(); ++v)
    for (int i = 2; i <= n - 1; ++i) {
      if (g.partner(i, v) != -1) continue;
      const Word img = D(i, fx.pistols(), g.vertex(v));
      if (img == g.vertex(v)) continue;
      const int u = id[static_cast<std::size_t>(detail::perm_rank(img))];
      if (u < 0) throw std::logic_error("assaf_graph: vertex filter does not select whole components");
      g.add_edge(i, v, u);
    }
  return g;
}

/// G_lambda: vertices are SYT(lambda) keyed by reading word, edges from d_i.
inline SignedColoredGraph standard_graph(const Partition& lambda, const Bounds& bounds = Bounds::from_env()) {
  bounds.check_graph(lambda.size(), "standard_graph");
  const int n = lambda.size();
  SignedColoredGraph g(n);
  std::map<Word, int> id;
  for (const auto& t : standard_tableaux(lambda)) {
    Word w = t.reading_word();
    id[w] = g.add_vertex(w, signature_mask(w));
  }
  for (int v = 0; v < g.vertex_count(); ++v)
    for (int i = 2; i <= n - 1; ++i) {
      const Word img = d(i, g.vertex(v));
      if (img != g.vertex(v)) g.add_edge(i, v, id.at(img));
    }
  return g;
}

/// Restriction to the integer interval [lo, hi], clipped to [1, n]. Vertex
/// keys are kept; signatures and colors are shifted down by lo' - 1.
inline SignedColoredGraph restrict_graph(const SignedColoredGraph& g, int lo, int hi) {
  if (lo > hi) throw InvalidInput("restrict_graph: empty interval");
  lo = std::max(lo, 1);
  hi = std::min(hi, g.degree());
  const int m = std::max(0, hi - lo + 1);
  SignedColoredGraph out(m);
  // Signature positions lo .. hi-1 become 1 .. m-1.
  const std::uint32_t keep = m >= 2 ? ((std::uint32_t{1} << (m - 1)) - 1) : 0;
  for (int v = 0; v < g.vertex_count(); ++v)
    out.add_vertex(g.vertex(v), lo >= 1 ? (g.signature_mask(v) >> (lo - 1)) & keep : 0);
  for (int i = 2; i <= m - 1; ++i)
    for (auto [u, v] : g.edges(lo + i - 1)) out.add_edge(i, u, v);
  return out;
}

/// Connected components as sorted vertex lists, ordered by smallest vertex.
inline std::vector<std::vector<int>> components(const SignedColoredGraph& g) {
  std::vector<int> comp(static_cast<std::size_t>(g.vertex_count()), -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < g.vertex_count(); ++s) {
    if (comp[static_cast<std::size_t>(s)] != -1) continue;
    const int c = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<int> stack{s};
    comp[static_cast<std::size_t>(s)] = c;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      out.back().push_back(v);
      for (int i = g.min_color(); i <= g.max_color(); ++i) {
        const int u = g.partner(i, v);
        if (u >= 0 && comp[static_cast<std::size_t>(u)] == -1) {
          comp[static_cast<std::size_t>(u)] = c;
          stack.push_back(u);
        }
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

/// The subgraph induced on `vertices`, in the given order.
inline SignedColoredGraph induced_subgraph(const SignedColoredGraph& g, const std::vector<int>& vertices) {
  SignedColoredGraph out(g.degree());
  std::map<int, int> id;
  for (int v : vertices) id[v] = out.add_vertex(g.vertex(v), g.signature_mask(v));
  for (int v : vertices)
    for (int i = g.min_color(); i <= g.max_color(); ++i) {
      const int u = g.partner(i, v);
      if (u < 0) continue;
      auto it = id.find(u);
      if (it != id.end()) out.add_edge(i, id.at(v), it->second);
    }
  return out;
}

namespace detail {

// Since every color class is a matching, fixing the image of one vertex fixes
// the image of its whole component. Returns false on any clash.
inline bool propagate(const SignedColoredGraph& g, const SignedColoredGraph& h, int g0, int h0,
                      std::vector<int>& map, std::vector<int>& inverse) {
  std::vector<std::pair<int, int>> stack{{g0, h0}};
  std::vector<int> touched_g, touched_h;
  auto fail = [&] {
    for (int v : touched_g) map[static_cast<std::size_t>(v)] = -1;
    for (int v : touched_h) inverse[static_cast<std::size_t>(v)] = -1;
    return false;
  };
  while (!stack.empty()) {
    auto [a, b] = stack.back();
    stack.pop_back();
    const int ma = map[static_cast<std::size_t>(a)], ib = inverse[static_cast<std::size_t>(b)];
    if (ma == b && ib == a) continue;
    if (ma != -1 || ib != -1) return fail();
    if (g.signature_mask(a) != h.signature_mask(b)) return fail();
    map[static_cast<std::size_t>(a)] = b;
    inverse[static_cast<std::size_t>(b)] = a;
    touched_g.push_back(a);
    touched_h.push_back(b);
    for (int i = g.min_color(); i <= g.max_color(); ++i) {
      const int pa = g.partner(i, a), pb = h.partner(i, b);
      if ((pa < 0) != (pb < 0)) return fail();
      if (pa >= 0) stack.emplace_back(pa, pb);
    }
  }
  return true;
}

}  // namespace detail

/// A signature- and color-preserving bijection from g to h (map[v] = image of
/// v), or nothing. Components are matched in order, first fit with
/// backtracking, so the witness is deterministic.
inline std::optional<std::vector<int>> isomorphism(const SignedColoredGraph& g, const SignedColoredGraph& h) {
  if (g.degree() != h.degree() || g.vertex_count() != h.vertex_count()) return std::nullopt;
  {
    std::vector<std::uint32_t> a, b;
    for (int v = 0; v < g.vertex_count(); ++v) a.push_back(g.signature_mask(v));
    for (int v = 0; v < h.vertex_count(); ++v) b.push_back(h.signature_mask(v));
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  const auto gc = components(g);
  std::vector<int> map(static_cast<std::size_t>(g.vertex_count()), -1);
  std::vector<int> inverse(static_cast<std::size_t>(h.vertex_count()), -1);

  auto rec = [&](auto&& self, std::size_t k) -> bool {
    if (k == gc.size()) return true;
    const int g0 = gc[k].front();
    for (int h0 = 0; h0 < h.vertex_count(); ++h0) {
      if (inverse[static_cast<std::size_t>(h0)] != -1) continue;
      if (h.signature_mask(h0) != g.signature_mask(g0)) continue;
      if (!detail::propagate(g, h, g0, h0, map, inverse)) continue;
      if (self(self, k + 1)) return true;
      for (int v : gc[k]) {
        inverse[static_cast<std::size_t>(map[static_cast<std::size_t>(v)])] = -1;
        map[static_cast<std::size_t>(v)] = -1;
      }
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  return map;
}

namespace detail {

struct CatalogEntry {
  Partition lambda;
  SignedColoredGraph graph;
  std::vector<std::uint32_t> sigs;  // sorted signature masks
};

inline const std::vector<CatalogEntry>& catalog(int n) {
  static std::map<int, std::vector<CatalogEntry>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<CatalogEntry> entries;
  Bounds unbounded;
  unbounded.force = true;
  for (const auto& lambda : partitions_of(n)) {
    auto g = standard_graph(lambda, unbounded);
    std::vector<std::uint32_t> sigs;
    for (int v = 0; v < g.vertex_count(); ++v) sigs.push_back(g.signature_mask(v));
    std::sort(sigs.begin(), sigs.end());
    entries.push_back({lambda, std::move(g), std::move(sigs)});
  }
  return cache.emplace(n, std::move(entries)).first->second;
}

inline std::optional<Partition> match_catalog(const SignedColoredGraph& c) {
  std::vector<std::uint32_t> sigs;
  for (int v = 0; v < c.vertex_count(); ++v) sigs.push_back(c.signature_mask(v));
  std::sort(sigs.begin(), sigs.end());
  for (const auto& e : catalog(c.degree())) {
    if (e.sigs != sigs) continue;
    if (isomorphism(c, e.graph)) return e.lambda;
  }
  return std::nullopt;
}

}  // namespace detail

/// The lambda with C isomorphic to G_lambda, if any. C must be connected.
inline std::optional<Partition> deg_type(const SignedColoredGraph& c) {
  if (c.vertex_count() == 0) return std::nullopt;
  if (components(c).size() != 1) throw InvalidInput("deg_type: graph is not connected");
  return detail::match_catalog(c);
}

/// For |i - j| > 2: an i-edge followed by a j-edge can be completed to a
/// square by a j-edge followed by an i-edge.
inline bool satisfies_commuting_property(const SignedColoredGraph& g) {
  for (int i = g.min_color(); i <= g.max_color(); ++i)
    for (int j = g.min_color(); j <= g.max_color(); ++j) {
      if (std::abs(i - j) <= 2) continue;
      for (int v = 0; v < g.vertex_count(); ++v) {
        const int w = g.partner(i, v);
        if (w < 0) continue;
        const int x = g.partner(j, w);
        if (x < 0) continue;
        const int y = g.partner(j, v);
        if (y < 0 || g.partner(i, y) != x) return false;
      }
    }
  return true;
}

/// Locally Standard Property on all windows of six consecutive values, plus
/// the Commuting Property.
inline bool is_deg_by_definition(const SignedColoredGraph& g) {
  const int n = g.degree();
  std::set<std::pair<int, int>> windows;
  for (int a = -4; a <= n; ++a) {
    const int lo = std::max(a, 1), hi = std::min(a + 5, n);
    if (lo <= hi) windows.emplace(lo, hi);
  }
  for (auto [lo, hi] : windows) {
    const auto r = restrict_graph(g, lo, hi);
    std::map<std::vector<std::uint32_t>, std::vector<SignedColoredGraph>> seen;  // already matched shapes
    for (const auto& comp : components(r)) {
      auto sub = induced_subgraph(r, comp);
      std::vector<std::uint32_t> sigs;
      for (int v = 0; v < sub.vertex_count(); ++v) sigs.push_back(sub.signature_mask(v));
      std::sort(sigs.begin(), sigs.end());
      auto& known = seen[sigs];
      if (std::any_of(known.begin(), known.end(), [&](const auto& k) { return isomorphism(sub, k).has_value(); }))
        continue;
      if (!detail::match_catalog(sub)) return false;
      known.push_back(std::move(sub));
    }
  }
  return satisfies_commuting_property(g);
}

/// Pattern test for a component of the Assaf graph: no pistoled strict 1342
/// or 2431, and no strict 12543 or 34521 whose first four and last four
/// positions are pistoled while all five are not.
inline bool pattern_criterion(const SignedColoredGraph& c, const Diagram& dg) {
  const PistolIndex pistols(dg);
  auto pistoled = [&](const std::vector<int>& idx, std::size_t from, std::size_t to) {
    int lo = idx[from] - 1, hi = idx[from] - 1;
    for (std::size_t k = from; k < to; ++k) {
      lo = std::min(lo, idx[k] - 1);
      hi = std::max(hi, idx[k] - 1);
    }
    return pistols.spans(lo, hi);
  };
  static const Word p1342{1, 3, 4, 2}, p2431{2, 4, 3, 1}, p12543{1, 2, 5, 4, 3}, p34521{3, 4, 5, 2, 1};
  for (const Word& pi : c.vertices()) {
    for (const Word* p : {&p1342, &p2431})
      for (const auto& occ : strict_pattern_find(pi, *p))
        if (pistoled(occ.indices, 0, 4)) return false;
    for (const Word* p : {&p12543, &p34521})
      for (const auto& occ : strict_pattern_find(pi, *p)) {
        const auto& ix = occ.indices;
        if (pistoled(ix, 0, 5) || !pistoled(ix, 0, 4) || !pistoled(ix, 1, 5)) continue;
        return false;
      }
  }
  return true;
}

struct ComponentYamCount {
  int component = 0;
  int size = 0;
  std::optional<Partition> type;
  std::map<Partition, int> syam;  // shape -> number of vertices in SYam_delta(shape)
};

struct YamDecompositionReport {
  std::vector<ComponentYamCount> components;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// For every component of type lambda: exactly one vertex in SYam_delta(lambda)
/// and none in SYam_delta(mu) for mu != lambda.
inline YamDecompositionReport yam_decomposition_check(const Diagram& dg, const Bounds& bounds = Bounds::from_env()) {
  YamDecompositionReport rep;
  const auto g = assaf_graph(dg, VertexFilter::all(), bounds);
  const PistolIndex pistols(dg);
  const auto comps = components(g);
  for (std::size_t k = 0; k < comps.size(); ++k) {
    const auto sub = induced_subgraph(g, comps[k]);
    ComponentYamCount row;
    row.component = static_cast<int>(k);
    row.size = sub.vertex_count();
    row.type = deg_type(sub);
    for (const Word& pi : sub.vertices()) {
      auto shape = syam_shape(pi);
      if (shape && !detail::jams_with(unstandardize(pi), pistols)) ++row.syam[*shape];
    }
    if (row.type) {
      for (const auto& [mu, cnt] : row.syam)
        if (mu != *row.type)
          rep.violations.push_back("component " + std::to_string(k) + " of type " + row.type->to_string() +
                                   " meets SYam of " + mu.to_string());
      auto it = row.syam.find(*row.type);
      const int own = it == row.syam.end() ? 0 : it->second;
      if (own != 1)
        rep.violations.push_back("component " + std::to_string(k) + " of type " + row.type->to_string() + " has " +
                                 std::to_string(own) + " vertices in its own SYam");
    }
    rep.components.push_back(std::move(row));
  }
  return rep;
}

struct ComponentSchur {
  int component = 0;
  int size = 0;
  Word representative;  // smallest vertex
  std::optional<Partition> type;
  std::optional<SchurPolynomial> schur;  // empty: not in the Schur span
};

/// Schur expansion of sum F_sigma(v) over each component of the graph.
inline std::vector<ComponentSchur> component_schur_report(const SignedColoredGraph& g) {
  std::vector<ComponentSchur> out;
  const auto comps = components(g);
  for (std::size_t k = 0; k < comps.size(); ++k) {
    const auto sub = induced_subgraph(g, comps[k]);
    ComponentSchur row;
    row.component = static_cast<int>(k);
    row.size = sub.vertex_count();
    row.representative = sub.vertex(0);
    row.type = deg_type(sub);
    QSymPolynomial f(g.degree());
    for (int v = 0; v < sub.vertex_count(); ++v) f.add(sub.signature(v), 0, 0);
    try {
      row.schur = schur_from_F(f);
    } catch (const NotInSchurSpan&) {
    }
    out.push_back(std::move(row));
  }
  return out;
}

inline std::vector<ComponentSchur> component_schur_report(const Diagram& dg,
                                                          const VertexFilter& filter = VertexFilter::all(),
                                                          const Bounds& bounds = Bounds::from_env()) {
  return component_schur_report(assaf_graph(dg, filter, bounds));
}

/// Undirected DOT. One edge statement per color, so double edges appear twice.
inline std::string to_dot(const SignedColoredGraph& g) {
  std::ostringstream os;
  os << "graph G {\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    os << "  v" << v << " [label=\"" << format_word(g.vertex(v));
    if (g.degree() > 1) os << "\\n" << g.signature(v).str();
    os << "\"];\n";
  }
  for (int i = g.min_color(); i <= g.max_color(); ++i)
    for (auto [u, v] : g.edges(i)) os << "  v" << u << " -- v" << v << " [label=\"" << i << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace yamhall
