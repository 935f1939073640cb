#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <set>

#include "yamhall/degraphs.hpp"
#include "yamhall/parse.hpp"

using namespace yamhall;

namespace {

Word W(const char* s) { return parse_word(s); }

Diagram P(std::vector<int> parts) { return diagram_from_partition(Partition(std::move(parts))); }

// Eight-cell diagram of the D_3 / D_5 worked example: rows 534 / 826 / . 17.
const Diagram& eight_cells() {
  static const Diagram d = parse_diagram_spec("c:0,2;1,2;2,2;0,1;1,1;2,1;2,0;3,0");
  return d;
}

Word random_perm(std::mt19937_64& rng, int n) {
  Word p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

long long hook_count(const Partition& lambda) {
  const Partition conj = lambda.conjugate();
  long long num = 1, den = 1;
  for (int k = 2; k <= lambda.size(); ++k) num *= k;
  for (std::size_t r = 0; r < lambda.length(); ++r)
    for (int c = 0; c < lambda.parts()[r]; ++c)
      den *= (lambda.parts()[r] - c - 1) + (conj.parts()[static_cast<std::size_t>(c)] - static_cast<int>(r) - 1) + 1;
  return num / den;
}

std::set<Word> keys(const SignedColoredGraph& g, const std::vector<int>& vs) {
  std::set<Word> out;
  for (int v : vs) out.insert(g.vertex(v));
  return out;
}

std::set<std::pair<Word, Word>> edge_keys(const SignedColoredGraph& g, int color) {
  std::set<std::pair<Word, Word>> out;
  for (auto [u, v] : g.edges(color)) out.insert(std::minmax(g.vertex(u), g.vertex(v)));
  return out;
}

SignedColoredGraph component_of(const SignedColoredGraph& g, const Word& w) {
  const int v = *g.find(w);
  for (const auto& c : components(g))
    if (std::find(c.begin(), c.end(), v) != c.end()) return induced_subgraph(g, c);
  return {};
}

}  // namespace

TEST(ElementaryDualEquivalence, Examples) {
  EXPECT_EQ(d(2, W("21345")), W("31245"));
  EXPECT_EQ(d(3, W("31245")), W("41235"));
  EXPECT_EQ(d(2, W("123")), W("123"));
  EXPECT_THROW(d(1, W("123")), InvalidInput);
  EXPECT_THROW(d(3, W("123")), InvalidInput);
}

TEST(TwistedDualEquivalence, Examples) {
  EXPECT_EQ(d_tilde(3, W("4123")), W("3142"));
  EXPECT_EQ(d_tilde(2, W("4123")), W("4123"));
  EXPECT_EQ(d_tilde(2, W("123")), W("123"));
  EXPECT_EQ(d_tilde(2, d_tilde(2, W("213"))), W("213"));
}

TEST(DualEquivalence, InvolutionsAndFixedPoints) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3 + trial % 6;
    const Word p = random_perm(rng, n);
    for (int i = 2; i < n; ++i) {
      EXPECT_EQ(d(i, d(i, p)), p);
      EXPECT_EQ(d_tilde(i, d_tilde(i, p)), p);
      const auto pos = positions(p);
      const bool between = (pos[static_cast<std::size_t>(i - 1)] < pos[static_cast<std::size_t>(i)]) ==
                           (pos[static_cast<std::size_t>(i)] < pos[static_cast<std::size_t>(i + 1)]);
      EXPECT_EQ(d(i, p) == p, between);
      EXPECT_EQ(d_tilde(i, p) == p, between);
      // Only the values i-1, i, i+1 move.
      for (std::size_t k = 0; k < p.size(); ++k)
        if (std::abs(p[k] - i) > 1) {
          EXPECT_EQ(d(i, p)[k], p[k]);
        }
    }
  }
}

TEST(DiagramInvolution, WorkedExample) {
  EXPECT_EQ(D(3, eight_cells(), W("53482617")), W("54283617"));
  EXPECT_EQ(D(5, eight_cells(), W("53482617")), W("63482517"));
}

TEST(DiagramInvolution, PreservesStatistics) {
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<int> coord(0, 3);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 3 + trial % 6;
    std::vector<Cell> c;
    while (static_cast<int>(c.size()) < n) {
      Cell x{coord(rng), coord(rng)};
      if (std::find(c.begin(), c.end(), x) == c.end()) c.push_back(x);
    }
    const Diagram dg(c);
    const FillingIndex fx(dg);
    const Word p = random_perm(rng, n);
    for (int i = 2; i < n; ++i) {
      const Word q = D(i, dg, p);
      EXPECT_EQ(D(i, dg, q), p);
      EXPECT_EQ(fx.inv(q), fx.inv(p)) << dg.to_string() << " " << format_word(p) << " i=" << i;
      EXPECT_EQ(fx.descent_mask(q), fx.descent_mask(p));
    }
  }
}

TEST(StandardGraph, ThreeTwo) {
  const auto g = standard_graph(Partition({3, 2}));
  ASSERT_EQ(g.vertex_count(), 5);
  EXPECT_EQ(g.signature(*g.find(W("34125"))).str(), "+-++");
  EXPECT_EQ(g.signature(*g.find(W("24135"))).str(), "-+-+");
  EXPECT_EQ(g.signature(*g.find(W("25134"))).str(), "-++-");
  EXPECT_EQ(g.signature(*g.find(W("35124"))).str(), "+-+-");
  EXPECT_EQ(g.signature(*g.find(W("45123"))).str(), "++-+");
  using E = std::set<std::pair<Word, Word>>;
  EXPECT_EQ(edge_keys(g, 2), (E{{W("24135"), W("34125")}, {W("25134"), W("35124")}}));
  EXPECT_EQ(edge_keys(g, 3), (E{{W("24135"), W("34125")}, {W("35124"), W("45123")}}));
  EXPECT_EQ(edge_keys(g, 4), (E{{W("24135"), W("25134")}, {W("35124"), W("45123")}}));
}

TEST(StandardGraph, SingleRowAndTwoByTwo) {
  const auto row = standard_graph(Partition({5}));
  ASSERT_EQ(row.vertex_count(), 1);
  EXPECT_EQ(row.signature(0).str(), "++++");

  const auto sq = standard_graph(Partition({2, 2}));
  ASSERT_EQ(sq.vertex_count(), 2);
  EXPECT_EQ(sq.signature(*sq.find(W("3412"))).str(), "+-+");
  EXPECT_EQ(sq.signature(*sq.find(W("2413"))).str(), "-+-");
  EXPECT_EQ(sq.edges(2).size(), 1u);
  EXPECT_EQ(sq.edges(3).size(), 1u);
}

TEST(StandardGraph, VertexCountIsHookLengthNumber) {
  for (int n = 1; n <= 8; ++n)
    for (const auto& lambda : partitions_of(n)) {
      const auto g = standard_graph(lambda);
      EXPECT_EQ(g.vertex_count(), hook_count(lambda)) << lambda.to_string();
      EXPECT_EQ(components(g).size(), 1u);
      EXPECT_EQ(deg_type(g), lambda);
    }
}

TEST(Restriction, ThreeTwoToTwoThroughFive) {
  const auto g = standard_graph(Partition({3, 2}));
  const auto r = restrict_graph(g, 2, 5);
  EXPECT_EQ(r.degree(), 4);
  EXPECT_EQ(r.signature(*r.find(W("34125"))).str(), "-++");
  EXPECT_EQ(r.signature(*r.find(W("25134"))).str(), "++-");
  EXPECT_EQ(r.signature(*r.find(W("45123"))).str(), "+-+");
  const auto comps = components(r);
  ASSERT_EQ(comps.size(), 2u);
  std::set<std::set<Word>> sets;
  for (const auto& c : comps) sets.insert(keys(r, c));
  EXPECT_EQ(sets, (std::set<std::set<Word>>{{W("34125"), W("24135"), W("25134")}, {W("35124"), W("45123")}}));
  EXPECT_EQ(r.edges(2).size(), 2u);
  EXPECT_EQ(r.edges(3).size(), 2u);

  // Relabeled components: a path of type (3,1) and the square (2,2).
  const auto path = component_of(r, W("34125"));
  const auto pair = component_of(r, W("45123"));
  EXPECT_TRUE(isomorphism(path, standard_graph(Partition({3, 1}))).has_value());
  EXPECT_TRUE(isomorphism(pair, standard_graph(Partition({2, 2}))).has_value());
}

TEST(Restriction, FullAndShortIntervals) {
  const auto g = standard_graph(Partition({3, 2}));
  const auto same = restrict_graph(g, 1, 5);
  EXPECT_TRUE(isomorphism(same, g).has_value());
  for (int i = 2; i <= 4; ++i) EXPECT_EQ(same.edges(i), g.edges(i));
  const auto two = restrict_graph(g, 3, 4);
  EXPECT_EQ(two.degree(), 2);
  EXPECT_EQ(components(two).size(), 5u);
  EXPECT_THROW(restrict_graph(g, 4, 3), InvalidInput);
}

TEST(Isomorphism, StandardGraphs) {
  const auto a = standard_graph(Partition({3, 2}));
  const auto b = standard_graph(Partition({2, 2, 1}));
  const auto self = isomorphism(a, a);
  ASSERT_TRUE(self.has_value());
  for (int v = 0; v < a.vertex_count(); ++v) EXPECT_EQ((*self)[static_cast<std::size_t>(v)], v);
  EXPECT_FALSE(isomorphism(a, b).has_value());
  for (int n = 1; n <= 6; ++n) {
    const auto ps = partitions_of(n);
    for (std::size_t i = 0; i < ps.size(); ++i)
      for (std::size_t j = 0; j < ps.size(); ++j)
        EXPECT_EQ(isomorphism(standard_graph(ps[i]), standard_graph(ps[j])).has_value(), i == j);
  }
}

TEST(DegDefinition, StandardGraphsPass) {
  for (int n = 1; n <= 7; ++n)
    for (const auto& lambda : partitions_of(n)) EXPECT_TRUE(is_deg_by_definition(standard_graph(lambda)));
  SignedColoredGraph lone(4);
  lone.add_vertex(W("1234"), 0);
  EXPECT_TRUE(is_deg_by_definition(lone));
}

TEST(DegDefinition, PatternComponentInRowOfFour) {
  const Diagram row = P({4});
  const auto h = assaf_graph(row);
  const auto c = component_of(h, W("1342"));
  std::set<Word> vs(c.vertices().begin(), c.vertices().end());
  EXPECT_EQ(vs, (std::set<Word>{W("2314"), W("3124"), W("2143"), W("1342"), W("1423")}));
  using E = std::set<std::pair<Word, Word>>;
  EXPECT_EQ(edge_keys(c, 2), (E{{W("2314"), W("3124")}, {W("1342"), W("2143")}}));
  EXPECT_EQ(edge_keys(c, 3), (E{{W("2143"), W("3124")}, {W("1342"), W("1423")}}));
  EXPECT_FALSE(is_deg_by_definition(c));
  EXPECT_FALSE(deg_type(c).has_value());
  EXPECT_FALSE(pattern_criterion(c, row));
  EXPECT_TRUE(satisfies_commuting_property(c));
}

TEST(DegDefinition, AgreesWithTypeAndPatterns) {
  std::mt19937_64 rng(47);
  std::uniform_int_distribution<int> coord(0, 3);
  int non_deg = 0;
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 3 + trial % 4;
    std::vector<Cell> c;
    while (static_cast<int>(c.size()) < n) {
      Cell x{coord(rng), coord(rng)};
      if (std::find(c.begin(), c.end(), x) == c.end()) c.push_back(x);
    }
    const Diagram dg(c);
    const auto h = assaf_graph(dg);
    for (const auto& comp : components(h)) {
      const auto sub = induced_subgraph(h, comp);
      const bool deg = deg_type(sub).has_value();
      non_deg += !deg;
      EXPECT_EQ(is_deg_by_definition(sub), deg) << dg.to_string();
      EXPECT_EQ(pattern_criterion(sub, dg), deg) << dg.to_string();
      EXPECT_TRUE(satisfies_commuting_property(sub));
    }
  }
  EXPECT_GT(non_deg, 0);
}

TEST(AssafGraph, VertexCountsAndFilters) {
  EXPECT_EQ(assaf_graph(P({2, 2})).vertex_count(), 24);
  const auto single = assaf_graph(P({1}), VertexFilter::inv_zero());
  EXPECT_EQ(single.vertex_count(), 1);
  EXPECT_EQ(single.degree(), 1);

  const Diagram d = P({3, 3});
  const auto pd = assaf_graph(d, VertexFilter::inv_zero());
  const FillingIndex fx(d);
  const auto zero = enumerate_standard_fillings(d, [&](const Word& w) { return fx.inv(w) == 0; });
  EXPECT_EQ(pd.vertex_count(), static_cast<int>(zero.size()));
  for (const auto& comp : components(pd)) EXPECT_TRUE(deg_type(induced_subgraph(pd, comp)).has_value());

  EXPECT_THROW(assaf_graph(P({9})), BoundExceeded);
}

TEST(AssafGraph, DescentFilterMatchesEnumeration) {
  const Diagram d = P({3, 2});
  const Diagram gamma({{0, 1}});
  const auto r = assaf_graph(d, VertexFilter::inv_zero_descents(gamma));
  const FillingIndex fx(d);
  const auto expected = enumerate_standard_fillings(
      d, [&](const Word& w) { return fx.inv(w) == 0 && fx.descent_mask(w) == fx.mask_of(gamma); });
  EXPECT_EQ(r.vertex_count(), static_cast<int>(expected.size()));
}

TEST(YamDecomposition, TwoRowsOfThree) {
  const Diagram d = P({3, 3});
  const auto rep = yam_decomposition_check(d);
  EXPECT_TRUE(rep.ok());
  // Both words have positive inv, so their components lie outside the
  // inv = 0 subgraph.
  const auto h = assaf_graph(d);
  EXPECT_FALSE(assaf_graph(d, VertexFilter::inv_zero()).find(W("531642")).has_value());
  std::set<std::set<Word>> typed;
  for (const auto& comp : components(h)) {
    const auto sub = induced_subgraph(h, comp);
    if (deg_type(sub) == Partition({2, 2, 2})) typed.insert(std::set<Word>(sub.vertices().begin(), sub.vertices().end()));
  }
  ASSERT_EQ(typed.size(), 2u);
  int hits = 0;
  for (const auto& vs : typed) {
    const bool a = vs.count(W("531642")), b = vs.count(W("536142"));
    EXPECT_NE(a, b);
    hits += a + b;
  }
  EXPECT_EQ(hits, 2);
}

TEST(YamDecomposition, DegenerateShapes) {
  EXPECT_TRUE(yam_decomposition_check(P({1})).ok());
  EXPECT_TRUE(yam_decomposition_check(P({4})).ok());
  const auto pd = assaf_graph(P({4}), VertexFilter::inv_zero());
  ASSERT_EQ(pd.vertex_count(), 1);
  EXPECT_EQ(deg_type(pd), Partition({4}));
}

TEST(ComponentSchur, DegComponentsGiveOneSchurFunction) {
  for (const auto& row : component_schur_report(P({2, 2, 1}), VertexFilter::inv_zero())) {
    ASSERT_TRUE(row.type.has_value());
    ASSERT_TRUE(row.schur.has_value());
    SchurPolynomial expected(5);
    expected.add(*row.type, 0, 0);
    EXPECT_EQ(*row.schur, expected);
  }
  const auto lone = component_schur_report(P({3}), VertexFilter::inv_zero());
  ASSERT_EQ(lone.size(), 1u);
  EXPECT_EQ(lone[0].representative, W("123"));
  EXPECT_EQ(lone[0].schur->coeff(Partition({3})).coeff(0, 0), 1);
}

TEST(Dot, ThreeTwoAndSingleVertex) {
  const auto g = standard_graph(Partition({3, 2}));
  const std::string dot = to_dot(g);
  EXPECT_EQ(dot, to_dot(standard_graph(Partition({3, 2}))));
  std::size_t nodes = 0, edges = 0;
  for (std::size_t p = dot.find("[label="); p != std::string::npos; p = dot.find("[label=", p + 1)) {
    const std::size_t line = dot.rfind('\n', p);
    (dot.find("--", line) < p ? edges : nodes)++;
  }
  EXPECT_EQ(nodes, 5u);
  EXPECT_EQ(edges, 6u);

  SignedColoredGraph one(1);
  one.add_vertex(W("1"), 0);
  EXPECT_EQ(to_dot(one), "graph G {\n  v0 [label=\"1\"];\n}\n");
}
