#pragma once

// Named verification suites. Each one runs a family of exact checks over a
// fixed, seeded set of diagrams and reports pass/fail with timing. The
// acceptance binary and the `check` CLI verb both run these.

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "yamhall/degraphs.hpp"
#include "yamhall/descent_sets.hpp"
#include "yamhall/fillings.hpp"
#include "yamhall/parse.hpp"
#include "yamhall/qsym_schur.hpp"
#include "yamhall/rsk_yam.hpp"
#include "yamhall/shapes.hpp"
#include "yamhall/words.hpp"

namespace yamhall::checks {

struct SuiteOptions {
  std::optional<int> max_n;
  std::optional<int> samples;
  std::uint64_t seed = 20240601;
};

struct Result {
  std::string id;
  std::string name;
  bool gating = true;
  bool correct = true;
  double seconds = 0;
  double limit_seconds = 0;  // 0: no limit
  long long cases = 0;
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  bool passed() const { return correct && (limit_seconds <= 0 || seconds <= limit_seconds); }

  void fail(std::string msg) {
    correct = false;
    if (failures.size() < 8) failures.push_back(std::move(msg));
  }
  void expect(bool cond, const std::string& msg) {
    ++cases;
    if (!cond) fail(msg);
  }
};

/// Seeded sampler of diagrams inside the 4 x 4 box [0,3] x [0,3], normalized
/// and deduplicated. `accept` filters candidates.
inline std::vector<Diagram> sample_diagrams(std::size_t count, int min_size, int max_size, std::uint64_t seed,
                                            const std::function<bool(const Diagram&)>& accept) {
  std::mt19937_64 rng(seed);
  std::vector<Cell> box;
  for (int y = 0; y < 4; ++y)
    for (int x = 0; x < 4; ++x) box.push_back({x, y});
  std::uniform_int_distribution<int> size_dist(min_size, max_size);
  std::set<Diagram> seen;
  std::vector<Diagram> out;
  for (std::size_t attempt = 0; out.size() < count && attempt < count * 2000; ++attempt) {
    const int k = size_dist(rng);
    std::shuffle(box.begin(), box.end(), rng);
    Diagram d = Diagram(std::vector<Cell>(box.begin(), box.begin() + k)).normalized();
    if (!accept(d) || !seen.insert(d).second) continue;
    out.push_back(std::move(d));
  }
  return out;
}

inline bool is_partition_shape(const Diagram& d) { return d.normalized().as_partition().has_value(); }

inline std::vector<Diagram> partition_diagrams(int lo, int hi) {
  std::vector<Diagram> out;
  for (int n = lo; n <= hi; ++n)
    for (const auto& mu : partitions_of(n)) out.push_back(diagram_from_partition(mu));
  return out;
}

namespace detail {

inline Bounds unbounded() {
  Bounds b;
  b.force = true;
  return b;
}

template <class F>
Result timed(std::string id, std::string name, double limit, bool gating, F&& body) {
  Result r;
  r.id = std::move(id);
  r.name = std::move(name);
  r.limit_seconds = limit;
  r.gating = gating;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.fail(std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

inline std::string show(const Diagram& d) {
  if (auto p = d.as_partition()) return "p:" + p->to_string();
  return d.to_string();
}

inline std::vector<Diagram> subsets(const Diagram& d) {
  std::vector<Diagram> out;
  const auto& cells = d.cells();
  for (std::uint32_t m = 0; m < (std::uint32_t{1} << cells.size()); ++m) {
    std::vector<Cell> s;
    for (std::size_t i = 0; i < cells.size(); ++i)
      if (m >> i & 1u) s.push_back(cells[i]);
    out.emplace_back(std::move(s));
  }
  return out;
}

}  // namespace detail

/// Worked examples: filling statistics, standardization, D images and the
/// elementary involutions.
inline Result fixtures(const SuiteOptions& = {}) {
  return detail::timed("A1", "fixtures", 1.0, true, [](Result& r) {
    const Diagram mu = diagram_from_partition(Partition({4, 2, 2}));
    const Word w = parse_word("11112132");
    FillingIndex fx(mu);
    r.expect(fx.inv(w) == 2, "inv of 11112132 on (4,2,2) should be 2");
    r.expect(fx.maj(w) == 0, "maj of 11112132 on (4,2,2) should be 0");

    r.expect(standardize(parse_word("24321121")) == parse_word("48751263"), "st(24321121)");
    r.expect(unstandardize(parse_word("48751263")) == parse_word("24321121"), "unst(48751263)");
    r.expect(standardize(parse_word("17215")) == parse_word("15324"), "st(17215)");
    r.expect(unstandardize(parse_word("15324")) == parse_word("13212"), "unst(15324)");

    const Diagram fig7 = parse_diagram_spec("c:0,2;1,2;2,2;0,1;1,1;2,1;2,0;3,0");
    const Word pi = parse_word("53482617");
    r.expect(D(3, fig7, pi) == parse_word("54283617"), "D_3(53482617)");
    r.expect(D(5, fig7, pi) == parse_word("63482517"), "D_5(53482617)");
    auto occ = strict_pattern_find(pi, {2, 3, 1});
    r.expect(!occ.empty() && occ.front().indices == std::vector<int>{2, 3, 5}, "231 in 53482617 at 2,3,5");
    r.expect(is_pistoled(fig7, {2, 3, 5}), "indices 2,3,5 pistoled");

    r.expect(d(2, parse_word("21345")) == parse_word("31245"), "d_2(21345)");
    r.expect(d(3, parse_word("31245")) == parse_word("41235"), "d_3(31245)");
    r.expect(d_tilde(2, parse_word("4123")) == parse_word("4123"), "d~_2(4123)");
    r.expect(d_tilde(3, parse_word("4123")) == parse_word("3142"), "d~_3(4123)");
  });
}

/// Yamanouchi words of content (2,2,2) against the diagram (3,3).
inline Result jamming(const SuiteOptions& = {}) {
  return detail::timed("A2", "jamming", 1.0, true, [](Result& r) {
    const Diagram d = diagram_from_partition(Partition({3, 3}));
    const Partition lambda({2, 2, 2});
    const auto yam = generate_yam(lambda, d, {.no_jam = true});
    r.expect(yam == std::vector<Word>{parse_word("321321"), parse_word("323121")}, "Yam_(3,3)(2,2,2)");

    std::vector<Word> syam;
    Word p(6);
    std::iota(p.begin(), p.end(), 1);
    do {
      if (syam_member(p, lambda, d)) syam.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    r.expect(syam == std::vector<Word>{parse_word("531642"), parse_word("536142")}, "SYam_(3,3)(2,2,2)");

    r.expect(jams(parse_word("332121"), d), "332121 jams (3,3)");
    r.expect(jams(parse_word("323211"), d), "323211 jams (3,3)");
    r.expect(!jams(parse_word("321321"), d), "321321 does not jam (3,3)");
  });
}

/// Schur expansions from Yamanouchi words agree with the filling sums.
inline Result yamanouchi_expansion(const SuiteOptions& o = {}) {
  return detail::timed("A3", "theorem1", 60.0, true, [&](Result& r) {
    const int hi = o.max_n.value_or(8);
    auto set = partition_diagrams(4, hi);
    for (auto& d : sample_diagrams(static_cast<std::size_t>(o.samples.value_or(500)), 2, std::min(hi, 7), o.seed,
                                   [](const Diagram& x) { return !is_partition_shape(x); }))
      set.push_back(std::move(d));
    const Bounds b = detail::unbounded();
    for (const auto& d : set) {
      r.expect(schur_to_F(hl_schur(d, b)) == hall_littlewood_F(d, b), "hl_schur vs filling sum on " + detail::show(d));
      if (d.size() > 5) continue;
      FillingIndex fx(d);
      const auto rf = r_polynomials_by_descents(d, b);
      const auto rs = r_schur_by_descents(d, b);
      for (const auto& gamma : detail::subsets(d)) {
        const auto m = fx.mask_of(gamma);
        const auto fit = rf.find(m);
        const auto sit = rs.find(m);
        const QSymPolynomial f = fit == rf.end() ? QSymPolynomial(d.size()) : fit->second;
        const SchurPolynomial s = sit == rs.end() ? SchurPolynomial(d.size()) : sit->second;
        r.expect(schur_to_F(s) == f, "r_schur vs r_polynomial_F on " + detail::show(d) + " / " + gamma.to_string());
      }
    }
    r.notes.push_back(std::to_string(set.size()) + " diagrams");
  });
}

/// Dropping the jamming condition is harmless for inv = 0 exactly when the
/// partition avoids (3,3,3).
inline Result avoiding_333(const SuiteOptions& o = {}) {
  return detail::timed("A4", "corollary333", 300.0, true, [&](Result& r) {
    const Bounds b = detail::unbounded();
    for (int n = 1; n <= o.max_n.value_or(9); ++n)
      for (const auto& mu : partitions_of(n)) {
        const Diagram d = diagram_from_partition(mu);
        const bool equal = schur_to_F(naive_yam_schur(d, NaiveMode::InvZero, b)) == hall_littlewood_F(d, b);
        r.expect(equal == (mu[3] < 3), "naive Hall-Littlewood equality on " + mu.to_string() +
                                           (equal ? " holds" : " fails"));
      }
  });
}

/// The naive q,t Yamanouchi sum is the Macdonald polynomial exactly when
/// the partition avoids (4) and (3,3).
inline Result avoiding_4_and_33(const SuiteOptions& o = {}) {
  return detail::timed("A5", "proposition", 120.0, true, [&](Result& r) {
    const Bounds b = detail::unbounded();
    for (int n = 1; n <= o.max_n.value_or(8); ++n)
      for (const auto& mu : partitions_of(n)) {
        const Diagram d = diagram_from_partition(mu);
        const bool equal = schur_to_F(naive_yam_schur(d, NaiveMode::QT, b)) == macdonald_F(d, b);
        r.expect(equal == (mu[1] <= 3 && mu[2] <= 2),
                 "naive q,t equality on " + mu.to_string() + (equal ? " holds" : " fails"));
      }
  });
}

/// Diagrams whose pistols have at most three cells.
inline Result three_cell_pistols(const SuiteOptions& o = {}) {
  return detail::timed("A6", "pistols3", 120.0, true, [&](Result& r) {
    const Bounds b = detail::unbounded();
    const auto set = sample_diagrams(static_cast<std::size_t>(o.samples.value_or(300)), 1, o.max_n.value_or(7),
                                     o.seed, [](const Diagram& x) { return PistolIndex(x).max_pistol_length() <= 3; });
    for (const auto& d : set)
      r.expect(schur_to_F(naive_yam_schur(d, NaiveMode::QT, b)) == macdonald_F(d, b),
               "naive q,t equality on " + detail::show(d));
    r.notes.push_back(std::to_string(set.size()) + " diagrams");
  });
}

inline std::vector<Diagram> graph_diagram_set(const SuiteOptions& o, int default_samples) {
  const int hi = o.max_n.value_or(7);
  auto set = partition_diagrams(1, hi);
  for (auto& d : sample_diagrams(static_cast<std::size_t>(o.samples.value_or(default_samples)), 2, hi, o.seed,
                                 [](const Diagram& x) { return !is_partition_shape(x); }))
    set.push_back(std::move(d));
  return set;
}

/// Components of the inv = 0 subgraphs are dual equivalence graphs, and the
/// three tests for being one agree on every component of the Assaf graph.
inline Result deg_suite(const SuiteOptions& o = {}) {
  return detail::timed("A7", "deg", 300.0, true, [&](Result& r) {
    const Bounds b = detail::unbounded();
    const auto set = graph_diagram_set(o, 200);
    long long non_deg = 0;
    for (const auto& d : set) {
      const auto h = assaf_graph(d, VertexFilter::all(), b);
      for (const auto& comp : components(h)) {
        const auto sub = induced_subgraph(h, comp);
        const bool typed = deg_type(sub).has_value();
        const bool pattern = pattern_criterion(sub, d);
        const bool by_def = is_deg_by_definition(sub);
        non_deg += typed ? 0 : 1;
        r.expect(typed == pattern && pattern == by_def,
                 "component of " + format_word(sub.vertex(0)) + " on " + detail::show(d) + ": type " +
                     (typed ? "yes" : "no") + ", pattern " + (pattern ? "yes" : "no") + ", definition " +
                     (by_def ? "yes" : "no"));
      }

      FillingIndex fx(d);
      const auto p = assaf_graph(d, VertexFilter::inv_zero(), b);
      std::set<std::uint32_t> descent_sets;
      for (const auto& comp : components(p)) {
        const auto sub = induced_subgraph(p, comp);
        r.expect(deg_type(sub).has_value(), "inv = 0 component of " + format_word(sub.vertex(0)) + " on " +
                                                detail::show(d) + " has no type");
        for (const Word& v : sub.vertices()) descent_sets.insert(fx.descent_mask(v));
      }
      for (std::uint32_t m : descent_sets) {
        const auto rg = assaf_graph(d, VertexFilter::inv_zero_descents(fx.cells_of(m)), b);
        for (const auto& comp : components(rg))
          r.expect(deg_type(induced_subgraph(rg, comp)).has_value(),
                   "R component on " + detail::show(d) + " / " + fx.cells_of(m).to_string() + " has no type");
      }
    }
    r.notes.push_back(std::to_string(set.size()) + " diagrams, " + std::to_string(non_deg) +
                      " non-DEG components of Assaf graphs");
  });
}

/// Every dual equivalence component of type lambda holds exactly one
/// standardized Yamanouchi word that does not jam, and of shape lambda.
inline Result syam_decomposition(const SuiteOptions& o = {}) {
  return detail::timed("A8", "theorem2", 300.0, true, [&](Result& r) {
    const Bounds b = detail::unbounded();
    const auto set = graph_diagram_set(o, 200);
    for (const auto& d : set) {
      const auto rep = yam_decomposition_check(d, b);
      ++r.cases;
      for (const auto& v : rep.violations) r.fail(detail::show(d) + ": " + v);
    }
    r.notes.push_back(std::to_string(set.size()) + " diagrams");
  });
}

/// R_{gamma,delta} is nonzero exactly for realizable gamma, with the leading
/// Yamanouchi content as its lexicographically largest Schur term.
inline Result realizability(const SuiteOptions& o = {}) {
  return detail::timed("A9", "realizable", 180.0, true, [&](Result& r) {
    const Bounds b = detail::unbounded();
    const int hi = o.max_n.value_or(6);
    auto set = partition_diagrams(1, hi);
    for (auto& d : sample_diagrams(static_cast<std::size_t>(o.samples.value_or(200)), 2, hi, o.seed,
                                   [](const Diagram& x) { return !is_partition_shape(x); }))
      set.push_back(std::move(d));
    for (const auto& d : set) {
      FillingIndex fx(d);
      const auto rf = r_polynomials_by_descents(d, b);
      const auto rs = r_schur_by_descents(d, b);
      for (const auto& gamma : detail::subsets(d)) {
        const auto m = fx.mask_of(gamma);
        const bool nonzero = rf.count(m) > 0;
        const bool real = is_realizable(gamma, d);
        r.expect(nonzero == real, "realizability of " + gamma.to_string() + " in " + detail::show(d) + ": R " +
                                      (nonzero ? "nonzero" : "zero"));
        if (!real || !nonzero) continue;
        const auto& s = rs.at(m);
        const Partition& top = s.terms().begin()->first;
        const Partition lead = leading_term(gamma, d);
        r.expect(top == lead && s.coeff(lead) == BivariatePoly::monomial(0, 0, 1),
                 "leading term of " + gamma.to_string() + " in " + detail::show(d) + ": expected " +
                     lead.to_string() + ", top " + top.to_string());
      }
    }
    r.notes.push_back(std::to_string(set.size()) + " diagrams");
  });
}

namespace detail {

inline Word random_permutation(std::mt19937_64& rng, int n) {
  Word p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

inline Diagram random_diagram(std::mt19937_64& rng, int n) {
  std::vector<Cell> box;
  for (int y = 0; y < 4; ++y)
    for (int x = 0; x < 4; ++x) box.push_back({x, y});
  std::shuffle(box.begin(), box.end(), rng);
  return Diagram(std::vector<Cell>(box.begin(), box.begin() + n));
}

// Uniform over nothing in particular: builds right to left, choosing among
// the letters allowed by the suffix condition.
inline Word random_yamanouchi(std::mt19937_64& rng, int n) {
  Word w(static_cast<std::size_t>(n));
  std::vector<int> count{0};
  for (int p = n - 1; p >= 0; --p) {
    std::vector<int> allowed{1};
    for (std::size_t v = 2; v <= count.size() + 1; ++v)
      if (count[v - 2] > (v - 1 < count.size() ? count[v - 1] : 0)) allowed.push_back(static_cast<int>(v));
    const int letter = allowed[std::uniform_int_distribution<std::size_t>(0, allowed.size() - 1)(rng)];
    if (static_cast<std::size_t>(letter) > count.size()) count.push_back(0);
    ++count[static_cast<std::size_t>(letter - 1)];
    w[static_cast<std::size_t>(p)] = letter;
  }
  return w;
}

inline long long hook_length_count(const Partition& lambda) {
  const auto conj = lambda.conjugate();
  long long num = 1;
  for (int k = 2; k <= lambda.size(); ++k) num *= k;
  long long den = 1;
  for (std::size_t i = 1; i <= lambda.length(); ++i)
    for (int j = 1; j <= lambda[i]; ++j) den *= (lambda[i] - j) + (conj[static_cast<std::size_t>(j)] - static_cast<int>(i)) + 1;
  return num / den;
}

}  // namespace detail

/// Randomized laws, seeded.
inline Result properties(const SuiteOptions& o = {}) {
  return detail::timed("A10", "properties", 120.0, true, [&](Result& r) {
    std::mt19937_64 rng(o.seed);
    const int per = o.samples.value_or(2000);
    const int hi = std::min(o.max_n.value_or(9), 16);
    std::uniform_int_distribution<int> size_dist(3, std::max(3, hi));

    for (int k = 0; k < per; ++k) {
      const int n = size_dist(rng);
      const Word pi = detail::random_permutation(rng, n);
      const int i = std::uniform_int_distribution<int>(2, n - 1)(rng);
      r.expect(d(i, d(i, pi)) == pi, "d involution on " + format_word(pi));
      r.expect(d_tilde(i, d_tilde(i, pi)) == pi, "d~ involution on " + format_word(pi));

      const Diagram dg = detail::random_diagram(rng, n);
      FillingIndex fx(dg);
      const Word img = D(i, fx.pistols(), pi);
      r.expect(D(i, fx.pistols(), img) == pi, "D involution on " + format_word(pi) + " / " + dg.to_string());
      r.expect(fx.inv(img) == fx.inv(pi) && fx.maj(img) == fx.maj(pi) && fx.descent_mask(img) == fx.descent_mask(pi),
               "D preserves inv, maj, Des on " + format_word(pi) + " / " + dg.to_string());

      const Word rev = reverse_values(pi);
      r.expect(fx.inv(pi) + fx.inv(rev) == fx.max_inv(), "inv complement on " + format_word(pi));
      r.expect(fx.maj(pi) + fx.maj(rev) == fx.max_maj(), "maj complement on " + format_word(pi));

      r.expect(standardize(unstandardize(pi)) == pi, "st(unst(pi)) on " + format_word(pi));
      const Word y = detail::random_yamanouchi(rng, n);
      r.expect(unstandardize(standardize(y)) == y, "unst(st(w)) on Yamanouchi " + format_word(y));

      Tableau p = insertion_tableau(pi);
      for (auto& row : p.rows)
        if (!row.empty() && row.back() == n) row.pop_back();
      while (!p.rows.empty() && p.rows.back().empty()) p.rows.pop_back();
      Word restricted;
      for (int v : pi)
        if (v != n) restricted.push_back(v);
      r.expect(insertion_tableau(restricted) == p, "RSK restriction on " + format_word(pi));
    }

    for (int n = 1; n <= 8; ++n)
      for (const auto& lambda : partitions_of(n))
        r.expect(static_cast<long long>(standard_tableaux(lambda).size()) == detail::hook_length_count(lambda),
                 "hook length count for " + lambda.to_string());

    const Bounds b = detail::unbounded();
    const auto graphs = sample_diagrams(static_cast<std::size_t>(std::max(10, per / 100)), 4, std::min(hi, 7),
                                        o.seed ^ 0x9e3779b97f4a7c15ULL, [](const Diagram&) { return true; });
    for (const auto& dg : graphs)
      r.expect(satisfies_commuting_property(assaf_graph(dg, VertexFilter::all(), b)),
               "commuting property on " + dg.to_string());
  });
}

/// Report only: Schur expansions of the components of Assaf graphs of
/// partitions, expected to have nonnegative integer coefficients.
inline Result conjecture(const SuiteOptions& o = {}) {
  return detail::timed("A11", "conjecture", 0.0, false, [&](Result& r) {
    const Bounds b = detail::unbounded();
    long long comps = 0, non_deg = 0;
    for (int n = 1; n <= o.max_n.value_or(7); ++n)
      for (const auto& mu : partitions_of(n)) {
        const Diagram dg = diagram_from_partition(mu);
        for (const auto& c : component_schur_report(assaf_graph(dg, VertexFilter::all(), b))) {
          ++comps;
          if (!c.type) ++non_deg;
          bool ok = c.schur.has_value();
          if (ok)
            for (const auto& [lambda, p] : c.schur->terms())
              for (const auto& [e, coeff] : p.terms()) ok = ok && coeff > 0;
          r.expect(ok, "component of " + format_word(c.representative) + " on " + mu.to_string() +
                           (c.schur ? " has a negative coefficient" : " is not Schur"));
        }
      }
    r.notes.push_back(std::to_string(comps) + " components, " + std::to_string(non_deg) + " not DEG");
  });
}

struct Suite {
  std::string name;
  std::string id;
  std::function<Result(const SuiteOptions&)> run;
};

inline const std::vector<Suite>& all_suites() {
  static const std::vector<Suite> suites{
      {"fixtures", "A1", fixtures},
      {"jamming", "A2", jamming},
      {"theorem1", "A3", yamanouchi_expansion},
      {"corollary333", "A4", avoiding_333},
      {"proposition", "A5", avoiding_4_and_33},
      {"pistols3", "A6", three_cell_pistols},
      {"deg", "A7", deg_suite},
      {"theorem2", "A8", syam_decomposition},
      {"realizable", "A9", realizability},
      {"properties", "A10", properties},
      {"conjecture", "A11", conjecture},
  };
  return suites;
}

inline const Suite* find_suite(const std::string& name) {
  for (const auto& s : all_suites())
    if (s.name == name || s.id == name) return &s;
  return nullptr;
}

/// One line: "PASS A3 theorem1 (12.3 s / 60 s, 1234 cases)".
inline std::string summary_line(const Result& r) {
  std::ostringstream os;
  os << (r.passed() ? "PASS" : (r.gating ? "FAIL" : "WARN")) << ' ' << r.id << ' ' << r.name << " (";
  os.setf(std::ios::fixed);
  os.precision(2);
  os << r.seconds << " s";
  if (r.limit_seconds > 0) os << " / limit " << r.limit_seconds << " s";
  os << ", " << r.cases << " cases";
  if (!r.gating) os << ", report only";
  os << ")";
  for (const auto& n : r.notes) os << " [" << n << "]";
  if (!r.correct) os << " first failure: " << r.failures.front();
  else if (!r.passed()) os << " time limit exceeded";
  return os.str();
}

}  // namespace yamhall::checks
