#pragma once

// Expansions in the fundamental quasisymmetric basis F_sigma and in the Schur
// basis, with coefficients in Z[q, t]. The Macdonald-type polynomials are
// computed here both as filling sums (F basis) and as Yamanouchi sums
// (Schur basis).

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "yamhall/fillings.hpp"
#include "yamhall/rsk_yam.hpp"
#include "yamhall/shapes.hpp"
#include "yamhall/words.hpp"

namespace yamhall {

struct NotInSchurSpan : std::domain_error {
  using std::domain_error::domain_error;
};

/// Sparse integer polynomial in q and t.
class BivariatePoly {
public:
  using Exponents = std::pair<int, int>;  // (q, t)

  BivariatePoly() = default;

  static BivariatePoly monomial(int q_exp, int t_exp, long long coeff = 1) {
    BivariatePoly p;
    p.add(q_exp, t_exp, coeff);
    return p;
  }

  void add(int q_exp, int t_exp, long long coeff) {
    if (coeff == 0) return;
    auto [it, fresh] = terms_.try_emplace({q_exp, t_exp}, coeff);
    if (!fresh && (it->second += coeff) == 0) terms_.erase(it);
  }

  BivariatePoly& operator+=(const BivariatePoly& o) {
    for (const auto& [e, c] : o.terms_) add(e.first, e.second, c);
    return *this;
  }
  BivariatePoly& operator-=(const BivariatePoly& o) {
    for (const auto& [e, c] : o.terms_) add(e.first, e.second, -c);
    return *this;
  }
  friend BivariatePoly operator+(BivariatePoly a, const BivariatePoly& b) { return a += b; }
  friend BivariatePoly operator-(BivariatePoly a, const BivariatePoly& b) { return a -= b; }

  BivariatePoly scaled(long long k) const {
    BivariatePoly p;
    if (k == 0) return p;
    for (const auto& [e, c] : terms_) p.terms_.emplace(e, c * k);
    return p;
  }

  long long coeff(int q_exp, int t_exp) const {
    auto it = terms_.find({q_exp, t_exp});
    return it == terms_.end() ? 0 : it->second;
  }

  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponents, long long>& terms() const& { return terms_; }
  std::map<Exponents, long long> terms() && { return std::move(terms_); }

  /// Exchange the roles of q and t.
  BivariatePoly swapped() const {
    BivariatePoly p;
    for (const auto& [e, c] : terms_) p.add(e.second, e.first, c);
    return p;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : terms_) {
      if (!s.empty()) s += c < 0 ? " - " : " + ";
      else if (c < 0) s += "-";
      const long long a = c < 0 ? -c : c;
      const bool unit = e.first == 0 && e.second == 0;
      if (a != 1 || unit) s += std::to_string(a);
      if (e.first) s += "q" + (e.first > 1 ? "^" + std::to_string(e.first) : std::string{});
      if (e.second) s += "t" + (e.second > 1 ? "^" + std::to_string(e.second) : std::string{});
    }
    return s;
  }

  friend bool operator==(const BivariatePoly&, const BivariatePoly&) = default;

private:
  std::map<Exponents, long long> terms_;
};

/// Linear combination of basis elements with BivariatePoly coefficients.
template <class Key, class Compare = std::less<Key>>
class Expansion {
public:
  using Terms = std::map<Key, BivariatePoly, Compare>;

  Expansion() = default;
  explicit Expansion(int degree) : degree_(degree) {}

  int degree() const { return degree_; }
  const Terms& terms() const& { return terms_; }
  Terms terms() && { return std::move(terms_); }
  bool is_zero() const { return terms_.empty(); }

  void add(const Key& k, const BivariatePoly& p) {
    if (p.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(k, p);
    if (!fresh) {
      it->second += p;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  void add(const Key& k, int q_exp, int t_exp, long long coeff = 1) {
    add(k, BivariatePoly::monomial(q_exp, t_exp, coeff));
  }

  Expansion& operator+=(const Expansion& o) {
    for (const auto& [k, p] : o.terms_) add(k, p);
    return *this;
  }
  Expansion& operator-=(const Expansion& o) {
    for (const auto& [k, p] : o.terms_) add(k, p.scaled(-1));
    return *this;
  }

  BivariatePoly coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? BivariatePoly{} : it->second;
  }

  /// Keep only the q^e part of every coefficient, as a polynomial in t.
  Expansion q_slice(int q_exp) const {
    Expansion out(degree_);
    for (const auto& [k, p] : terms_)
      for (const auto& [e, c] : p.terms())
        if (e.first == q_exp) out.add(k, 0, e.second, c);
    return out;
  }

  friend bool operator==(const Expansion& a, const Expansion& b) {
    return a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

private:
  int degree_ = 0;
  Terms terms_;
};

using QSymPolynomial = Expansion<Signature>;
using SchurPolynomial = Expansion<Partition, ReverseLex>;

namespace detail {

// Accumulates q^a t^b F_sigma keyed by signature mask before building maps.
class FAccumulator {
public:
  explicit FAccumulator(int n) : n_(n) {}

  void add(std::uint32_t mask, int q_exp, int t_exp, long long c = 1) {
    const std::uint64_t key = (std::uint64_t{mask} << 32) | (static_cast<std::uint64_t>(q_exp) << 16) |
                              static_cast<std::uint64_t>(t_exp);
    acc_[key] += c;
  }

  QSymPolynomial finish() const {
    QSymPolynomial out(n_);
    const auto len = static_cast<std::size_t>(n_ > 0 ? n_ - 1 : 0);
    for (const auto& [key, c] : acc_) {
      const auto mask = static_cast<std::uint32_t>(key >> 32);
      out.add(Signature::from_minus_mask(mask, len), static_cast<int>((key >> 16) & 0xffff),
              static_cast<int>(key & 0xffff), c);
    }
    return out;
  }

private:
  int n_;
  std::unordered_map<std::uint64_t, long long> acc_;
};

}  // namespace detail

/// Sum over all standard fillings of q^inv t^maj F_sigma.
inline QSymPolynomial macdonald_F(const Diagram& d, const Bounds& bounds = Bounds::from_env()) {
  FillingIndex fx(d);
  detail::FAccumulator acc(d.size());
  for_each_standard_filling(
      d, [&](const Word& w) { acc.add(signature_mask(w), fx.inv(w), fx.maj(w)); }, bounds);
  return acc.finish();
}

/// The inv = 0 part of macdonald_F.
inline QSymPolynomial hall_littlewood_F(const Diagram& d, const Bounds& bounds = Bounds::from_env()) {
  FillingIndex fx(d);
  detail::FAccumulator acc(d.size());
  for_each_standard_filling(
      d,
      [&](const Word& w) {
        if (fx.inv_is_zero(w)) acc.add(signature_mask(w), 0, fx.maj(w));
      },
      bounds);
  return acc.finish();
}

/// R_{gamma, delta} for every descent set at once, keyed by reading-index mask.
inline std::map<std::uint32_t, QSymPolynomial> r_polynomials_by_descents(const Diagram& d,
                                                                         const Bounds& bounds = Bounds::from_env()) {
  FillingIndex fx(d);
  std::map<std::uint32_t, detail::FAccumulator> acc;
  for_each_standard_filling(
      d,
      [&](const Word& w) {
        if (!fx.inv_is_zero(w)) return;
        acc.try_emplace(fx.descent_mask(w), d.size()).first->second.add(signature_mask(w), 0, 0);
      },
      bounds);
  std::map<std::uint32_t, QSymPolynomial> out;
  for (const auto& [m, a] : acc) out.emplace(m, a.finish());
  return out;
}

inline QSymPolynomial r_polynomial_F(const Diagram& gamma, const Diagram& d,
                                     const Bounds& bounds = Bounds::from_env()) {
  if (!d.contains(gamma)) throw InvalidInput("r_polynomial_F: descent set is not contained in the diagram");
  FillingIndex fx(d);
  const std::uint32_t target = fx.mask_of(gamma);
  detail::FAccumulator acc(d.size());
  for_each_standard_filling(
      d,
      [&](const Word& w) {
        if (fx.inv_is_zero(w) && fx.descent_mask(w) == target) acc.add(signature_mask(w), 0, 0);
      },
      bounds);
  return acc.finish();
}

/// Signature masks of the standard Young tableaux of shape lambda.
inline const std::vector<std::uint32_t>& syt_signature_masks(const Partition& lambda) {
  static std::map<Partition, std::vector<std::uint32_t>> cache;
  auto it = cache.find(lambda);
  if (it != cache.end()) return it->second;
  std::vector<std::uint32_t> masks;
  for (const auto& t : standard_tableaux(lambda)) masks.push_back(signature_mask(t.reading_word()));
  return cache.emplace(lambda, std::move(masks)).first->second;
}

/// Gessel's expansion: s_lambda is the sum of F over SYT(lambda) signatures.
inline QSymPolynomial schur_to_F(const SchurPolynomial& s) {
  QSymPolynomial out(s.degree());
  const auto len = static_cast<std::size_t>(s.degree() > 0 ? s.degree() - 1 : 0);
  for (const auto& [lambda, poly] : s.terms())
    for (std::uint32_t m : syt_signature_masks(lambda)) out.add(Signature::from_minus_mask(m, len), poly);
  return out;
}

/// Number of semistandard tableaux of shape lambda and content mu, counted by
/// stacking horizontal strips.
inline long long kostka(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw InvalidInput("kostka: |lambda| != |mu|");
  static std::map<std::pair<Partition, Partition>, long long> cache;
  if (auto it = cache.find({lambda, mu}); it != cache.end()) return it->second;

  const std::size_t rows = lambda.length();
  std::vector<int> shape(rows, 0);
  long long count = 0;
  // Place the mu_k copies of letter k as a horizontal strip on top of `shape`.
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == mu.length()) {
      if (Partition(shape) == lambda) ++count;
      return;
    }
    std::vector<int> base = shape;
    auto strip = [&](auto&& strip_self, std::size_t r, int left) -> void {
      if (left == 0) {
        self(self, k + 1);
        return;
      }
      if (r == rows) return;
      // Row r may grow up to lambda_r and, for a horizontal strip, not past
      // the old length of the row below.
      const int cap_row = lambda.parts()[r];
      const int cap_strip = r == 0 ? cap_row : std::min(cap_row, base[r - 1]);
      const int room = cap_strip - base[r];
      for (int add = std::min(room, left); add >= 0; --add) {
        shape[r] = base[r] + add;
        strip_self(strip_self, r + 1, left - add);
      }
      shape[r] = base[r];
    };
    strip(strip, 0, mu.parts()[k]);
    shape = base;
  };
  rec(rec, 0);
  cache[{lambda, mu}] = count;
  return count;
}

/// Inverse of schur_to_F on the Schur span. Coefficients are peeled off in
/// decreasing lexicographic order through the monomial coefficients
/// [x^mu] F_sigma = 1 iff every descent of sigma is a partial sum of mu, and
/// the unitriangularity of the Kostka matrix.
inline SchurPolynomial schur_from_F(const QSymPolynomial& f) {
  const int n = f.degree();
  SchurPolynomial out(n);
  if (f.is_zero()) return out;

  std::vector<std::pair<std::uint32_t, const BivariatePoly*>> fterms;
  for (const auto& [sig, poly] : f.terms()) {
    if (static_cast<int>(sig.size()) != n - 1) throw InvalidInput("schur_from_F: signature length mismatch");
    fterms.emplace_back(sig.minus_mask(), &poly);
  }

  const auto parts = partitions_of(n);  // decreasing lex order
  for (const auto& mu : parts) {
    std::uint32_t sums = 0;
    int acc = 0;
    for (int p : mu.parts()) {
      acc += p;
      if (acc < n) sums |= std::uint32_t{1} << (acc - 1);
    }
    BivariatePoly c;
    for (const auto& [mask, poly] : fterms)
      if ((mask & ~sums) == 0) c += *poly;
    for (const auto& [lambda, coeff] : out.terms())
      if (long long k = kostka(lambda, mu)) c -= coeff.scaled(k);
    out.add(mu, c);
  }
  if (!(schur_to_F(out) == f)) throw NotInSchurSpan("schur_from_F: input is not in the span of Schur functions");
  return out;
}

/// Sum over lambda and w in Yam_delta(lambda) with inv = 0 of t^maj s_lambda.
inline SchurPolynomial hl_schur(const Diagram& d, const Bounds& bounds = Bounds::from_env()) {
  bounds.check_fill(d.size(), "hl_schur");
  FillingIndex fx(d);
  SchurPolynomial out(d.size());
  for (const auto& lambda : partitions_of(d.size()))
    for (const auto& w : generate_yam(lambda, d, {.no_jam = true, .inv_zero = true}))
      out.add(lambda, 0, fx.maj(w));
  return out;
}

/// Same sum restricted to Des = gamma, with plain integer coefficients.
inline SchurPolynomial r_schur(const Diagram& gamma, const Diagram& d, const Bounds& bounds = Bounds::from_env()) {
  if (!d.contains(gamma)) throw InvalidInput("r_schur: descent set is not contained in the diagram");
  bounds.check_fill(d.size(), "r_schur");
  FillingIndex fx(d);
  const std::uint32_t target = fx.mask_of(gamma);
  SchurPolynomial out(d.size());
  for (const auto& lambda : partitions_of(d.size()))
    for (const auto& w : generate_yam(lambda, d, {.no_jam = true, .inv_zero = true}))
      if (fx.descent_mask(w) == target) out.add(lambda, 0, 0);
  return out;
}

/// r_schur for every descent set at once, keyed by reading-index mask.
inline std::map<std::uint32_t, SchurPolynomial> r_schur_by_descents(const Diagram& d,
                                                                   const Bounds& bounds = Bounds::from_env()) {
  bounds.check_fill(d.size(), "r_schur_by_descents");
  FillingIndex fx(d);
  std::map<std::uint32_t, SchurPolynomial> out;
  for (const auto& lambda : partitions_of(d.size()))
    for (const auto& w : generate_yam(lambda, d, {.no_jam = true, .inv_zero = true}))
      out.try_emplace(fx.descent_mask(w), d.size()).first->second.add(lambda, 0, 0);
  return out;
}

enum class NaiveMode {
  QT,       // q^inv t^maj over all of Yam(lambda)
  InvZero,  // t^maj over the inv = 0 words of Yam(lambda)
};

/// Yamanouchi sum without the jamming condition.
inline SchurPolynomial naive_yam_schur(const Diagram& d, NaiveMode mode, const Bounds& bounds = Bounds::from_env()) {
  bounds.check_fill(d.size(), "naive_yam_schur");
  FillingIndex fx(d);
  SchurPolynomial out(d.size());
  for (const auto& lambda : partitions_of(d.size())) {
    const YamFilters f{.no_jam = false, .inv_zero = mode == NaiveMode::InvZero};
    for (const auto& w : generate_yam(lambda, d, f))
      out.add(lambda, mode == NaiveMode::QT ? fx.inv(w) : 0, fx.maj(w));
  }
  return out;
}

inline SchurPolynomial naive_yam_schur(const Diagram& d, bool include_q, const Bounds& bounds = Bounds::from_env()) {
  return naive_yam_schur(d, include_q ? NaiveMode::QT : NaiveMode::InvZero, bounds);
}

/// The q^top slice of a Schur expansion, rewritten with lambda conjugated and
/// t^maj replaced by t^(max_maj - maj).
inline SchurPolynomial conjugate_comaj(const SchurPolynomial& s, int max_maj) {
  SchurPolynomial out(s.degree());
  for (const auto& [lambda, p] : s.terms())
    for (const auto& [e, c] : p.terms()) out.add(lambda.conjugate(), e.first, max_maj - e.second, c);
  return out;
}

}  // namespace yamhall
