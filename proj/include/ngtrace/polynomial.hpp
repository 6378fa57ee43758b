#pragma once

// Exact multivariate polynomials over Q with a positive weighted grading.
// Module elements (vectors of polynomials) reuse the same representation:
// every monomial carries a component index, which is 0 for plain ring
// elements.

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cstdint>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "ngtrace/error.hpp"
#include "ngtrace/semigroup.hpp"

namespace ngtrace {

using Rational = mpq_class;

inline constexpr std::size_t kMaxVars = 16;

struct Monomial {
  std::array<std::int32_t, kMaxVars> exp{};
  Int degree = 0;        // weighted degree, maintained by the producing ring
  std::int32_t comp = 0; // module component

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.comp == b.comp && a.exp == b.exp;
  }
  bool is_one() const {
    return std::all_of(exp.begin(), exp.end(), [](std::int32_t e) { return e == 0; });
  }
};

inline Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  for (std::size_t i = 0; i < kMaxVars; ++i) out.exp[i] = a.exp[i] + b.exp[i];
  out.degree = a.degree + b.degree;
  out.comp = a.comp + b.comp;
  return out;
}

/// Divisibility ignoring components.
inline bool divides_exponents(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (a.exp[i] > b.exp[i]) return false;
  return true;
}

/// a | b as module terms (same component).
inline bool divides(const Monomial& a, const Monomial& b) {
  return a.comp == b.comp && divides_exponents(a, b);
}

/// b / a, assuming divides_exponents(a, b); the result lives in component 0.
inline Monomial quotient(const Monomial& b, const Monomial& a) {
  Monomial out;
  for (std::size_t i = 0; i < kMaxVars; ++i) out.exp[i] = b.exp[i] - a.exp[i];
  out.degree = b.degree - a.degree;
  out.comp = 0;
  return out;
}

inline bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (a.exp[i] != 0 && b.exp[i] != 0) return false;
  return true;
}

/// Variable table, weights and monomial order.
///
/// The order is: weighted degree first; then, if `elimination_block` > 0,
/// lexicographic on the first `elimination_block` variables (larger exponent
/// wins), which makes it an elimination order on homogeneous ideals; then
/// reverse lexicographic. With `position_over_term` the component index is
/// compared before anything else, smaller components being larger.
class Ring {
public:
  Ring(std::vector<std::string> names, std::vector<Int> weights,
       std::size_t elimination_block = 0, bool position_over_term = false)
      : names_(std::move(names)),
        weights_(std::move(weights)),
        elimination_block_(elimination_block),
        pot_(position_over_term) {
    if (names_.size() != weights_.size())
      throw InvalidInput("variable names and weights differ in length");
    if (names_.size() > kMaxVars)
      throw ResourceLimit("at most " + std::to_string(kMaxVars) + " variables are supported");
    for (Int w : weights_)
      if (w <= 0) throw InvalidInput("variable weights must be positive");
  }

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<Int>& weights() const { return weights_; }
  std::size_t elimination_block() const { return elimination_block_; }
  bool position_over_term() const { return pot_; }

  int index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return static_cast<int>(i);
    return -1;
  }

  Int degree_of(const Monomial& m) const {
    Int d = 0;
    for (std::size_t i = 0; i < names_.size(); ++i) d += weights_[i] * m.exp[i];
    return d;
  }

  Monomial variable(std::size_t i, std::int32_t power = 1) const {
    Monomial m;
    m.exp[i] = power;
    m.degree = weights_[i] * power;
    return m;
  }

  Monomial lcm(const Monomial& a, const Monomial& b) const {
    Monomial out;
    for (std::size_t i = 0; i < kMaxVars; ++i) out.exp[i] = std::max(a.exp[i], b.exp[i]);
    out.degree = degree_of(out);
    out.comp = a.comp;
    return out;
  }

  /// Three-way comparison: positive if a > b.
  int compare(const Monomial& a, const Monomial& b) const {
    if (pot_ && a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
    if (a.degree != b.degree) return a.degree > b.degree ? 1 : -1;
    for (std::size_t i = 0; i < elimination_block_; ++i)
      if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i] ? 1 : -1;
    for (std::size_t i = names_.size(); i-- > 0;)
      if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? 1 : -1;
    if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
    return 0;
  }

  std::string format(const Monomial& m) const {
    std::string out;
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (m.exp[i] == 0) continue;
      if (!out.empty()) out += "*";
      out += names_[i];
      if (m.exp[i] != 1) out += "^" + std::to_string(m.exp[i]);
    }
    return out.empty() ? "1" : out;
  }

  /// Same variables and weights, different order flavor.
  std::shared_ptr<const Ring> with_order(std::size_t elimination_block, bool pot) const {
    return std::make_shared<const Ring>(names_, weights_, elimination_block, pot);
  }

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.names_ == b.names_ && a.weights_ == b.weights_ &&
           a.elimination_block_ == b.elimination_block_ && a.pot_ == b.pot_;
  }

private:
  std::vector<std::string> names_;
  std::vector<Int> weights_;
  std::size_t elimination_block_;
  bool pot_;
};

using RingPtr = std::shared_ptr<const Ring>;

struct Term {
  Monomial mono;
  Rational coeff;
};

/// A polynomial (or module element) with terms sorted strictly decreasing
/// in the ring's order and no zero coefficients.
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)) {
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
      return ring_->compare(a.mono, b.mono) > 0;
    });
    for (auto& t : terms) {
      if (!terms_.empty() && terms_.back().mono == t.mono)
        terms_.back().coeff += t.coeff;
      else
        terms_.push_back(std::move(t));
      if (terms_.back().coeff == 0) terms_.pop_back();
    }
  }

  static Polynomial constant(RingPtr ring, const Rational& c) {
    if (c == 0) return Polynomial(std::move(ring));
    return Polynomial(std::move(ring), {Term{Monomial{}, c}});
  }
  static Polynomial monomial(RingPtr ring, const Monomial& m, const Rational& c = 1) {
    if (c == 0) return Polynomial(std::move(ring));
    return Polynomial(std::move(ring), {Term{m, c}});
  }
  static Polynomial variable(RingPtr ring, std::size_t i, std::int32_t power = 1) {
    auto m = ring->variable(i, power);
    return monomial(std::move(ring), m);
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Term& lead() const { return terms_.front(); }
  const Monomial& lead_monomial() const { return terms_.front().mono; }
  const Rational& lead_coeff() const { return terms_.front().coeff; }

  /// Removes and returns the leading term.
  Term pop_lead() {
    Term t = std::move(terms_.front());
    terms_.erase(terms_.begin());
    return t;
  }

  /// Appends a term smaller than every present term.
  void append_lower(Term t) {
    if (t.coeff != 0) terms_.push_back(std::move(t));
  }

  bool is_homogeneous() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [&](const Term& t) { return t.mono.degree == terms_.front().mono.degree; });
  }

  /// Adds factor * mono * other to this polynomial.
  void add_scaled(const Rational& factor, const Monomial& mono, const Polynomial& other) {
    if (factor == 0 || other.is_zero()) return;
    adopt_ring(other);
    std::vector<Term> merged;
    merged.reserve(terms_.size() + other.terms_.size());
    auto a = terms_.begin();
    auto b = other.terms_.begin();
    Term scaled;
    auto load = [&](decltype(b) it) {
      scaled.mono = mono * it->mono;
      scaled.coeff = factor * it->coeff;
    };
    if (b != other.terms_.end()) load(b);
    while (a != terms_.end() || b != other.terms_.end()) {
      if (b == other.terms_.end()) {
        merged.push_back(std::move(*a++));
        continue;
      }
      int cmp = a == terms_.end() ? -1 : ring_->compare(a->mono, scaled.mono);
      if (cmp > 0) {
        merged.push_back(std::move(*a++));
      } else if (cmp < 0) {
        merged.push_back(scaled);
        if (++b != other.terms_.end()) load(b);
      } else {
        a->coeff += scaled.coeff;
        if (a->coeff != 0) merged.push_back(std::move(*a));
        ++a;
        if (++b != other.terms_.end()) load(b);
      }
    }
    terms_ = std::move(merged);
  }

  Polynomial& operator+=(const Polynomial& o) {
    add_scaled(1, Monomial{}, o);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    add_scaled(-1, Monomial{}, o);
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  Polynomial operator-() const {
    Polynomial out(*this);
    for (auto& t : out.terms_) t.coeff = -t.coeff;
    return out;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out(a.ring_ ? a.ring_ : b.ring_);
    for (const auto& t : a.terms_) out.add_scaled(t.coeff, t.mono, b);
    return out;
  }

  Polynomial scaled(const Rational& c, const Monomial& m = Monomial{}) const {
    Polynomial out(ring_);
    out.add_scaled(c, m, *this);
    return out;
  }

  Polynomial pow(unsigned e) const {
    Polynomial out = constant(ring_, 1);
    for (unsigned i = 0; i < e; ++i) out = out * *this;
    return out;
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    Rational inv = 1 / lead_coeff();
    return scaled(inv);
  }

  /// Re-expresses the polynomial over another ring with the same variables.
  Polynomial rebased(RingPtr target) const {
    return Polynomial(std::move(target), terms_);
  }

  /// Terms of one module component, moved to component 0.
  Polynomial component(std::int32_t comp, RingPtr target) const {
    std::vector<Term> picked;
    for (const auto& t : terms_)
      if (t.mono.comp == comp) {
        picked.push_back(t);
        picked.back().mono.comp = 0;
      }
    return Polynomial(std::move(target), std::move(picked));
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& t : terms_) {
      Rational c = t.coeff;
      bool negative = c < 0;
      if (negative) c = -c;
      if (first)
        out << (negative ? "-" : "");
      else
        out << (negative ? " - " : " + ");
      first = false;
      bool unit_mono = t.mono.is_one();
      if (c != 1 || unit_mono) {
        out << c.get_str();
        if (!unit_mono) out << "*";
      }
      if (!unit_mono) out << ring_->format(t.mono);
      if (t.mono.comp != 0) out << "*e" << t.mono.comp;
    }
    return out.str();
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff)
        return false;
    return true;
  }

private:
  void adopt_ring(const Polynomial& other) {
    if (!ring_) ring_ = other.ring_;
  }

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// A matrix of polynomials, row-major.
using PolyMatrix = std::vector<std::vector<Polynomial>>;

/// All 2x2 minors of a 2-row matrix, column pairs (i < j) in lexicographic
/// order, each as top_i * bottom_j - top_j * bottom_i.
inline std::vector<Polynomial> two_minors(const PolyMatrix& m) {
  if (m.size() != 2 || m[0].size() != m[1].size())
    throw InvalidInput("two_minors expects a 2 x n matrix");
  std::vector<Polynomial> out;
  std::size_t n = m[0].size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      out.push_back(m[0][i] * m[1][j] - m[0][j] * m[1][i]);
  return out;
}

}  // namespace ngtrace
