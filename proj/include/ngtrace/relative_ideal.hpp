#pragma once

// Relative (fractional) ideals of a numerical semigroup: subsets E of the
// integers, bounded below, with E + H contained in E. This is the
// combinatorial model of fractional ideals of k[[H]] and the ground-truth
// route for canonical traces.

#include <algorithm>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "ngtrace/error.hpp"
#include "ngtrace/semigroup.hpp"

namespace ngtrace {

class RelativeIdeal {
public:
  /// Normalizes `gens` to the minimal generating set of the ideal they span.
  static RelativeIdeal from_generators(std::shared_ptr<const NumericalSemigroup> base,
                                       std::vector<Int> gens) {
    if (gens.empty()) throw InvalidInput("a relative ideal needs at least one generator");
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Int> minimal;
    for (Int g : gens) {
      bool absorbed = std::any_of(minimal.begin(), minimal.end(),
                                  [&](Int kept) { return base->contains(g - kept); });
      if (!absorbed) minimal.push_back(g);
    }
    return RelativeIdeal(std::move(base), std::move(minimal));
  }

  static RelativeIdeal from_generators(const NumericalSemigroup& base, std::vector<Int> gens) {
    return from_generators(std::make_shared<const NumericalSemigroup>(base), std::move(gens));
  }

  /// The semigroup itself, 0 + H.
  static RelativeIdeal unit(std::shared_ptr<const NumericalSemigroup> base) {
    return RelativeIdeal(std::move(base), {0});
  }

  const NumericalSemigroup& base() const { return *base_; }
  const std::shared_ptr<const NumericalSemigroup>& base_ptr() const { return base_; }
  const std::vector<Int>& generators() const { return gens_; }
  Int min() const { return gens_.front(); }

  bool contains(Int z) const {
    return std::any_of(gens_.begin(), gens_.end(),
                       [&](Int g) { return base_->contains(z - g); });
  }

  /// Everything at or above this value lies in the ideal.
  Int conductor_bound() const { return min() + base_->frobenius() + 1; }

  RelativeIdeal translate(Int shift) const {
    std::vector<Int> moved(gens_);
    for (Int& g : moved) g += shift;
    return RelativeIdeal(base_, std::move(moved));
  }

  bool same_base(const RelativeIdeal& other) const {
    return base_ == other.base_ || *base_ == *other.base_;
  }

  /// True iff this ideal equals other + k for some integer k.
  bool is_translate_of(const RelativeIdeal& other) const {
    if (!same_base(other) || gens_.size() != other.gens_.size()) return false;
    Int shift = min() - other.min();
    for (std::size_t i = 0; i < gens_.size(); ++i)
      if (gens_[i] != other.gens_[i] + shift) return false;
    return true;
  }

  friend bool operator==(const RelativeIdeal& a, const RelativeIdeal& b) {
    return a.same_base(b) && a.gens_ == b.gens_;
  }

private:
  RelativeIdeal(std::shared_ptr<const NumericalSemigroup> base, std::vector<Int> gens)
      : base_(std::move(base)), gens_(std::move(gens)) {}

  std::shared_ptr<const NumericalSemigroup> base_;
  std::vector<Int> gens_;
};

namespace detail {

// Collects the ideal {z : member(z)} from a finite scan of [lo, hi]. The
// caller guarantees member(z) is false below lo and true above hi; the
// multiplicity-long sentinel past hi re-checks the second half, which
// suffices because m consecutive members of an ideal force all larger ones.
template <class Pred>
RelativeIdeal scan_ideal(std::shared_ptr<const NumericalSemigroup> base, Int lo, Int hi,
                         Pred member) {
  Int m = base->multiplicity();
  for (Int z = hi + 1; z <= hi + m; ++z)
    if (!member(z))
      throw std::logic_error("ideal scan sentinel failed at " + std::to_string(z));
  std::vector<Int> found;
  for (Int z = lo; z <= hi + m; ++z) {
    if (!member(z)) continue;
    bool absorbed = std::any_of(found.begin(), found.end(),
                                [&](Int g) { return base->contains(z - g); });
    if (!absorbed) found.push_back(z);
  }
  return RelativeIdeal::from_generators(std::move(base), std::move(found));
}

}  // namespace detail

/// Minkowski sum E + F.
inline RelativeIdeal add(const RelativeIdeal& e, const RelativeIdeal& f) {
  if (!e.same_base(f)) throw BaseMismatch();
  std::vector<Int> sums;
  for (Int a : e.generators())
    for (Int b : f.generators()) sums.push_back(a + b);
  return RelativeIdeal::from_generators(e.base_ptr(), std::move(sums));
}

/// E - F = {z : z + F contained in E}.
inline RelativeIdeal colon(const RelativeIdeal& e, const RelativeIdeal& f) {
  if (!e.same_base(f)) throw BaseMismatch();
  // z + min(F) >= min(E) is necessary; z + min(F) >= conductor(E) is sufficient
  Int lo = e.min() - f.min();
  Int hi = e.conductor_bound() - f.min();
  return detail::scan_ideal(e.base_ptr(), lo, hi, [&](Int z) {
    return std::all_of(f.generators().begin(), f.generators().end(),
                       [&](Int g) { return e.contains(z + g); });
  });
}

/// K = {x : F(H) - x not in H}; its minimal generators are F(H) - PF(H).
inline RelativeIdeal canonical_ideal(std::shared_ptr<const NumericalSemigroup> h) {
  Int frob = h->frobenius();
  auto k = detail::scan_ideal(h, 0, frob + 1, [&](Int x) { return !h->contains(frob - x); });
  std::vector<Int> expected;
  for (Int f : h->pseudo_frobenius()) expected.push_back(frob - f);
  std::sort(expected.begin(), expected.end());
  if (h->frobenius() < 0) expected = {0};
  if (k.generators() != expected)
    throw std::logic_error("canonical ideal generators disagree with F - PF(H)");
  return k;
}

inline RelativeIdeal canonical_ideal(const NumericalSemigroup& h) {
  return canonical_ideal(std::make_shared<const NumericalSemigroup>(h));
}

/// tr(K) = K + (H - K): every map K -> k[[H]] is multiplication by an
/// element of (H - K).
inline RelativeIdeal trace_canonical_oracle(std::shared_ptr<const NumericalSemigroup> h) {
  auto k = canonical_ideal(h);
  auto dual = colon(RelativeIdeal::unit(h), k);
  return add(k, dual);
}

inline RelativeIdeal trace_canonical_oracle(const NumericalSemigroup& h) {
  return trace_canonical_oracle(std::make_shared<const NumericalSemigroup>(h));
}

/// Nearly Gorenstein: every minimal generator of H lies in tr(K).
inline bool is_nearly_gorenstein_oracle(const NumericalSemigroup& h) {
  auto tr = trace_canonical_oracle(h);
  return std::all_of(h.generators().begin(), h.generators().end(),
                     [&](Int a) { return tr.contains(a); });
}

}  // namespace ngtrace
