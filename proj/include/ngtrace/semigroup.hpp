#pragma once

// Numerical semigroups H = <a_1, ..., a_n> and their classical invariants.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <span>
#include <vector>

#include "ngtrace/error.hpp"

namespace ngtrace {

using Int = std::int64_t;

namespace detail {

// Least element of <gens> in every residue class mod `modulus` (Dijkstra on
// the residue graph). Unreachable classes stay at max().
inline std::vector<Int> residue_minima(std::span<const Int> gens, Int modulus) {
  constexpr Int inf = std::numeric_limits<Int>::max();
  std::vector<Int> best(static_cast<std::size_t>(modulus), inf);
  using Entry = std::pair<Int, Int>;  // (value, residue)
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  best[0] = 0;
  queue.emplace(0, 0);
  while (!queue.empty()) {
    auto [value, residue] = queue.top();
    queue.pop();
    if (value != best[static_cast<std::size_t>(residue)]) continue;
    for (Int g : gens) {
      Int next = value + g;
      auto r = static_cast<std::size_t>(next % modulus);
      if (next < best[r]) {
        best[r] = next;
        queue.emplace(next, static_cast<Int>(r));
      }
    }
  }
  return best;
}

// Membership in <gens> for every value in [0, limit] by a plain sieve.
inline std::vector<bool> membership_sieve(std::span<const Int> gens, Int limit) {
  std::vector<bool> in(static_cast<std::size_t>(limit + 1), false);
  in[0] = true;
  for (Int v = 1; v <= limit; ++v)
    for (Int g : gens)
      if (g <= v && in[static_cast<std::size_t>(v - g)]) {
        in[static_cast<std::size_t>(v)] = true;
        break;
      }
  return in;
}

}  // namespace detail

/// A numerical semigroup given by its minimal generating system.
///
/// Generators are stored sorted ascending; any cyclic arrangement used by a
/// determinantal presentation lives with that presentation. The Apéry set
/// with respect to the multiplicity is computed once at construction and
/// drives membership, gaps and the Frobenius number.
class NumericalSemigroup {
public:
  static constexpr Int kMaxFactorizationTarget = 10'000'000;

  explicit NumericalSemigroup(std::vector<Int> gens) : gens_(std::move(gens)) {
    if (gens_.empty()) throw InvalidInput("a numerical semigroup needs at least one generator");
    for (Int g : gens_)
      if (g <= 0) throw InvalidInput("generators must be positive, got " + std::to_string(g));
    std::sort(gens_.begin(), gens_.end());
    Int g = 0;
    for (Int a : gens_) g = std::gcd(g, a);
    if (g != 1) throw GcdNotOne(g);
    for (std::size_t i = 1; i < gens_.size(); ++i)
      if (gens_[i] == gens_[i - 1]) throw NonMinimalGenerators(gens_[i]);
    // a_i is redundant iff it is reachable from the smaller generators
    for (std::size_t i = 1; i < gens_.size(); ++i) {
      auto smaller = std::span<const Int>(gens_.data(), i);
      auto sieve = detail::membership_sieve(smaller, gens_[i]);
      if (sieve[static_cast<std::size_t>(gens_[i])]) throw NonMinimalGenerators(gens_[i]);
    }
    apery_ = detail::residue_minima(gens_, multiplicity());
    frobenius_ = *std::max_element(apery_.begin(), apery_.end()) - multiplicity();
    for (Int x : gaps()) {
      bool pf = std::all_of(gens_.begin(), gens_.end(),
                            [&](Int a) { return contains(x + a); });
      if (pf) pseudo_frobenius_.push_back(x);
    }
  }

  const std::vector<Int>& generators() const { return gens_; }
  std::size_t embedding_dimension() const { return gens_.size(); }
  Int multiplicity() const { return gens_.front(); }
  Int frobenius() const { return frobenius_; }

  bool contains(Int h) const {
    if (h < 0) return false;
    return h >= apery_[static_cast<std::size_t>(h % multiplicity())];
  }

  std::vector<Int> gaps() const {
    std::vector<Int> out;
    for (Int x = 1; x <= frobenius_; ++x)
      if (!contains(x)) out.push_back(x);
    return out;
  }

  /// Least element of H in each residue class mod s, indexed by residue.
  std::vector<Int> apery_set(Int s) const {
    if (s <= 0 || !contains(s)) throw NotInSemigroup(s);
    if (s == multiplicity()) return apery_;
    return detail::residue_minima(gens_, s);
  }

  /// Gaps x with x + a_i in H for every generator a_i.
  const std::vector<Int>& pseudo_frobenius() const { return pseudo_frobenius_; }

  std::size_t type() const { return pseudo_frobenius_.size(); }

  bool is_symmetric() const {
    if (frobenius_ < 0) return true;
    if (type() != 1) return false;
    for (Int x = 0; x <= frobenius_; ++x)
      if (contains(x) == contains(frobenius_ - x)) return false;
    return true;
  }

  /// Nari's criterion: f_i + f_{t-i} = f_t for PF = {f_1 < ... < f_t}.
  bool is_almost_symmetric() const {
    const auto& pf = pseudo_frobenius_;
    std::size_t t = pf.size();
    for (std::size_t i = 1; i < t; ++i)
      if (pf[i - 1] + pf[t - i - 1] != pf[t - 1]) return false;
    return true;
  }

  /// Every exponent vector (indexed like generators()) with sum l_i a_i = h.
  std::vector<std::vector<Int>> factorizations(Int h) const {
    if (h > kMaxFactorizationTarget)
      throw ResourceLimit("factorization target " + std::to_string(h) + " exceeds 10^7");
    std::vector<std::vector<Int>> out;
    if (!contains(h)) return out;
    std::vector<Int> current(gens_.size(), 0);
    // recurse from the largest generator down; the smallest absorbs the rest
    std::function<void(std::size_t, Int)> walk = [&](std::size_t idx, Int rest) {
      if (idx == 0) {
        if (rest % gens_[0] == 0) {
          current[0] = rest / gens_[0];
          out.push_back(current);
          current[0] = 0;
        }
        return;
      }
      for (Int k = 0; k * gens_[idx] <= rest; ++k) {
        current[idx] = k;
        walk(idx - 1, rest - k * gens_[idx]);
      }
      current[idx] = 0;
    };
    walk(gens_.size() - 1, h);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
  }

  friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
    return a.gens_ == b.gens_;
  }

private:
  std::vector<Int> gens_;
  std::vector<Int> apery_;
  std::vector<Int> pseudo_frobenius_;
  Int frobenius_ = -1;
};

}  // namespace ngtrace
