#pragma once

// Canonical trace of a determinantal instance through the left kernel of
// the presentation matrix N of the canonical module.
//
// A row f = (f_1, ..., f_{n-1}) with f.N = 0 satisfies
// x_{[i+1]}^{m_{[i+1]}} f_j = x_i^{l_i} f_{j+1}, so for a row of monomials
// deg f_{j+1} = deg f_j + c. Graded pieces of k[H] are at most one
// dimensional, so monomial rows suffice: t^u lies in the trace iff some
// progression u + (i - j) c, i = 1..n-1, stays inside H.

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ngtrace/determinantal.hpp"
#include "ngtrace/relative_ideal.hpp"

namespace ngtrace {

struct LambdaRow {
  /// Entry degrees u_1, ..., u_{n-1}; u_{k+1} = u_k + c.
  std::vector<Int> entries;
  /// 1-based slot of the degree the row was requested for.
  std::size_t j = 1;

  Int u() const { return entries.front(); }

  std::string to_string() const {
    std::ostringstream out;
    out << "f = (";
    for (std::size_t k = 0; k < entries.size(); ++k)
      out << (k ? ", " : "") << "t^" << entries[k];
    out << "), j=" << j << ", f·N = 0 verified";
    return out.str();
  }
  friend bool operator==(const LambdaRow&, const LambdaRow&) = default;
};

/// Checks the relations u_j + m_{[i+1]} a_{[i+1]} = u_{j+1} + l_i a_i for
/// every column and that every entry lies in H.
inline bool satisfies_relations(const DeterminantalInstance& inst, const LambdaRow& row) {
  if (row.entries.size() + 1 != inst.n()) return false;
  for (Int e : row.entries)
    if (!inst.semigroup().contains(e)) return false;
  const auto& f = inst.form();
  for (std::size_t i = 0; i < inst.n(); ++i) {
    std::size_t next = (i + 1) % inst.n();
    for (std::size_t j = 0; j + 1 < row.entries.size(); ++j)
      if (row.entries[j] + f.m[next] * f.order[next] != row.entries[j + 1] + f.ell[i] * f.order[i])
        return false;
  }
  return true;
}

/// A monomial row of the kernel containing t^u, with u at slot j.
inline std::optional<LambdaRow> lambda_membership(const DeterminantalInstance& inst, Int u) {
  const auto& h = inst.semigroup();
  std::size_t len = inst.n() - 1;
  Int c = inst.c();
  for (std::size_t j = 1; j <= len; ++j) {
    LambdaRow row;
    row.j = j;
    bool ok = true;
    for (std::size_t i = 1; i <= len && ok; ++i) {
      Int e = u + (static_cast<Int>(i) - static_cast<Int>(j)) * c;
      ok = h.contains(e);
      row.entries.push_back(e);
    }
    if (ok) {
      if (!satisfies_relations(inst, row)) throw std::logic_error("kernel row violates relations");
      return row;
    }
  }
  return std::nullopt;
}

/// The upper end of the scan window for trace_canonical_lambda.
inline Int lambda_window(const DeterminantalInstance& inst) {
  const auto& h = inst.semigroup();
  Int c = inst.c() < 0 ? -inst.c() : inst.c();
  return 2 * h.frobenius() + 2 * h.generators().back() + static_cast<Int>(inst.n() - 1) * c;
}

inline RelativeIdeal trace_canonical_lambda(const DeterminantalInstance& inst) {
  return detail::scan_ideal(inst.semigroup_ptr(), 0, lambda_window(inst),
                            [&](Int u) { return lambda_membership(inst, u).has_value(); });
}

/// The ideal generated by the row entries is a translate of K.
inline bool row_generates_canonical(const DeterminantalInstance& inst, const LambdaRow& row) {
  auto generated = RelativeIdeal::from_generators(inst.semigroup_ptr(), row.entries);
  return generated.is_translate_of(canonical_ideal(inst.semigroup_ptr()));
}

/// The explicit kernel rows that make every generator a trace element when
/// the classification theorem applies. Case B uses
/// (x_1, ..., x_{n-1}) and (x_2 x_{n-1}^{l_{n-1}-1}, ..., x_{n-1}^{l_{n-1}}, x_n)
/// in the arrangement that exhibits it; case A uses the row found by
/// lambda_membership for each generator.
inline std::vector<LambdaRow> theorem_if_witnesses(const DeterminantalInstance& inst) {
  auto cls = classify_nearly_gorenstein(inst);
  if (!cls.is_ng) throw NotApplicable("neither case of the classification theorem holds");
  std::vector<LambdaRow> rows;
  auto add_row = [&](LambdaRow row) {
    if (!satisfies_relations(inst, row)) throw std::logic_error("theorem row is not in the kernel");
    for (const auto& r : rows)
      if (r.entries == row.entries) return;
    rows.push_back(std::move(row));
  };
  if (cls.which == TheoremCase::B) {
    MatrixForm f = inst.form().apply(cls.symmetry);
    std::size_t n = f.n();
    std::vector<Int> first(f.order.begin(), f.order.end() - 1);
    std::vector<Int> second;
    Int tail = (f.ell[n - 2] - 1) * f.order[n - 2];
    for (std::size_t k = 1; k + 2 < n; ++k) second.push_back(f.order[k] + tail);
    second.push_back(f.ell[n - 2] * f.order[n - 2]);
    second.push_back(f.order[n - 1]);
    for (auto entries : {first, second}) {
      // a reversed arrangement reads the rows backwards
      if (cls.symmetry.reversed) std::reverse(entries.begin(), entries.end());
      add_row({entries, 1});
    }
  } else {
    for (Int a : inst.order()) {
      auto row = lambda_membership(inst, a);
      if (!row) throw std::logic_error("case A generator without a kernel row");
      add_row(*row);
    }
  }
  for (Int a : inst.order()) {
    bool covered = false;
    for (const auto& r : rows)
      covered = covered || std::find(r.entries.begin(), r.entries.end(), a) != r.entries.end();
    if (!covered) throw std::logic_error("theorem rows miss a generator");
  }
  return rows;
}

}  // namespace ngtrace
