#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dlat/bits.hpp"
#include "dlat/errors.hpp"
#include "dlat/lattice.hpp"

namespace dlat {

/** n(L), e(L), the f-vector, every proved bound, and the conjectural bound
    for one lattice. All quantities are exact integers. */
struct InvariantRecord {
  int size = 0;
  int j_size = 0;
  std::int64_t n = 0;             // non-comparable unordered pairs
  int e = 0;                      // Hasse edges
  std::vector<int> f_vector;      // f(d) in element-index order
  std::int64_t f_sum = 0;
  std::int64_t lower_rank = 0;    // |L| - |J|
  std::int64_t lower_edge = 0;    // e - |L| + 1
  std::int64_t upper = 0;         // floor((|L| - |J|) |L| / 2)
  std::int64_t conjecture_rhs = 0;  // e - |J|, reported without assertion
  bool thick = false;
};

/// The set of elements comparable to d: equals [bottom, d] union [d, top].
inline Bits lambda_set(const DistLattice& L, int d) {
  return L.order().below(d) | L.order().above(d);
}

/// f(d) = |lambda_set(d)|.
inline int comparable_count(const DistLattice& L, int d) {
  return lambda_set(L, d).count();
}

/** Number of unordered non-comparable pairs, n(L).
    Computed by direct pair scan and by the identity (|L|^2 - sum f(d)) / 2;
    the two routes must agree or the implementation is broken. */
inline std::int64_t noncomparable_count(const DistLattice& L) {
  const int n = L.size();
  std::int64_t scan = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (!L.comparable(a, b)) ++scan;
  std::int64_t f_sum = 0;
  for (int d = 0; d < n; ++d) f_sum += comparable_count(L, d);
  std::int64_t by_identity = (static_cast<std::int64_t>(n) * n - f_sum) / 2;
  if (scan != by_identity)
    throw TheoremViolation("pair scan " + std::to_string(scan) +
                           " disagrees with identity count " +
                           std::to_string(by_identity));
  return scan;
}

/** The sublattice {theta, delta, join, meet} attached to a non-comparable
    pair; theta carries the smaller element index. */
struct Diamond {
  int theta = 0;
  int delta = 0;
  int join = 0;
  int meet = 0;
  friend auto operator<=>(const Diamond&, const Diamond&) = default;
};

/// One diamond per non-comparable unordered pair, sorted by (theta, delta).
inline std::vector<Diamond> enumerate_diamonds(const DistLattice& L) {
  std::vector<Diamond> out;
  const int n = L.size();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (!L.comparable(a, b)) out.push_back({a, b, L.join(a, b), L.meet(a, b)});
  return out;
}

/** Fills an InvariantRecord and asserts every proved bound on it.
    A failed assertion here means an implementation bug, never bad input,
    so it throws TheoremViolation. The conjectural bound e - |J| is reported
    without assertion. */
inline InvariantRecord bounds_report(const DistLattice& L) {
  InvariantRecord r;
  r.size = L.size();
  r.j_size = L.j_size();
  r.e = L.edge_count();
  r.f_vector.reserve(r.size);
  for (int d = 0; d < r.size; ++d) {
    int f = comparable_count(L, d);
    r.f_vector.push_back(f);
    r.f_sum += f;
  }
  r.n = noncomparable_count(L);
  r.lower_rank = r.size - r.j_size;
  r.lower_edge = static_cast<std::int64_t>(r.e) - r.size + 1;
  r.upper = static_cast<std::int64_t>(r.size - r.j_size) * r.size / 2;
  r.conjecture_rhs = static_cast<std::int64_t>(r.e) - r.j_size;

  // thick iff no element other than bottom/top is comparable to everything
  r.thick = true;
  for (int d = 0; d < r.size && r.thick; ++d)
    if (d != L.bottom() && d != L.top() && r.f_vector[d] == r.size)
      r.thick = false;

  auto demand = [](bool ok, const std::string& what) {
    if (!ok) throw TheoremViolation("proved bound failed: " + what);
  };
  demand(r.n >= r.lower_rank, "n >= |L| - |J|");
  demand(r.n >= r.lower_edge, "n >= e - |L| + 1");
  demand(2 * r.n <= static_cast<std::int64_t>(r.size - r.j_size) * r.size,
         "n <= (|L| - |J|) |L| / 2");
  for (int f : r.f_vector) demand(f >= r.j_size, "f(d) >= |J|");
  return r;
}

}  // namespace dlat
