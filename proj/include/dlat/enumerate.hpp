#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "dlat/errors.hpp"
#include "dlat/hibi.hpp"
#include "dlat/invariants.hpp"
#include "dlat/lattice.hpp"
#include "dlat/poset.hpp"
#include "dlat/structure.hpp"

namespace dlat {

inline constexpr int kDefaultPosetCap = 7;

/** All unlabeled posets on n elements, each exactly once, as canonical codes
    sorted ascending. Generation walks naturally labeled posets (element k's
    strict down-set is a down-closed subset of the poset on 0..k-1) and dedupes
    by canonical form. Throws SizeLimitExceeded above `cap`. */
inline std::vector<PosetCode> enumerate_posets(int n, int cap = kDefaultPosetCap) {
  if (n < 0 || n > cap)
    throw SizeLimitExceeded("poset size " + std::to_string(n) +
                            " exceeds cap of " + std::to_string(cap));
  // the count of unlabeled posets explodes long before this bound
  if (n > 16)
    throw SizeLimitExceeded("poset enumeration is not feasible beyond 16 elements");
  std::set<PosetCode> codes;
  std::vector<std::uint32_t> strict_below(n, 0);

  std::function<void(int)> extend = [&](int k) {
    if (k == n) {
      std::vector<std::string> names;
      for (int i = 0; i < n; ++i) names.push_back("p" + std::to_string(i));
      Poset p = Poset::from_relation(std::move(names), [&](int a, int b) {
        return a == b || ((strict_below[b] >> a) & 1u);
      });
      codes.insert(canonical_code(p));
      return;
    }
    for (std::uint32_t d = 0; d < (1u << k); ++d) {
      bool down_closed = true;
      for (int i = 0; i < k && down_closed; ++i)
        if (((d >> i) & 1u) && (strict_below[i] & ~d)) down_closed = false;
      if (!down_closed) continue;
      strict_below[k] = d;
      extend(k + 1);
    }
  };
  extend(0);
  return {codes.begin(), codes.end()};
}

/** Pass/fail for every proved theorem on one lattice, plus the conjectural
    bound as a tri-state. Failures are recorded, never thrown. */
struct TheoremReport {
  enum class Conjecture { holds, violated, not_applicable };

  PosetCode lattice_id;  // canonical code of the Birkhoff dual
  InvariantRecord record;
  bool ci = false;

  bool identity_eq = false;
  bool lower_rank = false;
  bool lower_edge = false;
  bool upper = false;
  bool f_geq_j = false;
  bool lambda_sublattice = false;
  bool join_prime = false;
  bool cover_unique = false;
  bool chain_length = false;
  bool prune_theorem = false;
  bool equality_iff = false;
  bool ci_iff = false;
  bool decompose_roundtrip = false;
  bool additivity_spot = false;
  bool minimality = false;
  Conjecture conjecture_holds = Conjecture::not_applicable;

  std::vector<std::pair<const char*, bool>> checks() const {
    return {{"identity_eq", identity_eq},
            {"lower_rank", lower_rank},
            {"lower_edge", lower_edge},
            {"upper", upper},
            {"f_geq_j", f_geq_j},
            {"lambda_sublattice", lambda_sublattice},
            {"join_prime", join_prime},
            {"cover_unique", cover_unique},
            {"chain_length", chain_length},
            {"prune_theorem", prune_theorem},
            {"equality_iff", equality_iff},
            {"ci_iff", ci_iff},
            {"decompose_roundtrip", decompose_roundtrip},
            {"additivity_spot", additivity_spot},
            {"minimality", minimality}};
  }

  bool all_proved_pass() const {
    for (auto [name, ok] : checks())
      if (!ok) return false;
    return true;
  }
};

inline const char* to_string(TheoremReport::Conjecture c) {
  switch (c) {
    case TheoremReport::Conjecture::holds: return "holds";
    case TheoremReport::Conjecture::violated: return "violated";
    default: return "not_applicable";
  }
}

namespace detail {

inline const DistLattice& reference_diamond() {
  static const DistLattice d = validate_distributive_lattice(build_partial_order(
      {}, {{"T", "x"}, {"T", "y"}, {"x", "B"}, {"y", "B"}}));
  return d;
}

template <class F>
bool guarded(F&& f) {
  try {
    return f();
  } catch (const Error&) {
    return false;
  }
}

}  // namespace detail

/** Runs every theorem check on one lattice. The raw quantities are recomputed
    here with plain scans so that a broken helper cannot mask a failure. */
inline TheoremReport verify_theorem_suite(const DistLattice& L) {
  TheoremReport r;
  r.lattice_id = canonical_code(birkhoff_poset(L));
  const int n = L.size();
  const int j = L.j_size();
  const int e = L.edge_count();

  std::int64_t scan = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (!L.comparable(a, b)) ++scan;

  std::vector<int> f(n, 0);
  std::int64_t f_sum = 0;
  for (int d = 0; d < n; ++d) {
    for (int x = 0; x < n; ++x)
      if (L.comparable(d, x)) ++f[d];
    f_sum += f[d];
  }

  r.record.size = n;
  r.record.j_size = j;
  r.record.n = scan;
  r.record.e = e;
  r.record.f_vector = f;
  r.record.f_sum = f_sum;
  r.record.lower_rank = n - j;
  r.record.lower_edge = static_cast<std::int64_t>(e) - n + 1;
  r.record.upper = static_cast<std::int64_t>(n - j) * n / 2;
  r.record.conjecture_rhs = static_cast<std::int64_t>(e) - j;
  r.record.thick = is_thick(L);

  r.identity_eq = 2 * scan == static_cast<std::int64_t>(n) * n - f_sum;
  r.lower_rank = scan >= n - j;
  r.lower_edge = scan >= static_cast<std::int64_t>(e) - n + 1;
  r.upper = 2 * scan <= static_cast<std::int64_t>(n - j) * n;
  r.f_geq_j = true;
  for (int d = 0; d < n; ++d) r.f_geq_j &= f[d] >= j;

  r.lambda_sublattice = true;
  for (int d = 0; d < n && r.lambda_sublattice; ++d) {
    Bits lam(n);
    for (int x = 0; x < n; ++x)
      if (L.comparable(d, x)) lam.set(x);
    if (!(lam == (L.order().below(d) | L.order().above(d)))) {
      r.lambda_sublattice = false;
      break;
    }
    for (int x = lam.next(0); x >= 0 && r.lambda_sublattice; x = lam.next(x + 1))
      for (int y = lam.next(x); y >= 0; y = lam.next(y + 1))
        if (!lam.test(L.join(x, y)) || !lam.test(L.meet(x, y))) {
          r.lambda_sublattice = false;
          break;
        }
  }

  r.join_prime = true;
  for (int b : L.join_irreducibles())
    for (int t = 0; t < n && r.join_prime; ++t)
      for (int d = 0; d < n; ++d)
        if (L.leq(b, L.join(t, d)) && !L.leq(b, t) && !L.leq(b, d)) {
          r.join_prime = false;
          break;
        }

  r.cover_unique = detail::guarded([&] {
    for (const auto& cp : L.order().covers()) {
      int extra = 0, beta = -1;
      const Bits& up = L.down_set(cp.upper);
      const Bits& lo = L.down_set(cp.lower);
      for (int k = up.next(0); k >= 0; k = up.next(k + 1))
        if (!lo.test(k)) {
          ++extra;
          beta = L.join_irreducibles()[k];
        }
      if (extra != 1 || L.cover_label(cp.upper, cp.lower) != beta) return false;
      if (L.ji_position(cp.upper) >= 0 && beta != cp.upper) return false;
    }
    return true;
  });

  r.chain_length = detail::guarded([&] {
    std::vector<std::vector<int>> upper_covers(n);
    for (const auto& cp : L.order().covers())
      upper_covers[cp.lower].push_back(cp.upper);
    std::int64_t chains = 0;
    bool ok = true;
    std::function<void(int, int)> walk = [&](int v, int len) {
      if (v == L.top()) {
        ++chains;
        ok &= len == j;
        return;
      }
      for (int u : upper_covers[v]) walk(u, len + 1);
    };
    walk(L.bottom(), 1);
    return ok && chains > 0;
  });

  r.prune_theorem = detail::guarded([&] {
    for (int alpha : L.join_irreducibles()) {
      if (alpha == L.bottom()) continue;
      bool maximal = true;
      for (int b : L.join_irreducibles())
        if (b != L.bottom() && b != alpha && L.leq(alpha, b)) maximal = false;
      if (!maximal) continue;

      // closure of the surviving set under the original join and meet
      std::vector<int> keep;
      for (int v = 0; v < n; ++v)
        if (!L.leq(alpha, v)) keep.push_back(v);
      Bits in_keep(n);
      for (int v : keep) in_keep.set(v);
      for (int x : keep)
        for (int y : keep)
          if (!in_keep.test(L.join(x, y)) || !in_keep.test(L.meet(x, y)))
            return false;

      DistLattice pruned = prune(L, alpha);
      std::set<std::string> got, want;
      for (int v : pruned.join_irreducibles()) got.insert(pruned.name(v));
      for (int v : L.join_irreducibles())
        if (v != alpha) want.insert(L.name(v));
      if (got != want) return false;
    }
    return true;
  });

  ShapeClassification shape;
  bool shape_ok = detail::guarded([&] {
    shape = classify_ci_shape(L);
    return true;
  });
  r.equality_iff = shape_ok && (scan == n - j) == shape.is_equality_case;

  r.ci_iff = detail::guarded([&] {
    CIVerdict v = complete_intersection_verdict(L);
    r.ci = v.is_complete_intersection;
    return shape_ok && v.is_complete_intersection == shape.is_equality_case;
  });

  r.decompose_roundtrip = detail::guarded([&] {
    Decomposition d = decompose_thick(L);
    if (d.factors.empty()) return false;
    if (n >= 2 && is_thick(L) != (d.factors.size() == 1)) return false;
    for (const DistLattice& factor : d.factors) {
      if (n >= 2 && factor.size() < 2) return false;
      if (factor.size() >= 3 && !is_thick(factor)) return false;
    }
    DistLattice glued = d.factors.front();
    for (std::size_t k = 1; k < d.factors.size(); ++k)
      glued = concatenate(glued, d.factors[k]);
    return canonical_isomorphic(glued, L);
  });

  r.additivity_spot = detail::guarded([&] {
    const DistLattice& D = detail::reference_diamond();
    DistLattice C = concatenate(L, D);
    std::int64_t nc = noncomparable_count(C);
    return nc == scan + 1 && C.edge_count() == e + 4 && C.size() == n + 3 &&
           C.j_size() == j + 2;
  });

  r.minimality = detail::guarded([&] {
    std::vector<Binomial> gens = ideal_generators(L);
    return minimality_certificate(gens) &&
           static_cast<std::int64_t>(gens.size()) == scan;
  });

  if (!r.record.thick)
    r.conjecture_holds = TheoremReport::Conjecture::not_applicable;
  else if (scan >= static_cast<std::int64_t>(e) - j)
    r.conjecture_holds = TheoremReport::Conjecture::holds;
  else
    r.conjecture_holds = TheoremReport::Conjecture::violated;
  return r;
}

/** Aggregate of one full scan: every distributive lattice whose Birkhoff dual
    has at most max_poset_size elements, verified. Deterministic given
    max_poset_size, independent of the worker count. */
struct ScanReport {
  struct Failure {
    PosetCode id;
    std::string check;
  };
  struct Counterexample {
    PosetCode id;
    std::int64_t n = 0;
    int e = 0;
    int j_size = 0;
  };
  struct Row {
    PosetCode code;
    int size = 0;
    int j_size = 0;
    std::int64_t n = 0;
    int e = 0;
    bool thick = false;
    bool ci = false;
    TheoremReport::Conjecture conjecture = TheoremReport::Conjecture::not_applicable;
  };

  int max_poset_size = 0;
  std::int64_t lattices_tested = 0;
  std::vector<Failure> failures;
  std::vector<Counterexample> conjecture_counterexamples;
  std::vector<Row> rows;
};

/** Builds the ideal lattice of every enumerated poset of size <= max and runs
    the theorem suite on each. Work is sharded by poset index; results are
    merged in enumeration order, so output bytes do not depend on `workers`. */
inline ScanReport conjecture_scan(int max_poset_size, int workers = 1,
                                  int poset_cap = kDefaultPosetCap,
                                  std::int64_t downset_cap = kDefaultDownsetCap) {
  if (max_poset_size < 0)
    throw SizeLimitExceeded("max poset size must be non-negative");
  ScanReport report;
  report.max_poset_size = max_poset_size;

  std::vector<PosetCode> all;
  for (int sz = 0; sz <= max_poset_size; ++sz) {
    std::vector<PosetCode> codes = enumerate_posets(sz, poset_cap);
    all.insert(all.end(), codes.begin(), codes.end());
  }
  report.lattices_tested = static_cast<std::int64_t>(all.size());

  std::vector<TheoremReport> results(all.size());
  auto run_one = [&](std::size_t i) {
    try {
      DistLattice L = ideal_lattice(poset_from_code(all[i]), downset_cap);
      results[i] = verify_theorem_suite(L);
    } catch (const Error&) {
      // construction must not fail on a Birkhoff lattice; surface it as a
      // report with every check failed rather than tearing down the worker
      results[i] = TheoremReport{};
      results[i].lattice_id = all[i];
    }
  };

  if (workers <= 1) {
    for (std::size_t i = 0; i < all.size(); ++i) run_one(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < all.size();
             i = next.fetch_add(1))
          run_one(i);
      });
    for (auto& t : pool) t.join();
  }

  for (std::size_t i = 0; i < results.size(); ++i) {
    const TheoremReport& r = results[i];
    for (auto [name, ok] : r.checks())
      if (!ok) report.failures.push_back({r.lattice_id, name});
    if (r.conjecture_holds == TheoremReport::Conjecture::violated)
      report.conjecture_counterexamples.push_back(
          {r.lattice_id, r.record.n, r.record.e, r.record.j_size});
    report.rows.push_back({r.lattice_id, r.record.size, r.record.j_size,
                           r.record.n, r.record.e, r.record.thick, r.ci,
                           r.conjecture_holds});
  }
  return report;
}

inline std::string render_scan_report(const ScanReport& s) {
  std::string out;
  out += "conjecture_counterexamples = " +
         std::to_string(s.conjecture_counterexamples.size()) + "\n";
  for (std::size_t i = 0; i < s.conjecture_counterexamples.size(); ++i) {
    const auto& c = s.conjecture_counterexamples[i];
    out += "counterexample[" + std::to_string(i) + "] = " + c.id.text() +
           " n=" + std::to_string(c.n) + " e=" + std::to_string(c.e) +
           " j=" + std::to_string(c.j_size) + "\n";
  }
  for (std::size_t i = 0; i < s.failures.size(); ++i)
    out += "failure[" + std::to_string(i) + "] = " + s.failures[i].id.text() +
           " " + s.failures[i].check + "\n";
  out += "failures = " + std::to_string(s.failures.size()) + "\n";
  out += "lattices_tested = " + std::to_string(s.lattices_tested) + "\n";
  out += "max_poset_size = " + std::to_string(s.max_poset_size) + "\n";
  return out;
}

/// One record per lattice: code, |L|, |J|, n, e, thick, ci, conjecture.
inline std::string render_scan_tsv(const ScanReport& s) {
  std::string out = "# code\tsize\tj_size\tn\te\tthick\tci\tconjecture\n";
  for (const auto& row : s.rows) {
    out += row.code.text() + "\t" + std::to_string(row.size) + "\t" +
           std::to_string(row.j_size) + "\t" + std::to_string(row.n) + "\t" +
           std::to_string(row.e) + "\t" + (row.thick ? "true" : "false") +
           "\t" + (row.ci ? "true" : "false") + "\t" +
           to_string(row.conjecture) + "\n";
  }
  return out;
}

}  // namespace dlat
