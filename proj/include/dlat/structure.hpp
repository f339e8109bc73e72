#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dlat/errors.hpp"
#include "dlat/invariants.hpp"
#include "dlat/lattice.hpp"

namespace dlat {

/** True iff every element other than bottom and top has a non-comparable
    partner. Lattices with at most two elements are thick vacuously. */
inline bool is_thick(const DistLattice& L) {
  for (int d = 0; d < L.size(); ++d) {
    if (d == L.bottom() || d == L.top()) continue;
    bool has_partner = false;
    for (int x = 0; x < L.size() && !has_partner; ++x)
      if (!L.comparable(d, x)) has_partner = true;
    if (!has_partner) return false;
  }
  return true;
}

/** Concatenation structure: the thick factors of L, bottom factor first,
    with the cut elements shared between consecutive factors. */
struct Decomposition {
  std::vector<DistLattice> factors;
  std::vector<int> cut_elements;             // original ids, ascending order
  std::vector<std::vector<int>> embeddings;  // factor element -> original id
};

/** Cuts L at every element strictly between bottom and top that is comparable
    to all of L. Cutting at all of them at once gives the unique maximal
    decomposition; each factor is thick. */
inline Decomposition decompose_thick(const DistLattice& L) {
  Decomposition d;
  const int n = L.size();
  if (n == 1) {
    d.factors.push_back(L);
    d.embeddings.push_back({0});
    return d;
  }
  for (int v = 0; v < n; ++v)
    if (v != L.bottom() && v != L.top() && lambda_set(L, v).count() == n)
      d.cut_elements.push_back(v);
  std::sort(d.cut_elements.begin(), d.cut_elements.end(),
            [&](int a, int b) { return L.order().below(a).count() <
                                       L.order().below(b).count(); });

  std::vector<int> points{L.bottom()};
  points.insert(points.end(), d.cut_elements.begin(), d.cut_elements.end());
  points.push_back(L.top());
  for (std::size_t k = 0; k + 1 < points.size(); ++k) {
    Bits interval = L.order().above(points[k]) & L.order().below(points[k + 1]);
    std::vector<int> keep;
    for (int v = interval.next(0); v >= 0; v = interval.next(v + 1))
      keep.push_back(v);
    d.factors.push_back(DistLattice::validate(induced(L.order(), keep)));
    d.embeddings.push_back(std::move(keep));
  }
  std::sort(d.cut_elements.begin(), d.cut_elements.end());
  return d;
}

/** Glues the top of `lo` to the bottom of `hi`; |result| = |lo| + |hi| - 1.
    The glued element keeps its name from `lo`; other names from `hi` gain
    trailing apostrophes if they collide. */
inline DistLattice concatenate(const DistLattice& lo, const DistLattice& hi) {
  const int n1 = lo.size();
  const int n2 = hi.size();
  std::vector<std::string> names(lo.order().names().begin(),
                                 lo.order().names().end());
  std::set<std::string> taken(names.begin(), names.end());

  // hi element -> combined index; hi's bottom aliases lo's top
  std::vector<int> map2(n2);
  for (int v = 0; v < n2; ++v) {
    if (v == hi.bottom()) {
      map2[v] = lo.top();
      continue;
    }
    std::string nm = hi.name(v);
    while (taken.contains(nm)) nm += '\'';
    taken.insert(nm);
    map2[v] = static_cast<int>(names.size());
    names.push_back(std::move(nm));
  }
  std::vector<int> inv2(names.size(), -1);  // combined index -> hi element
  for (int v = 0; v < n2; ++v)
    if (v != hi.bottom()) inv2[map2[v]] = v;

  auto leq = [&](int a, int b) {
    bool a_lo = a < n1, b_lo = b < n1;
    if (a_lo && b_lo) return lo.leq(a, b);
    if (!a_lo && !b_lo) return hi.leq(inv2[a], inv2[b]);
    if (a_lo) return true;   // everything in lo sits below hi \ {bottom}
    return false;
  };
  return DistLattice::validate(Poset::from_relation(std::move(names), leq));
}

/** The pruned sublattice: L minus every element >= alpha, for alpha a maximal
    element of J minus bottom. Names are preserved; the result's join
    irreducibles are exactly J minus alpha.
    Throws NotMaximalJoinIrreducible. */
inline DistLattice prune(const DistLattice& L, int alpha) {
  bool ok = L.size() >= 2 && L.ji_position(alpha) >= 0 && alpha != L.bottom();
  if (ok)
    for (int b : L.join_irreducibles())
      if (b != L.bottom() && b != alpha && L.leq(alpha, b)) ok = false;
  if (!ok) throw NotMaximalJoinIrreducible(L.name(alpha));

  std::vector<int> keep;
  for (int v = 0; v < L.size(); ++v)
    if (!L.leq(alpha, v)) keep.push_back(v);
  return DistLattice::validate(induced(L.order(), keep));
}

enum class FactorKind { two_chain, diamond, other };

inline const char* to_string(FactorKind k) {
  switch (k) {
    case FactorKind::two_chain: return "two_chain";
    case FactorKind::diamond: return "diamond";
    default: return "other";
  }
}

struct ShapeClassification {
  bool is_equality_case = false;  // n(L) = |L| - |J|, by the equality theorem
  std::vector<FactorKind> factor_classes;
};

/** Decomposes L and classifies each thick factor. L attains the lower bound
    n = |L| - |J| exactly when every factor is a two-element chain or a
    diamond (the singleton lattice, an empty concatenation, also qualifies). */
inline ShapeClassification classify_ci_shape(const DistLattice& L) {
  ShapeClassification c;
  Decomposition d = decompose_thick(L);
  c.is_equality_case = true;
  for (const DistLattice& f : d.factors) {
    FactorKind kind = FactorKind::other;
    if (f.size() == 2)
      kind = FactorKind::two_chain;
    else if (f.size() == 4 && noncomparable_count(f) == 1)
      kind = FactorKind::diamond;
    c.factor_classes.push_back(kind);
    if (kind == FactorKind::other) c.is_equality_case = false;
  }
  if (L.size() == 1) c.is_equality_case = true;
  return c;
}

}  // namespace dlat
