#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dlat/bits.hpp"
#include "dlat/errors.hpp"
#include "dlat/poset.hpp"

namespace dlat {

inline constexpr std::int64_t kDefaultDownsetCap = std::int64_t{1} << 20;

/** Validated finite distributive lattice.

    Carries the underlying order, join/meet tables, the join irreducibles J,
    and per-element down-set encodings I_a = {b in J : b <= a} as bit vectors
    over positions in J. By convention the bottom element belongs to J (it has
    zero lower covers); with that convention every maximal chain has exactly
    |J| elements and the minimal-generation arithmetic of the bounds comes out
    consistent. Immutable after validation. */
class DistLattice {
public:
  /// Checks lub/glb existence for every pair and the distributive law on all
  /// triples, then fills the derived structure.
  /// Throws NotALattice or NotDistributive with a witness.
  static DistLattice validate(Poset order) {
    DistLattice L;
    L.order_ = std::move(order);
    const int n = L.order_.size();
    if (n == 0) throw Error("lattice must be nonempty");
    L.join_.assign(static_cast<std::size_t>(n) * n, 0);
    L.meet_.assign(static_cast<std::size_t>(n) * n, 0);

    for (int a = 0; a < n; ++a)
      for (int b = a; b < n; ++b) {
        int j = lub(L.order_, a, b);
        int m = glb(L.order_, a, b);
        if (j < 0 || m < 0) throw NotALattice(L.order_.name(a), L.order_.name(b));
        L.join_[a * n + b] = L.join_[b * n + a] = j;
        L.meet_[a * n + b] = L.meet_[b * n + a] = m;
      }

    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (L.meet(a, L.join(b, c)) != L.join(L.meet(a, b), L.meet(a, c)))
            throw NotDistributive(L.order_.name(a), L.order_.name(b),
                                  L.order_.name(c));

    for (int v = 0; v < n; ++v) {
      if (L.order_.below(v).count() == 1) L.bottom_ = v;
      if (L.order_.above(v).count() == 1) L.top_ = v;
    }

    std::vector<int> lower_covers(n, 0);
    for (const auto& cp : L.order_.covers()) ++lower_covers[cp.upper];
    L.jpos_.assign(n, -1);
    for (int v = 0; v < n; ++v)
      if (lower_covers[v] <= 1) {
        L.jpos_[v] = static_cast<int>(L.jis_.size());
        L.jis_.push_back(v);
      }

    const int jn = static_cast<int>(L.jis_.size());
    L.downsets_.assign(n, Bits(jn));
    for (int v = 0; v < n; ++v)
      for (int k = 0; k < jn; ++k)
        if (L.order_.leq(L.jis_[k], v)) L.downsets_[v].set(k);
    return L;
  }

  const Poset& order() const { return order_; }
  int size() const { return order_.size(); }
  int bottom() const { return bottom_; }
  int top() const { return top_; }
  const std::string& name(int a) const { return order_.name(a); }

  int join(int a, int b) const { return join_[a * size() + b]; }
  int meet(int a, int b) const { return meet_[a * size() + b]; }
  bool leq(int a, int b) const { return order_.leq(a, b); }
  bool comparable(int a, int b) const { return order_.comparable(a, b); }

  /// J, sorted by element index; includes the bottom element.
  std::span<const int> join_irreducibles() const { return jis_; }
  int j_size() const { return static_cast<int>(jis_.size()); }
  /// Position of a in J, or -1.
  int ji_position(int a) const { return jpos_[a]; }

  /// I_a as a bit vector over positions in J.
  const Bits& down_set(int a) const { return downsets_[a]; }

  /// Number of edges in the Hasse diagram, e(L).
  int edge_count() const { return static_cast<int>(order_.covers().size()); }

  /** The unique join irreducible labeling a cover: I_upper = I_lower + {beta}.
      When `upper` is itself join irreducible, beta = upper.
      Throws NotACover. */
  int cover_label(int upper, int lower) const {
    Bits betw = order_.above(lower) & order_.below(upper);
    if (upper == lower || !leq(lower, upper) || betw.count() != 2)
      throw NotACover(name(upper), name(lower));
    for (int k = downsets_[upper].next(0); k >= 0; k = downsets_[upper].next(k + 1))
      if (!downsets_[lower].test(k)) return jis_[k];
    throw TheoremViolation("cover without a join-irreducible label: " +
                           name(upper) + " > " + name(lower));
  }

private:
  // Unique minimal element of above(a) & above(b), or -1.
  static int lub(const Poset& p, int a, int b) {
    Bits cand = p.above(a) & p.above(b);
    for (int u = cand.next(0); u >= 0; u = cand.next(u + 1))
      if (cand.subset_of(p.above(u))) return u;
    return -1;
  }
  static int glb(const Poset& p, int a, int b) {
    Bits cand = p.below(a) & p.below(b);
    for (int u = cand.next(0); u >= 0; u = cand.next(u + 1))
      if (cand.subset_of(p.below(u))) return u;
    return -1;
  }

  Poset order_;
  int bottom_ = 0;
  int top_ = 0;
  std::vector<int> join_;
  std::vector<int> meet_;
  std::vector<int> jis_;
  std::vector<int> jpos_;
  std::vector<Bits> downsets_;
};

inline DistLattice validate_distributive_lattice(Poset p) {
  return DistLattice::validate(std::move(p));
}

namespace detail {

/// Unique display name for a down-set: member names sorted and joined with
/// '.', the empty set rendered as "e"; collisions get trailing underscores.
inline std::string downset_name(const Poset& p, const Bits& mask,
                                std::set<std::string>& taken) {
  std::vector<std::string> parts;
  for (int v = mask.next(0); v >= 0; v = mask.next(v + 1))
    parts.push_back(p.name(v));
  std::sort(parts.begin(), parts.end());
  std::string s;
  for (const auto& part : parts) {
    if (!s.empty()) s += '.';
    s += part;
  }
  if (s.empty()) s = "e";
  while (taken.contains(s)) s += '_';
  taken.insert(s);
  return s;
}

}  // namespace detail

/** Birkhoff construction: the lattice of all down-sets of p ordered by
    inclusion. Throws SizeLimitExceeded when the down-set count passes `cap`.
    Join and meet are union and intersection; the nonzero join irreducibles of
    the result biject with the elements of p. */
inline DistLattice ideal_lattice(const Poset& p,
                                 std::int64_t cap = kDefaultDownsetCap) {
  const int n = p.size();
  std::set<Bits> seen;
  std::vector<Bits> queue{Bits(n)};
  seen.insert(queue.front());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Bits d = queue[head];
    for (int x = 0; x < n; ++x) {
      if (d.test(x)) continue;
      Bits strict_below = p.below(x);
      strict_below.reset(x);
      if (!strict_below.subset_of(d)) continue;
      Bits next = d;
      next.set(x);
      if (seen.insert(next).second) {
        if (static_cast<std::int64_t>(seen.size()) > cap)
          throw SizeLimitExceeded("down-set count exceeds cap of " +
                                  std::to_string(cap));
        queue.push_back(next);
      }
    }
  }

  std::vector<Bits> elems(seen.begin(), seen.end());  // ascending: a linear extension
  std::set<std::string> taken;
  std::vector<std::string> names;
  names.reserve(elems.size());
  for (const auto& mask : elems) names.push_back(detail::downset_name(p, mask, taken));

  Poset order = Poset::from_relation(std::move(names), [&](int a, int b) {
    return elems[a].subset_of(elems[b]);
  });
  return DistLattice::validate(std::move(order));
}

/** The induced order on J minus the bottom element: the Birkhoff dual.
    ideal_lattice(birkhoff_poset(L)) is isomorphic to L. */
inline Poset birkhoff_poset(const DistLattice& L) {
  std::vector<int> keep;
  for (int v : L.join_irreducibles())
    if (v != L.bottom()) keep.push_back(v);
  return induced(L.order(), keep);
}

/// Lattice isomorphism via canonical forms of the Birkhoff duals.
inline bool canonical_isomorphic(const DistLattice& a, const DistLattice& b) {
  return canonical_code(birkhoff_poset(a)) == canonical_code(birkhoff_poset(b));
}

}  // namespace dlat
