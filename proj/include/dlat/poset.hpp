#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dlat/bits.hpp"
#include "dlat/errors.hpp"

namespace dlat {

struct CoverPair {
  int upper = 0;
  int lower = 0;
  friend auto operator<=>(const CoverPair&, const CoverPair&) = default;
};

/** Finite partial order on named elements with dense indices.
    Stores the full reflexive-transitive comparability relation as per-element
    bit rows plus the cover pairs (transitive reduction). Immutable once built. */
class Poset {
public:
  Poset() = default;

  /** Builds from names and an arbitrary partial order given as a predicate
      `leq(a, b)`; the relation is trusted to be a partial order. Covers are
      recomputed as the transitive reduction. */
  static Poset from_relation(std::vector<std::string> names,
                             const std::function<bool(int, int)>& leq) {
    Poset p;
    p.names_ = std::move(names);
    const int n = static_cast<int>(p.names_.size());
    p.above_.assign(n, Bits(n));
    p.below_.assign(n, Bits(n));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (leq(a, b)) {
          p.above_[a].set(b);
          p.below_[b].set(a);
        }
    p.reduce_covers();
    return p;
  }

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int a) const { return names_[a]; }
  const std::vector<std::string>& names() const { return names_; }

  int index_of(std::string_view name) const {
    for (int i = 0; i < size(); ++i)
      if (names_[i] == name) return i;
    return -1;
  }

  bool leq(int a, int b) const { return above_[a].test(b); }
  bool comparable(int a, int b) const { return leq(a, b) || leq(b, a); }

  /// {b : b >= a}, including a.
  const Bits& above(int a) const { return above_[a]; }
  /// {b : b <= a}, including a.
  const Bits& below(int a) const { return below_[a]; }

  std::span<const CoverPair> covers() const { return covers_; }

  /// Number of strict lower covers of a.
  int lower_cover_count(int a) const {
    int c = 0;
    for (const auto& cp : covers_) c += (cp.upper == a);
    return c;
  }

private:
  void reduce_covers() {
    const int n = size();
    covers_.clear();
    for (int u = 0; u < n; ++u)
      for (int l = 0; l < n; ++l) {
        if (u == l || !leq(l, u)) continue;
        // cover iff nothing strictly between
        Bits betw = above_[l] & below_[u];
        if (betw.count() == 2) covers_.push_back({u, l});
      }
    std::sort(covers_.begin(), covers_.end());
  }

  std::vector<std::string> names_;
  std::vector<Bits> above_;
  std::vector<Bits> below_;
  std::vector<CoverPair> covers_;
};

/** Builds a poset from declared names plus cover pairs given by name.
    Names appearing only in cover pairs are declared implicitly, in order of
    first mention. Pairs already implied transitively are accepted and reduced;
    when `redundant` is given, they are reported there.
    Throws DuplicateName, CycleDetected, or Error on malformed names. */
inline Poset build_partial_order(
    const std::vector<std::string>& declared,
    const std::vector<std::pair<std::string, std::string>>& cover_pairs,
    std::vector<std::pair<std::string, std::string>>* redundant = nullptr) {
  std::vector<std::string> names;
  std::map<std::string, int, std::less<>> index;
  auto check_name = [](const std::string& s) {
    if (s.empty()) throw Error("empty element name");
    for (char c : s)
      if (c == '#' || std::isspace(static_cast<unsigned char>(c)))
        throw Error("invalid element name: " + s);
  };
  for (const auto& s : declared) {
    check_name(s);
    if (index.contains(s)) throw DuplicateName(s);
    index.emplace(s, static_cast<int>(names.size()));
    names.push_back(s);
  }
  auto intern = [&](const std::string& s) {
    check_name(s);
    auto it = index.find(s);
    if (it != index.end()) return it->second;
    int id = static_cast<int>(names.size());
    index.emplace(s, id);
    names.push_back(s);
    return id;
  };
  std::vector<std::pair<int, int>> edges;  // (upper, lower)
  edges.reserve(cover_pairs.size());
  for (const auto& [u, l] : cover_pairs) {
    int ui = intern(u);  // upper interned first: mention order follows the pair
    int li = intern(l);
    edges.emplace_back(ui, li);
  }

  const int n = static_cast<int>(names.size());
  std::vector<std::vector<int>> down(n);
  for (auto [u, l] : edges) {
    if (u == l) throw CycleDetected({names[u]});
    down[u].push_back(l);
  }

  // DFS over declared edges; computes strict reachability and rejects cycles.
  std::vector<Bits> below(n, Bits(n));
  std::vector<int> state(n, 0);  // 0 unvisited, 1 on stack, 2 done
  std::function<void(int)> visit = [&](int v) {
    state[v] = 1;
    below[v].set(v);
    for (int l : down[v]) {
      if (state[l] == 1) {
        std::vector<std::string> cyc;
        for (int i = 0; i < n; ++i)
          if (state[i] == 1) cyc.push_back(names[i]);
        throw CycleDetected(cyc);
      }
      if (state[l] == 0) visit(l);
      below[v] |= below[l];
    }
    state[v] = 2;
  };
  for (int v = 0; v < n; ++v)
    if (state[v] == 0) visit(v);

  Poset p = Poset::from_relation(
      std::move(names), [&](int a, int b) { return below[b].test(a); });

  if (redundant) {
    redundant->clear();
    std::vector<CoverPair> reduced(p.covers().begin(), p.covers().end());
    for (auto [u, l] : edges)
      if (!std::binary_search(reduced.begin(), reduced.end(), CoverPair{u, l}))
        redundant->emplace_back(p.name(u), p.name(l));
  }
  return p;
}

/** Induced order on a subset of elements, names preserved.
    `keep` must be sorted ascending. */
inline Poset induced(const Poset& p, std::span<const int> keep) {
  std::vector<std::string> names;
  names.reserve(keep.size());
  for (int v : keep) names.push_back(p.name(v));
  return Poset::from_relation(
      std::move(names), [&](int a, int b) { return p.leq(keep[a], keep[b]); });
}

/** Canonical encoding of an unlabeled poset: the lexicographically minimal
    strict-relation bit string over all relabelings compatible with an
    invariant-signature ordering. Two posets have equal codes iff isomorphic. */
struct PosetCode {
  int n = 0;
  std::vector<std::uint8_t> bits;  // strict leq, pairs (i, j) with i < j, row-major

  friend auto operator<=>(const PosetCode&, const PosetCode&) = default;

  /// "<n>:<hex>", bits packed 4 per digit, high bit first.
  std::string text() const {
    std::string s = std::to_string(n) + ":";
    for (std::size_t i = 0; i < bits.size(); i += 4) {
      int nib = 0;
      for (std::size_t k = 0; k < 4 && i + k < bits.size(); ++k)
        nib |= bits[i + k] << (3 - k);
      s += "0123456789abcdef"[nib];
    }
    return s;
  }
};

namespace detail {

/// Isomorphism-invariant element colors; primary key |strict below| so any
/// color-sorted order is a linear extension.
inline std::vector<int> refine_colors(const Poset& p) {
  const int n = p.size();
  std::vector<std::vector<std::int64_t>> sig(n);
  for (int v = 0; v < n; ++v)
    sig[v] = {p.below(v).count(), p.above(v).count()};
  auto assign = [&] {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return sig[a] < sig[b]; });
    std::vector<int> color(n, 0);
    int c = 0;
    for (int k = 0; k < n; ++k) {
      if (k > 0 && sig[order[k]] != sig[order[k - 1]]) ++c;
      color[order[k]] = c;
    }
    return color;
  };
  std::vector<int> color = assign();
  for (int round = 0; round < n; ++round) {
    int classes = color.empty() ? 0 : *std::max_element(color.begin(), color.end()) + 1;
    for (int v = 0; v < n; ++v) {
      std::vector<std::int64_t> s = {color[v]};
      std::vector<std::int64_t> lo, hi;
      for (int u = 0; u < n; ++u) {
        if (u == v) continue;
        if (p.leq(u, v)) lo.push_back(color[u]);
        if (p.leq(v, u)) hi.push_back(color[u]);
      }
      std::sort(lo.begin(), lo.end());
      std::sort(hi.begin(), hi.end());
      s.push_back(static_cast<std::int64_t>(lo.size()));
      s.insert(s.end(), lo.begin(), lo.end());
      s.insert(s.end(), hi.begin(), hi.end());
      sig[v] = std::move(s);
    }
    std::vector<int> next = assign();
    int next_classes = next.empty() ? 0 : *std::max_element(next.begin(), next.end()) + 1;
    if (next_classes == classes) break;
    color = std::move(next);
  }
  return color;
}

}  // namespace detail

inline PosetCode canonical_code(const Poset& p) {
  const int n = p.size();
  PosetCode best;
  best.n = n;
  if (n == 0) return best;

  std::vector<int> color = detail::refine_colors(p);
  int classes = *std::max_element(color.begin(), color.end()) + 1;
  std::vector<std::vector<int>> members(classes);
  for (int v = 0; v < n; ++v) members[color[v]].push_back(v);

  std::vector<std::uint8_t> cand(static_cast<std::size_t>(n) * (n - 1) / 2);
  std::vector<int> perm(n);
  bool have_best = false;

  // Odometer over within-class permutations; classes already sorted by color.
  std::vector<std::vector<int>> arrangement = members;
  auto emit = [&] {
    int pos = 0;
    for (const auto& cls : arrangement)
      for (int v : cls) perm[pos++] = v;
    std::size_t k = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        cand[k++] = perm[i] != perm[j] && p.leq(perm[i], perm[j]) ? 1 : 0;
    if (!have_best || cand < best.bits) {
      best.bits = cand;
      have_best = true;
    }
  };
  std::function<void(int)> walk = [&](int c) {
    if (c == classes) {
      emit();
      return;
    }
    std::sort(arrangement[c].begin(), arrangement[c].end());
    do {
      walk(c + 1);
    } while (std::next_permutation(arrangement[c].begin(), arrangement[c].end()));
  };
  walk(0);
  return best;
}

/// Rebuilds the canonically labeled poset a code denotes; names are v0, v1, ...
inline Poset poset_from_code(const PosetCode& code) {
  std::vector<std::string> names;
  names.reserve(code.n);
  for (int i = 0; i < code.n; ++i) names.push_back("v" + std::to_string(i));
  auto bit = [&](int i, int j) {  // strict, i < j
    std::size_t k = 0;
    k = static_cast<std::size_t>(i) * (2 * code.n - i - 1) / 2 + (j - i - 1);
    return code.bits[k] != 0;
  };
  return Poset::from_relation(std::move(names), [&](int a, int b) {
    if (a == b) return true;
    return a < b && bit(a, b);
  });
}

}  // namespace dlat
