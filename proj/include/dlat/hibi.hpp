#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dlat/errors.hpp"
#include "dlat/invariants.hpp"
#include "dlat/lattice.hpp"
#include "dlat/structure.hpp"

namespace dlat {

/** One generator of the binomial ideal I(L):
    x_theta x_delta - x_{theta v delta} x_{theta ^ delta}, for a
    non-comparable pair. theta carries the smaller element index. */
struct Binomial {
  int theta = 0;
  int delta = 0;
  int join = 0;
  int meet = 0;
  friend auto operator<=>(const Binomial&, const Binomial&) = default;
};

/// Exactly one binomial per diamond, sorted; list length is n(L).
inline std::vector<Binomial> ideal_generators(const DistLattice& L) {
  std::vector<Binomial> out;
  for (const Diamond& d : enumerate_diamonds(L))
    out.push_back({d.theta, d.delta, d.join, d.meet});
  return out;
}

/** True iff the plus-monomial supports {theta, delta} are pairwise distinct,
    which is what makes the generating set minimal in degree two. False would
    indicate an implementation bug. */
inline bool minimality_certificate(std::span<const Binomial> gens) {
  std::set<std::pair<int, int>> supports;
  for (const Binomial& g : gens)
    if (!supports.emplace(std::min(g.theta, g.delta),
                          std::max(g.theta, g.delta)).second)
      return false;
  return true;
}

/** Complete-intersection arithmetic for the variety cut out by I(L).
    Dimension follows the convention that bottom belongs to J; the classical
    count |J| - 1 is reported alongside by callers that render verdicts. */
struct CIVerdict {
  int ambient_dim = 0;    // |L|
  int variety_dim = 0;    // |J|
  int codim = 0;          // |L| - |J|
  std::int64_t generator_count = 0;  // n(L)
  bool is_complete_intersection = false;
};

/** Fills the verdict and cross-checks the numeric criterion n = |L| - |J|
    against the factor classification; the two must agree (that equivalence is
    a theorem), so disagreement throws TheoremViolation. */
inline CIVerdict complete_intersection_verdict(const DistLattice& L) {
  CIVerdict v;
  v.ambient_dim = L.size();
  v.variety_dim = L.j_size();
  v.codim = L.size() - L.j_size();
  v.generator_count = noncomparable_count(L);
  v.is_complete_intersection = v.generator_count == v.codim;
  if (v.generator_count < v.codim)
    throw TheoremViolation("generator count below codimension");
  if (classify_ci_shape(L).is_equality_case != v.is_complete_intersection)
    throw TheoremViolation(
        "complete-intersection criterion disagrees with factor classification");
  return v;
}

/** Renders the ideal, one generator per line in the grammar
    `x[NAME]*x[NAME] - x[NAME]*x[NAME]`, lines sorted lexicographically,
    preceded by a `# ideal I(L): ...` header. Deterministic bytes. */
inline std::string render_ideal(const DistLattice& L,
                                std::span<const Binomial> gens) {
  std::string out = "# ideal I(L): " + std::to_string(gens.size()) +
                    " generators, ambient " + std::to_string(L.size()) +
                    ", codim " + std::to_string(L.size() - L.j_size()) + "\n";
  std::vector<std::string> lines;
  lines.reserve(gens.size());
  for (const Binomial& g : gens)
    lines.push_back("x[" + L.name(g.theta) + "]*x[" + L.name(g.delta) +
                    "] - x[" + L.name(g.join) + "]*x[" + L.name(g.meet) + "]");
  std::sort(lines.begin(), lines.end());
  for (const auto& line : lines) out += line + "\n";
  return out;
}

}  // namespace dlat
