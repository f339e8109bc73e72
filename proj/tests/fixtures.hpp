#pragma once

// Shared fixture lattices. Element mention order here matches the committed
// .lat files so CLI goldens and in-memory tests agree.

#include <string>
#include <utility>
#include <vector>

#include "dlat/lattice.hpp"
#include "dlat/poset.hpp"

namespace fixtures {

using CoverList = std::vector<std::pair<std::string, std::string>>;

inline dlat::DistLattice lattice_from(const CoverList& covers) {
  return dlat::validate_distributive_lattice(dlat::build_partial_order({}, covers));
}

// {bot < a, b < top}, the smallest non-chain distributive lattice
inline dlat::DistLattice diamond() {
  return lattice_from({{"top", "a"}, {"top", "b"}, {"a", "bot"}, {"b", "bot"}});
}

// Boolean cube on three atoms; subsets named by their members, empty set "e"
inline dlat::DistLattice b3() {
  return lattice_from({{"1", "e"},
                       {"2", "e"},
                       {"3", "e"},
                       {"12", "1"},
                       {"12", "2"},
                       {"13", "1"},
                       {"13", "3"},
                       {"23", "2"},
                       {"23", "3"},
                       {"123", "12"},
                       {"123", "13"},
                       {"123", "23"}});
}

// chain c0 < c1 < ... < c{k-1}
inline dlat::DistLattice chain(int k) {
  CoverList covers;
  for (int i = 1; i < k; ++i)
    covers.emplace_back("c" + std::to_string(i), "c" + std::to_string(i - 1));
  if (k == 1) return dlat::validate_distributive_lattice(
      dlat::build_partial_order({"c0"}, {}));
  return lattice_from(covers);
}

// a < b < c, with letter names rather than generated ones
inline dlat::DistLattice chain3() {
  return lattice_from({{"b", "a"}, {"c", "b"}});
}

// ideal lattice of the V poset (p < r, q < r), built directly from covers
inline dlat::DistLattice v5() {
  return lattice_from(
      {{"p", "e"}, {"q", "e"}, {"pq", "p"}, {"pq", "q"}, {"top", "pq"}});
}

// two diamonds glued at m, built directly from covers (not via concatenate)
inline dlat::DistLattice double_diamond() {
  return lattice_from({{"m", "a"},
                       {"m", "b"},
                       {"a", "bot"},
                       {"b", "bot"},
                       {"top", "c"},
                       {"top", "d"},
                       {"c", "m"},
                       {"d", "m"}});
}

// three incomparable atoms: a lattice, but not distributive
inline dlat::Poset m3_poset() {
  return dlat::build_partial_order({}, {{"a", "bot"},
                                        {"b", "bot"},
                                        {"c", "bot"},
                                        {"top", "a"},
                                        {"top", "b"},
                                        {"top", "c"}});
}

// pentagon: bot < a < c < top, bot < b < top
inline dlat::Poset n5_poset() {
  return dlat::build_partial_order(
      {}, {{"a", "bot"}, {"b", "bot"}, {"c", "a"}, {"top", "c"}, {"top", "b"}});
}

// the V poset itself, for Birkhoff-construction tests
inline dlat::Poset vee_poset() {
  return dlat::build_partial_order({}, {{"r", "p"}, {"r", "q"}});
}

inline dlat::Poset antichain_poset(int k) {
  std::vector<std::string> names;
  for (int i = 0; i < k; ++i) names.push_back("a" + std::to_string(i));
  return dlat::build_partial_order(names, {});
}

inline dlat::Poset chain_poset(int k) {
  std::vector<std::string> names;
  CoverList covers;
  for (int i = 0; i < k; ++i) names.push_back("a" + std::to_string(i));
  for (int i = 1; i < k; ++i)
    covers.emplace_back("a" + std::to_string(i), "a" + std::to_string(i - 1));
  return dlat::build_partial_order(names, covers);
}

}  // namespace fixtures
