#pragma once

#include "burnside/burnside_ring.hpp"
#include "burnside/lattice.hpp"

namespace burnside {

// J_n(G): the ideal of virtual G-sets whose marks vanish at every subgroup
// generated by at most n elements, as a sublattice of the coefficient space.
// J_0 is the augmentation ideal; the chain J_0 ⊇ J_1 ⊇ ... reaches zero by
// n = floor(log2 |G|).
IntegerLattice jn_ideal(const GroupPtr& g, int n);

// Marks-vanishing test, computed directly from the mark vector (not via the
// lattice; the two agree and tests check that).
bool jn_membership(const BurnsideElement& x, int n);

// Least n with J_n(G) = 0.
int max_nontrivial_level(const GroupPtr& g);

// The augmentation ideal by its explicit basis [G/H] - [G:H]·[G/G];
// an independent route to J_0 used for cross-checking.
IntegerLattice augmentation_kernel(const GroupPtr& g);

// Values of the permutation character of x: for each conjugacy class of
// elements, the mark at the cyclic subgroup its representative generates.
struct CharacterVector {
  GroupPtr group;
  IntVec values;  // indexed by element classes, identity class first
};
CharacterVector permutation_character(const BurnsideElement& x);

// Kernel of the linearization map (coefficients -> character values).
// Equals jn_ideal(g, 1); the two are computed from different matrices and
// compared in tests.
IntegerLattice linearization_kernel(const GroupPtr& g);

// Character on commuting n-tuples of p-power-order elements, up to
// simultaneous conjugacy: the value at a tuple is the mark at the subgroup
// the tuple generates. Vanishes on J_n.
struct GeneralizedCharacter {
  GroupPtr group;
  int prime = 2;
  int level = 1;
  std::vector<std::vector<int>> tuples;  // canonical (lex-least) representatives, sorted
  IntVec values;
};
GeneralizedCharacter generalized_character(const BurnsideElement& x, int prime, int level);

}  // namespace burnside
