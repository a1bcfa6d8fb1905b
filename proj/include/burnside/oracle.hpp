#pragma once

#include "burnside/burnside_ring.hpp"
#include "burnside/group.hpp"

namespace burnside::oracle {

// A concrete finite G-set: an explicit action table. Deliberately naive:
// everything here counts points, so it is an independent check on the
// mark-arithmetic paths rather than a fast path.
struct ConcreteGSet {
  GroupPtr group;
  int size = 0;
  std::vector<std::vector<int>> action;  // action[g][x]

  int act(int g, int x) const { return action[g][x]; }
};

// Identity row and (sampled above ~2e8 work) composition law; throws
// InvalidAction with a witness.
void validate_action(const ConcreteGSet& x);

// The left coset set G/S with g acting by translation. Points are cosets,
// ordered by their least element.
ConcreteGSet coset_set(const Subgroup& s);

// Orbit decomposition as a Burnside ring element: one [G/Stab(x)] per orbit.
BurnsideElement orbit_decompose(const ConcreteGSet& x);

// Number of points fixed by every element of u.
long long fixed_points(const ConcreteGSet& x, const Subgroup& u);

// Cartesian product with the diagonal action. Throws TooLarge past the
// point cap.
ConcreteGSet product(const ConcreteGSet& x, const ConcreteGSet& y);

// The coset realization of a biset basis class: u lives in a product group
// G×H and the result is that coset set, a (G×H)-set.
ConcreteGSet realize_biset(const Subgroup& u);

// Collapse the right H-action of an (G×H)-set: points become {e}×H orbits,
// with the induced G-action. Points ordered by least original point.
ConcreteGSet h_quotient(const ConcreteGSet& x, const GroupPtr& g, const GroupPtr& h);

// The twisted product (S ×_H T): pairs modulo (s·h, t) ~ (s, h·t), carrying
// the leftover (G×I)-action. x is a (G×H)-set, y an (H×I)-set, and the
// result lives over the supplied product group G×I.
ConcreteGSet twisted_product(const ConcreteGSet& x, const ConcreteGSet& y, const GroupPtr& g,
                             const GroupPtr& h, const GroupPtr& i, const GroupPtr& product_gi);

}  // namespace burnside::oracle
