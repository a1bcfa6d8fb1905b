#pragma once

#include <string>
#include <vector>

#include "burnside/burnside_ring.hpp"
#include "burnside/group.hpp"
#include "burnside/lattice.hpp"

namespace burnside {

// The bivariant Burnside module A(G,H): spanned by the classes [G×H/U]
// where U meets {e}×H trivially. Such a U is the graph of a homomorphism
// phi: K -> H with K = p1(U) ≤ G, which is how basis labels are printed.
// Elements act on the left of A(H,I) by the twisted product over H.
class BisetSpace {
 public:
  BisetSpace(GroupPtr left_group, GroupPtr right_group);

  GroupPtr left;
  GroupPtr right;
  ProductGroup prod;
  std::vector<int> basis_classes;          // positions into the product's subgroup classes
  std::vector<std::string> basis_labels;   // "(K=..., phi=...)" per basis class
  IntMat quotient;                         // row per basis class: coefficients of [G/p1(U)] over A(left)

  int num_basis() const { return static_cast<int>(basis_classes.size()); }
  const Subgroup& representative(int pos) const;
  // Basis position of a product-group subgroup class, -1 when that class is
  // not right-free.
  int pos_of_class(int product_class) const { return pos_of_class_[product_class]; }

 private:
  std::vector<int> pos_of_class_;
};

// Process-wide cache keyed by the (left, right) group objects. Thread safe.
const BisetSpace& biset_space(const GroupPtr& left, const GroupPtr& right);

struct BisetElement {
  GroupPtr left;
  GroupPtr right;
  IntVec coeffs;  // over the basis of biset_space(left, right)

  bool operator==(const BisetElement& other) const;
};

BisetElement zero_biset(const GroupPtr& left, const GroupPtr& right);
BisetElement biset_basis(const GroupPtr& left, const GroupPtr& right, int pos);
// The class of a subgroup of left×right given by sorted product indices
// (g*|right| + h). Throws Error if the subgroup is not right-free.
BisetElement biset_from_subgroup(const GroupPtr& left, const GroupPtr& right,
                                 const std::vector<int>& sorted_elements);

BisetElement operator+(const BisetElement& a, const BisetElement& b);
BisetElement operator-(const BisetElement& a, const BisetElement& b);
BisetElement operator-(const BisetElement& a);
BisetElement operator*(const Int& c, const BisetElement& a);

// Reinterpret over structurally equal group objects (same tables, possibly
// different pointers). Throws GroupMismatch otherwise.
BisetElement rebase_biset(const BisetElement& x, const GroupPtr& new_left,
                          const GroupPtr& new_right);

// The identity arrow of G: the diagonal class in A(G,G).
BisetElement identity_biset(const GroupPtr& g);

// Graph of phi: S -> T as a class in A(S,T) (the restriction arrow).
BisetElement hom_biset(const GroupHom& phi);

// {(theta(h), h)} for injective theta: H -> G, a class in A(G,H) (the
// induction arrow). Throws NotInjective.
BisetElement transfer_biset(const GroupHom& theta);

// Collapse the right action: [G×H/U] -> [G/p1(U)], extended linearly.
BurnsideElement quotient_to_burnside(const BisetElement& x);

// Composition A(G,H) × A(H,I) -> A(G,I) by counting orbits of the concrete
// twisted product. Results are memoized per basis pair. The middle groups
// must agree at least structurally.
BisetElement compose(const BisetElement& a, const BisetElement& b);

// Same composition by the double coset formula: for each p2(U)\H/p1(V)
// representative x, the class of {(g,i) : exists h with (g,h) in U and
// (x^-1 h x, i) in V}. Independent of `compose`; the two are compared in
// tests.
BisetElement compose_double_coset(const BisetElement& a, const BisetElement& b);

// The bivariant filtration: classes in A(G,H) whose image under the right
// quotient lands in jn_ideal(G, n). Computed two ways (preimage of the ideal
// and kernel of the composite matrix) which are checked against each other
// on every call.
//
// Caution: this is a left ideal of the category but not a right one.  Left
// composition with any generating arrow stays inside, as does right
// composition with a homomorphism arrow (which leaves the quotient unchanged);
// right composition with a transfer can escape for n >= 1.  The smallest
// counterexample is pinned in the biset tests.
IntegerLattice jn_bivariant(const GroupPtr& left, const GroupPtr& right, int n);

}  // namespace burnside
