#pragma once

#include "burnside/classification.hpp"
#include "burnside/ints.hpp"
#include "burnside/lattice.hpp"

namespace burnside {

// Row i = the transitive G-set with stabilizer class i, column j = the mark
// at subgroup class j: |{g : g^-1 K_j g ⊆ H_i}| / |H_i|. Lower triangular in
// the canonical class order, with Weyl group orders on the diagonal.
struct TableOfMarks {
  GroupPtr group;
  IntMat marks;
};

// Derived data computed once per group object and shared behind a read-only
// handle: subgroup classification, table of marks, element classes.
class GroupData {
 public:
  explicit GroupData(GroupPtr g);

  const GroupPtr& group() const { return group_; }
  const SubgroupClassification& classes() const { return classes_; }
  const TableOfMarks& marks() const { return marks_; }
  const ElementClasses& element_classes() const { return element_classes_; }
  int num_classes() const { return classes_.num_classes(); }

 private:
  GroupPtr group_;
  SubgroupClassification classes_;
  TableOfMarks marks_;
  ElementClasses element_classes_;
};

// Process-wide cache, keyed by group object identity. Thread safe.
const GroupData& group_data(const GroupPtr& g);

// Raw (uncached) kernel; exposed for the benchmark and the parallel tests.
IntMat compute_marks_matrix(const GroupPtr& g, const SubgroupClassification& cls);

TableOfMarks table_of_marks(const GroupPtr& g);

// An element of the Burnside ring A(G): integer coefficients over the
// canonical basis of transitive G-sets [G/H], one per subgroup class.
struct BurnsideElement {
  GroupPtr group;
  IntVec coeffs;

  bool operator==(const BurnsideElement& other) const;
};

BurnsideElement zero_element(const GroupPtr& g);
// [G/H] for subgroup class i.
BurnsideElement basis_element(const GroupPtr& g, int class_index);
// The ring unit [G/G].
BurnsideElement one_element(const GroupPtr& g);
BurnsideElement element_from_coeffs(const GroupPtr& g, IntVec coeffs);

BurnsideElement operator+(const BurnsideElement& a, const BurnsideElement& b);
BurnsideElement operator-(const BurnsideElement& a, const BurnsideElement& b);
BurnsideElement operator-(const BurnsideElement& a);
BurnsideElement operator*(const Int& c, const BurnsideElement& a);

// Mark vector: the image of an element under the mark homomorphism, indexed
// by subgroup classes.
struct MarkVector {
  GroupPtr group;
  IntVec values;
};

MarkVector marks_of(const BurnsideElement& x);

// Inverts the mark homomorphism by exact triangular back-substitution.
// Throws NotInImage naming the first (canonical-order) class whose
// coefficient comes out fractional.
BurnsideElement from_marks(const MarkVector& v);

// Product via marks: multiply pointwise, then solve back. Exact.
BurnsideElement multiply(const BurnsideElement& a, const BurnsideElement& b);
BurnsideElement operator*(const BurnsideElement& a, const BurnsideElement& b);

// Number of points of a virtual set: the mark at the trivial class.
Int augmentation(const BurnsideElement& x);

// Pullback along f: G -> F of an element over F: transport marks through
// images of subgroups, then solve back. A ring homomorphism.
BurnsideElement restrict_along(const GroupHom& f, const BurnsideElement& y);

// Pushforward along an injective theta: G -> F, sending [G/H] to [F/theta(H)].
// Additive, not multiplicative. Throws NotInjective.
BurnsideElement induce_along(const GroupHom& theta, const BurnsideElement& x);

}  // namespace burnside
