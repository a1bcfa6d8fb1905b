#pragma once

#include <map>
#include <vector>

#include "burnside/group.hpp"

namespace burnside {

struct SubgroupClass {
  Subgroup representative;           // lexicographically least conjugate
  std::vector<Subgroup> conjugates;  // all conjugates, element lists sorted, classes sorted lex
  int min_generators = 0;            // least k with representative = <k elements>
  int weyl_order = 1;                // |N_G(H)| / |H|
};

// All subgroups of a group, grouped into conjugacy classes and listed in the
// canonical order: subgroup order ascending, ties broken by the
// lexicographically least element set among the conjugates. This order is
// what makes the table of marks lower triangular, and every coefficient
// vector in the library is indexed by it.
class SubgroupClassification {
 public:
  GroupPtr group;
  std::vector<SubgroupClass> classes;

  // Class of a subgroup given by its sorted element list. Throws Error if the
  // list is not one of the enumerated subgroups.
  int class_of(const std::vector<int>& sorted_elements) const;
  int class_of(const Subgroup& s) const { return class_of(s.elements); }

  int total_subgroups() const;
  int num_classes() const { return static_cast<int>(classes.size()); }

  std::map<std::vector<int>, int> index;  // every subgroup -> class position
};

// Enumerates every subgroup by layered closure: the trivial subgroup, then
// repeatedly extend each known subgroup by one element until nothing new
// appears. The layer at which a subgroup first appears is exactly its minimal
// number of generators. Throws TooLarge past the order cap.
SubgroupClassification classify_subgroups(const GroupPtr& g);

// Minimal number of generators of u, by the same layered search restricted to
// subgroups of u (independent code path from classify_subgroups; they are
// cross-checked in tests). 0 for the trivial subgroup.
int min_generator_count(const GroupPtr& g, const Subgroup& u);

}  // namespace burnside
