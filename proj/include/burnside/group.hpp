#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "burnside/errors.hpp"

namespace burnside {

// A finite group given by its full multiplication table, immutable after
// construction. Everything downstream (subgroup classes, marks, bisets)
// hangs off a shared_ptr to one of these, so derived data can be cached
// per group object.
struct FiniteGroup {
  int order = 0;
  std::vector<std::vector<int>> mul;  // mul[a][b] = a*b
  int identity = 0;
  std::vector<int> inv;
  std::vector<int> element_order;
  std::optional<std::string> name;
  std::vector<std::string> element_labels;  // empty, or one per element

  int times(int a, int b) const { return mul[a][b]; }
  int inverse(int a) const { return inv[a]; }
  // g x g^-1
  int conjugate(int g, int x) const { return mul[mul[g][x]][inv[g]]; }
  int power(int a, long long k) const;
  std::string label(int a) const;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Structural identity: same order and same multiplication table.
// Pointer equality is a fast special case.
bool same_group(const GroupPtr& a, const GroupPtr& b);

// Validates the table (identity, inverses, associativity) and fills in the
// derived fields. Associativity is checked on all triples for order <= 64
// and on 10^4 seeded-random triples above that. Throws NotAGroup with a
// witness, TooLarge past the configured order cap.
GroupPtr group_from_cayley(std::vector<std::vector<int>> mul,
                           std::optional<std::string> name = std::nullopt);

// Closure of the given permutations of {0..degree-1} under composition
// (p*q means apply q first). Element 0 is the identity; elements are indexed
// in BFS discovery order, so the result is deterministic. Labels use cycle
// notation. Throws TooLarge if the closure exceeds the order cap.
GroupPtr group_from_permutations(int degree, const std::vector<std::vector<int>>& generators);

// Named constructions: "trivial", "C<n>", "D<2n>" (order 2n), "S<n>", "A<n>",
// "V4", "Q8", "E(p,k)" (elementary abelian of order p^k), and products of
// those joined by "×" (ASCII "x" also accepted). Deterministic: the same
// name always yields byte-identical tables. Throws UnknownName / TooLarge.
GroupPtr catalog_group(const std::string& spec);

struct GroupHom {
  GroupPtr source;
  GroupPtr target;
  std::vector<int> images;

  int operator()(int g) const { return images[g]; }
  bool is_injective() const;
};

struct ProductGroup {
  GroupPtr group;  // (g,h) has index g*|H| + h
  GroupHom embed_left;    // G -> G×H
  GroupHom embed_right;   // H -> G×H
  GroupHom project_left;  // G×H -> G
  GroupHom project_right; // G×H -> H
};

ProductGroup direct_product(const GroupPtr& g, const GroupPtr& h);

inline int product_index(int g, int h, int order_h) { return g * order_h + h; }
inline int product_first(int u, int order_h) { return u / order_h; }
inline int product_second(int u, int order_h) { return u % order_h; }

// A subgroup is its parent plus a sorted element list.
struct Subgroup {
  GroupPtr parent;
  std::vector<int> elements;  // sorted ascending

  int order() const { return static_cast<int>(elements.size()); }
  bool contains(int x) const;
};

// <seeds>: the smallest subgroup containing the seeds. seeds may be empty
// (gives the trivial subgroup).
Subgroup subgroup_generated(const GroupPtr& g, const std::vector<int>& seeds);

Subgroup trivial_subgroup(const GroupPtr& g);
Subgroup full_subgroup(const GroupPtr& g);

// x S x^-1
Subgroup conjugate_subgroup(const Subgroup& s, int x);

// True if the sorted element list is closed and contains the identity.
bool is_subgroup(const GroupPtr& g, const std::vector<int>& sorted_elements);

// Validates multiplicativity on all pairs; throws InvalidHom with a witness.
GroupHom make_hom(GroupPtr source, GroupPtr target, std::vector<int> images);

GroupHom identity_hom(const GroupPtr& g);
// Everything to the identity of the target.
GroupHom trivial_hom(const GroupPtr& source, const GroupPtr& target);
// x -> second(first(x)).
GroupHom compose_homs(const GroupHom& first, const GroupHom& second);

// Sorted image of the whole source.
std::vector<int> hom_image(const GroupHom& f);
// Image of a subgroup of the source, as a subgroup of the target.
Subgroup image_subgroup(const GroupHom& f, const Subgroup& s);
Subgroup kernel_subgroup(const GroupHom& f);

// The subgroup as a group in its own right (elements reindexed 0..|S|-1 in
// sorted order) together with the inclusion into the parent.
struct SubgroupAsGroup {
  GroupPtr group;
  GroupHom embedding;
};
SubgroupAsGroup subgroup_as_group(const Subgroup& s);

// All homomorphisms source -> target, enumerated deterministically by
// backtracking over images of a minimal generating tuple.
std::vector<GroupHom> homomorphisms_between(const GroupPtr& source, const GroupPtr& target);

// A lexicographically least generating tuple of minimal length.
std::vector<int> minimal_generating_tuple(const GroupPtr& g);

// Conjugacy classes of elements, ordered by (element order, least member);
// members ascending within a class.
struct ElementClasses {
  GroupPtr group;
  std::vector<std::vector<int>> classes;
  std::vector<int> class_of;  // element -> class index
};
ElementClasses conjugacy_classes_of_elements(const GroupPtr& g);

}  // namespace burnside
