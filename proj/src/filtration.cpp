#include "burnside/filtration.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "burnside/errors.hpp"
#include "burnside/parallel.hpp"

namespace burnside {

namespace {

// Column indices of the marks matrix whose subgroup class needs at most n
// generators.
std::vector<int> columns_up_to_level(const SubgroupClassification& cls, int n) {
  std::vector<int> sel;
  for (int j = 0; j < cls.num_classes(); ++j) {
    if (cls.classes[j].min_generators <= n) sel.push_back(j);
  }
  return sel;
}

}  // namespace

IntegerLattice jn_ideal(const GroupPtr& g, int n) {
  if (n < 0) throw Error("filtration level must be nonnegative");
  const GroupData& data = group_data(g);
  const IntMat& m = data.marks().marks;
  const int k = data.num_classes();
  std::vector<int> sel = columns_up_to_level(data.classes(), n);
  IntMat sub(k, IntVec(sel.size()));
  for (int i = 0; i < k; ++i) {
    for (std::size_t t = 0; t < sel.size(); ++t) sub[i][t] = m[i][sel[t]];
  }
  return left_kernel(sub, k, static_cast<int>(sel.size()));
}

bool jn_membership(const BurnsideElement& x, int n) {
  if (n < 0) throw Error("filtration level must be nonnegative");
  const GroupData& data = group_data(x.group);
  MarkVector mv = marks_of(x);
  for (int j : columns_up_to_level(data.classes(), n)) {
    if (mv.values[j] != 0) return false;
  }
  return true;
}

int max_nontrivial_level(const GroupPtr& g) {
  // The chain closes no later than the largest minimal generator count plus
  // one, because from there the kernel is of the full (nonsingular) matrix.
  for (int n = 0;; ++n) {
    if (jn_ideal(g, n).is_zero()) return n;
  }
}

IntegerLattice augmentation_kernel(const GroupPtr& g) {
  const GroupData& data = group_data(g);
  const IntMat& m = data.marks().marks;
  const int k = data.num_classes();
  IntMat rows;
  for (int i = 0; i + 1 < k; ++i) {
    IntVec row(k, 0);
    row[i] = 1;
    row[k - 1] = -m[i][0];  // [G/H] has G:H points, [G/G] has one
    rows.push_back(std::move(row));
  }
  return lattice_from_rows(k, std::move(rows));
}

namespace {

// Subgroup class index of <rep> for each element class representative.
std::vector<int> cyclic_class_columns(const GroupData& data) {
  const ElementClasses& ec = data.element_classes();
  std::vector<int> cols(ec.classes.size());
  for (std::size_t c = 0; c < ec.classes.size(); ++c) {
    Subgroup cyc = subgroup_generated(data.group(), {ec.classes[c][0]});
    cols[c] = data.classes().class_of(cyc);
  }
  return cols;
}

}  // namespace

CharacterVector permutation_character(const BurnsideElement& x) {
  const GroupData& data = group_data(x.group);
  std::vector<int> cols = cyclic_class_columns(data);
  MarkVector mv = marks_of(x);
  CharacterVector chi{x.group, IntVec(cols.size())};
  for (std::size_t c = 0; c < cols.size(); ++c) chi.values[c] = mv.values[cols[c]];
  return chi;
}

IntegerLattice linearization_kernel(const GroupPtr& g) {
  const GroupData& data = group_data(g);
  const IntMat& m = data.marks().marks;
  const int k = data.num_classes();
  std::vector<int> cols = cyclic_class_columns(data);
  IntMat l(k, IntVec(cols.size()));
  for (int i = 0; i < k; ++i) {
    for (std::size_t c = 0; c < cols.size(); ++c) l[i][c] = m[i][cols[c]];
  }
  return left_kernel(l, k, static_cast<int>(cols.size()));
}

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

bool has_p_power_order(const FiniteGroup& g, int x, int p) {
  int o = g.element_order[x];
  while (o % p == 0) o /= p;
  return o == 1;
}

}  // namespace

GeneralizedCharacter generalized_character(const BurnsideElement& x, int prime, int level) {
  if (!is_prime(prime)) throw Error("character prime must be a prime number");
  if (level < 0) throw Error("character level must be nonnegative");
  const GroupPtr& g = x.group;
  const GroupData& data = group_data(g);

  std::vector<int> p_elements;
  for (int e = 0; e < g->order; ++e) {
    if (has_p_power_order(*g, e, prime)) p_elements.push_back(e);
  }

  // Commuting tuples of p-power-order elements, canonicalized to the
  // lexicographically least member of the simultaneous conjugation orbit.
  std::set<std::vector<int>> reps;
  std::vector<int> tuple;
  std::function<void()> extend = [&]() {
    if (static_cast<int>(tuple.size()) == level) {
      std::vector<int> best = tuple;
      for (int c = 0; c < g->order; ++c) {
        std::vector<int> image(tuple.size());
        for (std::size_t i = 0; i < tuple.size(); ++i) image[i] = g->conjugate(c, tuple[i]);
        if (image < best) best = std::move(image);
      }
      reps.insert(std::move(best));
      return;
    }
    for (int e : p_elements) {
      bool commutes = true;
      for (int prev : tuple) {
        if (g->mul[prev][e] != g->mul[e][prev]) {
          commutes = false;
          break;
        }
      }
      if (!commutes) continue;
      tuple.push_back(e);
      extend();
      tuple.pop_back();
    }
  };
  extend();

  GeneralizedCharacter chi;
  chi.group = g;
  chi.prime = prime;
  chi.level = level;
  chi.tuples.assign(reps.begin(), reps.end());
  chi.values.resize(chi.tuples.size());

  MarkVector mv = marks_of(x);
  std::vector<int> cols(chi.tuples.size());
  parallel::parallel_for(static_cast<long long>(chi.tuples.size()), [&](long long t) {
    Subgroup gen = subgroup_generated(g, chi.tuples[t]);
    cols[t] = data.classes().class_of(gen);
  });
  for (std::size_t t = 0; t < chi.tuples.size(); ++t) chi.values[t] = mv.values[cols[t]];
  return chi;
}

}  // namespace burnside
