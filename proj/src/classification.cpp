#include "burnside/classification.hpp"

#include <algorithm>

#include "burnside/config.hpp"
#include "burnside/parallel.hpp"

namespace burnside {

namespace {

// Closure of base ∪ {extra} inside g, as a sorted element list.
std::vector<int> extend_by_element(const FiniteGroup& g, const std::vector<int>& base, int extra) {
  std::vector<char> in(g.order, 0);
  std::vector<int> members;
  members.reserve(base.size() * 2);
  for (int x : base) {
    in[x] = 1;
    members.push_back(x);
  }
  std::vector<int> work;
  if (!in[extra]) {
    in[extra] = 1;
    members.push_back(extra);
    work.push_back(extra);
  }
  while (!work.empty()) {
    int x = work.back();
    work.pop_back();
    for (size_t i = 0; i < members.size(); ++i) {
      int y = members[i];
      for (int z : {g.mul[x][y], g.mul[y][x]}) {
        if (!in[z]) {
          in[z] = 1;
          members.push_back(z);
          work.push_back(z);
        }
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

}  // namespace

int SubgroupClassification::class_of(const std::vector<int>& sorted_elements) const {
  auto it = index.find(sorted_elements);
  if (it == index.end()) throw Error("element list is not a subgroup of this group");
  return it->second;
}

int SubgroupClassification::total_subgroups() const {
  int n = 0;
  for (const auto& c : classes) n += static_cast<int>(c.conjugates.size());
  return n;
}

SubgroupClassification classify_subgroups(const GroupPtr& g) {
  if (g->order > config::order_cap()) throw TooLarge("group order exceeds the order cap");
  const int n = g->order;

  // Layered enumeration; the discovery layer is the minimal generator count.
  std::map<std::vector<int>, int> layer_of;
  std::vector<int> trivial = {g->identity};
  layer_of[trivial] = 0;
  std::vector<std::vector<int>> frontier = {trivial};

  for (int depth = 0; !frontier.empty(); ++depth) {
    // Extensions of each frontier subgroup by each outside element, computed
    // into per-subgroup slots so the parallel and serial paths merge in the
    // same order.
    std::vector<std::vector<std::vector<int>>> extended(frontier.size());
    parallel::parallel_for(static_cast<long long>(frontier.size()), [&](long long i) {
      const auto& base = frontier[i];
      auto& out = extended[i];
      for (int x = 0; x < n; ++x) {
        if (std::binary_search(base.begin(), base.end(), x)) continue;
        out.push_back(extend_by_element(*g, base, x));
      }
    });
    std::vector<std::vector<int>> next;
    for (auto& batch : extended)
      for (auto& sub : batch)
        if (layer_of.emplace(sub, depth + 1).second) next.push_back(sub);
    frontier = std::move(next);
  }

  // Group into conjugacy classes; iterate in lexicographic key order so the
  // grouping is deterministic.
  SubgroupClassification out;
  out.group = g;
  std::map<std::vector<int>, char> assigned;
  for (const auto& [elements, layer] : layer_of) {
    if (assigned.count(elements)) continue;
    std::map<std::vector<int>, char> orbit;
    for (int x = 0; x < n; ++x) {
      std::vector<int> conj;
      conj.reserve(elements.size());
      for (int e : elements) conj.push_back(g->conjugate(x, e));
      std::sort(conj.begin(), conj.end());
      orbit.emplace(std::move(conj), 1);
    }
    SubgroupClass cls;
    for (const auto& [conj, tag] : orbit) {
      (void)tag;
      assigned[conj] = 1;
      cls.conjugates.push_back(Subgroup{g, conj});
    }
    cls.representative = cls.conjugates.front();  // map order = lex order
    cls.min_generators = layer_of.at(cls.representative.elements);
    // Orbit-stabilizer: |orbit| = [G : N(H)], so |N(H)| = |G| / |orbit|.
    const int h = cls.representative.order();
    const int orbit_size = static_cast<int>(cls.conjugates.size());
    cls.weyl_order = n / (orbit_size * h);
    out.classes.push_back(std::move(cls));
  }

  std::sort(out.classes.begin(), out.classes.end(), [](const SubgroupClass& a, const SubgroupClass& b) {
    if (a.representative.order() != b.representative.order())
      return a.representative.order() < b.representative.order();
    return a.representative.elements < b.representative.elements;
  });
  for (int c = 0; c < out.num_classes(); ++c)
    for (const auto& s : out.classes[c].conjugates) out.index.emplace(s.elements, c);
  return out;
}

int min_generator_count(const GroupPtr& g, const Subgroup& u) {
  if (!is_subgroup(g, u.elements)) throw Error("element list is not a subgroup");
  if (u.order() == 1) return 0;

  std::map<std::vector<int>, char> seen;
  std::vector<int> trivial = {g->identity};
  seen[trivial] = 1;
  std::vector<std::vector<int>> frontier = {trivial};
  for (int depth = 1; !frontier.empty(); ++depth) {
    std::vector<std::vector<int>> next;
    for (const auto& base : frontier) {
      for (int x : u.elements) {
        if (std::binary_search(base.begin(), base.end(), x)) continue;
        auto sub = extend_by_element(*g, base, x);
        if (sub == u.elements) return depth;
        if (sub.size() < u.elements.size() && seen.emplace(sub, 1).second) next.push_back(sub);
      }
    }
    frontier = std::move(next);
  }
  throw Error("generator search failed");  // unreachable
}

}  // namespace burnside
