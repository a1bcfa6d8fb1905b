#include "burnside/oracle.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "burnside/config.hpp"

namespace burnside::oracle {

void validate_action(const ConcreteGSet& x) {
  const auto& g = *x.group;
  if (static_cast<int>(x.action.size()) != g.order) throw InvalidAction("action table has wrong height");
  for (const auto& row : x.action) {
    if (static_cast<int>(row.size()) != x.size) throw InvalidAction("action table has a ragged row");
    for (int p : row)
      if (p < 0 || p >= x.size) throw InvalidAction("action table entry out of range");
  }
  for (int p = 0; p < x.size; ++p)
    if (x.action[g.identity][p] != p)
      throw InvalidAction("identity moves point " + std::to_string(p));

  auto check = [&](int a, int b, int p) {
    if (x.action[g.mul[a][b]][p] != x.action[a][x.action[b][p]])
      throw InvalidAction("composition fails at (g=" + std::to_string(a) + ", h=" + std::to_string(b) +
                          ", x=" + std::to_string(p) + ")");
  };
  long long work = static_cast<long long>(g.order) * g.order * x.size;
  if (work <= 200000000LL) {
    for (int a = 0; a < g.order; ++a)
      for (int b = 0; b < g.order; ++b)
        for (int p = 0; p < x.size; ++p) check(a, b, p);
  } else {
    std::mt19937 rng(0x5eed);
    std::uniform_int_distribution<int> de(0, g.order - 1), dp(0, x.size - 1);
    for (int t = 0; t < 10000; ++t) check(de(rng), de(rng), dp(rng));
  }
}

ConcreteGSet coset_set(const Subgroup& s) {
  const auto& g = *s.parent;
  std::vector<int> coset_of(g.order, -1);
  std::vector<int> reps;
  for (int x = 0; x < g.order; ++x) {
    if (coset_of[x] >= 0) continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(x);
    for (int h : s.elements) coset_of[g.mul[x][h]] = id;
  }
  ConcreteGSet out;
  out.group = s.parent;
  out.size = static_cast<int>(reps.size());
  out.action.assign(g.order, std::vector<int>(out.size));
  for (int a = 0; a < g.order; ++a)
    for (int p = 0; p < out.size; ++p) out.action[a][p] = coset_of[g.mul[a][reps[p]]];
  return out;
}

BurnsideElement orbit_decompose(const ConcreteGSet& x) {
  validate_action(x);
  const auto& data = group_data(x.group);
  const auto& g = *x.group;
  BurnsideElement out = zero_element(x.group);
  std::vector<char> seen(x.size, 0);
  for (int p = 0; p < x.size; ++p) {
    if (seen[p]) continue;
    std::vector<int> stabilizer;
    for (int a = 0; a < g.order; ++a) {
      int q = x.action[a][p];
      seen[q] = 1;
      if (q == p) stabilizer.push_back(a);
    }
    out.coeffs[data.classes().class_of(stabilizer)] += 1;
  }
  return out;
}

long long fixed_points(const ConcreteGSet& x, const Subgroup& u) {
  long long count = 0;
  for (int p = 0; p < x.size; ++p) {
    bool fixed = true;
    for (int a : u.elements)
      if (x.action[a][p] != p) {
        fixed = false;
        break;
      }
    if (fixed) ++count;
  }
  return count;
}

ConcreteGSet product(const ConcreteGSet& x, const ConcreteGSet& y) {
  if (!same_group(x.group, y.group)) throw GroupMismatch("product of sets over different groups");
  long long size = static_cast<long long>(x.size) * y.size;
  if (size > config::point_cap()) throw TooLarge("product set exceeds the point cap");
  ConcreteGSet out;
  out.group = x.group;
  out.size = static_cast<int>(size);
  out.action.assign(x.group->order, std::vector<int>(out.size));
  for (int a = 0; a < x.group->order; ++a)
    for (int p = 0; p < x.size; ++p)
      for (int q = 0; q < y.size; ++q)
        out.action[a][p * y.size + q] = x.action[a][p] * y.size + y.action[a][q];
  return out;
}

ConcreteGSet realize_biset(const Subgroup& u) { return coset_set(u); }

ConcreteGSet h_quotient(const ConcreteGSet& x, const GroupPtr& g, const GroupPtr& h) {
  const int nh = h->order;
  if (x.group->order != g->order * nh) throw GroupMismatch("set does not live over the product group");
  // {e}×H is the element block (g_identity, -): indices g_e*nh .. g_e*nh+nh-1.
  std::vector<int> orbit_of(x.size, -1);
  std::vector<int> reps;
  for (int p = 0; p < x.size; ++p) {
    if (orbit_of[p] >= 0) continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(p);
    // right H-orbit = orbit under the subgroup {e}×H of the product
    std::vector<int> stack = {p};
    orbit_of[p] = id;
    while (!stack.empty()) {
      int q = stack.back();
      stack.pop_back();
      for (int hh = 0; hh < nh; ++hh) {
        int u = product_index(g->identity, hh, nh);
        int q2 = x.action[u][q];
        if (orbit_of[q2] < 0) {
          orbit_of[q2] = id;
          stack.push_back(q2);
        }
      }
    }
  }
  ConcreteGSet out;
  out.group = g;
  out.size = static_cast<int>(reps.size());
  out.action.assign(g->order, std::vector<int>(out.size));
  for (int a = 0; a < g->order; ++a) {
    int u = product_index(a, h->identity, nh);
    for (int p = 0; p < out.size; ++p) out.action[a][p] = orbit_of[x.action[u][reps[p]]];
  }
  return out;
}

ConcreteGSet twisted_product(const ConcreteGSet& x, const ConcreteGSet& y, const GroupPtr& g,
                             const GroupPtr& h, const GroupPtr& i, const GroupPtr& product_gi) {
  const int nh = h->order, ni = i->order;
  if (x.group->order != g->order * nh) throw GroupMismatch("left factor does not live over G×H");
  if (y.group->order != nh * ni) throw GroupMismatch("right factor does not live over H×I");
  if (product_gi->order != g->order * ni) throw GroupMismatch("result group is not G×I");
  long long pairs = static_cast<long long>(x.size) * y.size;
  if (pairs > config::point_cap()) throw TooLarge("twisted product exceeds the point cap");

  // Glue (s·h, t) ~ (s, h·t): orbits of h -> ((e,h)·s, (h,e)·t).
  auto pair_id = [&](int p, int q) { return p * y.size + q; };
  std::vector<int> orbit_of(pairs, -1);
  std::vector<std::pair<int, int>> reps;
  for (int p = 0; p < x.size; ++p)
    for (int q = 0; q < y.size; ++q) {
      if (orbit_of[pair_id(p, q)] >= 0) continue;
      int id = static_cast<int>(reps.size());
      reps.push_back({p, q});
      std::vector<std::pair<int, int>> stack = {{p, q}};
      orbit_of[pair_id(p, q)] = id;
      while (!stack.empty()) {
        auto [a, b] = stack.back();
        stack.pop_back();
        for (int hh = 0; hh < nh; ++hh) {
          int a2 = x.action[product_index(g->identity, hh, nh)][a];
          int b2 = y.action[product_index(hh, i->identity, ni)][b];
          if (orbit_of[pair_id(a2, b2)] < 0) {
            orbit_of[pair_id(a2, b2)] = id;
            stack.push_back({a2, b2});
          }
        }
      }
    }

  ConcreteGSet out;
  out.group = product_gi;
  out.size = static_cast<int>(reps.size());
  out.action.assign(product_gi->order, std::vector<int>(out.size));
  for (int gg = 0; gg < g->order; ++gg)
    for (int ii = 0; ii < ni; ++ii) {
      int u = product_index(gg, ii, ni);
      for (int p = 0; p < out.size; ++p) {
        auto [a, b] = reps[p];
        int a2 = x.action[product_index(gg, h->identity, nh)][a];
        int b2 = y.action[product_index(h->identity, ii, ni)][b];
        out.action[u][p] = orbit_of[pair_id(a2, b2)];
      }
    }
  return out;
}

}  // namespace burnside::oracle
