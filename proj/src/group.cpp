#include "burnside/group.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "burnside/config.hpp"

namespace burnside {

namespace {

// Fills identity, inverses and element orders for a table that is correct by
// construction. Cheap sanity checks only (no full associativity sweep).
GroupPtr finalize_group(std::vector<std::vector<int>> mul, std::optional<std::string> name,
                        std::vector<std::string> labels) {
  auto g = std::make_shared<FiniteGroup>();
  g->order = static_cast<int>(mul.size());
  g->mul = std::move(mul);
  g->name = std::move(name);
  g->element_labels = std::move(labels);

  const int n = g->order;
  int identity = -1;
  for (int e = 0; e < n && identity < 0; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = g->mul[e][x] == x && g->mul[x][e] == x;
    if (ok) identity = e;
  }
  if (identity < 0) throw NotAGroup("no two-sided identity element");
  g->identity = identity;

  g->inv.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (g->mul[a][b] == identity && g->mul[b][a] == identity) {
        g->inv[a] = b;
        break;
      }
    if (g->inv[a] < 0) throw NotAGroup("element " + std::to_string(a) + " has no two-sided inverse");
  }

  g->element_order.assign(n, 0);
  for (int a = 0; a < n; ++a) {
    int x = a, k = 1;
    while (x != identity) {
      x = g->mul[x][a];
      ++k;
    }
    g->element_order[a] = k;
  }
  return g;
}

std::string perm_cycle_notation(const std::vector<int>& p) {
  const int n = static_cast<int>(p.size());
  std::vector<char> seen(n, 0);
  std::ostringstream out;
  bool any = false;
  for (int s = 0; s < n; ++s) {
    if (seen[s] || p[s] == s) continue;
    out << '(';
    int x = s;
    bool first = true;
    while (!seen[x]) {
      seen[x] = 1;
      if (!first) out << ' ';
      out << x;
      first = false;
      x = p[x];
    }
    out << ')';
    any = true;
  }
  return any ? out.str() : "e";
}

std::vector<std::vector<int>> cyclic_table(int n) {
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) mul[i][j] = (i + j) % n;
  return mul;
}

GroupPtr build_cyclic(int n) {
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = i == 0 ? "e" : (i == 1 ? "g" : "g" + std::to_string(i));
  return finalize_group(cyclic_table(n), "C" + std::to_string(n), std::move(labels));
}

GroupPtr build_dihedral(int two_n) {
  const int n = two_n / 2;
  // index = eps*n + k encodes r^k s^eps
  auto id = [n](int k, int eps) { return eps * n + k; };
  std::vector<std::vector<int>> mul(two_n, std::vector<int>(two_n));
  for (int e1 = 0; e1 < 2; ++e1)
    for (int k1 = 0; k1 < n; ++k1)
      for (int e2 = 0; e2 < 2; ++e2)
        for (int k2 = 0; k2 < n; ++k2) {
          int k = e1 ? (k1 - k2 + n) % n : (k1 + k2) % n;
          mul[id(k1, e1)][id(k2, e2)] = id(k, e1 ^ e2);
        }
  std::vector<std::string> labels(two_n);
  for (int eps = 0; eps < 2; ++eps)
    for (int k = 0; k < n; ++k) {
      std::string r = k == 0 ? "" : (k == 1 ? "r" : "r" + std::to_string(k));
      std::string l = r + (eps ? "s" : "");
      labels[id(k, eps)] = l.empty() ? "e" : l;
    }
  return finalize_group(std::move(mul), "D" + std::to_string(two_n), std::move(labels));
}

GroupPtr build_quaternion() {
  // index = j*4 + i encodes a^i b^j with a^4 = e, b^2 = a^2, b a = a^-1 b
  auto id = [](int i, int j) { return j * 4 + i; };
  std::vector<std::vector<int>> mul(8, std::vector<int>(8));
  for (int j1 = 0; j1 < 2; ++j1)
    for (int i1 = 0; i1 < 4; ++i1)
      for (int j2 = 0; j2 < 2; ++j2)
        for (int i2 = 0; i2 < 4; ++i2) {
          int i, j;
          if (j1 == 0) {
            i = (i1 + i2) % 4;
            j = j2;
          } else if (j2 == 0) {
            i = (i1 - i2 + 4) % 4;
            j = 1;
          } else {
            i = (i1 - i2 + 2 + 4) % 4;
            j = 0;
          }
          mul[id(i1, j1)][id(i2, j2)] = id(i, j);
        }
  std::vector<std::string> labels = {"1", "i", "-1", "-i", "j", "k", "-j", "-k"};
  return finalize_group(std::move(mul), "Q8", std::move(labels));
}

GroupPtr build_klein() {
  std::vector<std::vector<int>> mul(4, std::vector<int>(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) mul[i][j] = i ^ j;
  return finalize_group(std::move(mul), "V4", {"e", "a", "b", "ab"});
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

GroupPtr build_elementary_abelian(int p, int k) {
  long long order = 1;
  for (int i = 0; i < k; ++i) {
    order *= p;
    if (order > config::order_cap())
      throw TooLarge("E(" + std::to_string(p) + "," + std::to_string(k) + ") exceeds the order cap");
  }
  const int n = static_cast<int>(order);
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int x = a, y = b, pw = 1, sum = 0;
      for (int i = 0; i < k; ++i) {
        sum += ((x % p + y % p) % p) * pw;
        x /= p;
        y /= p;
        pw *= p;
      }
      mul[a][b] = sum;
    }
  std::vector<std::string> labels(n);
  for (int a = 0; a < n; ++a) {
    std::string l = "(";
    int x = a;
    for (int i = 0; i < k; ++i) {
      if (i) l += ",";
      l += std::to_string(x % p);
      x /= p;
    }
    labels[a] = l + ")";
  }
  std::string nm = "E(" + std::to_string(p) + "," + std::to_string(k) + ")";
  return finalize_group(std::move(mul), nm, std::move(labels));
}

std::vector<int> transposition(int n, int a, int b) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::swap(p[a], p[b]);
  return p;
}

std::vector<int> full_cycle(int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = (i + 1) % n;
  return p;
}

std::vector<int> three_cycle(int n, int a, int b, int c) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  p[a] = b;
  p[b] = c;
  p[c] = a;
  return p;
}

GroupPtr build_factor(const std::string& token) {
  if (token == "trivial") {
    auto g = finalize_group({{0}}, "trivial", {"e"});
    return g;
  }
  if (token == "V4") return build_klein();
  if (token == "Q8") return build_quaternion();
  if (token.size() >= 2 && (token[0] == 'C' || token[0] == 'D' || token[0] == 'S' || token[0] == 'A') &&
      std::all_of(token.begin() + 1, token.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    long long n = std::stoll(token.substr(1));
    if (n < 1) throw UnknownName("catalog name " + token + ": parameter must be positive");
    switch (token[0]) {
      case 'C':
        if (n > config::order_cap()) throw TooLarge("C" + std::to_string(n) + " exceeds the order cap");
        return build_cyclic(static_cast<int>(n));
      case 'D':
        if (n % 2 != 0) throw UnknownName("D" + std::to_string(n) + ": dihedral order must be even");
        if (n > config::order_cap()) throw TooLarge("D" + std::to_string(n) + " exceeds the order cap");
        return build_dihedral(static_cast<int>(n));
      case 'S': {
        if (n == 1) {
          auto g = group_from_permutations(1, {});
          auto copy = std::make_shared<FiniteGroup>(*g);
          copy->name = "S1";
          return copy;
        }
        std::vector<std::vector<int>> gens = {transposition(static_cast<int>(n), 0, 1),
                                              full_cycle(static_cast<int>(n))};
        auto g = group_from_permutations(static_cast<int>(n), gens);
        auto copy = std::make_shared<FiniteGroup>(*g);
        copy->name = "S" + std::to_string(n);
        return copy;
      }
      case 'A': {
        std::vector<std::vector<int>> gens;
        for (int k = 2; k < n; ++k) gens.push_back(three_cycle(static_cast<int>(n), 0, 1, k));
        auto g = group_from_permutations(std::max<int>(1, static_cast<int>(n)), gens);
        auto copy = std::make_shared<FiniteGroup>(*g);
        copy->name = "A" + std::to_string(n);
        return copy;
      }
    }
  }
  if (token.size() >= 6 && token[0] == 'E' && token[1] == '(' && token.back() == ')') {
    std::string inner = token.substr(2, token.size() - 3);
    auto comma = inner.find(',');
    if (comma != std::string::npos) {
      try {
        int p = std::stoi(inner.substr(0, comma));
        int k = std::stoi(inner.substr(comma + 1));
        if (!is_prime(p)) throw UnknownName("E(" + inner + "): first parameter must be prime");
        if (k < 1) throw UnknownName("E(" + inner + "): exponent must be positive");
        return build_elementary_abelian(p, k);
      } catch (const std::invalid_argument&) {
        throw UnknownName("cannot parse catalog name " + token);
      }
    }
  }
  throw UnknownName("unknown catalog name \"" + token + "\"");
}

std::vector<std::string> split_factors(const std::string& spec) {
  std::vector<std::string> out;
  std::string cur;
  for (size_t i = 0; i < spec.size();) {
    if (spec.compare(i, 2, "\xc3\x97") == 0) {  // UTF-8 ×
      out.push_back(cur);
      cur.clear();
      i += 2;
    } else if (spec[i] == 'x' || spec[i] == '*') {
      out.push_back(cur);
      cur.clear();
      ++i;
    } else {
      if (spec[i] != ' ' && spec[i] != '\t') cur += spec[i];
      ++i;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

int FiniteGroup::power(int a, long long k) const {
  int base = a;
  unsigned long long reps;
  if (k < 0) {
    base = inv[a];
    reps = static_cast<unsigned long long>(-(k + 1)) + 1;
  } else {
    reps = static_cast<unsigned long long>(k);
  }
  reps %= static_cast<unsigned long long>(element_order[base]);
  int x = identity;
  for (unsigned long long i = 0; i < reps; ++i) x = mul[x][base];
  return x;
}

std::string FiniteGroup::label(int a) const {
  if (!element_labels.empty()) return element_labels[a];
  return std::to_string(a);
}

bool same_group(const GroupPtr& a, const GroupPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->order == b->order && a->mul == b->mul;
}

GroupPtr group_from_cayley(std::vector<std::vector<int>> mul, std::optional<std::string> name) {
  const int n = static_cast<int>(mul.size());
  if (n == 0) throw NotAGroup("empty table");
  if (n > config::order_cap()) throw TooLarge("order " + std::to_string(n) + " exceeds the order cap");
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(mul[a].size()) != n) throw NotAGroup("table is not square");
    for (int b = 0; b < n; ++b)
      if (mul[a][b] < 0 || mul[a][b] >= n)
        throw NotAGroup("entry out of range at (" + std::to_string(a) + "," + std::to_string(b) + ")");
  }
  // Latin square: each row and column is a permutation.
  for (int a = 0; a < n; ++a) {
    std::vector<char> row(n, 0), col(n, 0);
    for (int b = 0; b < n; ++b) {
      if (row[mul[a][b]]++)
        throw NotAGroup("row " + std::to_string(a) + " repeats entry " + std::to_string(mul[a][b]));
      if (col[mul[b][a]]++)
        throw NotAGroup("column " + std::to_string(a) + " repeats entry " + std::to_string(mul[b][a]));
    }
  }
  // Associativity: exhaustive up to order 64, seeded random sampling above.
  auto check_triple = [&](int a, int b, int c) {
    if (mul[mul[a][b]][c] != mul[a][mul[b][c]])
      throw NotAGroup("associativity fails at triple (" + std::to_string(a) + "," + std::to_string(b) +
                      "," + std::to_string(c) + ")");
  };
  if (n <= 64) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) check_triple(a, b, c);
  } else {
    std::mt19937 rng(0x5eed);
    std::uniform_int_distribution<int> d(0, n - 1);
    for (int t = 0; t < 10000; ++t) check_triple(d(rng), d(rng), d(rng));
  }
  return finalize_group(std::move(mul), std::move(name), {});
}

GroupPtr group_from_permutations(int degree, const std::vector<std::vector<int>>& generators) {
  if (degree < 1) throw ParseError("degree must be positive");
  for (const auto& p : generators) {
    if (static_cast<int>(p.size()) != degree)
      throw ParseError("generator length does not match the degree");
    std::vector<int> s = p;
    std::sort(s.begin(), s.end());
    for (int i = 0; i < degree; ++i)
      if (s[i] != i) throw ParseError("generator is not a permutation of 0.." + std::to_string(degree - 1));
  }

  std::vector<int> identity(degree);
  std::iota(identity.begin(), identity.end(), 0);
  std::vector<std::vector<int>> perms = {identity};
  std::map<std::vector<int>, int> index = {{identity, 0}};

  for (size_t head = 0; head < perms.size(); ++head) {
    for (const auto& gen : generators) {
      std::vector<int> next(degree);
      for (int x = 0; x < degree; ++x) next[x] = perms[head][gen[x]];  // apply gen first
      if (index.emplace(next, static_cast<int>(perms.size())).second) {
        if (static_cast<int>(perms.size()) >= config::order_cap())
          throw TooLarge("permutation closure exceeds the order cap");
        perms.push_back(std::move(next));
      }
    }
  }

  const int n = static_cast<int>(perms.size());
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<int> comp(degree);
      for (int x = 0; x < degree; ++x) comp[x] = perms[i][perms[j][x]];
      mul[i][j] = index.at(comp);
    }
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = perm_cycle_notation(perms[i]);
  return finalize_group(std::move(mul), std::nullopt, std::move(labels));
}

GroupPtr catalog_group(const std::string& spec) {
  auto tokens = split_factors(spec);
  for (auto& t : tokens)
    if (t.empty()) throw UnknownName("cannot parse catalog name \"" + spec + "\"");
  GroupPtr g = build_factor(tokens[0]);
  for (size_t i = 1; i < tokens.size(); ++i) g = direct_product(g, build_factor(tokens[i])).group;
  return g;
}

ProductGroup direct_product(const GroupPtr& g, const GroupPtr& h) {
  const int ng = g->order, nh = h->order;
  long long n = static_cast<long long>(ng) * nh;
  if (n > config::order_cap()) throw TooLarge("product order exceeds the order cap");
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  for (int a1 = 0; a1 < ng; ++a1)
    for (int b1 = 0; b1 < nh; ++b1)
      for (int a2 = 0; a2 < ng; ++a2)
        for (int b2 = 0; b2 < nh; ++b2)
          mul[product_index(a1, b1, nh)][product_index(a2, b2, nh)] =
              product_index(g->mul[a1][a2], h->mul[b1][b2], nh);

  std::optional<std::string> name;
  if (g->name && h->name) name = *g->name + "\xc3\x97" + *h->name;
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int a = 0; a < ng; ++a)
    for (int b = 0; b < nh; ++b) labels.push_back("(" + g->label(a) + "," + h->label(b) + ")");
  GroupPtr p = finalize_group(std::move(mul), std::move(name), std::move(labels));

  ProductGroup out;
  out.group = p;
  out.embed_left = GroupHom{g, p, {}};
  out.embed_right = GroupHom{h, p, {}};
  out.project_left = GroupHom{p, g, {}};
  out.project_right = GroupHom{p, h, {}};
  out.embed_left.images.resize(ng);
  for (int a = 0; a < ng; ++a) out.embed_left.images[a] = product_index(a, h->identity, nh);
  out.embed_right.images.resize(nh);
  for (int b = 0; b < nh; ++b) out.embed_right.images[b] = product_index(g->identity, b, nh);
  out.project_left.images.resize(n);
  out.project_right.images.resize(n);
  for (int u = 0; u < n; ++u) {
    out.project_left.images[u] = product_first(u, nh);
    out.project_right.images[u] = product_second(u, nh);
  }
  return out;
}

bool Subgroup::contains(int x) const {
  return std::binary_search(elements.begin(), elements.end(), x);
}

Subgroup subgroup_generated(const GroupPtr& g, const std::vector<int>& seeds) {
  std::vector<char> in(g->order, 0);
  std::vector<int> members;
  auto add = [&](int x) {
    if (!in[x]) {
      in[x] = 1;
      members.push_back(x);
    }
  };
  add(g->identity);
  for (int s : seeds) {
    if (s < 0 || s >= g->order) throw Error("seed element index out of range");
    add(s);
  }
  std::vector<int> work = members;
  while (!work.empty()) {
    int x = work.back();
    work.pop_back();
    for (size_t i = 0; i < members.size(); ++i) {
      int y = members[i];
      for (int z : {g->mul[x][y], g->mul[y][x]}) {
        if (!in[z]) {
          in[z] = 1;
          members.push_back(z);
          work.push_back(z);
        }
      }
    }
  }
  std::sort(members.begin(), members.end());
  return Subgroup{g, std::move(members)};
}

Subgroup trivial_subgroup(const GroupPtr& g) { return Subgroup{g, {g->identity}}; }

Subgroup full_subgroup(const GroupPtr& g) {
  std::vector<int> all(g->order);
  std::iota(all.begin(), all.end(), 0);
  return Subgroup{g, std::move(all)};
}

Subgroup conjugate_subgroup(const Subgroup& s, int x) {
  std::vector<int> out;
  out.reserve(s.elements.size());
  for (int e : s.elements) out.push_back(s.parent->conjugate(x, e));
  std::sort(out.begin(), out.end());
  return Subgroup{s.parent, std::move(out)};
}

bool is_subgroup(const GroupPtr& g, const std::vector<int>& sorted_elements) {
  if (!std::binary_search(sorted_elements.begin(), sorted_elements.end(), g->identity)) return false;
  for (int a : sorted_elements)
    for (int b : sorted_elements)
      if (!std::binary_search(sorted_elements.begin(), sorted_elements.end(), g->mul[a][b]))
        return false;
  return true;
}

bool GroupHom::is_injective() const {
  std::vector<int> s = images;
  std::sort(s.begin(), s.end());
  return std::adjacent_find(s.begin(), s.end()) == s.end();
}

GroupHom make_hom(GroupPtr source, GroupPtr target, std::vector<int> images) {
  if (static_cast<int>(images.size()) != source->order)
    throw InvalidHom("images array has wrong length");
  for (int v : images)
    if (v < 0 || v >= target->order) throw InvalidHom("image index out of range");
  if (images[source->identity] != target->identity)
    throw InvalidHom("identity does not map to identity");
  for (int a = 0; a < source->order; ++a)
    for (int b = 0; b < source->order; ++b)
      if (images[source->mul[a][b]] != target->mul[images[a]][images[b]])
        throw InvalidHom("multiplicativity fails at pair (" + std::to_string(a) + "," +
                         std::to_string(b) + ")");
  return GroupHom{std::move(source), std::move(target), std::move(images)};
}

GroupHom identity_hom(const GroupPtr& g) {
  std::vector<int> images(g->order);
  std::iota(images.begin(), images.end(), 0);
  return GroupHom{g, g, std::move(images)};
}

GroupHom trivial_hom(const GroupPtr& source, const GroupPtr& target) {
  return GroupHom{source, target, std::vector<int>(source->order, target->identity)};
}

GroupHom compose_homs(const GroupHom& first, const GroupHom& second) {
  if (!same_group(first.target, second.source))
    throw GroupMismatch("hom composition: middle groups differ");
  std::vector<int> images(first.source->order);
  for (int x = 0; x < first.source->order; ++x) images[x] = second.images[first.images[x]];
  return GroupHom{first.source, second.target, std::move(images)};
}

std::vector<int> hom_image(const GroupHom& f) {
  std::vector<int> im = f.images;
  std::sort(im.begin(), im.end());
  im.erase(std::unique(im.begin(), im.end()), im.end());
  return im;
}

Subgroup image_subgroup(const GroupHom& f, const Subgroup& s) {
  std::vector<int> im;
  im.reserve(s.elements.size());
  for (int e : s.elements) im.push_back(f.images[e]);
  std::sort(im.begin(), im.end());
  im.erase(std::unique(im.begin(), im.end()), im.end());
  return Subgroup{f.target, std::move(im)};
}

Subgroup kernel_subgroup(const GroupHom& f) {
  std::vector<int> ker;
  for (int x = 0; x < f.source->order; ++x)
    if (f.images[x] == f.target->identity) ker.push_back(x);
  return Subgroup{f.source, std::move(ker)};
}

SubgroupAsGroup subgroup_as_group(const Subgroup& s) {
  const auto& parent = *s.parent;
  const int m = s.order();
  std::vector<int> pos(parent.order, -1);
  for (int i = 0; i < m; ++i) pos[s.elements[i]] = i;
  std::vector<std::vector<int>> mul(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int p = parent.mul[s.elements[i]][s.elements[j]];
      if (pos[p] < 0) throw Error("element set is not closed under multiplication");
      mul[i][j] = pos[p];
    }
  std::vector<std::string> labels;
  if (!parent.element_labels.empty()) {
    labels.reserve(m);
    for (int e : s.elements) labels.push_back(parent.element_labels[e]);
  }
  GroupPtr g = finalize_group(std::move(mul), std::nullopt, std::move(labels));
  return SubgroupAsGroup{g, GroupHom{g, s.parent, s.elements}};
}

std::vector<int> minimal_generating_tuple(const GroupPtr& g) {
  if (g->order == 1) return {};
  const int n = g->order;
  std::vector<int> tuple;
  // Depth-first over tuples of the current length, lexicographic, early exit.
  std::function<bool(int)> extend = [&](int remaining) -> bool {
    if (remaining == 0) {
      return subgroup_generated(g, tuple).order() == n;
    }
    for (int x = 0; x < n; ++x) {
      tuple.push_back(x);
      if (extend(remaining - 1)) return true;
      tuple.pop_back();
    }
    return false;
  };
  for (int k = 1; k <= n; ++k) {
    tuple.clear();
    if (extend(k)) return tuple;
  }
  throw Error("no generating tuple found");  // unreachable
}

std::vector<GroupHom> homomorphisms_between(const GroupPtr& source, const GroupPtr& target) {
  std::vector<GroupHom> out;
  const int n = source->order, m = target->order;
  if (n == 1) {
    out.push_back(trivial_hom(source, target));
    return out;
  }
  std::vector<int> gens = minimal_generating_tuple(source);
  const int k = static_cast<int>(gens.size());

  // BFS from the identity by right multiplication with generators; remember
  // how each element was reached so images extend along the same spine.
  std::vector<int> order_of_discovery;
  std::vector<std::pair<int, int>> via(n, {-1, -1});  // element -> (previous, generator slot)
  std::vector<char> seen(n, 0);
  seen[source->identity] = 1;
  std::vector<int> queue = {source->identity};
  for (size_t head = 0; head < queue.size(); ++head) {
    int x = queue[head];
    for (int gi = 0; gi < k; ++gi) {
      int y = source->mul[x][gens[gi]];
      if (!seen[y]) {
        seen[y] = 1;
        via[y] = {x, gi};
        order_of_discovery.push_back(y);
        queue.push_back(y);
      }
    }
  }

  std::vector<int> t(k, 0);
  std::vector<int> images(n);
  while (true) {
    images[source->identity] = target->identity;
    for (int y : order_of_discovery) {
      auto [prev, gi] = via[y];
      images[y] = target->mul[images[prev]][t[gi]];
    }
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n; ++b)
        if (images[source->mul[a][b]] != target->mul[images[a]][images[b]]) {
          ok = false;
          break;
        }
    if (ok) out.push_back(GroupHom{source, target, images});

    int pos = k - 1;
    while (pos >= 0 && t[pos] == m - 1) t[pos--] = 0;
    if (pos < 0) break;
    ++t[pos];
  }
  return out;
}

ElementClasses conjugacy_classes_of_elements(const GroupPtr& g) {
  const int n = g->order;
  std::vector<char> seen(n, 0);
  std::vector<std::vector<int>> classes;
  for (int x = 0; x < n; ++x) {
    if (seen[x]) continue;
    std::vector<int> cls;
    for (int h = 0; h < n; ++h) {
      int y = g->conjugate(h, x);
      if (!seen[y]) {
        seen[y] = 1;
        cls.push_back(y);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  std::sort(classes.begin(), classes.end(), [&](const auto& a, const auto& b) {
    int oa = g->element_order[a[0]], ob = g->element_order[b[0]];
    if (oa != ob) return oa < ob;
    return a[0] < b[0];
  });
  ElementClasses out;
  out.group = g;
  out.class_of.assign(n, -1);
  for (size_t c = 0; c < classes.size(); ++c)
    for (int x : classes[c]) out.class_of[x] = static_cast<int>(c);
  out.classes = std::move(classes);
  return out;
}

}  // namespace burnside
