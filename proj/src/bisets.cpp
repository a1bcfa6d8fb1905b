#include "burnside/bisets.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>
#include <tuple>

#include "burnside/errors.hpp"
#include "burnside/filtration.hpp"
#include "burnside/oracle.hpp"
#include "burnside/parallel.hpp"

namespace burnside {

namespace {

// U ≤ G×H meets {e}×H only in the identity.
bool is_right_free(const std::vector<int>& elements, const FiniteGroup& left,
                   const FiniteGroup& right) {
  for (int u : elements) {
    if (product_first(u, right.order) == left.identity &&
        product_second(u, right.order) != right.identity) {
      return false;
    }
  }
  return true;
}

std::string goursat_label(const std::vector<int>& elements, const FiniteGroup& left,
                          const FiniteGroup& right) {
  std::ostringstream out;
  out << "(K={";
  bool first = true;
  for (int u : elements) {
    if (!first) out << ",";
    first = false;
    out << left.label(product_first(u, right.order));
  }
  out << "}, phi=[";
  first = true;
  for (int u : elements) {
    if (!first) out << ",";
    first = false;
    out << left.label(product_first(u, right.order)) << "->"
        << right.label(product_second(u, right.order));
  }
  out << "])";
  return out.str();
}

}  // namespace

BisetSpace::BisetSpace(GroupPtr left_group, GroupPtr right_group)
    : left(std::move(left_group)),
      right(std::move(right_group)),
      prod(direct_product(left, right)) {
  const GroupData& pdata = group_data(prod.group);
  const GroupData& ldata = group_data(left);
  const int k_left = ldata.num_classes();
  pos_of_class_.assign(pdata.num_classes(), -1);
  for (int c = 0; c < pdata.num_classes(); ++c) {
    const Subgroup& u = pdata.classes().classes[c].representative;
    if (!is_right_free(u.elements, *left, *right)) continue;
    pos_of_class_[c] = num_basis();
    basis_classes.push_back(c);
    basis_labels.push_back(goursat_label(u.elements, *left, *right));
    std::vector<int> p1;
    for (int e : u.elements) p1.push_back(product_first(e, right->order));
    std::sort(p1.begin(), p1.end());
    p1.erase(std::unique(p1.begin(), p1.end()), p1.end());
    IntVec row(k_left, 0);
    row[ldata.classes().class_of(p1)] = 1;
    quotient.push_back(std::move(row));
  }
}

const Subgroup& BisetSpace::representative(int pos) const {
  const GroupData& pdata = group_data(prod.group);
  return pdata.classes().classes[basis_classes.at(pos)].representative;
}

const BisetSpace& biset_space(const GroupPtr& left, const GroupPtr& right) {
  static std::mutex mtx;
  static std::map<std::pair<const FiniteGroup*, const FiniteGroup*>,
                  std::unique_ptr<BisetSpace>>
      cache;
  std::lock_guard<std::mutex> lock(mtx);
  auto key = std::make_pair(left.get(), right.get());
  auto it = cache.find(key);
  if (it == cache.end()) {
    it = cache.emplace(key, std::make_unique<BisetSpace>(left, right)).first;
  }
  return *it->second;
}

bool BisetElement::operator==(const BisetElement& other) const {
  return same_group(left, other.left) && same_group(right, other.right) &&
         coeffs == other.coeffs;
}

BisetElement zero_biset(const GroupPtr& left, const GroupPtr& right) {
  const BisetSpace& sp = biset_space(left, right);
  return BisetElement{left, right, IntVec(sp.num_basis(), 0)};
}

BisetElement biset_basis(const GroupPtr& left, const GroupPtr& right, int pos) {
  BisetElement x = zero_biset(left, right);
  x.coeffs.at(pos) = 1;
  return x;
}

BisetElement biset_from_subgroup(const GroupPtr& left, const GroupPtr& right,
                                 const std::vector<int>& sorted_elements) {
  const BisetSpace& sp = biset_space(left, right);
  const GroupData& pdata = group_data(sp.prod.group);
  int cls = pdata.classes().class_of(sorted_elements);
  int pos = sp.pos_of_class(cls);
  if (pos < 0) {
    throw Error("subgroup meets {e}x" + right->name.value_or("H") +
                " nontrivially, so its class is not right-free");
  }
  return biset_basis(left, right, pos);
}

namespace {

void require_same_space(const BisetElement& a, const BisetElement& b) {
  if (!same_group(a.left, b.left) || !same_group(a.right, b.right)) {
    throw GroupMismatch("biset operands live over different group pairs");
  }
}

}  // namespace

BisetElement operator+(const BisetElement& a, const BisetElement& b) {
  require_same_space(a, b);
  BisetElement out = a;
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] += b.coeffs[i];
  return out;
}

BisetElement operator-(const BisetElement& a, const BisetElement& b) {
  require_same_space(a, b);
  BisetElement out = a;
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] -= b.coeffs[i];
  return out;
}

BisetElement operator-(const BisetElement& a) {
  BisetElement out = a;
  for (auto& c : out.coeffs) c = -c;
  return out;
}

BisetElement operator*(const Int& c, const BisetElement& a) {
  BisetElement out = a;
  for (auto& v : out.coeffs) v *= c;
  return out;
}

BisetElement rebase_biset(const BisetElement& x, const GroupPtr& new_left,
                          const GroupPtr& new_right) {
  if (!same_group(x.left, new_left) || !same_group(x.right, new_right)) {
    throw GroupMismatch("cannot rebase a biset onto structurally different groups");
  }
  return BisetElement{new_left, new_right, x.coeffs};
}

BisetElement identity_biset(const GroupPtr& g) { return hom_biset(identity_hom(g)); }

BisetElement hom_biset(const GroupHom& phi) {
  const GroupPtr& s = phi.source;
  const GroupPtr& t = phi.target;
  std::vector<int> graph;
  for (int x = 0; x < s->order; ++x) graph.push_back(product_index(x, phi(x), t->order));
  std::sort(graph.begin(), graph.end());
  return biset_from_subgroup(s, t, graph);
}

BisetElement transfer_biset(const GroupHom& theta) {
  if (!theta.is_injective()) {
    throw NotInjective("transfer requires an injective homomorphism");
  }
  const GroupPtr& h = theta.source;
  const GroupPtr& g = theta.target;
  std::vector<int> elems;
  for (int x = 0; x < h->order; ++x) elems.push_back(product_index(theta(x), x, h->order));
  std::sort(elems.begin(), elems.end());
  return biset_from_subgroup(g, h, elems);
}

BurnsideElement quotient_to_burnside(const BisetElement& x) {
  const BisetSpace& sp = biset_space(x.left, x.right);
  const GroupData& ldata = group_data(x.left);
  IntVec out(ldata.num_classes(), 0);
  for (int t = 0; t < sp.num_basis(); ++t) {
    if (x.coeffs[t] == 0) continue;
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += x.coeffs[t] * sp.quotient[t][j];
  }
  return element_from_coeffs(x.left, std::move(out));
}

namespace {

struct PairKey {
  const FiniteGroup* l;
  const FiniteGroup* m;
  const FiniteGroup* r;
  int s;
  int t;
  bool operator<(const PairKey& o) const {
    return std::tie(l, m, r, s, t) < std::tie(o.l, o.m, o.r, o.s, o.t);
  }
};

std::mutex pair_cache_mutex;
std::map<PairKey, IntVec> pair_cache;

// Orbit count of the concrete twisted product of two basis classes,
// expressed over the (left, right) basis.
IntVec pair_product(const BisetSpace& sa, const BisetSpace& sb, const BisetSpace& sc, int s,
                    int t) {
  oracle::ConcreteGSet x = oracle::realize_biset(sa.representative(s));
  oracle::ConcreteGSet y = oracle::realize_biset(sb.representative(t));
  oracle::ConcreteGSet z =
      oracle::twisted_product(x, y, sa.left, sa.right, sb.right, sc.prod.group);
  BurnsideElement orbits = oracle::orbit_decompose(z);
  IntVec out(sc.num_basis(), 0);
  for (std::size_t c = 0; c < orbits.coeffs.size(); ++c) {
    if (orbits.coeffs[c] == 0) continue;
    int pos = sc.pos_of_class(static_cast<int>(c));
    if (pos < 0) {
      throw std::logic_error("composite of right-free classes produced a non-free orbit");
    }
    out[pos] += orbits.coeffs[c];
  }
  return out;
}

BisetElement align_middle(const BisetElement& a, const BisetElement& b) {
  if (!same_group(a.right, b.left)) {
    throw GroupMismatch("middle groups of a biset composition do not match");
  }
  if (a.right.get() == b.left.get()) return b;
  // Structurally equal tables give identical derived data, so the
  // coefficients transfer verbatim.
  return rebase_biset(b, a.right, b.right);
}

}  // namespace

BisetElement compose(const BisetElement& a, const BisetElement& b_in) {
  BisetElement b = align_middle(a, b_in);
  const BisetSpace& sa = biset_space(a.left, a.right);
  const BisetSpace& sb = biset_space(b.left, b.right);
  const BisetSpace& sc = biset_space(a.left, b.right);

  // Gather the uncached basis pairs with nonzero weight, fill them in
  // parallel, then accumulate serially.
  std::vector<PairKey> needed;
  {
    std::lock_guard<std::mutex> lock(pair_cache_mutex);
    for (int s = 0; s < sa.num_basis(); ++s) {
      if (a.coeffs[s] == 0) continue;
      for (int t = 0; t < sb.num_basis(); ++t) {
        if (b.coeffs[t] == 0) continue;
        PairKey key{a.left.get(), a.right.get(), b.right.get(), s, t};
        if (!pair_cache.count(key)) needed.push_back(key);
      }
    }
  }
  if (!needed.empty()) {
    std::vector<IntVec> results(needed.size());
    std::vector<std::exception_ptr> errors(needed.size());
    parallel::parallel_for(static_cast<long long>(needed.size()), [&](long long i) {
      try {
        results[i] = pair_product(sa, sb, sc, needed[i].s, needed[i].t);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    });
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
    std::lock_guard<std::mutex> lock(pair_cache_mutex);
    for (std::size_t i = 0; i < needed.size(); ++i) {
      pair_cache.emplace(needed[i], std::move(results[i]));
    }
  }

  BisetElement out = zero_biset(a.left, b.right);
  std::lock_guard<std::mutex> lock(pair_cache_mutex);
  for (int s = 0; s < sa.num_basis(); ++s) {
    if (a.coeffs[s] == 0) continue;
    for (int t = 0; t < sb.num_basis(); ++t) {
      if (b.coeffs[t] == 0) continue;
      const IntVec& cell = pair_cache.at({a.left.get(), a.right.get(), b.right.get(), s, t});
      Int w = a.coeffs[s] * b.coeffs[t];
      for (int j = 0; j < sc.num_basis(); ++j) out.coeffs[j] += w * cell[j];
    }
  }
  return out;
}

namespace {

// Double coset route for one basis pair: reps x of p2(U)\H/p1(V), each
// contributing {(g,i) : exists h, (g,h) in U and (x^-1 h x, i) in V}.
IntVec pair_product_double_coset(const BisetSpace& sa, const BisetSpace& sb,
                                 const BisetSpace& sc, int s, int t) {
  const FiniteGroup& h = *sa.right;
  const FiniteGroup& i_grp = *sb.right;
  const std::vector<int>& u = sa.representative(s).elements;
  const std::vector<int>& v = sb.representative(t).elements;

  std::vector<int> p2u;
  for (int e : u) p2u.push_back(product_second(e, h.order));
  std::sort(p2u.begin(), p2u.end());
  p2u.erase(std::unique(p2u.begin(), p2u.end()), p2u.end());

  std::vector<std::vector<int>> v_by_first(h.order);
  std::vector<int> p1v;
  for (int e : v) {
    int first = product_first(e, i_grp.order);
    v_by_first[first].push_back(product_second(e, i_grp.order));
    p1v.push_back(first);
  }
  std::sort(p1v.begin(), p1v.end());
  p1v.erase(std::unique(p1v.begin(), p1v.end()), p1v.end());

  const GroupData& pdata = group_data(sc.prod.group);
  IntVec out(sc.num_basis(), 0);
  std::vector<char> seen(h.order, 0);
  for (int x = 0; x < h.order; ++x) {
    if (seen[x]) continue;
    for (int b : p2u) {
      for (int c : p1v) seen[h.mul[h.mul[b][x]][c]] = 1;
    }
    std::set<int> w;
    for (int e : u) {
      int g = product_first(e, h.order);
      int hh = product_second(e, h.order);
      int conj = h.mul[h.mul[h.inv[x]][hh]][x];
      for (int i : v_by_first[conj]) w.insert(product_index(g, i, i_grp.order));
    }
    std::vector<int> w_sorted(w.begin(), w.end());
    int pos = sc.pos_of_class(pdata.classes().class_of(w_sorted));
    if (pos < 0) {
      throw std::logic_error("double coset composite produced a non-free class");
    }
    out[pos] += 1;
  }
  return out;
}

}  // namespace

BisetElement compose_double_coset(const BisetElement& a, const BisetElement& b_in) {
  BisetElement b = align_middle(a, b_in);
  const BisetSpace& sa = biset_space(a.left, a.right);
  const BisetSpace& sb = biset_space(b.left, b.right);
  const BisetSpace& sc = biset_space(a.left, b.right);
  BisetElement out = zero_biset(a.left, b.right);
  for (int s = 0; s < sa.num_basis(); ++s) {
    if (a.coeffs[s] == 0) continue;
    for (int t = 0; t < sb.num_basis(); ++t) {
      if (b.coeffs[t] == 0) continue;
      IntVec cell = pair_product_double_coset(sa, sb, sc, s, t);
      Int w = a.coeffs[s] * b.coeffs[t];
      for (int j = 0; j < sc.num_basis(); ++j) out.coeffs[j] += w * cell[j];
    }
  }
  return out;
}

IntegerLattice jn_bivariant(const GroupPtr& left, const GroupPtr& right, int n) {
  const BisetSpace& sp = biset_space(left, right);
  const GroupData& ldata = group_data(left);
  const int m = sp.num_basis();
  const int k = ldata.num_classes();

  IntegerLattice ideal = jn_ideal(left, n);
  IntegerLattice via_preimage = preimage_lattice(sp.quotient, ideal);

  // Direct route: kernel of (quotient · marks-columns-at-level).
  const IntMat& marks = ldata.marks().marks;
  std::vector<int> sel;
  for (int j = 0; j < k; ++j) {
    if (ldata.classes().classes[j].min_generators <= n) sel.push_back(j);
  }
  IntMat composite(m, IntVec(sel.size(), 0));
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < k; ++c) {
      if (sp.quotient[r][c] == 0) continue;
      for (std::size_t j = 0; j < sel.size(); ++j) {
        composite[r][j] += sp.quotient[r][c] * marks[c][sel[j]];
      }
    }
  }
  IntegerLattice via_kernel = left_kernel(composite, m, static_cast<int>(sel.size()));

  if (!lattice_equal(via_preimage, via_kernel)) {
    throw std::logic_error("bivariant filtration routes disagree");
  }
  return via_preimage;
}

}  // namespace burnside
