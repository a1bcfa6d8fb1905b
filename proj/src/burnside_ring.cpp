#include "burnside/burnside_ring.hpp"

#include <map>
#include <mutex>

#include "burnside/parallel.hpp"

namespace burnside {

IntMat compute_marks_matrix(const GroupPtr& g, const SubgroupClassification& cls) {
  const int r = cls.num_classes();
  const int n = g->order;

  std::vector<std::vector<char>> membership(r, std::vector<char>(n, 0));
  for (int i = 0; i < r; ++i)
    for (int e : cls.classes[i].representative.elements) membership[i][e] = 1;

  // All entries computed from the counting formula, including the ones the
  // canonical order forces to zero; triangularity is asserted by tests, not
  // assumed here. No throwing inside the parallel region: divisibility is
  // checked afterwards.
  IntMat marks(r, IntVec(r, 0));
  std::vector<long long> raw_counts(static_cast<size_t>(r) * r, 0);
  parallel::parallel_for(r, [&](long long row) {
    const auto& h = membership[row];
    for (int col = 0; col < r; ++col) {
      const auto& k_elements = cls.classes[col].representative.elements;
      long long count = 0;
      for (int x = 0; x < n; ++x) {
        bool inside = true;
        for (int k : k_elements) {
          // x^-1 k x
          int c = g->mul[g->mul[g->inv[x]][k]][x];
          if (!h[c]) {
            inside = false;
            break;
          }
        }
        if (inside) ++count;
      }
      raw_counts[row * r + col] = count;
    }
  });
  for (int row = 0; row < r; ++row) {
    const long long h_order = cls.classes[row].representative.order();
    for (int col = 0; col < r; ++col) {
      long long count = raw_counts[static_cast<size_t>(row) * r + col];
      if (count % h_order != 0) throw Error("internal: mark count not divisible by the stabilizer order");
      marks[row][col] = count / h_order;
    }
  }
  return marks;
}

GroupData::GroupData(GroupPtr g)
    : group_(std::move(g)),
      classes_(classify_subgroups(group_)),
      marks_{group_, compute_marks_matrix(group_, classes_)},
      element_classes_(conjugacy_classes_of_elements(group_)) {}

const GroupData& group_data(const GroupPtr& g) {
  static std::mutex mutex;
  static std::map<const FiniteGroup*, std::unique_ptr<GroupData>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(g.get());
  if (it == cache.end()) it = cache.emplace(g.get(), std::make_unique<GroupData>(g)).first;
  return *it->second;
}

TableOfMarks table_of_marks(const GroupPtr& g) { return group_data(g).marks(); }

bool BurnsideElement::operator==(const BurnsideElement& other) const {
  return same_group(group, other.group) && coeffs == other.coeffs;
}

BurnsideElement zero_element(const GroupPtr& g) {
  return BurnsideElement{g, IntVec(group_data(g).num_classes(), 0)};
}

BurnsideElement basis_element(const GroupPtr& g, int class_index) {
  auto x = zero_element(g);
  x.coeffs.at(class_index) = 1;
  return x;
}

BurnsideElement one_element(const GroupPtr& g) {
  // The class of G itself is last in the canonical order.
  return basis_element(g, group_data(g).num_classes() - 1);
}

BurnsideElement element_from_coeffs(const GroupPtr& g, IntVec coeffs) {
  if (static_cast<int>(coeffs.size()) != group_data(g).num_classes())
    throw GroupMismatch("coefficient vector length does not match the number of subgroup classes");
  return BurnsideElement{g, std::move(coeffs)};
}

namespace {
void check_same_space(const BurnsideElement& a, const BurnsideElement& b) {
  if (!same_group(a.group, b.group) || a.coeffs.size() != b.coeffs.size())
    throw GroupMismatch("elements live over different groups");
}
}  // namespace

BurnsideElement operator+(const BurnsideElement& a, const BurnsideElement& b) {
  check_same_space(a, b);
  BurnsideElement out = a;
  for (size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] += b.coeffs[i];
  return out;
}

BurnsideElement operator-(const BurnsideElement& a, const BurnsideElement& b) {
  check_same_space(a, b);
  BurnsideElement out = a;
  for (size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] -= b.coeffs[i];
  return out;
}

BurnsideElement operator-(const BurnsideElement& a) {
  BurnsideElement out = a;
  for (auto& c : out.coeffs) c = -c;
  return out;
}

BurnsideElement operator*(const Int& c, const BurnsideElement& a) {
  BurnsideElement out = a;
  for (auto& x : out.coeffs) x *= c;
  return out;
}

MarkVector marks_of(const BurnsideElement& x) {
  const auto& data = group_data(x.group);
  const auto& m = data.marks().marks;
  const int r = data.num_classes();
  if (static_cast<int>(x.coeffs.size()) != r) throw GroupMismatch("coefficient vector has wrong length");
  IntVec values(r, 0);
  for (int i = 0; i < r; ++i) {
    if (x.coeffs[i] == 0) continue;
    for (int j = 0; j < r; ++j) values[j] += x.coeffs[i] * m[i][j];
  }
  return MarkVector{x.group, std::move(values)};
}

BurnsideElement from_marks(const MarkVector& v) {
  const auto& data = group_data(v.group);
  const auto& m = data.marks().marks;
  const int r = data.num_classes();
  if (static_cast<int>(v.values.size()) != r) throw GroupMismatch("mark vector has wrong length");

  // Back-substitute from the last class (the class of G) downward; the
  // system is triangular because a mark [G/H] at K vanishes unless K is
  // subconjugate to H. Carry exact rationals so that when some coefficient
  // comes out fractional we can keep going and report the earliest
  // (canonical-order) offender.
  IntVec num(r, 0);
  IntVec den(r, 1);
  int first_fractional = -1;
  for (int j = r - 1; j >= 0; --j) {
    // residual = v[j] - sum_{i>j} c_i * m[i][j], over a common denominator
    Int res_num = v.values[j];
    Int res_den = 1;
    for (int i = j + 1; i < r; ++i) {
      if (num[i] == 0 || m[i][j] == 0) continue;
      // res = res - (num[i]/den[i]) * m[i][j]
      Int add_num = num[i] * m[i][j];
      Int add_den = den[i];
      res_num = res_num * add_den - add_num * res_den;
      res_den = res_den * add_den;
      Int g = boost::multiprecision::gcd(boost::multiprecision::abs(res_num), res_den);
      if (g > 1) {
        res_num /= g;
        res_den /= g;
      }
    }
    // c_j = res / m[j][j]
    Int cd = res_den * m[j][j];
    Int g = boost::multiprecision::gcd(boost::multiprecision::abs(res_num), cd);
    if (g > 1) {
      res_num /= g;
      cd /= g;
    }
    if (cd < 0) {
      cd = -cd;
      res_num = -res_num;
    }
    num[j] = res_num;
    den[j] = cd;
    if (cd != 1) first_fractional = j;
  }
  if (first_fractional >= 0)
    throw NotInImage("mark vector is not in the image of the mark homomorphism; first fractional "
                     "coefficient at subgroup class " +
                         std::to_string(first_fractional),
                     first_fractional);
  return BurnsideElement{v.group, std::move(num)};
}

BurnsideElement multiply(const BurnsideElement& a, const BurnsideElement& b) {
  check_same_space(a, b);
  MarkVector ma = marks_of(a), mb = marks_of(b);
  for (size_t j = 0; j < ma.values.size(); ++j) ma.values[j] *= mb.values[j];
  try {
    return from_marks(MarkVector{a.group, std::move(ma.values)});
  } catch (const NotInImage&) {
    throw std::logic_error("defect: product of mark vectors left the mark image");
  }
}

BurnsideElement operator*(const BurnsideElement& a, const BurnsideElement& b) { return multiply(a, b); }

Int augmentation(const BurnsideElement& x) {
  const auto& data = group_data(x.group);
  const auto& m = data.marks().marks;
  Int total = 0;
  for (size_t i = 0; i < x.coeffs.size(); ++i) total += x.coeffs[i] * m[i][0];
  return total;
}

BurnsideElement restrict_along(const GroupHom& f, const BurnsideElement& y) {
  if (!same_group(f.target, y.group)) throw GroupMismatch("element does not live over the hom target");
  const auto& src = group_data(f.source);
  const auto& tgt = group_data(y.group);
  MarkVector my = marks_of(y);
  IntVec values(src.num_classes());
  for (int i = 0; i < src.num_classes(); ++i) {
    Subgroup image = image_subgroup(f, src.classes().classes[i].representative);
    values[i] = my.values[tgt.classes().class_of(image)];
  }
  try {
    return from_marks(MarkVector{f.source, std::move(values)});
  } catch (const NotInImage&) {
    throw std::logic_error("defect: transported marks left the mark image under restriction");
  }
}

BurnsideElement induce_along(const GroupHom& theta, const BurnsideElement& x) {
  if (!same_group(theta.source, x.group)) throw GroupMismatch("element does not live over the hom source");
  if (!theta.is_injective()) throw NotInjective("induction requires an injective homomorphism");
  const auto& src = group_data(x.group);
  const auto& tgt = group_data(theta.target);
  BurnsideElement out = zero_element(theta.target);
  for (int i = 0; i < src.num_classes(); ++i) {
    if (x.coeffs[i] == 0) continue;
    Subgroup image = image_subgroup(theta, src.classes().classes[i].representative);
    out.coeffs[tgt.classes().class_of(image)] += x.coeffs[i];
  }
  return out;
}

}  // namespace burnside
