#include <doctest.h>

#include "burnside/bisets.hpp"
#include "burnside/burnside_ring.hpp"
#include "burnside/config.hpp"
#include "burnside/errors.hpp"
#include "burnside/group.hpp"
#include "burnside/oracle.hpp"

using namespace burnside;

namespace {

struct PointCapGuard {
  long long saved = config::point_cap();
  ~PointCapGuard() { config::set_point_cap(saved); }
};

}  // namespace

TEST_CASE("coset sets are valid actions with the right orbit type") {
  GroupPtr c4 = catalog_group("C4");
  oracle::ConcreteGSet x = oracle::coset_set(trivial_subgroup(c4));
  CHECK(x.size == 4);
  CHECK_NOTHROW(oracle::validate_action(x));
  CHECK(oracle::orbit_decompose(x) == basis_element(c4, 0));

  GroupPtr s3 = catalog_group("S3");
  const GroupData& data = group_data(s3);
  for (int i = 0; i < data.num_classes(); ++i) {
    const Subgroup& h = data.classes().classes[i].representative;
    oracle::ConcreteGSet cs = oracle::coset_set(h);
    CHECK(cs.size == s3->order / h.order());
    CHECK_NOTHROW(oracle::validate_action(cs));
    CHECK(oracle::orbit_decompose(cs) == basis_element(s3, i));
  }
}

TEST_CASE("fixed point counts reproduce the table of marks") {
  for (const char* name : {"S3", "D8", "A4"}) {
    GroupPtr g = catalog_group(name);
    const GroupData& data = group_data(g);
    for (int i = 0; i < data.num_classes(); ++i) {
      oracle::ConcreteGSet cs = oracle::coset_set(data.classes().classes[i].representative);
      for (int j = 0; j < data.num_classes(); ++j) {
        const Subgroup& k = data.classes().classes[j].representative;
        CHECK(Int(oracle::fixed_points(cs, k)) == data.marks().marks[i][j]);
      }
    }
  }
}

TEST_CASE("products decompose like ring products") {
  GroupPtr c2 = catalog_group("C2");
  oracle::ConcreteGSet free2 = oracle::coset_set(trivial_subgroup(c2));
  oracle::ConcreteGSet sq = oracle::product(free2, free2);
  CHECK(sq.size == 4);
  CHECK(oracle::orbit_decompose(sq).coeffs == IntVec{2, 0});

  GroupPtr d8 = catalog_group("D8");
  const GroupData& data = group_data(d8);
  for (int i = 0; i < data.num_classes(); ++i) {
    for (int j = 0; j < data.num_classes(); ++j) {
      oracle::ConcreteGSet a = oracle::coset_set(data.classes().classes[i].representative);
      oracle::ConcreteGSet b = oracle::coset_set(data.classes().classes[j].representative);
      CHECK(oracle::orbit_decompose(oracle::product(a, b)) ==
            basis_element(d8, i) * basis_element(d8, j));
    }
  }
}

TEST_CASE("invalid actions are rejected with a witness") {
  GroupPtr c2 = catalog_group("C2");
  oracle::ConcreteGSet bad;
  bad.group = c2;
  bad.size = 2;
  bad.action = {{1, 0}, {0, 1}};  // identity row is wrong
  CHECK_THROWS_AS(oracle::validate_action(bad), InvalidAction);

  oracle::ConcreteGSet bad2;
  bad2.group = c2;
  bad2.size = 2;
  bad2.action = {{0, 1}, {0, 0}};  // g*(g*1) = 0 but identity sends 1 to 1
  CHECK_THROWS_AS(oracle::validate_action(bad2), InvalidAction);

  oracle::ConcreteGSet good;
  good.group = c2;
  good.size = 2;
  good.action = {{0, 1}, {1, 0}};
  CHECK_NOTHROW(oracle::validate_action(good));
}

TEST_CASE("the point cap bounds concrete products") {
  GroupPtr c4 = catalog_group("C4");
  oracle::ConcreteGSet x = oracle::coset_set(trivial_subgroup(c4));
  PointCapGuard guard;
  config::set_point_cap(10);
  CHECK_THROWS_AS(oracle::product(x, x), TooLarge);  // 16 points > 10
  config::set_point_cap(16);
  CHECK_NOTHROW(oracle::product(x, x));
}

TEST_CASE("biset realization, right quotient, and twisted product") {
  GroupPtr c4 = catalog_group("C4");
  ProductGroup p = direct_product(c4, c4);
  // The diagonal subgroup of C4×C4, via product indices g*4+g.
  std::vector<int> diag;
  for (int g = 0; g < 4; ++g) diag.push_back(product_index(g, g, 4));
  Subgroup delta{p.group, diag};
  oracle::ConcreteGSet realized = oracle::realize_biset(delta);
  CHECK(realized.size == 4);  // |C4×C4| / |diag|
  CHECK_NOTHROW(oracle::validate_action(realized));

  // Collapsing the right action of the identity biset leaves one point.
  oracle::ConcreteGSet collapsed = oracle::h_quotient(realized, c4, c4);
  CHECK(collapsed.size == 1);
  CHECK(oracle::orbit_decompose(collapsed) == one_element(c4));

  // Twisted product of the identity biset with itself is itself.
  oracle::ConcreteGSet twisted =
      oracle::twisted_product(realized, realized, c4, c4, c4, p.group);
  CHECK(twisted.size == 4);
  CHECK(oracle::orbit_decompose(twisted) == oracle::orbit_decompose(realized));

  // A free biset times a free biset: [C2×C2/1] over itself has 4 points,
  // twisted over the middle C2 gives 4*4/2 = 8 points.
  GroupPtr c2 = catalog_group("C2");
  ProductGroup q = direct_product(c2, c2);
  oracle::ConcreteGSet free_biset = oracle::realize_biset(trivial_subgroup(q.group));
  oracle::ConcreteGSet tw =
      oracle::twisted_product(free_biset, free_biset, c2, c2, c2, q.group);
  CHECK(tw.size == 8);
  CHECK_NOTHROW(oracle::validate_action(tw));
}
