#include <doctest.h>

#include <random>

#include "burnside/burnside_ring.hpp"
#include "burnside/errors.hpp"
#include "burnside/group.hpp"

using namespace burnside;

namespace {

IntVec iv(std::initializer_list<long long> xs) {
  IntVec out;
  for (long long x : xs) out.emplace_back(x);
  return out;
}

BurnsideElement random_element(std::mt19937& rng, const GroupPtr& g) {
  std::uniform_int_distribution<int> d(-4, 4);
  IntVec coeffs(static_cast<std::size_t>(group_data(g).num_classes()));
  for (auto& c : coeffs) c = d(rng);
  return element_from_coeffs(g, coeffs);
}

}  // namespace

TEST_CASE("pinned tables of marks") {
  CHECK(group_data(catalog_group("C2")).marks().marks == IntMat{iv({2, 0}), iv({1, 1})});

  CHECK(group_data(catalog_group("V4")).marks().marks ==
        IntMat{iv({4, 0, 0, 0, 0}), iv({2, 2, 0, 0, 0}), iv({2, 0, 2, 0, 0}),
               iv({2, 0, 0, 2, 0}), iv({1, 1, 1, 1, 1})});

  CHECK(group_data(catalog_group("A4")).marks().marks ==
        IntMat{iv({12, 0, 0, 0, 0}), iv({6, 2, 0, 0, 0}), iv({4, 0, 1, 0, 0}),
               iv({3, 3, 0, 3, 0}), iv({1, 1, 1, 1, 1})});

  CHECK(group_data(catalog_group("trivial")).marks().marks == IntMat{iv({1})});
}

TEST_CASE("structural facts about the marks matrix") {
  for (const char* name : {"C6", "D8", "Q8", "S3", "S4", "E(2,3)"}) {
    GroupPtr g = catalog_group(name);
    const GroupData& data = group_data(g);
    const IntMat& m = data.marks().marks;
    const int k = data.num_classes();
    for (int i = 0; i < k; ++i) {
      for (int j = i + 1; j < k; ++j) CHECK(m[i][j] == 0);  // lower triangular
      CHECK(m[i][i] == data.classes().classes[i].weyl_order);
      CHECK(m[i][0] == g->order / data.classes().classes[i].representative.order());
      CHECK(m[k - 1][i] == 1);  // [G/G] fixes one point everywhere
      for (int j = 0; j <= i; ++j) CHECK(m[i][j] >= 0);
    }
  }
}

TEST_CASE("table_of_marks and compute_marks_matrix agree with the cache") {
  GroupPtr g = catalog_group("D8");
  const GroupData& data = group_data(g);
  CHECK(&group_data(g) == &data);  // cached per object
  CHECK(table_of_marks(g).marks == data.marks().marks);
  CHECK(compute_marks_matrix(g, data.classes()) == data.marks().marks);
}

TEST_CASE("element constructors and arithmetic") {
  GroupPtr v4 = catalog_group("V4");
  CHECK(zero_element(v4).coeffs == iv({0, 0, 0, 0, 0}));
  CHECK(basis_element(v4, 2).coeffs == iv({0, 0, 1, 0, 0}));
  CHECK(one_element(v4).coeffs == iv({0, 0, 0, 0, 1}));
  CHECK_THROWS_AS(element_from_coeffs(v4, iv({1, 2})), Error);
  CHECK_THROWS(basis_element(v4, 9));

  BurnsideElement a = element_from_coeffs(v4, iv({1, -2, 0, 3, 1}));
  BurnsideElement b = basis_element(v4, 0);
  CHECK((a + b).coeffs == iv({2, -2, 0, 3, 1}));
  CHECK((a - a).coeffs == zero_element(v4).coeffs);
  CHECK((-a).coeffs == iv({-1, 2, 0, -3, -1}));
  CHECK((Int(3) * b).coeffs == iv({3, 0, 0, 0, 0}));
}

TEST_CASE("marks round-trip exactly") {
  std::mt19937 rng(7);
  for (const char* name : {"V4", "D8", "A4", "S3"}) {
    GroupPtr g = catalog_group(name);
    for (int trial = 0; trial < 25; ++trial) {
      BurnsideElement x = random_element(rng, g);
      MarkVector mv = marks_of(x);
      CHECK(from_marks(mv) == x);
    }
    // Basis elements have their table row as mark vector.
    for (int i = 0; i < group_data(g).num_classes(); ++i) {
      CHECK(marks_of(basis_element(g, i)).values == group_data(g).marks().marks[i]);
    }
  }
}

TEST_CASE("mark vectors outside the image are rejected with the first bad class") {
  GroupPtr c2 = catalog_group("C2");
  MarkVector bad{c2, iv({1, 0})};  // would need half a free orbit
  CHECK_THROWS_AS(from_marks(bad), NotInImage);
  try {
    from_marks(bad);
  } catch (const NotInImage& e) {
    CHECK(e.first_fractional_class == 0);
  }
  // Over A4, (13,1,0,1,0) back-solves to integer coefficients everywhere
  // except the Klein class, so the report points at class 3.
  GroupPtr a4 = catalog_group("A4");
  try {
    from_marks(MarkVector{a4, iv({13, 1, 0, 1, 0})});
    FAIL("expected NotInImage");
  } catch (const NotInImage& e) {
    CHECK(e.first_fractional_class == 3);
  }
}

TEST_CASE("products of transitive sets") {
  GroupPtr c2 = catalog_group("C2");
  CHECK((basis_element(c2, 0) * basis_element(c2, 0)).coeffs == iv({2, 0}));

  GroupPtr v4 = catalog_group("V4");
  // Two distinct order-2 stabilizers intersect trivially: free orbit.
  CHECK((basis_element(v4, 1) * basis_element(v4, 2)).coeffs == iv({1, 0, 0, 0, 0}));
  // Same stabilizer doubles.
  CHECK((basis_element(v4, 1) * basis_element(v4, 1)).coeffs == iv({0, 2, 0, 0, 0}));
  CHECK((basis_element(v4, 0) * basis_element(v4, 0)).coeffs == iv({4, 0, 0, 0, 0}));
}

TEST_CASE("ring axioms on random elements") {
  std::mt19937 rng(21);
  for (const char* name : {"A4", "D8"}) {
    GroupPtr g = catalog_group(name);
    BurnsideElement one = one_element(g);
    for (int trial = 0; trial < 10; ++trial) {
      BurnsideElement x = random_element(rng, g);
      BurnsideElement y = random_element(rng, g);
      BurnsideElement z = random_element(rng, g);
      CHECK(x * y == y * x);
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * (y + z) == x * y + x * z);
      CHECK(x * one == x);
      CHECK(augmentation(x * y) == augmentation(x) * augmentation(y));
      CHECK(augmentation(x + y) == augmentation(x) + augmentation(y));
    }
  }
}

TEST_CASE("augmentation counts points") {
  GroupPtr a4 = catalog_group("A4");
  const GroupData& data = group_data(a4);
  for (int i = 0; i < data.num_classes(); ++i) {
    CHECK(augmentation(basis_element(a4, i)) ==
          a4->order / data.classes().classes[i].representative.order());
  }
}

TEST_CASE("operands over different groups are rejected") {
  GroupPtr a = catalog_group("C2");
  GroupPtr b = catalog_group("C3");
  CHECK_THROWS_AS(basis_element(a, 0) + basis_element(b, 0), GroupMismatch);
  CHECK_THROWS_AS(basis_element(a, 0) * basis_element(b, 0), GroupMismatch);
}

TEST_CASE("restriction along embeddings and quotients") {
  GroupPtr v4 = catalog_group("V4");
  GroupPtr a4 = catalog_group("A4");
  std::vector<int> invs;
  for (int x = 0; x < a4->order; ++x) {
    if (a4->element_order[x] == 2) invs.push_back(x);
  }
  GroupHom emb = make_hom(v4, a4, {0, invs[0], invs[1], a4->times(invs[0], invs[1])});

  // [A4/V4] restricted to the (normal) Klein subgroup is 3 trivial orbits.
  CHECK(restrict_along(emb, basis_element(a4, 3)).coeffs == iv({0, 0, 0, 0, 3}));
  // [A4/e] restricts to 3 free orbits.
  CHECK(restrict_along(emb, basis_element(a4, 0)).coeffs == iv({3, 0, 0, 0, 0}));

  // Restriction along the identity is the identity.
  std::mt19937 rng(5);
  BurnsideElement x = random_element(rng, a4);
  CHECK(restrict_along(identity_hom(a4), x) == x);

  // Restriction to the trivial group is the point count.
  GroupPtr triv = catalog_group("trivial");
  GroupHom into = make_hom(triv, a4, {0});
  CHECK(restrict_along(into, x).coeffs == IntVec{augmentation(x)});

  // Restriction is a ring homomorphism (also along non-injective maps).
  GroupPtr d8 = catalog_group("D8");
  GroupHom q = make_hom(d8, v4, {0, 1, 0, 1, 2, 3, 2, 3});
  for (int trial = 0; trial < 10; ++trial) {
    BurnsideElement u = random_element(rng, v4);
    BurnsideElement v = random_element(rng, v4);
    CHECK(restrict_along(q, u * v) == restrict_along(q, u) * restrict_along(q, v));
    CHECK(restrict_along(q, u + v) == restrict_along(q, u) + restrict_along(q, v));
    BurnsideElement s = random_element(rng, a4);
    BurnsideElement t = random_element(rng, a4);
    CHECK(restrict_along(emb, s * t) == restrict_along(emb, s) * restrict_along(emb, t));
  }
  CHECK(restrict_along(q, one_element(v4)) == one_element(d8));
}

TEST_CASE("induction along embeddings") {
  GroupPtr c2 = catalog_group("C2");
  GroupPtr c3 = catalog_group("C3");
  GroupPtr v4 = catalog_group("V4");
  GroupPtr s3 = catalog_group("S3");

  CHECK_THROWS_AS(induce_along(trivial_hom(c2, v4), one_element(c2)), NotInjective);

  // [C3/C3] pushed into S3 is [S3/C3]; [C3/e] becomes [S3/e].
  GroupHom theta;
  for (const GroupHom& f : homomorphisms_between(c3, s3)) {
    if (f.is_injective()) theta = f;
  }
  REQUIRE(theta.source != nullptr);
  CHECK(induce_along(theta, one_element(c3)).coeffs == iv({0, 0, 1, 0}));
  CHECK(induce_along(theta, basis_element(c3, 0)).coeffs == iv({1, 0, 0, 0}));

  // Additivity, and the Mackey/projection identities over C2 inside V4.
  GroupHom emb = make_hom(c2, v4, {0, 1});
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    BurnsideElement x = random_element(rng, c2);
    BurnsideElement y = random_element(rng, c2);
    CHECK(induce_along(emb, x + y) == induce_along(emb, x) + induce_along(emb, y));
    // res(ind(x)) = 2x for a central index-2 embedding.
    CHECK(restrict_along(emb, induce_along(emb, x)) == Int(2) * x);
    // Projection formula: ind(res(w) * x) = w * ind(x).
    BurnsideElement w = random_element(rng, v4);
    CHECK(induce_along(emb, restrict_along(emb, w) * x) == w * induce_along(emb, x));
  }

  // Induction along the identity is the identity.
  BurnsideElement z = random_element(rng, v4);
  CHECK(induce_along(identity_hom(v4), z) == z);
}
