#include <doctest.h>

#include <random>
#include <set>

#include "burnside/bisets.hpp"
#include "burnside/burnside_ring.hpp"
#include "burnside/errors.hpp"
#include "burnside/filtration.hpp"
#include "burnside/group.hpp"

using namespace burnside;

namespace {

GroupHom first_injective(const GroupPtr& src, const GroupPtr& dst) {
  for (const GroupHom& f : homomorphisms_between(src, dst)) {
    if (f.is_injective()) return f;
  }
  FAIL("no injective homomorphism available");
  return identity_hom(src);
}

GroupHom first_surjection(const GroupPtr& src, const GroupPtr& dst) {
  for (const GroupHom& f : homomorphisms_between(src, dst)) {
    if (static_cast<int>(hom_image(f).size()) == dst->order) return f;
  }
  FAIL("no surjective homomorphism available");
  return identity_hom(src);
}

}  // namespace

TEST_CASE("biset space dimensions and labels") {
  GroupPtr triv = catalog_group("trivial");
  GroupPtr c2 = catalog_group("C2");
  GroupPtr c4 = catalog_group("C4");
  GroupPtr v4 = catalog_group("V4");
  GroupPtr d8 = catalog_group("D8");
  GroupPtr c3 = catalog_group("C3");
  GroupPtr s3 = catalog_group("S3");

  CHECK(biset_space(c2, c2).num_basis() == 3);
  CHECK(biset_space(c4, c2).num_basis() == 5);
  CHECK(biset_space(c2, c4).num_basis() == 3);
  CHECK(biset_space(v4, c2).num_basis() == 11);
  CHECK(biset_space(c3, s3).num_basis() == 3);
  CHECK(biset_space(s3, c3).num_basis() == 5);
  CHECK(biset_space(s3, c2).num_basis() == 6);
  // Against the trivial group: one basis class per subgroup class of the
  // other side (right) or exactly one class (left).
  CHECK(biset_space(d8, triv).num_basis() == 8);
  CHECK(biset_space(triv, d8).num_basis() == 1);

  const BisetSpace& sp = biset_space(v4, c2);
  REQUIRE(sp.basis_labels.size() == 11);
  std::set<std::string> distinct(sp.basis_labels.begin(), sp.basis_labels.end());
  CHECK(distinct.size() == 11);
  for (const auto& label : sp.basis_labels) {
    CHECK(label.find("K=") != std::string::npos);
    CHECK(label.find("phi") != std::string::npos);
  }
  for (int pos = 0; pos < sp.num_basis(); ++pos) {
    CHECK(sp.pos_of_class(sp.basis_classes[pos]) == pos);
    CHECK(sp.representative(pos).order() >= 1);
  }
  // The space cache hands back the same object for the same group objects.
  CHECK(&biset_space(v4, c2) == &sp);
}

TEST_CASE("biset element construction and arithmetic") {
  GroupPtr c2a = catalog_group("C2");
  GroupPtr c2b = catalog_group("C2");
  GroupPtr c3 = catalog_group("C3");

  BisetElement z = zero_biset(c2a, c2a);
  CHECK(z.coeffs == IntVec{0, 0, 0});
  BisetElement b0 = biset_basis(c2a, c2a, 0);
  BisetElement b1 = biset_basis(c2a, c2a, 1);
  CHECK((b0 + b1).coeffs == IntVec{1, 1, 0});
  CHECK((Int(2) * b0 - b0).coeffs == IntVec{1, 0, 0});
  CHECK((-b1).coeffs == IntVec{0, -1, 0});

  // The diagonal subgroup of C2×C2 is the identity biset.
  CHECK(biset_from_subgroup(c2a, c2a, {0, 3}) == identity_biset(c2a));
  // {e}×C2 is not right-free.
  CHECK_THROWS_AS(biset_from_subgroup(c2a, c2a, {0, 1}), Error);
  // Not a subgroup at all.
  CHECK_THROWS_AS(biset_from_subgroup(c2a, c2a, {0, 1, 2}), Error);

  // Structural rebasing across equal tables, rejection across different ones.
  BisetElement moved = rebase_biset(b0, c2b, c2b);
  CHECK(moved.left.get() == c2b.get());
  CHECK(moved.coeffs == b0.coeffs);
  CHECK(moved == b0);  // equality is structural
  CHECK_THROWS_AS(rebase_biset(b0, c3, c2b), GroupMismatch);
}

TEST_CASE("composition routes agree on basis pairs") {
  GroupPtr c2 = catalog_group("C2");
  GroupPtr c3 = catalog_group("C3");
  GroupPtr s3 = catalog_group("S3");
  for (int s = 0; s < biset_space(c2, c2).num_basis(); ++s) {
    for (int t = 0; t < biset_space(c2, c2).num_basis(); ++t) {
      BisetElement a = biset_basis(c2, c2, s);
      BisetElement b = biset_basis(c2, c2, t);
      CHECK(compose(a, b) == compose_double_coset(a, b));
    }
  }
  for (int s = 0; s < biset_space(c3, s3).num_basis(); ++s) {
    for (int t = 0; t < biset_space(s3, c2).num_basis(); ++t) {
      BisetElement a = biset_basis(c3, s3, s);
      BisetElement b = biset_basis(s3, c2, t);
      CHECK(compose(a, b) == compose_double_coset(a, b));
    }
  }
}

TEST_CASE("identity bisets are two-sided units") {
  GroupPtr v4 = catalog_group("V4");
  GroupPtr c2 = catalog_group("C2");
  GroupPtr c3 = catalog_group("C3");
  GroupPtr s3 = catalog_group("S3");
  for (int pos = 0; pos < biset_space(v4, c2).num_basis(); ++pos) {
    BisetElement x = biset_basis(v4, c2, pos);
    CHECK(compose(identity_biset(v4), x) == x);
    CHECK(compose(x, identity_biset(c2)) == x);
  }
  for (int pos = 0; pos < biset_space(c3, s3).num_basis(); ++pos) {
    BisetElement x = biset_basis(c3, s3, pos);
    CHECK(compose(identity_biset(c3), x) == x);
    CHECK(compose(x, identity_biset(s3)) == x);
    CHECK(compose_double_coset(identity_biset(c3), x) == x);
    CHECK(compose_double_coset(x, identity_biset(s3)) == x);
  }
}

TEST_CASE("composition is associative and bilinear") {
  GroupPtr c2 = catalog_group("C2");
  GroupPtr v4 = catalog_group("V4");
  const BisetSpace& sab = biset_space(c2, v4);
  const BisetSpace& sbc = biset_space(v4, c2);
  const BisetSpace& scc = biset_space(c2, c2);
  for (int i = 0; i < sab.num_basis(); ++i) {
    for (int j = 0; j < sbc.num_basis(); ++j) {
      for (int k = 0; k < scc.num_basis(); ++k) {
        BisetElement a = biset_basis(c2, v4, i);
        BisetElement b = biset_basis(v4, c2, j);
        BisetElement c = biset_basis(c2, c2, k);
        CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
      }
    }
  }

  std::mt19937 rng(17);
  std::uniform_int_distribution<int> d(-3, 3);
  auto random_biset = [&](const GroupPtr& l, const GroupPtr& r) {
    IntVec coeffs(static_cast<std::size_t>(biset_space(l, r).num_basis()));
    for (auto& c : coeffs) c = d(rng);
    return BisetElement{l, r, coeffs};
  };
  for (int trial = 0; trial < 10; ++trial) {
    BisetElement a = random_biset(c2, v4);
    BisetElement a2 = random_biset(c2, v4);
    BisetElement b = random_biset(v4, c2);
    CHECK(compose(a + a2, b) == compose(a, b) + compose(a2, b));
    CHECK(compose(a, b + b) == Int(2) * compose(a, b));
    CHECK(compose(Int(3) * a, b) == Int(3) * compose(a, b));
  }
}

TEST_CASE("composition rejects or rebases mismatched middles") {
  GroupPtr v4 = catalog_group("V4");
  GroupPtr c2a = catalog_group("C2");
  GroupPtr c2b = catalog_group("C2");
  GroupPtr c3 = catalog_group("C3");
  BisetElement a = biset_basis(v4, c2a, 0);
  // Structurally equal middle groups compose fine.
  BisetElement b = biset_basis(c2b, c3, 0);
  CHECK_NOTHROW(compose(a, b));
  CHECK(compose(a, b) == compose(a, rebase_biset(b, c2a, c3)));
  // A genuinely different middle is an error.
  BisetElement c = biset_basis(c3, c3, 0);
  CHECK_THROWS_AS(compose(a, c), GroupMismatch);
  CHECK_THROWS_AS(compose_double_coset(a, c), GroupMismatch);
}

TEST_CASE("restriction and transfer arrows compose functorially") {
  GroupPtr c2 = catalog_group("C2");
  GroupPtr v4 = catalog_group("V4");
  GroupPtr d8 = catalog_group("D8");

  // Graphs of homs: phi then psi composes to psi∘phi.
  GroupHom phi = first_injective(c2, v4);
  GroupHom psi = first_surjection(v4, c2);
  CHECK(compose(hom_biset(phi), hom_biset(psi)) == hom_biset(compose_homs(phi, psi)));
  GroupHom auto1 = make_hom(v4, v4, {0, 2, 1, 3});
  GroupHom auto2 = make_hom(v4, v4, {0, 1, 3, 2});
  CHECK(compose(hom_biset(auto1), hom_biset(auto2)) ==
        hom_biset(compose_homs(auto1, auto2)));

  // Transfers stack contravariantly: theta1: V4 -> D8 after theta2: C2 -> V4.
  GroupHom theta2 = first_injective(c2, v4);
  GroupHom theta1 = first_injective(v4, d8);
  CHECK(compose(transfer_biset(theta1), transfer_biset(theta2)) ==
        transfer_biset(compose_homs(theta2, theta1)));

  // hom_biset of the identity is the identity biset.
  CHECK(hom_biset(identity_hom(v4)) == identity_biset(v4));
  CHECK(transfer_biset(identity_hom(v4)) == identity_biset(v4));
  CHECK_THROWS_AS(transfer_biset(trivial_hom(c2, v4)), NotInjective);
}

TEST_CASE("quotient to the one-sided ring intertwines the arrows") {
  GroupPtr c2 = catalog_group("C2");
  GroupPtr c3 = catalog_group("C3");
  GroupPtr v4 = catalog_group("V4");
  GroupPtr d8 = catalog_group("D8");
  GroupPtr s3 = catalog_group("S3");

  CHECK(quotient_to_burnside(identity_biset(v4)) == one_element(v4));
  CHECK(quotient_to_burnside(hom_biset(first_surjection(v4, c2))) == one_element(v4));
  // transfer of C3 into S3 collapses to [S3/C3], which is class 2.
  CHECK(quotient_to_burnside(transfer_biset(first_injective(c3, s3))) ==
        basis_element(s3, 2));

  // Additivity.
  BisetElement sum = biset_basis(v4, c2, 1) + Int(2) * biset_basis(v4, c2, 4);
  CHECK(quotient_to_burnside(sum) ==
        quotient_to_burnside(biset_basis(v4, c2, 1)) +
            Int(2) * quotient_to_burnside(biset_basis(v4, c2, 4)));

  // Composing with a restriction arrow on the left is restriction of the
  // quotient; with a transfer arrow it is induction. These tie the biset
  // calculus to the ring operations.
  GroupHom phi = first_injective(c2, v4);
  GroupHom theta = first_injective(v4, d8);
  for (int pos = 0; pos < biset_space(v4, c2).num_basis(); ++pos) {
    BisetElement t = biset_basis(v4, c2, pos);
    CHECK(quotient_to_burnside(compose(hom_biset(phi), t)) ==
          restrict_along(phi, quotient_to_burnside(t)));
    CHECK(quotient_to_burnside(compose(transfer_biset(theta), t)) ==
          induce_along(theta, quotient_to_burnside(t)));
  }
}

TEST_CASE("restriction after transfer over a central index-2 embedding") {
  GroupPtr c2 = catalog_group("C2");
  GroupPtr v4 = catalog_group("V4");
  GroupHom emb = first_injective(c2, v4);

  BisetElement res_ind = compose(hom_biset(emb), transfer_biset(emb));
  CHECK(res_ind == Int(2) * identity_biset(c2));

  BisetElement ind_res = compose(transfer_biset(emb), hom_biset(emb));
  // Its right quotient is [V4/image], the class of the embedded C2.
  const GroupData& data = group_data(v4);
  int cls = data.classes().class_of(image_subgroup(emb, full_subgroup(c2)));
  CHECK(quotient_to_burnside(ind_res) == basis_element(v4, cls));
}

TEST_CASE("bivariant filtration lattices") {
  GroupPtr triv = catalog_group("trivial");
  GroupPtr c2 = catalog_group("C2");
  GroupPtr v4 = catalog_group("V4");

  IntegerLattice biv1 = jn_bivariant(v4, c2, 1);
  CHECK(biv1.ambient_rank == 11);
  CHECK(biv1.rank() == 7);
  CHECK(jn_bivariant(v4, c2, 0).rank() == 10);
  // Past the closing level only the quotient's kernel survives: 11 classes
  // mapping onto 5, so rank 6.
  CHECK(jn_bivariant(v4, c2, 2).rank() == 6);

  // Against the trivial right group the bivariant lattice IS the ideal.
  for (int n = 0; n <= 2; ++n) {
    CHECK(lattice_equal(jn_bivariant(v4, triv, n), jn_ideal(v4, n)));
  }

  // Membership is exactly "the right quotient lands in J_1", in both
  // directions, on arbitrary vectors.
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> d(-2, 2);
  for (int trial = 0; trial < 60; ++trial) {
    IntVec coeffs(11);
    for (auto& c : coeffs) c = d(rng);
    if (trial % 2 == 0) {
      // Half the trials start from a genuine member.
      coeffs.assign(11, 0);
      for (const auto& row : biv1.basis) {
        Int w = d(rng);
        for (int j = 0; j < 11; ++j) coeffs[j] += w * row[j];
      }
    }
    BisetElement x{v4, c2, coeffs};
    CHECK(lattice_contains(biv1, coeffs) == jn_membership(quotient_to_burnside(x), 1));
  }
}

TEST_CASE("right transfer composition does not preserve the filtration") {
  // The bivariant lattice is the preimage of J_n under the right quotient.
  // Quotients are blind to which homomorphism a graph subgroup encodes, and
  // composing with a transfer on the right probes exactly that information,
  // so membership can be destroyed.  This is the smallest witness: the
  // difference of two involution graphs in A(C2,V4) has quotient zero (hence
  // lies in every level), yet composing with the transfer along one of those
  // involutions lands outside J_1.
  GroupPtr c2 = catalog_group("C2");
  GroupPtr v4 = catalog_group("V4");
  std::vector<GroupHom> embs;
  for (const GroupHom& f : homomorphisms_between(c2, v4)) {
    if (f.is_injective()) embs.push_back(f);
  }
  REQUIRE(embs.size() == 3);

  BisetElement s = hom_biset(embs[0]) - hom_biset(embs[1]);
  CHECK(quotient_to_burnside(s) == zero_element(c2));
  for (int n = 0; n <= 2; ++n) {
    CHECK(lattice_contains(jn_bivariant(c2, v4, n), s.coeffs));
  }

  // Composing with a restriction arrow on the right leaves the quotient
  // untouched, so membership survives at every level.
  BisetElement via_hom = compose(s, hom_biset(first_surjection(v4, c2)));
  CHECK(quotient_to_burnside(via_hom) == zero_element(c2));
  CHECK(lattice_contains(jn_bivariant(c2, c2, 2), via_hom.coeffs));

  // The transfer along the first involution: the graph over that involution
  // contributes two copies of the diagonal class, the graph over the other
  // one a single free class.  Both composition routes agree on this.
  BisetElement t = transfer_biset(embs[0]);
  BisetElement moved = compose(s, t);
  CHECK(moved == compose_double_coset(s, t));
  CHECK(moved.coeffs == IntVec{-1, 0, 2});

  BurnsideElement q = quotient_to_burnside(moved);
  CHECK(q == element_from_coeffs(c2, {-1, 2}));
  CHECK(jn_membership(q, 0));
  CHECK_FALSE(jn_membership(q, 1));
  CHECK(lattice_contains(jn_bivariant(c2, c2, 0), moved.coeffs));
  CHECK_FALSE(lattice_contains(jn_bivariant(c2, c2, 1), moved.coeffs));
}
