#include "burnside/verification.hpp"

#include <array>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "burnside/bisets.hpp"
#include "burnside/burnside_ring.hpp"
#include "burnside/errors.hpp"
#include "burnside/filtration.hpp"
#include "burnside/oracle.hpp"
#include "burnside/parallel.hpp"

namespace burnside::verification {

namespace {

std::string rows_to_string(const IntMat& rows) {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) out << ", ";
    out << vec_to_string(rows[i]);
  }
  out << "}";
  return out.str();
}

// Times one check and folds exceptions into a failure entry.
void run_check(VerificationReport& report, const std::string& name, const std::string& claim,
               long long limit_ms, const std::function<bool(CheckResult&)>& body) {
  CheckResult r;
  r.name = name;
  r.claim = claim;
  r.limit_ms = limit_ms;
  auto t0 = std::chrono::steady_clock::now();
  try {
    r.pass = body(r);
  } catch (const std::exception& e) {
    r.pass = false;
    r.actual = std::string("exception: ") + e.what();
  }
  auto t1 = std::chrono::steady_clock::now();
  r.ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  if (r.ms > r.limit_ms) {
    r.pass = false;
    r.actual += " [exceeded " + std::to_string(r.limit_ms) + "ms time limit]";
  }
  report.checks.push_back(std::move(r));
}

// The A4 subgroup isomorphic to the Klein four-group: identity plus the
// three involutions. Returns the embedding V4 -> A4.
GroupHom klein_into_a4(const GroupPtr& v4, const GroupPtr& a4) {
  std::vector<int> invs;
  for (int x = 0; x < a4->order; ++x) {
    if (a4->element_order[x] == 2) invs.push_back(x);
  }
  // V4 catalog order: e, a, b, ab with ab = a*b.
  std::vector<int> images = {a4->identity, invs.at(0), invs.at(1),
                             a4->mul[invs.at(0)][invs.at(1)]};
  return make_hom(v4, a4, images);
}

// D8 -> V4, the quotient by the center: r -> a, s -> b.
GroupHom d8_central_quotient(const GroupPtr& d8, const GroupPtr& v4) {
  return make_hom(d8, v4, {0, 1, 0, 1, 2, 3, 2, 3});
}

int floor_log2(int n) {
  int l = 0;
  while ((1 << (l + 1)) <= n) ++l;
  return l;
}

IntVec random_coeffs(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> d(-3, 3);
  IntVec out(n);
  for (auto& c : out) c = d(rng);
  return out;
}

// A random integer combination of the lattice basis rows.
IntVec random_lattice_coeffs(std::mt19937& rng, const IntegerLattice& l) {
  std::uniform_int_distribution<int> d(-3, 3);
  IntVec coeffs(l.ambient_rank, 0);
  for (const auto& row : l.basis) {
    Int w = d(rng);
    for (int j = 0; j < l.ambient_rank; ++j) coeffs[j] += w * row[j];
  }
  return coeffs;
}

BurnsideElement random_lattice_element(std::mt19937& rng, const GroupPtr& g,
                                       const IntegerLattice& l) {
  return element_from_coeffs(g, random_lattice_coeffs(rng, l));
}

bool is_prime_int(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

}  // namespace

bool VerificationReport::all_pass() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

VerificationReport run_verification(const Expectations& e) {
  VerificationReport report;
  GroupPtr v4 = catalog_group("V4");
  GroupPtr a4 = catalog_group("A4");
  GroupPtr d8 = catalog_group("D8");

  run_check(report, "klein-j1-generator",
            "J_1 of the Klein four-group is free of rank 1 on the element g", 1000,
            [&](CheckResult& r) {
              IntegerLattice got = jn_ideal(v4, 1);
              IntegerLattice want = lattice_from_rows(5, {e.klein_generator});
              r.expected = rows_to_string(want.basis);
              r.actual = rows_to_string(got.basis);
              BurnsideElement g_elem = element_from_coeffs(v4, e.klein_generator);
              return lattice_equal(got, want) && jn_membership(g_elem, 1);
            });

  run_check(report, "klein-product-identity",
            "over the Klein four-group, 1+g equals the product of [G/C]-1 over the three "
            "order-2 classes, by mark arithmetic and by concrete orbit counting",
            1000, [&](CheckResult& r) {
              BurnsideElement one = one_element(v4);
              const GroupData& data = group_data(v4);

              // Route 1: table-of-marks multiplication.
              BurnsideElement by_marks = basis_element(v4, 1) - one;
              by_marks = by_marks * (basis_element(v4, 2) - one);
              by_marks = by_marks * (basis_element(v4, 3) - one);

              // Route 2: expand the product and evaluate every monomial
              // [V4/C_a]...[V4/C_b] as a concrete cartesian product of coset
              // sets, decomposed into orbits. Signs: (-1)^(3-|S|).
              std::array<oracle::ConcreteGSet, 3> cosets = {
                  oracle::coset_set(data.classes().classes[1].representative),
                  oracle::coset_set(data.classes().classes[2].representative),
                  oracle::coset_set(data.classes().classes[3].representative)};
              BurnsideElement by_orbits = zero_element(v4);
              for (int mask = 0; mask < 8; ++mask) {
                int bits = __builtin_popcount(static_cast<unsigned>(mask));
                BurnsideElement monomial = one;
                bool have_set = false;
                oracle::ConcreteGSet prod;
                for (int i = 0; i < 3; ++i) {
                  if (!(mask & (1 << i))) continue;
                  prod = have_set ? oracle::product(prod, cosets[i]) : cosets[i];
                  have_set = true;
                }
                if (have_set) monomial = oracle::orbit_decompose(prod);
                Int sign = ((3 - bits) % 2 == 0) ? 1 : -1;
                by_orbits = by_orbits + sign * monomial;
              }

              BurnsideElement want = element_from_coeffs(v4, e.klein_one_plus_g);
              BurnsideElement g_elem = element_from_coeffs(v4, e.klein_generator);
              r.expected = vec_to_string(want.coeffs);
              r.actual = vec_to_string(by_marks.coeffs) + " (marks), " +
                         vec_to_string(by_orbits.coeffs) + " (orbits)";
              return by_marks == want && by_orbits == want && by_marks == one + g_elem;
            });

  run_check(report, "a4-j1-lattice",
            "J_1 of the alternating group on 4 letters has the pinned rank-2 basis", 1000,
            [&](CheckResult& r) {
              IntegerLattice got = jn_ideal(a4, 1);
              IntegerLattice want = lattice_from_rows(5, e.a4_j1_generators);
              r.expected = rows_to_string(want.basis);
              r.actual = rows_to_string(got.basis);
              // The pinned generators are supposed to BE the canonical basis.
              return lattice_equal(got, want) && got.basis == e.a4_j1_generators;
            });

  run_check(report, "a4-to-klein-restriction",
            "the second J_1 generator of A4 restricts to g along the Klein subgroup", 1000,
            [&](CheckResult& r) {
              GroupHom emb = klein_into_a4(v4, a4);
              BurnsideElement y = element_from_coeffs(a4, e.a4_j1_generators.at(1));
              BurnsideElement got = restrict_along(emb, y);
              r.expected = vec_to_string(e.klein_generator);
              r.actual = vec_to_string(got.coeffs);
              return got.coeffs == e.klein_generator;
            });

  run_check(report, "d8-projection-pullback",
            "g pulls back along the central quotient of the dihedral group of order 8 to "
            "the pinned vector, which the order/normality rule reproduces",
            1000, [&](CheckResult& r) {
              GroupHom q = d8_central_quotient(d8, v4);
              BurnsideElement g_elem = element_from_coeffs(v4, e.klein_generator);
              BurnsideElement got = restrict_along(q, g_elem);
              // Rule: +1 at each order-4 class, -1 at the normal order-2
              // class (the center), -2 at the full group, 0 elsewhere.
              const GroupData& data = group_data(d8);
              IntVec rule(data.num_classes(), 0);
              for (int i = 0; i < data.num_classes(); ++i) {
                const SubgroupClass& c = data.classes().classes[i];
                if (c.representative.order() == 4) rule[i] = 1;
                if (c.representative.order() == 8) rule[i] = -2;
                if (c.representative.order() == 2 && c.conjugates.size() == 1) rule[i] = -1;
              }
              r.expected = vec_to_string(e.d8_pullback);
              r.actual = vec_to_string(got.coeffs);
              return got.coeffs == e.d8_pullback && rule == e.d8_pullback;
            });

  run_check(report, "linearization-kernel-matches-j1",
            "the kernel of linearization to permutation characters equals J_1 on the whole "
            "catalog suite",
            60000, [&](CheckResult& r) {
              r.expected = "lattices equal for all " + std::to_string(e.suite.size()) + " groups";
              std::string bad;
              for (const auto& name : e.suite) {
                GroupPtr g = catalog_group(name);
                if (!lattice_equal(linearization_kernel(g), jn_ideal(g, 1))) bad += " " + name;
              }
              r.actual = bad.empty() ? r.expected : ("mismatch at" + bad);
              return bad.empty();
            });

  run_check(report, "j0-matches-augmentation-kernel",
            "J_0 equals the kernel of the point-count map on the whole catalog suite", 5000,
            [&](CheckResult& r) {
              r.expected = "lattices equal for all " + std::to_string(e.suite.size()) + " groups";
              std::string bad;
              for (const auto& name : e.suite) {
                GroupPtr g = catalog_group(name);
                if (!lattice_equal(jn_ideal(g, 0), augmentation_kernel(g))) bad += " " + name;
              }
              r.actual = bad.empty() ? r.expected : ("mismatch at" + bad);
              return bad.empty();
            });

  run_check(report, "ideal-closure-functoriality-random",
            "random products stay in J_n, restriction and induction carry J_n into J_n, and "
            "the bivariant ideals absorb generating morphisms on both sides",
            60000, [&](CheckResult& r) {
              std::mt19937 rng(e.seed);
              long long instances = 0;
              long long violations = 0;
              std::string first;
              auto note = [&](const std::string& what) {
                ++violations;
                if (first.empty()) first = what;
              };

              // x*y closure, e.random_instances instances per small group.
              for (const auto& name : e.suite) {
                GroupPtr g = catalog_group(name);
                if (g->order > 16) continue;
                IntegerLattice ideals[3] = {jn_ideal(g, 0), jn_ideal(g, 1), jn_ideal(g, 2)};
                std::vector<int> levels;
                for (int n = 0; n < 3; ++n) {
                  if (!ideals[n].is_zero()) levels.push_back(n);
                }
                if (levels.empty()) continue;
                const GroupData& data = group_data(g);
                for (int inst = 0; inst < e.random_instances; ++inst) {
                  int n = levels[static_cast<std::size_t>(inst) % levels.size()];
                  BurnsideElement x = random_lattice_element(rng, g, ideals[n]);
                  BurnsideElement y = element_from_coeffs(
                      g, random_coeffs(rng, static_cast<std::size_t>(data.num_classes())));
                  ++instances;
                  if (!jn_membership(x * y, n)) {
                    note("product x*y left J_" + std::to_string(n) + "(" + name + ")");
                  }
                }
              }

              // Restriction along arbitrary homs, induction along embeddings.
              const std::pair<std::string, std::string> hom_pairs[] = {
                  {"C2", "C4"}, {"C4", "C2"}, {"C2", "V4"}, {"V4", "C2"}, {"V4", "D8"},
                  {"D8", "V4"}, {"S3", "C2"}, {"C6", "S3"}, {"S3", "S3"}, {"Q8", "V4"}};
              for (const auto& [src_name, dst_name] : hom_pairs) {
                GroupPtr src = catalog_group(src_name);
                GroupPtr dst = catalog_group(dst_name);
                for (const GroupHom& f : homomorphisms_between(src, dst)) {
                  for (int n = 0; n < 3; ++n) {
                    IntegerLattice l = jn_ideal(dst, n);
                    if (l.is_zero()) continue;
                    for (int inst = 0; inst < 5; ++inst) {
                      BurnsideElement x = random_lattice_element(rng, dst, l);
                      ++instances;
                      if (!jn_membership(restrict_along(f, x), n)) {
                        note("restriction " + dst_name + "->" + src_name + " left J_" +
                             std::to_string(n));
                      }
                    }
                  }
                }
              }
              const std::pair<std::string, std::string> embed_pairs[] = {
                  {"C2", "C4"}, {"C2", "V4"}, {"C4", "D8"}, {"V4", "D8"}, {"V4", "A4"},
                  {"C3", "S3"}, {"C3", "A4"}, {"C4", "Q8"}, {"C6", "C12"}, {"D8", "S4"}};
              for (const auto& [sub_name, big_name] : embed_pairs) {
                GroupPtr sub = catalog_group(sub_name);
                GroupPtr big = catalog_group(big_name);
                int used = 0;
                for (const GroupHom& f : homomorphisms_between(sub, big)) {
                  if (!f.is_injective() || ++used > 3) continue;
                  for (int n = 0; n < 3; ++n) {
                    IntegerLattice l = jn_ideal(sub, n);
                    if (l.is_zero()) continue;
                    for (int inst = 0; inst < 5; ++inst) {
                      BurnsideElement x = random_lattice_element(rng, sub, l);
                      ++instances;
                      if (!jn_membership(induce_along(f, x), n)) {
                        note("induction " + sub_name + "->" + big_name + " left J_" +
                             std::to_string(n));
                      }
                    }
                  }
                }
              }

              // Bivariant closure: compose a random member of J_n(G,H) with
              // generating morphisms on either side and test membership in the
              // matching bivariant ideal.
              GroupPtr c2 = catalog_group("C2");
              GroupPtr v4 = catalog_group("V4");
              const std::pair<std::string, std::string> biv_pairs[] = {
                  {"C2", "C2"}, {"V4", "C2"}, {"C2", "V4"}};
              for (const auto& [gl, gr] : biv_pairs) {
                GroupPtr gleft = catalog_group(gl);
                GroupPtr gright = catalog_group(gr);
                for (int n = 0; n <= 1; ++n) {
                  IntegerLattice biv = jn_bivariant(gleft, gright, n);
                  if (biv.is_zero()) continue;
                  for (int inst = 0; inst < 5; ++inst) {
                    BisetElement s{gleft, gright, random_lattice_coeffs(rng, biv)};
                    // Left: restriction arrow along a hom into G, and a
                    // transfer up an embedding of G.
                    for (const GroupHom& f : homomorphisms_between(c2, gleft)) {
                      ++instances;
                      BisetElement moved = compose(hom_biset(f), s);
                      if (!lattice_contains(jn_bivariant(c2, gright, n), moved.coeffs)) {
                        note("left hom arrow out of J_" + std::to_string(n) + "(" + gl +
                             "," + gr + ")");
                      }
                    }
                    for (const GroupHom& f : homomorphisms_between(gleft, v4)) {
                      if (!f.is_injective()) continue;
                      ++instances;
                      BisetElement moved = compose(transfer_biset(f), s);
                      if (!lattice_contains(jn_bivariant(v4, gright, n), moved.coeffs)) {
                        note("left transfer arrow out of J_" + std::to_string(n) + "(" + gl +
                             "," + gr + ")");
                      }
                    }
                    // Right: a hom out of H, and a transfer from a subgroup
                    // of H.
                    for (const GroupHom& f : homomorphisms_between(gright, c2)) {
                      ++instances;
                      BisetElement moved = compose(s, hom_biset(f));
                      if (!lattice_contains(jn_bivariant(gleft, c2, n), moved.coeffs)) {
                        note("right hom arrow out of J_" + std::to_string(n) + "(" + gl +
                             "," + gr + ")");
                      }
                    }
                    for (const GroupHom& f : homomorphisms_between(c2, gright)) {
                      if (!f.is_injective()) continue;
                      ++instances;
                      BisetElement moved = compose(s, transfer_biset(f));
                      if (!lattice_contains(jn_bivariant(gleft, c2, n), moved.coeffs)) {
                        note("right transfer arrow: element of J_" + std::to_string(n) + "(" +
                             gl + "," + gr + ") composed with the transfer along an embedding "
                             "C2->" + gr + " leaves the bivariant ideal");
                      }
                    }
                  }
                }
              }

              r.expected = "every sampled instance stays in the matching ideal";
              r.actual = violations == 0
                             ? (std::to_string(instances) + " instances, all inside")
                             : (std::to_string(violations) + " of " + std::to_string(instances) +
                                " instances escaped; first: " + first);
              return violations == 0;
            });

  run_check(report, "oracle-equivalence",
            "mark arithmetic agrees with explicit orbit counting, and the double coset "
            "composition matches concrete twisted-product orbits",
            120000, [&](CheckResult& r) {
              std::string bad;
              for (const auto& name : e.suite) {
                GroupPtr g = catalog_group(name);
                const GroupData& data = group_data(g);
                const int k = data.num_classes();
                std::vector<oracle::ConcreteGSet> cosets;
                for (int i = 0; i < k; ++i) {
                  cosets.push_back(oracle::coset_set(data.classes().classes[i].representative));
                }
                for (int i = 0; i < k; ++i) {
                  if (!(oracle::orbit_decompose(cosets[i]) == basis_element(g, i))) {
                    bad += " orbit:" + name + "#" + std::to_string(i);
                  }
                }
                std::vector<char> ok(static_cast<std::size_t>(k) * k, 1);
                std::vector<std::exception_ptr> errs(static_cast<std::size_t>(k) * k);
                parallel::parallel_for(static_cast<long long>(k) * k, [&](long long idx) {
                  try {
                    int i = static_cast<int>(idx / k), j = static_cast<int>(idx % k);
                    const Subgroup& kj = data.classes().classes[j].representative;
                    if (Int(oracle::fixed_points(cosets[i], kj)) != data.marks().marks[i][j]) {
                      ok[idx] = 0;
                      return;
                    }
                    BurnsideElement via_marks = basis_element(g, i) * basis_element(g, j);
                    BurnsideElement via_orbits =
                        oracle::orbit_decompose(oracle::product(cosets[i], cosets[j]));
                    if (!(via_marks == via_orbits)) ok[idx] = 0;
                  } catch (...) {
                    errs[idx] = std::current_exception();
                  }
                });
                for (const auto& err : errs) {
                  if (err) std::rethrow_exception(err);
                }
                for (std::size_t idx = 0; idx < ok.size(); ++idx) {
                  if (!ok[idx]) {
                    bad += " product:" + name + "#" + std::to_string(idx / k) + "," +
                           std::to_string(idx % k);
                  }
                }
              }
              const std::array<const char*, 3> triples[] = {
                  {{"C2", "C2", "C2"}}, {{"C2", "C4", "C2"}}, {{"C3", "S3", "C2"}},
                  {{"S3", "C2", "C3"}}, {{"V4", "C2", "C4"}}, {{"C2", "S3", "C3"}},
                  {{"D8", "C2", "C2"}}, {{"C2", "Q8", "C2"}}, {{"V4", "V4", "V4"}},
                  {{"C8", "C4", "C2"}}};
              for (const auto& t : triples) {
                GroupPtr g = catalog_group(t[0]), h = catalog_group(t[1]);
                GroupPtr i = catalog_group(t[2]);
                const BisetSpace& sa = biset_space(g, h);
                const BisetSpace& sb = biset_space(h, i);
                for (int s = 0; s < sa.num_basis(); ++s) {
                  for (int u = 0; u < sb.num_basis(); ++u) {
                    BisetElement a = biset_basis(g, h, s);
                    BisetElement b = biset_basis(h, i, u);
                    if (!(compose(a, b) == compose_double_coset(a, b))) {
                      bad += std::string(" biset:") + t[0] + "," + t[1] + "," + t[2] + "#" +
                             std::to_string(s) + "," + std::to_string(u);
                    }
                  }
                }
              }
              r.expected = "orbit counts match marks everywhere, both composition routes agree";
              r.actual = bad.empty() ? r.expected : ("mismatch at" + bad);
              return bad.empty();
            });

  run_check(report, "generalized-character-vanishing",
            "level-n characters on commuting p-power tuples vanish on J_n", 30000,
            [&](CheckResult& r) {
              std::string bad;
              long long checked = 0;
              for (const auto& name : e.suite) {
                GroupPtr g = catalog_group(name);
                for (int p = 2; p <= g->order; ++p) {
                  if (g->order % p != 0 || !is_prime_int(p)) continue;
                  for (int n = 1; n <= 3; ++n) {
                    IntegerLattice l = jn_ideal(g, n);
                    for (const auto& row : l.basis) {
                      BurnsideElement x = element_from_coeffs(g, row);
                      GeneralizedCharacter chi = generalized_character(x, p, n);
                      ++checked;
                      for (const auto& v : chi.values) {
                        if (v != 0) {
                          bad += " " + name + "/p=" + std::to_string(p) +
                                 "/n=" + std::to_string(n);
                          break;
                        }
                      }
                    }
                  }
                }
              }
              r.expected = "all character values vanish on the ideals";
              r.actual = bad.empty() ? (std::to_string(checked) + " basis characters, all zero")
                                     : ("nonzero at" + bad);
              return bad.empty();
            });

  run_check(report, "level-bounds",
            "each filtration closes exactly at the expected level, within the log2 bound, "
            "and the ideals form a descending chain",
            5000, [&](CheckResult& r) {
              std::string bad;
              for (const auto& name : e.suite) {
                GroupPtr g = catalog_group(name);
                int lvl = max_nontrivial_level(g);
                if (!(lvl <= floor_log2(g->order) && floor_log2(g->order) <= g->order - 1)) {
                  bad += " bound:" + name;
                }
                auto it = e.expected_levels.find(name);
                if (it == e.expected_levels.end() || it->second != lvl) {
                  bad += " level:" + name + "=" + std::to_string(lvl);
                }
                for (int n = 0; n < lvl; ++n) {
                  if (!sublattice_of(jn_ideal(g, n + 1), jn_ideal(g, n))) {
                    bad += " chain:" + name + "/J" + std::to_string(n + 1);
                  }
                }
                if (lvl > 0 && jn_ideal(g, lvl - 1).is_zero()) bad += " minimal:" + name;
                if (!jn_ideal(g, lvl).is_zero()) bad += " closed:" + name;
              }
              r.expected = "levels, bounds, and chains all hold";
              r.actual = bad.empty() ? r.expected : ("violations at" + bad);
              return bad.empty();
            });

  return report;
}

}  // namespace burnside::verification
