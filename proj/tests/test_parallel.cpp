#include <doctest.h>

#include <numeric>
#include <vector>

#include "burnside/bisets.hpp"
#include "burnside/burnside_ring.hpp"
#include "burnside/filtration.hpp"
#include "burnside/group.hpp"
#include "burnside/oracle.hpp"
#include "burnside/parallel.hpp"

using namespace burnside;

namespace {

struct ParallelGuard {
  bool saved = parallel::enabled();
  ~ParallelGuard() { parallel::set_enabled(saved); }
};

// Runs the body twice on freshly constructed groups (so no per-object cache
// can leak results across modes) and returns both outcomes.
template <class F>
auto both_modes(F&& body) {
  ParallelGuard guard;
  parallel::set_enabled(false);
  auto serial = body();
  parallel::set_enabled(true);
  auto parallel_result = body();
  return std::pair(std::move(serial), std::move(parallel_result));
}

}  // namespace

TEST_CASE("parallel_for covers every index exactly once") {
  ParallelGuard guard;
  for (bool on : {false, true}) {
    parallel::set_enabled(on);
    std::vector<int> hits(1000, 0);
    parallel::parallel_for(1000, [&](long long i) { hits[i] += 1; });
    CHECK(std::accumulate(hits.begin(), hits.end(), 0) == 1000);
    CHECK(*std::min_element(hits.begin(), hits.end()) == 1);
    parallel::parallel_for(0, [&](long long) { FAIL("body must not run for n=0"); });
  }
  CHECK(parallel::thread_count() >= 1);
}

TEST_CASE("marks kernel gives identical tables in both modes") {
  auto [serial, parallel_result] = both_modes([] {
    GroupPtr g = catalog_group("S4");  // fresh object, fresh caches
    SubgroupClassification cls = classify_subgroups(g);
    return compute_marks_matrix(g, cls);
  });
  CHECK(serial == parallel_result);
  CHECK(serial.size() == 11);  // S4 has 11 conjugacy classes of subgroups
}

TEST_CASE("biset composition tables are mode-independent") {
  auto [serial, parallel_result] = both_modes([] {
    GroupPtr left = catalog_group("S3");
    GroupPtr right = catalog_group("S3");
    const int m = biset_space(left, right).num_basis();
    IntVec ones(static_cast<std::size_t>(m), 1);
    BisetElement all{left, right, ones};
    return compose(all, all).coeffs;
  });
  CHECK(serial == parallel_result);
}

TEST_CASE("generalized characters are mode-independent") {
  auto [serial, parallel_result] = both_modes([] {
    GroupPtr d8 = catalog_group("D8");
    IntVec ones(static_cast<std::size_t>(group_data(d8).num_classes()), 1);
    GeneralizedCharacter chi =
        generalized_character(element_from_coeffs(d8, ones), 2, 3);
    return std::pair(chi.tuples, chi.values);
  });
  CHECK(serial.first == parallel_result.first);
  CHECK(serial.second == parallel_result.second);
}

TEST_CASE("oracle decompositions are mode-independent") {
  auto [serial, parallel_result] = both_modes([] {
    GroupPtr a4 = catalog_group("A4");
    const GroupData& data = group_data(a4);
    oracle::ConcreteGSet x = oracle::coset_set(data.classes().classes[1].representative);
    oracle::ConcreteGSet y = oracle::coset_set(data.classes().classes[2].representative);
    return oracle::orbit_decompose(oracle::product(x, y)).coeffs;
  });
  CHECK(serial == parallel_result);
}
