#include <chrono>
#include <iomanip>
#include <iostream>
#include <string>

#include "burnside/bisets.hpp"
#include "burnside/burnside_ring.hpp"
#include "burnside/classification.hpp"
#include "burnside/filtration.hpp"
#include "burnside/parallel.hpp"

// Times each parallel kernel against its serial run and confirms the outputs
// are identical. Fresh group objects per run keep the per-group caches from
// hiding the work.

namespace {

using namespace burnside;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void report(const std::string& kernel, double serial_ms, double parallel_ms, bool equal) {
  std::cout << std::left << std::setw(26) << kernel << std::right << std::fixed
            << std::setprecision(1) << std::setw(10) << serial_ms << "ms" << std::setw(10)
            << parallel_ms << "ms   x" << std::setprecision(2)
            << (parallel_ms > 0 ? serial_ms / parallel_ms : 0.0)
            << (equal ? "   outputs identical" : "   OUTPUTS DIFFER") << "\n";
}

}  // namespace

int main() {
  const std::string big = "S4×C2";
  std::cout << "threads available: " << parallel::thread_count() << "\n\n";
  std::cout << std::left << std::setw(26) << "kernel" << std::right << std::setw(12) << "serial"
            << std::setw(12) << "parallel" << "\n";

  {
    parallel::set_enabled(false);
    GroupPtr g1 = catalog_group(big);
    auto t0 = Clock::now();
    SubgroupClassification c1 = classify_subgroups(g1);
    double s = ms_since(t0);

    parallel::set_enabled(true);
    GroupPtr g2 = catalog_group(big);
    t0 = Clock::now();
    SubgroupClassification c2 = classify_subgroups(g2);
    double p = ms_since(t0);

    bool equal = c1.num_classes() == c2.num_classes() &&
                 c1.total_subgroups() == c2.total_subgroups();
    for (int i = 0; equal && i < c1.num_classes(); ++i) {
      equal = c1.classes[i].representative.elements == c2.classes[i].representative.elements &&
              c1.classes[i].min_generators == c2.classes[i].min_generators;
    }
    report("subgroup classification", s, p, equal);

    parallel::set_enabled(false);
    t0 = Clock::now();
    IntMat m1 = compute_marks_matrix(g1, c1);
    s = ms_since(t0);
    parallel::set_enabled(true);
    t0 = Clock::now();
    IntMat m2 = compute_marks_matrix(g2, c2);
    p = ms_since(t0);
    report("marks matrix", s, p, m1 == m2);
  }

  {
    auto pair_table = [](bool on) {
      parallel::set_enabled(on);
      GroupPtr g = catalog_group("S3");
      GroupPtr h = catalog_group("S3");
      const BisetSpace& sp = biset_space(g, h);
      BisetElement all{g, h, IntVec(sp.num_basis(), 1)};
      auto t0 = Clock::now();
      BisetElement c = compose(all, all);
      return std::make_pair(ms_since(t0), c.coeffs);
    };
    auto [s, sc] = pair_table(false);
    auto [p, pc] = pair_table(true);
    report("biset pair table", s, p, sc == pc);
  }

  {
    auto characters = [](bool on) {
      parallel::set_enabled(on);
      GroupPtr g = catalog_group("E(2,3)");
      const GroupData& data = group_data(g);
      BurnsideElement x = element_from_coeffs(g, IntVec(data.num_classes(), 1));
      auto t0 = Clock::now();
      GeneralizedCharacter chi = generalized_character(x, 2, 3);
      return std::make_pair(ms_since(t0), chi.values);
    };
    auto [s, sv] = characters(false);
    auto [p, pv] = characters(true);
    report("tuple characters", s, p, sv == pv);
  }

  parallel::set_enabled(true);
  return 0;
}
