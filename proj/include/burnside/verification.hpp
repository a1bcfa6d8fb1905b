#pragma once

#include <map>
#include <string>
#include <vector>

#include "burnside/ints.hpp"

namespace burnside::verification {

// Every expected value the checks pin down, in one overridable bundle so the
// test suite can prove a deliberate mismatch turns the report red.
struct Expectations {
  // Klein four-group: J_1 is spanned by g, and 1+g factors as the product of
  // the three [G/C]-1.
  IntVec klein_generator = {-1, 1, 1, 1, -2};
  IntVec klein_one_plus_g = {-1, 1, 1, 1, -1};

  // A4: the two J_1 lattice generators, already in Hermite normal form.
  IntMat a4_j1_generators = {{1, 0, -3, -1, 3}, {0, 1, -1, -1, 1}};

  // D8: pullback of the Klein generator along the central quotient.
  IntVec d8_pullback = {0, -1, 0, 0, 1, 1, 1, -2};

  // Where each filtration closes.
  std::map<std::string, int> expected_levels = {
      {"trivial", 0}, {"C2", 1},  {"C3", 1},  {"C4", 1},  {"C5", 1},     {"C6", 1},
      {"C7", 1},      {"C8", 1},  {"C9", 1},  {"C10", 1}, {"C11", 1},    {"C12", 1},
      {"V4", 2},      {"D8", 2},  {"Q8", 2},  {"A4", 2},  {"S3", 2},     {"S4", 2},
      {"C2×C4", 2},   {"E(2,3)", 3}};

  std::vector<std::string> suite = {"trivial", "C2", "C3",  "C4", "C5",    "C6",
                                    "C7",      "C8", "C9",  "C10", "C11",  "C12",
                                    "V4",      "D8", "Q8",  "A4",  "S3",   "S4",
                                    "C2×C4",   "E(2,3)"};

  int random_instances = 200;
  unsigned seed = 0x5eed;
};

struct CheckResult {
  std::string name;
  std::string claim;
  std::string expected;
  std::string actual;
  bool pass = false;
  long long ms = 0;
  long long limit_ms = 0;
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  bool all_pass() const;
};

VerificationReport run_verification(const Expectations& e = Expectations{});

}  // namespace burnside::verification
