#pragma once

#include "burnside/errors.hpp"
#include "burnside/ints.hpp"

namespace burnside {

// A sublattice of Z^ambient_rank, stored as a canonical row-style Hermite
// normal form basis: pivot columns strictly increase, pivots are positive,
// and entries above a pivot are reduced into [0, pivot). The HNF basis of a
// lattice is unique, so equality of lattices is equality of bases.
struct IntegerLattice {
  int ambient_rank = 0;
  IntMat basis;  // HNF rows; empty for the zero lattice

  int rank() const { return static_cast<int>(basis.size()); }
  bool is_zero() const { return basis.empty(); }
};

// HNF of the row span. Throws Error on ragged input.
IntegerLattice lattice_from_rows(int ambient_rank, IntMat rows);

// Exact triangular reduction against the HNF basis.
bool lattice_contains(const IntegerLattice& lat, const IntVec& v);

bool lattice_equal(const IntegerLattice& a, const IntegerLattice& b);

// a ⊆ b
bool sublattice_of(const IntegerLattice& a, const IntegerLattice& b);

// {x in Z^rows : x · m = 0}, for an rows×cols matrix. The result is the full
// kernel (saturated), not just some finite-index sublattice.
IntegerLattice left_kernel(const IntMat& m, int rows, int cols);

// {x in Z^rows(q) : x · q ∈ L}, for q mapping row vectors into L's ambient.
IntegerLattice preimage_lattice(const IntMat& q, const IntegerLattice& l);

// Row-style HNF of an arbitrary integer matrix (zero rows dropped).
// Exposed for tests.
IntMat hermite_normal_form(IntMat rows, int cols);

}  // namespace burnside
