#pragma once

#include <optional>
#include <vector>

#include "parablat/matrix.hpp"

namespace parablat {

// h = u·m with u unimodular; h in row echelon form with positive pivots and
// the entries above each pivot reduced into [0, pivot). The nonzero rows of h
// are the canonical basis of the row lattice of m.
struct HnfResult {
  IntMatrix h;
  IntMatrix u;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
  std::size_t rank() const { return pivots.size(); }
};
HnfResult hnf(const IntMatrix& m);

// d = u·m·v diagonal with d_1 | d_2 | ... and d_i >= 0; u, v unimodular.
struct SnfResult {
  IntMatrix d;
  IntMatrix u;
  IntMatrix v;
  std::vector<Int> diagonal() const;
};
SnfResult snf(const IntMatrix& m);

Int det(const IntMatrix& m);
Rat det(const RatMatrix& m);
std::size_t rank(const RatMatrix& m);
RatMatrix inverse(const RatMatrix& m);  // throws PreconditionError if singular

// Exact solution of a·x = b (one solution; free variables set to zero).
std::optional<RatMatrix> rat_solve(const RatMatrix& a, const RatMatrix& b);
RatMatrix rat_solve_or_throw(const RatMatrix& a, const RatMatrix& b);
std::optional<RatVector> rat_solve(const RatMatrix& a, const RatVector& b);

// Basis (as columns) of {x in Q^k : a·x = 0}.
RatMatrix nullspace(const RatMatrix& a);

// Z-basis (as columns) of {x in Z^k : a·x = 0}.
IntMatrix kernel_int(const RatMatrix& a);

// Some x in Z^k with a·x = b, if one exists.
std::optional<IntVector> solve_int(const RatMatrix& a, const RatVector& b);

// Scales each row by the lcm of its denominators.
IntMatrix clear_row_denominators(const RatMatrix& a);

// Basis of the saturation of the column span of m in Z^n.
IntMatrix saturation(const IntMatrix& m);

bool is_unimodular(const IntMatrix& m);

}  // namespace parablat
