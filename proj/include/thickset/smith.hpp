#pragma once

#include <vector>

#include "thickset/int_matrix.hpp"

namespace thickset {

/// Smith normal form of an integer matrix a:  s = u * a * v  with u, v
/// unimodular and s diagonal. `divisors` lists the nonzero diagonal entries
/// of s in order; they are positive and form a divisibility chain
/// (divisors[i] divides divisors[i+1]). The zero tail of the diagonal is
/// not listed.
struct SmithDecomposition {
    IntMatrix u;
    IntMatrix s;
    IntMatrix v;
    std::vector<Int> divisors;
};

/// Minimal-absolute-value pivoting; elimination sweeps run in parallel when
/// the submatrix is large enough. Output is canonical and bit-identical to
/// serial::smith_normal_form.
SmithDecomposition smith_normal_form(const IntMatrix& a);

/// coker(a) for a : Z^cols -> Z^rows, presented by the structure theorem:
/// Z^free_rank + sum of Z/torsion[i]. `torsion` is the divisibility chain
/// with units stripped.
struct CokernelInvariants {
    std::size_t free_rank = 0;
    std::vector<Int> torsion;
};

CokernelInvariants cokernel_invariants(const IntMatrix& a);

namespace serial {

/// Reference implementations, kept plain and single-threaded. Tests check
/// that the parallel paths produce bit-identical results.
IntMatrix matrix_product(const IntMatrix& a, const IntMatrix& b);
SmithDecomposition smith_normal_form(const IntMatrix& a);

}  // namespace serial

}  // namespace thickset
