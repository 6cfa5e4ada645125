#pragma once

#include <map>

#include "thickset/int_matrix.hpp"

namespace thickset {

bool is_prime(const Int& n);

/// Prime factorisation of |n|; requires n != 0. Trial division backed by
/// Pollard rho for anything a small sieve does not finish.
std::map<Int, unsigned> factorize(const Int& n);

/// Largest e with p^e dividing n; requires p >= 2 and n != 0.
unsigned p_adic_valuation(const Int& n, const Int& p);

}  // namespace thickset
