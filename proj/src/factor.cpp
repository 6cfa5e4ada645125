#include "thickset/factor.hpp"

#include <gmp.h>

namespace thickset {

bool is_prime(const Int& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

namespace {

Int pollard_rho(const Int& n) {
    // Brent's cycle variant; n is odd, composite, and not a prime power of 2.
    for (unsigned long c = 1;; ++c) {
        Int x = 2, y = 2, d = 1, t;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            t = x - y;
            if (t == 0)
                break;
            mpz_gcd(d.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
        }
        if (d != 0 && d != 1 && d != n)
            return d;
    }
}

void factor_into(const Int& n, std::map<Int, unsigned>& out) {
    if (n == 1)
        return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    Int d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace

std::map<Int, unsigned> factorize(const Int& n) {
    if (n == 0)
        throw InvalidArgument("factorize: zero has no prime factorisation");
    Int m = abs(n);
    std::map<Int, unsigned> out;
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
        while (m % p == 0) {
            ++out[Int(p)];
            m /= p;
        }
    }
    Int d = 17;
    while (m > 1 && d * d <= m && d < 100000) {
        while (m % d == 0) {
            ++out[d];
            m /= d;
        }
        d += 2;
    }
    if (m > 1)
        factor_into(m, out);
    return out;
}

unsigned p_adic_valuation(const Int& n, const Int& p) {
    if (n == 0 || p < 2)
        throw InvalidArgument("p_adic_valuation: need n != 0 and p >= 2");
    Int rem;
    return static_cast<unsigned>(mpz_remove(rem.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

}  // namespace thickset
