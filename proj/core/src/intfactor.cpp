#include "holonomy/intfactor.hpp"

#include <algorithm>

namespace holonomy {

namespace {

Integer pollard_brent(const Integer& n) {
    // Brent's cycle variant; n must be odd composite, not a prime power issue
    // handled by the caller loop.
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(0xFEEDFACEul);
    while (true) {
        Integer y = rng.get_z_range(n - 3) + 2;
        Integer c = rng.get_z_range(n - 2) + 1;
        Integer m = 128, g = 1, r = 1, q = 1, x = 0, ys = 0;
        while (g == 1) {
            x = y;
            for (Integer i = 0; i < r; ++i) y = (y * y + c) % n;
            Integer k = 0;
            while (k < r && g == 1) {
                ys = y;
                Integer lim = std::min(m, Integer(r - k));
                for (Integer i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            }
            r *= 2;
        }
        if (g == n) {
            g = 1;
            while (g == 1) {
                ys = (ys * ys + c) % n;
                Integer d = abs(x - ys);
                mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
            }
        }
        if (g != n) return g;
    }
}

void factor_rec(Integer n, std::map<Integer, int>& out) {
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 40)) {
        out[n] += 1;
        return;
    }
    Integer d = pollard_brent(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

}  // namespace

std::map<Integer, int> factor_integer(Integer n) {
    if (n == 0) throw precondition_error("factor_integer(0)");
    std::map<Integer, int> out;
    n = abs(n);
    for (long p : {2l, 3l, 5l, 7l}) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            out[Integer(p)] += 1;
            n /= p;
        }
    }
    for (long p = 11; p <= 100000 && n > 1; p += 2) {
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
                out[Integer(p)] += 1;
                n /= p;
            }
        }
    }
    if (n > 1) factor_rec(n, out);
    return out;
}

std::vector<Integer> divisors(const Integer& n, std::size_t limit) {
    auto fac = factor_integer(n);
    std::vector<Integer> out{Integer(1)};
    for (const auto& [p, e] : fac) {
        std::size_t base = out.size();
        if (base * (e + 1) > limit)
            throw internal_error("divisor enumeration exceeds limit");
        Integer pe = 1;
        for (int i = 1; i <= e; ++i) {
            pe *= p;
            for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pe);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace holonomy
