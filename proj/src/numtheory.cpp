#include "lieembed/numtheory.hpp"

#include <algorithm>
#include <stdexcept>

namespace lieembed::numtheory {

namespace {

// Pollard-Brent; n odd composite.
mpz_class pollard_brent(const mpz_class& n) {
    for (unsigned long c = 1;; ++c) {
        mpz_class y = 2, x, g = 1, q = 1, ys;
        unsigned long r = 1;
        const unsigned long m = 64;
        auto f = [&](const mpz_class& v) {
            mpz_class t = (v * v + c) % n;
            return t;
        };
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = f(y);
            unsigned long k = 0;
            do {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    mpz_class diff = abs(x - y);
                    q = (q * diff) % n;
                }
                g = gcd(q, n);
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = gcd(mpz_class(abs(x - ys)), n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void factor_into(const mpz_class& n, std::map<mpz_class, int>& out) {
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) != 0) {
        ++out[n];
        return;
    }
    mpz_class d = pollard_brent(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace

std::map<mpz_class, int> factor(const mpz_class& n) {
    if (n == 0) throw std::domain_error("factor: zero");
    std::map<mpz_class, int> out;
    mpz_class m = abs(n);
    for (unsigned long p = 2; p < 10000 && m > 1; ++p) {
        if (p > 2 && p % 2 == 0) continue;
        mpz_class pp(p);
        if (pp * pp > m) break;
        while (m % p == 0) {
            ++out[pp];
            m /= p;
        }
    }
    if (m > 1) factor_into(m, out);
    return out;
}

std::vector<mpz_class> divisors(const mpz_class& n) {
    std::vector<mpz_class> out{1};
    for (const auto& [p, e] : factor(n)) {
        const std::size_t base = out.size();
        mpz_class pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

mpz_class squarefree_part(const mpz_class& n, mpz_class* root) {
    if (n == 0) throw std::domain_error("squarefree_part: zero");
    mpz_class sf = 1, r = 1;
    for (const auto& [p, e] : factor(n)) {
        if (e % 2 == 1) sf *= p;
        for (int k = 0; k < e / 2; ++k) r *= p;
    }
    if (root != nullptr) *root = r;
    return sgn(n) < 0 ? mpz_class(-sf) : sf;
}

}  // namespace lieembed::numtheory
