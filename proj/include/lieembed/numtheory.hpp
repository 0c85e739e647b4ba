#pragma once

#include <gmpxx.h>

#include <map>
#include <vector>

namespace lieembed::numtheory {

/// Prime factorization of |n| (n != 0) as prime -> exponent.
std::map<mpz_class, int> factor(const mpz_class& n);

/// All positive divisors of |n| (n != 0), ascending.
std::vector<mpz_class> divisors(const mpz_class& n);

/// Writes |n| = root^2 * squarefree and returns the signed squarefree part.
mpz_class squarefree_part(const mpz_class& n, mpz_class* root = nullptr);

}  // namespace lieembed::numtheory
