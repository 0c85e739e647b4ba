#include "lieembed/linalg.hpp"

namespace lieembed {

Signature congruence_signature(QMatrix m) {
    if (!m.is_square()) throw std::invalid_argument("congruence_signature: not square");
    const std::size_t n = m.rows();
    Signature sig;
    std::size_t k = 0;
    auto swap_both = [&](std::size_t a, std::size_t b) {
        for (std::size_t j = 0; j < n; ++j) std::swap(m(a, j), m(b, j));
        for (std::size_t i = 0; i < n; ++i) std::swap(m(i, a), m(i, b));
    };
    // add row/col b to row/col a
    auto add_both = [&](std::size_t a, std::size_t b) {
        for (std::size_t j = 0; j < n; ++j) m(a, j) += m(b, j);
        for (std::size_t i = 0; i < n; ++i) m(i, a) += m(i, b);
    };
    while (k < n) {
        std::size_t p = n;
        for (std::size_t i = k; i < n; ++i)
            if (!m(i, i).is_zero()) {
                p = i;
                break;
            }
        if (p == n) {
            // zero diagonal: find an off-diagonal entry and make a diagonal one
            std::size_t a = n, b = n;
            for (std::size_t i = k; i < n && a == n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (!m(i, j).is_zero()) {
                        a = i;
                        b = j;
                        break;
                    }
            if (a == n) break;
            add_both(a, b);  // m(a,a) becomes 2 m(a,b) != 0
            p = a;
        }
        if (p != k) swap_both(p, k);
        const Rational piv = m(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m(i, k).is_zero()) continue;
            Rational f = m(i, k) / piv;
            for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
            for (std::size_t r = k; r < n; ++r) m(r, i) -= f * m(r, k);
        }
        if (piv.sign() > 0) ++sig.n_pos; else ++sig.n_neg;
        ++k;
    }
    sig.n_zero = n - sig.n_pos - sig.n_neg;
    return sig;
}

}  // namespace lieembed
