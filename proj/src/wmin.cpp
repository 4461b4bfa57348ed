#include "affcert/wmin.hpp"

#include <stdexcept>

namespace affcert {

Rational sugawara_weight(const SimpleLie& g, const Rational& k, const Weight& lambda) {
    Rational denom = Rational(2) * (k + Rational(g.n()));
    if (denom.is_zero()) throw std::invalid_argument("critical level");
    Weight shifted = lambda + g.rho() + g.rho();
    return g.weight_inner(lambda, shifted) / denom;
}

WTopData minimal_w_top(int m, const Rational& k, const Weight& lambda) {
    SimpleLie g(m + 2);
    if ((int)lambda.rank() != m + 1) throw std::invalid_argument("weight rank must be m+1");
    WTopData out;
    out.j_eigenvalue = g.weight_inner(lambda, g.fundamental(1) - g.fundamental(m + 1));
    out.conformal_weight =
        sugawara_weight(g, k, lambda) - g.weight_inner(lambda, g.theta()) / Rational(2);
    return out;
}

std::vector<Lemma32Row> lemma32_enumerate(const Rational& bound) {
    if (bound.sign() <= 0) throw std::invalid_argument("bound must be positive");
    std::vector<Lemma32Row> out;
    // (q^2+q)(n+1)/2 is increasing in both q and n.
    for (long q = 1; Rational(q * q + q) * Rational(3, 2) <= bound; ++q) {
        for (long n = 2;; ++n) {
            Rational h = Rational(q * q + q) * Rational(n + 1, 2);
            if (h > bound) break;
            out.push_back({q, n, q * (n + 1), h, Rational(q * n)});
        }
    }
    return out;
}

}  // namespace affcert
