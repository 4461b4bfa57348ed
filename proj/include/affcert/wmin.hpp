#pragma once

#include <vector>

#include "affcert/lie.hpp"

namespace affcert {

/// Highest-weight data of the top level of a minimal W-algebra module:
/// the Heisenberg J(0) eigenvalue and the L(0) conformal weight.
struct WTopData {
    Rational j_eigenvalue;
    Rational conformal_weight;
};

/// Sugawara L(0) eigenvalue <lambda, lambda + 2 rho> / (2(k + n)) on the
/// highest-weight vector of the affine sl_n module with finite weight lambda.
Rational sugawara_weight(const SimpleLie& g, const Rational& k, const Weight& lambda);

/// Eigenvalues on the reduced highest-weight vector for sl_{m+2}:
/// J(0) = <lambda, omega_1 - omega_{m+1}>,
/// L(0) = sugawara - <lambda, theta>/2.
WTopData minimal_w_top(int m, const Rational& k, const Weight& lambda);

struct Lemma32Row {
    long q;
    long n;
    long t;                     // t = q(n+1)
    Rational conformal_weight;  // (q^2+q)(n+1)/2
    Rational j_eigenvalue;      // q n
};

/// All (q, n), q >= 1, n >= 2, with (q^2+q)(n+1)/2 <= bound.
std::vector<Lemma32Row> lemma32_enumerate(const Rational& bound);

}  // namespace affcert
