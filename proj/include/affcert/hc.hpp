#pragma once

#include <map>
#include <string>
#include <vector>

#include "affcert/uea.hpp"

namespace affcert {

/// Multivariate polynomial in h_1..h_l over Q: exponent vector -> coefficient.
struct CartanPoly {
    size_t nvars = 0;
    std::map<std::vector<int>, Rational> terms;

    explicit CartanPoly(size_t l = 0) : nvars(l) {}

    bool is_zero() const { return terms.empty(); }
    void add_term(const std::vector<int>& expo, const Rational& c);

    CartanPoly& operator+=(const CartanPoly& o);
    friend CartanPoly operator+(CartanPoly a, const CartanPoly& b) { return a += b; }
    friend CartanPoly operator*(const CartanPoly& a, const CartanPoly& b);
    friend CartanPoly operator*(const Rational& c, const CartanPoly& p);
    friend bool operator==(const CartanPoly&, const CartanPoly&) = default;

    std::string str() const;
};

/// Univariate polynomial in the line parameter t; no trailing zeros.
struct TPoly {
    std::vector<Rational> coeffs;  // coeffs[i] multiplies t^i

    bool is_zero() const { return coeffs.empty(); }
    void trim();

    TPoly& operator+=(const TPoly& o);
    friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
    friend TPoly operator*(const TPoly& a, const TPoly& b);
    friend bool operator==(const TPoly&, const TPoly&) = default;

    std::string str() const;
};

/// Affine line of weights t -> base + t * direction.
struct WeightFamily {
    Weight base;
    Weight direction;
};

/// Harish-Chandra-style projection U(g) -> S(h): PBW-normalize, keep
/// the pure-Cartan monomials, read them as polynomials in h_1..h_l.
/// For zero-weight r this computes the polynomial with r v_mu = p_r(mu) v_mu.
CartanPoly project_hc(const Uea& uea, const UeaElement& u);

/// One adjoint chain: a signed sum of generator words (each applied
/// rightmost factor first) together with the projection scale factor,
/// i.e. (chain)_L v' projects to scale * p.
struct AdjointChain {
    struct Term {
        Rational coeff;
        std::vector<int> gens;
    };
    std::vector<Term> terms;
    Rational scale;
};

/// Applies each chain to v', projects and divides by the chain's scale.
std::vector<CartanPoly> p0_generators(const Uea& uea, const UeaElement& vprime,
                                      const std::vector<AdjointChain>& chains);

/// Dimension of the span of a set of Cartan polynomials (exact rank).
size_t poly_span_rank(const std::vector<CartanPoly>& polys);

Rational evaluate(const CartanPoly& p, const Weight& mu);
TPoly evaluate_family(const CartanPoly& p, const WeightFamily& f);

struct ClassificationFailure {
    size_t poly_index;
    size_t family_index;
    TPoly value;
};

struct ClassificationReport {
    size_t pairs_checked = 0;
    std::vector<ClassificationFailure> failures;
    bool pass() const { return failures.empty(); }
};

/// Checks that every (polynomial, family) evaluation is the zero
/// polynomial in t; order is polynomial-major, family-minor.
ClassificationReport verify_classification(const std::vector<CartanPoly>& polys,
                                           const std::vector<WeightFamily>& families);

/// Which t in C make base + t*direction dominant integral.
struct IntegralMembers {
    enum Kind {
        None,             // no t works
        AllComplex,       // constant dominant-integral family: every t
        AllNonnegInt,     // exactly t in Z>=0
        Finite,           // the listed values only
        InfiniteOther,    // infinitely many t, but not exactly Z>=0
    } kind = None;
    std::vector<Rational> values;  // populated for Finite

    bool nonempty() const { return kind != None; }
};

IntegralMembers integral_members(const WeightFamily& f);

}  // namespace affcert
