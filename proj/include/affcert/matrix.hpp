#pragma once

#include <vector>

#include "affcert/rational.hpp"

namespace affcert {

/// Dense matrix over Q with explicit dimensions.
struct RationalMatrix {
    size_t rows = 0;
    size_t cols = 0;
    std::vector<Rational> a;  // row-major

    RationalMatrix() = default;
    RationalMatrix(size_t r, size_t c) : rows(r), cols(c), a(r * c) {}

    Rational& at(size_t r, size_t c) { return a[r * cols + c]; }
    const Rational& at(size_t r, size_t c) const { return a[r * cols + c]; }
};

/// Exact basis of the right kernel, via fraction-free (Bareiss)
/// elimination on the denominator-cleared matrix with deterministic
/// first-nonzero pivoting. Basis vectors are normalized so their first
/// nonzero entry is 1.
std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m);

}  // namespace affcert
