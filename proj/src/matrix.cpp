#include "affcert/matrix.hpp"

namespace affcert {

std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m) {
    const size_t rows = m.rows, cols = m.cols;

    // Clear denominators per row; row scaling does not change the kernel.
    std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
    for (size_t r = 0; r < rows; ++r) {
        Integer l = 1;
        for (size_t c = 0; c < cols; ++c) {
            Integer d = m.at(r, c).den();
            Integer g;
            mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
            l = l / g * d;
        }
        for (size_t c = 0; c < cols; ++c) {
            const Rational& x = m.at(r, c);
            a[r][c] = x.num() * (l / x.den());
        }
    }

    // Fraction-free forward elimination (Bareiss). Pivot: first nonzero
    // entry in the column, scanning remaining rows top to bottom.
    std::vector<std::pair<size_t, size_t>> pivots;  // (row, col)
    Integer prev = 1;
    size_t rank = 0;
    for (size_t c = 0; c < cols && rank < rows; ++c) {
        size_t pr = rank;
        while (pr < rows && a[pr][c] == 0) ++pr;
        if (pr == rows) continue;
        std::swap(a[rank], a[pr]);
        const Integer piv = a[rank][c];
        for (size_t r = rank + 1; r < rows; ++r) {
            Integer f = a[r][c];
            for (size_t j = c; j < cols; ++j) {
                Integer t = piv * a[r][j] - f * a[rank][j];
                mpz_divexact(a[r][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        }
        pivots.emplace_back(rank, c);
        prev = piv;
        ++rank;
    }

    std::vector<bool> is_pivot_col(cols, false);
    for (auto& [r, c] : pivots) is_pivot_col[c] = true;

    // Back-substitute one kernel vector per free column.
    std::vector<std::vector<Rational>> basis;
    for (size_t fc = 0; fc < cols; ++fc) {
        if (is_pivot_col[fc]) continue;
        std::vector<Rational> x(cols);
        x[fc] = 1;
        for (size_t p = pivots.size(); p-- > 0;) {
            auto [r, c] = pivots[p];
            if (c >= fc) continue;
            Rational s;
            for (size_t j = c + 1; j <= fc; ++j)
                if (!x[j].is_zero() && !(a[r][j] == 0)) s += Rational(a[r][j]) * x[j];
            x[c] = -s / Rational(a[r][c]);
        }
        // First nonzero entry is a pivot-variable or x[fc] = 1; rescale to 1.
        for (size_t j = 0; j < cols; ++j) {
            if (!x[j].is_zero()) {
                Rational lead = x[j];
                for (size_t k = j; k < cols; ++k) x[k] /= lead;
                break;
            }
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

}  // namespace affcert
