#include <doctest.h>

#include <map>
#include <random>

#include "affcert/lie.hpp"

using namespace affcert;

namespace {

// Independent dense matrix-unit oracle for brackets and the trace form.
using Dense = std::vector<std::vector<Rational>>;

Dense gen_matrix(const SimpleLie& g, int rank) {
    int n = g.n();
    Dense m(n, std::vector<Rational>(n));
    const GenIndex& gi = g.gen(rank);
    switch (gi.kind) {
        case GenKind::E: m[gi.i - 1][gi.j - 1] = 1; break;
        case GenKind::F: m[gi.j - 1][gi.i - 1] = 1; break;
        case GenKind::H:
            m[gi.i - 1][gi.i - 1] = 1;
            m[gi.i][gi.i] = -1;
            break;
    }
    return m;
}

Dense commutator(const Dense& a, const Dense& b) {
    size_t n = a.size();
    Dense out(n, std::vector<Rational>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k)
                out[i][j] += a[i][k] * b[k][j] - b[i][k] * a[k][j];
    return out;
}

Dense element_matrix(const SimpleLie& g, const LieElement& x) {
    int n = g.n();
    Dense out(n, std::vector<Rational>(n));
    for (const auto& [r, c] : x) {
        Dense m = gen_matrix(g, r);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) out[i][j] += c * m[i][j];
    }
    return out;
}

Weight W(std::vector<long> v) {
    Weight w(v.size());
    for (size_t i = 0; i < v.size(); ++i) w.coords[i] = Rational(v[i]);
    return w;
}

}  // namespace

TEST_CASE("generator ordering is F < H < E and a bijection") {
    SimpleLie g(6);
    CHECK(g.dim() == 35);
    for (int r = 0; r < g.dim(); ++r) CHECK(g.rank_of(g.gen(r)) == r);
    CHECK(g.is_f(0));
    CHECK(g.is_h(15));
    CHECK(g.is_e(20));
    CHECK(g.f(1, 2) < g.h(1));
    CHECK(g.h(5) < g.e(1, 2));
    CHECK(g.e(1, 2) < g.e(1, 3));
}

TEST_CASE("bracket matches the matrix-unit commutator oracle") {
    SimpleLie g(4);
    for (int a = 0; a < g.dim(); ++a) {
        for (int b = 0; b < g.dim(); ++b) {
            Dense want = commutator(gen_matrix(g, a), gen_matrix(g, b));
            Dense got = element_matrix(g, g.bracket(a, b));
            CHECK(want == got);
        }
    }
}

TEST_CASE("bracket spot checks") {
    SimpleLie g(4);
    CHECK(g.bracket(g.e(1, 2), g.e(3, 4)).empty());
    LieElement h1{{g.h(1), Rational(1)}};
    CHECK(g.bracket(g.e(1, 2), g.f(1, 2)) == h1);
    LieElement two_e12{{g.e(1, 2), Rational(2)}};
    CHECK(g.bracket(g.h(1), g.e(1, 2)) == two_e12);
}

TEST_CASE("jacobi identity, exhaustive for sl4") {
    SimpleLie g(4);
    for (int a = 0; a < g.dim(); ++a) {
        for (int b = a; b < g.dim(); ++b) {
            for (int c = b; c < g.dim(); ++c) {
                LieElement xa{{a, Rational(1)}}, xb{{b, Rational(1)}}, xc{{c, Rational(1)}};
                LieElement sum = lie_add(
                    g.bracket(xa, g.bracket(b, c)),
                    lie_add(g.bracket(xb, g.bracket(c, a)), g.bracket(xc, g.bracket(a, b))));
                CHECK(sum.empty());
            }
        }
    }
}

TEST_CASE("invariant form") {
    SimpleLie g(6);
    CHECK(g.form(g.e(1, 6), g.f(1, 6)) == Rational(1));
    CHECK(g.form(g.h(1), g.h(2)) == Rational(-1));
    CHECK(g.form(g.e(1, 2), g.e(2, 3)) == Rational(0));

    std::mt19937 rng(7);
    std::uniform_int_distribution<int> pick(0, g.dim() - 1);
    for (int i = 0; i < 200; ++i) {
        int a = pick(rng), b = pick(rng), c = pick(rng);
        // <[x,y], z> + <y, [x,z]> = 0
        LieElement yb{{b, Rational(1)}}, zc{{c, Rational(1)}};
        Rational lhs = g.form(g.bracket(a, b), zc) + g.form(yb, g.bracket(a, c));
        CHECK(lhs == Rational(0));
    }
}

TEST_CASE("weight inner products") {
    SimpleLie g(6);
    CHECK(g.weight_inner(g.fundamental(1), g.fundamental(1)) == Rational(5, 6));
    Weight lam = g.fundamental(2) + g.fundamental(4);
    CHECK(g.weight_inner(lam, lam + g.rho() + g.rho()) == Rational(20));
    CHECK(g.weight_inner(Weight(5), lam) == Rational(0));
    CHECK(g.weight_inner(g.theta(), g.theta()) == Rational(2));

    // simple roots reproduce the Cartan matrix
    for (int i = 1; i < g.n(); ++i) {
        for (int j = 1; j < g.n(); ++j) {
            Rational want(i == j ? 2 : (std::abs(i - j) == 1 ? -1 : 0));
            CHECK(g.weight_inner(g.simple_root(i), g.simple_root(j)) == want);
        }
    }
}

TEST_CASE("theta for sl2") {
    SimpleLie g(2);
    CHECK(g.weight_inner(g.theta(), g.theta()) == Rational(2));
}

TEST_CASE("dominant integral") {
    SimpleLie g(6);
    CHECK(SimpleLie::dominant_integral(W({3, 0, 0, 0, 0})));
    CHECK(SimpleLie::dominant_integral(g.rho()));
    Weight bad(5);
    bad.coords[1] = Rational(-7, 2);
    CHECK(!SimpleLie::dominant_integral(bad));
}

TEST_CASE("generator weights") {
    SimpleLie g(6);
    // wt(e_{1,2}) = alpha_1: (2,-1,0,0,0)
    Weight a1 = g.gen_weight(g.e(1, 2));
    CHECK(a1.coords[0] == Rational(2));
    CHECK(a1.coords[1] == Rational(-1));
    // e and f weights are opposite
    for (int i = 1; i <= 6; ++i)
        for (int j = i + 1; j <= 6; ++j)
            CHECK(g.gen_weight(g.e(i, j)) + g.gen_weight(g.f(i, j)) == Weight(5));
}
