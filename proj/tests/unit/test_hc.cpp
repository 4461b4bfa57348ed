#include <doctest.h>

#include <algorithm>
#include <random>

#include "affcert/hc.hpp"

using namespace affcert;

namespace {

std::mt19937 rng(31415);

// Independent oracle: eigenvalue of a zero-weight element on the
// highest weight vector of the Verma module M(mu), computed by
// commuting trailing f's to the front (where they leave the top
// weight space) instead of PBW-normalizing.
Rational hwv_eigen(const SimpleLie& g, const UeaElement& u, const Weight& mu) {
    Rational total;
    std::vector<std::pair<UeaWord, Rational>> work(u.begin(), u.end());
    while (!work.empty()) {
        auto [w, c] = std::move(work.back());
        work.pop_back();
        if (w.empty()) {
            total += c;
            continue;
        }
        int x = w.back();
        if (g.is_e(x)) continue;  // annihilates the highest weight vector
        if (g.is_h(x)) {
            Rational eig = mu.coords[g.gen(x).i - 1];
            w.pop_back();
            work.emplace_back(std::move(w), c * eig);
            continue;
        }
        // trailing f: u1..u_{r-1} f = f u1..u_{r-1} + sum_i u1..[u_i,f]..u_{r-1};
        // the first term has no component on the top weight space.
        for (size_t i = 0; i + 1 < w.size(); ++i) {
            for (const auto& [z, cz] : g.bracket(w[i], x)) {
                UeaWord shorter(w.begin(), w.begin() + i);
                shorter.push_back(z);
                shorter.insert(shorter.end(), w.begin() + i + 1, w.end() - 1);
                work.emplace_back(std::move(shorter), c * cz);
            }
        }
    }
    return total;
}

UeaWord random_zero_weight_word(const SimpleLie& g) {
    std::uniform_int_distribution<int> npairs(0, 2), nh(0, 2);
    std::uniform_int_distribution<int> pi(1, g.n());
    UeaWord w;
    int pairs = npairs(rng);
    for (int p = 0; p < pairs; ++p) {
        int i = pi(rng), j = pi(rng);
        if (i == j) continue;
        if (i > j) std::swap(i, j);
        w.push_back(g.e(i, j));
        w.push_back(g.f(i, j));
    }
    int hs = nh(rng);
    std::uniform_int_distribution<int> hi(1, g.n() - 1);
    for (int p = 0; p < hs; ++p) w.push_back(g.h(hi(rng)));
    std::shuffle(w.begin(), w.end(), rng);
    return w;
}

Weight W(std::vector<Rational> v) { return Weight(std::move(v)); }

}  // namespace

TEST_CASE("projection examples") {
    SimpleLie g(2);
    Uea uea(g);

    CartanPoly h1(1);
    h1.add_term({1}, Rational(1));

    // e f = f e + h projects to h
    CHECK(project_hc(uea, uea.normalize(UeaWord{g.e(1, 2), g.f(1, 2)})) == h1);
    // f e is pure non-Cartan
    CHECK(project_hc(uea, uea.normalize(UeaWord{g.f(1, 2), g.e(1, 2)})).is_zero());

    CartanPoly h1sq(1);
    h1sq.add_term({2}, Rational(1));
    CHECK(project_hc(uea, uea.normalize(UeaWord{g.h(1), g.h(1)})) == h1sq);
}

TEST_CASE("projection computes the Verma eigenvalue of zero-weight elements") {
    SimpleLie g(3);
    Uea uea(g);
    std::uniform_int_distribution<long> num(-4, 4);
    std::uniform_int_distribution<long> den(1, 3);
    for (int trial = 0; trial < 100; ++trial) {
        UeaElement u = uea.normalize(random_zero_weight_word(g));
        CartanPoly p = project_hc(uea, u);
        Weight mu(2);
        for (auto& c : mu.coords) c = Rational(num(rng), den(rng));
        CHECK(evaluate(p, mu) == hwv_eigen(g, u, mu));
    }
}

TEST_CASE("projection is multiplicative on zero-weight elements") {
    SimpleLie g(3);
    Uea uea(g);
    for (int trial = 0; trial < 40; ++trial) {
        UeaElement u = uea.normalize(random_zero_weight_word(g));
        UeaElement v = uea.normalize(random_zero_weight_word(g));
        CHECK(project_hc(uea, uea.multiply(u, v)) == project_hc(uea, u) * project_hc(uea, v));
    }
}

TEST_CASE("span rank of polynomial sets") {
    CartanPoly h1(2), h2(2), sum(2), h1sq(2), h1h2(2);
    h1.add_term({1, 0}, Rational(1));
    h2.add_term({0, 1}, Rational(1));
    sum = h1 + h2;
    h1sq.add_term({2, 0}, Rational(1));
    h1h2.add_term({1, 1}, Rational(1));

    CHECK(poly_span_rank({h1, h2, sum}) == 2);
    CHECK(poly_span_rank({h1sq, h1h2, CartanPoly(2)}) == 2);
    CHECK(poly_span_rank({}) == 0);
    CHECK(poly_span_rank({h1, h1sq, h1h2, h2}) == 4);
}

TEST_CASE("evaluation along an affine family") {
    CartanPoly p(2);
    p.add_term({2, 0}, Rational(1));  // h1^2
    p.add_term({0, 1}, Rational(1));  // + h2

    WeightFamily f{W({Rational(1), Rational(0)}), W({Rational(2), Rational(1)})};
    TPoly got = evaluate_family(p, f);
    // (1+2t)^2 + t = 4t^2 + 5t + 1
    TPoly want{{Rational(1), Rational(5), Rational(4)}};
    CHECK(got == want);

    CHECK(evaluate(p, W({Rational(3), Rational(5)})) == Rational(14));
}

TEST_CASE("classification verdicts") {
    CartanPoly h1(2);
    h1.add_term({1, 0}, Rational(1));

    WeightFamily vanishing{W({Rational(0), Rational(0)}), W({Rational(0), Rational(1)})};
    WeightFamily offending{W({Rational(1), Rational(0)}), W({Rational(0), Rational(0)})};

    ClassificationReport ok = verify_classification({h1}, {vanishing});
    CHECK(ok.pass());
    CHECK(ok.pairs_checked == 1);

    ClassificationReport bad = verify_classification({h1}, {vanishing, offending});
    CHECK(!bad.pass());
    CHECK(bad.pairs_checked == 2);
    REQUIRE(bad.failures.size() == 1);
    CHECK(bad.failures[0].poly_index == 0);
    CHECK(bad.failures[0].family_index == 1);
    CHECK(bad.failures[0].value == TPoly{{Rational(1)}});
}

TEST_CASE("dominant integral membership along families") {
    auto z = Rational(0);

    // direction omega_1: exactly t in Z>=0
    WeightFamily nonneg{W({z, z, z, z, z}), W({Rational(1), z, z, z, z})};
    CHECK(integral_members(nonneg).kind == IntegralMembers::AllNonnegInt);

    // constant dominant integral family: every t
    WeightFamily constant{W({Rational(1), z, Rational(2), z, z}), W({z, z, z, z, z})};
    CHECK(integral_members(constant).kind == IntegralMembers::AllComplex);

    // constant non-integral coordinate: no t
    WeightFamily never{W({z, Rational(-7, 2), z, z, z}), W({Rational(1), z, z, z, z})};
    CHECK(integral_members(never).kind == IntegralMembers::None);

    // shifted non-integral base on a moving coordinate: t = 7/2, 9/2, ...
    WeightFamily shifted{W({Rational(-7, 2), z, z, z, z}), W({Rational(1), z, z, z, z})};
    CHECK(integral_members(shifted).kind == IntegralMembers::InfiniteOther);

    // a decreasing coordinate alone allows every integer t <= 2
    WeightFamily downward{W({Rational(2), z, z, z, z}), W({Rational(-1), z, z, z, z})};
    CHECK(integral_members(downward).kind == IntegralMembers::InfiniteOther);

    // opposite directions pin t to a finite window
    WeightFamily finite{W({Rational(2), z}), W({Rational(-1), Rational(1)})};
    IntegralMembers fm = integral_members(finite);
    REQUIRE(fm.kind == IntegralMembers::Finite);
    CHECK(fm.values == std::vector<Rational>{Rational(0), Rational(1), Rational(2)});

    // opposing directions in two coordinates
    WeightFamily mixed{W({z, Rational(3)}), W({Rational(1), Rational(-1)})};
    IntegralMembers mm = integral_members(mixed);
    REQUIRE(mm.kind == IntegralMembers::Finite);
    CHECK(mm.values ==
          std::vector<Rational>{Rational(0), Rational(1), Rational(2), Rational(3)});

    // step 2 with odd offset: infinitely many t, but not Z>=0
    WeightFamily halfstep{W({Rational(1)}), W({Rational(2)})};
    CHECK(integral_members(halfstep).kind == IntegralMembers::InfiniteOther);
}
