#include "affcert/hc.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "affcert/matrix.hpp"

namespace affcert {

void CartanPoly::add_term(const std::vector<int>& expo, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms.find(expo);
    if (it == terms.end()) {
        terms.emplace(expo, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

CartanPoly& CartanPoly::operator+=(const CartanPoly& o) {
    for (const auto& [e, c] : o.terms) add_term(e, c);
    return *this;
}

CartanPoly operator*(const CartanPoly& a, const CartanPoly& b) {
    CartanPoly out(std::max(a.nvars, b.nvars));
    for (const auto& [ea, ca] : a.terms) {
        for (const auto& [eb, cb] : b.terms) {
            std::vector<int> e(out.nvars, 0);
            for (size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
            for (size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

CartanPoly operator*(const Rational& c, const CartanPoly& p) {
    CartanPoly out(p.nvars);
    if (c.is_zero()) return out;
    for (const auto& [e, v] : p.terms) out.terms.emplace(e, c * v);
    return out;
}

std::string CartanPoly::str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms) {
        if (!first) os << " + ";
        first = false;
        os << c.str();
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            os << " h" << (i + 1);
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

void TPoly::trim() {
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
}

TPoly& TPoly::operator+=(const TPoly& o) {
    if (coeffs.size() < o.coeffs.size()) coeffs.resize(o.coeffs.size());
    for (size_t i = 0; i < o.coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
    trim();
    return *this;
}

TPoly operator*(const TPoly& a, const TPoly& b) {
    TPoly out;
    if (a.is_zero() || b.is_zero()) return out;
    out.coeffs.resize(a.coeffs.size() + b.coeffs.size() - 1);
    for (size_t i = 0; i < a.coeffs.size(); ++i)
        for (size_t j = 0; j < b.coeffs.size(); ++j) out.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    out.trim();
    return out;
}

std::string TPoly::str() const {
    if (coeffs.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << coeffs[i].str();
        if (i == 1) os << " t";
        if (i > 1) os << " t^" << i;
    }
    return os.str();
}

CartanPoly project_hc(const Uea& uea, const UeaElement& u) {
    const SimpleLie& g = uea.algebra();
    CartanPoly out(g.rank());
    for (const auto& [w, c] : uea.normalize(u)) {
        bool pure_h = std::all_of(w.begin(), w.end(), [&](int r) { return g.is_h(r); });
        if (!pure_h) continue;
        std::vector<int> expo(g.rank(), 0);
        for (int r : w) ++expo[g.gen(r).i - 1];
        out.add_term(expo, c);
    }
    return out;
}

std::vector<CartanPoly> p0_generators(const Uea& uea, const UeaElement& vprime,
                                      const std::vector<AdjointChain>& chains) {
    std::vector<CartanPoly> out;
    out.reserve(chains.size());
    for (const auto& chain : chains) {
        UeaElement acc;
        for (const auto& term : chain.terms)
            acc = uea_add(acc, uea_scale(term.coeff, uea.adjoint_chain(term.gens, vprime)));
        out.push_back(chain.scale.inv() * project_hc(uea, acc));
    }
    return out;
}

size_t poly_span_rank(const std::vector<CartanPoly>& polys) {
    std::set<std::vector<int>> monos;
    for (const auto& p : polys)
        for (const auto& [e, c] : p.terms) monos.insert(e);
    std::vector<std::vector<int>> cols(monos.begin(), monos.end());
    RationalMatrix m(polys.size(), cols.size());
    for (size_t r = 0; r < polys.size(); ++r)
        for (size_t c = 0; c < cols.size(); ++c) {
            auto it = polys[r].terms.find(cols[c]);
            if (it != polys[r].terms.end()) m.at(r, c) = it->second;
        }
    return cols.size() - nullspace(m).size();
}

Rational evaluate(const CartanPoly& p, const Weight& mu) {
    if (mu.rank() != p.nvars) throw std::invalid_argument("weight rank mismatch");
    Rational out;
    for (const auto& [e, c] : p.terms) {
        Rational term = c;
        for (size_t i = 0; i < e.size(); ++i)
            for (int k = 0; k < e[i]; ++k) term *= mu.coords[i];
        out += term;
    }
    return out;
}

TPoly evaluate_family(const CartanPoly& p, const WeightFamily& f) {
    if (f.base.rank() != p.nvars || f.direction.rank() != p.nvars)
        throw std::invalid_argument("family rank mismatch");
    TPoly out;
    for (const auto& [e, c] : p.terms) {
        TPoly term;
        term.coeffs = {c};
        term.trim();
        for (size_t i = 0; i < e.size(); ++i) {
            TPoly lin;
            lin.coeffs = {f.base.coords[i], f.direction.coords[i]};
            lin.trim();
            for (int k = 0; k < e[i]; ++k) term = term * lin;
        }
        out += term;
    }
    return out;
}

ClassificationReport verify_classification(const std::vector<CartanPoly>& polys,
                                           const std::vector<WeightFamily>& families) {
    ClassificationReport rep;
    for (size_t p = 0; p < polys.size(); ++p) {
        for (size_t f = 0; f < families.size(); ++f) {
            ++rep.pairs_checked;
            TPoly v = evaluate_family(polys[p], families[f]);
            if (!v.is_zero()) rep.failures.push_back({p, f, std::move(v)});
        }
    }
    return rep;
}

namespace {

bool nonneg_integer(const Rational& r) { return r.is_integer() && r.sign() >= 0; }

bool family_member(const WeightFamily& f, const Rational& t) {
    for (size_t i = 0; i < f.base.rank(); ++i)
        if (!nonneg_integer(f.base.coords[i] + f.direction.coords[i] * t)) return false;
    return true;
}

}  // namespace

IntegralMembers integral_members(const WeightFamily& f) {
    IntegralMembers out;
    const size_t l = f.base.rank();

    // Constant coordinates constrain nothing about t but must already
    // be nonnegative integers.
    bool any_dir = false;
    for (size_t i = 0; i < l; ++i) {
        if (f.direction.coords[i].is_zero()) {
            if (!nonneg_integer(f.base.coords[i])) return out;  // None
        } else {
            any_dir = true;
        }
    }
    if (!any_dir) {
        out.kind = IntegralMembers::AllComplex;
        return out;
    }

    // All-nonnegative-integer data: the feasible set is an arithmetic
    // progression of integers bounded below; compare it against Z>=0.
    bool all_nonneg_int = true;
    for (size_t i = 0; i < l; ++i)
        if (!nonneg_integer(f.base.coords[i]) || !nonneg_integer(f.direction.coords[i]))
            all_nonneg_int = false;
    if (all_nonneg_int) {
        Integer g = 0;
        Rational lower(-1);  // max of -b/d over d > 0; all such are <= 0 here
        bool lower_set = false;
        for (size_t i = 0; i < l; ++i) {
            const Rational& d = f.direction.coords[i];
            if (d.is_zero()) continue;
            Integer di = d.num();
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), di.get_mpz_t());
            Rational bound = -f.base.coords[i] / d;
            if (!lower_set || bound > lower) lower = bound, lower_set = true;
        }
        if (g == 1 && lower > Rational(-1) && lower <= Rational(0))
            out.kind = IntegralMembers::AllNonnegInt;
        else
            out.kind = IntegralMembers::InfiniteOther;
        return out;
    }

    // Interval from the sign pattern: d > 0 gives t >= -b/d, d < 0 gives
    // t <= -b/d.
    bool has_lo = false, has_hi = false;
    Rational lo, hi;
    for (size_t i = 0; i < l; ++i) {
        const Rational& d = f.direction.coords[i];
        if (d.is_zero()) continue;
        Rational bound = -f.base.coords[i] / d;
        if (d.sign() > 0) {
            if (!has_lo || bound > lo) lo = bound, has_lo = true;
        } else {
            if (!has_hi || bound < hi) hi = bound, has_hi = true;
        }
    }

    // Pivot parametrization: b_p + d_p t = s, s a nonnegative integer.
    size_t p = 0;
    while (f.direction.coords[p].is_zero()) ++p;
    const Rational dp = f.direction.coords[p];
    const Rational bp = f.base.coords[p];
    auto t_of = [&](long s) { return (Rational(s) - bp) / dp; };

    if (has_lo && has_hi) {
        if (lo > hi) return out;  // None
        // s window covering t in [lo, hi]
        Rational s_a = bp + dp * lo, s_b = bp + dp * hi;
        if (s_a > s_b) std::swap(s_a, s_b);
        auto floor_of = [](const Rational& r) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
            return mpz_get_si(q.get_mpz_t());
        };
        long s_min = std::max(0L, floor_of(s_a));
        long s_max = floor_of(s_b);
        for (long s = s_min; s <= s_max; ++s) {
            Rational t = t_of(s);
            if (family_member(f, t)) out.values.push_back(t);
        }
        if (out.values.empty()) return out;  // None
        std::sort(out.values.begin(), out.values.end());
        out.kind = IntegralMembers::Finite;
        return out;
    }

    // Unbounded in one direction with non-integer data: feasibility is
    // periodic in s, so a bounded scan decides emptiness.
    const long scan = 1000;
    for (long s = 0; s <= scan; ++s) {
        if (family_member(f, t_of(s))) {
            out.kind = IntegralMembers::InfiniteOther;
            return out;
        }
    }
    return out;  // None
}

}  // namespace affcert
