#include "affcert/vacuum.hpp"

#include <stdexcept>

namespace affcert {

void vac_add_term(VacuumElement& dst, const VacuumMonomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto it = dst.find(m);
    if (it == dst.end()) {
        dst.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) dst.erase(it);
    }
}

VacuumElement vac_add(const VacuumElement& a, const VacuumElement& b) {
    VacuumElement out = a;
    for (const auto& [m, c] : b) vac_add_term(out, m, c);
    return out;
}

VacuumElement vac_scale(const Rational& c, const VacuumElement& v) {
    VacuumElement out;
    if (c.is_zero()) return out;
    for (const auto& [m, cv] : v) out.emplace(m, c * cv);
    return out;
}

bool vac_is_zero(const VacuumElement& v) { return v.empty(); }

Vacuum::Vacuum(const SimpleLie& g, Rational level) : g_(g), k_(std::move(level)) {
    if (k_ == Rational(-g.n())) throw std::invalid_argument("critical level k = -n is excluded");
}

VacuumElement Vacuum::normal_form(const VacuumMonomial& word) const {
    for (const auto& l : word)
        if (l.mode >= 0) throw std::invalid_argument("normal_form requires negative modes");
    VacuumElement out;
    std::vector<std::pair<VacuumMonomial, Rational>> work;
    work.emplace_back(word, Rational(1));
    while (!work.empty()) {
        auto [w, c] = std::move(work.back());
        work.pop_back();
        size_t i = 0;
        while (i + 1 < w.size() && !(w[i + 1] < w[i])) ++i;
        if (i + 1 >= w.size()) {
            vac_add_term(out, w, c);
            continue;
        }
        VacuumMonomial swapped = w;
        std::swap(swapped[i], swapped[i + 1]);
        work.emplace_back(std::move(swapped), c);
        // Both modes negative, so only the [x,y](m+p) correction appears.
        long msum = w[i].mode + w[i + 1].mode;
        for (const auto& [z, cz] : g_.bracket(w[i].gen, w[i + 1].gen)) {
            VacuumMonomial shorter;
            shorter.reserve(w.size() - 1);
            shorter.insert(shorter.end(), w.begin(), w.begin() + i);
            shorter.push_back({msum, z});
            shorter.insert(shorter.end(), w.begin() + i + 2, w.end());
            work.emplace_back(std::move(shorter), c * cz);
        }
    }
    return out;
}

VacuumElement Vacuum::act_word(int gen, long mode, std::span<const CurrentLetter> rest) const {
    VacuumElement out;
    if (rest.empty()) {
        if (mode < 0) out.emplace(VacuumMonomial{{mode, gen}}, Rational(1));
        return out;
    }
    CurrentLetter l0 = rest.front();
    auto tail = rest.subspan(1);

    for (const auto& [m, c] : act_word(gen, mode, tail)) {
        VacuumMonomial full;
        full.reserve(m.size() + 1);
        full.push_back(l0);
        full.insert(full.end(), m.begin(), m.end());
        out = vac_add(out, vac_scale(c, normal_form(full)));
    }
    for (const auto& [z, cz] : g_.bracket(gen, l0.gen))
        out = vac_add(out, vac_scale(cz, act_word(z, mode + l0.mode, tail)));
    if (mode + l0.mode == 0) {
        Rational central = Rational(mode) * g_.form(gen, l0.gen) * k_;
        if (!central.is_zero()) vac_add_term(out, VacuumMonomial(tail.begin(), tail.end()), central);
    }
    return out;
}

VacuumElement Vacuum::act(int gen, long mode, const VacuumElement& v) const {
    VacuumElement out;
    for (const auto& [m, c] : v) out = vac_add(out, vac_scale(c, act_word(gen, mode, m)));
    return out;
}

Weight Vacuum::hweight(const VacuumMonomial& m) const {
    Weight w(g_.rank());
    for (const auto& l : m) w += g_.gen_weight(l.gen);
    return w;
}

long Vacuum::degree(const VacuumMonomial& m) {
    long d = 0;
    for (const auto& l : m) d -= l.mode;
    return d;
}

bool Vacuum::homogeneous(const VacuumElement& v, Weight& w, long& d) const {
    bool first = true;
    for (const auto& [m, c] : v) {
        Weight mw = hweight(m);
        long md = degree(m);
        if (first) {
            w = mw;
            d = md;
            first = false;
        } else if (mw != w || md != d) {
            return false;
        }
    }
    if (first) {
        w = Weight(g_.rank());
        d = 0;
    }
    return true;
}

std::vector<VacuumMonomial> Vacuum::weight_basis(const Weight& lambda, long d) const {
    if (d < 0) throw std::invalid_argument("degree must be nonnegative");
    std::vector<CurrentLetter> letters;
    for (long m = -d; m <= -1; ++m)
        for (int g = 0; g < g_.dim(); ++g) letters.push_back({m, g});
    // letters are already in canonical (mode, gen) order

    std::vector<VacuumMonomial> out;
    VacuumMonomial cur;
    Weight acc(g_.rank());

    auto dfs = [&](auto&& self, size_t from, long remaining) -> void {
        if (remaining == 0) {
            if (acc == lambda) out.push_back(cur);
            return;
        }
        for (size_t i = from; i < letters.size(); ++i) {
            long cost = -letters[i].mode;
            if (cost > remaining) continue;
            cur.push_back(letters[i]);
            acc += g_.gen_weight(letters[i].gen);
            self(self, i, remaining - cost);
            acc -= g_.gen_weight(letters[i].gen);
            cur.pop_back();
        }
    };
    dfs(dfs, 0, d);
    return out;
}

}  // namespace affcert
