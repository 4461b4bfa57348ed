#include "affcert/uea.hpp"

namespace affcert {

void uea_add_term(UeaElement& dst, const UeaWord& w, const Rational& c) {
    if (c.is_zero()) return;
    auto it = dst.find(w);
    if (it == dst.end()) {
        dst.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) dst.erase(it);
    }
}

UeaElement uea_add(const UeaElement& a, const UeaElement& b) {
    UeaElement out = a;
    for (const auto& [w, c] : b) uea_add_term(out, w, c);
    return out;
}

UeaElement uea_scale(const Rational& c, const UeaElement& u) {
    UeaElement out;
    if (c.is_zero()) return out;
    for (const auto& [w, v] : u) out.emplace(w, c * v);
    return out;
}

bool uea_is_zero(const UeaElement& u) { return u.empty(); }

UeaElement Uea::normalize(const UeaWord& word) const {
    UeaElement out;
    std::vector<std::pair<UeaWord, Rational>> work;
    work.emplace_back(word, Rational(1));
    while (!work.empty()) {
        auto [w, c] = std::move(work.back());
        work.pop_back();
        size_t i = 0;
        while (i + 1 < w.size() && w[i] <= w[i + 1]) ++i;
        if (i + 1 >= w.size()) {
            uea_add_term(out, w, c);
            continue;
        }
        // Inversion at i: w[i] > w[i+1]. Swap and add bracket correction.
        UeaWord swapped = w;
        std::swap(swapped[i], swapped[i + 1]);
        work.emplace_back(std::move(swapped), c);
        for (const auto& [z, cz] : g_.bracket(w[i], w[i + 1])) {
            UeaWord shorter;
            shorter.reserve(w.size() - 1);
            shorter.insert(shorter.end(), w.begin(), w.begin() + i);
            shorter.push_back(z);
            shorter.insert(shorter.end(), w.begin() + i + 2, w.end());
            work.emplace_back(std::move(shorter), c * cz);
        }
    }
    return out;
}

UeaElement Uea::normalize(const UeaElement& u) const {
    UeaElement out;
    for (const auto& [w, c] : u) out = uea_add(out, uea_scale(c, normalize(w)));
    return out;
}

UeaElement Uea::multiply(const UeaElement& u, const UeaElement& v) const {
    UeaElement out;
    for (const auto& [wu, cu] : u) {
        for (const auto& [wv, cv] : v) {
            UeaWord concat = wu;
            concat.insert(concat.end(), wv.begin(), wv.end());
            out = uea_add(out, uea_scale(cu * cv, normalize(concat)));
        }
    }
    return out;
}

UeaElement Uea::adjoint(int gen, const UeaElement& u) const {
    UeaElement out;
    for (const auto& [w, c] : u) {
        for (size_t i = 0; i < w.size(); ++i) {
            for (const auto& [z, cz] : g_.bracket(gen, w[i])) {
                UeaWord replaced = w;
                replaced[i] = z;
                out = uea_add(out, uea_scale(c * cz, normalize(replaced)));
            }
        }
    }
    return out;
}

UeaElement Uea::adjoint(const LieElement& x, const UeaElement& u) const {
    UeaElement out;
    for (const auto& [gen, c] : x) out = uea_add(out, uea_scale(c, adjoint(gen, u)));
    return out;
}

UeaElement Uea::adjoint_chain(std::span<const LieElement> chain, const UeaElement& u) const {
    UeaElement acc = u;
    for (size_t i = chain.size(); i-- > 0;) acc = adjoint(chain[i], acc);
    return acc;
}

UeaElement Uea::adjoint_chain(std::span<const int> gens, const UeaElement& u) const {
    UeaElement acc = u;
    for (size_t i = gens.size(); i-- > 0;) acc = adjoint(gens[i], acc);
    return acc;
}

Weight Uea::word_weight(const UeaWord& w) const {
    Weight out(g_.rank());
    for (int gen : w) out += g_.gen_weight(gen);
    return out;
}

}  // namespace affcert
