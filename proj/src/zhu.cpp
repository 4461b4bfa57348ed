#include "affcert/zhu.hpp"

namespace affcert {

UeaElement zhu_image(const Uea& uea, const VacuumElement& v) {
    UeaElement out;
    for (const auto& [m, c] : v) {
        // sign (-1)^(n1+...+nr) with mode_i = -n_i - 1, so the exponent
        // is degree - length.
        long exponent = Vacuum::degree(m) - (long)m.size();
        Rational sign((exponent % 2 == 0) ? 1 : -1);
        UeaWord word;
        word.reserve(m.size());
        for (auto it = m.rbegin(); it != m.rend(); ++it) word.push_back(it->gen);
        out = uea_add(out, uea_scale(c * sign, uea.normalize(word)));
    }
    return out;
}

namespace {

UeaElement image_word(const Uea& uea, std::span<const CurrentLetter> w) {
    if (w.empty()) {
        UeaElement one;
        one.emplace(UeaWord{}, Rational(1));
        return one;
    }
    CurrentLetter l0 = w.front();
    if (l0.mode <= -2) {
        CurrentLetter shallower{l0.mode + 1, l0.gen};
        std::vector<CurrentLetter> rest(w.begin(), w.end());
        rest[0] = shallower;
        return uea_scale(Rational(-1), image_word(uea, rest));
    }
    // l0.mode == -1: [a(-1)u] = a.[u] - [a,[u]]
    UeaElement inner = image_word(uea, w.subspan(1));
    UeaElement a;
    a.emplace(UeaWord{l0.gen}, Rational(1));
    return uea_add(uea.multiply(a, inner), uea_scale(Rational(-1), uea.adjoint(l0.gen, inner)));
}

}  // namespace

UeaElement zhu_image_oracle(const Uea& uea, const VacuumElement& v) {
    UeaElement out;
    for (const auto& [m, c] : v) out = uea_add(out, uea_scale(c, image_word(uea, m)));
    return out;
}

}  // namespace affcert
