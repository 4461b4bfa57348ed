#pragma once

#include <map>
#include <span>
#include <vector>

#include "affcert/lie.hpp"

namespace affcert {

/// PBW monomial: generator ranks, nondecreasing left to right
/// (all f's, then all h's, then all e's).
using UeaWord = std::vector<int>;

/// Element of U(sl_n): canonical monomial -> coefficient.
using UeaElement = std::map<UeaWord, Rational>;

void uea_add_term(UeaElement& dst, const UeaWord& w, const Rational& c);
UeaElement uea_add(const UeaElement& a, const UeaElement& b);
UeaElement uea_scale(const Rational& c, const UeaElement& u);
bool uea_is_zero(const UeaElement& u);

/// PBW arithmetic in U(sl_n). Rewrites adjacent inversions
/// xy -> yx + [x,y]; terminates because each step either removes an
/// inversion at equal length or strictly shortens the word.
class Uea {
  public:
    explicit Uea(const SimpleLie& g) : g_(g) {}

    const SimpleLie& algebra() const { return g_; }

    /// Canonical form of an arbitrary word, as an element of U(g).
    UeaElement normalize(const UeaWord& word) const;
    UeaElement normalize(const UeaElement& u) const;

    UeaElement multiply(const UeaElement& u, const UeaElement& v) const;

    /// Adjoint action x_L u = xu - ux, computed by the Leibniz rule.
    UeaElement adjoint(int gen, const UeaElement& u) const;
    UeaElement adjoint(const LieElement& x, const UeaElement& u) const;

    /// Composition of adjoint actions, rightmost chain factor first:
    /// chain (x_1,...,x_r) gives x_1_L(...(x_r_L u)...).
    UeaElement adjoint_chain(std::span<const LieElement> chain, const UeaElement& u) const;
    UeaElement adjoint_chain(std::span<const int> gens, const UeaElement& u) const;

    /// h-weight of a monomial: sum of its letters' weights.
    Weight word_weight(const UeaWord& w) const;

  private:
    const SimpleLie& g_;
};

}  // namespace affcert
