#pragma once

#include <map>
#include <span>
#include <vector>

#include "affcert/lie.hpp"

namespace affcert {

/// One current symbol x(m). Within a canonical vacuum monomial all
/// modes are negative, ordered mode ascending (most negative first)
/// with ties broken by generator rank.
struct CurrentLetter {
    long mode;
    int gen;

    friend auto operator<=>(const CurrentLetter&, const CurrentLetter&) = default;
};

/// Canonical monomial of V^k(g), implicitly applied to the vacuum;
/// the vacuum itself is the empty sequence.
using VacuumMonomial = std::vector<CurrentLetter>;

/// Element of V^k(g): canonical monomial -> coefficient.
using VacuumElement = std::map<VacuumMonomial, Rational>;

void vac_add_term(VacuumElement& dst, const VacuumMonomial& m, const Rational& c);
VacuumElement vac_add(const VacuumElement& a, const VacuumElement& b);
VacuumElement vac_scale(const Rational& c, const VacuumElement& v);
bool vac_is_zero(const VacuumElement& v);

/// The universal affine vertex algebra V^k(sl_n) as a graded vacuum
/// module. Normal ordering uses [x(m), y(p)] = [x,y](m+p) + m d_{m+p,0} <x,y> k;
/// for two negative modes the central term never fires.
class Vacuum {
  public:
    Vacuum(const SimpleLie& g, Rational level);

    const SimpleLie& algebra() const { return g_; }
    const Rational& level() const { return k_; }

    /// Canonical form of a product of negative-mode letters applied to
    /// the vacuum. Throws on a nonnegative mode (use act for those).
    VacuumElement normal_form(const VacuumMonomial& word) const;

    /// Action of x(m), any m, on an element. Linear; shifts degree by -m
    /// and h-weight by wt(x); annihilates the vacuum for surviving mode >= 0.
    VacuumElement act(int gen, long mode, const VacuumElement& v) const;

    Weight hweight(const VacuumMonomial& m) const;
    static long degree(const VacuumMonomial& m);

    /// True iff every monomial has the same h-weight and degree
    /// (vacuously true for zero); outputs them when homogeneous.
    bool homogeneous(const VacuumElement& v, Weight& w, long& d) const;

    /// Complete, duplicate-free list of canonical monomials with the
    /// given h-weight and degree, in lexicographic order.
    std::vector<VacuumMonomial> weight_basis(const Weight& lambda, long d) const;

  private:
    VacuumElement act_word(int gen, long mode, std::span<const CurrentLetter> rest) const;

    const SimpleLie& g_;
    Rational k_;
};

}  // namespace affcert
