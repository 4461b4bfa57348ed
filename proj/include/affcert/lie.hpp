#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "affcert/rational.hpp"

namespace affcert {

/// Generator kinds of the Chevalley basis of sl_n, in canonical order:
/// all lowering f's, then the Cartan h's, then all raising e's.
enum class GenKind { F = 0, H = 1, E = 2 };

/// One Chevalley generator: e[i,j] / f[i,j] with 1 <= i < j <= n,
/// or h[i] with 1 <= i <= n-1.
struct GenIndex {
    GenKind kind;
    int i;
    int j;  // unused (0) for H

    friend bool operator==(const GenIndex&, const GenIndex&) = default;
};

/// Finite weight in fundamental-weight coordinates: coords[i-1] = mu(h_i).
struct Weight {
    std::vector<Rational> coords;

    Weight() = default;
    explicit Weight(size_t rank) : coords(rank) {}
    explicit Weight(std::vector<Rational> c) : coords(std::move(c)) {}

    size_t rank() const { return coords.size(); }
    bool is_zero() const {
        for (const auto& c : coords)
            if (!c.is_zero()) return false;
        return true;
    }

    Weight& operator+=(const Weight& o);
    Weight& operator-=(const Weight& o);
    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    friend bool operator==(const Weight&, const Weight&) = default;

    std::string str() const;
};

/// Element of sl_n: generator rank -> coefficient, zero coefficients dropped.
using LieElement = std::map<int, Rational>;

LieElement lie_scale(const Rational& c, const LieElement& x);
LieElement lie_add(const LieElement& x, const LieElement& y);

/// Chevalley data for sl_n in the matrix-unit realization
/// e_{i,j} -> E_{i,j}, f_{i,j} -> E_{j,i}, h_i -> E_{i,i} - E_{i+1,i+1}.
/// Structure constants, the trace form and generator weights are
/// computed once at construction and cached; all queries are pure.
class SimpleLie {
  public:
    explicit SimpleLie(int n);

    int n() const { return n_; }
    int rank() const { return n_ - 1; }          // dim of the Cartan
    int dim() const { return n_ * n_ - 1; }      // number of generators

    const GenIndex& gen(int rank) const { return gens_.at(rank); }
    int rank_of(const GenIndex& g) const;
    int e(int i, int j) const { return rank_of({GenKind::E, i, j}); }
    int f(int i, int j) const { return rank_of({GenKind::F, i, j}); }
    int h(int i) const { return rank_of({GenKind::H, i, 0}); }
    bool is_h(int rank) const { return gens_[rank].kind == GenKind::H; }
    bool is_e(int rank) const { return gens_[rank].kind == GenKind::E; }
    bool is_f(int rank) const { return gens_[rank].kind == GenKind::F; }

    /// Structure constants: [gen a, gen b] as a LieElement.
    const LieElement& bracket(int a, int b) const { return table_[a * dim() + b]; }
    LieElement bracket(const LieElement& x, const LieElement& y) const;

    /// Normalized invariant form <x,y> = trace(XY); satisfies <theta,theta> = 2.
    const Rational& form(int a, int b) const { return form_[a * dim() + b]; }
    Rational form(const LieElement& x, const LieElement& y) const;

    /// h-weight of a generator (zero for Cartan elements).
    const Weight& gen_weight(int rank) const { return weights_[rank]; }

    /// Form on h* dual to the invariant form; <omega_i, omega_j> = min(i,j) - ij/n.
    Rational weight_inner(const Weight& mu, const Weight& nu) const;

    Weight fundamental(int i) const;  // omega_i, 1 <= i <= n-1
    Weight rho() const;               // (1,...,1)
    Weight theta() const;             // highest root
    Weight simple_root(int i) const;  // alpha_i in fundamental coordinates

    static bool dominant_integral(const Weight& mu);

    std::string gen_name(int rank) const;

  private:
    void check_rank(const Weight& w) const {
        if ((int)w.rank() != rank()) throw std::invalid_argument("weight rank mismatch");
    }

    int n_;
    std::vector<GenIndex> gens_;
    std::map<std::tuple<int, int, int>, int> rank_of_;
    std::vector<LieElement> table_;   // dim x dim bracket table
    std::vector<Rational> form_;      // dim x dim trace form
    std::vector<Weight> weights_;     // per-generator h-weight
};

}  // namespace affcert
