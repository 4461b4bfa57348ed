#include "affcert/singular.hpp"

#include <map>
#include <stdexcept>

namespace affcert {

namespace {

struct Raiser {
    int gen;
    long mode;
};

// e_{i,i+1}(0) for i = 1..n-1 and f_{1,n}(1); these generate all
// positive affine root operators.
std::vector<Raiser> raising_set(const SimpleLie& g) {
    std::vector<Raiser> ops;
    for (int i = 1; i < g.n(); ++i) ops.push_back({g.e(i, i + 1), 0});
    ops.push_back({g.f(1, g.n()), 1});
    return ops;
}

std::string op_label(const SimpleLie& g, const Raiser& op) {
    return g.gen_name(op.gen) + "(" + std::to_string(op.mode) + ")";
}

SingularReport run_checks(const Vacuum& vac, const VacuumElement& v,
                          const std::vector<Raiser>& ops) {
    SingularReport rep;
    if (!vac.homogeneous(v, rep.weight, rep.degree))
        throw std::invalid_argument("verify_singular requires a homogeneous vector");
    rep.pass = true;
    for (const auto& op : ops) {
        SingularCheck chk;
        chk.label = op_label(vac.algebra(), op);
        chk.residual = vac.act(op.gen, op.mode, v);
        chk.zero = vac_is_zero(chk.residual);
        rep.pass = rep.pass && chk.zero;
        rep.checks.push_back(std::move(chk));
    }
    return rep;
}

}  // namespace

SingularReport verify_singular(const Vacuum& vac, const VacuumElement& v) {
    return run_checks(vac, v, raising_set(vac.algebra()));
}

SingularReport verify_singular_extended(const Vacuum& vac, const VacuumElement& v) {
    const SimpleLie& g = vac.algebra();
    std::vector<Raiser> ops;
    for (int i = 1; i <= g.n(); ++i)
        for (int j = i + 1; j <= g.n(); ++j) ops.push_back({g.e(i, j), 0});
    for (int r = 0; r < g.dim(); ++r) ops.push_back({r, 1});
    return run_checks(vac, v, ops);
}

std::vector<VacuumElement> search_singular(const Vacuum& vac, const Weight& lambda, long d) {
    const SimpleLie& g = vac.algebra();
    auto basis = vac.weight_basis(lambda, d);
    if (basis.empty()) return {};

    // Stack one row block per operator: express each image in the
    // weight_basis of its target component.
    std::vector<Raiser> ops = raising_set(g);
    std::vector<std::vector<VacuumElement>> images(ops.size());
    std::vector<std::map<VacuumMonomial, size_t>> target_index(ops.size());
    size_t total_rows = 0;
    for (size_t o = 0; o < ops.size(); ++o) {
        Weight target_w = lambda + g.gen_weight(ops[o].gen);
        long target_d = d - ops[o].mode;
        auto target = vac.weight_basis(target_w, target_d);
        for (size_t t = 0; t < target.size(); ++t) target_index[o][target[t]] = t;
        total_rows += target.size();
        images[o].reserve(basis.size());
        for (const auto& mono : basis) {
            VacuumElement v;
            v.emplace(mono, Rational(1));
            images[o].push_back(vac.act(ops[o].gen, ops[o].mode, v));
        }
    }

    RationalMatrix m(total_rows, basis.size());
    size_t row_base = 0;
    for (size_t o = 0; o < ops.size(); ++o) {
        for (size_t col = 0; col < basis.size(); ++col) {
            for (const auto& [mono, c] : images[o][col]) {
                auto it = target_index[o].find(mono);
                if (it == target_index[o].end())
                    throw std::logic_error("image monomial missing from target weight_basis");
                m.at(row_base + it->second, col) = c;
            }
        }
        row_base += target_index[o].size();
    }

    std::vector<VacuumElement> out;
    for (const auto& vec : nullspace(m)) {
        VacuumElement v;
        for (size_t col = 0; col < basis.size(); ++col) vac_add_term(v, basis[col], vec[col]);
        if (!verify_singular(vac, v).pass)
            throw std::logic_error("search_singular produced a non-singular kernel vector");
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace affcert
