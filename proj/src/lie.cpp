#include "affcert/lie.hpp"

#include <sstream>
#include <tuple>

namespace affcert {

Weight& Weight::operator+=(const Weight& o) {
    if (coords.size() != o.coords.size()) throw std::invalid_argument("weight rank mismatch");
    for (size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
    return *this;
}

Weight& Weight::operator-=(const Weight& o) {
    if (coords.size() != o.coords.size()) throw std::invalid_argument("weight rank mismatch");
    for (size_t i = 0; i < coords.size(); ++i) coords[i] -= o.coords[i];
    return *this;
}

std::string Weight::str() const {
    std::string out;
    for (size_t i = 0; i < coords.size(); ++i) {
        if (i) out += ',';
        out += coords[i].str();
    }
    return out;
}

LieElement lie_scale(const Rational& c, const LieElement& x) {
    LieElement out;
    if (c.is_zero()) return out;
    for (const auto& [r, v] : x) out.emplace(r, c * v);
    return out;
}

LieElement lie_add(const LieElement& x, const LieElement& y) {
    LieElement out = x;
    for (const auto& [r, v] : y) {
        auto it = out.find(r);
        if (it == out.end()) {
            out.emplace(r, v);
        } else {
            it->second += v;
            if (it->second.is_zero()) out.erase(it);
        }
    }
    return out;
}

namespace {

// Sparse n x n matrix over Q, keyed by (row, col), 0-based.
using Mat = std::map<std::pair<int, int>, Rational>;

void add_to(Mat& m, int r, int c, const Rational& v) {
    if (v.is_zero()) return;
    auto it = m.find({r, c});
    if (it == m.end()) {
        m.emplace(std::pair{r, c}, v);
    } else {
        it->second += v;
        if (it->second.is_zero()) m.erase(it);
    }
}

Mat mat_mul(const Mat& a, const Mat& b, int n) {
    Mat out;
    for (const auto& [rc, v] : a) {
        for (int k = 0; k < n; ++k) {
            auto it = b.find({rc.second, k});
            if (it != b.end()) add_to(out, rc.first, k, v * it->second);
        }
    }
    return out;
}

Rational mat_trace_prod(const Mat& a, const Mat& b) {
    Rational t;
    for (const auto& [rc, v] : a) {
        auto it = b.find({rc.second, rc.first});
        if (it != b.end()) t += v * it->second;
    }
    return t;
}

}  // namespace

SimpleLie::SimpleLie(int n) : n_(n) {
    if (n < 2) throw std::invalid_argument("sl_n needs n >= 2");

    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) gens_.push_back({GenKind::F, i, j});
    for (int i = 1; i < n; ++i) gens_.push_back({GenKind::H, i, 0});
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) gens_.push_back({GenKind::E, i, j});
    for (int r = 0; r < (int)gens_.size(); ++r)
        rank_of_[{(int)gens_[r].kind, gens_[r].i, gens_[r].j}] = r;

    // Matrix-unit realization of each generator.
    std::vector<Mat> mats(dim());
    for (int r = 0; r < dim(); ++r) {
        const GenIndex& g = gens_[r];
        switch (g.kind) {
            case GenKind::E: add_to(mats[r], g.i - 1, g.j - 1, 1); break;
            case GenKind::F: add_to(mats[r], g.j - 1, g.i - 1, 1); break;
            case GenKind::H:
                add_to(mats[r], g.i - 1, g.i - 1, 1);
                add_to(mats[r], g.i, g.i, -1);
                break;
        }
    }

    // Decompose a traceless matrix back into the Chevalley basis. The
    // diagonal d_1..d_n (sum 0) contributes h_i with coefficient d_1+...+d_i.
    auto decompose = [&](const Mat& m) {
        LieElement out;
        std::vector<Rational> diag(n_);
        for (const auto& [rc, v] : m) {
            auto [r, c] = rc;
            if (r == c) {
                diag[r] = v;
            } else if (r < c) {
                out[e(r + 1, c + 1)] = v;
            } else {
                out[f(c + 1, r + 1)] = v;
            }
        }
        Rational partial;
        for (int i = 1; i < n_; ++i) {
            partial += diag[i - 1];
            if (!partial.is_zero()) out[h(i)] = partial;
        }
        return out;
    };

    table_.resize((size_t)dim() * dim());
    form_.resize((size_t)dim() * dim());
    for (int a = 0; a < dim(); ++a) {
        for (int b = 0; b < dim(); ++b) {
            Mat ab = mat_mul(mats[a], mats[b], n_);
            Mat ba = mat_mul(mats[b], mats[a], n_);
            for (const auto& [rc, v] : ba) add_to(ab, rc.first, rc.second, -v);
            table_[(size_t)a * dim() + b] = decompose(ab);
            form_[(size_t)a * dim() + b] = mat_trace_prod(mats[a], mats[b]);
        }
    }

    // Generator weights: wt(g)(h_i) is the eigenvalue in [h_i, g] = c g.
    weights_.resize(dim());
    for (int r = 0; r < dim(); ++r) {
        Weight w(rank());
        if (gens_[r].kind != GenKind::H) {
            for (int i = 1; i < n_; ++i) {
                const LieElement& br = bracket(h(i), r);
                auto it = br.find(r);
                if (it != br.end()) w.coords[i - 1] = it->second;
            }
        }
        weights_[r] = w;
    }
}

int SimpleLie::rank_of(const GenIndex& g) const {
    auto it = rank_of_.find({(int)g.kind, g.i, g.j});
    if (it == rank_of_.end()) throw std::invalid_argument("no such generator");
    return it->second;
}

LieElement SimpleLie::bracket(const LieElement& x, const LieElement& y) const {
    LieElement out;
    for (const auto& [a, ca] : x)
        for (const auto& [b, cb] : y) out = lie_add(out, lie_scale(ca * cb, bracket(a, b)));
    return out;
}

Rational SimpleLie::form(const LieElement& x, const LieElement& y) const {
    Rational out;
    for (const auto& [a, ca] : x)
        for (const auto& [b, cb] : y) out += ca * cb * form(a, b);
    return out;
}

Rational SimpleLie::weight_inner(const Weight& mu, const Weight& nu) const {
    check_rank(mu);
    check_rank(nu);
    Rational out;
    for (int i = 1; i < n_; ++i) {
        if (mu.coords[i - 1].is_zero()) continue;
        for (int j = 1; j < n_; ++j) {
            if (nu.coords[j - 1].is_zero()) continue;
            // <omega_i, omega_j> = min(i,j) - ij/n
            Rational g = Rational(std::min(i, j)) - Rational(i * j, n_);
            out += mu.coords[i - 1] * nu.coords[j - 1] * g;
        }
    }
    return out;
}

Weight SimpleLie::fundamental(int i) const {
    if (i < 1 || i >= n_) throw std::invalid_argument("fundamental weight index out of range");
    Weight w(rank());
    w.coords[i - 1] = 1;
    return w;
}

Weight SimpleLie::rho() const {
    Weight w(rank());
    for (auto& c : w.coords) c = 1;
    return w;
}

Weight SimpleLie::theta() const {
    Weight w(rank());
    if (n_ == 2) {
        w.coords[0] = 2;
    } else {
        w.coords.front() = 1;
        w.coords.back() = 1;
    }
    return w;
}

Weight SimpleLie::simple_root(int i) const { return gen_weight(e(i, i + 1)); }

bool SimpleLie::dominant_integral(const Weight& mu) {
    for (const auto& c : mu.coords)
        if (!c.is_integer() || c.sign() < 0) return false;
    return true;
}

std::string SimpleLie::gen_name(int rank) const {
    const GenIndex& g = gens_.at(rank);
    std::ostringstream os;
    switch (g.kind) {
        case GenKind::E: os << "e[" << g.i << "," << g.j << "]"; break;
        case GenKind::F: os << "f[" << g.i << "," << g.j << "]"; break;
        case GenKind::H: os << "h[" << g.i << "]"; break;
    }
    return os.str();
}

}  // namespace affcert
