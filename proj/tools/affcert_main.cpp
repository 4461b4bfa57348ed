// Command-line front end: parses expression/fixture files, runs the
// certification pipelines, prints reports.
//
// Exit status: 0 = all checks pass, 1 = mathematical failure,
// 2 = usage or parse error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "affcert/hc.hpp"
#include "affcert/parse.hpp"
#include "affcert/singular.hpp"
#include "affcert/wmin.hpp"
#include "affcert/zhu.hpp"

using namespace affcert;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int parse_algebra(const std::string& s) {
    if (s.size() < 3 || s.compare(0, 2, "sl") != 0)
        throw UsageError("--algebra must look like sl6");
    int n = 0;
    try {
        size_t used = 0;
        n = std::stoi(s.substr(2), &used);
        if (used != s.size() - 2) throw std::invalid_argument(s);
    } catch (const std::exception&) {
        throw UsageError("--algebra must look like sl6");
    }
    if (n < 2) throw UsageError("algebra rank must be at least 2");
    return n;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void print_singular_report(const Vacuum& vac, const SingularReport& rep,
                           const std::string& format) {
    if (format == "records") {
        std::cout << "weight=" << render_weight(rep.weight) << "\n";
        std::cout << "degree=" << rep.degree << "\n";
        for (const auto& c : rep.checks)
            std::cout << "check=" << c.label << " zero=" << (c.zero ? 1 : 0) << "\n";
        std::cout << "pass=" << (rep.pass ? 1 : 0) << "\n";
        return;
    }
    std::cout << "weight: " << render_weight(rep.weight) << "\n";
    std::cout << "degree: " << rep.degree << "\n";
    for (const auto& c : rep.checks) {
        std::cout << "  " << c.label << " -> ";
        if (c.zero)
            std::cout << "0\n";
        else
            std::cout << "nonzero: " << render_vacuum_element(vac, c.residual) << "\n";
    }
    std::cout << (rep.pass ? "PASS" : "FAIL") << "\n";
}

int run(int argc, char** argv) {
    CLI::App app{"Exact certification of affine vertex algebra computations"};
    app.require_subcommand(1);

    std::string algebra = "sl6";
    std::string level = "-7/2";
    std::string weight;
    long degree = 0;
    std::string input;
    std::string fixtures;
    std::string format = "text";
    long perturb = 0;
    std::string bound;
    bool extended = false;

    auto add_common = [&](CLI::App* sub, bool with_level) {
        sub->add_option("--algebra", algebra, "Algebra, e.g. sl6")->capture_default_str();
        if (with_level)
            sub->add_option("--level", level, "Level k as p/q")->capture_default_str();
        sub->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"text", "records"}))
            ->capture_default_str();
    };

    CLI::App* verify = app.add_subcommand("verify-singular",
                                          "Check that a vector is singular");
    add_common(verify, true);
    verify->add_option("--input", input, "Vacuum expression file")->required();
    verify->add_flag("--extended", extended, "Also apply all e[i,j](0) and x(1)");

    CLI::App* search = app.add_subcommand("search-singular",
                                          "Kernel of the raising operators on a component");
    add_common(search, true);
    search->add_option("--weight", weight, "Fundamental coordinates c1,...,c_{n-1}")->required();
    search->add_option("--degree", degree, "Conformal degree")->required();

    CLI::App* zhu = app.add_subcommand("zhu-image", "Zhu algebra image in U(sl_n)");
    add_common(zhu, true);
    zhu->add_option("--input", input, "Vacuum expression file")->required();

    CLI::App* classify = app.add_subcommand(
        "classify", "Evaluate the generating polynomials on the weight families");
    add_common(classify, false);
    classify->add_option("--fixtures", fixtures,
                         "Directory with p_polys.txt and families.txt")
        ->required();
    classify->add_option("--perturb", perturb,
                         "Add 1 to the first base coordinate of this family (1-based)");

    CLI::App* wnum = app.add_subcommand("w-numerics", "Top-level eigenvalue tables");
    add_common(wnum, true);
    wnum->add_option("--bound", bound, "Enumerate (q,n) with conformal weight <= bound");
    wnum->add_option("--weight", weight, "Evaluate J(0), L(0) at this weight");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    int n = parse_algebra(algebra);
    SimpleLie g(n);
    Rational k = Rational::parse(level);

    if (verify->parsed()) {
        Vacuum vac(g, k);
        VacuumElement v = parse_vacuum_element(vac, slurp(input));
        SingularReport rep = extended ? verify_singular_extended(vac, v)
                                      : verify_singular(vac, v);
        print_singular_report(vac, rep, format);
        return rep.pass ? 0 : 1;
    }

    if (search->parsed()) {
        Vacuum vac(g, k);
        Weight lam = parse_weight(weight, (size_t)n - 1);
        auto kernel = search_singular(vac, lam, degree);
        if (format == "records") {
            std::cout << "dimension=" << kernel.size() << "\n";
            for (const auto& v : kernel)
                std::cout << "vector=" << render_vacuum_element(vac, v) << "\n";
        } else {
            std::cout << "kernel dimension: " << kernel.size() << "\n";
            for (size_t i = 0; i < kernel.size(); ++i)
                std::cout << "v" << (i + 1) << " = " << render_vacuum_element(vac, kernel[i])
                          << "\n";
        }
        return 0;
    }

    if (zhu->parsed()) {
        Vacuum vac(g, k);
        Uea uea(g);
        VacuumElement v = parse_vacuum_element(vac, slurp(input));
        UeaElement u = zhu_image(uea, v);
        if (format == "records")
            std::cout << "image=" << render_uea_element(uea, u) << "\n";
        else
            std::cout << render_uea_element(uea, u) << "\n";
        return 0;
    }

    if (classify->parsed()) {
        auto polys = parse_cartan_polys(slurp(fixtures + "/p_polys.txt"), (size_t)n - 1);
        auto families = parse_families(slurp(fixtures + "/families.txt"), (size_t)n - 1);
        if (perturb != 0) {
            if (perturb < 1 || (size_t)perturb > families.size())
                throw UsageError("--perturb index out of range");
            families[perturb - 1].base.coords[0] += Rational(1);
        }
        ClassificationReport rep = verify_classification(polys, families);
        if (format == "records") {
            std::cout << "polynomials=" << polys.size() << "\n";
            std::cout << "families=" << families.size() << "\n";
            std::cout << "pairs=" << rep.pairs_checked << "\n";
            for (const auto& f : rep.failures)
                std::cout << "failure poly=" << (f.poly_index + 1)
                          << " family=" << (f.family_index + 1) << " value=" << f.value.str()
                          << "\n";
            std::cout << "pass=" << (rep.pass() ? 1 : 0) << "\n";
        } else {
            std::cout << polys.size() << " polynomials x " << families.size()
                      << " families: " << rep.pairs_checked << " evaluations\n";
            for (const auto& f : rep.failures)
                std::cout << "  nonzero at polynomial " << (f.poly_index + 1) << ", family "
                          << (f.family_index + 1) << ": " << f.value.str() << "\n";
            std::cout << (rep.pass() ? "PASS" : "FAIL") << "\n";
        }
        return rep.pass() ? 0 : 1;
    }

    if (wnum->parsed()) {
        if (!bound.empty()) {
            auto rows = lemma32_enumerate(Rational::parse(bound));
            if (format == "records") {
                for (const auto& r : rows)
                    std::cout << "row q=" << r.q << " n=" << r.n << " t=" << r.t
                              << " h=" << r.conformal_weight.str()
                              << " J=" << r.j_eigenvalue.str() << "\n";
            } else {
                std::cout << "q n t h J\n";
                for (const auto& r : rows)
                    std::cout << r.q << " " << r.n << " " << r.t << " "
                              << r.conformal_weight.str() << " " << r.j_eigenvalue.str()
                              << "\n";
            }
        }
        if (!weight.empty()) {
            Weight lam = parse_weight(weight, (size_t)n - 1);
            Rational h = sugawara_weight(g, k, lam);
            WTopData top = minimal_w_top(n - 2, k, lam);
            if (format == "records") {
                std::cout << "sugawara=" << h.str() << "\n";
                std::cout << "J0=" << top.j_eigenvalue.str() << "\n";
                std::cout << "L0=" << top.conformal_weight.str() << "\n";
            } else {
                std::cout << "sugawara weight: " << h.str() << "\n";
                std::cout << "J(0): " << top.j_eigenvalue.str() << "\n";
                std::cout << "L(0): " << top.conformal_weight.str() << "\n";
            }
        }
        return 0;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
