// Python bindings: a thin string-based facade over the C++ engine.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "affcert/hc.hpp"
#include "affcert/parse.hpp"
#include "affcert/singular.hpp"
#include "affcert/wmin.hpp"
#include "affcert/zhu.hpp"

namespace py = pybind11;
using namespace affcert;

namespace {

Rational rat(const std::string& s) { return Rational::parse(s); }

py::dict report_to_dict(const Vacuum& vac, const SingularReport& rep) {
    py::dict out;
    out["weight"] = render_weight(rep.weight);
    out["degree"] = rep.degree;
    py::list checks;
    for (const auto& c : rep.checks) {
        py::dict d;
        d["operator"] = c.label;
        d["zero"] = c.zero;
        if (!c.zero) d["residual"] = render_vacuum_element(vac, c.residual);
        checks.append(d);
    }
    out["checks"] = checks;
    out["pass"] = rep.pass;
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact certification of affine vertex algebra computations";

    m.def(
        "verify_singular",
        [](int n, const std::string& level, const std::string& text, bool extended) {
            SimpleLie g(n);
            Vacuum vac(g, rat(level));
            VacuumElement v = parse_vacuum_element(vac, text);
            SingularReport rep =
                extended ? verify_singular_extended(vac, v) : verify_singular(vac, v);
            return report_to_dict(vac, rep);
        },
        py::arg("n"), py::arg("level"), py::arg("vector"), py::arg("extended") = false);

    m.def(
        "search_singular",
        [](int n, const std::string& level, const std::string& weight, long degree) {
            SimpleLie g(n);
            Vacuum vac(g, rat(level));
            Weight lam = parse_weight(weight, (size_t)n - 1);
            std::vector<std::string> out;
            for (const auto& v : search_singular(vac, lam, degree))
                out.push_back(render_vacuum_element(vac, v));
            return out;
        },
        py::arg("n"), py::arg("level"), py::arg("weight"), py::arg("degree"));

    m.def(
        "zhu_image",
        [](int n, const std::string& level, const std::string& text) {
            SimpleLie g(n);
            Vacuum vac(g, rat(level));
            Uea uea(g);
            return render_uea_element(uea, zhu_image(uea, parse_vacuum_element(vac, text)));
        },
        py::arg("n"), py::arg("level"), py::arg("vector"));

    m.def(
        "classify",
        [](int n, const std::string& polys_text, const std::string& families_text) {
            auto polys = parse_cartan_polys(polys_text, (size_t)n - 1);
            auto families = parse_families(families_text, (size_t)n - 1);
            ClassificationReport rep = verify_classification(polys, families);
            py::dict out;
            out["pairs"] = rep.pairs_checked;
            py::list failures;
            for (const auto& f : rep.failures)
                failures.append(py::make_tuple(f.poly_index, f.family_index, f.value.str()));
            out["failures"] = failures;
            out["pass"] = rep.pass();
            return out;
        },
        py::arg("n"), py::arg("polynomials"), py::arg("families"));

    m.def(
        "w_top",
        [](int m_, const std::string& level, const std::string& weight) {
            WTopData top = minimal_w_top(m_, rat(level), parse_weight(weight, (size_t)m_ + 1));
            return py::make_tuple(top.j_eigenvalue.str(), top.conformal_weight.str());
        },
        py::arg("m"), py::arg("level"), py::arg("weight"));

    m.def(
        "lemma32_rows",
        [](const std::string& bound) {
            py::list out;
            for (const auto& r : lemma32_enumerate(rat(bound)))
                out.append(py::make_tuple(r.q, r.n, r.t, r.conformal_weight.str(),
                                          r.j_eigenvalue.str()));
            return out;
        },
        py::arg("bound"));
}
