#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "affcert/hc.hpp"
#include "affcert/uea.hpp"
#include "affcert/vacuum.hpp"

namespace affcert {

/// Parse failure with 1-based source location.
struct ParseError : std::runtime_error {
    int line;
    int col;
    ParseError(const std::string& msg, int line_, int col_)
        : std::runtime_error("parse error at " + std::to_string(line_) + ":" +
                             std::to_string(col_) + ": " + msg),
          line(line_),
          col(col_) {}
};

/// `e[i,j]`, `f[i,j]`, `h[i]`.
int parse_generator(const SimpleLie& g, std::string_view text);

/// Comma-separated fundamental coordinates, e.g. `0,1,0,1,0`.
Weight parse_weight(std::string_view text, size_t rank);

/// Terms `coeff g1 g2 ... gr` joined by `+`/`-`; coefficient optional.
UeaElement parse_uea_element(const Uea& uea, std::string_view text);

/// Terms `coeff g1(m1) ... gr(mr) |0>` joined by `+`/`-`; `|0>` optional;
/// whitespace-insensitive. Letters are normal-ordered on input.
VacuumElement parse_vacuum_element(const Vacuum& vac, std::string_view text);

/// One family per line: `base | direction` in weight coordinate syntax.
/// Blank lines and `#` comments are skipped.
std::vector<WeightFamily> parse_families(std::string_view text, size_t rank);

/// One chain per line: `scale : [sign] [coeff] g g ... [+|- ...]`.
std::vector<AdjointChain> parse_chains(const SimpleLie& g, std::string_view text);

/// Polynomials in h_1..h_l, one per line: terms `coeff [h<i>[^e]]...`.
std::vector<CartanPoly> parse_cartan_polys(std::string_view text, size_t nvars);

std::string render_weight(const Weight& w);
std::string render_uea_element(const Uea& uea, const UeaElement& u);
std::string render_vacuum_element(const Vacuum& vac, const VacuumElement& v);

}  // namespace affcert
