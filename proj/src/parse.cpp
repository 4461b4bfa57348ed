#include "affcert/parse.hpp"

#include <cctype>

namespace affcert {

namespace {

// Character scanner tracking 1-based line/column for diagnostics.
struct Scanner {
    std::string_view s;
    size_t pos = 0;
    int base_line = 1;

    bool eof() const { return pos >= s.size(); }
    char peek() const { return s[pos]; }
    char get() { return s[pos++]; }

    [[noreturn]] void fail(const std::string& msg) const {
        int line = base_line, col = 1;
        for (size_t i = 0; i < pos && i < s.size(); ++i) {
            if (s[i] == '\n') ++line, col = 1;
            else ++col;
        }
        throw ParseError(msg, line, col);
    }

    void skip_ws() {
        while (!eof() && std::isspace((unsigned char)peek())) get();
    }

    void expect(char c) {
        if (eof() || peek() != c) fail(std::string("expected '") + c + "'");
        get();
    }

    bool try_char(char c) {
        if (!eof() && peek() == c) {
            get();
            return true;
        }
        return false;
    }

    long read_long() {
        skip_ws();
        bool neg = try_char('-');
        if (!neg) try_char('+');
        if (eof() || !std::isdigit((unsigned char)peek())) fail("expected integer");
        long v = 0;
        while (!eof() && std::isdigit((unsigned char)peek())) v = v * 10 + (get() - '0');
        return neg ? -v : v;
    }

    // Unsigned "p" or "p/q".
    Rational read_unsigned_rational() {
        skip_ws();
        if (eof() || !std::isdigit((unsigned char)peek())) fail("expected number");
        std::string num;
        while (!eof() && std::isdigit((unsigned char)peek())) num += get();
        if (try_char('/')) {
            std::string den;
            while (!eof() && std::isdigit((unsigned char)peek())) den += get();
            if (den.empty()) fail("expected denominator");
            if (Integer(den) == 0) fail("zero denominator");
            return Rational(Integer(num), Integer(den));
        }
        return Rational(Integer(num));
    }

    // e[i,j] | f[i,j] | h[i]
    int read_generator(const SimpleLie& g) {
        skip_ws();
        if (eof()) fail("expected generator");
        char kind = get();
        if (kind != 'e' && kind != 'f' && kind != 'h') fail("expected generator e/f/h");
        expect('[');
        long i = read_long();
        long j = 0;
        if (kind != 'h') {
            skip_ws();
            expect(',');
            j = read_long();
        }
        skip_ws();
        expect(']');
        GenIndex gi{kind == 'e' ? GenKind::E : (kind == 'f' ? GenKind::F : GenKind::H), (int)i,
                    (int)j};
        if (kind == 'h') {
            if (i < 1 || i >= g.n()) fail("h index out of range");
        } else if (i < 1 || j <= i || j > g.n()) {
            fail("generator indices must satisfy 1 <= i < j <= n");
        }
        return g.rank_of(gi);
    }

    // True at a '+' or '-' term separator; consumes it and returns the sign.
    bool read_sign(int& sign) {
        skip_ws();
        if (try_char('+')) {
            sign = 1;
            return true;
        }
        if (try_char('-')) {
            sign = -1;
            return true;
        }
        return false;
    }
};

bool at_generator(Scanner& sc) {
    sc.skip_ws();
    return !sc.eof() && (sc.peek() == 'e' || sc.peek() == 'f' || sc.peek() == 'h');
}

bool at_number(Scanner& sc) {
    sc.skip_ws();
    return !sc.eof() && std::isdigit((unsigned char)sc.peek());
}

}  // namespace

int parse_generator(const SimpleLie& g, std::string_view text) {
    Scanner sc{text};
    int r = sc.read_generator(g);
    sc.skip_ws();
    if (!sc.eof()) sc.fail("trailing input after generator");
    return r;
}

Weight parse_weight(std::string_view text, size_t rank) {
    Scanner sc{text};
    std::vector<Rational> coords;
    for (;;) {
        sc.skip_ws();
        int sign = 1;
        if (sc.try_char('-')) sign = -1;
        else sc.try_char('+');
        Rational r = sc.read_unsigned_rational();
        coords.push_back(sign < 0 ? -r : r);
        sc.skip_ws();
        if (!sc.try_char(',')) break;
    }
    sc.skip_ws();
    if (!sc.eof()) sc.fail("trailing input after weight");
    if (coords.size() != rank) sc.fail("expected " + std::to_string(rank) + " coordinates");
    return Weight(std::move(coords));
}

UeaElement parse_uea_element(const Uea& uea, std::string_view text) {
    Scanner sc{text};
    UeaElement out;
    int sign = 1;
    sc.read_sign(sign);
    bool any = false;
    for (;;) {
        sc.skip_ws();
        if (sc.eof()) break;
        Rational coeff(sign);
        if (at_number(sc)) coeff = Rational(sign) * sc.read_unsigned_rational();
        UeaWord word;
        while (at_generator(sc)) word.push_back(sc.read_generator(uea.algebra()));
        out = uea_add(out, uea_scale(coeff, uea.normalize(word)));
        any = true;
        if (!sc.read_sign(sign)) break;
    }
    sc.skip_ws();
    if (!sc.eof()) sc.fail("unexpected input");
    if (!any) sc.fail("empty expression");
    return out;
}

VacuumElement parse_vacuum_element(const Vacuum& vac, std::string_view text) {
    Scanner sc{text};
    VacuumElement out;
    int sign = 1;
    sc.read_sign(sign);
    bool any = false;
    for (;;) {
        sc.skip_ws();
        if (sc.eof()) break;
        Rational coeff(sign);
        if (at_number(sc)) coeff = Rational(sign) * sc.read_unsigned_rational();
        VacuumMonomial word;
        while (at_generator(sc)) {
            int gen = sc.read_generator(vac.algebra());
            sc.skip_ws();
            sc.expect('(');
            long mode = sc.read_long();
            sc.skip_ws();
            sc.expect(')');
            if (mode >= 0) sc.fail("vacuum monomial modes must be negative");
            word.push_back({mode, gen});
        }
        sc.skip_ws();
        if (sc.try_char('|')) {  // optional |0>
            sc.expect('0');
            sc.expect('>');
        }
        out = vac_add(out, vac_scale(coeff, vac.normal_form(word)));
        any = true;
        if (!sc.read_sign(sign)) break;
    }
    sc.skip_ws();
    if (!sc.eof()) sc.fail("unexpected input");
    if (!any) sc.fail("empty expression");
    return out;
}

std::vector<WeightFamily> parse_families(std::string_view text, size_t rank) {
    std::vector<WeightFamily> out;
    int lineno = 0;
    size_t start = 0;
    while (start <= text.size()) {
        size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string_view::npos) line = line.substr(0, hash);
        bool blank = line.find_first_not_of(" \t\r") == std::string_view::npos;
        if (!blank) {
            size_t bar = line.find('|');
            if (bar == std::string_view::npos)
                throw ParseError("expected 'base | direction'", lineno, 1);
            WeightFamily f;
            try {
                f.base = parse_weight(line.substr(0, bar), rank);
                f.direction = parse_weight(line.substr(bar + 1), rank);
            } catch (const ParseError& e) {
                throw ParseError(e.what(), lineno, e.col);
            }
            out.push_back(std::move(f));
        }
        start = end + 1;
    }
    return out;
}

std::vector<AdjointChain> parse_chains(const SimpleLie& g, std::string_view text) {
    std::vector<AdjointChain> out;
    int lineno = 0;
    size_t start = 0;
    while (start <= text.size()) {
        size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string_view::npos) line = line.substr(0, hash);
        bool blank = line.find_first_not_of(" \t\r") == std::string_view::npos;
        if (!blank) {
            Scanner sc{line, 0, lineno};
            AdjointChain chain;
            int sign = 1;
            sc.skip_ws();
            bool neg = sc.try_char('-');
            chain.scale = sc.read_unsigned_rational();
            if (neg) chain.scale = -chain.scale;
            sc.skip_ws();
            sc.expect(':');
            sc.read_sign(sign);
            for (;;) {
                AdjointChain::Term term;
                term.coeff = Rational(sign);
                if (at_number(sc)) term.coeff = Rational(sign) * sc.read_unsigned_rational();
                while (at_generator(sc)) term.gens.push_back(sc.read_generator(g));
                if (term.gens.empty()) sc.fail("expected generator word");
                chain.terms.push_back(std::move(term));
                if (!sc.read_sign(sign)) break;
            }
            sc.skip_ws();
            if (!sc.eof()) sc.fail("unexpected input");
            out.push_back(std::move(chain));
        }
        start = end + 1;
    }
    return out;
}

namespace {

// expr := term (('+'|'-') term)*
// term := primary+          (product by juxtaposition)
// primary := rational | h<i>['^' k] | '(' expr ')'
CartanPoly parse_poly_expr(Scanner& sc, size_t nvars);

CartanPoly parse_poly_primary(Scanner& sc, size_t nvars) {
    sc.skip_ws();
    CartanPoly p(nvars);
    if (sc.try_char('(')) {
        p = parse_poly_expr(sc, nvars);
        sc.skip_ws();
        sc.expect(')');
        return p;
    }
    if (!sc.eof() && sc.peek() == 'h') {
        sc.get();
        long i = sc.read_long();
        if (i < 1 || (size_t)i > nvars) sc.fail("h index out of range");
        int e = 1;
        sc.skip_ws();
        if (sc.try_char('^')) e = (int)sc.read_long();
        std::vector<int> expo(nvars, 0);
        expo[i - 1] = e;
        p.add_term(expo, Rational(1));
        return p;
    }
    if (at_number(sc)) {
        p.add_term(std::vector<int>(nvars, 0), sc.read_unsigned_rational());
        return p;
    }
    sc.fail("expected polynomial factor");
}

bool at_poly_primary(Scanner& sc) {
    sc.skip_ws();
    if (sc.eof()) return false;
    char c = sc.peek();
    return c == '(' || c == 'h' || std::isdigit((unsigned char)c);
}

CartanPoly parse_poly_term(Scanner& sc, size_t nvars) {
    CartanPoly p = parse_poly_primary(sc, nvars);
    while (at_poly_primary(sc)) p = p * parse_poly_primary(sc, nvars);
    return p;
}

CartanPoly parse_poly_expr(Scanner& sc, size_t nvars) {
    sc.skip_ws();
    int sign = 1;
    if (sc.try_char('-')) sign = -1;
    else sc.try_char('+');
    CartanPoly p = Rational(sign) * parse_poly_term(sc, nvars);
    for (;;) {
        sc.skip_ws();
        if (sc.try_char('+')) sign = 1;
        else if (sc.try_char('-')) sign = -1;
        else break;
        p += Rational(sign) * parse_poly_term(sc, nvars);
    }
    return p;
}

}  // namespace

std::vector<CartanPoly> parse_cartan_polys(std::string_view text, size_t nvars) {
    std::vector<CartanPoly> out;
    int lineno = 0;
    size_t start = 0;
    while (start <= text.size()) {
        size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string_view::npos) line = line.substr(0, hash);
        bool blank = line.find_first_not_of(" \t\r") == std::string_view::npos;
        if (!blank) {
            Scanner sc{line, 0, lineno};
            CartanPoly p = parse_poly_expr(sc, nvars);
            sc.skip_ws();
            if (!sc.eof()) sc.fail("unexpected input");
            out.push_back(std::move(p));
        }
        start = end + 1;
    }
    return out;
}

std::string render_weight(const Weight& w) { return w.str(); }

std::string render_uea_element(const Uea& uea, const UeaElement& u) {
    if (u.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : u) {
        Rational mag = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0) out += "- ";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        first = false;
        bool need_coeff = !(mag == Rational(1)) || w.empty();
        if (need_coeff) out += mag.str();
        for (size_t i = 0; i < w.size(); ++i) {
            if (need_coeff || i) out += ' ';
            out += uea.algebra().gen_name(w[i]);
        }
    }
    return out;
}

std::string render_vacuum_element(const Vacuum& vac, const VacuumElement& v) {
    if (v.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : v) {
        Rational mag = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0) out += "- ";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        first = false;
        bool need_coeff = !(mag == Rational(1)) || m.empty();
        if (need_coeff) out += mag.str();
        bool any = need_coeff;
        for (const auto& l : m) {
            if (any) out += ' ';
            any = true;
            out += vac.algebra().gen_name(l.gen) + "(" + std::to_string(l.mode) + ")";
        }
        if (any) out += ' ';
        out += "|0>";
    }
    return out;
}

}  // namespace affcert
