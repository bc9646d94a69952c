#include "ncproj/dsl.hpp"

#include <cctype>
#include <sstream>
#include <vector>

#include "ncproj/errors.hpp"

namespace ncproj {

namespace {

struct PolyParser {
    const std::string& s;
    const GenTable& table;
    GenTableHandle handle;
    int line;
    int col_base; // column of s[0] in the original line, 1-based
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(line, col_base + static_cast<int>(pos), msg);
    }

    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    FreePoly parse_expr() {
        bool neg = false;
        skip_ws();
        if (eat('-')) neg = true;
        else eat('+');
        FreePoly acc = parse_term();
        if (neg) acc = -acc;
        for (;;) {
            char c = peek();
            if (c == '+') {
                ++pos;
                acc = acc + parse_term();
            } else if (c == '-') {
                ++pos;
                acc = acc - parse_term();
            } else {
                break;
            }
        }
        return acc;
    }

    FreePoly parse_term() {
        FreePoly acc = parse_factor();
        while (peek() == '*') {
            ++pos;
            acc = poly_mul(acc, parse_factor());
        }
        return acc;
    }

    FreePoly parse_factor() {
        char c = peek();
        if (c == '(') {
            ++pos;
            FreePoly inner = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c))) return parse_ident();
        fail("expected a coefficient, generator or '('");
    }

    FreePoly parse_number() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        std::string num = s.substr(start, pos - start);
        std::string den = "1";
        if (pos < s.size() && s[pos] == '/') {
            ++pos;
            std::size_t dstart = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (pos == dstart) fail("expected denominator digits");
            den = s.substr(dstart, pos - dstart);
            if (mpz_class(den) == 0) fail("zero denominator");
        }
        mpq_class v(num + "/" + den);
        v.canonicalize();
        return FreePoly::monomial(handle, {}, Scalar(table.field(), v));
    }

    FreePoly parse_ident() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        std::string name = s.substr(start, pos - start);
        int idx = table.index_of(name);
        if (idx < 0) {
            pos = start;
            fail("unknown generator '" + name + "'");
        }
        return FreePoly::monomial(handle, Word{static_cast<Letter>(idx)},
                                  Scalar::one(table.field()));
    }

    FreePoly run() {
        FreePoly p = parse_expr();
        skip_ws();
        if (pos != s.size()) fail("unexpected trailing input");
        return p;
    }
};

std::string strip_comment(const std::string& line) {
    auto h = line.find('#');
    return h == std::string::npos ? line : line.substr(0, h);
}

bool is_blank(const std::string& line) {
    for (char c : line)
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    return true;
}

bool valid_ident(const std::string& s) {
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

// split "keyword rest" at first whitespace run
std::pair<std::string, std::string> split_head(const std::string& line, int* rest_col) {
    std::size_t i = 0;
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t ks = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::string kw = line.substr(ks, i - ks);
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (rest_col) *rest_col = static_cast<int>(i) + 1;
    std::string rest = line.substr(i);
    while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.back()))) rest.pop_back();
    return {kw, rest};
}

} // namespace

FreePoly parse_poly_at(const std::string& text, const GenTableHandle& table, int line, int col) {
    PolyParser pp{text, *table, table, line, col};
    return pp.run();
}

FreePoly parse_poly(const std::string& text, const GenTableHandle& table) {
    return parse_poly_at(text, table, 1, 1);
}

Presentation parse_presentation(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    bool have_field = false;
    Field field = Field::rationals();
    std::vector<GeneratorInfo> gens;
    std::vector<std::pair<int, std::pair<int, std::string>>> rel_texts; // line, (col, text)

    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = strip_comment(raw);
        if (is_blank(line)) continue;
        int rest_col = 1;
        auto [kw, rest] = split_head(line, &rest_col);
        if (kw == "field") {
            if (have_field) throw ParseError(lineno, 1, "duplicate field declaration");
            if (rest == "Q") {
                field = Field::rationals();
            } else {
                std::istringstream rs(rest);
                std::string fkw;
                unsigned long p = 0;
                rs >> fkw >> p;
                if (fkw != "F" || p == 0 || !rs.eof())
                    throw ParseError(lineno, rest_col, "expected 'Q' or 'F <p>'");
                try {
                    field = Field::prime(p);
                } catch (const Error& e) {
                    throw ParseError(lineno, rest_col, e.what());
                }
            }
            have_field = true;
        } else if (kw == "gen") {
            if (!have_field) throw ParseError(lineno, 1, "field must be declared before generators");
            std::istringstream rs(rest);
            std::string name;
            long weight = 0;
            if (!(rs >> name >> weight))
                throw ParseError(lineno, rest_col, "expected 'gen <name> <weight>'");
            std::string extra;
            if (rs >> extra)
                throw ParseError(lineno, rest_col, "unexpected trailing input after weight");
            if (!valid_ident(name))
                throw ParseError(lineno, rest_col, "invalid generator name '" + name + "'");
            if (weight <= 0)
                throw ZeroWeight("generator " + name + " declared with weight " + std::to_string(weight) +
                                 " at line " + std::to_string(lineno));
            for (const auto& g : gens)
                if (g.name == name)
                    throw DuplicateGenerator(name + " redeclared at line " + std::to_string(lineno));
            gens.push_back({name, static_cast<int>(weight)});
        } else if (kw == "rel") {
            if (!have_field) throw ParseError(lineno, 1, "field must be declared before relations");
            if (rest.empty()) throw ParseError(lineno, rest_col, "empty relation");
            rel_texts.push_back({lineno, {rest_col, rest}});
        } else {
            throw ParseError(lineno, 1, "unknown directive '" + kw + "'");
        }
    }
    if (!have_field) throw ParseError(lineno ? lineno : 1, 1, "missing field declaration");

    GenTableHandle table = make_gen_table(field, gens);
    std::vector<FreePoly> rels;
    for (const auto& [ln, colText] : rel_texts) {
        FreePoly p = parse_poly_at(colText.second, table, ln, colText.first);
        if (p.is_zero())
            throw ParseError(ln, colText.first, "relation is identically zero");
        if (!p.is_homogeneous())
            throw InhomogeneousRelation(p.to_string() + " (line " + std::to_string(ln) + ")");
        rels.push_back(std::move(p));
    }
    return make_presentation(table, std::move(rels));
}

namespace {

std::pair<std::string, std::string> parse_arrow(const std::string& rest, int lineno, int col) {
    auto arrow = rest.find("->");
    if (arrow == std::string::npos)
        throw ParseError(lineno, col, "expected '<name> -> <expression>'");
    std::string name = rest.substr(0, arrow);
    std::string body = rest.substr(arrow + 2);
    auto trim = [](std::string& x) {
        while (!x.empty() && std::isspace(static_cast<unsigned char>(x.front()))) x.erase(x.begin());
        while (!x.empty() && std::isspace(static_cast<unsigned char>(x.back()))) x.pop_back();
    };
    trim(name);
    trim(body);
    if (!valid_ident(name)) throw ParseError(lineno, col, "invalid generator name '" + name + "'");
    if (body.empty()) throw ParseError(lineno, col, "empty expression");
    return {name, body};
}

} // namespace

MorphismSpec parse_morphism_spec(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    MorphismSpec spec;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = strip_comment(raw);
        if (is_blank(line)) continue;
        int rest_col = 1;
        auto [kw, rest] = split_head(line, &rest_col);
        if (kw == "source") {
            spec.source_path = rest;
        } else if (kw == "target") {
            spec.target_path = rest;
        } else if (kw == "map") {
            auto [name, body] = parse_arrow(rest, lineno, rest_col);
            if (spec.images.count(name))
                throw ParseError(lineno, rest_col, "duplicate map for '" + name + "'");
            spec.images[name] = body;
        } else {
            throw ParseError(lineno, 1, "unknown directive '" + kw + "'");
        }
    }
    if (spec.source_path.empty()) throw ParseError(lineno ? lineno : 1, 1, "missing source");
    if (spec.target_path.empty()) throw ParseError(lineno ? lineno : 1, 1, "missing target");
    return spec;
}

OreSpec parse_ore_spec(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    OreSpec spec;
    bool have_weight = false;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = strip_comment(raw);
        if (is_blank(line)) continue;
        int rest_col = 1;
        auto [kw, rest] = split_head(line, &rest_col);
        if (kw == "base") {
            spec.base_path = rest;
        } else if (kw == "tname") {
            if (!valid_ident(rest)) throw ParseError(lineno, rest_col, "invalid name '" + rest + "'");
            spec.tname = rest;
        } else if (kw == "tweight") {
            try {
                spec.tweight = std::stoi(rest);
            } catch (...) {
                throw ParseError(lineno, rest_col, "expected integer weight");
            }
            have_weight = true;
        } else if (kw == "twist") {
            auto [name, body] = parse_arrow(rest, lineno, rest_col);
            spec.twist[name] = body;
        } else if (kw == "der") {
            auto [name, body] = parse_arrow(rest, lineno, rest_col);
            spec.der[name] = body;
        } else {
            throw ParseError(lineno, 1, "unknown directive '" + kw + "'");
        }
    }
    if (spec.base_path.empty()) throw ParseError(lineno ? lineno : 1, 1, "missing base");
    if (!have_weight) throw ParseError(lineno ? lineno : 1, 1, "missing tweight");
    return spec;
}

} // namespace ncproj
