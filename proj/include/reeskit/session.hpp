#pragma once

#include <cctype>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "rees.hpp"

namespace reeskit {

struct ParseError : std::runtime_error {
    int line, col;
    ParseError(int line_, int col_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ", col " + std::to_string(col_) +
                             ": " + msg),
          line(line_), col(col_) {}
};

// ---------------------------------------------------------------------------
// polynomial parser: integer coefficients, + - * ^, no implicit multiplication
// ---------------------------------------------------------------------------

namespace detail {

struct PolyParser {
    const std::string& s;
    const RegistryPtr& reg;
    int64_t p;
    int line;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }
    int col() const { return static_cast<int>(pos) + 1; }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(line, col(), msg); }

    int64_t parse_nat() {
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            fail("expected a number");
        int64_t v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos] - '0');
            if (v > (int64_t(1) << 40)) fail("number too large");
            ++pos;
        }
        return v;
    }

    std::string parse_ident() {
        skip_ws();
        if (pos >= s.size() || !(std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            fail("expected a variable name");
        std::size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_' || s[pos] == '\''))
            ++pos;
        return s.substr(start, pos - start);
    }

    // factor := ident ['^' nat]
    void parse_factor(Monomial& m) {
        std::size_t at = pos;
        std::string name = parse_ident();
        auto idx = reg->find(name);
        if (!idx) {
            pos = at;
            fail("unknown variable '" + name + "'");
        }
        int64_t e = 1;
        if (peek() == '^') {
            ++pos;
            e = parse_nat();
        }
        if (m.exp(*idx) + e > Monomial::kMaxExp) fail("exponent too large");
        m.set_exp(*idx, static_cast<int32_t>(m.exp(*idx) + e));
    }

    // term := nat ['*' factor ...] | factor ['*' factor ...]
    Polynomial parse_term() {
        int64_t c = 1;
        Monomial m(reg->size());
        bool any = false;
        skip_ws();
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            c = parse_nat();
            any = true;
            if (peek() == '*') {
                ++pos;
                parse_factor(m);
                while (peek() == '*') {
                    ++pos;
                    parse_factor(m);
                }
            }
        } else {
            parse_factor(m);
            any = true;
            while (peek() == '*') {
                ++pos;
                parse_factor(m);
            }
        }
        if (!any) fail("expected a term");
        return Polynomial::term(reg, p, std::move(m), c);
    }

    Polynomial parse_poly() {
        Polynomial acc = Polynomial::zero(reg, p);
        int sign = 1;
        if (peek() == '-') {
            sign = -1;
            ++pos;
        } else if (peek() == '+') {
            ++pos;
        }
        for (;;) {
            Polynomial t = parse_term();
            acc = sign > 0 ? acc + t : acc - t;
            char c = peek();
            if (c == '+') {
                sign = 1;
                ++pos;
            } else if (c == '-') {
                sign = -1;
                ++pos;
            } else {
                break;
            }
        }
        return acc;
    }
};

} // namespace detail

inline Polynomial parse_polynomial(const RegistryPtr& reg, int64_t p, const std::string& text,
                                   int line = 0) {
    detail::PolyParser pp{text, reg, p, line};
    Polynomial f = pp.parse_poly();
    if (!pp.eof()) pp.fail("unexpected trailing input");
    return f;
}

// ---------------------------------------------------------------------------
// the session file
// ---------------------------------------------------------------------------

// field <prime>
// ring <var> <var> ...
// rel <poly>                  (repeatable)
// ideal <Name> = <poly>, ...  (repeatable)
// y <IdealName> <1-based index of the generator playing y>
// # comment; lines starting with #@ carry suite expectations
struct SessionFile {
    int64_t p = 32003;
    RegistryPtr reg;
    std::vector<std::string> rel_texts;
    std::vector<Polynomial> rels;
    std::vector<std::string> ideal_order;
    std::map<std::string, std::vector<Polynomial>> ideals;
    std::map<std::string, std::vector<std::string>> ideal_texts;
    std::map<std::string, int> y_roles; // 0-based
    std::vector<std::string> expectations; // raw '#@'-annotation bodies

    PresentedRing ring() const { return PresentedRing{reg, p, rels}; }

    IdealSpec ideal(const std::string& name) const {
        auto it = ideals.find(name);
        if (it == ideals.end()) throw std::invalid_argument("unknown ideal '" + name + "'");
        IdealSpec spec{ring(), it->second, -1};
        auto y = y_roles.find(name);
        if (y != y_roles.end()) spec.y_index = y->second;
        return spec;
    }

    // canonical form: parse(print(parse(text))) == parse(text)
    std::string print() const {
        std::ostringstream os;
        os << "field " << p << "\n";
        os << "ring";
        for (int i = 0; i < reg->size(); ++i) os << " " << reg->name(i);
        os << "\n";
        for (const auto& r : rels) os << "rel " << r.to_string() << "\n";
        for (const auto& name : ideal_order) {
            os << "ideal " << name << " =";
            bool first = true;
            for (const auto& g : ideals.at(name)) {
                os << (first ? " " : ", ") << g.to_string();
                first = false;
            }
            os << "\n";
            auto y = y_roles.find(name);
            if (y != y_roles.end()) os << "y " << name << " " << (y->second + 1) << "\n";
        }
        return os.str();
    }
};

// same session under another coefficient prime, rebuilt from the source texts
inline SessionFile reparse_with_field(const SessionFile& sf, int64_t newp) {
    if (!fp_is_prime(newp))
        throw std::invalid_argument("field override: " + std::to_string(newp) + " is not prime");
    SessionFile out;
    out.p = newp;
    out.reg = sf.reg;
    out.rel_texts = sf.rel_texts;
    for (const auto& t : sf.rel_texts) {
        Polynomial f = parse_polynomial(sf.reg, newp, t);
        if (!f.is_zero()) out.rels.push_back(f);
    }
    out.ideal_order = sf.ideal_order;
    out.ideal_texts = sf.ideal_texts;
    for (const auto& [name, texts] : sf.ideal_texts) {
        std::vector<Polynomial> gens;
        for (const auto& t : texts) gens.push_back(parse_polynomial(sf.reg, newp, t));
        out.ideals.emplace(name, std::move(gens));
    }
    out.y_roles = sf.y_roles;
    out.expectations = sf.expectations;
    return out;
}

inline SessionFile parse_session(const std::string& text) {
    SessionFile sf;
    bool have_field = false, have_ring = false;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        // comments: whole-line '#', with '#@' kept as expectation annotations
        auto hash = line.find('#');
        if (hash != std::string::npos) {
            if (hash + 1 < line.size() && line[hash + 1] == '@')
                sf.expectations.push_back(line.substr(hash + 2));
            line = line.substr(0, hash);
        }
        std::size_t b = line.find_first_not_of(" \t");
        if (b == std::string::npos) continue;
        std::size_t e = line.find_last_not_of(" \t");
        line = line.substr(b, e - b + 1);

        std::istringstream ls(line);
        std::string kw;
        ls >> kw;
        if (kw == "field") {
            int64_t v;
            if (!(ls >> v)) throw ParseError(lineno, 1, "field: expected a prime");
            if (!fp_is_prime(v)) throw ParseError(lineno, 1, "field: " + std::to_string(v) + " is not prime");
            sf.p = v;
            have_field = true;
        } else if (kw == "ring") {
            if (have_ring) throw ParseError(lineno, 1, "duplicate ring declaration");
            std::vector<std::string> names;
            std::string n;
            while (ls >> n) names.push_back(n);
            if (names.empty()) throw ParseError(lineno, 1, "ring: expected variable names");
            try {
                sf.reg = VarRegistry::make_base(names);
            } catch (const std::invalid_argument& ex) {
                throw ParseError(lineno, 1, std::string("ring: ") + ex.what());
            }
            have_ring = true;
        } else if (kw == "rel") {
            if (!have_ring) throw ParseError(lineno, 1, "rel before ring declaration");
            std::string rest;
            std::getline(ls, rest);
            Polynomial f = parse_polynomial(sf.reg, sf.p, rest, lineno);
            if (!f.is_zero()) {
                sf.rels.push_back(f);
                sf.rel_texts.push_back(rest);
            }
        } else if (kw == "ideal") {
            if (!have_ring) throw ParseError(lineno, 1, "ideal before ring declaration");
            std::string name, eq;
            if (!(ls >> name >> eq) || eq != "=")
                throw ParseError(lineno, 1, "ideal: expected 'ideal <Name> = <gens>'");
            if (sf.ideals.count(name))
                throw ParseError(lineno, 1, "duplicate ideal name '" + name + "'");
            std::string rest;
            std::getline(ls, rest);
            std::vector<Polynomial> gens;
            std::vector<std::string> texts;
            std::size_t start = 0;
            while (start <= rest.size()) {
                std::size_t comma = rest.find(',', start);
                std::string piece = comma == std::string::npos ? rest.substr(start)
                                                               : rest.substr(start, comma - start);
                gens.push_back(parse_polynomial(sf.reg, sf.p, piece, lineno));
                texts.push_back(piece);
                if (comma == std::string::npos) break;
                start = comma + 1;
            }
            if (gens.empty()) throw ParseError(lineno, 1, "ideal: no generators");
            sf.ideal_order.push_back(name);
            sf.ideals.emplace(name, std::move(gens));
            sf.ideal_texts.emplace(name, std::move(texts));
        } else if (kw == "y") {
            std::string name;
            int idx;
            if (!(ls >> name >> idx)) throw ParseError(lineno, 1, "y: expected '<Ideal> <index>'");
            auto it = sf.ideals.find(name);
            if (it == sf.ideals.end())
                throw ParseError(lineno, 1, "y: unknown ideal '" + name + "'");
            if (idx < 1 || idx > static_cast<int>(it->second.size()))
                throw ParseError(lineno, 1, "y: generator index out of range");
            sf.y_roles[name] = idx - 1;
        } else {
            throw ParseError(lineno, 1, "unknown keyword '" + kw + "'");
        }
    }
    if (!have_ring) throw ParseError(lineno, 1, "missing ring declaration");
    (void)have_field; // 32003 by default
    return sf;
}

} // namespace reeskit
