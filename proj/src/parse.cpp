#include "hhgabber/parse.hpp"

#include <cctype>

namespace hhgabber {

namespace {

struct Token {
    enum class Kind { ident, number, punct, end };
    Kind kind;
    std::string text;
    int line, column;
};

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto advance = [&](char c) {
        if (c == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    };
    while (i < text.size()) {
        char c = text[i];
        if (c == '#') {  // line comment
            while (i < text.size() && text[i] != '\n')
                advance(text[i++]);
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(c);
            ++i;
            continue;
        }
        int tl = line, tc = col;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string s;
            while (i < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
                s += text[i];
                advance(text[i++]);
            }
            out.push_back({Token::Kind::ident, s, tl, tc});
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string s;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                s += text[i];
                advance(text[i++]);
            }
            out.push_back({Token::Kind::number, s, tl, tc});
            continue;
        }
        if (std::string("+-*/^=,;{}").find(c) != std::string::npos) {
            out.push_back({Token::Kind::punct, std::string(1, c), tl, tc});
            advance(c);
            ++i;
            continue;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
    out.push_back({Token::Kind::end, "", line, col});
    return out;
}

class Cursor {
public:
    explicit Cursor(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    const Token& peek() const { return tokens_[pos_]; }
    const Token& next() { return tokens_[pos_ == tokens_.size() - 1 ? pos_ : pos_++]; }
    bool at_end() const { return peek().kind == Token::Kind::end; }

    bool accept_punct(const char* p) {
        if (peek().kind == Token::Kind::punct && peek().text == p) {
            next();
            return true;
        }
        return false;
    }
    const Token& expect_punct(const char* p) {
        if (!(peek().kind == Token::Kind::punct && peek().text == p))
            throw ParseError(std::string("expected '") + p + "'", peek().line, peek().column);
        return next();
    }
    const Token& expect_ident() {
        if (peek().kind != Token::Kind::ident)
            throw ParseError("expected an identifier", peek().line, peek().column);
        return next();
    }
    const Token& expect_number() {
        if (peek().kind != Token::Kind::number)
            throw ParseError("expected a number", peek().line, peek().column);
        return next();
    }
    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(message, peek().line, peek().column);
    }

private:
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

bool at_term_break(const Cursor& c) {
    const Token& t = c.peek();
    if (t.kind == Token::Kind::end)
        return true;
    if (t.kind != Token::Kind::punct)
        return false;
    return t.text == "+" || t.text == "-" || t.text == "," || t.text == ";" || t.text == "}" ||
           t.text == "=";
}

Rational parse_coefficient(Cursor& c) {
    const Token& num = c.expect_number();
    if (c.accept_punct("/")) {
        const Token& den = c.expect_number();
        if (mpz_class(den.text) == 0)
            throw ParseError("zero denominator", den.line, den.column);
        return rational_from_strings(num.text, den.text);
    }
    return rational_from_strings(num.text, "1");
}

std::int32_t parse_exponent(Cursor& c) {
    const Token& e = c.expect_number();
    long v = std::stol(e.text);
    if (v > INT32_MAX)
        throw ParseError("exponent too large", e.line, e.column);
    return static_cast<std::int32_t>(v);
}

// One +/- separated term of a commutative polynomial.
Polynomial parse_poly_term(Cursor& c, const RingPtr& ring) {
    Rational coeff(1);
    bool saw_coeff = false;
    if (c.peek().kind == Token::Kind::number) {
        coeff = parse_coefficient(c);
        saw_coeff = true;
        if (at_term_break(c))
            return Polynomial::constant(ring, coeff);
        c.expect_punct("*");
    }
    Monomial mono(ring->arity());
    bool saw_factor = false;
    while (true) {
        const Token& name = c.expect_ident();
        int idx = ring->index_of(name.text);
        if (idx < 0)
            throw ParseError("unknown identifier '" + name.text + "'", name.line, name.column);
        std::int32_t exp = 1;
        if (c.accept_punct("^"))
            exp = parse_exponent(c);
        mono = mono * Monomial::variable(ring->arity(), static_cast<std::size_t>(idx), exp);
        saw_factor = true;
        if (!c.accept_punct("*"))
            break;
        if (c.peek().kind == Token::Kind::number)
            c.fail("coefficient must lead the term");
    }
    if (!saw_factor && !saw_coeff)
        c.fail("expected a term");
    return Polynomial::term(ring, mono, coeff);
}

Polynomial parse_poly_expr(Cursor& c, const RingPtr& ring) {
    Polynomial f = Polynomial::zero(ring);
    bool negative = false;
    if (c.accept_punct("-"))
        negative = true;
    else
        c.accept_punct("+");
    while (true) {
        Polynomial t = parse_poly_term(c, ring);
        f += negative ? -t : t;
        if (c.accept_punct("-"))
            negative = true;
        else if (c.accept_punct("+"))
            negative = false;
        else
            break;
    }
    return f;
}

// One term of a Weyl operator: factors multiply in written order through
// the normal-ordering product.
WeylOperator parse_weyl_term(Cursor& c, std::size_t n) {
    Rational coeff(1);
    bool saw_coeff = false;
    if (c.peek().kind == Token::Kind::number) {
        coeff = parse_coefficient(c);
        saw_coeff = true;
        if (at_term_break(c))
            return WeylOperator::constant(n, coeff);
        c.expect_punct("*");
    }
    WeylOperator op = WeylOperator::constant(n, coeff);
    bool saw_factor = false;
    while (true) {
        const Token& name = c.expect_ident();
        char head = name.text.empty() ? '\0' : name.text[0];
        std::size_t index = 0;
        bool ok = (head == 'x' || head == 'd') && name.text.size() > 1;
        if (ok) {
            for (std::size_t k = 1; k < name.text.size(); ++k)
                ok = ok && std::isdigit(static_cast<unsigned char>(name.text[k]));
            if (ok)
                index = std::stoul(name.text.substr(1));
        }
        if (!ok || index < 1 || index > n)
            throw ParseError("unknown identifier '" + name.text + "' (expected x1..x" +
                                 std::to_string(n) + " or d1..d" + std::to_string(n) + ")",
                             name.line, name.column);
        std::int32_t exp = 1;
        if (c.accept_punct("^"))
            exp = parse_exponent(c);
        WeylOperator gen = head == 'x' ? WeylOperator::coordinate(n, index - 1)
                                       : WeylOperator::derivation(n, index - 1);
        for (std::int32_t e = 0; e < exp; ++e)
            op = op * gen;
        saw_factor = true;
        if (!c.accept_punct("*"))
            break;
        if (c.peek().kind == Token::Kind::number)
            c.fail("coefficient must lead the term");
    }
    if (!saw_factor && !saw_coeff)
        c.fail("expected a term");
    return op;
}

WeylOperator parse_weyl_expr(Cursor& c, std::size_t n) {
    WeylOperator f = WeylOperator::zero(n);
    bool negative = false;
    if (c.accept_punct("-"))
        negative = true;
    else
        c.accept_punct("+");
    while (true) {
        WeylOperator t = parse_weyl_term(c, n);
        f += negative ? -t : t;
        if (c.accept_punct("-"))
            negative = true;
        else if (c.accept_punct("+"))
            negative = false;
        else
            break;
    }
    return f;
}

}  // namespace

Polynomial parse_polynomial(const std::string& text, const RingPtr& ring) {
    Cursor c(tokenize(text));
    Polynomial f = parse_poly_expr(c, ring);
    if (!c.at_end())
        c.fail("trailing input after polynomial");
    return f;
}

WeylOperator parse_weyl_operator(const std::string& text, std::size_t n) {
    Cursor c(tokenize(text));
    WeylOperator f = parse_weyl_expr(c, n);
    if (!c.at_end())
        c.fail("trailing input after operator");
    return f;
}

namespace {

bool is_canonical_cotangent(const PolyRing& ring) {
    if (!ring.cotangent())
        return false;
    std::size_t n = ring.arity() / 2;
    for (std::size_t i = 0; i < n; ++i) {
        if (ring.name(i) != "x" + std::to_string(i + 1))
            return false;
        if (ring.name(n + i) != "xi" + std::to_string(i + 1))
            return false;
    }
    return true;
}

}  // namespace

Problem parse_input(const std::string& text) {
    Cursor c(tokenize(text));
    Problem p;
    std::vector<Polynomial> ideal_gens;
    std::vector<WeylOperator> dmod_gens;

    while (!c.at_end()) {
        const Token& head = c.expect_ident();
        if (head.text == "ring") {
            if (p.ring)
                throw ParseError("duplicate ring declaration", head.line, head.column);
            std::vector<std::string> names;
            bool cotangent = false;
            while (c.peek().kind == Token::Kind::ident) {
                std::string name = c.next().text;
                if (name == "cotangent") {
                    cotangent = true;
                    break;
                }
                names.push_back(std::move(name));
            }
            c.expect_punct(";");
            if (names.empty())
                throw ParseError("ring declaration needs variables", head.line, head.column);
            try {
                p.ring = make_ring(std::move(names), cotangent);
            } catch (const std::invalid_argument& e) {
                throw ParseError(e.what(), head.line, head.column);
            }
        } else if (head.text == "ideal") {
            if (!p.ring)
                throw ParseError("ideal declared before ring", head.line, head.column);
            if (p.ideal || !ideal_gens.empty())
                throw ParseError("duplicate ideal declaration", head.line, head.column);
            if (!dmod_gens.empty())
                throw ParseError("a file declares either an ideal or a dmodule, not both",
                                 head.line, head.column);
            p.ideal_name = c.expect_ident().text;
            c.expect_punct("=");
            do {
                Polynomial g = parse_poly_expr(c, p.ring);
                if (g.is_zero())
                    throw ParseError("zero ideal generator", c.peek().line, c.peek().column);
                ideal_gens.push_back(std::move(g));
            } while (c.accept_punct(","));
            c.expect_punct(";");
        } else if (head.text == "dmodule") {
            if (!p.ring)
                throw ParseError("dmodule declared before ring", head.line, head.column);
            if (!is_canonical_cotangent(*p.ring))
                throw ParseError(
                    "dmodule needs the cotangent ring x1..xn xi1..xin (with 'cotangent')",
                    head.line, head.column);
            if (!dmod_gens.empty())
                throw ParseError("duplicate dmodule declaration", head.line, head.column);
            if (!ideal_gens.empty())
                throw ParseError("a file declares either an ideal or a dmodule, not both",
                                 head.line, head.column);
            p.dmodule_name = c.expect_ident().text;
            c.expect_punct("=");
            std::size_t n = p.ring->pairs();
            do {
                WeylOperator g = parse_weyl_expr(c, n);
                if (g.is_zero())
                    throw ParseError("zero dmodule generator", c.peek().line, c.peek().column);
                dmod_gens.push_back(std::move(g));
            } while (c.accept_punct(","));
            c.expect_punct(";");
        } else if (head.text == "bracket") {
            if (!p.ring)
                throw ParseError("bracket declared before ring", head.line, head.column);
            if (c.peek().kind == Token::Kind::ident && c.peek().text == "canonical") {
                c.next();
                c.expect_punct(";");
                if (p.bracket_table)
                    throw ParseError("bracket is already a table", head.line, head.column);
                if (!p.ring->cotangent())
                    throw ParseError("canonical bracket needs a cotangent ring", head.line,
                                     head.column);
                p.bracket_canonical = true;
            } else {
                if (p.bracket_canonical)
                    throw ParseError("bracket is already canonical", head.line, head.column);
                c.expect_punct("{");
                const Token& a = c.expect_ident();
                c.expect_punct(",");
                const Token& b = c.expect_ident();
                c.expect_punct("}");
                c.expect_punct("=");
                Polynomial value = parse_poly_expr(c, p.ring);
                c.expect_punct(";");
                int ia = p.ring->index_of(a.text);
                int ib = p.ring->index_of(b.text);
                if (ia < 0)
                    throw ParseError("unknown identifier '" + a.text + "'", a.line, a.column);
                if (ib < 0)
                    throw ParseError("unknown identifier '" + b.text + "'", b.line, b.column);
                if (ia == ib)
                    throw ParseError("bracket pair must name two distinct variables", a.line,
                                     a.column);
                if (!p.bracket_table)
                    p.bracket_table.emplace(p.ring);
                std::size_t lo = static_cast<std::size_t>(std::min(ia, ib));
                std::size_t hi = static_cast<std::size_t>(std::max(ia, ib));
                if (p.bracket_table->brackets.count({lo, hi}))
                    throw ParseError("duplicate bracket pair", a.line, a.column);
                p.bracket_table->set(static_cast<std::size_t>(ia), static_cast<std::size_t>(ib),
                                     value);
            }
        } else if (head.text == "radical") {
            if (!p.ring)
                throw ParseError("radical declared before ring", head.line, head.column);
            const Token& kw = c.expect_ident();
            if (kw.text != "user")
                throw ParseError("expected 'radical user = ...'", kw.line, kw.column);
            if (p.user_radical)
                throw ParseError("duplicate radical declaration", head.line, head.column);
            c.expect_punct("=");
            std::vector<Polynomial> gens;
            do {
                Polynomial g = parse_poly_expr(c, p.ring);
                if (g.is_zero())
                    throw ParseError("zero radical generator", c.peek().line, c.peek().column);
                gens.push_back(std::move(g));
            } while (c.accept_punct(","));
            c.expect_punct(";");
            p.user_radical = std::move(gens);
        } else if (head.text == "check") {
            const Token& kw = c.expect_ident();
            if (kw.text != "gabber")
                throw ParseError("unknown check '" + kw.text + "'", kw.line, kw.column);
            c.expect_punct(";");
            p.check_requested = true;
        } else {
            throw ParseError("unknown declaration '" + head.text + "'", head.line, head.column);
        }
    }

    if (!p.ring)
        throw ParseError("input declares no ring", 1, 1);
    if (!dmod_gens.empty() && p.bracket_table)
        throw ParseError("dmodule checks use the canonical bracket; a bracket table is not "
                         "allowed alongside one",
                         1, 1);
    if (!ideal_gens.empty())
        p.ideal.emplace(p.ring, std::move(ideal_gens));
    if (!dmod_gens.empty())
        p.dmodule.emplace(p.ring->pairs(), std::move(dmod_gens));
    return p;
}

std::string Problem::echo() const {
    std::string out = "ring";
    for (const auto& name : ring->names())
        out += " " + name;
    if (ring->cotangent())
        out += " cotangent";
    out += ";\n";
    if (ideal) {
        out += "ideal " + (ideal_name.empty() ? "I" : ideal_name) + " = ";
        const auto& gens = ideal->generators();
        for (std::size_t i = 0; i < gens.size(); ++i) {
            if (i)
                out += ", ";
            out += gens[i].to_string();
        }
        out += ";\n";
    }
    if (dmodule) {
        out += "dmodule " + (dmodule_name.empty() ? "M" : dmodule_name) + " = ";
        for (std::size_t i = 0; i < dmodule->left_ideal_generators.size(); ++i) {
            if (i)
                out += ", ";
            out += dmodule->left_ideal_generators[i].to_string();
        }
        out += ";\n";
    }
    if (bracket_canonical)
        out += "bracket canonical;\n";
    if (bracket_table) {
        for (const auto& [ij, value] : bracket_table->brackets) {
            out += "bracket {" + ring->name(ij.first) + "," + ring->name(ij.second) +
                   "} = " + value.to_string() + ";\n";
        }
    }
    if (user_radical) {
        out += "radical user = ";
        for (std::size_t i = 0; i < user_radical->size(); ++i) {
            if (i)
                out += ", ";
            out += (*user_radical)[i].to_string();
        }
        out += ";\n";
    }
    if (check_requested)
        out += "check gabber;\n";
    return out;
}

}  // namespace hhgabber
