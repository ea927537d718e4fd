#include "povs/parser.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "povs/errors.hpp"

namespace povs {

namespace {

enum class Tok {
    End,
    Number,   // digits, optionally "/digits"
    HomeVar,  // x<digits>
    QuotVar,  // u<digits>
    Basis,    // r<digits>
    ZeroQ,    // 0_Q
    Pi,
    QPred,    // Q
    True,
    False,
    Exists,
    Forall,
    Prec,
    PrecEq,
    LParen,
    RParen,
    Dot,
    Comma,
    Plus,
    Minus,
    Star,
    Eq,
    Neq,
    Lt,
    Le,
    Gt,
    Ge,
    Bang,
    Amp,
    Bar,
    Arrow,
    Iff,
};

struct Token {
    Tok kind = Tok::End;
    std::string text;
    std::size_t pos = 0;
};

std::vector<Token> lex(std::string_view s) {
    std::vector<Token> out;
    std::size_t i = 0;
    auto is_digit = [&](std::size_t k) { return k < s.size() && std::isdigit(static_cast<unsigned char>(s[k])); };
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (is_digit(i))
                ++i;
            if (s.substr(start, i - start) == "0" && s.substr(i, 2) == "_Q") {
                i += 2;
                out.push_back({Tok::ZeroQ, "0_Q", start});
                continue;
            }
            if (i < s.size() && s[i] == '/') {
                ++i;
                if (!is_digit(i))
                    throw ParseError(i, "expected digits after '/'");
                while (is_digit(i))
                    ++i;
            }
            out.push_back({Tok::Number, std::string(s.substr(start, i - start)), start});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
                ++i;
            std::string w(s.substr(start, i - start));
            auto indexed = [&](char prefix) {
                if (w.size() < 2 || w[0] != prefix)
                    return false;
                for (std::size_t k = 1; k < w.size(); ++k)
                    if (!std::isdigit(static_cast<unsigned char>(w[k])))
                        return false;
                return true;
            };
            Tok k;
            if (w == "pi")
                k = Tok::Pi;
            else if (w == "Q")
                k = Tok::QPred;
            else if (w == "true")
                k = Tok::True;
            else if (w == "false")
                k = Tok::False;
            else if (w == "E")
                k = Tok::Exists;
            else if (w == "A")
                k = Tok::Forall;
            else if (w == "prec")
                k = Tok::Prec;
            else if (w == "preceq")
                k = Tok::PrecEq;
            else if (indexed('x'))
                k = Tok::HomeVar;
            else if (indexed('u'))
                k = Tok::QuotVar;
            else if (indexed('r'))
                k = Tok::Basis;
            else
                throw ParseError(start, "unknown identifier '" + w + "'");
            out.push_back({k, w, start});
            continue;
        }
        auto two = s.substr(i, 2);
        auto three = s.substr(i, 3);
        if (three == "<->") {
            out.push_back({Tok::Iff, "<->", start});
            i += 3;
        } else if (two == "->") {
            out.push_back({Tok::Arrow, "->", start});
            i += 2;
        } else if (two == "!=") {
            out.push_back({Tok::Neq, "!=", start});
            i += 2;
        } else if (two == "<=") {
            out.push_back({Tok::Le, "<=", start});
            i += 2;
        } else if (two == ">=") {
            out.push_back({Tok::Ge, ">=", start});
            i += 2;
        } else {
            Tok k;
            switch (c) {
            case '(': k = Tok::LParen; break;
            case ')': k = Tok::RParen; break;
            case '.': k = Tok::Dot; break;
            case ',': k = Tok::Comma; break;
            case '+': k = Tok::Plus; break;
            case '-': k = Tok::Minus; break;
            case '*': k = Tok::Star; break;
            case '=': k = Tok::Eq; break;
            case '<': k = Tok::Lt; break;
            case '>': k = Tok::Gt; break;
            case '!': k = Tok::Bang; break;
            case '&': k = Tok::Amp; break;
            case '|': k = Tok::Bar; break;
            default: throw ParseError(start, std::string("unexpected character '") + c + "'");
            }
            out.push_back({k, std::string(1, c), start});
            ++i;
        }
    }
    out.push_back({Tok::End, "", s.size()});
    return out;
}

// A parsed term before its sort is fixed.
struct RawTerm {
    HomeTerm home;       // home variables, basis elements and rationals
    QuotientTerm quot;   // quotient variables and pi applications
    bool has_home = false;     // a home variable or a basis element
    bool has_rational = false; // a nonzero rational constant
    bool has_quot = false;     // a quotient variable, pi(...) or 0_Q
    std::size_t pos = 0;

    bool neutral() const { return !has_home && !has_quot && home.is_zero(); }
    bool quotient() const { return has_quot; }
};

class Parser {
public:
    Parser(std::string_view text, TheoryMode mode) : tokens_(lex(text)), mode_(mode) {}

    Formula parse_formula_top() {
        Formula f = parse_iff();
        expect(Tok::End, "end of input");
        return f;
    }

    RawTerm parse_term_top() {
        RawTerm t = parse_term();
        expect(Tok::End, "end of input");
        return t;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    bool at(Tok k) const { return peek().kind == k; }
    Token take() { return tokens_[pos_++]; }
    bool accept(Tok k) {
        if (!at(k))
            return false;
        ++pos_;
        return true;
    }
    void expect(Tok k, const char* what) {
        if (!accept(k))
            throw ParseError(peek().pos, std::string("expected ") + what +
                                             (peek().kind == Tok::End ? " at end of input" : " before '" + peek().text + "'"));
    }

    void require_mode_quotient(std::size_t pos, const std::string& what) {
        if (mode_ == TheoryMode::OVS)
            throw ModeError(what + " at " + std::to_string(pos) + " is not part of the ordered vector space language");
    }

    Formula parse_iff() {
        Formula f = parse_implies();
        while (accept(Tok::Iff))
            f = Formula::iff(f, parse_implies());
        return f;
    }

    Formula parse_implies() {
        Formula f = parse_or();
        if (accept(Tok::Arrow))
            return Formula::implies(f, parse_implies());
        return f;
    }

    Formula parse_or() {
        std::vector<Formula> parts{parse_and()};
        while (accept(Tok::Bar))
            parts.push_back(parse_and());
        return Formula::disj(std::move(parts));
    }

    Formula parse_and() {
        std::vector<Formula> parts{parse_unary()};
        while (accept(Tok::Amp))
            parts.push_back(parse_unary());
        return Formula::conj(std::move(parts));
    }

    Variable take_variable() {
        const Token& t = peek();
        if (t.kind == Tok::HomeVar) {
            take();
            return Variable::home(std::stoi(t.text.substr(1)));
        }
        if (t.kind == Tok::QuotVar) {
            require_mode_quotient(t.pos, "quotient variable " + t.text);
            take();
            return Variable::quot(std::stoi(t.text.substr(1)));
        }
        throw ParseError(t.pos, "expected a variable after quantifier");
    }

    Formula parse_unary() {
        if (accept(Tok::Bang))
            return Formula::negate(parse_unary());
        if (at(Tok::Exists) || at(Tok::Forall)) {
            bool exists = take().kind == Tok::Exists;
            std::vector<Variable> vars{take_variable()};
            while (!at(Tok::Dot)) {
                accept(Tok::Comma);
                if (at(Tok::Exists) || at(Tok::Forall))
                    break;
                vars.push_back(take_variable());
            }
            Formula body = at(Tok::Dot) ? (take(), parse_iff()) : parse_unary();
            for (auto it = vars.rbegin(); it != vars.rend(); ++it)
                body = exists ? Formula::exists(*it, body) : Formula::forall(*it, body);
            return body;
        }
        return parse_primary();
    }

    Formula parse_primary() {
        if (accept(Tok::True))
            return Formula::truth();
        if (accept(Tok::False))
            return Formula::falsity();
        if (accept(Tok::LParen)) {
            Formula f = parse_iff();
            expect(Tok::RParen, "')'");
            return f;
        }
        if (at(Tok::QPred)) {
            std::size_t p = take().pos;
            require_mode_quotient(p, "predicate Q");
            expect(Tok::LParen, "'(' after Q");
            RawTerm t = parse_term();
            expect(Tok::RParen, "')'");
            if (t.quotient())
                throw SortError("Q applied to a quotient-sort term at " + std::to_string(p));
            return Formula::atom(Atom::in_q(t.home));
        }
        return parse_comparison();
    }

    Formula parse_comparison() {
        RawTerm lhs = parse_term();
        Token op = take();
        switch (op.kind) {
        case Tok::Eq:
        case Tok::Neq:
        case Tok::Lt:
        case Tok::Le:
        case Tok::Gt:
        case Tok::Ge:
        case Tok::Prec:
        case Tok::PrecEq: break;
        default: throw ParseError(op.pos, "expected a comparison operator");
        }
        if ((op.kind == Tok::Prec || op.kind == Tok::PrecEq) && mode_ != TheoryMode::POVS_PREC)
            throw ModeError("'" + op.text + "' at " + std::to_string(op.pos) + " requires theory mode povs-prec");
        RawTerm rhs = parse_term();

        bool quotient = lhs.quotient() || rhs.quotient();
        if (quotient) {
            for (const RawTerm* t : {&lhs, &rhs})
                if (!t->quotient() && !t->neutral())
                    throw SortError("comparison at " + std::to_string(op.pos) + " mixes home and quotient sorts");
            QuotientTerm d = lhs.quot - rhs.quot;
            switch (op.kind) {
            case Tok::Eq: return Formula::atom(Atom::quot_eq(d));
            case Tok::Neq: return Formula::negate(Formula::atom(Atom::quot_eq(d)));
            case Tok::Prec: return Formula::atom(Atom::quot_prec(d));
            case Tok::PrecEq: return Formula::disj({Formula::atom(Atom::quot_prec(d)), Formula::atom(Atom::quot_eq(d))});
            default: throw SortError("'" + op.text + "' at " + std::to_string(op.pos) + " compares quotient-sort terms");
            }
        }
        if (op.kind == Tok::Prec || op.kind == Tok::PrecEq)
            throw SortError("'" + op.text + "' at " + std::to_string(op.pos) + " compares home-sort terms");
        HomeTerm d = lhs.home - rhs.home;
        switch (op.kind) {
        case Tok::Eq: return Formula::atom(Atom::home_eq(d));
        case Tok::Neq: return Formula::negate(Formula::atom(Atom::home_eq(d)));
        case Tok::Lt: return Formula::atom(Atom::home_lt(d));
        case Tok::Gt: return Formula::atom(Atom::home_lt(-d));
        case Tok::Le: return Formula::disj({Formula::atom(Atom::home_lt(d)), Formula::atom(Atom::home_eq(d))});
        case Tok::Ge: return Formula::disj({Formula::atom(Atom::home_lt(-d)), Formula::atom(Atom::home_eq(d))});
        default: break;
        }
        throw ParseError(op.pos, "unsupported operator");
    }

    RawTerm parse_term() {
        RawTerm t;
        t.pos = peek().pos;
        bool negative = false;
        if (accept(Tok::Minus))
            negative = true;
        else
            accept(Tok::Plus);
        parse_summand(t, negative);
        while (at(Tok::Plus) || at(Tok::Minus)) {
            negative = take().kind == Tok::Minus;
            parse_summand(t, negative);
        }
        if (t.has_quot && (t.has_home || t.has_rational))
            throw SortError("term at " + std::to_string(t.pos) + " mixes home and quotient sorts");
        return t;
    }

    void parse_summand(RawTerm& t, bool negative) {
        Rational scale(negative ? -1 : 1);
        if (at(Tok::Number)) {
            Token n = take();
            Rational r = Rational::parse(n.text);
            if (!accept(Tok::Star)) {
                if (!r.is_zero())
                    t.has_rational = true;
                t.home += HomeTerm(ModelElement(scale * r));
                return;
            }
            scale *= r;
        }
        Token item = take();
        switch (item.kind) {
        case Tok::Number: {
            Rational r = Rational::parse(item.text);
            if (!(scale * r).is_zero())
                t.has_rational = true;
            t.home += HomeTerm(ModelElement(scale * r));
            return;
        }
        case Tok::HomeVar:
            t.has_home = true;
            t.home += HomeTerm::var(Variable::home(std::stoi(item.text.substr(1))), scale);
            return;
        case Tok::Basis: {
            long radicand = std::stol(item.text.substr(1));
            auto k = index_of_prime(radicand);
            if (!k)
                throw ParseError(item.pos, "'" + item.text + "' does not name the square root of a prime");
            t.has_home = true;
            t.home += HomeTerm(ModelElement::sqrt_prime(*k, scale));
            return;
        }
        case Tok::QuotVar:
            require_mode_quotient(item.pos, "quotient variable " + item.text);
            t.has_quot = true;
            t.quot += QuotientTerm::var(Variable::quot(std::stoi(item.text.substr(1))), scale);
            return;
        case Tok::ZeroQ:
            require_mode_quotient(item.pos, "0_Q");
            t.has_quot = true;
            return;
        case Tok::Pi: {
            require_mode_quotient(item.pos, "pi");
            expect(Tok::LParen, "'(' after pi");
            RawTerm inner = parse_term();
            expect(Tok::RParen, "')'");
            if (inner.quotient())
                throw SortError("pi applied to a quotient-sort term at " + std::to_string(item.pos));
            t.has_quot = true;
            t.quot += QuotientTerm::pi(inner.home) * scale;
            return;
        }
        default:
            throw ParseError(item.pos, item.kind == Tok::End ? "unexpected end of input in term"
                                                             : "unexpected '" + item.text + "' in term");
        }
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    TheoryMode mode_;
};

} // namespace

Formula parse(std::string_view text, TheoryMode mode) {
    Parser p(text, mode);
    return rename_apart(p.parse_formula_top());
}

ModelElement parse_element(std::string_view text) {
    Parser p(text, TheoryMode::OVS);
    RawTerm t = p.parse_term_top();
    if (!t.home.is_constant())
        throw ParseError(0, "element literal '" + std::string(text) + "' contains a variable");
    return t.home.constant();
}

ModelElement ModelElement::parse(std::string_view text) { return parse_element(text); }

} // namespace povs
