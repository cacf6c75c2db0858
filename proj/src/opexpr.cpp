#include "diffschub/opexpr.hpp"

#include <cctype>
#include <type_traits>

#include "diffschub/errors.hpp"

namespace diffschub {

namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    void expect(char c, const char* what) {
        if (peek() != c) throw ParseError(std::string("expected ") + what, pos);
        ++pos;
    }

    static OpPtr make(OperatorExpr e) {
        return std::make_shared<const OperatorExpr>(std::move(e));
    }

    OpPtr parse_expr() { return parse_sum(); }

    OpPtr parse_sum() {
        OperatorExpr sum;
        sum.kind = OperatorExpr::Kind::Sum;
        int sign = 1;
        if (peek() == '+' || peek() == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        }
        sum.children.push_back(parse_prod());
        sum.signs.push_back(sign);
        while (peek() == '+' || peek() == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
            sum.children.push_back(parse_prod());
            sum.signs.push_back(sign);
        }
        if (sum.children.size() == 1 && sum.signs[0] == 1) return sum.children[0];
        return make(std::move(sum));
    }

    OpPtr parse_prod() {
        Rational coeff;
        bool scaled = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            const std::size_t start = pos;
            while (pos < s.size() &&
                   (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/'))
                ++pos;
            try {
                coeff = Rational::parse(s.substr(start, pos - start));
            } catch (const std::exception&) {
                throw ParseError("bad rational literal", start);
            }
            expect('*', "'*' after coefficient");
            scaled = true;
        }
        OperatorExpr comp;
        comp.kind = OperatorExpr::Kind::Compose;
        comp.children.push_back(parse_atom());
        while (starts_atom(peek())) comp.children.push_back(parse_atom());
        OpPtr body = comp.children.size() == 1 ? comp.children[0] : make(std::move(comp));
        if (!scaled) return body;
        OperatorExpr sc;
        sc.kind = OperatorExpr::Kind::Scale;
        sc.scale = coeff;
        sc.children.push_back(std::move(body));
        return make(std::move(sc));
    }

    static bool starts_atom(char c) {
        return c == 'x' || c == 'n' || c == 'r' || c == '[' || c == '(';
    }

    OpPtr parse_atom() {
        const char c = peek();
        if (c == '(') {
            ++pos;
            OpPtr inner = parse_expr();
            expect(')', "')'");
            return inner;
        }
        if (c == '[') {
            ++pos;
            OperatorExpr br;
            br.kind = OperatorExpr::Kind::Bracket;
            br.children.push_back(parse_expr());
            expect(',', "',' in commutator");
            br.children.push_back(parse_expr());
            expect(']', "']'");
            return make(std::move(br));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const std::size_t start = pos;
            while (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos]))) ++pos;
            const std::string name = s.substr(start, pos - start);
            if (name == "xi") {
                OperatorExpr e;
                e.kind = OperatorExpr::Kind::Xi;
                return make(std::move(e));
            }
            if (name == "nabla") {
                OperatorExpr e;
                e.kind = OperatorExpr::Kind::Nabla;
                return make(std::move(e));
            }
            if (name == "rho") {
                expect('(', "'(' after rho");
                skip_ws();
                const std::size_t numstart = pos;
                if (pos < s.size() && s[pos] == '-') ++pos;
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
                if (pos == numstart) throw ParseError("expected integer rho index", pos);
                int k = 0;
                try {
                    k = std::stoi(s.substr(numstart, pos - numstart));
                } catch (const std::exception&) {
                    throw ParseError("bad rho index", numstart);
                }
                if (k < 1) throw ParseError("rho index must be >= 1", numstart);
                expect(')', "')'");
                OperatorExpr e;
                e.kind = OperatorExpr::Kind::Rho;
                e.k = k;
                return make(std::move(e));
            }
            if (name == "xiL") {
                expect('(', "'(' after xiL");
                skip_ws();
                const std::size_t litstart = pos;
                std::string lit;
                while (pos < s.size() && s[pos] != ')') {
                    if (!std::isspace(static_cast<unsigned char>(s[pos]))) lit += s[pos];
                    ++pos;
                }
                expect(')', "')'");
                try {
                    OperatorExpr e;
                    e.kind = OperatorExpr::Kind::XiLam;
                    e.lam = Partition::parse(lit);
                    return make(std::move(e));
                } catch (const std::exception&) {
                    throw ParseError("bad partition literal", litstart);
                }
            }
            throw ParseError("unknown operator '" + name + "'", start);
        }
        if (pos >= s.size()) throw ParseError("unexpected end of input", pos);
        throw ParseError("unexpected character", pos);
    }
};

// True if e prints as a single self-delimiting token sequence usable as an atom.
bool is_atomic(const OperatorExpr& e) {
    switch (e.kind) {
        case OperatorExpr::Kind::Xi:
        case OperatorExpr::Kind::Nabla:
        case OperatorExpr::Kind::Rho:
        case OperatorExpr::Kind::XiLam:
        case OperatorExpr::Kind::Bracket:
            return true;
        default:
            return false;
    }
}

void print_to(const OperatorExpr& e, std::string& out);

void print_atom(const OperatorExpr& e, std::string& out) {
    if (is_atomic(e)) {
        print_to(e, out);
    } else {
        out += '(';
        print_to(e, out);
        out += ')';
    }
}

void print_prod(const OperatorExpr& e, std::string& out) {
    if (e.kind == OperatorExpr::Kind::Sum) {
        out += '(';
        print_to(e, out);
        out += ')';
    } else {
        print_to(e, out);
    }
}

void print_to(const OperatorExpr& e, std::string& out) {
    using Kind = OperatorExpr::Kind;
    switch (e.kind) {
        case Kind::Xi:
            out += "xi";
            return;
        case Kind::Nabla:
            out += "nabla";
            return;
        case Kind::Rho:
            out += "rho(" + std::to_string(e.k) + ")";
            return;
        case Kind::XiLam:
            out += "xiL(" + e.lam.str() + ")";
            return;
        case Kind::Bracket:
            out += '[';
            print_to(*e.children[0], out);
            out += ", ";
            print_to(*e.children[1], out);
            out += ']';
            return;
        case Kind::Compose:
            for (std::size_t i = 0; i < e.children.size(); ++i) {
                if (i) out += ' ';
                print_atom(*e.children[i], out);
            }
            return;
        case Kind::Scale:
            out += e.scale.str();
            out += " * ";
            if (e.children[0]->kind == Kind::Compose) {
                print_to(*e.children[0], out);
            } else {
                print_atom(*e.children[0], out);
            }
            return;
        case Kind::Sum:
            for (std::size_t i = 0; i < e.children.size(); ++i) {
                if (i == 0) {
                    if (e.signs[0] < 0) out += '-';
                } else {
                    out += e.signs[i] < 0 ? " - " : " + ";
                }
                print_prod(*e.children[i], out);
            }
            return;
    }
}

template <typename Elem>
Elem eval(const OperatorExpr& e, const Elem& x) {
    using Kind = OperatorExpr::Kind;
    constexpr bool diag = std::is_same_v<Elem, DiagElement>;
    switch (e.kind) {
        case Kind::Xi:
            if constexpr (diag) return xi(x);
            else return xi_perm(x);
        case Kind::Nabla:
            if constexpr (diag) return nabla(x);
            else return nabla_perm(x);
        case Kind::Rho:
            if constexpr (diag) return rho(e.k, x);
            else return rho_perm(e.k, x);
        case Kind::XiLam:
            if constexpr (diag) return xi_lambda(e.lam, x);
            else return xi_lambda_perm(e.lam, x);
        case Kind::Compose: {
            Elem cur = x;
            for (auto it = e.children.rbegin(); it != e.children.rend(); ++it)
                cur = eval(**it, cur);
            return cur;
        }
        case Kind::Sum: {
            Elem out;
            for (std::size_t i = 0; i < e.children.size(); ++i) {
                Elem term = eval(*e.children[i], x);
                if (e.signs[i] < 0)
                    out -= term;
                else
                    out += term;
            }
            return out;
        }
        case Kind::Scale:
            return e.scale * eval(*e.children[0], x);
        case Kind::Bracket:
            return eval(*e.children[0], eval(*e.children[1], x)) -
                   eval(*e.children[1], eval(*e.children[0], x));
    }
    throw InternalInconsistency("unreachable operator kind");
}

}  // namespace

OpPtr parse_op(const std::string& s) {
    Parser p{s};
    OpPtr e = p.parse_expr();
    p.skip_ws();
    if (p.pos != s.size()) throw ParseError("trailing input", p.pos);
    return e;
}

std::string print_op(const OperatorExpr& e) {
    std::string out;
    print_to(e, out);
    return out;
}

DiagElement apply_op(const OperatorExpr& e, const DiagElement& x) { return eval(e, x); }
SchubElement apply_op(const OperatorExpr& e, const SchubElement& x) { return eval(e, x); }

}  // namespace diffschub
