#include "qquat/parser.hpp"

#include <cctype>

namespace qquat {

namespace {

enum class Tok { Number, Symbol, Plus, Minus, Times, Divide, Caret, LParen, RParen, TensorSign, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

std::vector<Token> lex(const std::string& s) {
    std::vector<Token> out;
    std::size_t k = 0;
    auto skip_ws = [&](std::size_t j) {
        while (j < s.size() && std::isspace(static_cast<unsigned char>(s[j]))) ++j;
        return j;
    };
    while (true) {
        k = skip_ws(k);
        if (k >= s.size()) break;
        const char c = s[k];
        const std::size_t start = k;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
            out.push_back({Tok::Number, s.substr(start, k - start), start});
            continue;
        }
        if (c == '(') {
            std::size_t j = skip_ws(k + 1);
            if (j < s.size() && s[j] == 'x') {
                std::size_t e = skip_ws(j + 1);
                if (e < s.size() && s[e] == ')') {
                    out.push_back({Tok::TensorSign, "(x)", start});
                    k = e + 1;
                    continue;
                }
            }
            out.push_back({Tok::LParen, "(", start});
            ++k;
            continue;
        }
        if (c == 'a' && k + 1 < s.size() && s[k + 1] >= '0' && s[k + 1] <= '3') {
            out.push_back({Tok::Symbol, s.substr(k, 2), start});
            k += 2;
            continue;
        }
        if ((c == 'x' || c == 'y') && k + 1 < s.size() && (s[k + 1] == '+' || s[k + 1] == '-')) {
            out.push_back({Tok::Symbol, s.substr(k, 2), start});
            k += 2;
            continue;
        }
        if (c == 'N' || c == 'i' || c == 'q') {
            if (k + 1 < s.size() && std::isalnum(static_cast<unsigned char>(s[k + 1])))
                throw ParseError("unknown token '" + s.substr(k, 2) + "'", start);
            out.push_back({Tok::Symbol, std::string(1, c), start});
            ++k;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t e = k;
            while (e < s.size() && std::isalnum(static_cast<unsigned char>(s[e]))) ++e;
            throw ParseError("unknown token '" + s.substr(k, e - k) + "'", start);
        }
        Tok t;
        switch (c) {
            case '+': t = Tok::Plus; break;
            case '-': t = Tok::Minus; break;
            case '*': t = Tok::Times; break;
            case '/': t = Tok::Divide; break;
            case '^': t = Tok::Caret; break;
            case ')': t = Tok::RParen; break;
            default: throw ParseError(std::string("unknown token '") + c + "'", start);
        }
        out.push_back({t, std::string(1, c), start});
        ++k;
    }
    out.push_back({Tok::End, "", s.size()});
    return out;
}

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    std::unique_ptr<Expr> run() {
        auto e = sum();
        if (peek().kind == Tok::RParen) throw ParseError("unbalanced ')'", peek().pos);
        if (peek().kind != Tok::End) throw ParseError("unexpected '" + peek().text + "'", peek().pos);
        return e;
    }

private:
    const Token& peek() const { return toks_[at_]; }
    const Token& next() { return toks_[at_++]; }

    static std::unique_ptr<Expr> node(Expr::Kind k, std::size_t pos) {
        auto e = std::make_unique<Expr>();
        e->kind = k;
        e->position = pos;
        return e;
    }
    static std::unique_ptr<Expr> binary(Expr::Kind k, std::size_t pos, std::unique_ptr<Expr> l,
                                        std::unique_ptr<Expr> r) {
        auto e = node(k, pos);
        e->args.push_back(std::move(l));
        e->args.push_back(std::move(r));
        return e;
    }

    std::unique_ptr<Expr> sum() {
        auto e = tensor();
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            const Token& op = next();
            e = binary(op.kind == Tok::Plus ? Expr::Kind::Add : Expr::Kind::Sub, op.pos, std::move(e), tensor());
        }
        return e;
    }

    std::unique_ptr<Expr> tensor() {
        auto e = product();
        while (peek().kind == Tok::TensorSign) {
            const Token& op = next();
            e = binary(Expr::Kind::Tensor, op.pos, std::move(e), product());
        }
        return e;
    }

    std::unique_ptr<Expr> product() {
        auto e = unary();
        while (peek().kind == Tok::Times || peek().kind == Tok::Divide) {
            const Token& op = next();
            e = binary(op.kind == Tok::Times ? Expr::Kind::Mul : Expr::Kind::Div, op.pos, std::move(e), unary());
        }
        return e;
    }

    std::unique_ptr<Expr> unary() {
        if (peek().kind == Tok::Minus) {
            const Token& op = next();
            auto e = node(Expr::Kind::Neg, op.pos);
            e->args.push_back(unary());
            return e;
        }
        return power();
    }

    std::unique_ptr<Expr> power() {
        auto e = atom();
        while (peek().kind == Tok::Caret) {
            const Token& op = next();
            if (peek().kind == Tok::Times) {
                next();
                auto s = node(Expr::Kind::Star, op.pos);
                s->args.push_back(std::move(e));
                e = std::move(s);
                continue;
            }
            bool neg = false;
            if (peek().kind == Tok::Minus) {
                next();
                neg = true;
            }
            if (peek().kind != Tok::Number) throw ParseError("expected exponent or '*' after '^'", peek().pos);
            const Token& n = next();
            if (n.text.size() > 6) throw ParseError("exponent too large", n.pos);
            auto p = node(Expr::Kind::Pow, op.pos);
            p->exponent = (neg ? -1 : 1) * std::stoi(n.text);
            p->args.push_back(std::move(e));
            e = std::move(p);
        }
        return e;
    }

    std::unique_ptr<Expr> atom() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::Number: {
                next();
                auto e = node(Expr::Kind::Number, t.pos);
                e->text = t.text;
                return e;
            }
            case Tok::Symbol: {
                next();
                auto e = node(Expr::Kind::Symbol, t.pos);
                e->text = t.text;
                return e;
            }
            case Tok::LParen: {
                next();
                auto e = sum();
                if (peek().kind != Tok::RParen) throw ParseError("unbalanced '(' opened at " + std::to_string(t.pos),
                                                                 peek().pos);
                next();
                return e;
            }
            case Tok::End: throw ParseError("unexpected end of input", t.pos);
            default: throw ParseError("unexpected '" + t.text + "'", t.pos);
        }
    }

    std::vector<Token> toks_;
    std::size_t at_ = 0;
};

// ---------------------------------------------------------------- evaluation

LocalizedElement as_localized(const Value& v) {
    if (auto e = std::get_if<Element>(&v)) return LocalizedElement(*e, 0);
    return std::get<LocalizedElement>(v);
}

Tensor as_tensor(const Value& v) {
    if (auto e = std::get_if<Element>(&v)) return Tensor::from_element(*e);
    if (auto t = std::get_if<Tensor>(&v)) return *t;
    throw EvalError("fractions cannot be tensor factors");
}

/// Fractions with trivial denominator become plain elements again.
Value simplify(Value v) {
    if (auto l = std::get_if<LocalizedElement>(&v); l && (l->power() == 0 || l->is_zero())) return l->numerator();
    return v;
}

bool is_scalar_value(const Value& v) {
    auto e = std::get_if<Element>(&v);
    return e && e->is_scalar();
}

QScalar scalar_of(const Value& v) { return std::get<Element>(v).scalar_part(); }

Value scale(const QScalar& c, const Value& v) {
    return std::visit([&](const auto& x) -> Value { return c * x; }, v);
}

Value add(const Value& a, const Value& b, bool subtract) {
    const QScalar sign(subtract ? -1 : 1);
    if (std::holds_alternative<Tensor>(a) || std::holds_alternative<Tensor>(b)) {
        if (!std::holds_alternative<Tensor>(a) || !std::holds_alternative<Tensor>(b))
            throw EvalError("cannot add a tensor and a non-tensor");
        const Tensor& x = std::get<Tensor>(a);
        const Tensor& y = std::get<Tensor>(b);
        if (x.rank() != y.rank()) throw EvalError("cannot add tensors of different rank");
        return x + sign * y;
    }
    if (std::holds_alternative<Element>(a) && std::holds_alternative<Element>(b))
        return std::get<Element>(a) + sign * std::get<Element>(b);
    return simplify(as_localized(a) + sign * as_localized(b));
}

Value multiply(const Value& a, const Value& b) {
    if (is_scalar_value(a)) return scale(scalar_of(a), b);
    if (is_scalar_value(b)) return scale(scalar_of(b), a);
    if (std::holds_alternative<Tensor>(a) || std::holds_alternative<Tensor>(b)) {
        if (!std::holds_alternative<Tensor>(a) || !std::holds_alternative<Tensor>(b))
            throw EvalError("cannot multiply a tensor by a non-scalar element");
        const Tensor& x = std::get<Tensor>(a);
        const Tensor& y = std::get<Tensor>(b);
        if (x.rank() != y.rank()) throw EvalError("cannot multiply tensors of different rank");
        return x * y;
    }
    if (std::holds_alternative<Element>(a) && std::holds_alternative<Element>(b))
        return std::get<Element>(a) * std::get<Element>(b);
    return simplify(as_localized(a) * as_localized(b));
}

/// k with d = N^k, for k up to a fixed bound; -1 otherwise.
int norm_power(const Element& d) {
    const Element n = norm_element(d.system());
    Element p = n;
    for (int k = 1; k <= 12; ++k) {
        if (p.degree() > d.degree()) break;
        if (p == d) return k;
        p = p * n;
    }
    return -1;
}

Value divide(const Value& a, const Value& b, std::size_t pos) {
    if (is_scalar_value(b)) {
        QScalar c = scalar_of(b);
        if (c.is_zero()) throw EvalError("division by zero at position " + std::to_string(pos));
        return scale(c.inv(), a);
    }
    const Element* d = std::get_if<Element>(&b);
    int k = d ? norm_power(*d) : -1;
    if (k < 0) throw EvalError("can only divide by scalars and powers of N (position " + std::to_string(pos) + ")");
    if (std::holds_alternative<Tensor>(a)) throw EvalError("cannot divide a tensor by N");
    LocalizedElement l = as_localized(a);
    return simplify(LocalizedElement(l.numerator(), l.power() + k));
}

Value power(const Value& base, int n, std::size_t pos) {
    if (is_scalar_value(base)) {
        QScalar c = scalar_of(base);
        if (n < 0 && c.is_zero()) throw EvalError("zero to a negative power at position " + std::to_string(pos));
        return Element(std::get<Element>(base).system(), c.pow(n));
    }
    if (n < 0) {
        const Element* e = std::get_if<Element>(&base);
        int k = e ? norm_power(*e) : -1;
        if (k < 0) throw EvalError("negative power of a non-invertible value at position " + std::to_string(pos));
        return LocalizedElement(unit(e->system()), -n * k);
    }
    if (auto e = std::get_if<Element>(&base)) return e->pow(n);
    if (auto t = std::get_if<Tensor>(&base)) {
        Tensor r = Tensor::scalar(t->system(), t->rank(), 1);
        for (int k = 0; k < n; ++k) r = r * *t;
        return r;
    }
    const auto& l = std::get<LocalizedElement>(base);
    LocalizedElement r(unit(l.system()), 0);
    for (int k = 0; k < n; ++k) r = r * l;
    return simplify(r);
}

Value star_value(const Value& v) {
    if (auto e = std::get_if<Element>(&v)) return star(*e);
    if (auto t = std::get_if<Tensor>(&v)) return star(*t);
    // N is self-adjoint, so only the numerator changes
    const auto& l = std::get<LocalizedElement>(v);
    return LocalizedElement(star(l.numerator()), l.power());
}

Element symbol(const std::string& s, const SystemPtr& sys) {
    if (s == "q") return Element(sys, QScalar::q());
    if (s == "i") return Element(sys, QScalar::i());
    if (s == "N") return norm_element(sys);
    if (s.size() == 2 && s[0] == 'a') return from_a_basis(sys, s[1] - '0');
    if (s == "x+") return gen(sys, Xp);
    if (s == "x-") return gen(sys, Xm);
    if (s == "y+") return gen(sys, Yp);
    if (s == "y-") return gen(sys, Ym);
    throw EvalError("unknown symbol " + s);
}

}  // namespace

std::unique_ptr<Expr> parse(const std::string& text) { return Parser(lex(text)).run(); }

Value evaluate(const Expr& e, const SystemPtr& sys) {
    using K = Expr::Kind;
    switch (e.kind) {
        case K::Number: return Element(sys, QScalar(GaussianRational(mpq_class(e.text))));
        case K::Symbol: return symbol(e.text, sys);
        case K::Neg: return scale(QScalar(-1), evaluate(*e.args[0], sys));
        case K::Star: return star_value(evaluate(*e.args[0], sys));
        case K::Pow: return power(evaluate(*e.args[0], sys), e.exponent, e.position);
        default: break;
    }
    Value a = evaluate(*e.args[0], sys);
    Value b = evaluate(*e.args[1], sys);
    switch (e.kind) {
        case K::Add: return add(a, b, false);
        case K::Sub: return add(a, b, true);
        case K::Mul: return multiply(a, b);
        case K::Div: return divide(a, b, e.position);
        case K::Tensor: return tensor_product(as_tensor(a), as_tensor(b));
        default: throw EvalError("internal: unhandled expression kind");
    }
}

Value evaluate(const std::string& text, const SystemPtr& sys) { return evaluate(*parse(text), sys); }

Element parse_element(const std::string& text, const SystemPtr& sys) {
    Value v = evaluate(text, sys);
    if (auto e = std::get_if<Element>(&v)) return *e;
    throw EvalError("expected an algebra element, got " + render(v));
}

Tensor parse_tensor(const std::string& text, const SystemPtr& sys) {
    Value v = evaluate(text, sys);
    if (auto t = std::get_if<Tensor>(&v)) return *t;
    throw EvalError("expected a tensor, got " + render(v));
}

std::string render(const Value& v) {
    return std::visit([](const auto& x) { return x.str(); }, v);
}

}  // namespace qquat
