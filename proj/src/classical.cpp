#include "qquat/classical.hpp"

namespace qquat {

CommPoly CommPoly::constant(const GaussianRational& c) {
    CommPoly p;
    p.add({0, 0, 0, 0}, c);
    return p;
}

CommPoly CommPoly::variable(int index) {
    CommPoly p;
    Exponents e{0, 0, 0, 0};
    e.at(static_cast<std::size_t>(index)) = 1;
    p.add(e, GaussianRational(1));
    return p;
}

void CommPoly::add(const Exponents& e, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (inserted) return;
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
}

CommPoly& CommPoly::operator+=(const CommPoly& o) {
    for (const auto& [e, c] : o.terms_) add(e, c);
    return *this;
}

CommPoly operator-(CommPoly a, const CommPoly& b) {
    for (const auto& [e, c] : b.terms_) a.add(e, -c);
    return a;
}

CommPoly operator*(const CommPoly& a, const CommPoly& b) {
    CommPoly out;
    for (const auto& [e, c] : a.terms_) {
        for (const auto& [f, d] : b.terms_) {
            CommPoly::Exponents g;
            for (std::size_t k = 0; k < 4; ++k) g[k] = e[k] + f[k];
            out.add(g, c * d);
        }
    }
    return out;
}

CommPoly operator*(const GaussianRational& c, const CommPoly& a) { return CommPoly::constant(c) * a; }

CommPoly CommPoly::reduce_unit_norm() const {
    // xp^a xm^b with a, b > 0: pull out (xp xm)^min(a,b) = (1 - yp ym)^min(a,b)
    const CommPoly one_minus = constant(GaussianRational(1)) - variable(0) * variable(1);
    CommPoly out;
    for (const auto& [e, c] : terms_) {
        int m = std::min(e[2], e[3]);
        Exponents rest = e;
        rest[2] -= m;
        rest[3] -= m;
        CommPoly t;
        t.add(rest, c);
        for (int k = 0; k < m; ++k) t = t * one_minus;
        out += t;
    }
    return out;
}

std::string CommPoly::str() const {
    if (terms_.empty()) return "0";
    static const char* names[4] = {"yp", "ym", "xp", "xm"};
    std::string s;
    for (const auto& [e, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += c.str();
        for (std::size_t k = 0; k < 4; ++k)
            if (e[k]) s += std::string("*") + names[k] + (e[k] > 1 ? "^" + std::to_string(e[k]) : "");
    }
    return s;
}

namespace {

// a0 = (xp + xm)/2, a1 = (xp - xm)/(2i), a2 = (yp + ym)/2, a3 = (yp - ym)/(2i)
CommPoly classical_letter(RawLetter l) {
    const GaussianRational half(mpq_class(1, 2));
    const GaussianRational minus_half_i(0, mpq_class(-1, 2));
    const CommPoly yp = CommPoly::variable(0), ym = CommPoly::variable(1);
    const CommPoly xp = CommPoly::variable(2), xm = CommPoly::variable(3);
    switch (l) {
        case RawLetter::A0: return half * (xp + xm);
        case RawLetter::A1: return minus_half_i * (xp - xm);
        case RawLetter::A2: return half * (yp + ym);
        case RawLetter::A3: return minus_half_i * (yp - ym);
        case RawLetter::XP: return xp;
        case RawLetter::XM: return xm;
        case RawLetter::YP: return yp;
        case RawLetter::YM: return ym;
    }
    return {};
}

}  // namespace

CommPoly classical_value(const RawExpr& e, Mode mode) {
    CommPoly out;
    for (const RawTerm& t : e) {
        CommPoly p = CommPoly::constant(t.coeff.eval_at(GaussianRational(1)));
        for (RawLetter l : t.letters) p = p * classical_letter(l);
        out += p;
    }
    return mode == Mode::SP ? out.reduce_unit_norm() : out;
}

CommPoly commutative_image(const Element& e) {
    CommPoly out;
    for (const auto& [w, c] : e.terms()) {
        if (!c.is_constant()) throw std::invalid_argument("commutative_image needs q-free coefficients");
        CommPoly p = CommPoly::constant(c.constant_value());
        for (Letter l : w) p = p * CommPoly::variable(l);
        out += p;
    }
    return out;
}

}  // namespace qquat
