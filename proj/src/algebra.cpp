#include "qquat/algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace qquat {

std::string to_string(Mode m) { return m == Mode::GL ? "gl" : "sp"; }

Mode parse_mode(const std::string& s) {
    if (s == "gl" || s == "GL") return Mode::GL;
    if (s == "sp" || s == "SP") return Mode::SP;
    throw std::invalid_argument("unknown mode '" + s + "' (expected gl or sp)");
}

namespace {

std::vector<Rule> quaternion_rules(Mode mode) {
    const QScalar q = QScalar::q();
    const QScalar qi = QScalar::q_pow(-1);
    std::vector<Rule> rules{
        {Ym, Yp, {{{Yp, Ym}, 1}}},
        {Xp, Yp, {{{Yp, Xp}, q}}},
        {Xp, Ym, {{{Ym, Xp}, q}}},
        {Xm, Yp, {{{Yp, Xm}, qi}}},
        {Xm, Ym, {{{Ym, Xm}, qi}}},
    };
    if (mode == Mode::GL) {
        rules.push_back({Xm, Xp, {{{Xp, Xm}, 1}, {{Yp, Ym}, QScalar::lambda_minus()}}});
    } else {
        // N_q = x+x- + q y+y- = 1, and the x-x+ rule with its right side reduced by it
        rules.push_back({Xm, Xp, {{{}, 1}, {{Yp, Ym}, -qi}}});
        rules.push_back({Xp, Xm, {{{}, 1}, {{Yp, Ym}, -q}}});
    }
    return rules;
}

SystemPtr make_system(Mode mode) {
    return std::make_shared<const RewriteSystem>(mode == Mode::GL ? "GL(1,H_q)" : "SP_q(1)",
                                                 std::vector<std::string>{"y+", "y-", "x+", "x-"},
                                                 quaternion_rules(mode));
}

}  // namespace

const SystemPtr& quaternion_system(Mode mode) {
    static const SystemPtr gl = make_system(Mode::GL);
    static const SystemPtr sp = make_system(Mode::SP);
    return mode == Mode::GL ? gl : sp;
}

Mode mode_of(const SystemPtr& sys) {
    if (sys == quaternion_system(Mode::GL)) return Mode::GL;
    if (sys == quaternion_system(Mode::SP)) return Mode::SP;
    throw std::invalid_argument("not a quaternion algebra system: " + sys->name());
}

Element unit(const SystemPtr& sys) { return Element(sys, QScalar(1)); }
Element gen(const SystemPtr& sys, Gen g) { return Element::letter(sys, g); }

const std::array<std::array<QScalar, 4>, 4>& letter_in_a_basis() {
    static const std::array<std::array<QScalar, 4>, 4> table = [] {
        const QScalar i = QScalar::i();
        std::array<std::array<QScalar, 4>, 4> t{};
        t[Yp] = {0, 0, 1, i};
        t[Ym] = {0, 0, 1, -i};
        t[Xp] = {1, i, 0, 0};
        t[Xm] = {1, -i, 0, 0};
        return t;
    }();
    return table;
}

Element from_a_basis(const SystemPtr& sys, int k) {
    const QScalar half = QScalar::rational(1, 2);
    const QScalar i_half = QScalar::i() * half;
    switch (k) {
        case 0: return half * gen(sys, Xp) + half * gen(sys, Xm);
        case 1: return -i_half * gen(sys, Xp) + i_half * gen(sys, Xm);
        case 2: return half * gen(sys, Yp) + half * gen(sys, Ym);
        case 3: return -i_half * gen(sys, Yp) + i_half * gen(sys, Ym);
        default: throw std::out_of_range("a-basis index must be 0..3");
    }
}

Element a_word(const SystemPtr& sys, const std::vector<int>& indices) {
    Element e = unit(sys);
    for (int k : indices) e *= from_a_basis(sys, k);
    return e;
}

Element star_of_a(const SystemPtr& sys, int k) {
    const QScalar i = QScalar::i();
    const QScalar half = QScalar::rational(1, 2);
    const QScalar lp = QScalar::lambda_plus();
    const QScalar lm = QScalar::lambda_minus();
    const Element a2 = from_a_basis(sys, 2);
    const Element a3 = from_a_basis(sys, 3);
    switch (k) {
        case 0:
        case 1: return from_a_basis(sys, k);
        case 2: return half * (lp * a2 - (i * lm) * a3);
        case 3: return (i * half) * (lm * a2 - (i * lp) * a3);
        default: throw std::out_of_range("a-basis index must be 0..3");
    }
}

namespace {

Element star_letter(const SystemPtr& sys, Letter l) {
    const auto& coeffs = letter_in_a_basis()[l];
    Element out(sys);
    for (int k = 0; k < 4; ++k)
        if (!coeffs[k].is_zero()) out += coeffs[k].conj() * star_of_a(sys, k);
    return out;
}

}  // namespace

Element star(const Element& e) {
    const SystemPtr& sys = e.system();
    std::array<Element, 4> images{star_letter(sys, Yp), star_letter(sys, Ym), star_letter(sys, Xp),
                                  star_letter(sys, Xm)};
    Element out(sys);
    for (const auto& [w, c] : e.terms()) {
        Element t(sys, c.conj());
        for (auto it = w.rbegin(); it != w.rend(); ++it) t *= images[*it];
        out += t;
    }
    return out;
}

Element norm_element(const SystemPtr& sys) {
    auto a = [&](int k) { return from_a_basis(sys, k); };
    return a(0) * a(0) + a(1) * a(1) + (QScalar::lambda_plus() * QScalar::rational(1, 2)) * (a(2) * a(2) + a(3) * a(3));
}

Element check_relation_zero(const Element& lhs, const Element& rhs) { return lhs - rhs; }

Element commutator(const Element& a, const Element& b) { return a * b - b * a; }

// ---------------------------------------------------------------- a-basis

namespace {

void descending_tuples(int length, int max_index, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == length) {
        out.push_back(cur);
        return;
    }
    for (int k = max_index; k >= 0; --k) {
        cur.push_back(k);
        descending_tuples(length, k, cur, out);
        cur.pop_back();
    }
}

// Solves m * x = rhs over the scalar field; m is square.
std::vector<QScalar> solve(std::vector<std::vector<QScalar>> m, std::vector<QScalar> rhs) {
    const std::size_t n = m.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col].is_zero()) ++piv;
        if (piv == n) throw std::runtime_error("a-basis change matrix is singular");
        std::swap(m[piv], m[col]);
        std::swap(rhs[piv], rhs[col]);
        QScalar inv = m[col][col].inv();
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || m[row][col].is_zero()) continue;
            QScalar f = m[row][col] * inv;
            for (std::size_t k = col; k < n; ++k)
                if (!m[col][k].is_zero()) m[row][k] -= f * m[col][k];
            rhs[row] -= f * rhs[col];
        }
    }
    std::vector<QScalar> x(n);
    for (std::size_t k = 0; k < n; ++k) x[k] = rhs[k] / m[k][k];
    return x;
}

}  // namespace

ABasisForm to_a_basis(const Element& e) {
    const SystemPtr& sys = e.system();
    if (mode_of(sys) != Mode::GL) throw std::invalid_argument("a-basis form is defined for GL mode only");
    if (e.degree() > 6) throw std::invalid_argument("a-basis conversion limited to degree 6");
    ABasisForm form;
    for (int d = 0; d <= e.degree(); ++d) {
        Terms part;
        for (const auto& [w, c] : e.terms())
            if (static_cast<int>(w.size()) == d) part.emplace(w, c);
        if (part.empty()) continue;
        std::vector<std::vector<int>> cols;
        std::vector<int> cur;
        descending_tuples(d, 3, cur, cols);
        std::vector<Element> images;
        std::map<Word, std::size_t, ShortLex> rows;
        for (const auto& t : cols) {
            images.push_back(a_word(sys, t));
            for (const auto& [w, c] : images.back().terms()) rows.emplace(w, 0);
        }
        for (const auto& [w, c] : part) rows.emplace(w, 0);
        if (rows.size() != cols.size()) throw std::runtime_error("a-basis dimension mismatch");
        std::size_t r = 0;
        for (auto& [w, idx] : rows) idx = r++;
        std::vector<std::vector<QScalar>> m(rows.size(), std::vector<QScalar>(cols.size()));
        for (std::size_t c = 0; c < cols.size(); ++c)
            for (const auto& [w, coef] : images[c].terms()) m[rows.at(w)][c] = coef;
        std::vector<QScalar> rhs(rows.size());
        for (const auto& [w, coef] : part) rhs[rows.at(w)] = coef;
        std::vector<QScalar> x = solve(std::move(m), std::move(rhs));
        for (std::size_t c = 0; c < cols.size(); ++c)
            if (!x[c].is_zero()) form.terms.emplace(cols[c], x[c]);
    }
    return form;
}

Element from_a_basis_form(const SystemPtr& sys, const ABasisForm& form) {
    Element e(sys);
    for (const auto& [idx, c] : form.terms) e += c * a_word(sys, idx);
    return e;
}

std::string ABasisForm::str() const {
    if (terms.empty()) return "0";
    std::vector<std::pair<std::vector<int>, QScalar>> sorted(terms.begin(), terms.end());
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const auto& x, const auto& y) { return x.first.size() < y.first.size(); });
    std::string s;
    bool first = true;
    for (const auto& [idx, c] : sorted) {
        std::string word;
        for (std::size_t k = 0; k < idx.size(); ++k) word += (k ? "*a" : "a") + std::to_string(idx[k]);
        s += render_term(c, word, first);
        first = false;
    }
    return s;
}

// ---------------------------------------------------------------- localization

LocalizedElement::LocalizedElement(Element numerator, int power) : num_(std::move(numerator)), power_(power) {
    if (power < 0) throw std::invalid_argument("negative denominator power");
    if (mode_of(num_.system()) == Mode::SP) power_ = 0;  // N_q = 1
}

Element LocalizedElement::numerator_at(int target) const {
    if (target < power_) throw std::invalid_argument("cannot lower denominator power");
    if (target == power_) return num_;
    return num_ * norm_element(system()).pow(target - power_);
}

LocalizedElement operator+(const LocalizedElement& a, const LocalizedElement& b) {
    int m = std::max(a.power_, b.power_);
    return LocalizedElement(a.numerator_at(m) + b.numerator_at(m), m);
}

LocalizedElement operator-(const LocalizedElement& a, const LocalizedElement& b) {
    return a + QScalar(-1) * b;
}

LocalizedElement operator*(const LocalizedElement& a, const LocalizedElement& b) {
    return LocalizedElement(a.num_ * b.num_, a.power_ + b.power_);
}

LocalizedElement operator*(const QScalar& c, const LocalizedElement& a) {
    return LocalizedElement(c * a.num_, a.power_);
}

bool operator==(const LocalizedElement& a, const LocalizedElement& b) {
    if (a.system() != b.system()) return false;
    if (a.power_ == b.power_) return a.num_ == b.num_;
    const Element n = norm_element(a.system());
    return a.num_ * n.pow(b.power_) == b.num_ * n.pow(a.power_);
}

std::string LocalizedElement::str() const {
    if (power_ == 0 || num_.is_zero()) return num_.str();
    return "(" + num_.str() + ")/N" + (power_ == 1 ? "" : "^" + std::to_string(power_));
}

LocalizedElement loc_mul(const LocalizedElement& a, const LocalizedElement& b) { return a * b; }
bool loc_eq(const LocalizedElement& a, const LocalizedElement& b) { return a == b; }

}  // namespace qquat
