#include "qquat/hopf.hpp"

#include <mutex>
#include <stdexcept>

namespace qquat {

namespace {

struct DeltaTerm {
    int sign;
    int left;
    int right;
};

// Coproduct of a0..a3 as signed a_i (x) a_j terms.
constexpr std::array<std::array<DeltaTerm, 4>, 4> kDeltaTable{{
    {{{+1, 0, 0}, {-1, 1, 1}, {-1, 2, 2}, {-1, 3, 3}}},
    {{{+1, 0, 1}, {+1, 1, 0}, {+1, 2, 3}, {-1, 3, 2}}},
    {{{+1, 0, 2}, {+1, 2, 0}, {+1, 3, 1}, {-1, 1, 3}}},
    {{{+1, 0, 3}, {+1, 3, 0}, {+1, 1, 2}, {-1, 2, 1}}},
}};

// The same maps evaluated on the internal letters y+, y-, x+, x-.
struct LetterImages {
    std::vector<Tensor> delta;
    std::vector<QScalar> epsilon;
    std::vector<LocalizedElement> antipode;
};

LetterImages make_letter_images(const SystemPtr& sys) {
    GeneratorImages g = GeneratorImages::build(sys);
    LetterImages li;
    for (Letter l = 0; l < 4; ++l) {
        const auto& coeffs = letter_in_a_basis()[l];
        Tensor d(sys, 2);
        QScalar eps;
        LocalizedElement s(Element(sys), 0);
        for (int k = 0; k < 4; ++k) {
            if (coeffs[k].is_zero()) continue;
            d += coeffs[k] * g.delta[k];
            eps += coeffs[k] * g.epsilon[k];
            s = s + coeffs[k] * g.antipode[k];
        }
        li.delta.push_back(std::move(d));
        li.epsilon.push_back(std::move(eps));
        li.antipode.push_back(std::move(s));
    }
    return li;
}

const LetterImages& letter_images(const SystemPtr& sys) {
    static const LetterImages gl = make_letter_images(quaternion_system(Mode::GL));
    static const LetterImages sp = make_letter_images(quaternion_system(Mode::SP));
    return mode_of(sys) == Mode::GL ? gl : sp;
}

}  // namespace

GeneratorImages GeneratorImages::build(const SystemPtr& sys) {
    GeneratorImages g;
    const Element n = norm_element(sys);
    for (int k = 0; k < 4; ++k) {
        Tensor d(sys, 2);
        for (const auto& t : kDeltaTable[k])
            d += QScalar(t.sign) * Tensor::outer({from_a_basis(sys, t.left), from_a_basis(sys, t.right)});
        g.delta.push_back(std::move(d));
        g.epsilon.push_back(QScalar(k == 0 ? 1 : 0));
        Element num = (k == 0 ? QScalar(2) * from_a_basis(sys, 0) : Element(sys)) - star_of_a(sys, k);
        g.antipode.emplace_back(std::move(num), 1);
    }
    return g;
}

Tensor coproduct_raw(const SystemPtr& sys, const Word& w) {
    const auto& li = letter_images(sys);
    Tensor t = Tensor::scalar(sys, 2, 1);
    for (Letter l : w) t = t * li.delta.at(l);
    return t;
}

Tensor coproduct(const Element& e) {
    Tensor out(e.system(), 2);
    for (const auto& [w, c] : e.terms()) out += c * coproduct_raw(e.system(), w);
    return out;
}

QScalar counit(const Element& e) {
    const auto& li = letter_images(e.system());
    QScalar out;
    for (const auto& [w, c] : e.terms()) {
        QScalar t = c;
        for (Letter l : w) t *= li.epsilon.at(l);
        out += t;
    }
    return out;
}

LocalizedElement antipode_raw(const SystemPtr& sys, const Word& w) {
    const auto& li = letter_images(sys);
    LocalizedElement r(unit(sys), 0);
    for (Letter l : w) r = li.antipode.at(l) * r;
    return r;
}

LocalizedElement antipode(const Element& e) {
    LocalizedElement out(Element(e.system()), 0);
    for (const auto& [w, c] : e.terms()) out = out + c * antipode_raw(e.system(), w);
    return out;
}

SlotMap coproduct_map() {
    return [](const Element& e) { return coproduct(e); };
}

SlotMap counit_map() {
    return [](const Element& e) { return Tensor::scalar(e.system(), 0, counit(e)); };
}

LocalizedElement antipode_left_collapse(const Element& e) {
    const SystemPtr& sys = e.system();
    LocalizedElement out(Element(sys), 0);
    const Tensor d = coproduct(e);
    for (const auto& [mw, c] : d.terms())
        out = out + c * (antipode_raw(sys, mw[0]) * LocalizedElement(Element::word(sys, mw[1]), 0));
    return out;
}

LocalizedElement antipode_right_collapse(const Element& e) {
    const SystemPtr& sys = e.system();
    LocalizedElement out(Element(sys), 0);
    const Tensor d = coproduct(e);
    for (const auto& [mw, c] : d.terms())
        out = out + c * (LocalizedElement(Element::word(sys, mw[0]), 0) * antipode_raw(sys, mw[1]));
    return out;
}

// ---------------------------------------------------------------- suites

namespace {

std::vector<std::pair<std::string, Element>> generator_cases(const SystemPtr& sys) {
    std::vector<std::pair<std::string, Element>> v{{"1", unit(sys)}};
    for (int k = 0; k < 4; ++k) v.emplace_back("a" + std::to_string(k), from_a_basis(sys, k));
    for (Gen g : {Xp, Xm, Yp, Ym}) v.emplace_back(sys->letter_name(g), gen(sys, g));
    return v;
}

std::vector<std::pair<std::string, Element>> with_samples(const SystemPtr& sys, const std::vector<Element>& samples) {
    auto v = generator_cases(sys);
    for (std::size_t k = 0; k < samples.size(); ++k) v.emplace_back("sample-" + std::to_string(k), samples[k]);
    return v;
}

}  // namespace

SuiteReport check_coproduct_homomorphism(Mode mode) {
    const SystemPtr& sys = quaternion_system(mode);
    SuiteReport r{"coproduct-hom", mode};
    for (const Rule& rule : sys->rules()) {
        Tensor rhs(sys, 2);
        for (const auto& [w, c] : rule.rhs) rhs += c * coproduct_raw(sys, w);
        Tensor residual = coproduct_raw(sys, {rule.left, rule.right}) - rhs;
        r.expect_zero("rule " + sys->render_rule(rule), residual);
    }
    auto D = [&](int k) { return coproduct(from_a_basis(sys, k)); };
    const QScalar q = QScalar::q();
    const Tensor dxp = coproduct(gen(sys, Xp));
    const Tensor dxm = coproduct(gen(sys, Xm));
    for (int k : {2, 3}) {
        std::string a = "a" + std::to_string(k);
        r.expect_zero("D(x+)D(" + a + ") - q D(" + a + ")D(x+)", dxp * D(k) - q * (D(k) * dxp));
        r.expect_zero("D(x-)D(" + a + ") - q^-1 D(" + a + ")D(x-)", dxm * D(k) - QScalar::q_pow(-1) * (D(k) * dxm));
    }
    r.expect_zero("D(a2)D(a3) - D(a3)D(a2)", D(2) * D(3) - D(3) * D(2));
    const QScalar c = QScalar::i() * QScalar::rational(1, 2) * QScalar::lambda_minus();
    r.expect_zero("D(a0)D(a1) - D(a1)D(a0) + (i/2)l-(D(a2)^2 + D(a3)^2)",
                  D(0) * D(1) - D(1) * D(0) + c * (D(2) * D(2) + D(3) * D(3)));
    const Element n = norm_element(sys);
    r.expect_zero("D(N) - N (x) N", coproduct(n) - Tensor::outer({n, n}));
    return r;
}

SuiteReport check_coassociativity(Mode mode, const std::vector<Element>& samples) {
    const SystemPtr& sys = quaternion_system(mode);
    SuiteReport r{"coassoc", mode};
    for (const auto& [id, e] : with_samples(sys, samples)) {
        Tensor d = coproduct(e);
        Tensor lhs = apply_pair(identity_map(), coproduct_map(), d);
        Tensor rhs = apply_pair(coproduct_map(), identity_map(), d);
        r.expect_zero(id, lhs - rhs);
    }
    return r;
}

SuiteReport check_counit_axiom(Mode mode, const std::vector<Element>& samples) {
    const SystemPtr& sys = quaternion_system(mode);
    SuiteReport r{"counit", mode};
    for (const auto& [id, e] : with_samples(sys, samples)) {
        Tensor d = coproduct(e);
        r.expect_zero(id + " (eps(x)I)D", apply_pair(counit_map(), identity_map(), d).to_element() - e);
        r.expect_zero(id + " (I(x)eps)D", apply_pair(identity_map(), counit_map(), d).to_element() - e);
    }
    r.expect_true("eps(N) = 1", counit(norm_element(sys)) == QScalar(1), counit(norm_element(sys)).str());
    return r;
}

SuiteReport check_antipode_axiom(Mode mode, const std::vector<Element>& samples) {
    const SystemPtr& sys = quaternion_system(mode);
    SuiteReport r{"antipode", mode};
    auto cases = with_samples(sys, samples);
    for (const auto& [id, e] : cases) {
        LocalizedElement expected(Element(sys, counit(e)), 0);
        LocalizedElement left = antipode_left_collapse(e);
        LocalizedElement right = antipode_right_collapse(e);
        r.expect_true(id + " m(S(x)I)D = eps", left == expected, (left - expected).str());
        r.expect_true(id + " m(I(x)S)D = eps", right == expected, (right - expected).str());
        // eps(N) = 1, so eps of a fraction is eps of its numerator.
        QScalar eps_s = counit(antipode(e).numerator());
        r.expect_true(id + " eps(S(e)) = eps(e)", eps_s == counit(e), (eps_s - counit(e)).str());
    }
    for (std::size_t k = 0; k + 1 < cases.size(); ++k) {
        const Element& a = cases[k].second;
        const Element& b = cases[k + 1].second;
        LocalizedElement lhs = antipode(a * b);
        LocalizedElement rhs = antipode(b) * antipode(a);
        r.expect_true("S(" + cases[k].first + "*" + cases[k + 1].first + ") = S(b)S(a)", lhs == rhs,
                      (lhs - rhs).str());
    }
    return r;
}

}  // namespace qquat
