#include "qquat/braided.hpp"

#include <stdexcept>

namespace qquat {

Letter pair_letter(int copy, Gen g) {
    if (copy != 1 && copy != 2) throw std::invalid_argument("copy must be 1 or 2");
    return static_cast<Letter>((copy == 2 ? 0 : 4) + g);
}

namespace {

CrossTerm term(const QScalar& c, std::vector<std::pair<int, Gen>> w) { return {c, std::move(w)}; }

}  // namespace

const CrossRules& printed_cross_rules() {
    static const CrossRules rules = [] {
        const QScalar qi = QScalar::q_pow(-1);
        const QScalar lm = QScalar::lambda_minus();
        CrossRules r;
        r[{Xp, Xp}] = {term(QScalar::q_pow(-2), {{2, Xp}, {1, Xp}})};
        r[{Xm, Xm}] = {term(QScalar::q_pow(-2), {{2, Xm}, {1, Xm}})};
        r[{Xp, Xm}] = {term(1, {{2, Xm}, {1, Xp}})};
        r[{Xm, Xp}] = {term(1, {{2, Xp}, {1, Xm}}), term(lm, {{1, Yp}, {2, Ym}}), term(lm, {{2, Yp}, {1, Ym}})};
        for (Gen y : {Yp, Ym}) {
            // x+^1 b_k = q^-1 b_k x+^1 and x-^1 b_k = q^-1 b_k x-^1 - l- a_k x-^2, k = 2, 3
            r[{Xp, y}] = {term(qi, {{2, y}, {1, Xp}})};
            r[{Xm, y}] = {term(qi, {{2, y}, {1, Xm}}), term(-lm, {{1, y}, {2, Xm}})};
            // x-^2 a_k = q a_k x-^2 and x+^2 a_k = q a_k x+^2 + l- b_k x+^1, solved for a_k x^2
            r[{y, Xm}] = {term(qi, {{2, Xm}, {1, y}})};
            r[{y, Xp}] = {term(qi, {{2, Xp}, {1, y}}), term(-qi * lm, {{2, y}, {1, Xp}})};
        }
        r[{Yp, Yp}] = {term(QScalar::q_pow(-2), {{2, Yp}, {1, Yp}})};
        r[{Ym, Ym}] = {term(QScalar::q_pow(-2), {{2, Ym}, {1, Ym}})};
        r[{Yp, Ym}] = {term(1, {{2, Ym}, {1, Yp}}), term(lm, {{1, Xp}, {2, Xm}})};
        r[{Ym, Yp}] = {term(1, {{2, Yp}, {1, Ym}}), term(lm, {{1, Xp}, {2, Xm}})};
        return r;
    }();
    return rules;
}

const std::vector<CrossVariant>& candidate_cross_rules() {
    static const std::vector<CrossVariant> variants = [] {
        std::vector<CrossVariant> v;
        const QScalar lm = QScalar::lambda_minus();
        {
            CrossVariant c{"conjugate-y", "y-^1 y+^2 correction l- x-^1 x+^2 instead of l- x+^1 x-^2",
                           printed_cross_rules()};
            c.rules[{Ym, Yp}] = {term(1, {{2, Yp}, {1, Ym}}), term(lm, {{1, Xm}, {2, Xp}})};
            v.push_back(std::move(c));
        }
        {
            CrossVariant c{"plain", "every cross rule a pure q-exchange, no correction terms", printed_cross_rules()};
            for (auto& [key, rhs] : c.rules) rhs.resize(1);
            v.push_back(std::move(c));
        }
        return v;
    }();
    return variants;
}

SystemPtr pair_system(const CrossRules& cross, const std::string& name) {
    std::vector<std::string> names(8);
    for (int copy : {1, 2})
        for (Gen g : {Yp, Ym, Xp, Xm})
            names[pair_letter(copy, g)] = quaternion_system(Mode::GL)->letter_name(g) + "^" + std::to_string(copy);
    std::vector<Rule> rules;
    for (int copy : {1, 2}) {
        for (const Rule& r : quaternion_system(Mode::GL)->rules()) {
            Rule c{pair_letter(copy, static_cast<Gen>(r.left)), pair_letter(copy, static_cast<Gen>(r.right)), {}};
            for (const auto& [w, coeff] : r.rhs) {
                Word cw;
                for (Letter l : w) cw.push_back(pair_letter(copy, static_cast<Gen>(l)));
                c.rhs.emplace_back(std::move(cw), coeff);
            }
            rules.push_back(std::move(c));
        }
    }
    for (const auto& [key, rhs] : cross) {
        Rule c{pair_letter(1, key.first), pair_letter(2, key.second), {}};
        for (const CrossTerm& t : rhs) {
            Word w;
            for (const auto& [copy, g] : t.word) w.push_back(pair_letter(copy, g));
            c.rhs.emplace_back(std::move(w), t.coeff);
        }
        rules.push_back(std::move(c));
    }
    return std::make_shared<const RewriteSystem>(name, std::move(names), std::move(rules));
}

const SystemPtr& printed_pair_system() {
    static const SystemPtr sys = pair_system(printed_cross_rules(), "pair(printed)");
    return sys;
}

Element embed_copy(const Element& e, const SystemPtr& pair, int copy) {
    Terms t;
    for (const auto& [w, c] : e.terms()) {
        Word cw;
        for (Letter l : w) cw.push_back(pair_letter(copy, static_cast<Gen>(l)));
        add_term(t, cw, c);
    }
    return Element(pair, t);
}

nlohmann::json ClosureResult::to_json() const {
    return {{"relation", relation},
            {"residual", residual.str()},
            {"residual_terms", residual.terms().size()},
            {"q1_residual", q1_residual.str()}};
}

std::vector<ClosureResult> check_sum_closure(const SystemPtr& pair) {
    const SystemPtr& gl = quaternion_system(Mode::GL);
    auto sum = [&](const Element& e) { return embed_copy(e, pair, 1) + embed_copy(e, pair, 2); };
    std::array<Element, 4> c{sum(from_a_basis(gl, 0)), sum(from_a_basis(gl, 1)), sum(from_a_basis(gl, 2)),
                             sum(from_a_basis(gl, 3))};
    const Element xp = sum(gen(gl, Xp));
    const Element xm = sum(gen(gl, Xm));
    const QScalar q = QScalar::q();
    const QScalar qi = QScalar::q_pow(-1);
    const QScalar c01 = QScalar::i() * QScalar::rational(1, 2) * QScalar::lambda_minus();
    std::vector<std::pair<std::string, Element>> rel{
        {"x+ c2 - q c2 x+", xp * c[2] - q * (c[2] * xp)},
        {"x+ c3 - q c3 x+", xp * c[3] - q * (c[3] * xp)},
        {"x- c2 - q^-1 c2 x-", xm * c[2] - qi * (c[2] * xm)},
        {"x- c3 - q^-1 c3 x-", xm * c[3] - qi * (c[3] * xm)},
        {"c2 c3 - c3 c2", c[2] * c[3] - c[3] * c[2]},
        {"c0 c1 - c1 c0 + (i/2) l- (c2^2 + c3^2)", c[0] * c[1] - c[1] * c[0] + c01 * (c[2] * c[2] + c[3] * c[3])},
    };
    std::vector<ClosureResult> out;
    for (auto& [name, res] : rel) {
        Element at1 = res.eval_at(GaussianRational(1));
        out.push_back({name, std::move(res), std::move(at1)});
    }
    return out;
}

SuiteReport check_addition() {
    SuiteReport r{"addition", Mode::GL};
    const SystemPtr& pair = printed_pair_system();
    const SystemPtr& gl = quaternion_system(Mode::GL);

    OverlapReport ov = check_confluence(pair);
    r.record("printed: overlaps", std::to_string(ov.overlaps.size()) + " overlaps, " +
                                      std::to_string(ov.unresolved()) + " unresolved");
    for (const Overlap& o : ov.overlaps)
        if (!o.resolved()) r.record("printed: overlap " + pair->render_word(o.word), o.residual.str());

    // products computed inside one copy agree with the algebra itself
    const std::vector<std::pair<Element, Element>> probes{
        {from_a_basis(gl, 0), from_a_basis(gl, 1)},
        {gen(gl, Xm), gen(gl, Xp) * gen(gl, Yp)},
        {from_a_basis(gl, 3) * from_a_basis(gl, 2), gen(gl, Xm) * from_a_basis(gl, 0)},
    };
    for (std::size_t k = 0; k < probes.size(); ++k) {
        const auto& [u, v] = probes[k];
        for (int copy : {1, 2})
            r.expect_zero("copy " + std::to_string(copy) + " product probe " + std::to_string(k),
                          embed_copy(u, pair, copy) * embed_copy(v, pair, copy) - embed_copy(u * v, pair, copy));
    }
    for (const ClosureResult& c : check_sum_closure(pair)) {
        r.record("printed: " + c.relation, c.residual.str());
        r.expect_zero("printed: " + c.relation + " at q=1", c.q1_residual);
    }
    for (const CrossVariant& v : candidate_cross_rules()) {
        SystemPtr sys = pair_system(v.rules, "pair(" + v.name + ")");
        OverlapReport vo = check_confluence(sys);
        r.record("experiment " + v.name + ": change", v.change);
        r.record("experiment " + v.name + ": overlaps",
                 std::to_string(vo.overlaps.size()) + " overlaps, " + std::to_string(vo.unresolved()) + " unresolved");
        for (const ClosureResult& c : check_sum_closure(sys))
            r.record("experiment " + v.name + ": " + c.relation, c.residual.str());
    }
    return r;
}

nlohmann::json addition_report_json() {
    nlohmann::json out = nlohmann::json::object();
    auto dump = [](const SystemPtr& sys) {
        nlohmann::json arr = nlohmann::json::array();
        for (const ClosureResult& c : check_sum_closure(sys)) arr.push_back(c.to_json());
        return arr;
    };
    out["printed"] = dump(printed_pair_system());
    for (const CrossVariant& v : candidate_cross_rules())
        out["experiment:" + v.name] = dump(pair_system(v.rules, "pair(" + v.name + ")"));
    return out;
}

}  // namespace qquat
