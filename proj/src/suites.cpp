#include "qquat/suites.hpp"

#include "qquat/braided.hpp"
#include "qquat/classical.hpp"
#include "qquat/hopf.hpp"
#include "qquat/quaternion.hpp"
#include "qquat/sampling.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>
#include <thread>

namespace qquat {

namespace {

std::vector<Element> samples(Mode mode, std::uint64_t seed, int n, int degree = 2, int terms = 2) {
    std::mt19937_64 rng(seed);
    std::vector<Element> v;
    for (int k = 0; k < n; ++k) v.push_back(random_element(quaternion_system(mode), rng, degree, terms));
    return v;
}

std::string k_str(int k) { return std::to_string(k); }

}  // namespace

SuiteReport check_confluence_suite(Mode mode) {
    const SystemPtr& sys = quaternion_system(mode);
    SuiteReport r{"confluence", mode};
    OverlapReport ov = check_confluence(sys);
    for (const Overlap& o : ov.overlaps) r.expect_zero("overlap " + sys->render_word(o.word), o.residual);
    r.expect_true("overlap count <= 20", ov.overlaps.size() <= 20, std::to_string(ov.overlaps.size()));
    return r;
}

std::vector<std::pair<std::string, Element>> printed_star_exchange_residuals(Mode mode) {
    const SystemPtr& sys = quaternion_system(mode);
    const QScalar q = QScalar::q(), qi = QScalar::q_pow(-1);
    std::vector<std::pair<std::string, Element>> out;
    for (int k : {2, 3}) {
        const Element s = star_of_a(sys, k);
        out.emplace_back("x+ a" + k_str(k) + "* - q^-1 a" + k_str(k) + "* x+", gen(sys, Xp) * s - qi * (s * gen(sys, Xp)));
        out.emplace_back("x- a" + k_str(k) + "* - q a" + k_str(k) + "* x-", gen(sys, Xm) * s - q * (s * gen(sys, Xm)));
    }
    return out;
}

SuiteReport check_relations(Mode mode) {
    const SystemPtr& sys = quaternion_system(mode);
    SuiteReport r{"relations", mode};
    const QScalar q = QScalar::q(), qi = QScalar::q_pow(-1), lm = QScalar::lambda_minus();
    auto a = [&](int k) { return from_a_basis(sys, k); };
    const Element xp = gen(sys, Xp), xm = gen(sys, Xm);

    for (int k : {2, 3}) {
        r.expect_zero("x+ a" + k_str(k) + " - q a" + k_str(k) + " x+", xp * a(k) - q * (a(k) * xp));
        r.expect_zero("x- a" + k_str(k) + " - q^-1 a" + k_str(k) + " x-", xm * a(k) - qi * (a(k) * xm));
    }
    r.expect_zero("a2 a3 - a3 a2", a(2) * a(3) - a(3) * a(2));
    const QScalar c = QScalar::i() * QScalar::rational(1, 2) * lm;
    r.expect_zero("a0 a1 - a1 a0 + (i/2) l- (a2^2 + a3^2)", a(0) * a(1) - a(1) * a(0) + c * (a(2) * a(2) + a(3) * a(3)));
    // internal form of the same relations
    const Element yp = gen(sys, Yp), ym = gen(sys, Ym);
    r.expect_zero("y- y+ - y+ y-", ym * yp - yp * ym);
    r.expect_zero("x+ y+ - q y+ x+", xp * yp - q * (yp * xp));
    r.expect_zero("x- y- - q^-1 y- x-", xm * ym - qi * (ym * xm));
    r.expect_zero("x- x+ - x+ x- - l- y+ y-", xm * xp - xp * xm - lm * (yp * ym));
    if (mode == Mode::SP) {
        const QScalar ratio = QScalar::i() * (QScalar(1) - q * q) / (QScalar(1) + q * q);
        r.expect_zero("a0 a1 - a1 a0 - i(1-q^2)/(1+q^2) (1 - a0^2 - a1^2)",
                      a(0) * a(1) - a(1) * a(0) - ratio * (unit(sys) - a(0) * a(0) - a(1) * a(1)));
        r.expect_zero("N - 1", norm_element(sys) - unit(sys));
    }
    for (int k : {2, 3}) {
        const Element s = star_of_a(sys, k);
        r.expect_zero("x+ a" + k_str(k) + "* - q a" + k_str(k) + "* x+", xp * s - q * (s * xp));
        r.expect_zero("x- a" + k_str(k) + "* - q^-1 a" + k_str(k) + "* x-", xm * s - qi * (s * xm));
        for (int l : {2, 3})
            r.expect_zero("a" + k_str(k) + "* a" + k_str(l) + " - a" + k_str(l) + " a" + k_str(k) + "*",
                          s * a(l) - a(l) * s);
    }
    for (const auto& [id, res] : printed_star_exchange_residuals(mode)) r.record("opposite exponent: " + id, res.str());
    return r;
}

SuiteReport check_star(Mode mode, std::uint64_t seed, int count) {
    const SystemPtr& sys = quaternion_system(mode);
    SuiteReport r{"star", mode};
    for (int k = 0; k < 4; ++k) {
        Element e = from_a_basis(sys, k);
        r.expect_zero("a" + k_str(k) + "** - a" + k_str(k), star(star(e)) - e);
        r.expect_zero("star(a" + k_str(k) + ") - printed image", star(e) - star_of_a(sys, k));
    }
    for (Gen g : {Yp, Ym, Xp, Xm}) {
        Element e = gen(sys, g);
        r.expect_zero(sys->letter_name(g) + "** - " + sys->letter_name(g), star(star(e)) - e);
    }
    r.expect_zero("x+* - x-", star(gen(sys, Xp)) - gen(sys, Xm));
    r.expect_zero("x-* - x+", star(gen(sys, Xm)) - gen(sys, Xp));
    r.expect_zero("y+* - q y-", star(gen(sys, Yp)) - QScalar::q() * gen(sys, Ym));
    r.expect_zero("N* - N", star(norm_element(sys)) - norm_element(sys));
    r.expect_zero("(i a2)* + i a2*", star(QScalar::i() * from_a_basis(sys, 2)) + QScalar::i() * star(from_a_basis(sys, 2)));

    std::vector<Element> v = samples(mode, seed, count, 3, 3);
    std::size_t bad_inv = 0, bad_anti = 0;
    std::string first_inv, first_anti;
    for (std::size_t k = 0; k < v.size(); ++k) {
        Element d = star(star(v[k])) - v[k];
        if (!d.is_zero() && bad_inv++ == 0) first_inv = "sample " + std::to_string(k) + ": " + d.str();
        const Element& w = v[(k + 1) % v.size()];
        Element e = star(v[k] * w) - star(w) * star(v[k]);
        if (!e.is_zero() && bad_anti++ == 0) first_anti = "sample " + std::to_string(k) + ": " + e.str();
    }
    r.expect_zero("involution on " + std::to_string(v.size()) + " random elements", bad_inv == 0,
                  bad_inv ? std::to_string(bad_inv) + " failures, first " + first_inv : "0");
    r.expect_zero("antimultiplicative on " + std::to_string(v.size()) + " random pairs", bad_anti == 0,
                  bad_anti ? std::to_string(bad_anti) + " failures, first " + first_anti : "0");
    return r;
}

SuiteReport check_centrality(Mode mode) {
    const SystemPtr& sys = quaternion_system(mode);
    SuiteReport r{"centrality", mode};
    const Element n = norm_element(sys);
    for (int k = 0; k < 4; ++k) r.expect_zero("[N, a" + k_str(k) + "]", commutator(n, from_a_basis(sys, k)));
    for (Gen g : {Yp, Ym, Xp, Xm}) r.expect_zero("[N, " + sys->letter_name(g) + "]", commutator(n, gen(sys, g)));
    return r;
}

SuiteReport check_classical_limit(Mode mode, std::uint64_t seed, int count) {
    const SystemPtr& sys = quaternion_system(mode);
    SuiteReport r{"classical-limit", mode};
    std::mt19937_64 rng(seed);
    std::size_t bad = 0;
    std::string first;
    for (int k = 0; k < count; ++k) {
        RawExpr x = random_raw(rng, 3, 2);
        RawExpr y = random_raw(rng, 3, 2);
        RawExpr xy;
        for (const RawTerm& s : x)
            for (const RawTerm& t : y) {
                RawTerm p{s.coeff * t.coeff, s.letters};
                p.letters.insert(p.letters.end(), t.letters.begin(), t.letters.end());
                xy.push_back(std::move(p));
            }
        CommPoly engine = commutative_image(evaluate_raw(sys, xy).eval_at(GaussianRational(1)));
        CommPoly oracle = classical_value(xy, mode);
        if (!(engine == oracle) && bad++ == 0) first = "product " + std::to_string(k) + ": " + (engine - oracle).str();
    }
    r.expect_zero(std::to_string(count) + " random products at q=1 match the commutative oracle", bad == 0,
                  bad ? std::to_string(bad) + " mismatches, first " + first : "0");
    return r;
}

// ---------------------------------------------------------------- runner

namespace {

using SuiteFn = std::function<SuiteReport(const SuiteOptions&)>;

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> r{
        {"confluence", [](const SuiteOptions& o) { return check_confluence_suite(o.mode); }},
        {"relations", [](const SuiteOptions& o) { return check_relations(o.mode); }},
        {"star", [](const SuiteOptions& o) { return check_star(o.mode, o.seed); }},
        {"centrality", [](const SuiteOptions& o) { return check_centrality(o.mode); }},
        {"coproduct-hom", [](const SuiteOptions& o) { return check_coproduct_homomorphism(o.mode); }},
        {"coassoc", [](const SuiteOptions& o) { return check_coassociativity(o.mode, samples(o.mode, o.seed + 1, 50)); }},
        {"counit", [](const SuiteOptions& o) { return check_counit_axiom(o.mode, samples(o.mode, o.seed + 2, 20)); }},
        {"antipode", [](const SuiteOptions& o) { return check_antipode_axiom(o.mode, samples(o.mode, o.seed + 3, 20)); }},
        {"norm-mult", [](const SuiteOptions& o) { return check_norm_mult(o.mode); }},
        {"glq2", [](const SuiteOptions& o) { return check_glq2(o.mode); }},
        {"suq2", [](const SuiteOptions& o) { return check_suq2(o.mode); }},
        {"det-norm", [](const SuiteOptions& o) { return check_det_norm(o.mode); }},
        {"addition", [](const SuiteOptions&) { return check_addition(); }},
        {"classical-limit", [](const SuiteOptions& o) { return check_classical_limit(o.mode, o.seed + 4); }},
    };
    return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [name, fn] : registry()) v.push_back(name);
        return v;
    }();
    return names;
}

bool is_suite_name(const std::string& name) {
    return name == "all" || std::find(suite_names().begin(), suite_names().end(), name) != suite_names().end();
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& opt) {
    for (const auto& [n, fn] : registry()) {
        if (n != name) continue;
        try {
            return fn(opt);
        } catch (const std::exception& e) {
            SuiteReport r{name, opt.mode};
            r.expect_true("suite raised an error", false, e.what());
            return r;
        }
    }
    throw std::invalid_argument("unknown suite '" + name + "'");
}

std::vector<SuiteReport> run_suites(const std::vector<std::string>& names, const SuiteOptions& opt) {
    std::vector<std::string> todo;
    for (const std::string& n : names) {
        if (!is_suite_name(n)) throw std::invalid_argument("unknown suite '" + n + "'");
        if (n == "all")
            todo.insert(todo.end(), suite_names().begin(), suite_names().end());
        else
            todo.push_back(n);
    }
    std::vector<SuiteReport> out(todo.size());
    unsigned workers = opt.workers ? opt.workers : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, static_cast<unsigned>(todo.size()));
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t k; (k = next++) < todo.size();) out[k] = run_suite(todo[k], opt);
    };
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    return out;
}

}  // namespace qquat
