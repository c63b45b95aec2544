#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qquat/braided.hpp"
#include "qquat/sampling.hpp"

#include <random>

using namespace qquat;

namespace {

const SystemPtr& GL = quaternion_system(Mode::GL);
const SystemPtr& P = printed_pair_system();
const QScalar q = QScalar::q();
const QScalar qi = QScalar::q_pow(-1);

Element L(int copy, Gen g) { return Element::letter(P, pair_letter(copy, g)); }
Element S(Gen g) { return L(1, g) + L(2, g); }

}  // namespace

TEST_CASE("letter names and order") {
    CHECK(P->letter_name(pair_letter(1, Xp)) == "x+^1");
    CHECK(P->letter_name(pair_letter(2, Ym)) == "y-^2");
    CHECK(pair_letter(2, Xm) < pair_letter(1, Yp));
    CHECK_THROWS_AS(pair_letter(3, Xp), std::invalid_argument);
}

TEST_CASE("cross rule examples") {
    CHECK(L(1, Xp) * L(2, Xp) == QScalar::q_pow(-2) * (L(2, Xp) * L(1, Xp)));
    CHECK(L(1, Xp) * L(2, Yp) == qi * (L(2, Yp) * L(1, Xp)));
    CHECK(L(1, Xp) * L(2, Xm) == L(2, Xm) * L(1, Xp));
    CHECK((L(1, Xp) * L(2, Xm)).str() == "x-^2*x+^1");
    // the correction term is itself reordered
    CHECK(L(1, Xm) * L(2, Yp) == qi * (L(2, Yp) * L(1, Xm)) - QScalar::lambda_minus() * qi * (L(2, Xm) * L(1, Yp)));
}

TEST_CASE("cross rules collapse to plain swaps at q = 1") {
    for (const auto& [key, rhs] : printed_cross_rules()) {
        Element lhs = L(1, key.first) * L(2, key.second);
        Element swapped = L(2, key.second) * L(1, key.first);
        CHECK(lhs.eval_at(GaussianRational(1)) == swapped);
    }
}

TEST_CASE("normal words put copy 2 first") {
    Element e = L(1, Ym) * L(1, Xp) * L(2, Xm) * L(2, Yp);
    for (const auto& [w, c] : e.terms()) {
        bool seen_copy1 = false;
        for (Letter l : w) {
            if (l >= 4) seen_copy1 = true;
            else CHECK_FALSE(seen_copy1);
        }
    }
}

TEST_CASE("printed pair system is confluent") {
    OverlapReport r = check_confluence(P);
    CHECK(r.overlaps.size() == 56);
    CHECK(r.unresolved() == 0);
}

TEST_CASE("each copy embeds faithfully") {
    std::mt19937_64 rng(kDefaultSeed + 30);
    for (int n = 0; n < 20; ++n) {
        Element u = random_element(GL, rng, 2, 3);
        Element v = random_element(GL, rng, 2, 3);
        for (int copy : {1, 2}) CHECK(embed_copy(u, P, copy) * embed_copy(v, P, copy) == embed_copy(u * v, P, copy));
    }
}

TEST_CASE("closure residuals vanish at q = 1 for every rule set") {
    for (const ClosureResult& c : check_sum_closure(P)) CHECK(c.q1_residual.is_zero());
    for (const CrossVariant& v : candidate_cross_rules())
        for (const ClosureResult& c : check_sum_closure(pair_system(v.rules, v.name))) CHECK(c.q1_residual.is_zero());
}

TEST_CASE("sum closure in letter form, independent of the a-basis") {
    // y-y+ = y+y-, x+y = q y x+, x-y = q^-1 y x-, x-x+ = x+x- + l- y+y-
    const QScalar lm = QScalar::lambda_minus();
    CHECK((S(Ym) * S(Yp) - S(Yp) * S(Ym)).is_zero());
    for (Gen y : {Yp, Ym}) {
        CHECK((S(Xp) * S(y) - q * (S(y) * S(Xp))).is_zero());
        CHECK((S(Xm) * S(y) - qi * (S(y) * S(Xm))).is_zero());
    }
    CHECK((S(Xm) * S(Xp) - S(Xp) * S(Xm) - lm * (S(Yp) * S(Ym))).is_zero());
}

TEST_CASE("a-form closure report for the printed relations") {
    auto res = check_sum_closure(P);
    REQUIRE(res.size() == 6);
    for (const auto& c : res) {
        INFO(c.relation << " :: " << c.residual.str());
        CHECK(c.residual.is_zero());
    }
}

TEST_CASE("the conjugate-type correction breaks confluence and closure") {
    const CrossVariant& v = candidate_cross_rules().at(0);
    CHECK(v.name == "conjugate-y");
    SystemPtr sys = pair_system(v.rules, v.name);
    CHECK(check_confluence(sys).unresolved() > 0);
    std::size_t nonzero = 0;
    for (const auto& c : check_sum_closure(sys)) nonzero += !c.residual.is_zero();
    CHECK(nonzero > 0);
}

TEST_CASE("without correction terms closure fails") {
    const CrossVariant& v = candidate_cross_rules().at(1);
    std::size_t nonzero = 0;
    for (const auto& c : check_sum_closure(pair_system(v.rules, v.name))) nonzero += !c.residual.is_zero();
    CHECK(nonzero == 5);
}

TEST_CASE("addition suite and JSON report") {
    SuiteReport r = check_addition();
    CHECK(r.passed());
    CHECK(r.count(CaseStatus::Report) > 0);
    nlohmann::json j = addition_report_json();
    REQUIRE(j.contains("printed"));
    REQUIRE(j["printed"].size() == 6);
    for (const auto& c : j["printed"]) {
        CHECK(c.contains("relation"));
        CHECK(c["residual_terms"].get<int>() == 0);
        CHECK(c["q1_residual"] == "0");
    }
}
