#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qquat/hopf.hpp"
#include "qquat/parser.hpp"
#include "qquat/sampling.hpp"

#include <random>

using namespace qquat;

namespace {

const SystemPtr& GL = quaternion_system(Mode::GL);
const SystemPtr& SP = quaternion_system(Mode::SP);
const QScalar q = QScalar::q();

Element P(const std::string& s, const SystemPtr& sys = GL) { return parse_element(s, sys); }

std::size_t error_position(const std::string& s) {
    try {
        (void)parse(s);
    } catch (const ParseError& e) {
        return e.position();
    }
    return std::string::npos;
}

}  // namespace

TEST_CASE("expression tree shape") {
    auto e = parse("a0*a1 - a1*a0");
    REQUIRE(e->kind == Expr::Kind::Sub);
    CHECK(e->args[0]->kind == Expr::Kind::Mul);
    CHECK(e->args[1]->kind == Expr::Kind::Mul);
    CHECK(e->args[0]->args[0]->text == "a0");
    auto s = parse("(y+)^*");
    CHECK(s->kind == Expr::Kind::Star);
    auto p = parse("x+*x-*q^-1");
    REQUIRE(p->kind == Expr::Kind::Mul);
    CHECK(p->args[1]->kind == Expr::Kind::Pow);
    CHECK(p->args[1]->exponent == -1);
}

TEST_CASE("evaluation examples") {
    CHECK(P("a0*a1 - a1*a0") == from_a_basis(GL, 0) * from_a_basis(GL, 1) - from_a_basis(GL, 1) * from_a_basis(GL, 0));
    CHECK(P("(y+)^*") == q * gen(GL, Ym));
    CHECK(P("(y+)^* ") == P("q*y-"));
    CHECK(P("x+*x-*q^-1") == QScalar::q_pow(-1) * (gen(GL, Xp) * gen(GL, Xm)));
    CHECK(P("y-*y+") == P("y+*y-"));
    CHECK(P("N") == norm_element(GL));
    CHECK(P("N", SP) == unit(SP));
    CHECK(P("i^2") == P("-1"));
    CHECK(P("3/(q^2 + 1)") == Element(GL, QScalar(3) / (q * q + QScalar(1))));
}

TEST_CASE("precedence") {
    CHECK(P("-q^2") == Element(GL, -(q * q)));
    CHECK(P("2*a0^2") == QScalar(2) * from_a_basis(GL, 0).pow(2));
    CHECK(P("-a0*a1") == -(from_a_basis(GL, 0) * from_a_basis(GL, 1)));
    CHECK(P("a0 - a1 - a2") == from_a_basis(GL, 0) - from_a_basis(GL, 1) - from_a_basis(GL, 2));
    CHECK(P("1/2/q") == Element(GL, QScalar::rational(1, 2) * QScalar::q_pow(-1)));
    // star binds to the atom before it
    CHECK(P("i*a2^*") == QScalar::i() * star(from_a_basis(GL, 2)));
    CHECK(P("(i*a2)^*") == -QScalar::i() * star(from_a_basis(GL, 2)));
    // (x) binds looser than * and tighter than +
    Tensor t = parse_tensor("2*x+ (x) x+ - y+ (x) y-", GL);
    CHECK(t == coproduct(gen(GL, Xp)) + Tensor::outer({gen(GL, Xp), gen(GL, Xp)}));
    CHECK(parse_tensor("a0 (x) a1 (x) a2", GL).rank() == 3);
}

TEST_CASE("fractions over N") {
    Value v = evaluate("x-/N^2", GL);
    REQUIRE(std::holds_alternative<LocalizedElement>(v));
    CHECK(std::get<LocalizedElement>(v).power() == 2);
    CHECK(render(v) == "(x-)/N^2");
    CHECK(std::holds_alternative<Element>(evaluate("x+/N", SP)));
    Value w = evaluate("N^-1", GL);
    CHECK(std::get<LocalizedElement>(w) == LocalizedElement(unit(GL), 1));
    CHECK(std::get<LocalizedElement>(evaluate("N*x+/N", GL)) == LocalizedElement(gen(GL, Xp), 0));
}

TEST_CASE("star of N is N") {
    CHECK(star(norm_element(GL)) == norm_element(GL));
    CHECK(P("N^*") == P("N"));
}

TEST_CASE("syntax errors carry positions") {
    CHECK(error_position("a4") == 0);
    CHECK(error_position("a0 + $") == 5);
    CHECK(error_position("(a0 + a1") == 8);
    CHECK(error_position("a0 + a1)") == 7);
    CHECK(error_position("a0 +") == 4);
    CHECK(error_position("a0^") == 3);
    CHECK(error_position("qq") == 0);
    CHECK(error_position("") == 0);
    CHECK_THROWS_AS(parse("x"), ParseError);
}

TEST_CASE("evaluation errors") {
    CHECK_THROWS_AS(parse_element("a0/a1", GL), EvalError);
    CHECK_THROWS_AS(parse_element("a0 (x) a1 + a0", GL), EvalError);
    CHECK_THROWS_AS(parse_element("a0 (x) a1 * a0 (x) a1 (x) a2", GL), EvalError);
    CHECK_THROWS_AS(parse_element("a0/0", GL), EvalError);
    CHECK_THROWS_AS(parse_element("a0^-1", GL), EvalError);
    CHECK_THROWS_AS(parse_element("x+/N", GL), EvalError);
}

TEST_CASE("render/parse round trip on 500 random elements") {
    std::mt19937_64 rng(kDefaultSeed + 40);
    for (int n = 0; n < 500; ++n) {
        const SystemPtr& sys = n % 2 ? SP : GL;
        Element e = random_element(sys, rng, 3, 3);
        std::string s = e.str();
        INFO(s);
        CHECK(parse_element(s, sys) == e);
    }
}

TEST_CASE("round trip of tensors and fractions") {
    std::mt19937_64 rng(kDefaultSeed + 41);
    for (int n = 0; n < 30; ++n) {
        Element e = random_element(GL, rng, 2, 2);
        Tensor d = coproduct(e);
        INFO(d.str());
        if (d.rank() == 2 && !d.is_zero()) CHECK(parse_tensor(d.str(), GL) == d);
        LocalizedElement s = antipode(e);
        Value v = evaluate(s.str(), GL);
        CHECK(v.index() != 1);
        if (auto l = std::get_if<LocalizedElement>(&v)) CHECK(*l == s);
        if (auto x = std::get_if<Element>(&v)) CHECK(LocalizedElement(*x, 0) == s);
    }
}
