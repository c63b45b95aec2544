#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qquat/hopf.hpp"
#include "qquat/quaternion.hpp"

#include <fstream>
#include <string>

using namespace qquat;

namespace {

const SystemPtr& GL = quaternion_system(Mode::GL);
const SystemPtr& SP = quaternion_system(Mode::SP);
const QScalar q = QScalar::q();

Element a(int k, const SystemPtr& s = GL) { return from_a_basis(s, k); }

void require_pass(const SuiteReport& r) {
    for (const auto& c : r.cases) {
        INFO(r.suite << " " << c.id << " :: " << c.residual);
        CHECK(c.status != CaseStatus::Fail);
    }
}

}  // namespace

TEST_CASE("unit table") {
    CHECK(levi_civita(1, 2, 3) == 1);
    CHECK(levi_civita(2, 1, 3) == -1);
    CHECK(levi_civita(3, 1, 2) == 1);
    CHECK(levi_civita(1, 1, 3) == 0);
    // e1 e2 = e3, e2 e3 = e1, e3 e1 = e2, e_k^2 = -1
    CHECK(unit_product(1, 2).sign == 1);
    CHECK(unit_product(1, 2).unit == 3);
    CHECK(unit_product(2, 3).unit == 1);
    CHECK(unit_product(3, 1).sign == 1);
    CHECK(unit_product(3, 1).unit == 2);
    CHECK(unit_product(2, 1).sign == -1);
    CHECK(unit_product(2, 2).sign == -1);
    CHECK(unit_product(2, 2).unit == 0);
    CHECK(unit_product(0, 0).unit == 0);
    CHECK(unit_product(0, 0).sign == 1);
}

TEST_CASE("unit table reproduces Hamilton's rules on constant quaternions") {
    Element one = unit(GL), z(GL);
    Quaternion e1{{z, one, z, z}}, e2{{z, z, one, z}}, e3{{z, z, z, one}};
    Quaternion prod = e1 * e2 * e3;
    CHECK(prod == Quaternion{{-one, z, z, z}});
}

TEST_CASE("conjugate") {
    Quaternion h = generic_quaternion(GL);
    Quaternion hb = qconj(h);
    CHECK(hb.c[0] == a(0));
    CHECK(hb.c[1] == -a(1));
    CHECK(hb.c[2] == -star(a(2)));
    CHECK(qconj(hb) == h);
}

TEST_CASE("q-norm") {
    Quaternion h = generic_quaternion(GL);
    Element expected = a(0) * a(0) + a(1) * a(1) +
                       QScalar::rational(1, 2) * QScalar::lambda_plus() * (a(2) * a(2) + a(3) * a(3));
    CHECK(qnorm(h) == expected);
    CHECK((qconj(h) * h).c[0] == expected);
    for (int k = 1; k < 4; ++k) CHECK((h * qconj(h)).c[k].is_zero());
    // classical limit
    Element at1 = qnorm(h).eval_at(GaussianRational(1));
    CHECK(at1 == (a(0) * a(0) + a(1) * a(1) + a(2) * a(2) + a(3) * a(3)).eval_at(GaussianRational(1)));
}

TEST_CASE("quaternion product equals the coproduct componentwise") {
    Quaternion h = generic_quaternion(GL);
    TensorQuaternion p = quaternion_product(h, h);
    for (int k = 0; k < 4; ++k) CHECK(p.c[k] == coproduct(a(k)));
    Element n = norm_element(GL);
    CHECK(qnorm(p) == Tensor::outer({n, n}));
}

TEST_CASE("phi") {
    Matrix2 m = phi(generic_quaternion(GL));
    CHECK(m.str() == "[[x+, y+], [-y-, x-]]");
    CHECK(phi(quaternion_unit(GL)) == identity_matrix(GL));
    CHECK(det_q(m) == qnorm(generic_quaternion(GL)));
    CHECK(det_q(identity_matrix(GL)) == unit(GL));
}

TEST_CASE("quantum-matrix relations match the golden fixture") {
    std::ifstream in(QQUAT_GOLDEN_DIR "/glq2_relations.txt");
    REQUIRE(in);
    std::vector<std::string> golden;
    for (std::string line; std::getline(in, line);)
        if (!line.empty()) golden.push_back(line);
    for (Mode mode : {Mode::GL, Mode::SP}) {
        auto found = discover_matrix_relations(phi(generic_quaternion(quaternion_system(mode))));
        REQUIRE(found.size() == golden.size());
        for (std::size_t k = 0; k < found.size(); ++k) CHECK(found[k].str() == golden[k]);
    }
    REQUIRE(glq2_relations().size() == golden.size());
    for (std::size_t k = 0; k < golden.size(); ++k) CHECK(glq2_relations()[k].str() == golden[k]);
}

TEST_CASE("relation discovery rejects a commutative matrix") {
    // entries of a diagonal matrix over commuting letters: a d = d a, no other entries
    Element z(GL);
    Matrix2 m{{{{gen(GL, Yp), z}, {z, gen(GL, Ym)}}}};
    auto found = discover_matrix_relations(m);
    bool has_ad = false;
    for (const auto& r : found)
        if (r.u == "a" && r.v == "d") has_ad = r.alpha == QScalar(1) && r.beta.is_zero();
    CHECK(has_ad);
}

TEST_CASE("entry rank") {
    CHECK(entry_rank(phi(generic_quaternion(GL))) == 4);
    Element z(GL);
    CHECK(entry_rank(Matrix2{{{{a(0), a(0)}, {z, a(1)}}}}) == 2);
    CHECK(entry_rank(Matrix2{{{{a(0), q * a(0)}, {a(0) + a(1), a(1)}}}}) == 2);
}

TEST_CASE("SU_q(2) structure in SP mode") {
    Matrix2 m = phi(generic_quaternion(SP));
    Matrix2 id = identity_matrix(SP);
    CHECK(star_transpose(m) * m == id);
    CHECK(m * star_transpose(m) == id);
    CHECK(det_q(m) == unit(SP));
    // the same identity fails in GL mode, where N is not 1
    Matrix2 g = phi(generic_quaternion(GL));
    CHECK(!(star_transpose(g) * g == identity_matrix(GL)));
}

TEST_CASE("suites pass") {
    for (Mode m : {Mode::GL, Mode::SP}) {
        require_pass(check_norm_mult(m));
        require_pass(check_glq2(m));
        require_pass(check_det_norm(m));
    }
    require_pass(check_suq2(Mode::SP));
    CHECK(check_suq2(Mode::GL).count(CaseStatus::Skip) == 1);
}
