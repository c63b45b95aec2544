#include "qquat/quaternion.hpp"

#include "qquat/hopf.hpp"

#include <algorithm>
#include <stdexcept>

namespace qquat {

int levi_civita(int i, int j, int k) { return (i - j) * (j - k) * (k - i) / 2; }

UnitProduct unit_product(int i, int j) {
    if (i == 0) return {1, j};
    if (j == 0) return {1, i};
    if (i == j) return {-1, 0};
    int k = 6 - i - j;
    return {levi_civita(i, j, k), k};
}

Quaternion generic_quaternion(const SystemPtr& sys) {
    return {{from_a_basis(sys, 0), from_a_basis(sys, 1), from_a_basis(sys, 2), from_a_basis(sys, 3)}};
}

Quaternion quaternion_unit(const SystemPtr& sys) {
    Element z(sys);
    return {{unit(sys), z, z, z}};
}

Quaternion qconj(const Quaternion& h) { return {{star(h.c[0]), -star(h.c[1]), -star(h.c[2]), -star(h.c[3])}}; }

TensorQuaternion qconj(const TensorQuaternion& h) {
    return {{star(h.c[0]), -star(h.c[1]), -star(h.c[2]), -star(h.c[3])}};
}

Element qnorm(const Quaternion& h) { return (h * qconj(h)).c[0]; }
Tensor qnorm(const TensorQuaternion& h) { return (h * qconj(h)).c[0]; }

TensorQuaternion quaternion_product(const Quaternion& h1, const Quaternion& h2) {
    TensorQuaternion l{{Tensor::embed(h1.c[0], 0, 2), Tensor::embed(h1.c[1], 0, 2), Tensor::embed(h1.c[2], 0, 2),
                        Tensor::embed(h1.c[3], 0, 2)}};
    TensorQuaternion r{{Tensor::embed(h2.c[0], 1, 2), Tensor::embed(h2.c[1], 1, 2), Tensor::embed(h2.c[2], 1, 2),
                        Tensor::embed(h2.c[3], 1, 2)}};
    return l * r;
}

Matrix2 identity_matrix(const SystemPtr& sys) {
    Element z(sys);
    return {{{{unit(sys), z}, {z, unit(sys)}}}};
}

Matrix2 star_transpose(const Matrix2& m) {
    return {{{{star(m.m[0][0]), star(m.m[1][0])}, {star(m.m[0][1]), star(m.m[1][1])}}}};
}

Element det_q(const Matrix2& m) { return m.m[0][0] * m.m[1][1] - QScalar::q() * (m.m[0][1] * m.m[1][0]); }

// ---------------------------------------------------------------- relations

namespace {

const Element& entry(const Matrix2& m, char name) {
    switch (name) {
        case 'a': return m.m[0][0];
        case 'b': return m.m[0][1];
        case 'c': return m.m[1][0];
        case 'd': return m.m[1][1];
    }
    throw std::invalid_argument(std::string("unknown matrix entry ") + name);
}

Element entry_word(const Matrix2& m, const std::string& w) {
    Element out = unit(m.m[0][0].system());
    for (char ch : w) out *= entry(m, ch);
    return out;
}

std::string scaled(const QScalar& c, const std::string& w) {
    if (c == QScalar(1)) return w;
    if (c == QScalar(-1)) return "-" + w;
    return (c.renders_atomic() ? c.str() : "(" + c.str() + ")") + " " + w;
}

}  // namespace

std::string MatrixRelation::str() const {
    if (beta.is_zero()) return u + v + " = " + scaled(alpha, v + u);
    std::string lhs = u + v + " - " + scaled(alpha, v + u);
    return lhs + " = " + scaled(beta, w);
}

Element relation_residual(const Matrix2& m, const MatrixRelation& r) {
    return entry_word(m, r.u + r.v) - r.alpha * entry_word(m, r.v + r.u) - r.beta * entry_word(m, r.w);
}

std::vector<MatrixRelation> discover_matrix_relations(const Matrix2& m) {
    const std::string names = "abcd";
    const QScalar lm = QScalar::lambda_minus();
    const std::vector<QScalar> alphas{QScalar(1), QScalar::q(), QScalar::q_pow(-1), QScalar::q_pow(2),
                                      QScalar::q_pow(-2)};
    std::vector<MatrixRelation> found;
    for (std::size_t x = 0; x < 4; ++x) {
        for (std::size_t y = x + 1; y < 4; ++y) {
            std::string u(1, names[x]), v(1, names[y]);
            bool done = false;
            for (const QScalar& alpha : alphas) {
                MatrixRelation r{u, v, alpha, QScalar(), ""};
                if (relation_residual(m, r).is_zero()) {
                    found.push_back(r);
                    done = true;
                    break;
                }
            }
            for (std::size_t k = 0; k < alphas.size() && !done; ++k) {
                for (const QScalar& beta : {lm, -lm}) {
                    for (char s : names) {
                        for (char t : names) {
                            std::string w{s, t};
                            if (w == u + v || w == v + u) continue;
                            MatrixRelation r{u, v, alphas[k], beta, w};
                            if (relation_residual(m, r).is_zero()) {
                                found.push_back(r);
                                done = true;
                                break;
                            }
                        }
                        if (done) break;
                    }
                    if (done) break;
                }
            }
        }
    }
    return found;
}

const std::vector<MatrixRelation>& glq2_relations() {
    static const std::vector<MatrixRelation> rel = [] {
        const QScalar q = QScalar::q();
        return std::vector<MatrixRelation>{
            {"a", "b", q, QScalar(), ""},         {"a", "c", q, QScalar(), ""},
            {"a", "d", QScalar(1), QScalar::lambda_minus(), "bc"},
            {"b", "c", QScalar(1), QScalar(), ""}, {"b", "d", q, QScalar(), ""},
            {"c", "d", q, QScalar(), ""},
        };
    }();
    return rel;
}

std::size_t entry_rank(const Matrix2& m) {
    std::vector<Word> words;
    for (const auto& row : m.m)
        for (const Element& e : row)
            for (const auto& [w, c] : e.terms())
                if (std::find(words.begin(), words.end(), w) == words.end()) words.push_back(w);
    std::vector<std::vector<QScalar>> rows;
    for (const auto& row : m.m) {
        for (const Element& e : row) {
            std::vector<QScalar> v;
            for (const Word& w : words) v.push_back(e.coeff(w));
            rows.push_back(std::move(v));
        }
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < words.size() && rank < rows.size(); ++col) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        QScalar inv = rows[rank][col].inv();
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col].is_zero()) continue;
            QScalar f = rows[r][col] * inv;
            for (std::size_t k = col; k < words.size(); ++k) rows[r][k] -= f * rows[rank][k];
        }
        ++rank;
    }
    return rank;
}

Quaternion reconstruct_from_row(const Element& a, const Element& b) {
    const QScalar half = QScalar::rational(1, 2);
    const QScalar half_over_i = QScalar::i() * QScalar::rational(-1, 2);
    Element as = star(a);
    Element bs = QScalar::q_pow(-1) * star(b);
    return {{half * (a + as), half_over_i * (a - as), half * (b + bs), half_over_i * (b - bs)}};
}

// ---------------------------------------------------------------- suites

namespace {

std::string idx(int k) { return std::to_string(k); }

}  // namespace

SuiteReport check_norm_mult(Mode mode) {
    const SystemPtr& sys = quaternion_system(mode);
    SuiteReport r{"norm-mult", mode};
    const Quaternion h = generic_quaternion(sys);
    const Quaternion hb = qconj(h);
    const Element n = norm_element(sys);

    r.expect_zero("qconj(h) - (a0*, -a1*, -a2*, -a3*)",
                  hb - Quaternion{{from_a_basis(sys, 0), -from_a_basis(sys, 1), -star_of_a(sys, 2), -star_of_a(sys, 3)}});
    r.expect_zero("qconj(qconj(h)) - h", qconj(hb) - h);
    const Quaternion hhb = h * hb;
    const Quaternion hbh = hb * h;
    r.expect_zero("e0(h hbar) - N", hhb.c[0] - n);
    r.expect_zero("e0(hbar h) - N", hbh.c[0] - n);
    for (int k = 1; k < 4; ++k) {
        r.expect_zero("e" + idx(k) + "(h hbar)", hhb.c[k]);
        r.expect_zero("e" + idx(k) + "(hbar h)", hbh.c[k]);
    }
    r.expect_zero("h * 1 - h", h * quaternion_unit(sys) - h);

    const TensorQuaternion p = quaternion_product(h, h);
    for (int k = 0; k < 4; ++k)
        r.expect_zero("(h1 h2)_" + idx(k) + " - D(a" + idx(k) + ")", p.c[k] - coproduct(from_a_basis(sys, k)));
    r.expect_zero("N(h1 h2) - N(h1) (x) N(h2)", qnorm(p) - Tensor::outer({n, n}));
    const TensorQuaternion hb_p = qconj(p);
    r.expect_zero("N(h1 h2) - (h1 h2)bar (h1 h2)", qnorm(p) - (hb_p * p).c[0]);

    TensorQuaternion h1{{Tensor::embed(h.c[0], 0, 2), Tensor::embed(h.c[1], 0, 2), Tensor::embed(h.c[2], 0, 2),
                         Tensor::embed(h.c[3], 0, 2)}};
    TensorQuaternion h2{{Tensor::embed(h.c[0], 1, 2), Tensor::embed(h.c[1], 1, 2), Tensor::embed(h.c[2], 1, 2),
                         Tensor::embed(h.c[3], 1, 2)}};
    r.expect_zero("phi(h1 h2) - phi(h1) phi(h2)", phi(p) - phi(h1) * phi(h2));
    return r;
}

SuiteReport check_glq2(Mode mode) {
    const SystemPtr& sys = quaternion_system(mode);
    SuiteReport r{"glq2", mode};
    const Matrix2 m = phi(generic_quaternion(sys));
    r.expect_zero("phi(h) - [[x+, y+], [-y-, x-]]",
                  m - Matrix2{{{{gen(sys, Xp), gen(sys, Yp)}, {-gen(sys, Ym), gen(sys, Xm)}}}});
    r.expect_zero("phi(1) - I", phi(quaternion_unit(sys)) - identity_matrix(sys));
    for (const MatrixRelation& rel : glq2_relations()) r.expect_zero(rel.str(), relation_residual(m, rel));

    std::vector<MatrixRelation> found = discover_matrix_relations(m);
    std::string listing;
    for (const auto& rel : found) listing += (listing.empty() ? "" : "; ") + rel.str();
    bool same = found.size() == glq2_relations().size();
    for (std::size_t k = 0; same && k < found.size(); ++k) same = found[k].str() == glq2_relations()[k].str();
    r.expect_true("discovered relations match the fixed set", same, listing);
    std::size_t rank = entry_rank(m);
    r.expect_true("entries of phi(h) linearly independent", rank == 4, "rank " + std::to_string(rank));
    return r;
}

SuiteReport check_det_norm(Mode mode) {
    const SystemPtr& sys = quaternion_system(mode);
    SuiteReport r{"det-norm", mode};
    const Quaternion h = generic_quaternion(sys);
    const Matrix2 m = phi(h);
    const Element det = det_q(m);
    r.expect_zero("det_q(phi(h)) - N(h)", det - qnorm(h));
    r.expect_zero("det_q(phi(h)) - (x+x- + q y+y-)",
                  det - (gen(sys, Xp) * gen(sys, Xm) + QScalar::q() * (gen(sys, Yp) * gen(sys, Ym))));
    r.expect_zero("det_q(I) - 1", det_q(identity_matrix(sys)) - unit(sys));
    const char* names[2][2] = {{"a", "b"}, {"c", "d"}};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r.expect_zero(std::string("[det_q, ") + names[i][j] + "]", commutator(det, m.m[i][j]));
    return r;
}

SuiteReport check_suq2(Mode mode) {
    SuiteReport r{"suq2", mode};
    if (mode != Mode::SP) {
        r.cases.push_back({"unitarity", CaseStatus::Skip, "requires --mode sp"});
        return r;
    }
    const SystemPtr& sys = quaternion_system(mode);
    const Quaternion h = generic_quaternion(sys);
    const Matrix2 a = phi(h);
    const Matrix2 as = star_transpose(a);
    const Matrix2 id = identity_matrix(sys);
    r.expect_zero("(A*)^T A - I", as * a - id);
    r.expect_zero("A (A*)^T - I", a * as - id);
    r.expect_zero("d - a*", a.m[1][1] - star(a.m[0][0]));
    r.expect_zero("c + q^-1 b*", a.m[1][0] + QScalar::q_pow(-1) * star(a.m[0][1]));
    r.expect_zero("det_q(A) - 1", det_q(a) - unit(sys));
    r.expect_zero("y- - q^-1 (y+)*", gen(sys, Ym) - QScalar::q_pow(-1) * star(gen(sys, Yp)));
    Quaternion back = reconstruct_from_row(a.m[0][0], a.m[0][1]);
    r.expect_zero("phi(reconstruct(a, b)) - A", phi(back) - a);
    r.expect_zero("reconstruct(a, b) - h", back - h);
    return r;
}

}  // namespace qquat
