#pragma once

#include "qquat/algebra.hpp"
#include "qquat/report.hpp"
#include "qquat/tensor.hpp"

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace qquat {

/// e_i e_j = sign * e_k. Units are never runtime objects; products of
/// quaternions expand directly through this table.
struct UnitProduct {
    int sign;
    int unit;
};

/// epsilon_{ijk} = (i - j)(j - k)(k - i) / 2
int levi_civita(int i, int j, int k);
UnitProduct unit_product(int i, int j);

template <class T>
T zero_like(const T& x) {
    return QScalar() * x;
}

/// h = c0 e0 + c1 e1 + c2 e2 + c3 e3 with components in the algebra (T =
/// Element) or in a tensor power of it (T = Tensor).
template <class T>
struct QQuaternion {
    std::array<T, 4> c;

    friend bool operator==(const QQuaternion& a, const QQuaternion& b) { return a.c == b.c; }
    friend QQuaternion operator-(const QQuaternion& a, const QQuaternion& b) {
        return {{a.c[0] - b.c[0], a.c[1] - b.c[1], a.c[2] - b.c[2], a.c[3] - b.c[3]}};
    }
    bool is_zero() const { return c[0].is_zero() && c[1].is_zero() && c[2].is_zero() && c[3].is_zero(); }
    std::string str() const {
        std::string s;
        for (int k = 0; k < 4; ++k) s += (k ? ", " : "(") + c[k].str();
        return s + ")";
    }
};

using Quaternion = QQuaternion<Element>;
using TensorQuaternion = QQuaternion<Tensor>;

/// Components commute with the units, so h1 h2 = sum c_i d_j (e_i e_j).
template <class T>
QQuaternion<T> operator*(const QQuaternion<T>& a, const QQuaternion<T>& b) {
    const T z = zero_like(a.c[0]);
    QQuaternion<T> out{{z, z, z, z}};
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            UnitProduct u = unit_product(i, j);
            T p = a.c[i] * b.c[j];
            if (u.sign > 0)
                out.c[u.unit] += p;
            else
                out.c[u.unit] -= p;
        }
    }
    return out;
}

/// (a0, a1, a2, a3)
Quaternion generic_quaternion(const SystemPtr& sys);
Quaternion quaternion_unit(const SystemPtr& sys);

/// Conjugate: components (c0*, -c1*, -c2*, -c3*).
Quaternion qconj(const Quaternion& h);
TensorQuaternion qconj(const TensorQuaternion& h);

/// e0-component of h hbar.
Element qnorm(const Quaternion& h);
Tensor qnorm(const TensorQuaternion& h);

/// h1 in slot 1 and h2 in slot 2 of the plain tensor square, multiplied.
TensorQuaternion quaternion_product(const Quaternion& h1, const Quaternion& h2);

template <class T>
struct QMatrix2 {
    std::array<std::array<T, 2>, 2> m;

    const T& operator()(int r, int c) const { return m[r][c]; }
    friend bool operator==(const QMatrix2& a, const QMatrix2& b) { return a.m == b.m; }
    friend QMatrix2 operator-(const QMatrix2& a, const QMatrix2& b) {
        return {{{{a.m[0][0] - b.m[0][0], a.m[0][1] - b.m[0][1]}, {a.m[1][0] - b.m[1][0], a.m[1][1] - b.m[1][1]}}}};
    }
    friend QMatrix2 operator*(const QMatrix2& a, const QMatrix2& b) {
        QMatrix2 out = a;
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) out.m[r][c] = a.m[r][0] * b.m[0][c] + a.m[r][1] * b.m[1][c];
        return out;
    }
    bool is_zero() const {
        return m[0][0].is_zero() && m[0][1].is_zero() && m[1][0].is_zero() && m[1][1].is_zero();
    }
    /// Row-major: "[[a, b], [c, d]]"
    std::string str() const {
        return "[[" + m[0][0].str() + ", " + m[0][1].str() + "], [" + m[1][0].str() + ", " + m[1][1].str() + "]]";
    }
};

using Matrix2 = QMatrix2<Element>;

/// [[c0 + i c1, c2 + i c3], [-c2 + i c3, c0 - i c1]]
template <class T>
QMatrix2<T> phi(const QQuaternion<T>& h) {
    const QScalar i = QScalar::i();
    return {{{{h.c[0] + i * h.c[1], h.c[2] + i * h.c[3]}, {i * h.c[3] - h.c[2], h.c[0] - i * h.c[1]}}}};
}

Matrix2 identity_matrix(const SystemPtr& sys);
/// Entrywise star, transposed.
Matrix2 star_transpose(const Matrix2& m);

/// ad - q bc
Element det_q(const Matrix2& m);

/// One relation between the entries a, b, c, d of a 2x2 matrix:
/// u v - alpha v u - beta w = 0, with u, v, w words in the entry names.
struct MatrixRelation {
    std::string u;
    std::string v;
    QScalar alpha;
    QScalar beta;
    std::string w;
    std::string str() const;
};

/// Searches, for every pair of distinct entries, the simplest relation of the
/// form above that the entries of m satisfy: alpha in {1, q^+-1, q^+-2}, and a
/// correction beta * (product of two entries) with beta = +-(q - q^-1) only when
/// no pure exchange relation exists. Pairs without a relation are omitted.
std::vector<MatrixRelation> discover_matrix_relations(const Matrix2& m);
Element relation_residual(const Matrix2& m, const MatrixRelation& r);

/// The quantum-matrix relations fixed for phi(h):
/// ab = q ba, ac = q ca, bc = cb, bd = q db, cd = q dc, ad - da = (q - q^-1) bc.
const std::vector<MatrixRelation>& glq2_relations();

/// Rank over the scalar field of the entries of m as vectors in the span of
/// normal words.
std::size_t entry_rank(const Matrix2& m);

/// Given the top row (a, b) of an SU_q(2) matrix, the quaternion h with
/// phi(h) = [[a, b], [-q^-1 b*, a*]].
Quaternion reconstruct_from_row(const Element& a, const Element& b);

SuiteReport check_norm_mult(Mode mode);
SuiteReport check_glq2(Mode mode);
SuiteReport check_det_norm(Mode mode);
/// SP mode only; returns a skipped report in GL mode.
SuiteReport check_suq2(Mode mode);

}  // namespace qquat
