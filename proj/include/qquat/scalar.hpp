#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace qquat {

/// Raised on division by zero, evaluation at a pole, or other undefined
/// scalar operations.
class ScalarError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Exact element re + i*im of Q(i). Components are always canonical mpq values.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long n) : re_(n) {}
    GaussianRational(mpq_class re, mpq_class im = 0);

    static GaussianRational i() { return {0, 1}; }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    GaussianRational conj() const { return {re_, -im_}; }
    GaussianRational inv() const;

    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o) { return *this *= o.inv(); }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    GaussianRational operator-() const { return {-re_, -im_}; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    /// True when the canonical rendering starts with a minus sign that can be
    /// pulled out (purely real negative, or purely imaginary with negative im).
    bool has_leading_minus() const;

    /// Renders in expression syntax: "3", "-1/2", "i", "2/3*i", "(1-i)".
    std::string str() const;

private:
    mpq_class re_;
    mpq_class im_;
};

/// Dense univariate polynomial over Q(i); coefficient k multiplies q^k.
/// No trailing zero coefficients are stored.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<GaussianRational> coeffs);
    static Poly constant(const GaussianRational& c);
    static Poly monomial(const GaussianRational& c, int degree);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<GaussianRational>& coeffs() const { return c_; }
    const GaussianRational& lead() const { return c_.back(); }
    GaussianRational coeff(int k) const;
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }

    /// Number of leading factors of q (index of the lowest nonzero coefficient).
    int low_order() const;
    Poly shift_down(int k) const;
    Poly shift_up(int k) const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const GaussianRational& c) const;
    Poly operator-() const;
    friend bool operator==(const Poly&, const Poly&) = default;

    /// Euclidean division: *this = quot * d + rem.
    void divmod(const Poly& d, Poly& quot, Poly& rem) const;
    Poly exact_div(const Poly& d) const;
    Poly monic() const;
    Poly conj() const;
    GaussianRational eval(const GaussianRational& x) const;

    static Poly gcd(Poly a, Poly b);

private:
    void trim();
    std::vector<GaussianRational> c_;
};

/// Exact rational function in the formal parameter q with Q(i) coefficients.
///
/// Canonical form: value = q^shift * num(q) / den(q) where num(0) != 0,
/// den is monic with den(0) != 0, and gcd(num, den) = 1. Zero is stored as
/// shift 0, num 0, den 1. Equality is structural.
class QScalar {
public:
    QScalar() : den_(Poly::constant(1)) {}
    QScalar(long n) : QScalar(GaussianRational(n)) {}
    QScalar(const GaussianRational& c);

    static QScalar q() { return q_pow(1); }
    static QScalar q_pow(int k);
    static QScalar i() { return QScalar(GaussianRational::i()); }
    static QScalar rational(long num, long den) { return QScalar(GaussianRational(mpq_class(num, den))); }
    /// lambda_- = q - q^{-1}
    static QScalar lambda_minus();
    /// lambda_+ = q + q^{-1}
    static QScalar lambda_plus();
    /// Builds q^shift * num / den and canonicalizes. Throws on den = 0.
    static QScalar fraction(int shift, Poly num, Poly den);

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return shift_ == 0 && num_.is_one() && den_.is_one(); }
    bool is_laurent() const { return den_.is_one(); }
    /// True for c * q^k (a single Laurent monomial).
    bool is_monomial() const { return den_.is_one() && nonzero_terms() == 1; }
    /// True when no q dependence remains.
    bool is_constant() const;
    /// Constant value; throws unless is_constant().
    GaussianRational constant_value() const;

    int shift() const { return shift_; }
    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    QScalar inv() const;
    QScalar conj() const;
    GaussianRational eval_at(const GaussianRational& q0) const;

    QScalar& operator+=(const QScalar& o);
    QScalar& operator-=(const QScalar& o);
    QScalar& operator*=(const QScalar& o);
    QScalar& operator/=(const QScalar& o) { return *this *= o.inv(); }
    friend QScalar operator+(QScalar a, const QScalar& b) { return a += b; }
    friend QScalar operator-(QScalar a, const QScalar& b) { return a -= b; }
    friend QScalar operator*(QScalar a, const QScalar& b) { return a *= b; }
    friend QScalar operator/(QScalar a, const QScalar& b) { return a /= b; }
    QScalar operator-() const;
    friend bool operator==(const QScalar&, const QScalar&) = default;

    QScalar pow(int k) const;

    /// Renders in the expression grammar: integers, i, q, ^, *, /, +, -.
    std::string str() const;
    /// True if str() is a single signed monomial and needs no parentheses as a factor.
    bool renders_atomic() const;
    bool has_leading_minus() const;

private:
    int nonzero_terms() const;
    void canonicalize();

    int shift_ = 0;
    Poly num_;
    Poly den_;
};

std::string to_string(const QScalar& s);

}  // namespace qquat
