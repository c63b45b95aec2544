#include "qquat/scalar.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace qquat {

// ---------------------------------------------------------------- GaussianRational

GaussianRational::GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
}

GaussianRational GaussianRational::inv() const {
    mpq_class n = re_ * re_ + im_ * im_;
    if (sgn(n) == 0) throw ScalarError("inversion of zero");
    return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class m = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(m);
    return *this;
}

bool GaussianRational::has_leading_minus() const {
    if (sgn(im_) == 0) return sgn(re_) < 0;
    if (sgn(re_) == 0) return sgn(im_) < 0;
    return false;
}

std::string GaussianRational::str() const {
    if (sgn(im_) == 0) return re_.get_str();
    auto imag = [](const mpq_class& v) {
        if (v == 1) return std::string("i");
        if (v == -1) return std::string("-i");
        return v.get_str() + "*i";
    };
    if (sgn(re_) == 0) return imag(im_);
    std::string im = imag(im_);
    if (im[0] != '-') im = "+" + im;
    return "(" + re_.get_str() + im + ")";
}

// ---------------------------------------------------------------- Poly

Poly::Poly(std::vector<GaussianRational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::constant(const GaussianRational& c) { return Poly({c}); }

Poly Poly::monomial(const GaussianRational& c, int degree) {
    std::vector<GaussianRational> v(static_cast<std::size_t>(degree) + 1);
    v.back() = c;
    return Poly(std::move(v));
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

GaussianRational Poly::coeff(int k) const {
    if (k < 0 || k > degree()) return {};
    return c_[static_cast<std::size_t>(k)];
}

int Poly::low_order() const {
    for (std::size_t k = 0; k < c_.size(); ++k)
        if (!c_[k].is_zero()) return static_cast<int>(k);
    return 0;
}

Poly Poly::shift_down(int k) const {
    if (k == 0) return *this;
    return Poly(std::vector<GaussianRational>(c_.begin() + k, c_.end()));
}

Poly Poly::shift_up(int k) const {
    if (k == 0 || is_zero()) return *this;
    std::vector<GaussianRational> v(static_cast<std::size_t>(k));
    v.insert(v.end(), c_.begin(), c_.end());
    Poly p;
    p.c_ = std::move(v);
    return p;
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<GaussianRational> v(std::max(c_.size(), o.c_.size()));
    for (std::size_t k = 0; k < c_.size(); ++k) v[k] += c_[k];
    for (std::size_t k = 0; k < o.c_.size(); ++k) v[k] += o.c_[k];
    return Poly(std::move(v));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
    Poly p = *this;
    for (auto& c : p.c_) c = -c;
    return p;
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<GaussianRational> v(c_.size() + o.c_.size() - 1);
    for (std::size_t a = 0; a < c_.size(); ++a) {
        if (c_[a].is_zero()) continue;
        for (std::size_t b = 0; b < o.c_.size(); ++b) v[a + b] += c_[a] * o.c_[b];
    }
    return Poly(std::move(v));
}

Poly Poly::operator*(const GaussianRational& c) const {
    if (c.is_zero()) return {};
    Poly p = *this;
    for (auto& x : p.c_) x *= c;
    return p;
}

void Poly::divmod(const Poly& d, Poly& quot, Poly& rem) const {
    if (d.is_zero()) throw ScalarError("polynomial division by zero");
    rem = *this;
    if (degree() < d.degree()) {
        quot = {};
        return;
    }
    std::vector<GaussianRational> qv(static_cast<std::size_t>(degree() - d.degree()) + 1);
    GaussianRational lead_inv = d.lead().inv();
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
        int k = rem.degree() - d.degree();
        GaussianRational f = rem.lead() * lead_inv;
        qv[static_cast<std::size_t>(k)] = f;
        for (int j = 0; j <= d.degree(); ++j) rem.c_[static_cast<std::size_t>(j + k)] -= f * d.c_[static_cast<std::size_t>(j)];
        rem.trim();
    }
    quot = Poly(std::move(qv));
}

Poly Poly::exact_div(const Poly& d) const {
    Poly quot, rem;
    divmod(d, quot, rem);
    if (!rem.is_zero()) throw ScalarError("inexact polynomial division");
    return quot;
}

Poly Poly::monic() const {
    if (is_zero() || lead().is_one()) return *this;
    return *this * lead().inv();
}

Poly Poly::conj() const {
    Poly p = *this;
    for (auto& c : p.c_) c = c.conj();
    return p;
}

GaussianRational Poly::eval(const GaussianRational& x) const {
    GaussianRational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

Poly Poly::gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly quot, rem;
        a.divmod(b, quot, rem);
        a = std::move(b);
        b = rem.monic();
    }
    return a.monic();
}

// ---------------------------------------------------------------- QScalar

QScalar::QScalar(const GaussianRational& c) : num_(Poly::constant(c)), den_(Poly::constant(1)) {}

QScalar QScalar::q_pow(int k) {
    QScalar s(1);
    s.shift_ = k;
    return s;
}

QScalar QScalar::lambda_minus() { return q() - q_pow(-1); }
QScalar QScalar::lambda_plus() { return q() + q_pow(-1); }

QScalar QScalar::fraction(int shift, Poly num, Poly den) {
    if (den.is_zero()) throw ScalarError("zero denominator");
    QScalar s;
    s.shift_ = shift;
    s.num_ = std::move(num);
    s.den_ = std::move(den);
    s.canonicalize();
    return s;
}

void QScalar::canonicalize() {
    if (num_.is_zero()) {
        shift_ = 0;
        den_ = Poly::constant(1);
        return;
    }
    if (int low = num_.low_order(); low > 0) {
        num_ = num_.shift_down(low);
        shift_ += low;
    }
    if (int low = den_.low_order(); low > 0) {
        den_ = den_.shift_down(low);
        shift_ -= low;
    }
    if (den_.degree() > 0) {
        Poly g = Poly::gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_.exact_div(g);
            den_ = den_.exact_div(g);
        }
    }
    if (!den_.lead().is_one()) {
        GaussianRational f = den_.lead().inv();
        num_ = num_ * f;
        den_ = den_ * f;
    }
}

bool QScalar::is_constant() const { return is_zero() || (shift_ == 0 && num_.degree() == 0 && den_.is_one()); }

GaussianRational QScalar::constant_value() const {
    if (!is_constant()) throw ScalarError("scalar depends on q: " + str());
    return num_.coeff(0);
}

int QScalar::nonzero_terms() const {
    int n = 0;
    for (const auto& c : num_.coeffs())
        if (!c.is_zero()) ++n;
    return n;
}

QScalar QScalar::inv() const {
    if (is_zero()) throw ScalarError("inversion of zero");
    return fraction(-shift_, den_, num_);
}

QScalar QScalar::conj() const {
    QScalar s = *this;
    s.num_ = num_.conj();
    s.den_ = den_.conj();
    return s;
}

GaussianRational QScalar::eval_at(const GaussianRational& q0) const {
    if (q0.is_zero()) throw ScalarError("evaluation at q = 0");
    GaussianRational d = den_.eval(q0);
    if (d.is_zero()) throw ScalarError("pole of " + str() + " at q = " + q0.str());
    GaussianRational p(1);
    GaussianRational base = shift_ >= 0 ? q0 : q0.inv();
    for (int k = 0; k < std::abs(shift_); ++k) p *= base;
    return p * num_.eval(q0) / d;
}

QScalar& QScalar::operator+=(const QScalar& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    int s = std::min(shift_, o.shift_);
    Poly a = num_.shift_up(shift_ - s);
    Poly b = o.num_.shift_up(o.shift_ - s);
    if (den_ == o.den_) {
        num_ = a + b;
    } else {
        num_ = a * o.den_ + b * den_;
        den_ = den_ * o.den_;
    }
    shift_ = s;
    canonicalize();
    return *this;
}

QScalar& QScalar::operator-=(const QScalar& o) { return *this += -o; }

QScalar& QScalar::operator*=(const QScalar& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) return *this = QScalar();
    shift_ += o.shift_;
    num_ = num_ * o.num_;
    if (!o.den_.is_one()) den_ = den_ * o.den_;
    canonicalize();
    return *this;
}

QScalar QScalar::operator-() const {
    QScalar s = *this;
    s.num_ = -num_;
    return s;
}

QScalar QScalar::pow(int k) const {
    if (k < 0) return inv().pow(-k);
    QScalar r(1), b = *this;
    while (k > 0) {
        if (k & 1) r *= b;
        b *= b;
        k >>= 1;
    }
    return r;
}

namespace {

std::string q_power(int e) {
    if (e == 1) return "q";
    return "q^" + std::to_string(e);
}

// Renders sum_k c_k q^(k + shift) from the highest exponent down.
std::string laurent_str(const Poly& p, int shift) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        GaussianRational c = p.coeff(k);
        if (c.is_zero()) continue;
        int e = k + shift;
        bool neg = c.has_leading_minus();
        GaussianRational mag = neg ? -c : c;
        std::string body;
        if (e == 0)
            body = mag.str();
        else if (mag.is_one())
            body = q_power(e);
        else
            body = mag.str() + "*" + q_power(e);
        if (first)
            out += neg ? "-" + body : body;
        else
            out += (neg ? " - " : " + ") + body;
        first = false;
    }
    return out;
}

}  // namespace

std::string QScalar::str() const {
    std::string n = laurent_str(num_, shift_);
    if (den_.is_one()) return n;
    if (nonzero_terms() > 1) n = "(" + n + ")";
    return n + "/(" + laurent_str(den_, 0) + ")";
}

bool QScalar::renders_atomic() const { return is_zero() || is_monomial(); }

bool QScalar::has_leading_minus() const {
    if (!is_monomial()) return false;
    return num_.lead().has_leading_minus();
}

std::string to_string(const QScalar& s) { return s.str(); }

}  // namespace qquat
