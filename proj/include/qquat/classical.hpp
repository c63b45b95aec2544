#pragma once

#include "qquat/algebra.hpp"
#include "qquat/sampling.hpp"

#include <array>
#include <map>
#include <string>

namespace qquat {

/// Commutative polynomial in yp, ym, xp, xm with Gaussian rational
/// coefficients: the q = 1 shadow of the algebra. Deliberately shares no code
/// with the rewrite engine so it can serve as an oracle for it.
class CommPoly {
public:
    using Exponents = std::array<int, 4>;  // yp, ym, xp, xm

    CommPoly() = default;
    static CommPoly constant(const GaussianRational& c);
    static CommPoly variable(int index);

    const std::map<Exponents, GaussianRational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    CommPoly& operator+=(const CommPoly& o);
    friend CommPoly operator+(CommPoly a, const CommPoly& b) { return a += b; }
    friend CommPoly operator-(CommPoly a, const CommPoly& b);
    friend CommPoly operator*(const CommPoly& a, const CommPoly& b);
    friend CommPoly operator*(const GaussianRational& c, const CommPoly& a);
    friend bool operator==(const CommPoly& a, const CommPoly& b) { return a.terms_ == b.terms_; }

    /// Eliminates xp*xm with xp*xm = 1 - yp*ym (the unit-norm quotient).
    CommPoly reduce_unit_norm() const;

    std::string str() const;

private:
    void add(const Exponents& e, const GaussianRational& c);
    std::map<Exponents, GaussianRational> terms_;
};

/// Classical value of a raw expression: q := 1, letters commute, a-letters
/// replaced by their classical expressions in xp, xm, yp, ym.
CommPoly classical_value(const RawExpr& e, Mode mode);

/// Commutative image of an engine result already specialized at q = 1.
CommPoly commutative_image(const Element& e);

}  // namespace qquat
