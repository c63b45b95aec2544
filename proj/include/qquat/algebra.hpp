#pragma once

#include "qquat/rewrite.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace qquat {

/// GL: the full algebra. SP: the quotient by N_q = 1.
enum class Mode { GL, SP };

std::string to_string(Mode m);
Mode parse_mode(const std::string& s);

/// Internal PBW letters in their fixed order y+ < y- < x+ < x-.
enum Gen : Letter { Yp = 0, Ym = 1, Xp = 2, Xm = 3 };

/// The rewrite system of the q-quaternion algebra in the given mode.
/// Instances are process-wide singletons, so elements of the same mode share
/// one memo table and compare equal across call sites.
const SystemPtr& quaternion_system(Mode mode);
Mode mode_of(const SystemPtr& sys);

Element unit(const SystemPtr& sys);
Element gen(const SystemPtr& sys, Gen g);

/// Coefficients expressing each internal letter in the a-basis:
/// x+- = a0 +- i a1, y+- = a2 +- i a3.
const std::array<std::array<QScalar, 4>, 4>& letter_in_a_basis();

/// a_k as an element: a0 = (x+ + x-)/2, a1 = (x+ - x-)/(2i),
/// a2 = (y+ + y-)/2, a3 = (y+ - y-)/(2i).
Element from_a_basis(const SystemPtr& sys, int k);
/// Product a_{k1} a_{k2} ... in the given order.
Element a_word(const SystemPtr& sys, const std::vector<int>& indices);

/// Star images of a0..a3 as printed with the star structure:
/// a0* = a0, a1* = a1, a2* = (l+ a2 - i l- a3)/2, a3* = (i/2)(l- a2 - i l+ a3).
Element star_of_a(const SystemPtr& sys, int k);

/// Antilinear, antimultiplicative involution.
Element star(const Element& e);

/// N_q = a0^2 + a1^2 + (l+/2)(a2^2 + a3^2); equals 1 in SP mode.
Element norm_element(const SystemPtr& sys);

/// Normalized lhs - rhs; zero iff the identity holds in the algebra.
Element check_relation_zero(const Element& lhs, const Element& rhs);

Element commutator(const Element& a, const Element& b);

/// Element expressed over descending-index a-monomials a_{k1}...a_{kn},
/// k1 >= ... >= kn. Unique for GL-mode elements (the algebra is graded).
struct ABasisForm {
    std::map<std::vector<int>, QScalar> terms;
    std::string str() const;
};

/// Throws std::invalid_argument for SP-mode elements or degree above 6.
ABasisForm to_a_basis(const Element& e);
Element from_a_basis_form(const SystemPtr& sys, const ABasisForm& form);

/// Fraction numerator * N_q^{-power}. N_q is central, so left and right
/// fractions coincide.
class LocalizedElement {
public:
    explicit LocalizedElement(Element numerator, int power = 0);

    const Element& numerator() const { return num_; }
    int power() const { return power_; }
    const SystemPtr& system() const { return num_.system(); }

    /// Same value with denominator N_q^target (target >= power()).
    Element numerator_at(int target) const;

    friend LocalizedElement operator+(const LocalizedElement& a, const LocalizedElement& b);
    friend LocalizedElement operator-(const LocalizedElement& a, const LocalizedElement& b);
    friend LocalizedElement operator*(const LocalizedElement& a, const LocalizedElement& b);
    friend LocalizedElement operator*(const QScalar& c, const LocalizedElement& a);
    /// Decided by cross-multiplication: p N^{m'} = p' N^{m}.
    friend bool operator==(const LocalizedElement& a, const LocalizedElement& b);

    bool is_zero() const { return num_.is_zero(); }
    std::string str() const;

private:
    Element num_;
    int power_;
};

LocalizedElement loc_mul(const LocalizedElement& a, const LocalizedElement& b);
bool loc_eq(const LocalizedElement& a, const LocalizedElement& b);

}  // namespace qquat
