#pragma once

#include "qquat/algebra.hpp"
#include "qquat/report.hpp"
#include "qquat/tensor.hpp"

#include <array>
#include <vector>

namespace qquat {

/// Structure-map values on the generators a0..a3, stored in the a-basis
/// exactly as they are defined:
///   D(a0) = a0(x)a0 - a1(x)a1 - a2(x)a2 - a3(x)a3
///   D(a1) = a0(x)a1 + a1(x)a0 + a2(x)a3 - a3(x)a2
///   D(a2) = a0(x)a2 + a2(x)a0 + a3(x)a1 - a1(x)a3
///   D(a3) = a0(x)a3 + a3(x)a0 + a1(x)a2 - a2(x)a1
///   eps(a_k) = delta_{0k}
///   S(a_k) = N_q^{-1} (2 delta_{0k} a0 - a_k^*)
struct GeneratorImages {
    std::vector<Tensor> delta;
    std::vector<QScalar> epsilon;
    std::vector<LocalizedElement> antipode;

    static GeneratorImages build(const SystemPtr& sys);
};

/// Algebra homomorphism extending the generator images multiplicatively.
Tensor coproduct(const Element& e);
/// Product of letter images without reducing the word first.
Tensor coproduct_raw(const SystemPtr& sys, const Word& w);
/// Algebra homomorphism into the scalars.
QScalar counit(const Element& e);
/// Linear anti-homomorphism into the localization at N_q.
LocalizedElement antipode(const Element& e);
LocalizedElement antipode_raw(const SystemPtr& sys, const Word& w);

SlotMap coproduct_map();
SlotMap counit_map();

/// Every rewrite rule lhs -> rhs must satisfy D(lhs) = D(rhs); the a-basis
/// relations are checked on raw products as well.
SuiteReport check_coproduct_homomorphism(Mode mode);
/// (I (x) D) D = (D (x) I) D on the generators, the unit and the samples.
SuiteReport check_coassociativity(Mode mode, const std::vector<Element>& samples);
/// (eps (x) I) D = I = (I (x) eps) D.
SuiteReport check_counit_axiom(Mode mode, const std::vector<Element>& samples);
/// m (S (x) I) D = eps = m (I (x) S) D, exact in SP mode and as localized
/// equality in GL mode. Also records eps o S = eps and the anti-homomorphism
/// property on sample pairs.
SuiteReport check_antipode_axiom(Mode mode, const std::vector<Element>& samples);

/// m (S (x) I) D (e) computed term by term in the localization.
LocalizedElement antipode_left_collapse(const Element& e);
LocalizedElement antipode_right_collapse(const Element& e);

}  // namespace qquat
