#include "qquat/sampling.hpp"

namespace qquat {

QScalar random_scalar(std::mt19937_64& rng, bool q_dependent) {
    std::uniform_int_distribution<long> num(-4, 4);
    std::uniform_int_distribution<long> den(1, 3);
    std::uniform_int_distribution<int> shift(-2, 2);
    GaussianRational c;
    while (c.is_zero()) c = GaussianRational(mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng)));
    QScalar s(c);
    if (q_dependent) s *= QScalar::q_pow(shift(rng));
    return s;
}

RawExpr random_raw(std::mt19937_64& rng, int max_degree, int max_terms) {
    std::uniform_int_distribution<int> terms(1, max_terms);
    std::uniform_int_distribution<int> degree(0, max_degree);
    std::uniform_int_distribution<int> letter(0, 7);
    RawExpr e;
    int n = terms(rng);
    for (int t = 0; t < n; ++t) {
        RawTerm term{random_scalar(rng), {}};
        int d = degree(rng);
        for (int k = 0; k < d; ++k) term.letters.push_back(static_cast<RawLetter>(letter(rng)));
        e.push_back(std::move(term));
    }
    return e;
}

Element raw_letter(const SystemPtr& sys, RawLetter l) {
    switch (l) {
        case RawLetter::A0: return from_a_basis(sys, 0);
        case RawLetter::A1: return from_a_basis(sys, 1);
        case RawLetter::A2: return from_a_basis(sys, 2);
        case RawLetter::A3: return from_a_basis(sys, 3);
        case RawLetter::XP: return gen(sys, Xp);
        case RawLetter::XM: return gen(sys, Xm);
        case RawLetter::YP: return gen(sys, Yp);
        case RawLetter::YM: return gen(sys, Ym);
    }
    throw std::invalid_argument("bad raw letter");
}

Element evaluate_raw(const SystemPtr& sys, const RawExpr& e) {
    Element out(sys);
    for (const auto& term : e) {
        Element t(sys, term.coeff);
        for (RawLetter l : term.letters) t *= raw_letter(sys, l);
        out += t;
    }
    return out;
}

Element random_element(const SystemPtr& sys, std::mt19937_64& rng, int max_degree, int max_terms) {
    return evaluate_raw(sys, random_raw(rng, max_degree, max_terms));
}

}  // namespace qquat
