#pragma once

#include "qquat/algebra.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace qquat {

/// Letters of unreduced input expressions: the a-basis and the internal basis.
enum class RawLetter : std::uint8_t { A0, A1, A2, A3, XP, XM, YP, YM };

/// c * l_1 l_2 ... l_n before any reduction.
struct RawTerm {
    QScalar coeff;
    std::vector<RawLetter> letters;
};

/// Formal sum of raw terms; the input side of property tests and oracles.
using RawExpr = std::vector<RawTerm>;

constexpr std::uint64_t kDefaultSeed = 20240601;

/// Small random coefficient r * q^k with r a nonzero Gaussian rational.
QScalar random_scalar(std::mt19937_64& rng, bool q_dependent = true);
RawExpr random_raw(std::mt19937_64& rng, int max_degree, int max_terms);

Element raw_letter(const SystemPtr& sys, RawLetter l);
Element evaluate_raw(const SystemPtr& sys, const RawExpr& e);

/// Random normalized element of degree <= max_degree.
Element random_element(const SystemPtr& sys, std::mt19937_64& rng, int max_degree, int max_terms = 3);

}  // namespace qquat
