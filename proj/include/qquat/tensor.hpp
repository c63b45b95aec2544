#pragma once

#include "qquat/rewrite.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace qquat {

/// Tuple of words, one per tensor slot.
using MultiWord = std::vector<Word>;

struct MultiWordLess {
    bool operator()(const MultiWord& a, const MultiWord& b) const {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), ShortLex{});
    }
};

/// Element of the plain (unbraided) tensor power A^{(x) rank}. Multiplication
/// is slotwise: (u (x) v)(u' (x) v') = uu' (x) vv'. Rank 0 is the scalar field.
class Tensor {
public:
    Tensor(SystemPtr sys, std::size_t rank) : sys_(std::move(sys)), rank_(rank) {}

    /// c * (1 (x) ... (x) 1)
    static Tensor scalar(SystemPtr sys, std::size_t rank, const QScalar& c);
    static Tensor from_element(const Element& e);
    /// e_1 (x) e_2 (x) ... (all factors over the same system).
    static Tensor outer(const std::vector<Element>& factors);
    /// e placed in slot `slot` of a rank-`rank` tensor, units elsewhere.
    static Tensor embed(const Element& e, std::size_t slot, std::size_t rank);

    const SystemPtr& system() const { return sys_; }
    std::size_t rank() const { return rank_; }
    const std::map<MultiWord, QScalar, MultiWordLess>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Rank-1 tensor back to an element.
    Element to_element() const;

    Tensor& operator+=(const Tensor& o);
    Tensor& operator-=(const Tensor& o);
    friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
    friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
    friend Tensor operator*(const Tensor& a, const Tensor& b);
    friend Tensor operator*(const QScalar& c, const Tensor& a);
    Tensor operator-() const { return QScalar(-1) * *this; }
    friend bool operator==(const Tensor& a, const Tensor& b) {
        return a.sys_ == b.sys_ && a.rank_ == b.rank_ && a.terms_ == b.terms_;
    }

    Tensor eval_at(const GaussianRational& q0) const;

    /// Terms rendered as "u (x) v", sorted canonically.
    std::string str() const;

    void add(const MultiWord& w, const QScalar& c);

private:
    SystemPtr sys_;
    std::size_t rank_;
    std::map<MultiWord, QScalar, MultiWordLess> terms_;
};

Tensor tensor_product(const Tensor& a, const Tensor& b);

Tensor tmul(const Tensor& a, const Tensor& b);
Tensor tadd(const Tensor& a, const Tensor& b);

/// A linear map from the algebra into some tensor power of it (identity,
/// counit, coproduct, star, ...). Applied to single normal words.
using SlotMap = std::function<Tensor(const Element&)>;

SlotMap identity_map();

/// Applies maps[k] to slot k of every term and multiplies the results out
/// with the tensor product; the result rank is the sum of the image ranks.
Tensor apply_maps(const std::vector<SlotMap>& maps, const Tensor& t);
Tensor apply_pair(const SlotMap& f, const SlotMap& g, const Tensor& t);

/// m(u (x) v) = uv, summed and normalized.
Element mult_collapse(const Tensor& t);

/// Slotwise star (antilinear; antimultiplicative on the tensor algebra).
Tensor star(const Tensor& t);

}  // namespace qquat
