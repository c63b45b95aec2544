#include "qquat/tensor.hpp"

#include "qquat/algebra.hpp"

#include <stdexcept>

namespace qquat {

namespace {

void check_compatible(const Tensor& a, const Tensor& b) {
    if (a.system() != b.system()) throw std::invalid_argument("tensors over different algebras");
    if (a.rank() != b.rank()) throw std::invalid_argument("tensor rank mismatch");
}

// Sums c * prod_k slots[k] over the cartesian product of slot expansions.
void expand_into(Tensor& out, const std::vector<Terms>& slots, std::size_t k, MultiWord& cur, const QScalar& c) {
    if (k == slots.size()) {
        out.add(cur, c);
        return;
    }
    for (const auto& [w, d] : slots[k]) {
        cur[k] = w;
        expand_into(out, slots, k + 1, cur, c * d);
    }
}

}  // namespace

void Tensor::add(const MultiWord& w, const QScalar& c) {
    if (w.size() != rank_) throw std::invalid_argument("multiword rank mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Tensor Tensor::scalar(SystemPtr sys, std::size_t rank, const QScalar& c) {
    Tensor t(std::move(sys), rank);
    t.add(MultiWord(rank), c);
    return t;
}

Tensor Tensor::from_element(const Element& e) {
    Tensor t(e.system(), 1);
    for (const auto& [w, c] : e.terms()) t.add({w}, c);
    return t;
}

Tensor Tensor::outer(const std::vector<Element>& factors) {
    if (factors.empty()) throw std::invalid_argument("outer product of no factors");
    Tensor t = from_element(factors[0]);
    for (std::size_t k = 1; k < factors.size(); ++k) t = tensor_product(t, from_element(factors[k]));
    return t;
}

Tensor Tensor::embed(const Element& e, std::size_t slot, std::size_t rank) {
    if (slot >= rank) throw std::out_of_range("tensor slot out of range");
    Tensor t(e.system(), rank);
    for (const auto& [w, c] : e.terms()) {
        MultiWord mw(rank);
        mw[slot] = w;
        t.add(mw, c);
    }
    return t;
}

Element Tensor::to_element() const {
    if (rank_ != 1) throw std::invalid_argument("to_element requires a rank-1 tensor");
    Element e(sys_);
    Terms t;
    for (const auto& [mw, c] : terms_) add_term(t, mw[0], c);
    return Element(sys_, t);
}

Tensor& Tensor::operator+=(const Tensor& o) {
    check_compatible(*this, o);
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
}

Tensor& Tensor::operator-=(const Tensor& o) {
    check_compatible(*this, o);
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
}

Tensor operator*(const Tensor& a, const Tensor& b) {
    check_compatible(a, b);
    Tensor out(a.sys_, a.rank_);
    std::vector<Terms> slots(a.rank_);
    MultiWord cur(a.rank_);
    for (const auto& [u, c] : a.terms_) {
        for (const auto& [v, d] : b.terms_) {
            for (std::size_t k = 0; k < a.rank_; ++k) {
                Word w = u[k];
                w.insert(w.end(), v[k].begin(), v[k].end());
                slots[k] = a.sys_->reduce(w);
            }
            expand_into(out, slots, 0, cur, c * d);
        }
    }
    return out;
}

Tensor operator*(const QScalar& c, const Tensor& a) {
    Tensor out(a.sys_, a.rank_);
    for (const auto& [w, d] : a.terms_) out.add(w, c * d);
    return out;
}

Tensor Tensor::eval_at(const GaussianRational& q0) const {
    Tensor out(sys_, rank_);
    for (const auto& [w, c] : terms_) out.add(w, QScalar(c.eval_at(q0)));
    return out;
}

std::string Tensor::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [mw, c] : terms_) {
        std::string word;
        for (std::size_t k = 0; k < mw.size(); ++k) {
            if (k) word += " (x) ";
            word += sys_->render_word(mw[k]);
        }
        if (rank_ == 0) word.clear();
        s += render_term(c, word, first);
        first = false;
    }
    return s;
}

Tensor tensor_product(const Tensor& a, const Tensor& b) {
    if (a.system() != b.system()) throw std::invalid_argument("tensors over different algebras");
    Tensor out(a.system(), a.rank() + b.rank());
    for (const auto& [u, c] : a.terms()) {
        for (const auto& [v, d] : b.terms()) {
            MultiWord w = u;
            w.insert(w.end(), v.begin(), v.end());
            out.add(w, c * d);
        }
    }
    return out;
}

Tensor tmul(const Tensor& a, const Tensor& b) { return a * b; }
Tensor tadd(const Tensor& a, const Tensor& b) { return a + b; }

SlotMap identity_map() {
    return [](const Element& e) { return Tensor::from_element(e); };
}

Tensor apply_maps(const std::vector<SlotMap>& maps, const Tensor& t) {
    if (maps.size() != t.rank()) throw std::invalid_argument("one map per tensor slot required");
    const SystemPtr& sys = t.system();
    std::optional<Tensor> out;
    for (const auto& [mw, c] : t.terms()) {
        Tensor term = Tensor::scalar(sys, 0, c);
        for (std::size_t k = 0; k < maps.size(); ++k) term = tensor_product(term, maps[k](Element::word(sys, mw[k])));
        if (!out)
            out = std::move(term);
        else
            *out += term;
    }
    if (!out) {
        // Zero input: rank of the output is the sum of the maps' ranks on 1.
        std::size_t rank = 0;
        for (const auto& m : maps) rank += m(unit(sys)).rank();
        return Tensor(sys, rank);
    }
    return *out;
}

Tensor apply_pair(const SlotMap& f, const SlotMap& g, const Tensor& t) { return apply_maps({f, g}, t); }

Element mult_collapse(const Tensor& t) {
    if (t.rank() != 2) throw std::invalid_argument("mult_collapse requires a rank-2 tensor");
    Terms raw;
    for (const auto& [mw, c] : t.terms()) {
        Word w = mw[0];
        w.insert(w.end(), mw[1].begin(), mw[1].end());
        add_term(raw, w, c);
    }
    return Element(t.system(), raw);
}

Tensor star(const Tensor& t) {
    const SystemPtr& sys = t.system();
    Tensor out(sys, t.rank());
    for (const auto& [mw, c] : t.terms()) {
        std::vector<Element> factors;
        for (const auto& w : mw) factors.push_back(star(Element::word(sys, w)));
        Tensor term = t.rank() == 0 ? Tensor::scalar(sys, 0, 1) : Tensor::outer(factors);
        out += c.conj() * term;
    }
    return out;
}

}  // namespace qquat
