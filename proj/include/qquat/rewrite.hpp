#pragma once

#include "qquat/scalar.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace qquat {

using Letter = std::uint8_t;
using Word = std::vector<Letter>;

/// Graded lexicographic order on words: shorter words first, then letters
/// compared left to right by their index in the alphabet.
struct ShortLex {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

/// Linear combination of words with nonzero coefficients.
using Terms = std::map<Word, QScalar, ShortLex>;

void add_term(Terms& t, const Word& w, const QScalar& c);

/// Thrown when normalization exceeds its step budget (suspected non-terminating
/// orientation). Carries the word being reduced.
class NonTerminationError : public std::runtime_error {
public:
    NonTerminationError(const std::string& what, Word word) : std::runtime_error(what), word_(std::move(word)) {}
    const Word& word() const { return word_; }

private:
    Word word_;
};

/// A rule rewriting the two-letter word (left, right) to a linear combination.
struct Rule {
    Letter left;
    Letter right;
    std::vector<std::pair<Word, QScalar>> rhs;
};

/// String rewriting system whose left-hand sides all have length two.
///
/// Normal forms are computed by leftmost-redex reduction and memoized per
/// word. The memo table is shared between threads and guarded by a lock; the
/// system itself is otherwise immutable after construction.
class RewriteSystem {
public:
    static constexpr std::size_t kDefaultStepLimit = 1'000'000;

    RewriteSystem(std::string name, std::vector<std::string> letter_names, std::vector<Rule> rules,
                  std::size_t step_limit = kDefaultStepLimit);

    const std::string& name() const { return name_; }
    std::size_t alphabet_size() const { return letters_.size(); }
    const std::string& letter_name(Letter l) const { return letters_.at(l); }
    std::optional<Letter> find_letter(const std::string& name) const;
    const std::vector<Rule>& rules() const { return rules_; }
    const Rule* rule_for(Letter left, Letter right) const;

    bool is_normal(const Word& w) const;
    /// Normal form of a single word.
    Terms reduce(const Word& w) const;
    /// Normal form of a linear combination of (possibly non-normal) words.
    Terms reduce(const Terms& t) const;

    std::string render_word(const Word& w) const;
    /// "x-*x+ -> x+*x- + (q - q^-1)*y+*y-"
    std::string render_rule(const Rule& r) const;

private:
    Terms reduce_impl(const Word& w, std::size_t& steps, std::size_t depth) const;

    std::string name_;
    std::vector<std::string> letters_;
    std::vector<Rule> rules_;
    std::vector<int> table_;  // alphabet_size^2, rule index or -1
    std::size_t step_limit_;

    struct WordHash {
        std::size_t operator()(const Word& w) const noexcept;
    };
    mutable std::shared_mutex cache_mutex_;
    mutable std::unordered_map<Word, Terms, WordHash> cache_;
};

using SystemPtr = std::shared_ptr<const RewriteSystem>;

/// Canonical linear combination of normal words over a rewrite system.
class Element {
public:
    explicit Element(SystemPtr sys) : sys_(std::move(sys)) {}
    Element(SystemPtr sys, const QScalar& c);
    /// Normalizes the given combination.
    Element(SystemPtr sys, const Terms& raw);

    static Element word(SystemPtr sys, const Word& w);
    static Element letter(SystemPtr sys, Letter l) { return word(std::move(sys), Word{l}); }

    const SystemPtr& system() const { return sys_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Maximal word length; -1 for zero.
    int degree() const;
    /// True when the element is c * 1.
    bool is_scalar() const;
    /// Coefficient of the empty word.
    QScalar scalar_part() const;
    QScalar coeff(const Word& w) const;

    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    Element& operator*=(const Element& o) { return *this = *this * o; }
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(const Element& a, const Element& b);
    friend Element operator*(const QScalar& c, const Element& a);
    friend Element operator*(const Element& a, const QScalar& c) { return c * a; }
    Element operator-() const;
    friend bool operator==(const Element& a, const Element& b);

    Element pow(int n) const;
    /// Applies f to every coefficient and renormalizes.
    template <class F>
    Element map_coefficients(F&& f) const {
        Terms t;
        for (const auto& [w, c] : terms_) add_term(t, w, f(c));
        Element e(sys_);
        e.terms_ = std::move(t);
        return e;
    }
    /// Coefficientwise substitution q := q0.
    Element eval_at(const GaussianRational& q0) const;

    /// Canonical rendering, e.g. "(q - q^-1)*y+*y- + x+*x-".
    std::string str() const;

private:
    SystemPtr sys_;
    Terms terms_;
};

/// Renders c*word in the expression grammar (shared with tensors).
std::string render_term(const QScalar& c, const std::string& word, bool first);

/// One critical pair of a rewrite system: the overlap word l1 l2 l3 reduced
/// by first applying the rule on (l1,l2) and by first applying the rule on
/// (l2,l3).
struct Overlap {
    Word word;
    Element via_left;
    Element via_right;
    Element residual;
    bool resolved() const { return residual.is_zero(); }
};

struct OverlapReport {
    std::string system;
    std::vector<Overlap> overlaps;
    std::size_t unresolved() const;
};

/// Enumerates every length-3 overlap ambiguity and reduces it both ways.
OverlapReport check_confluence(const SystemPtr& sys);

}  // namespace qquat
