#include "qquat/rewrite.hpp"

#include <algorithm>

namespace qquat {

void add_term(Terms& t, const Word& w, const QScalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = t.try_emplace(w, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) t.erase(it);
}

// ---------------------------------------------------------------- RewriteSystem

RewriteSystem::RewriteSystem(std::string name, std::vector<std::string> letter_names, std::vector<Rule> rules,
                             std::size_t step_limit)
    : name_(std::move(name)), letters_(std::move(letter_names)), rules_(std::move(rules)), step_limit_(step_limit) {
    const std::size_t n = letters_.size();
    table_.assign(n * n, -1);
    for (std::size_t k = 0; k < rules_.size(); ++k) {
        const Rule& r = rules_[k];
        if (r.left >= n || r.right >= n) throw std::invalid_argument("rule letter out of range");
        int& slot = table_[r.left * n + r.right];
        if (slot >= 0) throw std::invalid_argument("duplicate rule for " + letters_[r.left] + letters_[r.right]);
        slot = static_cast<int>(k);
    }
}

std::optional<Letter> RewriteSystem::find_letter(const std::string& name) const {
    for (std::size_t k = 0; k < letters_.size(); ++k)
        if (letters_[k] == name) return static_cast<Letter>(k);
    return std::nullopt;
}

const Rule* RewriteSystem::rule_for(Letter left, Letter right) const {
    int k = table_[left * letters_.size() + right];
    return k < 0 ? nullptr : &rules_[static_cast<std::size_t>(k)];
}

bool RewriteSystem::is_normal(const Word& w) const {
    for (std::size_t k = 0; k + 1 < w.size(); ++k)
        if (rule_for(w[k], w[k + 1])) return false;
    return true;
}

std::size_t RewriteSystem::WordHash::operator()(const Word& w) const noexcept {
    std::size_t h = w.size();
    for (Letter l : w) h = h * 31 + l + 1;
    return h;
}

Terms RewriteSystem::reduce(const Word& w) const {
    std::size_t steps = 0;
    return reduce_impl(w, steps, 0);
}

Terms RewriteSystem::reduce(const Terms& t) const {
    Terms out;
    for (const auto& [w, c] : t) {
        if (is_normal(w)) {
            add_term(out, w, c);
            continue;
        }
        for (const auto& [nw, nc] : reduce(w)) add_term(out, nw, c * nc);
    }
    return out;
}

Terms RewriteSystem::reduce_impl(const Word& w, std::size_t& steps, std::size_t depth) const {
    {
        std::shared_lock lock(cache_mutex_);
        if (auto it = cache_.find(w); it != cache_.end()) return it->second;
    }
    std::size_t pos = w.size();
    const Rule* rule = nullptr;
    for (std::size_t k = 0; k + 1 < w.size(); ++k) {
        if ((rule = rule_for(w[k], w[k + 1]))) {
            pos = k;
            break;
        }
    }
    Terms result;
    if (!rule) {
        result.emplace(w, QScalar(1));
        return result;
    }
    if (++steps > step_limit_ || depth > 20000)
        throw NonTerminationError("rewrite step limit exceeded in " + name_ + " while reducing " + render_word(w), w);
    for (const auto& [rw, c] : rule->rhs) {
        Word next(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
        next.insert(next.end(), rw.begin(), rw.end());
        next.insert(next.end(), w.begin() + static_cast<std::ptrdiff_t>(pos + 2), w.end());
        for (const auto& [nw, nc] : reduce_impl(next, steps, depth + 1)) add_term(result, nw, c * nc);
    }
    std::unique_lock lock(cache_mutex_);
    cache_.emplace(w, result);
    return result;
}

std::string RewriteSystem::render_word(const Word& w) const {
    if (w.empty()) return "1";
    std::string s;
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (k) s += "*";
        s += letters_.at(w[k]);
    }
    return s;
}

std::string RewriteSystem::render_rule(const Rule& r) const {
    std::string s = render_word({r.left, r.right}) + " ->";
    bool first = true;
    for (const auto& [w, c] : r.rhs) {
        s += render_term(c, render_word(w), first).insert(0, first ? " " : "");
        first = false;
    }
    return s;
}

// ---------------------------------------------------------------- Element

Element::Element(SystemPtr sys, const QScalar& c) : sys_(std::move(sys)) {
    if (!c.is_zero()) terms_.emplace(Word{}, c);
}

Element::Element(SystemPtr sys, const Terms& raw) : sys_(std::move(sys)) { terms_ = sys_->reduce(raw); }

Element Element::word(SystemPtr sys, const Word& w) {
    Element e(std::move(sys));
    e.terms_ = e.sys_->reduce(w);
    return e;
}

int Element::degree() const {
    if (terms_.empty()) return -1;
    return static_cast<int>(terms_.rbegin()->first.size());
}

bool Element::is_scalar() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }

QScalar Element::scalar_part() const { return coeff({}); }

QScalar Element::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? QScalar() : it->second;
}

Element& Element::operator+=(const Element& o) {
    for (const auto& [w, c] : o.terms_) add_term(terms_, w, c);
    return *this;
}

Element& Element::operator-=(const Element& o) {
    for (const auto& [w, c] : o.terms_) add_term(terms_, w, -c);
    return *this;
}

Element operator*(const Element& a, const Element& b) {
    if (a.sys_ != b.sys_) throw std::invalid_argument("multiplying elements of different algebras");
    Element out(a.sys_);
    Word w;
    for (const auto& [u, c] : a.terms_) {
        for (const auto& [v, d] : b.terms_) {
            QScalar cd = c * d;
            w.assign(u.begin(), u.end());
            w.insert(w.end(), v.begin(), v.end());
            if (u.empty() || v.empty() || !a.sys_->rule_for(u.back(), v.front())) {
                add_term(out.terms_, w, cd);
                continue;
            }
            for (const auto& [nw, nc] : a.sys_->reduce(w)) add_term(out.terms_, nw, cd * nc);
        }
    }
    return out;
}

Element operator*(const QScalar& c, const Element& a) {
    Element out(a.sys_);
    if (c.is_zero()) return out;
    for (const auto& [w, d] : a.terms_) out.terms_.emplace_hint(out.terms_.end(), w, c * d);
    return out;
}

Element Element::operator-() const { return QScalar(-1) * *this; }

bool operator==(const Element& a, const Element& b) { return a.sys_ == b.sys_ && a.terms_ == b.terms_; }

Element Element::pow(int n) const {
    if (n < 0) throw std::invalid_argument("negative power of an algebra element");
    Element r(sys_, QScalar(1)), base = *this;
    while (n > 0) {
        if (n & 1) r *= base;
        base *= base;
        n >>= 1;
    }
    return r;
}

Element Element::eval_at(const GaussianRational& q0) const {
    return map_coefficients([&](const QScalar& c) { return QScalar(c.eval_at(q0)); });
}

std::string render_term(const QScalar& c, const std::string& word, bool first) {
    std::string sep = first ? "" : " + ";
    if (word.empty() || word == "1") {
        if (first) return c.str();
        if (c.renders_atomic() && c.has_leading_minus()) return " - " + (-c).str();
        return sep + (c.renders_atomic() ? c.str() : "(" + c.str() + ")");
    }
    if (c.renders_atomic()) {
        bool neg = c.has_leading_minus();
        QScalar mag = neg ? -c : c;
        std::string body = mag.is_one() ? word : mag.str() + "*" + word;
        if (first) return (neg ? "-" : "") + body;
        return (neg ? " - " : " + ") + body;
    }
    return sep + "(" + c.str() + ")*" + word;
}

std::string Element::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        s += render_term(c, w.empty() ? std::string() : sys_->render_word(w), first);
        first = false;
    }
    return s;
}

// ---------------------------------------------------------------- confluence

std::size_t OverlapReport::unresolved() const {
    return static_cast<std::size_t>(std::count_if(overlaps.begin(), overlaps.end(),
                                                  [](const Overlap& o) { return !o.resolved(); }));
}

OverlapReport check_confluence(const SystemPtr& sys) {
    OverlapReport report{sys->name(), {}};
    for (const Rule& first : sys->rules()) {
        for (const Rule& second : sys->rules()) {
            if (first.right != second.left) continue;
            Word word{first.left, first.right, second.right};
            Terms left_path, right_path;
            for (const auto& [w, c] : first.rhs) {
                Word next = w;
                next.push_back(second.right);
                add_term(left_path, next, c);
            }
            for (const auto& [w, c] : second.rhs) {
                Word next{first.left};
                next.insert(next.end(), w.begin(), w.end());
                add_term(right_path, next, c);
            }
            Element via_left(sys, left_path);
            Element via_right(sys, right_path);
            Element residual = via_left - via_right;
            report.overlaps.push_back({std::move(word), std::move(via_left), std::move(via_right), std::move(residual)});
        }
    }
    return report;
}

}  // namespace qquat
