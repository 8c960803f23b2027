#include "hhgabber/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace hhgabber {

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
    Polynomial f(std::move(ring));
    if (c != 0)
        f.terms_.emplace(Monomial(f.ring_->arity()), c);
    return f;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index, std::int32_t power) {
    Polynomial f(std::move(ring));
    if (index >= f.ring_->arity())
        throw std::out_of_range("Polynomial::variable: index out of range");
    if (power == 0)
        return constant(f.ring_, Rational(1));
    f.terms_.emplace(Monomial::variable(f.ring_->arity(), index, power), Rational(1));
    return f;
}

Polynomial Polynomial::term(RingPtr ring, Monomial m, const Rational& c) {
    Polynomial f(std::move(ring));
    if (m.arity() != f.ring_->arity())
        throw std::invalid_argument("Polynomial::term: monomial arity mismatch");
    if (c != 0)
        f.terms_.emplace(std::move(m), c);
    return f;
}

std::int64_t Polynomial::total_degree() const {
    std::int64_t d = -1;
    for (const auto& [m, c] : terms_)
        d = std::max(d, m.total_degree());
    return d;
}

std::int64_t Polynomial::degree_in(std::size_t var) const {
    std::int64_t d = -1;
    for (const auto& [m, c] : terms_)
        d = std::max<std::int64_t>(d, m[var]);
    return d;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c == 0)
        return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r(ring_);
    for (const auto& [m, c] : terms_)
        r.terms_.emplace(m, -c);
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    require_same_ring(ring_, o.ring_, "poly_add");
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    require_same_ring(ring_, o.ring_, "poly_sub");
    for (const auto& [m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r = *this;
    r += o;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial r = *this;
    r -= o;
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    require_same_ring(ring_, o.ring_, "poly_mul");
    Polynomial r(ring_);
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_)
            r.add_term(m1 * m2, c1 * c2);
    return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
    Polynomial r(ring_);
    if (c == 0)
        return r;
    for (const auto& [m, k] : terms_)
        r.terms_.emplace(m, k * c);
    return r;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial r = constant(ring_, Rational(1));
    for (unsigned i = 0; i < e; ++i)
        r = r * *this;
    return r;
}

Polynomial Polynomial::diff(std::size_t var) const {
    if (var >= ring_->arity())
        throw std::out_of_range("poly_diff: variable index out of range");
    Polynomial r(ring_);
    for (const auto& [m, c] : terms_) {
        std::int32_t e = m[var];
        if (e == 0)
            continue;
        std::vector<std::int32_t> exp = m.exponents();
        exp[var] = e - 1;
        r.add_term(Monomial(std::move(exp)), c * e);
    }
    return r;
}

Polynomial Polynomial::weighted_part(const std::vector<std::int32_t>& weight,
                                     std::int64_t d) const {
    Polynomial r(ring_);
    for (const auto& [m, c] : terms_)
        if (m.weighted_degree(weight) == d)
            r.terms_.emplace(m, c);
    return r;
}

namespace {

void append_monomial(std::string& out, const Monomial& m,
                     const std::vector<std::string>& names) {
    bool first = true;
    for (std::size_t i = 0; i < m.arity(); ++i) {
        if (m[i] == 0)
            continue;
        if (!first)
            out += '*';
        first = false;
        out += names[i];
        if (m[i] != 1) {
            out += '^';
            out += std::to_string(m[i]);
        }
    }
}

}  // namespace

std::string Polynomial::to_string() const {
    if (terms_.empty())
        return "0";
    std::vector<const TermMap::value_type*> ts;
    ts.reserve(terms_.size());
    for (const auto& t : terms_)
        ts.push_back(&t);
    MonomialOrder ord = MonomialOrder::grevlex();
    std::sort(ts.begin(), ts.end(), [&](const auto* a, const auto* b) {
        return ord.greater(a->first, b->first);
    });

    std::string out;
    bool first = true;
    for (const auto* t : ts) {
        const Monomial& m = t->first;
        Rational c = t->second;
        bool neg = c < 0;
        if (first) {
            if (neg)
                out += '-';
        } else {
            out += neg ? " - " : " + ";
        }
        first = false;
        Rational a = neg ? Rational(-c) : c;
        if (m.is_one()) {
            out += a.get_str();
        } else {
            if (a != 1) {
                out += a.get_str();
                out += '*';
            }
            append_monomial(out, m, ring_->names());
        }
    }
    return out;
}

Polynomial poly_mul(const Polynomial& f, const Polynomial& g) {
    return f * g;
}

Polynomial poly_diff(const Polynomial& f, std::size_t var) {
    return f.diff(var);
}

std::pair<Monomial, Rational> leading_term(const Polynomial& f, const MonomialOrder& order) {
    if (f.is_zero())
        throw std::invalid_argument("leading_term: zero polynomial");
    const Monomial* best = nullptr;
    const Rational* coeff = nullptr;
    for (const auto& [m, c] : f.terms()) {
        if (!best || order.greater(m, *best)) {
            best = &m;
            coeff = &c;
        }
    }
    return {*best, *coeff};
}

Monomial leading_monomial(const Polynomial& f, const MonomialOrder& order) {
    return leading_term(f, order).first;
}

Polynomial map_variables(const Polynomial& f, const RingPtr& target,
                         const std::vector<std::size_t>& map) {
    if (map.size() != f.ring()->arity())
        throw std::invalid_argument("map_variables: map arity mismatch");
    Polynomial r(target);
    for (const auto& [m, c] : f.terms()) {
        std::vector<std::int32_t> exp(target->arity(), 0);
        for (std::size_t i = 0; i < map.size(); ++i) {
            if (map[i] >= target->arity())
                throw std::out_of_range("map_variables: target index out of range");
            std::int64_t s = static_cast<std::int64_t>(exp[map[i]]) + m[i];
            if (s > INT32_MAX)
                throw std::overflow_error("map_variables: exponent overflow");
            exp[map[i]] = static_cast<std::int32_t>(s);
        }
        r.add_term(Monomial(std::move(exp)), c);
    }
    return r;
}

Polynomial substitute(const Polynomial& f, const std::vector<Polynomial>& vals) {
    if (vals.size() != f.ring()->arity())
        throw std::invalid_argument("substitute: wrong number of values");
    Polynomial r = Polynomial::zero(vals.empty() ? f.ring() : vals.front().ring());
    for (const auto& [m, c] : f.terms()) {
        Polynomial t = Polynomial::constant(r.ring(), c);
        for (std::size_t i = 0; i < vals.size(); ++i)
            for (std::int32_t e = 0; e < m[i]; ++e)
                t = t * vals[i];
        r += t;
    }
    return r;
}

}  // namespace hhgabber
