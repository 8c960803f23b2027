#include "hhgabber/weyl.hpp"

#include <algorithm>
#include <stdexcept>

namespace hhgabber {

namespace {

void require_same_n(const WeylOperator& P, const WeylOperator& Q, const char* op) {
    if (P.n() != Q.n())
        throw std::invalid_argument(std::string(op) + ": operator size mismatch");
}

Monomial join(std::size_t n, const std::vector<std::int32_t>& a,
              const std::vector<std::int32_t>& b) {
    std::vector<std::int32_t> e;
    e.reserve(2 * n);
    e.insert(e.end(), a.begin(), a.end());
    e.insert(e.end(), b.begin(), b.end());
    return Monomial(std::move(e));
}

// The working term order: weight 0 on x, 1 on d, refined by grevlex. The
// weight part grades by operator order, so leading terms live in the top
// filtration piece.
MonomialOrder weyl_order(std::size_t n) {
    return MonomialOrder::order_filtration(n);
}

}  // namespace

WeylOperator WeylOperator::constant(std::size_t n, const Rational& c) {
    WeylOperator P(n);
    if (c != 0)
        P.terms_.emplace(Monomial(2 * n), c);
    return P;
}

WeylOperator WeylOperator::coordinate(std::size_t n, std::size_t i) {
    if (i >= n)
        throw std::out_of_range("WeylOperator::coordinate: index out of range");
    WeylOperator P(n);
    P.terms_.emplace(Monomial::variable(2 * n, i), Rational(1));
    return P;
}

WeylOperator WeylOperator::derivation(std::size_t n, std::size_t i) {
    if (i >= n)
        throw std::out_of_range("WeylOperator::derivation: index out of range");
    WeylOperator P(n);
    P.terms_.emplace(Monomial::variable(2 * n, n + i), Rational(1));
    return P;
}

WeylOperator WeylOperator::term(std::size_t n, const std::vector<std::int32_t>& x_exp,
                                const std::vector<std::int32_t>& d_exp, const Rational& c) {
    if (x_exp.size() != n || d_exp.size() != n)
        throw std::invalid_argument("WeylOperator::term: exponent arity mismatch");
    WeylOperator P(n);
    if (c != 0)
        P.terms_.emplace(join(n, x_exp, d_exp), c);
    return P;
}

void WeylOperator::add_term(const Monomial& m, const Rational& c) {
    if (c == 0)
        return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

WeylOperator WeylOperator::operator-() const {
    WeylOperator r(n_);
    for (const auto& [m, c] : terms_)
        r.terms_.emplace(m, -c);
    return r;
}

WeylOperator& WeylOperator::operator+=(const WeylOperator& o) {
    require_same_n(*this, o, "weyl_add");
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

WeylOperator& WeylOperator::operator-=(const WeylOperator& o) {
    require_same_n(*this, o, "weyl_sub");
    for (const auto& [m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

WeylOperator WeylOperator::operator+(const WeylOperator& o) const {
    WeylOperator r = *this;
    r += o;
    return r;
}

WeylOperator WeylOperator::operator-(const WeylOperator& o) const {
    WeylOperator r = *this;
    r -= o;
    return r;
}

WeylOperator WeylOperator::operator*(const Rational& c) const {
    WeylOperator r(n_);
    if (c == 0)
        return r;
    for (const auto& [m, k] : terms_)
        r.terms_.emplace(m, k * c);
    return r;
}

// Normal ordering of one term product:
//   x^a d^b * x^c d^e = sum_k prod_i C(b_i,k_i) C(c_i,k_i) k_i! *
//                       x^(a+c-k) d^(b+e-k),
// k running componentwise over 0..min(b_i, c_i). This is the Leibniz rule
// applied to d^b acting past x^c.
WeylOperator WeylOperator::operator*(const WeylOperator& o) const {
    require_same_n(*this, o, "weyl_mul");
    const std::size_t n = n_;
    WeylOperator r(n);
    std::vector<std::int32_t> k(n);
    for (const auto& [m1, c1] : terms_) {
        for (const auto& [m2, c2] : o.terms_) {
            std::fill(k.begin(), k.end(), 0);
            while (true) {
                Rational coeff = c1 * c2;
                std::vector<std::int32_t> xs(n), ds(n);
                for (std::size_t i = 0; i < n; ++i) {
                    std::int32_t b = m1[n + i], c = m2[i];
                    coeff *= binomial(b, k[i]) * binomial(c, k[i]) * factorial(k[i]);
                    xs[i] = m1[i] + c - k[i];
                    ds[i] = b + m2[n + i] - k[i];
                }
                r.add_term(join(n, xs, ds), coeff);
                // odometer over 0 <= k_i <= min(b_i, c_i)
                std::size_t i = 0;
                while (i < n) {
                    std::int32_t cap = std::min(m1[n + i], m2[i]);
                    if (++k[i] <= cap)
                        break;
                    k[i] = 0;
                    ++i;
                }
                if (i == n)
                    break;
            }
        }
    }
    return r;
}

std::string WeylOperator::to_string() const {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n_; ++i)
        names.push_back("x" + std::to_string(i));
    for (std::size_t i = 1; i <= n_; ++i)
        names.push_back("d" + std::to_string(i));
    RingPtr display = make_ring(std::move(names), false);
    Polynomial f(display);
    for (const auto& [m, c] : terms_)
        f.add_term(m, c);
    return f.to_string();
}

DModulePresentation::DModulePresentation(std::size_t n_vars,
                                         std::vector<WeylOperator> generators)
    : n(n_vars), left_ideal_generators(std::move(generators)) {
    if (n == 0)
        throw std::invalid_argument("DModulePresentation: n must be positive");
    if (left_ideal_generators.empty())
        throw std::invalid_argument("DModulePresentation: no generators");
    for (const auto& g : left_ideal_generators) {
        if (g.n() != n)
            throw std::invalid_argument("DModulePresentation: operator size mismatch");
        if (g.is_zero())
            throw std::invalid_argument("DModulePresentation: zero generator");
    }
}

WeylOperator weyl_mul(const WeylOperator& P, const WeylOperator& Q) {
    return P * Q;
}

WeylOperator commutator(const WeylOperator& P, const WeylOperator& Q) {
    return P * Q - Q * P;
}

std::int64_t op_order(const WeylOperator& P) {
    if (P.is_zero())
        throw std::invalid_argument("op_order: zero operator");
    std::int64_t d = 0;
    const std::size_t n = P.n();
    for (const auto& [m, c] : P.terms()) {
        std::int64_t o = 0;
        for (std::size_t i = 0; i < n; ++i)
            o += m[n + i];
        d = std::max(d, o);
    }
    return d;
}

Polynomial total_symbol(const WeylOperator& P) {
    RingPtr ring = cotangent_ring(P.n());
    Polynomial f(ring);
    for (const auto& [m, c] : P.terms())
        f.add_term(m, c);
    return f;
}

Polynomial principal_symbol(const WeylOperator& P) {
    std::int64_t ord = op_order(P);
    const std::size_t n = P.n();
    RingPtr ring = cotangent_ring(n);
    Polynomial f(ring);
    for (const auto& [m, c] : P.terms()) {
        std::int64_t o = 0;
        for (std::size_t i = 0; i < n; ++i)
            o += m[n + i];
        if (o == ord)
            f.add_term(m, c);
    }
    return f;
}

namespace {

Monomial weyl_leading_monomial(const WeylOperator& P, const MonomialOrder& order) {
    const Monomial* best = nullptr;
    for (const auto& [m, c] : P.terms())
        if (!best || order.greater(m, *best))
            best = &m;
    if (!best)
        throw std::invalid_argument("weyl_leading_monomial: zero operator");
    return *best;
}

WeylOperator weyl_monic(const WeylOperator& P, const MonomialOrder& order) {
    Monomial lm = weyl_leading_monomial(P, order);
    Rational lc = P.terms().at(lm);
    return lc == 1 ? P : P * (Rational(1) / lc);
}

WeylOperator monomial_op(std::size_t n, const Monomial& m) {
    std::vector<std::int32_t> xs(n), ds(n);
    for (std::size_t i = 0; i < n; ++i) {
        xs[i] = m[i];
        ds[i] = m[n + i];
    }
    return WeylOperator::term(n, xs, ds, Rational(1));
}

// Full left reduction with irreducible leads moved aside. Left-multiplying
// by the quotient monomial cancels the targeted term exactly (the product's
// leading monomial is the monomial sum) and only introduces strictly
// smaller terms, so parked terms are never disturbed and this terminates.
WeylOperator weyl_normal_form(const WeylOperator& f, const std::vector<WeylOperator>& basis,
                              const MonomialOrder& order) {
    std::vector<Monomial> leads;
    leads.reserve(basis.size());
    for (const auto& g : basis)
        leads.push_back(weyl_leading_monomial(g, order));

    WeylOperator remainder(f.n());
    WeylOperator work = f;
    while (!work.is_zero()) {
        Monomial lm = weyl_leading_monomial(work, order);
        Rational lc = work.terms().at(lm);
        const WeylOperator* divisor = nullptr;
        std::size_t k = 0;
        for (; k < basis.size(); ++k) {
            if (leads[k].divides(lm)) {
                divisor = &basis[k];
                break;
            }
        }
        if (divisor) {
            Rational lcg = divisor->terms().at(leads[k]);
            work -= (monomial_op(work.n(), lm / leads[k]) * *divisor) * (lc / lcg);
        } else {
            remainder.add_term(lm, lc);
            work.add_term(lm, -lc);
        }
    }
    return remainder;
}

std::vector<WeylOperator> weyl_interreduce(std::vector<WeylOperator> basis,
                                           const MonomialOrder& order) {
    std::vector<WeylOperator> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        Monomial lmi = weyl_leading_monomial(basis[i], order);
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j)
                continue;
            Monomial lmj = weyl_leading_monomial(basis[j], order);
            if (lmj.divides(lmi) && (lmj != lmi || j < i))
                redundant = true;
        }
        if (!redundant)
            minimal.push_back(basis[i]);
    }
    std::vector<WeylOperator> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<WeylOperator> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i)
                others.push_back(minimal[j]);
        WeylOperator r = others.empty() ? minimal[i] : weyl_normal_form(minimal[i], others, order);
        if (!r.is_zero())
            reduced.push_back(weyl_monic(r, order));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const WeylOperator& a, const WeylOperator& b) {
        return order.greater(weyl_leading_monomial(a, order), weyl_leading_monomial(b, order));
    });
    return reduced;
}

}  // namespace

std::vector<WeylOperator> weyl_groebner(const DModulePresentation& M) {
    const std::size_t n = M.n;
    const MonomialOrder order = weyl_order(n);
    std::vector<WeylOperator> basis;
    for (const auto& g : M.left_ideal_generators)
        basis.push_back(weyl_monic(g, order));

    struct Pair {
        std::size_t i, j;
        Monomial lcm;
    };
    std::vector<Pair> pending;
    auto add_pairs = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i)
            pending.push_back({i, j,
                               lcm(weyl_leading_monomial(basis[i], order),
                                   weyl_leading_monomial(basis[j], order))});
    };
    for (std::size_t j = 1; j < basis.size(); ++j)
        add_pairs(j);

    while (!pending.empty()) {
        auto it = std::min_element(pending.begin(), pending.end(),
                                   [&](const Pair& a, const Pair& b) {
                                       int c = order.compare(a.lcm, b.lcm);
                                       if (c != 0)
                                           return c < 0;
                                       if (a.i != b.i)
                                           return a.i < b.i;
                                       return a.j < b.j;
                                   });
        Pair p = *it;
        pending.erase(it);

        Monomial lmi = weyl_leading_monomial(basis[p.i], order);
        Monomial lmj = weyl_leading_monomial(basis[p.j], order);
        WeylOperator s = monomial_op(n, p.lcm / lmi) * basis[p.i] -
                         monomial_op(n, p.lcm / lmj) * basis[p.j];
        WeylOperator r = weyl_normal_form(s, basis, order);
        if (!r.is_zero()) {
            basis.push_back(weyl_monic(r, order));
            add_pairs(basis.size() - 1);
        }
    }
    return weyl_interreduce(std::move(basis), order);
}

Ideal characteristic_ideal(const DModulePresentation& M) {
    std::vector<WeylOperator> gb = weyl_groebner(M);
    RingPtr ring = cotangent_ring(M.n);
    std::vector<Polynomial> symbols;
    symbols.reserve(gb.size());
    for (const auto& g : gb)
        symbols.push_back(principal_symbol(g));
    return Ideal(ring, std::move(symbols));
}

}  // namespace hhgabber
