#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hhgabber/monomial.hpp"
#include "hhgabber/order.hpp"
#include "hhgabber/rational.hpp"
#include "hhgabber/ring.hpp"

namespace hhgabber {

/// Sparse multivariate polynomial over the rationals. Terms live in an
/// ordered map under the canonical key order, so equal polynomials have
/// identical representations and printing is deterministic. Never stores a
/// zero coefficient; zero is the empty map.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational>;

    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {
        if (!ring_)
            throw std::invalid_argument("Polynomial: null ring");
    }

    static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
    static Polynomial constant(RingPtr ring, const Rational& c);
    static Polynomial variable(RingPtr ring, std::size_t index, std::int32_t power = 1);
    static Polynomial term(RingPtr ring, Monomial m, const Rational& c);

    const RingPtr& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
    }
    std::size_t term_count() const { return terms_.size(); }

    /// Coefficient of a monomial (0 if absent).
    Rational coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    std::int64_t total_degree() const;  // -1 for the zero polynomial
    std::int64_t degree_in(std::size_t var) const;

    /// Adds c*m in place, erasing the term if it cancels.
    void add_term(const Monomial& m, const Rational& c);

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rational& c) const;
    friend Polynomial operator*(const Rational& c, const Polynomial& f) { return f * c; }
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);

    bool operator==(const Polynomial& o) const {
        return *ring_ == *o.ring_ && terms_ == o.terms_;
    }

    Polynomial pow(unsigned exponent) const;

    /// Formal partial derivative.
    Polynomial diff(std::size_t var) const;

    /// Terms of exact weighted degree d.
    Polynomial weighted_part(const std::vector<std::int32_t>& weight, std::int64_t d) const;

    /// Shared text grammar: `x^2*y + 3/2*y - 1`, terms in descending grevlex.
    std::string to_string() const;

private:
    RingPtr ring_;
    TermMap terms_;
};

Polynomial poly_mul(const Polynomial& f, const Polynomial& g);
Polynomial poly_diff(const Polynomial& f, std::size_t var);

/// Order-maximal term of a nonzero polynomial.
std::pair<Monomial, Rational> leading_term(const Polynomial& f, const MonomialOrder& order);
Monomial leading_monomial(const Polynomial& f, const MonomialOrder& order);

/// Image of f under the variable reassignment var i -> var map[i] of the
/// target ring (a ring map on generators; indices may collide).
Polynomial map_variables(const Polynomial& f, const RingPtr& target,
                         const std::vector<std::size_t>& map);

/// f with every variable of `vals` substituted (used by test oracles and the
/// Koszul diagonal restriction). vals[i] must live in the same ring as f.
Polynomial substitute(const Polynomial& f, const std::vector<Polynomial>& vals);

}  // namespace hhgabber
