#pragma once

#include <map>
#include <string>
#include <vector>

#include "hhgabber/ideal.hpp"
#include "hhgabber/polynomial.hpp"

namespace hhgabber {

/// Element of the Weyl algebra D_n in normal order: a term map
/// (x-exponents | d-exponents) -> coefficient, stored as one monomial of
/// length 2n with the x block first. Two operators are equal iff the maps
/// are, which is exactly normal-form uniqueness.
class WeylOperator {
public:
    using TermMap = std::map<Monomial, Rational>;

    explicit WeylOperator(std::size_t n) : n_(n) {
        if (n == 0)
            throw std::invalid_argument("WeylOperator: n must be positive");
    }

    static WeylOperator zero(std::size_t n) { return WeylOperator(n); }
    static WeylOperator constant(std::size_t n, const Rational& c);
    /// x_i (0-based).
    static WeylOperator coordinate(std::size_t n, std::size_t i);
    /// d_i (0-based).
    static WeylOperator derivation(std::size_t n, std::size_t i);
    /// c * x^a d^b.
    static WeylOperator term(std::size_t n, const std::vector<std::int32_t>& x_exp,
                             const std::vector<std::int32_t>& d_exp, const Rational& c);

    std::size_t n() const { return n_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
    }

    void add_term(const Monomial& m, const Rational& c);

    WeylOperator operator-() const;
    WeylOperator operator+(const WeylOperator& o) const;
    WeylOperator operator-(const WeylOperator& o) const;
    WeylOperator operator*(const WeylOperator& o) const;  // normal-ordering product
    WeylOperator operator*(const Rational& c) const;
    WeylOperator& operator+=(const WeylOperator& o);
    WeylOperator& operator-=(const WeylOperator& o);

    bool operator==(const WeylOperator& o) const { return n_ == o.n_ && terms_ == o.terms_; }

    /// Text in the shared grammar, variables x1..xn and d1..dn.
    std::string to_string() const;

private:
    std::size_t n_;
    TermMap terms_;
};

struct DModulePresentation {
    std::size_t n;
    std::vector<WeylOperator> left_ideal_generators;

    DModulePresentation(std::size_t n_vars, std::vector<WeylOperator> generators);
};

WeylOperator weyl_mul(const WeylOperator& P, const WeylOperator& Q);
WeylOperator commutator(const WeylOperator& P, const WeylOperator& Q);

/// Maximal total degree in the derivations across terms.
std::int64_t op_order(const WeylOperator& P);

/// Sum of the top-order terms with d_i -> xi_i, in cotangent_ring(n).
Polynomial principal_symbol(const WeylOperator& P);

/// Every term mapped to x^a xi^b (the symbol of the full operator, not just
/// its top part); the bracket-compatibility checks read its graded pieces.
Polynomial total_symbol(const WeylOperator& P);

/// Left Groebner basis for the order-filtration weight order refined by
/// grevlex. Interreduced, monic, sorted by leading monomial descending.
/// No S-pair is skipped: the product criterion fails in the Weyl algebra.
std::vector<WeylOperator> weyl_groebner(const DModulePresentation& M);

/// Ideal of principal symbols of the left Groebner basis, in
/// cotangent_ring(n). Generates gr(I) because the basis order refines the
/// order-filtration weight.
Ideal characteristic_ideal(const DModulePresentation& M);

}  // namespace hhgabber
