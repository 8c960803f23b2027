#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hhgabber/monomial.hpp"

namespace hhgabber {

/// Term orders. Three kinds ship: lex, grevlex, and weighted-degree with a
/// fixed grevlex tie-break. The weight (0..0, 1..1) instance on a cotangent
/// ring is the one compatible with the order filtration on the Weyl algebra.
class MonomialOrder {
public:
    enum class Kind { lex, grevlex, weighted };

    static MonomialOrder lex() { return MonomialOrder(Kind::lex, {}); }
    static MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex, {}); }
    static MonomialOrder weighted(std::vector<std::int32_t> weight) {
        for (auto w : weight)
            if (w < 0)
                throw std::invalid_argument("MonomialOrder: negative weight");
        return MonomialOrder(Kind::weighted, std::move(weight));
    }

    /// Order-filtration order on a 2n-variable cotangent ring: weight 0 on
    /// the base half, 1 on the fiber half, grevlex tie-break.
    static MonomialOrder order_filtration(std::size_t n_pairs) {
        std::vector<std::int32_t> w(2 * n_pairs, 0);
        for (std::size_t i = n_pairs; i < 2 * n_pairs; ++i)
            w[i] = 1;
        return weighted(std::move(w));
    }

    /// Elimination order for a set of variables: weight 1 on dropped
    /// variables, 0 elsewhere. Leading monomials free of dropped variables
    /// then certify membership in the subring.
    static MonomialOrder elimination(std::size_t arity, const std::vector<std::size_t>& dropped) {
        std::vector<std::int32_t> w(arity, 0);
        for (auto i : dropped) {
            if (i >= arity)
                throw std::out_of_range("MonomialOrder::elimination: index out of range");
            w[i] = 1;
        }
        return weighted(std::move(w));
    }

    Kind kind() const { return kind_; }
    const std::vector<std::int32_t>& weight() const { return weight_; }

    /// <0 if a < b, 0 if equal, >0 if a > b.
    int compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    /// Canonical string form; doubles as the Groebner cache key.
    std::string key() const;

    bool operator==(const MonomialOrder& o) const {
        return kind_ == o.kind_ && weight_ == o.weight_;
    }

private:
    MonomialOrder(Kind kind, std::vector<std::int32_t> weight)
        : kind_(kind), weight_(std::move(weight)) {}

    Kind kind_;
    std::vector<std::int32_t> weight_;
};

}  // namespace hhgabber
