#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <vector>

#include "hhgabber/polynomial.hpp"

namespace hhgabber {

/// Finitely generated ideal with a per-order cache of reduced Groebner
/// bases. Generators are immutable after construction; copies share the
/// cache. The empty generator list is the zero ideal (it shows up as an
/// elimination result).
class Ideal {
public:
    Ideal(RingPtr ring, std::vector<Polynomial> generators);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& generators() const { return *generators_; }
    bool is_zero_ideal() const { return generators_->empty(); }

    /// Reduced Groebner basis, cached per order. Leading coefficients 1, no
    /// term of any element divisible by another element's leading monomial,
    /// sorted by leading monomial descending. Deterministic.
    const std::vector<Polynomial>& groebner_basis(const MonomialOrder& order) const;

private:
    RingPtr ring_;
    std::shared_ptr<const std::vector<Polynomial>> generators_;

    struct Cache {
        std::mutex mutex;
        std::map<std::string, std::shared_ptr<const std::vector<Polynomial>>> bases;
    };
    std::shared_ptr<Cache> cache_;
};

/// Remainder of multivariate division of f by the listed divisors. If the
/// list is a Groebner basis this is the canonical coset representative.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const MonomialOrder& order);

/// Reduced Groebner basis of a raw generator list (no cache).
std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens,
                                   const MonomialOrder& order);

bool ideal_membership(const Ideal& I, const Polynomial& f, const MonomialOrder& order);

/// f in sqrt(I), by the Rabinowitsch trick: adjoin t, test 1 in I + (1 - t*f).
bool radical_membership(const Ideal& I, const Polynomial& f);

/// I restricted to the subring omitting the dropped variables, via an
/// elimination order. The result lives in the subring.
Ideal eliminate(const Ideal& I, const std::set<std::size_t>& drop_vars);

/// dim_k A/I when finite (count of standard monomials); nullopt when
/// infinite, detected by the pure-power cone test on leading terms.
std::optional<std::size_t> vector_space_dimension(const Ideal& I, const MonomialOrder& order);

struct RadicalStrategy {
    enum class Kind { auto_detect, monomial, principal, zero_dimensional, user_supplied };
    Kind kind = Kind::auto_detect;
    std::vector<Polynomial> user_generators;

    static RadicalStrategy auto_detect() { return {Kind::auto_detect, {}}; }
    static RadicalStrategy monomial() { return {Kind::monomial, {}}; }
    static RadicalStrategy principal() { return {Kind::principal, {}}; }
    static RadicalStrategy zero_dimensional() { return {Kind::zero_dimensional, {}}; }
    static RadicalStrategy user_supplied(std::vector<Polynomial> gens) {
        return {Kind::user_supplied, std::move(gens)};
    }
};

const char* to_string(RadicalStrategy::Kind kind);

struct RadicalResult {
    Ideal ideal;
    RadicalStrategy::Kind strategy_used;
    /// False only for user-supplied generators, whose own radicality is
    /// asserted by the caller rather than computed here.
    bool trusted;
};

/// Generators of sqrt(I) under the given strategy; throws
/// std::invalid_argument when the strategy does not apply.
RadicalResult radical(const Ideal& I, const RadicalStrategy& strategy);

/// sqrt(I) == sqrt(R), by radical membership of each generator both ways.
bool verify_radical_equivalence(const Ideal& I, const Ideal& R);

}  // namespace hhgabber
