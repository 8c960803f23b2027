#pragma once

#include <map>
#include <utility>
#include <vector>

#include "hhgabber/ideal.hpp"
#include "hhgabber/polynomial.hpp"

namespace hhgabber {

/// Bivector field Theta = sum_{i<j} Theta^{ij} d_i ^ d_j with polynomial
/// coefficients, stored strictly on i < j.
class Bivector {
public:
    explicit Bivector(RingPtr ring) : ring_(std::move(ring)) {
        if (!ring_)
            throw std::invalid_argument("Bivector: null ring");
    }

    static Bivector zero(RingPtr ring) { return Bivector(std::move(ring)); }

    const RingPtr& ring() const { return ring_; }
    const std::map<std::pair<std::size_t, std::size_t>, Polynomial>& coefficients() const {
        return coef_;
    }
    bool is_zero() const { return coef_.empty(); }

    /// Signed coefficient: (i, j) with i > j returns the negated (j, i) entry.
    Polynomial coefficient(std::size_t i, std::size_t j) const;
    /// Adds c to the (i, j) slot (i != j; order normalized, sign handled).
    void add(std::size_t i, std::size_t j, const Polynomial& c);

    bool operator==(const Bivector& o) const {
        return *ring_ == *o.ring_ && coef_ == o.coef_;
    }

private:
    RingPtr ring_;
    std::map<std::pair<std::size_t, std::size_t>, Polynomial> coef_;
};

/// Differential l-form with polynomial coefficients on strictly increasing
/// index tuples.
class DifferentialForm {
public:
    DifferentialForm(RingPtr ring, int degree) : ring_(std::move(ring)), degree_(degree) {
        if (!ring_)
            throw std::invalid_argument("DifferentialForm: null ring");
        if (degree_ < 0)
            throw std::invalid_argument("DifferentialForm: negative degree");
    }

    const RingPtr& ring() const { return ring_; }
    int degree() const { return degree_; }
    const std::map<std::vector<std::size_t>, Polynomial>& coefficients() const { return coef_; }
    bool is_zero() const { return coef_.empty(); }

    void add(const std::vector<std::size_t>& indices, const Polynomial& c);
    Polynomial coefficient(const std::vector<std::size_t>& indices) const;

    bool operator==(const DifferentialForm& o) const {
        return *ring_ == *o.ring_ && degree_ == o.degree_ && coef_ == o.coef_;
    }

private:
    RingPtr ring_;
    int degree_;
    std::map<std::vector<std::size_t>, Polynomial> coef_;
};

/// First-order bracket table {x_i, x_j} of a deformation; pairs not listed
/// bracket to zero.
struct DeformationTable {
    RingPtr ring;
    std::map<std::pair<std::size_t, std::size_t>, Polynomial> brackets;

    DeformationTable(RingPtr r) : ring(std::move(r)) {}
    void set(std::size_t i, std::size_t j, const Polynomial& value);
};

/// eta(Theta): the bracket matrix {f_i, f_j} reduced against a Groebner
/// basis of (f_1..f_l). Zero iff the ideal generated by the sequence is
/// involutive along itself.
struct NormalBivectorClass {
    std::vector<Polynomial> regular_sequence;
    std::map<std::pair<std::size_t, std::size_t>, Polynomial> entries;

    bool is_zero() const {
        for (const auto& [ij, e] : entries)
            if (!e.is_zero())
                return false;
        return true;
    }
};

/// The bivector of the bracket {f,g} = sum_i (df/dxi_i dg/dx_i -
/// df/dx_i dg/dxi_i) on a cotangent ring; {xi_i, x_i} = 1, matching
/// [d_i, x_i] = 1 through the symbol map.
Bivector canonical_symplectic(const RingPtr& ring);

/// The unique bivector whose bracket restricts to the table on coordinates.
Bivector deformation_class(const DeformationTable& table);

/// sum_{i<j} Theta^{ij} (d_i f d_j g - d_j f d_i g).
Polynomial bracket_eval(const Bivector& theta, const Polynomial& f, const Polynomial& g);

struct InvolutivityWitness {
    Polynomial f, g, bracket, normal_form;
};

struct InvolutivityResult {
    bool involutive = true;
    std::vector<InvolutivityWitness> witnesses;
};

/// Checks {g_i, g_j} in I on every generator pair (sufficient by the
/// Leibniz rule); on failure every witness is returned.
InvolutivityResult is_involutive(const Ideal& I, const Bivector& theta);

/// omega = df_1 ^ ... ^ df_l. Throws std::domain_error unless some l x l
/// Jacobian minor has nonzero normal form mod (fs) -- the smoothness
/// certificate at the generic point of the centre.
DifferentialForm conormal_determinant(const std::vector<Polynomial>& fs);

/// Interior product with a bivector; drops the degree by 2. The sign is the
/// permutation moving i then j to the front of the index tuple.
DifferentialForm contract_form(const Bivector& theta, const DifferentialForm& omega);

/// Projection to the second exterior power of the conormal: entries
/// {f_i, f_j} mod (fs). Runs the same regularity check as
/// conormal_determinant.
NormalBivectorClass conormal_projection(const Bivector& theta,
                                        const std::vector<Polynomial>& fs);

}  // namespace hhgabber
