#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hhgabber/ideal.hpp"
#include "hhgabber/poisson.hpp"
#include "hhgabber/polynomial.hpp"

namespace hhgabber {

/// Koszul complex of the diagonal ideal (y_1 - z_1, ..., y_n - z_n) over
/// k[y, z] = A (x) A. Degree-p chains are free on wedge labels e_S, |S| = p;
/// the differentials are explicit polynomial matrices with d o d = 0
/// asserted at construction.
class KoszulComplex {
public:
    using Matrix = std::vector<std::vector<Polynomial>>;

    static KoszulComplex diagonal(std::size_t n);

    std::size_t n() const { return n_; }
    const RingPtr& ambient() const { return ambient_; }
    const std::vector<Polynomial>& regular_sequence() const { return sequence_; }
    /// Wedge labels in degree p (strictly increasing tuples into 1..n).
    const std::vector<std::vector<std::size_t>>& basis(std::size_t p) const;
    /// Matrix of d_p : K_p -> K_{p-1}, rows over basis(p-1), columns over
    /// basis(p); defined for 1 <= p <= n.
    const Matrix& differential(std::size_t p) const;

    /// The complex tensored down to the diagonal (z_i -> y_i), over k[y].
    /// For the diagonal ideal every induced differential vanishes; the
    /// matrices are still produced by substitution, not assumed.
    std::vector<Matrix> restrict_to_diagonal() const;

private:
    KoszulComplex() = default;

    std::size_t n_ = 0;
    RingPtr ambient_;
    RingPtr diagonal_ring_;
    std::vector<Polynomial> sequence_;
    std::vector<std::vector<std::vector<std::size_t>>> bases_;
    std::vector<Matrix> differentials_;  // differentials_[p] is d_p, p >= 1
};

struct TorResult {
    std::size_t rank;
    std::vector<std::vector<std::size_t>> basis;  // surviving wedge labels
};

/// H_i of (Koszul complex of the diagonal) tensored with A over A (x) A,
/// computed from the restricted matrices. Free with the wedge labels as
/// basis once the restricted differentials are checked to vanish.
TorResult koszul_tor(std::size_t n, std::size_t i);

struct HkrReport {
    bool equal;
    std::size_t koszul_rank;
    std::size_t form_rank;
    /// e_S -> dx_S on the surviving labels.
    std::vector<std::pair<std::string, std::string>> basis_map;
};

/// Koszul homology rank against the rank of the i-forms on affine n-space.
HkrReport hkr_compare(std::size_t n, std::size_t i);

/// Rank of Lambda^k of the free tangent module on affine n-space; counts
/// wedge labels rather than evaluating a closed formula.
std::size_t polyvector_rank(std::size_t n, std::size_t k);

/// Hochschild class supported on Z = V(fs), carried in the frame that
/// trivializes omega^{-1}: a degree-p form with coefficients reduced
/// mod (fs), sitting in homological degree p - l.
struct SupportedClass {
    std::vector<Polynomial> fs;
    int p;
    DifferentialForm coefficients;
    int hh_degree;

    bool is_zero() const { return coefficients.is_zero(); }
};

/// ch of a point-like module: multiplicity times the tautological class.
struct ChernCharacter {
    std::size_t multiplicity;
    SupportedClass tau;
};

/// The tautological class of a regular centre: p = l, coefficients the
/// conormal determinant reduced mod (fs). Never zero (that is what the
/// regularity check certifies).
SupportedClass tau_class(const std::vector<Polynomial>& fs);

/// ch_{A/I} = multiplicity * tau via devissage along the m-adic filtration:
/// requires sqrt(I) = sqrt((fs)) and a finite-dimensional quotient.
ChernCharacter chern_character(const Ideal& I, const std::vector<Polynomial>& fs);

/// Contraction action of a bivector on a supported class; homological
/// degree drops by 2.
SupportedClass module_action(const Bivector& theta, const SupportedClass& c);

/// Theta . ch = 0, decided on tau alone: the multiplicity never affects
/// vanishing.
bool theta_annihilates_chern(const Bivector& theta, const ChernCharacter& ch);

}  // namespace hhgabber
