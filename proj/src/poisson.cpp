#include "hhgabber/poisson.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "hhgabber/parallel.hpp"

namespace hhgabber {

Polynomial Bivector::coefficient(std::size_t i, std::size_t j) const {
    if (i == j)
        return Polynomial::zero(ring_);
    bool flip = i > j;
    if (flip)
        std::swap(i, j);
    auto it = coef_.find({i, j});
    Polynomial c = it == coef_.end() ? Polynomial::zero(ring_) : it->second;
    return flip ? -c : c;
}

void Bivector::add(std::size_t i, std::size_t j, const Polynomial& c) {
    require_same_ring(ring_, c.ring(), "Bivector::add");
    if (i == j)
        throw std::invalid_argument("Bivector::add: repeated index");
    if (i >= ring_->arity() || j >= ring_->arity())
        throw std::out_of_range("Bivector::add: index out of range");
    if (c.is_zero())
        return;
    Polynomial v = i < j ? c : -c;
    if (i > j)
        std::swap(i, j);
    auto [it, inserted] = coef_.emplace(std::make_pair(i, j), v);
    if (!inserted) {
        it->second += v;
        if (it->second.is_zero())
            coef_.erase(it);
    }
}

void DifferentialForm::add(const std::vector<std::size_t>& indices, const Polynomial& c) {
    require_same_ring(ring_, c.ring(), "DifferentialForm::add");
    if (static_cast<int>(indices.size()) != degree_)
        throw std::invalid_argument("DifferentialForm::add: index tuple length mismatch");
    for (std::size_t k = 0; k < indices.size(); ++k) {
        if (indices[k] >= ring_->arity())
            throw std::out_of_range("DifferentialForm::add: index out of range");
        if (k + 1 < indices.size() && indices[k] >= indices[k + 1])
            throw std::invalid_argument("DifferentialForm::add: indices must strictly increase");
    }
    if (c.is_zero())
        return;
    auto [it, inserted] = coef_.emplace(indices, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            coef_.erase(it);
    }
}

Polynomial DifferentialForm::coefficient(const std::vector<std::size_t>& indices) const {
    auto it = coef_.find(indices);
    return it == coef_.end() ? Polynomial::zero(ring_) : it->second;
}

void DeformationTable::set(std::size_t i, std::size_t j, const Polynomial& value) {
    require_same_ring(ring, value.ring(), "DeformationTable::set");
    if (i == j)
        throw std::invalid_argument("DeformationTable::set: repeated index");
    Polynomial v = i < j ? value : -value;
    if (i > j)
        std::swap(i, j);
    brackets.insert_or_assign({i, j}, v);
}

Bivector canonical_symplectic(const RingPtr& ring) {
    if (!ring->cotangent())
        throw std::invalid_argument("canonical_symplectic: ring lacks cotangent structure");
    const std::size_t n = ring->pairs();
    Bivector theta(ring);
    Polynomial minus_one = Polynomial::constant(ring, Rational(-1));
    for (std::size_t i = 0; i < n; ++i)
        theta.add(i, n + i, minus_one);
    return theta;
}

Bivector deformation_class(const DeformationTable& table) {
    Bivector theta(table.ring);
    for (const auto& [ij, value] : table.brackets)
        theta.add(ij.first, ij.second, value);
    return theta;
}

Polynomial bracket_eval(const Bivector& theta, const Polynomial& f, const Polynomial& g) {
    require_same_ring(theta.ring(), f.ring(), "bracket_eval");
    require_same_ring(theta.ring(), g.ring(), "bracket_eval");
    Polynomial r = Polynomial::zero(theta.ring());
    for (const auto& [ij, c] : theta.coefficients()) {
        auto [i, j] = ij;
        r += c * (f.diff(i) * g.diff(j) - f.diff(j) * g.diff(i));
    }
    return r;
}

InvolutivityResult is_involutive(const Ideal& I, const Bivector& theta) {
    require_same_ring(I.ring(), theta.ring(), "is_involutive");
    const MonomialOrder order = MonomialOrder::grevlex();
    const auto& gb = I.groebner_basis(order);  // precomputed before fan-out
    const auto& gens = I.generators();

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j)
            pairs.emplace_back(i, j);

    // Pair checks are independent; slots keep the report order fixed no
    // matter how many workers run.
    std::vector<std::optional<InvolutivityWitness>> slots(pairs.size());
    parallel_for(pairs.size(), [&](std::size_t k) {
        auto [i, j] = pairs[k];
        Polynomial br = bracket_eval(theta, gens[i], gens[j]);
        Polynomial nf = normal_form(br, gb, order);
        if (!nf.is_zero())
            slots[k] = InvolutivityWitness{gens[i], gens[j], br, nf};
    });

    InvolutivityResult result;
    for (auto& slot : slots) {
        if (slot) {
            result.involutive = false;
            result.witnesses.push_back(std::move(*slot));
        }
    }
    return result;
}

namespace {

// Laplace expansion along the first row; the matrices are l x l with l tiny.
Polynomial poly_det(const std::vector<std::vector<Polynomial>>& m) {
    const std::size_t l = m.size();
    if (l == 0)
        throw std::invalid_argument("poly_det: empty matrix");
    if (l == 1)
        return m[0][0];
    Polynomial det = Polynomial::zero(m[0][0].ring());
    for (std::size_t c = 0; c < l; ++c) {
        if (m[0][c].is_zero())
            continue;
        std::vector<std::vector<Polynomial>> minor;
        for (std::size_t r = 1; r < l; ++r) {
            std::vector<Polynomial> row;
            for (std::size_t cc = 0; cc < l; ++cc)
                if (cc != c)
                    row.push_back(m[r][cc]);
            minor.push_back(std::move(row));
        }
        Polynomial term = m[0][c] * poly_det(minor);
        det += (c % 2 == 0) ? term : -term;
    }
    return det;
}

void check_sequence(const std::vector<Polynomial>& fs, const char* op) {
    if (fs.empty())
        throw std::invalid_argument(std::string(op) + ": empty sequence");
    for (const auto& f : fs) {
        require_same_ring(fs.front().ring(), f.ring(), op);
        if (f.is_zero())
            throw std::invalid_argument(std::string(op) + ": zero entry");
    }
    if (fs.size() > fs.front().ring()->arity())
        throw std::invalid_argument(std::string(op) + ": sequence longer than the arity");
}

// Enumerate strictly increasing index tuples of length l out of n.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t l) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (cur.size() == l) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i < n; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

DifferentialForm wedge_of_differentials(const std::vector<Polynomial>& fs) {
    const RingPtr& ring = fs.front().ring();
    const std::size_t n = ring->arity();
    const std::size_t l = fs.size();
    DifferentialForm omega(ring, static_cast<int>(l));
    for (const auto& S : subsets(n, l)) {
        std::vector<std::vector<Polynomial>> jac(l, std::vector<Polynomial>());
        for (std::size_t r = 0; r < l; ++r)
            for (std::size_t c = 0; c < l; ++c)
                jac[r].push_back(fs[r].diff(S[c]));
        Polynomial d = poly_det(jac);
        omega.add(S, d);
    }
    return omega;
}

}  // namespace

DifferentialForm conormal_determinant(const std::vector<Polynomial>& fs) {
    check_sequence(fs, "conormal_determinant");
    DifferentialForm omega = wedge_of_differentials(fs);

    Ideal I(fs.front().ring(), fs);
    const MonomialOrder order = MonomialOrder::grevlex();
    const auto& gb = I.groebner_basis(order);
    bool regular = false;
    for (const auto& [S, minor] : omega.coefficients()) {
        if (!normal_form(minor, gb, order).is_zero()) {
            regular = true;
            break;
        }
    }
    if (!regular)
        throw std::domain_error(
            "conormal_determinant: Jacobian rank deficiency mod (fs); the centre is not "
            "regular along itself");
    return omega;
}

DifferentialForm contract_form(const Bivector& theta, const DifferentialForm& omega) {
    require_same_ring(theta.ring(), omega.ring(), "contract_form");
    if (omega.degree() < 2)
        throw std::invalid_argument("contract_form: form degree must be at least 2");
    DifferentialForm out(omega.ring(), omega.degree() - 2);
    for (const auto& [ij, c] : theta.coefficients()) {
        auto [i, j] = ij;
        for (const auto& [S, w] : omega.coefficients()) {
            auto pi = std::find(S.begin(), S.end(), i);
            auto pj = std::find(S.begin(), S.end(), j);
            if (pi == S.end() || pj == S.end())
                continue;
            // sign of the permutation moving i then j to the front
            std::size_t posi = static_cast<std::size_t>(pi - S.begin());
            std::size_t posj = static_cast<std::size_t>(pj - S.begin());
            int sign = ((posi + posj - 1) % 2 == 0) ? 1 : -1;
            std::vector<std::size_t> rest;
            for (auto s : S)
                if (s != i && s != j)
                    rest.push_back(s);
            Polynomial contribution = c * w;
            out.add(rest, sign > 0 ? contribution : -contribution);
        }
    }
    return out;
}

NormalBivectorClass conormal_projection(const Bivector& theta,
                                        const std::vector<Polynomial>& fs) {
    check_sequence(fs, "conormal_projection");
    require_same_ring(theta.ring(), fs.front().ring(), "conormal_projection");
    conormal_determinant(fs);  // regularity gate

    Ideal I(fs.front().ring(), fs);
    const MonomialOrder order = MonomialOrder::grevlex();
    const auto& gb = I.groebner_basis(order);

    NormalBivectorClass cls;
    cls.regular_sequence = fs;
    for (std::size_t i = 0; i < fs.size(); ++i)
        for (std::size_t j = i + 1; j < fs.size(); ++j)
            cls.entries.emplace(std::make_pair(i, j),
                                normal_form(bracket_eval(theta, fs[i], fs[j]), gb, order));
    return cls;
}

}  // namespace hhgabber
