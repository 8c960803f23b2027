#include "hhgabber/ideal.hpp"

#include <algorithm>
#include <stdexcept>

#include "hhgabber/gcd.hpp"

namespace hhgabber {

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
    if (!ring_)
        throw std::invalid_argument("Ideal: null ring");
    for (const auto& g : generators) {
        require_same_ring(ring_, g.ring(), "Ideal");
        if (g.is_zero())
            throw std::invalid_argument("Ideal: zero generator");
    }
    generators_ = std::make_shared<const std::vector<Polynomial>>(std::move(generators));
}

namespace {

Polynomial make_monic(const Polynomial& f, const MonomialOrder& order) {
    auto [lm, lc] = leading_term(f, order);
    return lc == 1 ? f : f * (Rational(1) / lc);
}

// Reduce every tail of every element against the rest and drop redundant
// leading monomials: the reduced basis is the canonical one.
std::vector<Polynomial> interreduce(std::vector<Polynomial> basis, const MonomialOrder& order) {
    // minimalize
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        Monomial lmi = leading_monomial(basis[i], order);
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j)
                continue;
            Monomial lmj = leading_monomial(basis[j], order);
            if (lmj.divides(lmi) && (lmj != lmi || j < i))
                redundant = true;
        }
        if (!redundant)
            minimal.push_back(basis[i]);
    }
    // tail-reduce
    std::vector<Polynomial> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i)
                others.push_back(minimal[j]);
        Polynomial r = normal_form(minimal[i], others, order);
        if (!r.is_zero())
            reduced.push_back(make_monic(r, order));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
        return order.greater(leading_monomial(a, order), leading_monomial(b, order));
    });
    return reduced;
}

}  // namespace

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const MonomialOrder& order) {
    std::vector<std::pair<Monomial, Rational>> leads;
    leads.reserve(basis.size());
    for (const auto& g : basis) {
        require_same_ring(f.ring(), g.ring(), "normal_form");
        if (g.is_zero())
            throw std::invalid_argument("normal_form: zero basis element");
        leads.push_back(leading_term(g, order));
    }
    // Top reduction with irreducible leads moved aside; first matching
    // divisor wins, so the result is deterministic for a fixed basis order.
    Polynomial remainder(f.ring());
    Polynomial work = f;
    while (!work.is_zero()) {
        auto [lm, lc] = leading_term(work, order);
        const Polynomial* divisor = nullptr;
        std::size_t k = 0;
        for (; k < basis.size(); ++k) {
            if (leads[k].first.divides(lm)) {
                divisor = &basis[k];
                break;
            }
        }
        if (divisor) {
            work -= Polynomial::term(work.ring(), lm / leads[k].first, lc / leads[k].second) *
                    *divisor;
        } else {
            remainder.add_term(lm, lc);
            work.add_term(lm, -lc);
        }
    }
    return remainder;
}

std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens,
                                   const MonomialOrder& order) {
    std::vector<Polynomial> basis;
    basis.reserve(gens.size());
    for (const auto& g : gens)
        if (!g.is_zero())
            basis.push_back(make_monic(g, order));
    if (basis.empty())
        return {};

    struct Pair {
        std::size_t i, j;
        Monomial lcm;
    };
    auto pair_less = [&](const Pair& a, const Pair& b) {
        int c = order.compare(a.lcm, b.lcm);
        if (c != 0)
            return c < 0;
        if (a.i != b.i)
            return a.i < b.i;
        return a.j < b.j;
    };

    std::vector<Pair> pending;
    // treated (i, j) pairs, for the chain criterion
    std::set<std::pair<std::size_t, std::size_t>> treated;
    auto add_pairs = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i)
            pending.push_back({i, j,
                               lcm(leading_monomial(basis[i], order),
                                   leading_monomial(basis[j], order))});
    };
    for (std::size_t j = 1; j < basis.size(); ++j)
        add_pairs(j);

    while (!pending.empty()) {
        // normal selection: smallest lcm in the working order
        auto it = std::min_element(pending.begin(), pending.end(), pair_less);
        Pair p = *it;
        pending.erase(it);
        treated.emplace(p.i, p.j);

        Monomial lmi = leading_monomial(basis[p.i], order);
        Monomial lmj = leading_monomial(basis[p.j], order);
        // product criterion
        if (coprime(lmi, lmj))
            continue;
        // chain criterion: some k with LM(k) | lcm(i,j) and both flanking
        // pairs already treated
        bool chained = false;
        for (std::size_t k = 0; k < basis.size() && !chained; ++k) {
            if (k == p.i || k == p.j)
                continue;
            if (!leading_monomial(basis[k], order).divides(p.lcm))
                continue;
            std::pair<std::size_t, std::size_t> key1{std::min(p.i, k), std::max(p.i, k)};
            std::pair<std::size_t, std::size_t> key2{std::min(p.j, k), std::max(p.j, k)};
            if (treated.count(key1) && treated.count(key2))
                chained = true;
        }
        if (chained)
            continue;

        Polynomial s = Polynomial::term(basis[p.i].ring(), p.lcm / lmi, Rational(1)) * basis[p.i] -
                       Polynomial::term(basis[p.j].ring(), p.lcm / lmj, Rational(1)) * basis[p.j];
        Polynomial r = normal_form(s, basis, order);
        if (!r.is_zero()) {
            basis.push_back(make_monic(r, order));
            add_pairs(basis.size() - 1);
        }
    }
    return interreduce(std::move(basis), order);
}

const std::vector<Polynomial>& Ideal::groebner_basis(const MonomialOrder& order) const {
    const std::string key = order.key();
    {
        std::lock_guard<std::mutex> lock(cache_->mutex);
        auto it = cache_->bases.find(key);
        if (it != cache_->bases.end())
            return *it->second;
    }
    auto computed = std::make_shared<const std::vector<Polynomial>>(
        buchberger(*generators_, order));
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto [it, inserted] = cache_->bases.emplace(key, std::move(computed));
    return *it->second;
}

bool ideal_membership(const Ideal& I, const Polynomial& f, const MonomialOrder& order) {
    require_same_ring(I.ring(), f.ring(), "ideal_membership");
    return normal_form(f, I.groebner_basis(order), order).is_zero();
}

namespace {

// Fresh variable name not colliding with the ring's.
std::string fresh_name(const PolyRing& ring, const std::string& stem) {
    std::string name = stem;
    int k = 0;
    while (ring.index_of(name) >= 0)
        name = stem + std::to_string(k++);
    return name;
}

Polynomial lift(const Polynomial& f, const RingPtr& big) {
    std::vector<std::size_t> map(f.ring()->arity());
    for (std::size_t i = 0; i < map.size(); ++i)
        map[i] = i;
    return map_variables(f, big, map);
}

}  // namespace

bool radical_membership(const Ideal& I, const Polynomial& f) {
    require_same_ring(I.ring(), f.ring(), "radical_membership");
    if (f.is_zero())
        return true;
    RingPtr big = extend_ring(I.ring(), {fresh_name(*I.ring(), "t")});
    std::size_t t = big->arity() - 1;
    std::vector<Polynomial> gens;
    for (const auto& g : I.generators())
        gens.push_back(lift(g, big));
    gens.push_back(Polynomial::constant(big, Rational(1)) -
                   Polynomial::variable(big, t) * lift(f, big));
    auto gb = buchberger(std::move(gens), MonomialOrder::grevlex());
    return gb.size() == 1 && gb.front().is_constant();
}

Ideal eliminate(const Ideal& I, const std::set<std::size_t>& drop_vars) {
    const std::size_t arity = I.ring()->arity();
    for (auto v : drop_vars)
        if (v >= arity)
            throw std::out_of_range("eliminate: variable index out of range");
    if (drop_vars.size() >= arity)
        throw std::invalid_argument("eliminate: cannot drop every variable");

    std::vector<std::size_t> kept;
    std::vector<std::string> kept_names;
    for (std::size_t i = 0; i < arity; ++i) {
        if (!drop_vars.count(i)) {
            kept.push_back(i);
            kept_names.push_back(I.ring()->name(i));
        }
    }
    RingPtr sub = make_ring(std::move(kept_names), false);

    MonomialOrder elim = MonomialOrder::elimination(
        arity, std::vector<std::size_t>(drop_vars.begin(), drop_vars.end()));
    std::vector<Polynomial> projected;
    for (const auto& g : I.groebner_basis(elim)) {
        bool clean = true;
        for (const auto& [m, c] : g.terms())
            for (auto v : drop_vars)
                if (m[v] != 0)
                    clean = false;
        if (!clean)
            continue;
        Polynomial h(sub);
        for (const auto& [m, c] : g.terms()) {
            std::vector<std::int32_t> exp(kept.size());
            for (std::size_t k = 0; k < kept.size(); ++k)
                exp[k] = m[kept[k]];
            h.add_term(Monomial(std::move(exp)), c);
        }
        projected.push_back(std::move(h));
    }
    return Ideal(sub, std::move(projected));
}

std::optional<std::size_t> vector_space_dimension(const Ideal& I, const MonomialOrder& order) {
    const auto& gb = I.groebner_basis(order);
    const std::size_t arity = I.ring()->arity();
    if (gb.empty())
        return std::nullopt;  // zero ideal, positive arity
    if (gb.size() == 1 && gb.front().is_constant())
        return 0;  // unit ideal

    std::vector<Monomial> lms;
    lms.reserve(gb.size());
    for (const auto& g : gb)
        lms.push_back(leading_monomial(g, order));

    // Cone test: finite iff every variable has a pure power among the
    // leading monomials.
    std::vector<std::int32_t> bound(arity, -1);
    for (const auto& m : lms) {
        for (std::size_t v = 0; v < arity; ++v) {
            if (m[v] == 0)
                continue;
            bool pure = true;
            for (std::size_t w = 0; w < arity; ++w)
                if (w != v && m[w] != 0)
                    pure = false;
            if (pure && (bound[v] < 0 || m[v] < bound[v]))
                bound[v] = m[v];
        }
    }
    for (std::size_t v = 0; v < arity; ++v)
        if (bound[v] < 0)
            return std::nullopt;

    // Count standard monomials inside the bounding box.
    std::size_t count = 0;
    std::vector<std::int32_t> exp(arity, 0);
    auto standard = [&](const std::vector<std::int32_t>& e) {
        Monomial m(e);
        for (const auto& lm : lms)
            if (lm.divides(m))
                return false;
        return true;
    };
    std::size_t v = 0;
    // iterative odometer over the box [0, bound)
    while (true) {
        if (standard(exp))
            ++count;
        v = 0;
        while (v < arity) {
            if (++exp[v] < bound[v])
                break;
            exp[v] = 0;
            ++v;
        }
        if (v == arity)
            break;
    }
    return count;
}

const char* to_string(RadicalStrategy::Kind kind) {
    switch (kind) {
    case RadicalStrategy::Kind::auto_detect:
        return "auto";
    case RadicalStrategy::Kind::monomial:
        return "monomial";
    case RadicalStrategy::Kind::principal:
        return "principal";
    case RadicalStrategy::Kind::zero_dimensional:
        return "zero_dimensional";
    case RadicalStrategy::Kind::user_supplied:
        return "user_supplied";
    }
    return "?";
}

namespace {

bool all_monomial(const Ideal& I) {
    for (const auto& g : I.generators())
        if (g.term_count() != 1)
            return false;
    return !I.generators().empty();
}

Ideal radical_monomial(const Ideal& I) {
    std::vector<Polynomial> gens;
    for (const auto& g : I.generators()) {
        const auto& [m, c] = *g.terms().begin();
        std::vector<std::int32_t> exp(m.arity());
        for (std::size_t i = 0; i < m.arity(); ++i)
            exp[i] = m[i] > 0 ? 1 : 0;
        gens.push_back(Polynomial::term(I.ring(), Monomial(std::move(exp)), Rational(1)));
    }
    // interreduce: drop generators divisible by another
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const Monomial& mi = gens[i].terms().begin()->first;
        bool redundant = false;
        for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
            if (i == j)
                continue;
            const Monomial& mj = gens[j].terms().begin()->first;
            if (mj.divides(mi) && (mj != mi || j < i))
                redundant = true;
        }
        if (!redundant)
            minimal.push_back(gens[i]);
    }
    MonomialOrder ord = MonomialOrder::grevlex();
    std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ord.greater(a.terms().begin()->first, b.terms().begin()->first);
    });
    return Ideal(I.ring(), std::move(minimal));
}

// Seidenberg: a zero-dimensional ideal containing a squarefree univariate
// polynomial in every variable is radical, and adjoining those squarefree
// parts computes the radical in characteristic 0.
Ideal radical_zero_dimensional(const Ideal& I) {
    const std::size_t arity = I.ring()->arity();
    std::vector<Polynomial> gens = I.generators();
    for (std::size_t v = 0; v < arity; ++v) {
        std::set<std::size_t> drop;
        for (std::size_t w = 0; w < arity; ++w)
            if (w != v)
                drop.insert(w);
        Ideal uni = eliminate(I, drop);
        auto gb = uni.groebner_basis(MonomialOrder::lex());
        if (gb.empty())
            throw std::invalid_argument(
                "radical: zero_dimensional strategy needs a finite quotient");
        // univariate principal ideal; embed its squarefree part back
        Polynomial p = squarefree_part(gb.front());
        std::vector<std::size_t> map = {v};
        gens.push_back(map_variables(p, I.ring(), map));
    }
    return Ideal(I.ring(), buchberger(std::move(gens), MonomialOrder::grevlex()));
}

}  // namespace

RadicalResult radical(const Ideal& I, const RadicalStrategy& strategy) {
    using Kind = RadicalStrategy::Kind;
    Kind kind = strategy.kind;
    if (kind == Kind::auto_detect) {
        if (all_monomial(I))
            kind = Kind::monomial;
        else if (I.generators().size() == 1)
            kind = Kind::principal;
        else if (vector_space_dimension(I, MonomialOrder::grevlex()).has_value())
            kind = Kind::zero_dimensional;
        else
            throw std::invalid_argument(
                "radical: no automatic strategy applies (supply one with user_supplied)");
    }

    switch (kind) {
    case Kind::monomial:
        if (!all_monomial(I))
            throw std::invalid_argument("radical: monomial strategy needs monomial generators");
        return {radical_monomial(I), Kind::monomial, true};
    case Kind::principal:
        if (I.generators().size() != 1)
            throw std::invalid_argument("radical: principal strategy needs a single generator");
        return {Ideal(I.ring(), {squarefree_part(I.generators().front())}), Kind::principal,
                true};
    case Kind::zero_dimensional:
        if (!vector_space_dimension(I, MonomialOrder::grevlex()).has_value())
            throw std::invalid_argument(
                "radical: zero_dimensional strategy needs a finite quotient");
        return {radical_zero_dimensional(I), Kind::zero_dimensional, true};
    case Kind::user_supplied: {
        if (strategy.user_generators.empty())
            throw std::invalid_argument("radical: user_supplied strategy needs generators");
        Ideal R(I.ring(), strategy.user_generators);
        if (!verify_radical_equivalence(I, R))
            throw std::invalid_argument(
                "radical: user-supplied generators fail the radical equivalence check");
        return {R, Kind::user_supplied, false};
    }
    default:
        throw std::invalid_argument("radical: unsupported strategy");
    }
}

bool verify_radical_equivalence(const Ideal& I, const Ideal& R) {
    require_same_ring(I.ring(), R.ring(), "verify_radical_equivalence");
    for (const auto& g : R.generators())
        if (!radical_membership(I, g))
            return false;
    for (const auto& g : I.generators())
        if (!radical_membership(R, g))
            return false;
    return true;
}

}  // namespace hhgabber
