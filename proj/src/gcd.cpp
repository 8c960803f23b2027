#include "hhgabber/gcd.hpp"

#include <stdexcept>

namespace hhgabber {

namespace {

const MonomialOrder& grevlex() {
    static const MonomialOrder o = MonomialOrder::grevlex();
    return o;
}

Polynomial make_monic(const Polynomial& f) {
    if (f.is_zero())
        return f;
    auto [lm, lc] = leading_term(f, grevlex());
    return f * (Rational(1) / lc);
}

// Highest variable index occurring in f or g, or -1 if both are constant.
int top_variable(const Polynomial& f, const Polynomial& g) {
    int v = -1;
    for (const Polynomial* p : {&f, &g})
        for (const auto& [m, c] : p->terms())
            for (std::size_t i = 0; i < m.arity(); ++i)
                if (m[i] > 0)
                    v = std::max(v, static_cast<int>(i));
    return v;
}

// Coefficient of v^k in f, viewed as univariate in variable v.
Polynomial coeff_in(const Polynomial& f, std::size_t v, std::int32_t k) {
    Polynomial r(f.ring());
    for (const auto& [m, c] : f.terms()) {
        if (m[v] != k)
            continue;
        std::vector<std::int32_t> exp = m.exponents();
        exp[v] = 0;
        r.add_term(Monomial(std::move(exp)), c);
    }
    return r;
}

Polynomial times_power(const Polynomial& f, std::size_t v, std::int32_t k) {
    if (k == 0)
        return f;
    return f * Polynomial::variable(f.ring(), v, k);
}

Polynomial gcd_rec(const Polynomial& f, const Polynomial& g);

// gcd of the v-coefficients of f.
Polynomial content_in(const Polynomial& f, std::size_t v) {
    Polynomial c = Polynomial::zero(f.ring());
    std::int64_t d = f.degree_in(v);
    for (std::int32_t k = 0; k <= d; ++k) {
        Polynomial ck = coeff_in(f, v, k);
        if (ck.is_zero())
            continue;
        c = c.is_zero() ? make_monic(ck) : gcd_rec(c, ck);
        if (c.is_constant())
            break;
    }
    return c;
}

// Pseudo-remainder of f by g in the variable v: lc_v(g)^(deg f - deg g + 1)*f
// reduced until deg_v < deg_v g.
Polynomial pseudo_rem(Polynomial f, const Polynomial& g, std::size_t v) {
    std::int64_t dg = g.degree_in(v);
    Polynomial lcg = coeff_in(g, v, static_cast<std::int32_t>(dg));
    while (!f.is_zero() && f.degree_in(v) >= dg) {
        std::int64_t df = f.degree_in(v);
        Polynomial lcf = coeff_in(f, v, static_cast<std::int32_t>(df));
        f = f * lcg - times_power(lcf * g, v, static_cast<std::int32_t>(df - dg));
    }
    return f;
}

Polynomial gcd_rec(const Polynomial& f, const Polynomial& g) {
    if (f.is_zero())
        return make_monic(g);
    if (g.is_zero())
        return make_monic(f);
    int v = top_variable(f, g);
    if (v < 0)
        return Polynomial::constant(f.ring(), Rational(1));
    // If v is absent from one argument, it can only divide through the
    // content of the other.
    if (f.degree_in(v) <= 0 || g.degree_in(v) <= 0) {
        const Polynomial& flat = f.degree_in(v) <= 0 ? f : g;
        const Polynomial& tall = f.degree_in(v) <= 0 ? g : f;
        return gcd_rec(flat, content_in(tall, static_cast<std::size_t>(v)));
    }

    Polynomial cf = content_in(f, v);
    Polynomial cg = content_in(g, v);
    Polynomial fp = divide_exact(f, cf);
    Polynomial gp = divide_exact(g, cg);
    Polynomial c = gcd_rec(cf, cg);

    // Primitive PRS.
    while (!gp.is_zero()) {
        Polynomial r = pseudo_rem(fp, gp, v);
        fp = gp;
        if (r.is_zero()) {
            gp = r;
        } else {
            gp = divide_exact(r, content_in(r, v));
        }
    }
    Polynomial prim = divide_exact(fp, content_in(fp, v));
    return make_monic(c * prim);
}

}  // namespace

Polynomial divide_exact(const Polynomial& f, const Polynomial& g) {
    if (g.is_zero())
        throw std::domain_error("divide_exact: division by zero");
    Polynomial q(f.ring());
    Polynomial r = f;
    auto [gm, gc] = leading_term(g, grevlex());
    while (!r.is_zero()) {
        auto [rm, rc] = leading_term(r, grevlex());
        if (!gm.divides(rm))
            throw std::domain_error("divide_exact: inexact division");
        Monomial u = rm / gm;
        Rational c = rc / gc;
        q.add_term(u, c);
        r -= Polynomial::term(r.ring(), u, c) * g;
    }
    return q;
}

Polynomial poly_gcd(const Polynomial& f, const Polynomial& g) {
    require_same_ring(f.ring(), g.ring(), "poly_gcd");
    if (f.is_zero() && g.is_zero())
        throw std::invalid_argument("poly_gcd: gcd(0, 0) undefined");
    return gcd_rec(f, g);
}

Polynomial squarefree_part(const Polynomial& f) {
    if (f.is_zero())
        throw std::invalid_argument("squarefree_part: zero polynomial");
    Polynomial g = f;
    for (std::size_t i = 0; i < f.ring()->arity(); ++i) {
        Polynomial d = f.diff(i);
        if (!d.is_zero())
            g = poly_gcd(g, d);
        if (g.is_constant())
            break;
    }
    if (g.is_constant())
        return make_monic(f);
    return make_monic(divide_exact(f, g));
}

}  // namespace hhgabber
