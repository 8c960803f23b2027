#include <doctest.h>

#include "hhgabber/poisson.hpp"
#include "hhgabber/weyl.hpp"
#include "test_util.hpp"

using namespace hhgabber;

namespace {

WeylOperator W(const std::string& text, std::size_t n) {
    return parse_weyl_operator(text, n);
}

}  // namespace

TEST_CASE("weyl_mul examples") {
    CHECK(W("d1", 1) * W("x1", 1) == W("x1*d1 + 1", 1));
    CHECK(W("x1", 1) * W("d1", 1) == W("x1*d1", 1));
    CHECK(W("d1^2", 1) * W("x1", 1) == W("x1*d1^2 + 2*d1", 1));
    CHECK_THROWS_AS(weyl_mul(W("d1", 1), W("d1", 2)), std::invalid_argument);
}

TEST_CASE("parser applies normal ordering") {
    CHECK(W("d1*x1", 1) == W("x1*d1 + 1", 1));
    CHECK(W("d1*x1^2", 1) == W("x1^2*d1 + 2*x1", 1));
    CHECK(W("d1^2*x1^2", 1) == W("x1^2*d1^2 + 4*x1*d1 + 2", 1));
    CHECK(W("3/2*d1*x1", 1) == W("3/2*x1*d1 + 3/2", 1));
    CHECK(W("d2*x2 - x2*d2", 2) == W("1", 2));
    CHECK_THROWS_AS(parse_weyl_operator("d1*", 1), ParseError);
    CHECK_THROWS_AS(parse_weyl_operator("y1", 1), ParseError);
}

TEST_CASE("operator text round trips") {
    std::mt19937_64 rng(555);
    for (int round = 0; round < 30; ++round) {
        std::size_t n = 1 + round % 2;
        WeylOperator P = testutil::random_weyl_operator(rng, n, 3, 4);
        REQUIRE(parse_weyl_operator(P.to_string(), n) == P);
    }
}

TEST_CASE("commutator examples") {
    CHECK(commutator(W("d1", 1), W("x1", 1)) == W("1", 1));
    CHECK(commutator(W("d1", 2), W("x2", 2)).is_zero());
    CHECK(commutator(W("x1*d1", 1), W("x1", 1)) == W("x1", 1));
}

TEST_CASE("canonical commutation relations up to n=3") {
    const std::size_t n = 3;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            WeylOperator di = WeylOperator::derivation(n, i);
            WeylOperator xj = WeylOperator::coordinate(n, j);
            WeylOperator expected =
                i == j ? WeylOperator::constant(n, Rational(1)) : WeylOperator::zero(n);
            REQUIRE(commutator(di, xj) == expected);
            REQUIRE(commutator(WeylOperator::coordinate(n, i), xj).is_zero());
            REQUIRE(commutator(di, WeylOperator::derivation(n, j)).is_zero());
        }
    }
}

TEST_CASE("associativity sampled") {
    std::mt19937_64 rng(1618);
    for (int round = 0; round < 100; ++round) {
        std::size_t n = 1 + (round % 2);
        WeylOperator P = testutil::random_weyl_operator(rng, n, 3, 3);
        WeylOperator Q = testutil::random_weyl_operator(rng, n, 3, 3);
        WeylOperator R = testutil::random_weyl_operator(rng, n, 3, 3);
        REQUIRE((P * Q) * R == P * (Q * R));
    }
}

TEST_CASE("op_order examples") {
    CHECK(op_order(W("x1^3", 1)) == 0);
    CHECK(op_order(W("x1*d1 - 5", 1)) == 1);
    CHECK(op_order(W("d1^2*d2 + x1*d1", 2)) == 3);
    CHECK_THROWS_AS(op_order(WeylOperator::zero(1)), std::invalid_argument);
}

TEST_CASE("principal_symbol examples") {
    RingPtr cot1 = cotangent_ring(1);
    RingPtr cot2 = cotangent_ring(2);
    CHECK(principal_symbol(W("x1^3", 1)) == parse_polynomial("x1^3", cot1));
    CHECK(principal_symbol(W("x1*d1 - 2", 1)) == parse_polynomial("x1*xi1", cot1));
    CHECK(principal_symbol(W("d1^2 + x1*d1 + 1", 1)) == parse_polynomial("xi1^2", cot1));
    CHECK(principal_symbol(W("d1^2 + d2^2 - x1", 2)) ==
          parse_polynomial("xi1^2 + xi2^2", cot2));
}

TEST_CASE("symbol multiplicativity sampled") {
    std::mt19937_64 rng(2718);
    for (int round = 0; round < 100; ++round) {
        std::size_t n = 1 + (round % 2);
        WeylOperator P = testutil::random_weyl_operator(rng, n, 3, 3);
        WeylOperator Q = testutil::random_weyl_operator(rng, n, 3, 3);
        if (P.is_zero() || Q.is_zero())
            continue;
        REQUIRE(principal_symbol(P * Q) == principal_symbol(P) * principal_symbol(Q));
    }
}

TEST_CASE("symbol-bracket compatibility sampled") {
    // The top weight part of the symbol of [P,Q] is the canonical Poisson
    // bracket of the symbols; when that bracket dies, the commutator's
    // order genuinely drops below p+q-1.
    std::mt19937_64 rng(31415);
    for (int round = 0; round < 100; ++round) {
        std::size_t n = 1 + (round % 2);
        RingPtr cot = cotangent_ring(n);
        Bivector theta = canonical_symplectic(cot);
        WeylOperator P = testutil::random_weyl_operator(rng, n, 3, 3);
        WeylOperator Q = testutil::random_weyl_operator(rng, n, 3, 3);
        if (P.is_zero() || Q.is_zero())
            continue;
        std::int64_t p = op_order(P), q = op_order(Q);

        std::vector<std::int32_t> w(2 * n, 0);
        for (std::size_t i = n; i < 2 * n; ++i)
            w[i] = 1;
        WeylOperator C = commutator(P, Q);
        Polynomial top = total_symbol(C).weighted_part(w, p + q - 1);
        Polynomial pb = bracket_eval(theta, principal_symbol(P), principal_symbol(Q));
        REQUIRE(top == pb);
        if (pb.is_zero() && !C.is_zero())
            REQUIRE(op_order(C) < p + q - 1);
    }
}

TEST_CASE("weyl_groebner fixtures") {
    SUBCASE("single generators are their own basis") {
        DModulePresentation M1(1, {W("d1", 1)});
        auto gb = weyl_groebner(M1);
        REQUIRE(gb.size() == 1);
        CHECK(gb[0] == W("d1", 1));

        DModulePresentation M2(1, {W("x1*d1", 1)});
        auto gb2 = weyl_groebner(M2);
        REQUIRE(gb2.size() == 1);
        CHECK(gb2[0] == W("x1*d1", 1));
    }
    SUBCASE("commutator enriches the basis") {
        // [d2^2 - x2, d1] interactions stay trivial; the pair completes
        // cleanly to itself.
        DModulePresentation M(2, {W("d1", 2), W("d2^2 - x2", 2)});
        auto gb = weyl_groebner(M);
        REQUIRE(gb.size() == 2);
        CHECK(gb[0] == W("d2^2 - x2", 2));
        CHECK(gb[1] == W("d1", 2));
    }
    SUBCASE("the degenerate pair collapses to the unit ideal") {
        // d2^2 - x1 feeds x1 back into d1^2 through [d1^2, x1] = 2 d1, and
        // d1 with d2^2 - x1 then exposes 1: the module is zero.
        DModulePresentation M(2, {W("d1^2", 2), W("d2^2 - x1", 2)});
        auto gb = weyl_groebner(M);
        REQUIRE(gb.size() == 1);
        CHECK(gb[0] == W("1", 2));
    }
    SUBCASE("every S-pair of the output left-reduces to zero") {
        std::vector<DModulePresentation> fixtures = {
            DModulePresentation(1, {W("x1*d1 - 1/2", 1)}),
            DModulePresentation(2, {W("d1", 2), W("d2^2 - x2", 2)}),
            DModulePresentation(2, {W("x1*d2", 2), W("x2*d1", 2)}),
        };
        for (const auto& M : fixtures) {
            auto gb = weyl_groebner(M);
            // brute force: multiply out every S-pair and reduce by hand
            MonomialOrder ord = MonomialOrder::order_filtration(M.n);
            auto lm = [&](const WeylOperator& g) {
                const Monomial* best = nullptr;
                for (const auto& [m, c] : g.terms())
                    if (!best || ord.greater(m, *best))
                        best = &m;
                return *best;
            };
            auto mono_op = [&](const Monomial& m) {
                std::vector<std::int32_t> xs(M.n), ds(M.n);
                for (std::size_t i = 0; i < M.n; ++i) {
                    xs[i] = m[i];
                    ds[i] = m[M.n + i];
                }
                return WeylOperator::term(M.n, xs, ds, Rational(1));
            };
            auto reduce = [&](WeylOperator f) {
                bool changed = true;
                while (changed && !f.is_zero()) {
                    changed = false;
                    for (const auto& [m, c] : f.terms()) {
                        for (const auto& g : gb) {
                            Monomial lmg = lm(g);
                            if (!lmg.divides(m))
                                continue;
                            f -= (mono_op(m / lmg) * g) * (c / g.terms().at(lmg));
                            changed = true;
                            break;
                        }
                        if (changed)
                            break;
                    }
                }
                return f;
            };
            for (std::size_t i = 0; i < gb.size(); ++i) {
                for (std::size_t j = i + 1; j < gb.size(); ++j) {
                    Monomial L = lcm(lm(gb[i]), lm(gb[j]));
                    WeylOperator s =
                        mono_op(L / lm(gb[i])) * gb[i] - mono_op(L / lm(gb[j])) * gb[j];
                    REQUIRE(reduce(s).is_zero());
                }
                // generators lie in the span
                for (const auto& g : M.left_ideal_generators)
                    REQUIRE(reduce(g).is_zero());
            }
        }
    }
}

TEST_CASE("characteristic_ideal examples") {
    const MonomialOrder grevlex = MonomialOrder::grevlex();
    SUBCASE("one derivation") {
        Ideal J = characteristic_ideal(DModulePresentation(1, {W("d1", 1)}));
        auto gb = J.groebner_basis(grevlex);
        REQUIRE(gb.size() == 1);
        CHECK(gb[0] == parse_polynomial("xi1", J.ring()));
    }
    SUBCASE("euler operator") {
        for (const char* lambda : {"0", "1", "1/2"}) {
            Ideal J = characteristic_ideal(
                DModulePresentation(1, {W(std::string("x1*d1 - ") + lambda, 1)}));
            auto gb = J.groebner_basis(grevlex);
            REQUIRE(gb.size() == 1);
            CHECK(gb[0] == parse_polynomial("x1*xi1", J.ring()));
        }
    }
    SUBCASE("mixed second order") {
        Ideal J = characteristic_ideal(DModulePresentation(2, {W("d1", 2), W("d2^2 - x2", 2)}));
        auto gb = J.groebner_basis(grevlex);
        REQUIRE(gb.size() == 2);
        CHECK(gb[0] == parse_polynomial("xi2^2", J.ring()));
        CHECK(gb[1] == parse_polynomial("xi1", J.ring()));
    }
    SUBCASE("degenerate pair gives the unit ideal") {
        Ideal J = characteristic_ideal(
            DModulePresentation(2, {W("d1^2", 2), W("d2^2 - x1", 2)}));
        auto gb = J.groebner_basis(grevlex);
        REQUIRE(gb.size() == 1);
        CHECK(gb[0] == parse_polynomial("1", J.ring()));
    }
}

TEST_CASE("characteristic ideal is involutive on the fixture corpus") {
    std::vector<DModulePresentation> fixtures = {
        DModulePresentation(1, {W("d1", 1)}),
        DModulePresentation(1, {W("d1^2", 1)}),
        DModulePresentation(1, {W("x1*d1 - 1/2", 1)}),
        DModulePresentation(1, {W("x1", 1)}),
        DModulePresentation(1, {W("x1*d1^2", 1)}),
        DModulePresentation(2, {W("d1", 2), W("d2^2 - x2", 2)}),
        DModulePresentation(2, {W("x1*d2", 2), W("x2*d1", 2)}),
    };
    for (const auto& M : fixtures) {
        Ideal J = characteristic_ideal(M);
        Bivector theta = canonical_symplectic(J.ring());
        auto verdict = is_involutive(J, theta);
        REQUIRE(verdict.involutive);
    }
}

TEST_CASE("symbols of left multiples stay in the characteristic ideal") {
    std::mt19937_64 rng(808);
    DModulePresentation M(2, {W("x1*d2", 2), W("x2*d1", 2)});
    Ideal J = characteristic_ideal(M);
    for (int round = 0; round < 25; ++round) {
        WeylOperator h = testutil::random_weyl_operator(rng, 2, 2, 2);
        if (h.is_zero())
            continue;
        for (const auto& g : M.left_ideal_generators) {
            Polynomial s = principal_symbol(h * g);
            REQUIRE(ideal_membership(J, s, MonomialOrder::grevlex()));
        }
    }
}
