#include <doctest.h>

#include "hhgabber/poisson.hpp"
#include "test_util.hpp"

using namespace hhgabber;
using testutil::parse;

namespace {

const RingPtr COT1 = cotangent_ring(1);
const RingPtr COT2 = cotangent_ring(2);

Bivector random_bivector(std::mt19937_64& rng, const RingPtr& ring, int max_degree,
                         int max_terms) {
    Bivector theta(ring);
    for (std::size_t i = 0; i < ring->arity(); ++i)
        for (std::size_t j = i + 1; j < ring->arity(); ++j)
            theta.add(i, j, testutil::random_polynomial(rng, ring, max_degree, max_terms));
    return theta;
}

}  // namespace

TEST_CASE("canonical_symplectic pairings") {
    Bivector theta1 = canonical_symplectic(COT1);
    Polynomial x = parse("x1", COT1), xi = parse("xi1", COT1);
    CHECK(bracket_eval(theta1, x, xi) == parse("-1", COT1));
    CHECK(bracket_eval(theta1, xi, x) == parse("1", COT1));

    Bivector theta2 = canonical_symplectic(COT2);
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            Polynomial xii = Polynomial::variable(COT2, 2 + i);
            Polynomial xj = Polynomial::variable(COT2, j);
            Polynomial expected = Polynomial::constant(COT2, Rational(i == j ? 1 : 0));
            REQUIRE(bracket_eval(theta2, xii, xj) == expected);
        }
    }
    CHECK(bracket_eval(theta2, parse("x1", COT2), parse("x2", COT2)).is_zero());
    CHECK_THROWS_AS(canonical_symplectic(make_ring({"x", "y"})), std::invalid_argument);
}

TEST_CASE("deformation_class examples") {
    SUBCASE("first-order Weyl table recovers the canonical bivector") {
        DeformationTable table(COT1);
        table.set(0, 1, parse("-1", COT1));  // {x1, xi1} = -1
        CHECK(deformation_class(table) == canonical_symplectic(COT1));
    }
    SUBCASE("empty table gives the zero bivector") {
        DeformationTable table(COT1);
        CHECK(deformation_class(table).is_zero());
    }
    SUBCASE("sl2 table") {
        RingPtr R = make_ring({"x", "y", "z"});
        DeformationTable table(R);
        table.set(0, 1, parse("z", R));  // {x,y} = z
        table.set(1, 2, parse("x", R));  // {y,z} = x
        table.set(2, 0, parse("y", R));  // {z,x} = y
        Bivector theta = deformation_class(table);
        CHECK(theta.coefficient(0, 1) == parse("z", R));
        CHECK(theta.coefficient(1, 2) == parse("x", R));
        CHECK(theta.coefficient(0, 2) == parse("-y", R));
        CHECK(bracket_eval(theta, parse("z", R), parse("x", R)) == parse("y", R));
        // the Casimir lies in the kernel
        Polynomial casimir = parse("x^2+y^2+z^2", R);
        for (std::size_t v = 0; v < 3; ++v)
            REQUIRE(bracket_eval(theta, casimir, Polynomial::variable(R, v)).is_zero());
    }
}

TEST_CASE("bracket_eval examples") {
    Bivector theta = canonical_symplectic(COT1);
    CHECK(bracket_eval(theta, parse("x1^2", COT1), parse("xi1", COT1)) == parse("-2*x1", COT1));
    std::mt19937_64 rng(12);
    for (int round = 0; round < 20; ++round) {
        Polynomial f = testutil::random_polynomial(rng, COT1, 3, 4);
        REQUIRE(bracket_eval(theta, f, f).is_zero());
    }
    CHECK(bracket_eval(Bivector::zero(COT1), parse("x1", COT1), parse("xi1", COT1)).is_zero());
}

TEST_CASE("bracket is a skew biderivation; canonical satisfies Jacobi") {
    std::mt19937_64 rng(34);
    Bivector theta = canonical_symplectic(COT2);
    for (int round = 0; round < 60; ++round) {
        Polynomial f = testutil::random_polynomial(rng, COT2, 2, 3);
        Polynomial g = testutil::random_polynomial(rng, COT2, 2, 3);
        Polynomial h = testutil::random_polynomial(rng, COT2, 2, 3);
        REQUIRE(bracket_eval(theta, f * g, h) ==
                f * bracket_eval(theta, g, h) + g * bracket_eval(theta, f, h));
        REQUIRE(bracket_eval(theta, f, g) == -bracket_eval(theta, g, f));
        Polynomial jacobi = bracket_eval(theta, f, bracket_eval(theta, g, h)) +
                            bracket_eval(theta, g, bracket_eval(theta, h, f)) +
                            bracket_eval(theta, h, bracket_eval(theta, f, g));
        REQUIRE(jacobi.is_zero());
    }
}

TEST_CASE("is_involutive examples") {
    Bivector theta = canonical_symplectic(COT1);
    SUBCASE("single generator is vacuously involutive") {
        Ideal I(COT1, {parse("x1*xi1", COT1)});
        CHECK(is_involutive(I, theta).involutive);
    }
    SUBCASE("the point ideal fails with witness 1") {
        Ideal I(COT1, {parse("x1", COT1), parse("xi1", COT1)});
        auto verdict = is_involutive(I, theta);
        REQUIRE_FALSE(verdict.involutive);
        REQUIRE(verdict.witnesses.size() == 1);
        CHECK(verdict.witnesses[0].bracket == parse("-1", COT1));
        CHECK(verdict.witnesses[0].normal_form == parse("-1", COT1));
    }
    SUBCASE("mixed coordinate plane is involutive") {
        Ideal I(COT2, {parse("x1", COT2), parse("xi2", COT2)});
        CHECK(is_involutive(I, canonical_symplectic(COT2)).involutive);
    }
}

TEST_CASE("is_involutive generator sufficiency") {
    // When the generator test passes, brackets of random multiples of the
    // generators stay in the ideal (the Leibniz closure the verdict relies
    // on).
    std::mt19937_64 rng(56);
    Bivector theta = canonical_symplectic(COT2);
    std::vector<Ideal> fixtures = {
        Ideal(COT2, {parse("x1", COT2), parse("x2", COT2)}),
        Ideal(COT2, {parse("xi1", COT2), parse("xi2", COT2)}),
        Ideal(COT2, {parse("x1*xi1 - x2*xi2", COT2), parse("x1*x2", COT2)}),
    };
    for (const auto& I : fixtures) {
        auto verdict = is_involutive(I, theta);
        if (!verdict.involutive)
            continue;
        const auto& gens = I.generators();
        for (int round = 0; round < 50; ++round) {
            Polynomial h1 = testutil::random_polynomial(rng, COT2, 2, 2);
            Polynomial h2 = testutil::random_polynomial(rng, COT2, 2, 2);
            const Polynomial& gi = gens[round % gens.size()];
            const Polynomial& gj = gens[(round + 1) % gens.size()];
            Polynomial br = bracket_eval(theta, h1 * gi, h2 * gj);
            REQUIRE(ideal_membership(I, br, MonomialOrder::grevlex()));
        }
    }
}

TEST_CASE("conormal_determinant examples") {
    SUBCASE("one function") {
        DifferentialForm omega = conormal_determinant({parse("x1", COT1)});
        CHECK(omega.degree() == 1);
        CHECK(omega.coefficient({0}) == parse("1", COT1));
        CHECK(omega.coefficient({1}).is_zero());
    }
    SUBCASE("coordinate pair") {
        DifferentialForm omega =
            conormal_determinant({parse("x1", COT1), parse("xi1", COT1)});
        CHECK(omega.degree() == 2);
        CHECK(omega.coefficient({0, 1}) == parse("1", COT1));
    }
    SUBCASE("perturbed pair straightens out") {
        RingPtr XY = make_ring({"x", "y"});
        DifferentialForm omega = conormal_determinant({parse("x - y^2", XY), parse("y", XY)});
        CHECK(omega.degree() == 2);
        CHECK(omega.coefficient({0, 1}) == parse("1", XY));
    }
    SUBCASE("rank deficiency is an error") {
        RingPtr XY = make_ring({"x", "y"});
        // differentials dependent mod the ideal: dx and (1-y)dx - x dy
        // collapse along x = 0
        CHECK_THROWS_AS(conormal_determinant({parse("x", XY), parse("x - x*y", XY)}),
                        std::domain_error);
        CHECK_THROWS_AS(conormal_determinant({parse("x*y", XY), parse("x", XY)}),
                        std::domain_error);
    }
    SUBCASE("the check reads the generic point only") {
        RingPtr XY = make_ring({"x", "y"});
        // d(x^2) = 2x dx has nonzero normal form mod (x^2); the literal
        // minor test passes even though the scheme is non-reduced
        DifferentialForm omega = conormal_determinant({parse("x^2", XY)});
        CHECK(omega.coefficient({0}) == parse("2*x", XY));
    }
}

TEST_CASE("contract_form examples") {
    SUBCASE("matched pair gives a constant") {
        Bivector theta(COT1);
        theta.add(0, 1, parse("1", COT1));
        DifferentialForm omega(COT1, 2);
        omega.add({0, 1}, parse("1", COT1));
        DifferentialForm out = contract_form(theta, omega);
        CHECK(out.degree() == 0);
        CHECK(out.coefficient({}) == parse("1", COT1));
    }
    SUBCASE("index mismatch gives zero") {
        RingPtr R = make_ring({"x", "y", "xi"});
        Bivector theta(R);
        theta.add(0, 2, parse("1", R));
        DifferentialForm omega(R, 2);
        omega.add({0, 1}, parse("1", R));
        CHECK(contract_form(theta, omega).is_zero());
    }
    SUBCASE("three-form drops to the complementary one-form") {
        RingPtr R = make_ring({"x1", "x2", "x3"});
        Bivector theta(R);
        theta.add(0, 1, parse("1", R));
        DifferentialForm omega(R, 3);
        omega.add({0, 1, 2}, parse("1", R));
        DifferentialForm out = contract_form(theta, omega);
        CHECK(out.degree() == 1);
        CHECK(out.coefficient({2}) == parse("1", R));
    }
    SUBCASE("degree below 2 is an error") {
        Bivector theta(COT1);
        DifferentialForm omega(COT1, 1);
        CHECK_THROWS_AS(contract_form(theta, omega), std::invalid_argument);
    }
}

TEST_CASE("conormal_projection examples") {
    Bivector theta = canonical_symplectic(COT2);
    SUBCASE("conjugate pair survives") {
        Bivector t1 = canonical_symplectic(COT1);
        auto cls = conormal_projection(t1, {parse("x1", COT1), parse("xi1", COT1)});
        REQUIRE_FALSE(cls.is_zero());
        CHECK(cls.entries.at({0, 1}) == parse("-1", COT1));
    }
    SUBCASE("coordinate plane projects to zero") {
        auto cls = conormal_projection(theta, {parse("x1", COT2), parse("x2", COT2)});
        CHECK(cls.is_zero());
    }
    SUBCASE("single function has empty entries") {
        auto cls = conormal_projection(theta, {parse("x1", COT2)});
        CHECK(cls.entries.empty());
        CHECK(cls.is_zero());
    }
}

TEST_CASE("thread cap does not change is_involutive output") {
    Ideal I(COT2, {parse("x1", COT2), parse("x2", COT2), parse("xi1", COT2),
                   parse("xi2", COT2)});
    Bivector theta = canonical_symplectic(COT2);
    auto single = is_involutive(I, theta);
    setenv("HHGABBER_THREADS", "4", 1);
    auto threaded = is_involutive(I, theta);
    unsetenv("HHGABBER_THREADS");
    REQUIRE(single.involutive == threaded.involutive);
    REQUIRE(single.witnesses.size() == threaded.witnesses.size());
    for (std::size_t k = 0; k < single.witnesses.size(); ++k) {
        REQUIRE(single.witnesses[k].f == threaded.witnesses[k].f);
        REQUIRE(single.witnesses[k].g == threaded.witnesses[k].g);
        REQUIRE(single.witnesses[k].bracket == threaded.witnesses[k].bracket);
        REQUIRE(single.witnesses[k].normal_form == threaded.witnesses[k].normal_form);
    }
}

TEST_CASE("deformation class round trip") {
    std::mt19937_64 rng(78);
    for (int round = 0; round < 30; ++round) {
        Bivector theta = random_bivector(rng, COT2, 2, 2);
        DeformationTable table(COT2);
        for (std::size_t i = 0; i < COT2->arity(); ++i)
            for (std::size_t j = i + 1; j < COT2->arity(); ++j)
                table.set(i, j, bracket_eval(theta, Polynomial::variable(COT2, i),
                                             Polynomial::variable(COT2, j)));
        REQUIRE(deformation_class(table) == theta);
    }
}

TEST_CASE("criterion equivalence: projection vanishes iff contraction vanishes mod the ideal") {
    std::mt19937_64 rng(90);
    int cases = 0;
    int vanishing_seen = 0;
    while (cases < 100) {
        std::size_t pairs = 1 + (cases % 2);
        RingPtr ring = cotangent_ring(pairs);
        std::size_t arity = ring->arity();

        // perturbed coordinate sequence: f_i = v_i + (something in the later
        // variables), always regular, quotient a polynomial ring
        std::vector<Polynomial> fs;
        for (std::size_t i = 0; i + 1 < arity; ++i) {
            Polynomial tail = testutil::random_polynomial(rng, ring, 2, 2);
            // keep only monomials in variables > i
            Polynomial clean = Polynomial::zero(ring);
            for (const auto& [m, c] : tail.terms()) {
                bool late = true;
                for (std::size_t v = 0; v <= i; ++v)
                    if (m[v] != 0)
                        late = false;
                if (late)
                    clean.add_term(m, c);
            }
            fs.push_back(Polynomial::variable(ring, i) + clean);
        }
        fs.push_back(Polynomial::variable(ring, arity - 1));

        Bivector theta(ring);
        bool force_vanishing = cases % 2 == 0;
        for (std::size_t i = 0; i < arity; ++i) {
            for (std::size_t j = i + 1; j < arity; ++j) {
                // coefficients inside (fs) make every leg vanish
                Polynomial c =
                    testutil::random_polynomial(rng, ring, 1, 2) * fs[(i + j) % fs.size()];
                theta.add(i, j, c);
            }
        }
        if (!force_vanishing) {
            // constant slot on the (first, last) pair: the bracket
            // {f_first, f_last} picks up a unit, so eta cannot vanish
            theta.add(0, arity - 1, Polynomial::constant(ring, Rational(1)));
        }

        NormalBivectorClass eta = conormal_projection(theta, fs);
        DifferentialForm omega = conormal_determinant(fs);
        DifferentialForm contracted = contract_form(theta, omega);
        Ideal I(ring, fs);
        const MonomialOrder ord = MonomialOrder::grevlex();
        const auto& gb = I.groebner_basis(ord);
        bool contraction_vanishes = true;
        for (const auto& [S, c] : contracted.coefficients())
            if (!normal_form(c, gb, ord).is_zero())
                contraction_vanishes = false;

        REQUIRE(eta.is_zero() == contraction_vanishes);
        REQUIRE(eta.is_zero() == force_vanishing);
        if (eta.is_zero())
            ++vanishing_seen;
        ++cases;
    }
    // both branches of the equivalence occur by construction
    CHECK(vanishing_seen == 50);
}
