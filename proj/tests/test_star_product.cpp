#include "doctest.h"

#include "phasestar/parser.hpp"
#include "phasestar/star_product.hpp"
#include "support/generators.hpp"
#include "support/star_oracle.hpp"

using namespace phasestar;
using phasestar::testing::Gen;

namespace {

SeriesContext hctx(int dim, int K) {
    return SeriesContext(dim, {{"h", K}});
}

const StarProductSpec kMoyal = StarProductSpec::moyal();

StarProductSpec identity_transformed(const SeriesContext& ctx) {
    std::vector<Derivation> ds;
    for (int v = 0; v < 2 * ctx.dim(); ++v) ds.push_back(Derivation::coordinate(ctx, v));
    return StarProductSpec::transformed(std::move(ds));
}

} // namespace

TEST_CASE("star kernel values") {
    SeriesContext ctx = hctx(1, 4);
    DeformedFn x = parse_series("x", ctx);
    DeformedFn p = parse_series("p", ctx);

    CHECK(to_string(star(kMoyal, x, p)) == "x*p + 1/2*i*h");
    CHECK(star(kMoyal, x, p) == parse_series("x*p + 1/2*i*h", ctx));

    // Frozen from the binomial-sum oracle below.
    DeformedFn x2 = parse_series("x^2", ctx);
    DeformedFn p2 = parse_series("p^2", ctx);
    DeformedFn expect = phasestar::testing::star_binomial_1d(x2, p2);
    CHECK(to_string(expect) == "x^2*p^2 + 2*i*x*p*h - 1/2*h^2");
    CHECK(star(kMoyal, x2, p2) == expect);

    // Unit of the algebra.
    Gen gen(3);
    DeformedFn one = parse_series("1", ctx);
    for (int it = 0; it < 10; ++it) {
        DeformedFn f = DeformedFn::from_poly(ctx, gen.poly(1, 4));
        CHECK(star(kMoyal, f, one) == f);
        CHECK(star(kMoyal, one, f) == f);
    }
}

TEST_CASE("star agrees with the independent binomial sum") {
    Gen gen(17);
    SeriesContext ctx = hctx(1, 5);
    for (int it = 0; it < 30; ++it) {
        DeformedFn f = DeformedFn::from_poly(ctx, gen.poly(1, 5));
        DeformedFn g = DeformedFn::from_poly(ctx, gen.poly(1, 5));
        CHECK(star(kMoyal, f, g) == phasestar::testing::star_binomial_1d(f, g));
    }
}

TEST_CASE("star requires the deformation parameter") {
    SeriesContext bare(1, {{"t", 3}});
    DeformedFn x = parse_series("x", bare);
    CHECK_THROWS_AS(star(kMoyal, x, x), UnknownParameter);
}

TEST_CASE("commutator values") {
    SeriesContext ctx = hctx(1, 4);
    DeformedFn x = parse_series("x", ctx);
    DeformedFn p = parse_series("p", ctx);
    CHECK(star_commutator(kMoyal, x, p) == parse_series("i*h", ctx));
    CHECK(star_commutator(kMoyal, parse_series("x^2", ctx), parse_series("p^2", ctx)) ==
          parse_series("4*i*x*p*h", ctx));

    Gen gen(5);
    for (int it = 0; it < 10; ++it) {
        DeformedFn f = DeformedFn::from_poly(ctx, gen.poly(1, 4));
        CHECK(star_commutator(kMoyal, f, f).is_zero());
    }
}

TEST_CASE("deformed bracket values and truncation decrement") {
    SeriesContext ctx = hctx(1, 4);
    DeformedFn x = parse_series("x", ctx);
    DeformedFn p = parse_series("p", ctx);

    DeformedFn b = moyal_bracket(kMoyal, x, p);
    CHECK(b == parse_series("1", hctx(1, 3)));
    CHECK(b.context().order_of("h") == 3);

    CHECK(moyal_bracket(kMoyal, parse_series("x^2", ctx), parse_series("p^2", ctx)) ==
          parse_series("4*x*p", hctx(1, 3)));

    DeformedFn ham = parse_series("1/2*p^2 + 1/2*x^2", ctx);
    CHECK(moyal_bracket(kMoyal, ham, ham).is_zero());
}

TEST_CASE("poisson bracket") {
    SeriesContext ctx = hctx(1, 2);
    CHECK(poisson_bracket(parse_series("x", ctx), parse_series("p", ctx)) ==
          parse_series("1", ctx));
    CHECK(poisson_bracket(parse_poly("x^2", 1), parse_poly("p^2", 1)) == parse_poly("4*x*p", 1));
}

TEST_CASE("star monomials") {
    SeriesContext ctx = hctx(1, 4);
    CHECK(star_monomial(kMoyal, ctx, {1, 1}) == parse_series("x*p + 1/2*i*h", ctx));
    CHECK(star_monomial(kMoyal, ctx, {2, 0}) == parse_series("x^2", ctx));
    // (x*p)*p, frozen from the oracle.
    DeformedFn expect = phasestar::testing::star_binomial_1d(
        phasestar::testing::star_binomial_1d(parse_series("x", ctx), parse_series("p", ctx)),
        parse_series("p", ctx));
    CHECK(to_string(expect) == "x*p^2 + i*p*h");
    CHECK(star_monomial(kMoyal, ctx, {1, 2}) == expect);
}

TEST_CASE("associativity on random triples") {
    Gen gen(29);
    for (int it = 0; it < 40; ++it) {
        const int dim = gen.uniform(1, 2);
        SeriesContext ctx = hctx(dim, 4);
        DeformedFn f = DeformedFn::from_poly(ctx, gen.poly(dim, 4));
        DeformedFn g = DeformedFn::from_poly(ctx, gen.poly(dim, 4));
        DeformedFn h = DeformedFn::from_poly(ctx, gen.poly(dim, 4));
        CHECK(star(kMoyal, star(kMoyal, f, g), h) == star(kMoyal, f, star(kMoyal, g, h)));
    }
}

TEST_CASE("classical limit of the product and bracket") {
    Gen gen(41);
    for (int it = 0; it < 25; ++it) {
        const int dim = gen.uniform(1, 2);
        SeriesContext ctx = hctx(dim, 3);
        PhasePoly fp = gen.poly(dim, 4);
        PhasePoly gp = gen.poly(dim, 4);
        DeformedFn f = DeformedFn::from_poly(ctx, fp);
        DeformedFn g = DeformedFn::from_poly(ctx, gp);
        SeriesContext bare(dim, {});
        CHECK(star(kMoyal, f, g).at_param_zero("h") == DeformedFn::from_poly(bare, fp * gp));
        CHECK(moyal_bracket(kMoyal, f, g).at_param_zero("h") ==
              DeformedFn::from_poly(bare, poisson_bracket(fp, gp)));
    }
}

TEST_CASE("bracket is a Lie bracket up to truncation") {
    Gen gen(53);
    for (int it = 0; it < 12; ++it) {
        const int dim = gen.uniform(1, 2);
        SeriesContext ctx = hctx(dim, 4);
        DeformedFn f = DeformedFn::from_poly(ctx, gen.poly(dim, 3));
        DeformedFn g = DeformedFn::from_poly(ctx, gen.poly(dim, 3));
        DeformedFn w = DeformedFn::from_poly(ctx, gen.poly(dim, 3));

        // Antisymmetry.
        CHECK(moyal_bracket(kMoyal, f, g) == -moyal_bracket(kMoyal, g, f));

        // Leibniz against the star product: [[f, g*w]] = [[f,g]]*w + g*[[f,w]].
        DeformedFn lhs = moyal_bracket(kMoyal, f, star(kMoyal, g, w));
        DeformedFn rhs = star(kMoyal, moyal_bracket(kMoyal, f, g), w) +
                         star(kMoyal, g, moyal_bracket(kMoyal, f, w));
        CHECK(lhs == rhs);

        // Jacobi identity (two brackets: verdict at K-2).
        DeformedFn jac = moyal_bracket(kMoyal, f, moyal_bracket(kMoyal, g, w)) +
                         moyal_bracket(kMoyal, g, moyal_bracket(kMoyal, w, f)) +
                         moyal_bracket(kMoyal, w, moyal_bracket(kMoyal, f, g));
        CHECK(jac.is_zero());
    }
}

TEST_CASE("complex conjugation is the involution") {
    Gen gen(61);
    for (int it = 0; it < 20; ++it) {
        const int dim = gen.uniform(1, 2);
        SeriesContext ctx = hctx(dim, 4);
        DeformedFn f = DeformedFn::from_poly(ctx, gen.real_poly(dim, 4));
        DeformedFn g = DeformedFn::from_poly(ctx, gen.real_poly(dim, 4));
        CHECK(star(kMoyal, f, g).conjugate() == star(kMoyal, g, f));
    }
}

TEST_CASE("transformed product from identity derivations reproduces Moyal") {
    Gen gen(67);
    for (int dim = 1; dim <= 2; ++dim) {
        SeriesContext ctx = hctx(dim, 3);
        StarProductSpec ident = identity_transformed(ctx);
        for (int it = 0; it < 10; ++it) {
            DeformedFn f = DeformedFn::from_poly(ctx, gen.poly(dim, 4));
            DeformedFn g = DeformedFn::from_poly(ctx, gen.poly(dim, 4));
            CHECK(star(ident, f, g) == star(kMoyal, f, g));
        }
    }
}
