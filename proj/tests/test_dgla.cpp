#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ainf/triangular.hpp"
#include "helpers.hpp"

using namespace ainf;
using namespace ainf::testing;

namespace {

const FieldSpec Q = FieldSpec::rationals();

/// End(k^{1|1}) over R: E11,E22 even; E12 degree -1; E21 degree +1.
struct MatFix {
    AlgebraPtr alg;
    AlgElem one;
    AlgElem E11, E12, E21, E22;
    explicit MatFix(const RingPtr& R)
        : alg(GradedAlgebra::matrix_algebra(Q, R, {0, 1})),
          one(AlgElem::unit_like(alg, {0, 3})),
          E11(AlgElem::basis(alg, 0)),
          E12(AlgElem::basis(alg, 1)),
          E21(AlgElem::basis(alg, 2)),
          E22(AlgElem::basis(alg, 3)) {}
};

AlgElem random_elem(const MatFix& fx, const RingPtr& R, std::mt19937& rng, bool in_m) {
    std::uniform_int_distribution<long> val(-2, 2);
    AlgElem e(fx.alg);
    for (int i = 0; i < 4; ++i) {
        RingElem c(R);
        for (Mono m : R->monomials()) {
            if (in_m && m == 0) continue;
            c.add_term(m, Scalar::of_int(Q, val(rng)));
        }
        e.set_coord(i, c);
    }
    return e;
}

/// Homogeneous random element of a given total degree with coefficients in m.
AlgElem random_homog(const MatFix& fx, const RingPtr& R, std::mt19937& rng, int deg, bool in_m = true) {
    std::uniform_int_distribution<long> val(-2, 2);
    AlgElem e(fx.alg);
    for (int i = 0; i < 4; ++i) {
        RingElem c(R);
        for (Mono m : R->monomials()) {
            if (in_m && m == 0) continue;
            if (fx.alg->space()->degree(i) + R->mono_degree(m) != deg) continue;
            c.add_term(m, Scalar::of_int(Q, val(rng)));
        }
        e.set_coord(i, c);
    }
    return e;
}

} // namespace

TEST_CASE("triangular bracket matches 2x2 matrix commutators") {
    auto R = ArtinRing::t_adic(Q, 3);
    MatFix fx(R);
    std::mt19937 rng(7);
    for (int trial = 0; trial < 15; ++trial) {
        TriElem x{random_elem(fx, R, rng, false), random_elem(fx, R, rng, false)};
        TriElem y{random_elem(fx, R, rng, false), random_elem(fx, R, rng, false)};
        // ungraded check: plain commutator of the 2x2 block matrices (even parts only)
        // use homogeneous even pieces so the graded commutator is the plain one
        TriElem xe{fx.E11.scaled(x.a.coord(0).coeff(0)) + fx.E22.scaled(x.a.coord(3).coeff(0)),
                   fx.E11.scaled(x.b.coord(0).coeff(0)) + fx.E22.scaled(x.b.coord(3).coeff(0))};
        TriElem ye{fx.E11.scaled(y.a.coord(0).coeff(0)) + fx.E22.scaled(y.a.coord(3).coeff(0)),
                   fx.E11.scaled(y.b.coord(0).coeff(0)) + fx.E22.scaled(y.b.coord(3).coeff(0))};
        TriElem br = tri_bracket(xe, ye);
        Mat2 mx = mat2_of_tri(xe), my = mat2_of_tri(ye);
        Mat2 mm = mat2_mul(mx, my);
        Mat2 nn = mat2_mul(my, mx);
        Mat2 expect{mm[0] - nn[0], mm[1] - nn[1], mm[2] - nn[2], mm[3] - nn[3]};
        CHECK(mat2_equal(mat2_of_tri(br), expect));
    }
    // graded case: homogeneous blocks of degrees dx, dy with the Koszul sign
    for (int dx = -1; dx <= 1; ++dx)
        for (int dy = -1; dy <= 1; ++dy) {
            TriElem x{random_homog(fx, R, rng, dx, false), random_homog(fx, R, rng, dx, false)};
            TriElem y{random_homog(fx, R, rng, dy, false), random_homog(fx, R, rng, dy, false)};
            TriElem br = tri_bracket(x, y);
            Mat2 mm = mat2_mul(mat2_of_tri(x), mat2_of_tri(y));
            Mat2 nn = mat2_mul(mat2_of_tri(y), mat2_of_tri(x));
            Scalar sg = Scalar::of_int(Q, -sign_block_move(dx, dy));
            Mat2 expect{mm[0] + nn[0].scaled(sg), mm[1] + nn[1].scaled(sg), mm[2] + nn[2].scaled(sg),
                        mm[3] + nn[3].scaled(sg)};
            CHECK(mat2_equal(mat2_of_tri(br), expect));
        }
}

TEST_CASE("graded commutator axioms on End(k^{1|1})") {
    auto R = ArtinRing::t_adic(Q, 2);
    MatFix fx(R);
    // E21 odd: [E21, E21] = 2 E21^2 = 0, and P = (E21, E21) is a polarization
    AlgElem D = fx.E21;
    CHECK(graded_commutator(D, D).is_zero());
    TriElem P{D, D};
    CHECK(tri_bracket(P, P).is_zero());
    // [E12, E21] = E11 + E22 (odd-odd anticommutator)
    AlgElem c = graded_commutator(fx.E12, fx.E21);
    CHECK(c == fx.one);
}

TEST_CASE("matrix_exp_triangular equals entrywise 2x2 exponentiation") {
    auto R = ArtinRing::t_adic(Q, 4); // k[t]/t^5
    MatFix fx(R);
    std::mt19937 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        AlgElem f = random_elem(fx, R, rng, true);
        AlgElem i = random_elem(fx, R, rng, true);
        TriElem e = matrix_exp_triangular(f, i, fx.one);
        Mat2 direct = mat2_exp(mat2_of_tri(TriElem{f, i}), fx.one);
        CHECK(mat2_equal(mat2_of_tri(e), direct));
    }
}

TEST_CASE("matrix_exp_triangular pinned values") {
    auto R = ArtinRing::t_adic(Q, 2); // k[t]/t^3
    MatFix fx(R);
    RingElem t = RingElem::parse(R, "t");
    SUBCASE("(0, i) -> (1, i)") {
        AlgElem i = fx.E11.scaled(Scalar::of_int(Q, 1));
        AlgElem im(fx.alg);
        im.set_coord(0, t);
        AlgElem zero(fx.alg);
        TriElem e = matrix_exp_triangular(zero, im, fx.one);
        CHECK(e.a == fx.one);
        CHECK(e.b == im);
    }
    SUBCASE("(f, 0) -> (e^f, 0)") {
        AlgElem fm(fx.alg);
        fm.set_coord(0, t);
        AlgElem zero(fx.alg);
        TriElem e = matrix_exp_triangular(fm, zero, fx.one);
        CHECK(e.a == alg_exp(fm, fx.one));
        CHECK(e.b.is_zero());
    }
    SUBCASE("commuting scalars: x = t v + t^2 u v") {
        // f = t·u·1, i = t·v·1 with u = 2, v = 3 as scalar multiples of the unit
        AlgElem f = fx.one.scaled(Scalar::of_int(Q, 2));
        AlgElem i = fx.one.scaled(Scalar::of_int(Q, 3));
        AlgElem fm(fx.alg), im(fx.alg);
        for (int c = 0; c < 4; ++c) {
            fm.set_coord(c, f.coord(c) * t);
            im.set_coord(c, i.coord(c) * t);
        }
        TriElem e = matrix_exp_triangular(fm, im, fx.one);
        // x = t·3 + t^2·(2·3) on the diagonal
        RingElem expect = RingElem::parse(R, "3t + 6t^2");
        CHECK(e.b.coord(0) == expect);
        CHECK(e.b.coord(3) == expect);
        CHECK(e.b.coord(1).is_zero());
    }
}

TEST_CASE("matrix gauge conjugation preserves polarizations") {
    auto R = ArtinRing::t_adic(Q, 4); // k[t]/t^5
    MatFix fx(R);
    std::mt19937 rng(13);
    TriElem P{fx.E21, fx.E21.scaled(Scalar::of_int(Q, 2))};
    REQUIRE(tri_bracket(P, P).is_zero());
    for (int trial = 0; trial < 10; ++trial) {
        AlgElem f = random_homog(fx, R, rng, 0);
        AlgElem i = random_homog(fx, R, rng, 0);
        TriElem A{f, i};
        TriElem Pc = matrix_gauge_conjugate(P, A, fx.one);
        CHECK(tri_bracket(Pc, Pc).is_zero());
        // independent cross-check: conjugation by the entrywise matrix exponential
        Mat2 eA = mat2_exp(mat2_of_tri(A), fx.one);
        Mat2 eAm = mat2_exp(mat2_of_tri(TriElem{-A.a, -A.b}), fx.one);
        Mat2 direct = mat2_mul(eA, mat2_mul(mat2_of_tri(P), eAm));
        CHECK(mat2_equal(mat2_of_tri(Pc), direct));
    }
    SUBCASE("A = 0 fixes P") {
        AlgElem zero(fx.alg);
        TriElem Pc = matrix_gauge_conjugate(P, TriElem{zero, zero}, fx.one);
        CHECK(Pc == P);
    }
    SUBCASE("non-polarization is rejected") {
        TriElem bad{fx.E12, fx.E21}; // [E12,E12] = 0 but [E12,E21]+[E21,E12] != 0
        AlgElem zero(fx.alg);
        CHECK_THROWS_AS(matrix_gauge_conjugate(bad, TriElem{zero, zero}, fx.one), precondition_error);
    }
}

TEST_CASE("generic dgla contract on the matrix instance") {
    auto R = ArtinRing::t_adic(Q, 4); // nilpotency order 5
    MatFix fx(R);
    TriElem P{fx.E21, fx.E21};
    DgLaOps<TriElem> L = tri_dgla_ops(P, R, Q);
    std::mt19937 rng(17);

    SUBCASE("mc_residual basics") {
        AlgElem zero(fx.alg);
        TriElem z{zero, zero};
        CHECK(L.is_zero(mc_residual(L, z)));
        // alpha = t·gamma with d(gamma)=0 over a square-zero ring
        auto R2 = ArtinRing::t_adic(Q, 1);
        MatFix fx2(R2);
        TriElem P2{fx2.E21, fx2.E21};
        DgLaOps<TriElem> L2 = tri_dgla_ops(P2, R2, Q);
        RingElem t2 = RingElem::parse(R2, "t");
        AlgElem gamma(fx2.alg);
        gamma.set_coord(2, t2); // t·E21: degree 1, d(E21) = [P,E21] = 0
        TriElem alpha{gamma, AlgElem(fx2.alg)};
        CHECK(L2.is_zero(mc_residual(L2, alpha)));
    }

    SUBCASE("gauge_infinitesimal formulas") {
        AlgElem zero(fx.alg);
        TriElem z{zero, zero};
        TriElem beta{random_homog(fx, R, rng, 0), random_homog(fx, R, rng, 0)};
        // beta = 0 -> 0
        CHECK(L.is_zero(gauge_infinitesimal(L, z, z)));
        // alpha = 0 -> -d beta
        TriElem g = gauge_infinitesimal(L, beta, z);
        CHECK(g == L.scale(L.diff(beta), -Scalar::one(Q)));
    }

    SUBCASE("gauge_exponential preserves MC solutions") {
        for (int trial = 0; trial < 8; ++trial) {
            TriElem beta{random_homog(fx, R, rng, 0), random_homog(fx, R, rng, 0)};
            // alpha = 0 is an MC solution; so is any conjugated polarization difference
            AlgElem zero(fx.alg);
            TriElem alpha{zero, zero};
            TriElem moved = gauge_exponential(L, beta, alpha);
            CHECK(L.is_zero(mc_residual(L, moved)));
        }
    }

    SUBCASE("beta = 0 fixes alpha; square-zero ring gives the three-term formula") {
        auto R2 = ArtinRing::t_adic(Q, 1); // t^2 = 0
        MatFix fx2(R2);
        TriElem P2{fx2.E21, fx2.E21};
        DgLaOps<TriElem> L2 = tri_dgla_ops(P2, R2, Q);
        std::mt19937 rng2(3);
        TriElem alpha{random_homog(fx2, R2, rng2, 1), random_homog(fx2, R2, rng2, 1)};
        TriElem beta{random_homog(fx2, R2, rng2, 0), random_homog(fx2, R2, rng2, 0)};
        AlgElem zero(fx2.alg);
        CHECK(gauge_exponential(L2, TriElem{zero, zero}, alpha) == alpha);
        TriElem expect = L2.add(alpha, gauge_infinitesimal(L2, beta, alpha));
        CHECK(gauge_exponential(L2, beta, alpha) == expect);
    }
}

TEST_CASE("matrix-oracle cohomology by hand") {
    // d = ad(P) with P = (E21, 0): on the a-slot, d(a,b) = ([E21,a], [b,E21]+[E21,b]).
    // For x = (E11, 0): [E21, E11] = E21 ≠ 0, so x is not closed; x = (E11+E22, 0) is.
    auto R = ArtinRing::t_adic(Q, 2);
    MatFix fx(R);
    AlgElem zero(fx.alg);
    TriElem P{fx.E21, zero};
    DgLaOps<TriElem> L = tri_dgla_ops(P, R, Q);
    TriElem x1{fx.E11, zero};
    CHECK(!L.is_zero(L.diff(x1)));
    TriElem x2{fx.one, zero};
    CHECK(L.is_zero(L.diff(x2)));
    // d^2 = 0 on random elements
    std::mt19937 rng(19);
    for (int trial = 0; trial < 10; ++trial) {
        TriElem y{random_elem(fx, R, rng, false), random_elem(fx, R, rng, false)};
        CHECK(L.is_zero(L.diff(L.diff(y))));
    }
}
