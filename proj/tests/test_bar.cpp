#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"

using namespace ainf;
using namespace ainf::testing;

namespace {
const FieldSpec Q = FieldSpec::rationals();
}

TEST_CASE("insertion term counts match the appendix lists") {
    auto count = [](int k, int l) { return enumerate_insertion_terms(k, l, 10).size(); };
    CHECK(count(0, 0) == 2);
    CHECK(count(1, 0) == 5);
    CHECK(count(0, 1) == 5);
    CHECK(count(2, 0) == 9);
    CHECK(count(0, 2) == 9);
    CHECK(count(1, 1) == 10);
}

TEST_CASE("no insertion block contains both special inputs") {
    for (int k = 0; k <= 3; ++k)
        for (int l = 0; k + l + 2 <= 6; ++l) {
            const int P = k + l + 2;
            for (const auto& t : enumerate_insertion_terms(k, l, 8)) {
                bool has1 = false, has2 = false;
                for (int j = 0; j < t.n; ++j) {
                    int pos = (t.position - 1 + j) % P + 1;
                    has1 |= pos == k + 1;
                    has2 |= pos == P;
                }
                CHECK(!(has1 && has2));
                // the (2,0) exclusion from the appendix: the block {c,d}
                if (k == 2 && l == 0) CHECK(!(t.n == 2 && t.position == 3));
            }
        }
}

TEST_CASE("enumeration is deterministic and duplicate-free") {
    auto a = enumerate_insertion_terms(1, 1, 6);
    auto b = enumerate_insertion_terms(1, 1, 6);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) CHECK(a[i].line() == b[i].line());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = i + 1; j < a.size(); ++j) CHECK(a[i].line() != a[j].line());
}

TEST_CASE("coder bracket basics") {
    auto R = ArtinRing::trivial(Q);
    auto sp = space_kx2(Q);
    const int W = 4;
    Coder D = product_coder(sp, R, W, mult_kx2());
    Coder zero(sp, R, W, -1);

    CHECK(coder_bracket(D, zero).is_zero());
    // associative product: [D,D] = 2 D^2 = 0
    CHECK(coder_bracket(D, D).is_zero());
}

TEST_CASE("one-dimensional [f,f] vanishes by associativity") {
    auto R = ArtinRing::trivial(Q);
    auto sp = space_point(Q);
    Coder f(sp, R, 4, -1);
    f.set_entry(2, {0, 0}, 0, RingElem::one(R));
    Coder br = coder_bracket(f, f);
    CHECK(br.is_zero()); // [f,f]_3(e,e,e) = 2(f(f(e,e),e) - f(e,f(e,e))) = 0
}

TEST_CASE("graded antisymmetry and Jacobi for the coder bracket") {
    auto R = ArtinRing::trivial(Q);
    auto sp = make_space(Q, {{"a", 0}, {"b", 1}});
    const int W = 4;
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> degd(-2, 1);
    for (int trial = 0; trial < 30; ++trial) {
        int df = degd(rng), dg = degd(rng), dh = degd(rng);
        Coder f = random_coder(sp, R, W, df, rng);
        Coder g = random_coder(sp, R, W, dg, rng);
        Coder h = random_coder(sp, R, W, dh, rng);
        // [f,g] = -(-1)^{|f||g|}[g,f]
        Coder lhs = coder_bracket(f, g);
        Coder rhs = coder_bracket(g, f).scaled(Scalar::of_int(Q, -sign_block_move(df, dg)));
        CHECK(lhs == rhs);
        // graded Jacobi: [f,[g,h]] = [[f,g],h] + (-1)^{|f||g|}[g,[f,h]]
        Coder j1 = coder_bracket(f, coder_bracket(g, h));
        Coder j2 = coder_bracket(coder_bracket(f, g), h);
        Coder j3 = coder_bracket(g, coder_bracket(f, h)).scaled(Scalar::of_int(Q, sign_block_move(df, dg)));
        CHECK(j1 == j2 + j3);
    }
}

TEST_CASE("delta_f degenerate cases") {
    auto R = ArtinRing::trivial(Q);
    auto sp = space_kx2(Q);
    const int W = 4;
    Coder D = product_coder(sp, R, W, mult_kx2());
    BimodMap I = pairing_comap(sp, R, W, eps_pairing());
    Coder zf(sp, R, W, -1);
    BimodMap zi(sp, R, W, 0, ModKind::A, ModKind::Adual);
    CHECK(delta_f(zf, I).is_zero());
    CHECK(delta_f(D, zi).is_zero());
}

TEST_CASE("delta_D(I) = 0 for honest Frobenius pairs (invariance)") {
    auto R = ArtinRing::trivial(Q);
    const int W = 4;

    SUBCASE("one-dimensional trace") {
        auto sp = space_point(Q);
        Coder D = product_coder(sp, R, W, {{0}});
        BimodMap I = pairing_comap(sp, R, W, {{1}});
        CHECK(delta_f(D, I).is_zero());
    }
    SUBCASE("k[x]/x^2 with the ε-pairing") {
        auto sp = space_kx2(Q);
        Coder D = product_coder(sp, R, W, mult_kx2());
        BimodMap I = pairing_comap(sp, R, W, eps_pairing());
        CHECK(delta_f(D, I).is_zero());
    }
}

TEST_CASE("non-invariant pairing is detected") {
    auto R = ArtinRing::trivial(Q);
    auto sp = space_kx2(Q);
    const int W = 4;
    Coder D = product_coder(sp, R, W, mult_kx2());
    // note: <1,1>=1 alone would NOT do: it is χ⊗χ for the augmentation
    // character and hence genuinely invariant. <x,x>=1 breaks invariance.
    BimodMap I = pairing_comap(sp, R, W, {{0, 0}, {0, 1}}); // <x,x> = 1 only
    BimodMap d = delta_f(D, I);
    CHECK(!d.is_zero());
    auto kl = d.first_nonzero_kl();
    REQUIRE(kl.has_value());
    CHECK(kl->first + kl->second == 1); // defect shows at (1,0)/(0,1)
}

TEST_CASE("delta composition identity pins all signs") {
    // δ_f δ_g − (−1)^{|f||g|} δ_g δ_f = δ_{[f,g]} on random homogeneous data,
    // over an honestly graded space so Koszul transport is exercised.
    auto R = ArtinRing::trivial(Q);
    auto sp = make_space(Q, {{"a", 0}, {"b", 1}});
    const int W = 4;
    std::mt19937 rng(41);
    std::uniform_int_distribution<int> degd(-2, 1);
    for (int trial = 0; trial < 25; ++trial) {
        int df = degd(rng), dg = degd(rng), di = degd(rng);
        Coder f = random_coder(sp, R, W, df, rng);
        Coder g = random_coder(sp, R, W, dg, rng);
        BimodMap i = random_comap(sp, R, W, di, rng);
        BimodMap lhs = delta_f(f, delta_f(g, i));
        BimodMap tw = delta_f(g, delta_f(f, i)).scaled(Scalar::of_int(Q, sign_block_move(df, dg)));
        lhs = lhs - tw;
        BimodMap rhs = delta_f(coder_bracket(f, g), i);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("comap differential of the two-sided module structures") {
    // δ^{M,N}(F) with both structures induced from D equals δ_D(F) when |D| is odd.
    auto R = ArtinRing::trivial(Q);
    auto sp = space_kx2(Q);
    const int W = 4;
    Coder D = product_coder(sp, R, W, mult_kx2());
    std::mt19937 rng(5);
    BimodMap F = random_comap(sp, R, W, 0, rng);
    CHECK(comap_differential(D, D, F) == delta_f(D, F));
}

TEST_CASE("dual wrapping term shape <b, f_2(c,a)> at (1,0)") {
    // f with only f_2(x,x) = 1: the type-d term of (1,0) pairs b against f_2(c,a).
    auto R = ArtinRing::trivial(Q);
    auto sp = space_kx2(Q);
    const int W = 4;
    Coder f(sp, R, W, -1);
    f.set_entry(2, {1, 1}, 0, RingElem::one(R)); // f_2(x,x) = 1
    BimodMap I = pairing_comap(sp, R, W, eps_pairing());
    BimodMap d = compose_dual_side(f, I);
    // (1,0) on (a,b,c) = (x, x, x): only term <b, f_2(c,a)> = <x, f_2(x,x)> = <x,1> = 1 up to sign
    RingElem v = d.form(1, 0, {1, 1, 1});
    CHECK(!v.is_zero());
    // and on (a,b,c) = (1, x, x): f_2(c,a) = f_2(x,1) = 0, f_2(a,..) never fires inside compose_dual_side
    CHECK(d.form(1, 0, {0, 1, 1}).is_zero());
}

TEST_CASE("induced module actions and morphism machinery") {
    auto R = ArtinRing::trivial(Q);
    auto sp = space_kx2(Q);
    const int W = 4;
    Coder D = product_coder(sp, R, W, mult_kx2());
    BimodMap I = pairing_comap(sp, R, W, eps_pairing());
    Coder id = identity_morphism(sp, R, W);

    SUBCASE("identity morphism induces identities") {
        CHECK(induce_along(id, module_action(D, ModKind::A, W)) == module_action(D, ModKind::A, W));
        CHECK(induce_along(id, I) == I);
        // λ̄ and λ̃ of the identity are the identity bimodule maps
        BimodMap bl = bar_lambda(id, W);
        BimodMap tl = tilde_lambda(id, W);
        for (int b = 0; b < 2; ++b) {
            CHECK(bl.entry(0, 0, {b}, b) == RingElem::one(R));
            CHECK(tl.entry(0, 0, {b}, b) == RingElem::one(R));
        }
        CHECK(compose_bimod(tl, compose_bimod(induce_along(id, I), bl)) == I);
    }

    SUBCASE("scaling morphism multiplies components by c per algebra input") {
        Coder lam(sp, R, W, 0);
        Scalar c = Scalar::of_int(Q, 2);
        for (int b = 0; b < 2; ++b) lam.set_entry(1, {b}, b, RingElem::monomial(R, 0, c));
        BimodMap ind = induce_along(lam, I);
        // (0,0): no algebra inputs: unchanged
        CHECK(ind.form(0, 0, {0, 1}) == I.form(0, 0, {0, 1}));
        // module-structure (1,0) action scales by c (one algebra input)
        BimodMap actD = module_action(D, ModKind::A, W);
        BimodMap indD = induce_along(lam, actD);
        for (int a = 0; a < 2; ++a)
            for (int m = 0; m < 2; ++m)
                for (int o = 0; o < 2; ++o)
                    CHECK(indD.entry(1, 0, {a, m}, o) == actD.entry(1, 0, {a, m}, o) * c);
        // a comap (2,0)-component scales by c^2 (two algebra inputs)
        std::mt19937 rng(9);
        BimodMap F = random_comap(sp, R, W, 0, rng);
        BimodMap indF = induce_along(lam, F);
        long long n = tuple_count(3, 2);
        for (long long r = 0; r < n; ++r) {
            Tuple t = tuple_unrank(r, 3, 2);
            for (int o = 0; o < 2; ++o) CHECK(indF.entry(2, 0, t, o) == F.entry(2, 0, t, o) * c * c);
        }
    }

    SUBCASE("lambda_2 produces a ternary induced component from a binary structure") {
        // graded space so that a degree-0 morphism can carry a λ_2
        auto gsp = make_space(Q, {{"a", 0}, {"b", 1}});
        Coder lam = identity_morphism(gsp, R, W);
        lam.set_entry(2, {0, 0}, 1, RingElem::one(R)); // λ_2(a,a) = b
        Coder Dg(gsp, R, W, -1);
        Dg.set_entry(2, {1, 0}, 1, RingElem::one(R)); // binary structure with D(b,a) = b
        BimodMap actD = module_action(Dg, ModKind::A, W);
        BimodMap ind = induce_along(lam, actD);
        // (2,0)-component picks up D(λ_2(a,a), m) = D(b, a) = b
        CHECK(ind.entry(2, 0, {0, 0, 0}, 1) == RingElem::one(R));
        // λ̃ has a rotated component: (λ̃(x_1, ν))(z) includes ν(λ_2(z, x_1))
        BimodMap tl = tilde_lambda(lam, W);
        CHECK(!tl.entry(1, 0, {0, 1}, 0).is_zero()); // x_1 = a, ν = b*, z = a
    }
}

TEST_CASE("coLeibniz word action of an arity-1 coderivation on a length-3 word") {
    auto R = ArtinRing::trivial(Q);
    auto sp = space_kx2(Q);
    Coder f(sp, R, 4, 0);
    for (int b = 0; b < 2; ++b) f.set_entry(1, {b}, b, RingElem::monomial(R, 0, Scalar::of_int(Q, 3)));
    BWord w{1, 1, {0, 1, 0}};
    BWordSum s = apply_induced_coder(f, ModKind::A, w, 0);
    // one term per slot, all landing on the same word: 3+3+3 = 9
    REQUIRE(s.size() == 1);
    CHECK(s.begin()->second == Scalar::of_int(Q, 9));
}

TEST_CASE("exp of a nilpotent coderivation is an A-infinity automorphism") {
    auto Rt = ArtinRing::t_adic(Q, 2); // k[t]/t^3
    auto sp = space_kx2(Q);
    const int W = 4;
    std::mt19937 rng(31);
    Coder fk = random_coder(sp, Rt, W, 0, rng);
    Coder f = fk.scaled_h(RingElem::parse(Rt, "t")); // coefficients in m, total degree 0
    Coder ex = coder_exp(f);
    Coder exm = coder_exp(-f);
    CHECK(morphism_invertible(ex));
    CHECK(morphism_compose(ex, exm) == identity_morphism(sp, Rt, W));
    // exp(f) conjugates: λ∘D′ = D∘λ with D′ = e^{-ad f}-image is checked at the h-level later;
    // here: e^f e^f = e^{2f}
    CHECK(morphism_compose(ex, ex) == coder_exp(f + f));
}
