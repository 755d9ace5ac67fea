#pragma once

// Shared fixtures and random generators for the test suites.

#include <random>

#include "ainf/bimod.hpp"
#include "ainf/coder.hpp"

namespace ainf::testing {

inline SpacePtr make_space(const FieldSpec& f, std::vector<BasisElem> basis) {
    return std::make_shared<GradedSpace>(f, std::move(basis));
}

/// k[x]/x^2 with both basis elements in degree 0 (the ε-pairing has comap
/// degree 0 only for |x| = 0).
inline SpacePtr space_kx2(const FieldSpec& f) { return make_space(f, {{"1", 0}, {"x", 0}}); }

/// One-dimensional algebra k·e, e·e = e.
inline SpacePtr space_point(const FieldSpec& f) { return make_space(f, {{"e", 0}}); }

/// Associative product given by a multiplication table mult[i][j] = basis
/// index (or -1 for zero), as a coderivation of suspended degree -1.
inline Coder product_coder(const SpacePtr& sp, const RingPtr& R, int W,
                           const std::vector<std::vector<int>>& mult) {
    Coder D(sp, R, W, -1);
    RingElem one = RingElem::one(R);
    for (int i = 0; i < sp->dim(); ++i)
        for (int j = 0; j < sp->dim(); ++j)
            if (mult[static_cast<size_t>(i)][static_cast<size_t>(j)] >= 0)
                D.set_entry(2, {i, j}, mult[static_cast<size_t>(i)][static_cast<size_t>(j)], one);
    return D;
}

/// Pairing matrix B[i][j] = <e_i, e_j> as a comap with only a (0,0) form.
inline BimodMap pairing_comap(const SpacePtr& sp, const RingPtr& R, int W,
                              const std::vector<std::vector<int>>& B) {
    BimodMap I(sp, R, W, 0, ModKind::A, ModKind::Adual);
    for (int i = 0; i < sp->dim(); ++i)
        for (int j = 0; j < sp->dim(); ++j) {
            long v = B[static_cast<size_t>(i)][static_cast<size_t>(j)];
            if (v != 0) I.set_entry(0, 0, {i}, j, RingElem::monomial(R, 0, Scalar::of_int(sp->field(), v)));
        }
    return I;
}

/// k[x]/x^2 product table (1 is the unit).
inline std::vector<std::vector<int>> mult_kx2() { return {{0, 1}, {1, -1}}; }
/// ε-pairing on k[x]/x^2: <1,x> = <x,1> = 1.
inline std::vector<std::vector<int>> eps_pairing() { return {{0, 1}, {1, 0}}; }

/// Random homogeneous coderivation of the given total suspended degree over
/// the unit slice of the ring (base-field coefficients).
inline Coder random_coder(const SpacePtr& sp, const RingPtr& R, int W, int sdeg, std::mt19937& rng,
                          int denom = 1) {
    Coder f(sp, R, W, sdeg);
    std::uniform_int_distribution<long> val(-2, 2);
    std::uniform_int_distribution<int> keep(0, 2);
    for (int k = 1; k <= W; ++k) {
        long long n = tuple_count(k, sp->dim());
        for (long long r = 0; r < n; ++r) {
            Tuple t = tuple_unrank(r, k, sp->dim());
            for (int o = 0; o < sp->dim(); ++o) {
                if (sp->susp(o) - susp_sum(*sp, t, 0, t.size()) != sdeg) continue;
                if (keep(rng) == 0) continue;
                long v = val(rng);
                if (v == 0) continue;
                f.set_entry(k, t, o, RingElem::monomial(R, 0, Scalar::of_fraction(sp->field(), v, denom)));
            }
        }
    }
    return f;
}

/// Random homogeneous comap (A -> A* species) of the given suspended degree.
inline BimodMap random_comap(const SpacePtr& sp, const RingPtr& R, int W, int sdeg, std::mt19937& rng,
                             int denom = 1) {
    BimodMap F(sp, R, W, sdeg, ModKind::A, ModKind::Adual);
    std::uniform_int_distribution<long> val(-2, 2);
    std::uniform_int_distribution<int> keep(0, 2);
    for (int k = 0; k + 2 <= W; ++k)
        for (int l = 0; k + l + 2 <= W; ++l) {
            long long n = tuple_count(k + l + 1, sp->dim());
            for (long long r = 0; r < n; ++r) {
                Tuple t = tuple_unrank(r, k + l + 1, sp->dim());
                int in_susp = 0;
                for (size_t i = 0; i < t.size(); ++i) in_susp += sp->susp(t[i]); // src = A letters
                for (int o = 0; o < sp->dim(); ++o) {
                    if (sp->dual_susp(o) - in_susp != sdeg) continue;
                    if (keep(rng) == 0) continue;
                    long v = val(rng);
                    if (v == 0) continue;
                    F.set_entry(k, l, t, o, RingElem::monomial(R, 0, Scalar::of_fraction(sp->field(), v, denom)));
                }
            }
        }
    return F;
}

} // namespace ainf::testing
