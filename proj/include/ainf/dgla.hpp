#pragma once

#include <functional>
#include <optional>

#include "ainf/scalar.hpp"

namespace ainf {

/// Generic dgLa deformation contract. Instantiated by the h = Coder⊕Comap
/// algebra and by the 2x2 triangular matrix oracle; both share this single
/// code path for Maurer-Cartan residuals and gauge exponentials.
template <class E>
struct DgLaOps {
    std::function<E(const E&, const E&)> bracket;
    std::function<E(const E&)> diff;
    std::function<E(const E&, const E&)> add;
    std::function<E(const E&, const Scalar&)> scale;
    std::function<bool(const E&)> is_zero;
    std::function<bool(const E&)> in_max_ideal;
    std::function<std::optional<int>(const E&)> degree; // total degree when homogeneous
    FieldSpec field;
    int nilpotency = 1; // smallest n with m^n = 0
};

template <class E>
Scalar inv_factorial(const DgLaOps<E>& L, long n) {
    Scalar f = Scalar::one(L.field);
    for (long j = 2; j <= n; ++j) {
        Scalar jj = Scalar::of_int(L.field, j);
        if (jj.is_zero())
            throw structural_error("factorial 1/" + std::to_string(n) + "! not invertible over " +
                                   L.field.to_string());
        f = f / jj;
    }
    return f;
}

/// dα + ½[α,α] for α ∈ (g⊗m)^1.
template <class E>
E mc_residual(const DgLaOps<E>& L, const E& alpha) {
    if (!L.in_max_ideal(alpha)) throw precondition_error("MC element must have coefficients in the maximal ideal");
    auto deg = L.degree(alpha);
    if (!L.is_zero(alpha) && (!deg || *deg != 1))
        throw precondition_error("MC element must be homogeneous of total degree 1");
    E half_sq = L.scale(L.bracket(alpha, alpha), Scalar::of_fraction(L.field, 1, 2));
    return L.add(L.diff(alpha), half_sq);
}

/// β·α = [β,α] − dβ.
template <class E>
E gauge_infinitesimal(const DgLaOps<E>& L, const E& beta, const E& alpha) {
    auto db = L.degree(beta);
    auto da = L.degree(alpha);
    if (!L.is_zero(beta) && (!db || *db != 0)) throw precondition_error("gauge generator must have degree 0");
    if (!L.is_zero(alpha) && (!da || *da != 1)) throw precondition_error("gauge target must have degree 1");
    return L.add(L.bracket(beta, alpha), L.scale(L.diff(beta), -Scalar::one(L.field)));
}

/// e^β·α = Σ_k ad(β)^k(α)/k! − Σ_k ad(β)^k(dβ)/(k+1)!, a finite sum by
/// nilpotency; satisfies e^{ad β} d_α e^{−ad β} = d_{e^β·α} and preserves the
/// Maurer-Cartan set.
template <class E>
E gauge_exponential(const DgLaOps<E>& L, const E& beta, const E& alpha) {
    if (!L.in_max_ideal(beta)) throw structural_error("gauge generator must have nilpotent coefficients");
    auto db = L.degree(beta);
    if (!L.is_zero(beta) && (!db || *db != 0)) throw precondition_error("gauge generator must have degree 0");
    E acc = alpha;
    E ad_alpha = alpha;
    E ad_dbeta = L.diff(beta);
    for (int k = 1; k < L.nilpotency; ++k) {
        ad_alpha = L.bracket(beta, ad_alpha); // ad(β)^k α
        acc = L.add(acc, L.scale(ad_alpha, inv_factorial(L, k)));
    }
    for (int k = 0; k + 1 < L.nilpotency; ++k) {
        acc = L.add(acc, L.scale(ad_dbeta, -inv_factorial(L, k + 1)));
        ad_dbeta = L.bracket(beta, ad_dbeta);
    }
    return acc;
}

} // namespace ainf
