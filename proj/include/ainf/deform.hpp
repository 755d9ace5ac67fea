#pragma once

#include "ainf/helement.hpp"

namespace ainf {

/// Re-root a base-field object over an Artin ring (unit-monomial slice).
Coder extend_scalars(const Coder& c, const RingPtr& R);
BimodMap extend_scalars(const BimodMap& m, const RingPtr& R);

/// Deformation data over R: the trivial extension (D_R, I_R) of the base
/// polarization plus a perturbation (f,i) ∈ (h⊗m)^1; the derived pair is
/// (D_R + f, I_R + i).
struct DeformationDatum {
    Polarization base; // over k (trivial ring)
    RingPtr R;
    HElem perturbation; // over R, h-degree 1, coefficients in m

    DeformationDatum(Polarization base_, RingPtr R_, HElem pert);
    Polarization base_R() const; // (D_R, I_R)
    Coder deformed_D() const;    // D_R + f
    BimodMap deformed_I() const; // I_R + i
};

/// (D_R, I_R) with zero perturbation.
DeformationDatum extend_trivially(const Polarization& P, const RingPtr& R);

/// Residual dα + ½[α,α] = ½[(D_R+f, I_R+i),(D_R+f, I_R+i)]; zero iff the
/// datum is a deformation of (A, D, I) over R.
HElem mc_check(const DeformationDatum& datum);

/// Automorphism λ of T(A⊗R) and homotopy ρ realizing Def. 3.4.
struct TrivializationWitness {
    Coder lambda; // coalgebra automorphism components, suspended degree 0
    BimodMap rho; // comap homotopy, suspended degree 1
};

/// Gauge action of e^{ad(f,i)} on (D_R, I_R) by the closed formula
///   ad(f,i)^n(D_R,I_R) =
///     (ad(f)^n D_R, (δ_f)^n I_R − Σ_{k+l=n−1} n!/(k!(l+1)!) δ_{ad(f)^k D_R}((δ_f)^l i)),
/// together with the witness λ = e^{−f}, ρ = Σ_l −1/(l+1)! (δ_f)^l(i).
std::pair<DeformationDatum, TrivializationWitness> gauge_act_h(const Polarization& P, const RingPtr& R,
                                                               const HElem& beta);

struct EquivalenceReport {
    bool cond_i = false;  // λ∘D' = D_R∘λ
    bool cond_ii = false; // I' − λ̃∘(I_R)^λ∘λ̄ = D'^{A*}∘ρ + ρ∘D'^{A}
    int defect_arity = 0; // first arity where (i) fails
    std::pair<int, int> defect_kl{-1, -1}; // first (k,l) where (ii) fails
    bool ok() const { return cond_i && cond_ii; }
};

/// Checks both conditions of Def. 3.4 for a supplied witness, up to weight W.
EquivalenceReport check_trivial_equivalence(const DeformationDatum& datum, const TrivializationWitness& w);

/// Σ_{n≤N} ad(β)^n(D_R, I_R)/n! by literal bracket iteration (the comparison
/// target for gauge_act_h's closed formula).
HElem iterate_ad(const Polarization& P, const RingPtr& R, const HElem& beta, int N);

} // namespace ainf
