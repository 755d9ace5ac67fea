#include "ainf/deform.hpp"

namespace ainf {

Coder extend_scalars(const Coder& c, const RingPtr& R) {
    if (c.ring()->kind() != ArtinRing::Kind::trivial)
        throw structural_error("extend_scalars expects a base-field object");
    Coder out(c.space(), R, c.weight(), c.sdeg());
    for (auto& [m, kt] : c.slices())
        for (int k = 1; k <= c.weight(); ++k)
            if (const FlatTable* ft = kt.arity(k))
                for (long long x = 0; x < static_cast<long long>(ft->size()); ++x)
                    out.add_scalar(k, 0, x, (*ft)[static_cast<size_t>(x)]);
    out.prune();
    return out;
}

BimodMap extend_scalars(const BimodMap& m, const RingPtr& R) {
    if (m.ring()->kind() != ArtinRing::Kind::trivial)
        throw structural_error("extend_scalars expects a base-field object");
    BimodMap out(m.space(), R, m.weight(), m.sdeg(), m.src(), m.dst());
    for (auto& [mono, bt] : m.slices())
        for (auto& [kl, ft] : bt)
            for (long long x = 0; x < static_cast<long long>(ft.size()); ++x)
                out.add_scalar(kl.first, kl.second, 0, x, ft[static_cast<size_t>(x)]);
    out.prune();
    return out;
}

DeformationDatum::DeformationDatum(Polarization base_, RingPtr R_, HElem pert)
    : base(std::move(base_)), R(std::move(R_)), perturbation(std::move(pert)) {
    check_same_ring(perturbation.ring(), R);
    check_same_space(base.space(), perturbation.space());
    if (base.weight() != perturbation.weight()) throw structural_error("truncation weight mismatch");
    if (!perturbation.in_maximal_ideal())
        throw structural_error("perturbation must have coefficients in the maximal ideal");
    if (!perturbation.is_zero() && perturbation.hdeg != 1)
        throw structural_error("perturbation must sit in (h⊗m)^1");
}

Polarization DeformationDatum::base_R() const {
    return Polarization(extend_scalars(base.D, R), extend_scalars(base.I, R));
}

Coder DeformationDatum::deformed_D() const { return extend_scalars(base.D, R) + perturbation.f; }
BimodMap DeformationDatum::deformed_I() const { return extend_scalars(base.I, R) + perturbation.i; }

DeformationDatum extend_trivially(const Polarization& P, const RingPtr& R) {
    return DeformationDatum(P, R, HElem::zero(P.space(), R, P.weight(), 1));
}

HElem mc_check(const DeformationDatum& datum) {
    DgLaOps<HElem> ops = h_dgla_ops(datum.base_R());
    return mc_residual(ops, datum.perturbation);
}

std::pair<DeformationDatum, TrivializationWitness> gauge_act_h(const Polarization& P, const RingPtr& R,
                                                               const HElem& beta) {
    check_same_space(P.space(), beta.space());
    check_same_ring(beta.ring(), R);
    if (!beta.in_maximal_ideal()) throw precondition_error("gauge generator must have coefficients in m");
    if (!beta.is_zero() && beta.hdeg != 0) throw precondition_error("gauge generator must sit in (h⊗m)^0");
    const FieldSpec& fld = P.space()->field();
    const int W = P.weight();
    const int nil = R->nilpotency_index();
    const Coder& f = beta.f;
    const BimodMap& i = beta.i;
    Coder D_R = extend_scalars(P.D, R);
    BimodMap I_R = extend_scalars(P.I, R);

    auto invfact = [&](long n) {
        Scalar v = Scalar::one(fld);
        for (long j = 2; j <= n; ++j) {
            Scalar jj = Scalar::of_int(fld, j);
            if (jj.is_zero()) throw structural_error("factorial not invertible over " + fld.to_string());
            v = v / jj;
        }
        return v;
    };

    // D-slot: e^{ad f}(D_R)
    Coder Dg = D_R;
    {
        Coder adn = D_R;
        for (int n = 1; n < nil; ++n) {
            adn = coder_bracket(f, adn);
            Dg = Dg + adn.scaled(invfact(n));
        }
    }
    // I-slot: Σ (δ_f)^n(I_R)/n! − Σ_{k,l} 1/(k!(l+1)!) δ_{ad(f)^k D_R}((δ_f)^l i)
    BimodMap Ig = I_R;
    {
        BimodMap dn = I_R;
        for (int n = 1; n < nil; ++n) {
            dn = delta_f(f, dn);
            Ig = Ig + dn.scaled(invfact(n));
        }
        Coder adk = D_R; // ad(f)^k(D_R)
        for (int k = 0; k + 1 < nil; ++k) {
            BimodMap dl = i; // (δ_f)^l(i)
            for (int l = 0; k + l + 1 < nil; ++l) {
                Scalar c = invfact(k) * invfact(l + 1);
                Ig = Ig - delta_f(adk, dl).scaled(c);
                dl = delta_f(f, dl);
            }
            adk = coder_bracket(f, adk);
        }
    }

    // witness: λ^{-1} = e^f, ρ = Σ_l −1/(l+1)! (δ_f)^l(i)
    Coder lambda = coder_exp(-f);
    BimodMap rho(P.space(), R, W, i.sdeg(), ModKind::A, ModKind::Adual);
    {
        BimodMap dl = i;
        for (int l = 0; l + 1 < nil; ++l) {
            rho = rho - dl.scaled(invfact(l + 1));
            dl = delta_f(f, dl);
        }
    }

    HElem pert(Dg - D_R, Ig - I_R, 1);
    DeformationDatum datum(P, R, std::move(pert));
    return {std::move(datum), TrivializationWitness{std::move(lambda), std::move(rho)}};
}

EquivalenceReport check_trivial_equivalence(const DeformationDatum& datum, const TrivializationWitness& w) {
    EquivalenceReport rep;
    const Coder& lambda = w.lambda;
    if (lambda.sdeg() != 0) throw precondition_error("witness λ must have suspended degree 0");
    if (!morphism_invertible(lambda)) throw precondition_error("witness λ must be an automorphism");
    const int W = datum.base.weight();
    Coder D_R = extend_scalars(datum.base.D, datum.R);
    BimodMap I_R = extend_scalars(datum.base.I, datum.R);
    Coder Dp = datum.deformed_D();
    BimodMap Ip = datum.deformed_I();

    // (i) λ∘D' = D_R∘λ
    Coder lhs_i = morphism_after_coder(lambda, Dp);
    Coder rhs_i = compose_with_morphism(D_R, lambda);
    Coder di = lhs_i - rhs_i;
    rep.cond_i = di.is_zero();
    if (!rep.cond_i) rep.defect_arity = di.first_nonzero_arity();

    // (ii) I' − λ̃∘(I_R)^λ∘λ̄ = D'^{(A⊗R)*}∘ρ + ρ∘D'^{A⊗R}
    BimodMap sandwich = compose_bimod(tilde_lambda(lambda, W), compose_bimod(induce_along(lambda, I_R), bar_lambda(lambda, W)));
    BimodMap lhs_ii = Ip - sandwich;
    BimodMap rhs_ii = comap_differential(Dp, Dp, w.rho);
    BimodMap dii = lhs_ii - rhs_ii;
    rep.cond_ii = dii.is_zero();
    if (!rep.cond_ii)
        if (auto kl = dii.first_nonzero_kl()) rep.defect_kl = *kl;
    return rep;
}

HElem iterate_ad(const Polarization& P, const RingPtr& R, const HElem& beta, int N) {
    if (N < R->nilpotency_index() - 1)
        throw precondition_error("iterate_ad needs N >= nilpotency index");
    const FieldSpec& fld = P.space()->field();
    Polarization P_R = Polarization(extend_scalars(P.D, R), extend_scalars(P.I, R));
    HElem acc = P_R.as_helem();
    HElem adn = acc;
    Scalar fact = Scalar::one(fld);
    for (int n = 1; n <= N; ++n) {
        adn = h_bracket(beta, adn);
        Scalar nn = Scalar::of_int(fld, n);
        if (nn.is_zero()) throw structural_error("factorial not invertible over " + fld.to_string());
        fact = fact / nn;
        acc = acc + adn.scaled(fact);
    }
    return acc;
}

} // namespace ainf
