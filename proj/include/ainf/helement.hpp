#pragma once

#include "ainf/bimod.hpp"
#include "ainf/dgla.hpp"

namespace ainf {

/// Element of h^n = Coder(TA)^{-n} ⊕ Comap(T^A A, T^{A*}A)^{1-n}: a pair
/// (f, i) with f of total suspended degree -n and i of degree 1-n.
struct HElem {
    Coder f;
    BimodMap i;
    int hdeg = 0;

    HElem(Coder f_, BimodMap i_, int hdeg_);
    static HElem zero(const SpacePtr& sp, const RingPtr& R, int W, int hdeg);
    /// Coder-only inclusion f ↦ (f, 0) — first map of eq. (maps).
    static HElem of_coder(const Coder& f);
    /// Comap-only inclusion.
    static HElem of_comap(const BimodMap& i);

    const SpacePtr& space() const { return f.space(); }
    const RingPtr& ring() const { return f.ring(); }
    int weight() const { return f.weight(); }

    bool is_zero() const { return f.is_zero() && i.is_zero(); }
    bool in_maximal_ideal() const { return f.in_maximal_ideal() && i.in_maximal_ideal(); }

    HElem operator+(const HElem& o) const;
    HElem operator-(const HElem& o) const;
    HElem operator-() const;
    HElem scaled(const Scalar& c) const;
    HElem scaled_h(const RingElem& r) const; // homogeneous r, shifts hdeg by -deg r
    bool operator==(const HElem& o) const { return f == o.f && i == o.i; }
};

/// [(f,i),(g,j)] = ([f,g], δ_f(j) − (−1)^{|f||g|} δ_g(i)).
HElem h_bracket(const HElem& x, const HElem& y);

/// Projection (f,i) ↦ f — second map of eq. (maps); a chain map onto the
/// Hochschild dgLa.
inline Coder project_coder(const HElem& x) { return x.f; }

/// A∞ structure with ∞ inner product: a degree-1 pair squaring to zero.
struct Polarization {
    Coder D; // suspended degree -1
    BimodMap I; // degree 0
    Polarization(Coder D_, BimodMap I_);
    HElem as_helem() const { return HElem(D, I, 1); }
    const SpacePtr& space() const { return D.space(); }
    const RingPtr& ring() const { return D.ring(); }
    int weight() const { return D.weight(); }
};

struct PolarizationReport {
    bool is_ainf = false;
    bool is_inner = false;
    bool inner_present = true; // comap block supplied at all
    int fail_arity = 0;        // smallest arity where [D,D] != 0
    std::pair<int, int> fail_kl{-1, -1}; // lex-first (k,l) where δ_D(I) != 0
    bool ok() const { return is_ainf && (!inner_present || is_inner); }
};

/// Prop. 3.1: (D,I) is an A∞ structure with ∞ inner product iff
/// [(D,I),(D,I)] = 0, i.e. [D,D] = 0 and δ_D(I) = 0 up to weight W.
PolarizationReport check_polarization(const Coder& D, const BimodMap& I, bool inner_present = true);

/// d(f,i) = [(D,I),(f,i)]; requires P to actually be a polarization unless
/// `checked` says it was validated before (tangent-space assembly reuses it).
HElem h_differential(const Polarization& P, const HElem& x, bool checked = false);

/// Cyclic Hochschild cochain test: δ_f(I) = 0 up to weight W.
bool cyclic_check(const Coder& f, const BimodMap& I);

/// The generic dgLa instance for h with differential ad(P).
DgLaOps<HElem> h_dgla_ops(const Polarization& P_R);

} // namespace ainf
