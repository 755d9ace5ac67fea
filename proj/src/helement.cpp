#include "ainf/helement.hpp"

namespace ainf {

HElem::HElem(Coder f_, BimodMap i_, int hdeg_) : f(std::move(f_)), i(std::move(i_)), hdeg(hdeg_) {
    check_same_space(f.space(), i.space());
    check_same_ring(f.ring(), i.ring());
    if (f.weight() != i.weight()) throw structural_error("truncation weight mismatch in h-element");
    if (i.src() != ModKind::A || i.dst() != ModKind::Adual)
        throw structural_error("h-element comap must map T^A A to T^{A*} A");
    if (!f.is_zero() && f.sdeg() != -hdeg)
        throw structural_error("h-element grading: coder part must have suspended degree -n");
    if (!i.is_zero() && i.sdeg() != 1 - hdeg)
        throw structural_error("h-element grading: comap part must have suspended degree 1-n");
}

HElem HElem::zero(const SpacePtr& sp, const RingPtr& R, int W, int hdeg) {
    return HElem(Coder(sp, R, W, -hdeg), BimodMap(sp, R, W, 1 - hdeg, ModKind::A, ModKind::Adual), hdeg);
}

HElem HElem::of_coder(const Coder& f) {
    return HElem(f, BimodMap(f.space(), f.ring(), f.weight(), 1 + f.sdeg(), ModKind::A, ModKind::Adual),
                 -f.sdeg());
}

HElem HElem::of_comap(const BimodMap& i) {
    return HElem(Coder(i.space(), i.ring(), i.weight(), i.sdeg() - 1), i, 1 - i.sdeg());
}

HElem HElem::operator+(const HElem& o) const {
    if (hdeg != o.hdeg && !is_zero() && !o.is_zero()) throw structural_error("h-degree mismatch in sum");
    return HElem(f + o.f, i + o.i, is_zero() ? o.hdeg : hdeg);
}

HElem HElem::operator-(const HElem& o) const { return *this + (-o); }
HElem HElem::operator-() const { return HElem(-f, -i, hdeg); }
HElem HElem::scaled(const Scalar& c) const { return HElem(f.scaled(c), i.scaled(c), hdeg); }

HElem HElem::scaled_h(const RingElem& r) const {
    auto d = r.homogeneous_degree();
    if (!d) throw structural_error("scaling ring element must be homogeneous");
    return HElem(f.scaled_h(r), i.scaled_h(r), hdeg - *d);
}

HElem h_bracket(const HElem& x, const HElem& y) {
    Coder fg = coder_bracket(x.f, y.f);
    BimodMap dj = delta_f(x.f, y.i);
    BimodMap di = delta_f(y.f, x.i);
    int tw = sign_block_move(x.f.sdeg(), y.f.sdeg());
    BimodMap comap = tw < 0 ? dj + di : dj - di;
    return HElem(std::move(fg), std::move(comap), x.hdeg + y.hdeg);
}

Polarization::Polarization(Coder D_, BimodMap I_) : D(std::move(D_)), I(std::move(I_)) {
    if (!D.is_zero() && D.sdeg() != -1)
        throw structural_error("A∞ structure must have suspended degree -1");
    if (!I.is_zero() && I.sdeg() != 0) throw structural_error("∞ inner product must have suspended degree 0");
    if (D.first_nonzero_arity() == 0 && !D.is_zero())
        throw structural_error("empty coderivation");
}

PolarizationReport check_polarization(const Coder& D, const BimodMap& I, bool inner_present) {
    PolarizationReport rep;
    rep.inner_present = inner_present;
    Coder dd = coder_bracket(D, D);
    rep.is_ainf = dd.is_zero();
    if (!rep.is_ainf) rep.fail_arity = dd.first_nonzero_arity();
    if (inner_present) {
        BimodMap di = delta_f(D, I);
        rep.is_inner = di.is_zero();
        if (!rep.is_inner)
            if (auto kl = di.first_nonzero_kl()) rep.fail_kl = *kl;
    }
    return rep;
}

HElem h_differential(const Polarization& P, const HElem& x, bool checked) {
    if (!checked) {
        PolarizationReport rep = check_polarization(P.D, P.I);
        if (!rep.ok()) throw precondition_error("h differential needs a polarization ([P,P] != 0)");
    }
    return h_bracket(P.as_helem(), x);
}

bool cyclic_check(const Coder& f, const BimodMap& I) { return delta_f(f, I).is_zero(); }

DgLaOps<HElem> h_dgla_ops(const Polarization& P_R) {
    DgLaOps<HElem> ops;
    HElem p = P_R.as_helem();
    ops.bracket = [](const HElem& a, const HElem& b) { return h_bracket(a, b); };
    ops.diff = [p](const HElem& x) { return h_bracket(p, x); };
    ops.add = [](const HElem& a, const HElem& b) { return a + b; };
    ops.scale = [](const HElem& a, const Scalar& c) { return a.scaled(c); };
    ops.is_zero = [](const HElem& a) { return a.is_zero(); };
    ops.in_max_ideal = [](const HElem& a) { return a.in_maximal_ideal(); };
    ops.degree = [](const HElem& a) -> std::optional<int> { return a.hdeg; };
    ops.field = P_R.space()->field();
    ops.nilpotency = P_R.ring()->nilpotency_index();
    return ops;
}

} // namespace ainf
