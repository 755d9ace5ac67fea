#include "ainf/cohomology.hpp"

namespace ainf {

std::string HBasisElem::label(const GradedSpace& sp) const {
    std::string out_name = comap ? sp.dual_name(out) : sp.basis(out).name;
    if (comap)
        return "i_{" + std::to_string(k) + "," + std::to_string(l) + "}(" + tuple_names(sp, in) + ") -> " + out_name;
    return "f_" + std::to_string(k) + "(" + tuple_names(sp, in) + ") -> " + out_name;
}

std::vector<HBasisElem> h_basis(const SpacePtr& sp, int W, int n) {
    std::vector<HBasisElem> out;
    const int d = sp->dim();
    for (int k = 1; k <= W; ++k) {
        long long nt = tuple_count(k, d);
        for (long long r = 0; r < nt; ++r) {
            Tuple t = tuple_unrank(r, k, d);
            for (int o = 0; o < d; ++o)
                if (sp->susp(o) - susp_sum(*sp, t, 0, t.size()) == -n) out.push_back({false, k, 0, t, o});
        }
    }
    for (int k = 0; k + 2 <= W; ++k)
        for (int l = 0; k + l + 2 <= W; ++l) {
            long long nt = tuple_count(k + l + 1, d);
            for (long long r = 0; r < nt; ++r) {
                Tuple t = tuple_unrank(r, k + l + 1, d);
                int in_susp = susp_sum(*sp, t, 0, t.size());
                for (int o = 0; o < d; ++o)
                    if (sp->dual_susp(o) - in_susp == 1 - n) out.push_back({true, k, l, t, o});
            }
        }
    return out;
}

HElem h_basis_elem(const SpacePtr& sp, const RingPtr& R, int W, int n, const HBasisElem& b) {
    HElem x = HElem::zero(sp, R, W, n);
    if (b.comap)
        x.i.set_entry(b.k, b.l, b.in, b.out, RingElem::one(R));
    else
        x.f.set_entry(b.k, b.in, b.out, RingElem::one(R));
    return x;
}

std::vector<Scalar> h_coordinates(const HElem& x, const std::vector<HBasisElem>& basis) {
    const FieldSpec& f = x.space()->field();
    std::vector<Scalar> out;
    out.reserve(basis.size());
    for (const HBasisElem& b : basis) {
        RingElem v = b.comap ? x.i.entry(b.k, b.l, b.in, b.out) : x.f.entry(b.k, b.in, b.out);
        out.push_back(v.coeff(0));
        // trivial ring: nothing beyond the unit monomial
        if (v.terms().size() > (v.coeff(0).is_zero() ? 0u : 1u))
            throw structural_error("h_coordinates expects a base-field element");
    }
    (void)f;
    return out;
}

LinearMapMatrix h_differential_matrix(const Polarization& P, int n) {
    const SpacePtr& sp = P.space();
    const RingPtr& R = P.ring();
    const int W = P.weight();
    auto dom = h_basis(sp, W, n);
    auto cod = h_basis(sp, W, n + 1);
    LinearMapMatrix M{{}, {}, ExactMatrix(sp->field(), static_cast<int>(cod.size()), static_cast<int>(dom.size())), 1};
    for (const auto& b : dom) M.domain_labels.push_back(b.label(*sp));
    for (const auto& b : cod) M.codomain_labels.push_back(b.label(*sp));
    for (int j = 0; j < static_cast<int>(dom.size()); ++j) {
        HElem x = h_basis_elem(sp, R, W, n, dom[static_cast<size_t>(j)]);
        HElem dx = h_differential(P, x, /*checked=*/true);
        std::vector<Scalar> col = h_coordinates(dx, cod);
        for (int i = 0; i < static_cast<int>(cod.size()); ++i) M.mat.at(i, j) = col[static_cast<size_t>(i)];
    }
    return M;
}

TangentResult tangent_space_degree(const Polarization& P, int degree) {
    PolarizationReport rep = check_polarization(P.D, P.I);
    if (!rep.ok()) throw precondition_error("tangent space needs a polarization");
    const SpacePtr& sp = P.space();
    const FieldSpec& fld = sp->field();
    const int W = P.weight();

    LinearMapMatrix d_n = h_differential_matrix(P, degree);
    LinearMapMatrix d_prev = h_differential_matrix(P, degree - 1);
    RankResult rk_n = rank_kernel_image(d_n.mat);
    RankResult rk_prev = rank_kernel_image(d_prev.mat);

    TangentResult out;
    out.degree = degree;
    out.dim_ker = static_cast<int>(rk_n.kernel_basis.size());
    out.dim_im = rk_prev.rank;
    int ambient = d_n.mat.cols();
    // image vectors live in the same coordinates as the kernel (degree-n basis)
    out.dim = quotient_dimension(rk_n.kernel_basis, rk_prev.image_basis, fld, ambient);

    // representatives: kernel vectors extending the image span
    auto basis_n = h_basis(sp, W, degree);
    std::vector<std::vector<Scalar>> span = rk_prev.image_basis;
    int rank = span_rank(span, fld, ambient);
    for (const auto& v : rk_n.kernel_basis) {
        if (static_cast<int>(out.representatives.size()) == out.dim) break;
        span.push_back(v);
        int r2 = span_rank(span, fld, ambient);
        if (r2 == rank) {
            span.pop_back();
            continue;
        }
        rank = r2;
        HElem rep_elem = HElem::zero(sp, P.ring(), W, degree);
        for (int j = 0; j < ambient; ++j) {
            const Scalar& c = v[static_cast<size_t>(j)];
            if (c.is_zero()) continue;
            rep_elem = rep_elem + h_basis_elem(sp, P.ring(), W, degree, basis_n[static_cast<size_t>(j)]).scaled(c);
        }
        out.representatives.push_back(std::move(rep_elem));
    }
    return out;
}

std::vector<TangentResult> tangent_space(const Polarization& P, int deg_lo, int deg_hi) {
    if (deg_lo > deg_hi) throw structural_error("empty degree range");
    std::vector<TangentResult> out;
    for (int n = deg_lo; n <= deg_hi; ++n) out.push_back(tangent_space_degree(P, n));
    return out;
}

} // namespace ainf
