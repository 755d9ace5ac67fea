#include "ainf/triangular.hpp"

#include "ainf/coder.hpp"

namespace ainf {

GradedAlgebra::GradedAlgebra(SpacePtr basis, RingPtr ring, std::vector<Scalar> structure)
    : sp_(std::move(basis)), ring_(std::move(ring)), st_(std::move(structure)) {
    if (static_cast<long long>(st_.size()) != static_cast<long long>(dim()) * dim() * dim())
        throw structural_error("structure constant table has the wrong size");
    check_even_ring(ring_, "graded algebra coefficients");
}

std::shared_ptr<const GradedAlgebra> GradedAlgebra::matrix_algebra(const FieldSpec& f, const RingPtr& ring,
                                                                   const std::vector<int>& vdegs) {
    const int n = static_cast<int>(vdegs.size());
    std::vector<BasisElem> basis;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            basis.push_back({"E" + std::to_string(i + 1) + std::to_string(j + 1),
                             vdegs[static_cast<size_t>(i)] - vdegs[static_cast<size_t>(j)]});
    auto sp = std::make_shared<GradedSpace>(f, std::move(basis));
    const int d = n * n;
    std::vector<Scalar> st(static_cast<size_t>(d) * d * d, Scalar::zero(f));
    auto idx = [n](int i, int j) { return i * n + j; };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l)
                    if (j == k) {
                        // E_ij E_kl = E_il
                        size_t at = static_cast<size_t>((idx(i, j) * d + idx(k, l)) * d + idx(i, l));
                        st[at] = Scalar::one(f);
                    }
    return std::make_shared<GradedAlgebra>(sp, ring, std::move(st));
}

AlgElem::AlgElem(AlgebraPtr alg) : alg_(std::move(alg)) {
    c_.assign(static_cast<size_t>(alg_->dim()), RingElem(alg_->ring()));
}

AlgElem AlgElem::basis(const AlgebraPtr& alg, int i) {
    AlgElem e(alg);
    e.c_[static_cast<size_t>(i)] = RingElem::one(alg->ring());
    return e;
}

AlgElem AlgElem::unit_like(const AlgebraPtr& alg, const std::vector<int>& unit_coords) {
    AlgElem e(alg);
    for (int i : unit_coords) e.c_[static_cast<size_t>(i)] = RingElem::one(alg->ring());
    return e;
}

bool AlgElem::is_zero() const {
    for (auto& c : c_)
        if (!c.is_zero()) return false;
    return true;
}

bool AlgElem::in_maximal_ideal() const {
    for (auto& c : c_)
        if (!c.in_maximal_ideal()) return false;
    return true;
}

std::optional<int> AlgElem::homogeneous_degree() const {
    std::optional<int> deg;
    for (int i = 0; i < alg_->dim(); ++i) {
        const RingElem& c = c_[static_cast<size_t>(i)];
        for (auto& [m, s] : c.terms()) {
            int d = alg_->space()->degree(i) + alg_->ring()->mono_degree(m);
            if (deg && *deg != d) return std::nullopt;
            deg = d;
        }
    }
    return deg ? deg : std::optional<int>(0);
}

AlgElem AlgElem::operator+(const AlgElem& o) const {
    AlgElem e = *this;
    for (int i = 0; i < alg_->dim(); ++i) e.c_[static_cast<size_t>(i)] += o.c_[static_cast<size_t>(i)];
    return e;
}

AlgElem AlgElem::operator-() const {
    AlgElem e = *this;
    for (auto& c : e.c_) c = -c;
    return e;
}

AlgElem AlgElem::operator-(const AlgElem& o) const { return *this + (-o); }

AlgElem AlgElem::operator*(const AlgElem& o) const {
    AlgElem e(alg_);
    const int d = alg_->dim();
    for (int i = 0; i < d; ++i) {
        if (c_[static_cast<size_t>(i)].is_zero()) continue;
        for (int j = 0; j < d; ++j) {
            if (o.c_[static_cast<size_t>(j)].is_zero()) continue;
            RingElem prod = c_[static_cast<size_t>(i)] * o.c_[static_cast<size_t>(j)];
            if (prod.is_zero()) continue;
            for (int k = 0; k < d; ++k) {
                const Scalar& s = alg_->sc(i, j, k);
                if (!s.is_zero()) e.c_[static_cast<size_t>(k)] += prod * s;
            }
        }
    }
    return e;
}

AlgElem AlgElem::scaled(const Scalar& c) const {
    AlgElem e = *this;
    for (auto& x : e.c_) x = x * c;
    return e;
}

bool AlgElem::operator==(const AlgElem& o) const { return (*this - o).is_zero(); }

AlgElem graded_commutator(const AlgElem& a, const AlgElem& b) {
    const AlgebraPtr& alg = a.algebra();
    const int d = alg->dim();
    AlgElem out(alg);
    // decompose into (basis, monomial) homogeneous pieces for the Koszul sign
    for (int i = 0; i < d; ++i)
        for (auto& [mi, ci] : a.coord(i).terms())
            for (int j = 0; j < d; ++j)
                for (auto& [mj, cj] : b.coord(j).terms()) {
                    auto m = alg->ring()->mono_mul(mi, mj);
                    if (!m) continue;
                    int da = alg->space()->degree(i) + alg->ring()->mono_degree(mi);
                    int db = alg->space()->degree(j) + alg->ring()->mono_degree(mj);
                    Scalar c = ci * cj;
                    for (int k = 0; k < d; ++k) {
                        const Scalar& sij = alg->sc(i, j, k);
                        if (!sij.is_zero()) {
                            RingElem t = RingElem::monomial(alg->ring(), *m, c * sij);
                            out.set_coord(k, out.coord(k) + t);
                        }
                        const Scalar& sji = alg->sc(j, i, k);
                        if (!sji.is_zero()) {
                            Scalar v = c * sji;
                            if (sign_block_move(da, db) > 0) v = -v;
                            out.set_coord(k, out.coord(k) + RingElem::monomial(alg->ring(), *m, v));
                        }
                    }
                }
    return out;
}

AlgElem alg_exp(const AlgElem& a, const AlgElem& one) {
    if (!a.in_maximal_ideal()) throw structural_error("exp needs maximal-ideal coefficients");
    const FieldSpec& f = a.algebra()->space()->field();
    AlgElem acc = one;
    AlgElem pw = one;
    Scalar fact = Scalar::one(f);
    const int nil = a.algebra()->ring()->nilpotency_index();
    for (int n = 1; n < nil; ++n) {
        pw = pw * a;
        Scalar nn = Scalar::of_int(f, n);
        if (nn.is_zero()) throw structural_error("factorial not invertible over " + f.to_string());
        fact = fact / nn;
        acc = acc + pw.scaled(fact);
    }
    return acc;
}

TriElem tri_bracket(const TriElem& x, const TriElem& y) {
    return {graded_commutator(x.a, y.a), graded_commutator(x.b, y.a) + graded_commutator(x.a, y.b)};
}

TriElem matrix_exp_triangular(const AlgElem& f, const AlgElem& i, const AlgElem& one) {
    if (!f.in_maximal_ideal() || !i.in_maximal_ideal())
        throw structural_error("triangular exp needs maximal-ideal entries");
    const FieldSpec& fld = f.algebra()->space()->field();
    const int nil = f.algebra()->ring()->nilpotency_index();
    AlgElem ef = alg_exp(f, one);
    AlgElem x(f.algebra());
    // x = Σ_{n≥1} 1/n! Σ_{k+l=n−1} f^k i f^l
    std::vector<AlgElem> pw{one};
    for (int n = 1; n < nil; ++n) pw.push_back(pw.back() * f);
    Scalar fact = Scalar::one(fld);
    for (int n = 1; n < nil; ++n) { // n m-adic factors: terms with n >= nil vanish
        Scalar nn = Scalar::of_int(fld, n);
        if (nn.is_zero()) throw structural_error("factorial not invertible over " + fld.to_string());
        fact = fact / nn;
        for (int k = 0; k + 1 <= n; ++k) {
            int l = n - 1 - k;
            if (k >= static_cast<int>(pw.size()) || l >= static_cast<int>(pw.size())) continue;
            x = x + (pw[static_cast<size_t>(k)] * i * pw[static_cast<size_t>(l)]).scaled(fact);
        }
    }
    return {ef, x};
}

TriElem matrix_gauge_conjugate(const TriElem& P, const TriElem& A, const AlgElem& one) {
    if (!tri_bracket(P, P).is_zero()) throw precondition_error("P is not a polarization");
    const AlgElem& f = A.a;
    const AlgElem& i = A.b;
    TriElem e = matrix_exp_triangular(f, i, one);
    AlgElem ef = e.a, x = e.b;
    AlgElem efm = alg_exp(-f, one);
    AlgElem Dc = ef * P.a * efm; // e^f D e^{-f}
    AlgElem Ic = ef * P.b * efm;
    // lower slot of e^A P e^{-A}; expanding the block product with
    // x' = -e^{-f} x e^{-f} gives e^f I e^{-f} MINUS the commutator.
    AlgElem lower = Ic - graded_commutator(Dc, x * efm);
    return {Dc, lower};
}

Mat2 mat2_of_tri(const TriElem& t) {
    AlgElem zero(t.a.algebra());
    return {t.a, zero, t.b, t.a};
}

Mat2 mat2_mul(const Mat2& x, const Mat2& y) {
    return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
            x[2] * y[1] + x[3] * y[3]};
}

Mat2 mat2_exp(const Mat2& x, const AlgElem& one) {
    const FieldSpec& f = one.algebra()->space()->field();
    AlgElem zero(one.algebra());
    Mat2 acc{one, zero, zero, one};
    Mat2 pw = acc;
    Scalar fact = Scalar::one(f);
    const int nil = one.algebra()->ring()->nilpotency_index();
    for (int n = 1; n < nil; ++n) {
        pw = mat2_mul(pw, x);
        Scalar nn = Scalar::of_int(f, n);
        if (nn.is_zero()) throw structural_error("factorial not invertible over " + f.to_string());
        fact = fact / nn;
        for (int c = 0; c < 4; ++c)
            acc[static_cast<size_t>(c)] = acc[static_cast<size_t>(c)] + pw[static_cast<size_t>(c)].scaled(fact);
    }
    return acc;
}

bool mat2_equal(const Mat2& x, const Mat2& y) {
    for (int c = 0; c < 4; ++c)
        if (!(x[static_cast<size_t>(c)] == y[static_cast<size_t>(c)])) return false;
    return true;
}

DgLaOps<TriElem> tri_dgla_ops(const TriElem& P, const RingPtr& R, const FieldSpec& f) {
    DgLaOps<TriElem> ops;
    ops.bracket = [](const TriElem& a, const TriElem& b) { return tri_bracket(a, b); };
    ops.diff = [P](const TriElem& x) { return tri_bracket(P, x); };
    ops.add = [](const TriElem& a, const TriElem& b) { return a + b; };
    ops.scale = [](const TriElem& a, const Scalar& c) { return a.scaled(c); };
    ops.is_zero = [](const TriElem& a) { return a.is_zero(); };
    ops.in_max_ideal = [](const TriElem& a) { return a.a.in_maximal_ideal() && a.b.in_maximal_ideal(); };
    ops.degree = [](const TriElem& x) -> std::optional<int> {
        auto da = x.a.homogeneous_degree();
        auto db = x.b.homogeneous_degree();
        if (x.a.is_zero()) return db;
        if (x.b.is_zero()) return da;
        if (da && db && *da == *db) return da;
        return std::nullopt;
    };
    ops.field = f;
    ops.nilpotency = R->nilpotency_index();
    return ops;
}

} // namespace ainf
