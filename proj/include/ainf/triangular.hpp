#pragma once

#include <array>
#include <memory>

#include "ainf/dgla.hpp"
#include "ainf/artin.hpp"
#include "ainf/graded.hpp"

namespace ainf {

/// Finite-dimensional graded associative algebra S with exact structure
/// constants, coefficients in an Artin ring. The matrix oracle instantiates
/// End(V) of a graded space V (deg E_ij = |v_i| − |v_j|), where odd
/// endomorphisms make the graded commutator honestly noncommutative.
class GradedAlgebra {
public:
    GradedAlgebra(SpacePtr basis, RingPtr ring, std::vector<Scalar> structure);
    static std::shared_ptr<const GradedAlgebra> matrix_algebra(const FieldSpec& f, const RingPtr& ring,
                                                               const std::vector<int>& vdegs);

    const SpacePtr& space() const { return sp_; }
    const RingPtr& ring() const { return ring_; }
    int dim() const { return sp_->dim(); }
    /// structure constant: coefficient of e_k in e_i * e_j
    const Scalar& sc(int i, int j, int k) const {
        return st_[static_cast<size_t>((i * dim() + j) * dim() + k)];
    }

private:
    SpacePtr sp_;
    RingPtr ring_;
    std::vector<Scalar> st_;
};

using AlgebraPtr = std::shared_ptr<const GradedAlgebra>;

/// Element of S ⊗ R.
class AlgElem {
public:
    explicit AlgElem(AlgebraPtr alg);
    static AlgElem basis(const AlgebraPtr& alg, int i);
    static AlgElem unit_like(const AlgebraPtr& alg, const std::vector<int>& unit_coords);

    const AlgebraPtr& algebra() const { return alg_; }
    const RingElem& coord(int i) const { return c_[static_cast<size_t>(i)]; }
    void set_coord(int i, RingElem v) { c_[static_cast<size_t>(i)] = std::move(v); }

    bool is_zero() const;
    bool in_maximal_ideal() const;
    /// Total degree (basis + monomial) when homogeneous.
    std::optional<int> homogeneous_degree() const;

    AlgElem operator+(const AlgElem& o) const;
    AlgElem operator-(const AlgElem& o) const;
    AlgElem operator-() const;
    AlgElem operator*(const AlgElem& o) const; // associative product, no internal signs
    AlgElem scaled(const Scalar& c) const;
    bool operator==(const AlgElem& o) const;

private:
    AlgebraPtr alg_;
    std::vector<RingElem> c_;
};

/// Graded commutator [a,b] = ab − (−1)^{|a||b|} ba on homogeneous pieces.
AlgElem graded_commutator(const AlgElem& a, const AlgElem& b);
/// exp of an element with maximal-ideal coefficients (finite sum).
AlgElem alg_exp(const AlgElem& a, const AlgElem& one);

/// Element (a 0 / b a) of the triangular dgLa of §3.
struct TriElem {
    AlgElem a, b;
    bool is_zero() const { return a.is_zero() && b.is_zero(); }
    TriElem operator+(const TriElem& o) const { return {a + o.a, b + o.b}; }
    TriElem operator-(const TriElem& o) const { return {a - o.a, b - o.b}; }
    TriElem scaled(const Scalar& c) const { return {a.scaled(c), b.scaled(c)}; }
    bool operator==(const TriElem& o) const { return a == o.a && b == o.b; }
};

/// [(a,b),(c,d)] = ([a,c], [b,c] + [a,d]).
TriElem tri_bracket(const TriElem& x, const TriElem& y);

/// exp(f 0 / i f) = (e^f 0 / x e^f), x = Σ_{n≥1} 1/n! Σ_{k+l=n−1} f^k·i·f^l.
TriElem matrix_exp_triangular(const AlgElem& f, const AlgElem& i, const AlgElem& one);

/// e^A (D 0 / I D) e^{−A} by the displayed closed formula; the output is
/// again a polarization. Throws when P is not a polarization.
TriElem matrix_gauge_conjugate(const TriElem& P, const TriElem& A, const AlgElem& one);

/// Entrywise 2x2 matrices over S for the independent cross-check.
using Mat2 = std::array<AlgElem, 4>; // row-major [a00, a01, a10, a11]
Mat2 mat2_of_tri(const TriElem& t);
Mat2 mat2_mul(const Mat2& x, const Mat2& y);
Mat2 mat2_exp(const Mat2& x, const AlgElem& one);
bool mat2_equal(const Mat2& x, const Mat2& y);

/// Generic dgLa instance with differential ad(P).
DgLaOps<TriElem> tri_dgla_ops(const TriElem& P, const RingPtr& R, const FieldSpec& f);

} // namespace ainf
