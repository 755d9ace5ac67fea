#pragma once

#include <map>
#include <vector>

#include "ainf/artin.hpp"
#include "ainf/graded.hpp"
#include "ainf/koszul.hpp"

namespace ainf {

// Sign conventions used throughout the bar calculus
// --------------------------------------------------
// * Every component map is stored with its SUSPENDED degree; basis letters
//   contribute ‖a‖ = |a| + 1, dual letters ‖a*‖ = 1 − |a|.
// * Coefficients from the Artin ring live in a scalar zone on the LEFT of
//   tensor words. With that convention a monomial slice m·f_k inserts into a
//   word with the Leibniz sign of its k-part only, and a composition of two
//   sliced operators picks up (−1)^{kdeg(outer slice)·deg(inner monomial)}.
//   That factor is `slice_sign` below; it is the single rule that extends
//   every k-bilinear operation to ring coefficients.
// * (−1)^{|x||y|}-type global twists always use TOTAL suspended degrees.

inline int slice_sign(int outer_kdeg, int inner_mono_deg) { return sign_block_move(outer_kdeg, inner_mono_deg); }

/// Flat component table for one arity: index = tuple_rank(inputs)*dim + out.
using FlatTable = std::vector<Scalar>;

/// One ring-monomial slice of a coderivation: tables for arities 1..W.
struct KTables {
    std::vector<FlatTable> byk; // byk[k-1]; empty table = zero
    const FlatTable* arity(int k) const {
        if (k < 1 || k > static_cast<int>(byk.size())) return nullptr;
        const FlatTable& t = byk[static_cast<size_t>(k - 1)];
        return t.empty() ? nullptr : &t;
    }
    FlatTable& ensure(int k, long long size, const FieldSpec& f);
    bool is_zero() const;
};

/// Coderivation on TA = T(A[1]) given by its components f_k: A[1]^{⊗k} → A[1]
/// for 1 ≤ k ≤ W, with exact coefficients in an Artin ring, homogeneous of a
/// fixed total suspended degree. Components of arity > W are implicitly zero
/// and identities are exact "up to weight W". The same type carries raw
/// component families (e.g. λ∘D) and A∞ morphisms (suspended degree 0).
class Coder {
public:
    Coder(SpacePtr sp, RingPtr ring, int weight, int sdeg);

    const SpacePtr& space() const { return sp_; }
    const RingPtr& ring() const { return ring_; }
    int weight() const { return weight_; }
    int sdeg() const { return sdeg_; }
    int dim() const { return sp_->dim(); }

    bool is_zero() const;
    /// Smallest arity with a nonzero component (0 when zero).
    int first_nonzero_arity() const;

    RingElem entry(int k, const Tuple& in, int out) const;
    /// Validates the degree of every monomial term: ‖out‖ − Σ‖in‖ must equal
    /// sdeg − deg(monomial).
    void set_entry(int k, const Tuple& in, int out, const RingElem& v);
    void add_scalar(int k, Mono m, long long flat, const Scalar& c);

    const std::map<Mono, KTables>& slices() const { return sl_; }
    int slice_kdeg(Mono m) const { return sdeg_ - ring_->mono_degree(m); }

    Coder operator+(const Coder& o) const;
    Coder operator-(const Coder& o) const;
    Coder operator-() const;
    Coder scaled(const Scalar& c) const;
    /// Left multiplication by a homogeneous ring element (shifts sdeg).
    Coder scaled_h(const RingElem& r) const;

    bool operator==(const Coder& o) const;
    /// All coefficients in the maximal ideal (no unit-monomial slice).
    bool in_maximal_ideal() const;
    /// Same space/ring/weight.
    void check_compatible(const Coder& o) const;

    void prune();

private:
    SpacePtr sp_;
    RingPtr ring_;
    int weight_;
    int sdeg_;
    std::map<Mono, KTables> sl_;
};

/// [f,g] = f∘g − (−1)^{|f||g|} g∘f with ∘ the coderivation composition
/// projected to components: g_k inserted into one slot of f_j, j+k−1 = m.
Coder coder_bracket(const Coder& f, const Coder& g);

/// Components of X̂∘Ŷ where the outer family X consumes the whole word after
/// one Ŷ insertion (valid when X is a morphism or when projecting f̂∘ĝ).
Coder insert_compose(const Coder& X, const Coder& Y);

/// Components of D∘λ for a coalgebra morphism λ (partition sum, no signs
/// because ‖λ‖ = 0; requires an evenly graded coefficient ring).
Coder compose_with_morphism(const Coder& D, const Coder& lambda);

/// λ∘D for a morphism λ and coderivation D.
inline Coder morphism_after_coder(const Coder& lambda, const Coder& D) { return insert_compose(lambda, D); }

/// Morphism composition λ∘μ.
inline Coder morphism_compose(const Coder& lambda, const Coder& mu) { return compose_with_morphism(lambda, mu); }

/// Identity automorphism of TA.
Coder identity_morphism(const SpacePtr& sp, const RingPtr& ring, int weight);

/// exp(f) of a coderivation with coefficients in the maximal ideal and total
/// suspended degree 0; the result is a coalgebra automorphism. Exact finite
/// sum by nilpotency.
Coder coder_exp(const Coder& f);

/// λ∘D' == D∘λ up to the common weight.
bool is_ainf_morphism(const Coder& lambda, const Coder& Dsrc, const Coder& Ddst);

/// λ_1 invertible over the local ring (unit slice of λ_1 invertible over k).
bool morphism_invertible(const Coder& lambda);

void check_even_ring(const RingPtr& ring, const char* what);

/// All blockwise applications of the sliced morphism λ to t[from..to):
/// (output letters, combined monomial, coefficient). Sign-free (‖λ‖ = 0,
/// evenly graded ring).
void morphism_partitions(const Coder& lambda, const Tuple& t, size_t from, size_t to,
                         std::vector<std::tuple<Tuple, Mono, Scalar>>& out);

} // namespace ainf
