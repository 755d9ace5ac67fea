#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ainf/coder.hpp"

namespace ainf {

enum class ModKind : uint8_t { A, Adual };

/// Suspended degree of a module letter of the given kind.
inline int module_susp(const GradedSpace& sp, ModKind kind, int i) {
    return kind == ModKind::A ? sp.susp(i) : sp.dual_susp(i);
}

// Dual module action convention (the paper leaves every ± open; this is the
// one self-consistent choice, fixed by the Koszul engine plus the coadjoint
// twist, that makes f ↦ f^{A*} a map of graded Lie algebras and makes
// δ_D(I)=0 coincide with classical invariance ⟨ab,c⟩=⟨a,bc⟩ on even
// Frobenius pairs — see the composition-identity and invariance tests):
//   (f^{A*}(x_1..x_r, ν, y_1..y_s))(z)
//     = −(−1)^{‖ν‖(|f|+Σ‖x‖) + Σ‖x‖(Σ‖y‖+‖z‖)} · ν( f(y_1..y_s, z, x_1..x_r) )
// The global −1 is the coadjoint twist: the graded transpose reverses
// composition order, and negating it restores a Lie-algebra map.
/// Koszul transport alone: the sign of rearranging [φ; x; ν; y; z] into
/// [ν; φ; y; z; x]. This is the sign of induced bimodule MAPS such as λ̃
/// (which must restrict to the identity at λ = id).
inline int dual_transpose_sign(int f_kdeg, int xs_susp, int nu_susp, int ys_susp, int z_susp) {
    long long e = static_cast<long long>(nu_susp) * (f_kdeg + xs_susp);
    e += static_cast<long long>(xs_susp) * (ys_susp + z_susp);
    return sign_pow(e);
}

/// Coderivation ACTION on the dual: transpose plus the coadjoint −1.
inline int dual_action_sign(int f_kdeg, int xs_susp, int nu_susp, int ys_susp, int z_susp) {
    return -dual_transpose_sign(f_kdeg, xs_susp, nu_susp, ys_susp, z_susp);
}

/// Map of tensor bicomodules T^{src}A → T^{dst}A determined by its
/// (k,l)-components A[1]^{⊗k} ⊗ src[1] ⊗ A[1]^{⊗l} → dst[1]; forms with
/// k+l+2 > W are implicitly zero. For dst = A* the component equals the
/// pairing form ⟨a_1,…,a_{k+l+1}; z⟩ via the coefficient of z*.
class BimodMap {
public:
    BimodMap(SpacePtr sp, RingPtr ring, int weight, int sdeg, ModKind src, ModKind dst);

    const SpacePtr& space() const { return sp_; }
    const RingPtr& ring() const { return ring_; }
    int weight() const { return weight_; }
    int sdeg() const { return sdeg_; }
    ModKind src() const { return src_; }
    ModKind dst() const { return dst_; }
    int dim() const { return sp_->dim(); }

    bool is_zero() const;
    /// Lex-first (k,l) with a nonzero component; nullopt when zero.
    std::optional<std::pair<int, int>> first_nonzero_kl() const;

    /// in: k+l+1 letters, module letter (src kind) at position k.
    RingElem entry(int k, int l, const Tuple& in, int out) const;
    void set_entry(int k, int l, const Tuple& in, int out, const RingElem& v);
    void add_scalar(int k, int l, Mono m, long long flat, const Scalar& c);

    /// Pairing-form view (dst must be A*): in has k+l+2 letters, the last one
    /// is the pairing input.
    RingElem form(int k, int l, const Tuple& in) const;

    using BTables = std::map<std::pair<int, int>, FlatTable>;
    const std::map<Mono, BTables>& slices() const { return sl_; }
    int slice_kdeg(Mono m) const { return sdeg_ - ring_->mono_degree(m); }

    BimodMap operator+(const BimodMap& o) const;
    BimodMap operator-(const BimodMap& o) const;
    BimodMap operator-() const;
    BimodMap scaled(const Scalar& c) const;
    BimodMap scaled_h(const RingElem& r) const;
    bool operator==(const BimodMap& o) const;
    bool in_maximal_ideal() const;
    void check_compatible(const BimodMap& o) const;
    void prune();

private:
    SpacePtr sp_;
    RingPtr ring_;
    int weight_;
    int sdeg_;
    ModKind src_, dst_;
    std::map<Mono, BTables> sl_;
};

/// One term of the Appendix-A insertion calculus on the (k,l) pairing
/// diagram: f_n applied to n cyclically consecutive inputs starting at
/// 1-based `position`, never containing both special inputs a_{k+1} and
/// a_{k+l+2}.
struct InsertionTerm {
    int n = 0;        // arity of the inserted f_n
    int position = 0; // 1-based start among the k+l+2 cyclic inputs
    bool wraps = false;
    int k_out = 0, l_out = 0; // outer pairing shape
    char type = 'a'; // a: top block, b: bottom block, c: contains a_{k+1}, d: contains a_{k+l+2}
    std::string line() const;
};

/// Deterministic, duplicate-free enumeration; counts match Appendix A:
/// (0,0)→2, (1,0)→5, (0,1)→5, (2,0)→9, (0,2)→9, (1,1)→10.
std::vector<InsertionTerm> enumerate_insertion_terms(int k, int l, int W);

/// f^{A*}∘F, the wrapping half of δ_f (type-d terms).
BimodMap compose_dual_side(const Coder& f, const BimodMap& F);
/// F∘f^A, the plain-insertion half of δ_f (type a/b/c terms).
BimodMap compose_mod_side(const BimodMap& F, const Coder& f);

/// δ_f(F) = f^{A*}∘F − (−1)^{|f||F|} F∘f^A on Comap(T^A A, T^{A*}A).
BimodMap delta_f(const Coder& f, const BimodMap& F);

/// δ^{M,N}(F) = D^N∘F − (−1)^{|F|} F∘D^M, with the bimodule structures on
/// M = A and N = A* induced by the coderivations gM and gN.
BimodMap comap_differential(const Coder& gN, const Coder& gM, const BimodMap& F);

/// Composite of bimodule maps (H first, then G; needs H.dst == G.src).
BimodMap compose_bimod(const BimodMap& G, const BimodMap& H);

/// Materialized (k,l) action components of the induced coderivation f^M.
BimodMap module_action(const Coder& f, ModKind kind, int weight);

/// Induced structure/bimodule map along an A∞ morphism λ: components
/// S^λ(a'_1..a'_k, m, …) = Σ pr∘S(λ(…),…,λ(…), m, λ(…),…).
BimodMap induce_along(const Coder& lambda, const BimodMap& S);

/// λ̄: components pr_A∘λ with the module input treated as an ordinary letter.
BimodMap bar_lambda(const Coder& lambda, int weight);
/// λ̃: dual components (λ̃(x,ν,y))(z) = ± ν(λ(y, z, x)).
BimodMap tilde_lambda(const Coder& lambda, int weight);

// --- word-level actions (coLeibniz route; used by the brute-force oracle) ---

/// Word of T^M A: k+l+1 letters with the module letter at position k.
struct BWord {
    int k = 0, l = 0;
    Tuple t;
    auto operator<=>(const BWord&) const = default;
};

using BWordTerm = std::pair<BWord, Mono>;
using BWordSum = std::map<BWordTerm, Scalar>;

void bword_add(BWordSum& sum, const BWord& w, Mono m, const Scalar& c);

/// Induced coderivation f^M applied to one word, built only from the
/// coLeibniz rule and the module action (never from the insertion shortcut).
BWordSum apply_induced_coder(const Coder& f, ModKind kind, const BWord& w, Mono wm);

/// Comap applied to one word via the comap compatibility square.
BWordSum apply_comap_word(const BimodMap& F, const BWord& w, Mono wm);

} // namespace ainf
