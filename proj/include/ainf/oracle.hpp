#pragma once

#include "ainf/deform.hpp"
#include "ainf/linalg.hpp"

namespace ainf {

/// Explicit based truncated bicomodule T^M A (M ∈ {A, A*}): all words of
/// weight k+l+1 ≤ W, enumerated deterministically. Word count equals
/// Σ_{k+l+1≤W} (dim A)^{k+l} · dim M.
struct WordSpace {
    SpacePtr sp;
    ModKind kind;
    int W;
    std::vector<BWord> words;
    std::map<BWord, int> index;

    WordSpace(SpacePtr sp_, ModKind kind_, int W_);
    int size() const { return static_cast<int>(words.size()); }
    std::string label(int i) const;
};

/// Restriction of one monomial slice (k-part only, same declared degree).
Coder slice_restrict(const Coder& c, Mono m);
BimodMap slice_restrict(const BimodMap& c, Mono m);

/// Matrix of the induced coderivation f^M (one slice) on the word basis,
/// assembled from the coLeibniz rule (apply_induced_coder), never from the
/// insertion shortcut.
ExactMatrix induced_coder_matrix(const Coder& f_slice, Mono m, const WordSpace& ws);

/// Matrix of a comap slice from the T^A A word basis to the T^{A*} A basis.
ExactMatrix comap_matrix(const BimodMap& F_slice, Mono m, const WordSpace& src, const WordSpace& dst);

/// Brute-force δ_f(F) = f^{A*}∘F − (−1)^{|f||F|} F∘f^A computed as matrix
/// products on the truncated word bases and read back componentwise.
BimodMap compose_delta_oracle(const Coder& f, const BimodMap& F);

} // namespace ainf
