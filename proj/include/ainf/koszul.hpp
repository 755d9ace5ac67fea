#pragma once

#include <vector>

namespace ainf {

/// All sign computation runs in suspended degrees; only parities matter.
inline int sign_pow(long long e) { return (e & 1) ? -1 : 1; }

/// Sign for a block of total degree `moved` jumping past a block of total
/// degree `passed`: (−1)^{moved·passed}.
inline int sign_block_move(int moved, int passed) {
    return sign_pow(static_cast<long long>(moved) * passed);
}

/// Spec form: product of (−1)^{|α||β|} over all elementary transpositions
/// realized when the `moved` letters jump the `passed` letters as blocks.
int koszul_sign(const std::vector<int>& moved_degrees, const std::vector<int>& passed_degrees);

/// Koszul sign of an arbitrary permutation of homogeneous letters:
/// perm[i] = source position of the letter ending up at position i.
int koszul_permutation_sign(const std::vector<int>& degrees, const std::vector<int>& perm);

} // namespace ainf
