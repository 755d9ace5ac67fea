#include "ainf/koszul.hpp"

#include "ainf/errors.hpp"

namespace ainf {

int koszul_sign(const std::vector<int>& moved_degrees, const std::vector<int>& passed_degrees) {
    long long m = 0, p = 0;
    for (int d : moved_degrees) m += d;
    for (int d : passed_degrees) p += d;
    return sign_pow(m * p);
}

int koszul_permutation_sign(const std::vector<int>& degrees, const std::vector<int>& perm) {
    if (degrees.size() != perm.size()) throw structural_error("permutation/degree size mismatch");
    int sign = 1;
    for (size_t i = 0; i < perm.size(); ++i)
        for (size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j])
                sign *= sign_pow(static_cast<long long>(degrees[static_cast<size_t>(perm[i])]) *
                                 degrees[static_cast<size_t>(perm[j])]);
    return sign;
}

} // namespace ainf
