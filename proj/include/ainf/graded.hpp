#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ainf/scalar.hpp"

namespace ainf {

struct BasisElem {
    std::string name;
    int degree = 0; // internal degree |a|
};

/// Finite-dimensional graded vector space with a named basis over an exact
/// field. Suspended degrees follow (V[1])^j = V^{j-1}, so ‖a‖ = |a| + 1; the
/// dual has (A*)^{-j} ≅ (A^j)*, so ‖a*‖ = 1 − |a|.
class GradedSpace {
public:
    GradedSpace(FieldSpec field, std::vector<BasisElem> basis);

    const FieldSpec& field() const { return field_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const BasisElem& basis(int i) const { return basis_[static_cast<size_t>(i)]; }
    int index_of(const std::string& name) const; // -1 when absent

    int degree(int i) const { return basis_[static_cast<size_t>(i)].degree; }
    int susp(int i) const { return degree(i) + 1; }
    int dual_degree(int i) const { return -degree(i); }
    int dual_susp(int i) const { return 1 - degree(i); }
    std::string dual_name(int i) const { return basis_[static_cast<size_t>(i)].name + "*"; }

private:
    FieldSpec field_;
    std::vector<BasisElem> basis_;
};

using SpacePtr = std::shared_ptr<const GradedSpace>;

void check_same_space(const SpacePtr& a, const SpacePtr& b);

/// Basis tuple (word of basis indices) helpers; ranking is mixed-radix with
/// the leftmost letter most significant, which yields lexicographic order.
using Tuple = std::vector<int>;

long long tuple_rank(const Tuple& t, int dim);
Tuple tuple_unrank(long long r, int len, int dim);
long long tuple_count(int len, int dim);

/// Sum of suspended degrees of the letters t[from..to).
int susp_sum(const GradedSpace& sp, const Tuple& t, size_t from, size_t to);

std::string tuple_names(const GradedSpace& sp, const Tuple& t);

} // namespace ainf
