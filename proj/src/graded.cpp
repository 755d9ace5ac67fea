#include "ainf/graded.hpp"

#include <set>

namespace ainf {

GradedSpace::GradedSpace(FieldSpec field, std::vector<BasisElem> basis)
    : field_(field), basis_(std::move(basis)) {
    if (basis_.empty()) throw structural_error("graded space needs a nonempty basis");
    if (basis_.size() > 16) throw structural_error("desk-scale limit: dim <= 16");
    std::set<std::string> names;
    for (auto& b : basis_) {
        if (b.name.empty()) throw structural_error("empty basis name");
        if (!names.insert(b.name).second) throw structural_error("duplicate basis name '" + b.name + "'");
    }
}

int GradedSpace::index_of(const std::string& name) const {
    for (size_t i = 0; i < basis_.size(); ++i)
        if (basis_[i].name == name) return static_cast<int>(i);
    return -1;
}

void check_same_space(const SpacePtr& a, const SpacePtr& b) {
    if (!a || !b) throw structural_error("missing graded space");
    if (a == b) return;
    if (!(a->field() == b->field()) || a->dim() != b->dim()) throw structural_error("graded space mismatch");
    for (int i = 0; i < a->dim(); ++i)
        if (a->basis(i).name != b->basis(i).name || a->basis(i).degree != b->basis(i).degree)
            throw structural_error("graded space mismatch");
}

long long tuple_rank(const Tuple& t, int dim) {
    long long r = 0;
    for (int x : t) r = r * dim + x;
    return r;
}

Tuple tuple_unrank(long long r, int len, int dim) {
    Tuple t(static_cast<size_t>(len));
    for (int i = len - 1; i >= 0; --i) {
        t[static_cast<size_t>(i)] = static_cast<int>(r % dim);
        r /= dim;
    }
    return t;
}

long long tuple_count(int len, int dim) {
    long long n = 1;
    for (int i = 0; i < len; ++i) n *= dim;
    return n;
}

int susp_sum(const GradedSpace& sp, const Tuple& t, size_t from, size_t to) {
    int s = 0;
    for (size_t i = from; i < to && i < t.size(); ++i) s += sp.susp(t[i]);
    return s;
}

std::string tuple_names(const GradedSpace& sp, const Tuple& t) {
    std::string out;
    for (size_t i = 0; i < t.size(); ++i) {
        if (i) out += ",";
        out += sp.basis(t[i]).name;
    }
    return out;
}

} // namespace ainf
