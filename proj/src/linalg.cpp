#include "ainf/linalg.hpp"

#include "ainf/errors.hpp"

namespace ainf {

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
    if (cols_ != o.rows_) throw structural_error("matrix shape mismatch in product");
    ExactMatrix out(field_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Scalar& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const Scalar& bkj = o.at(k, j);
                if (!bkj.is_zero()) out.at(i, j) += aik * bkj;
            }
        }
    return out;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw structural_error("matrix shape mismatch");
    ExactMatrix out = *this;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(i, j) -= o.at(i, j);
    return out;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw structural_error("matrix shape mismatch");
    ExactMatrix out = *this;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(i, j) += o.at(i, j);
    return out;
}

ExactMatrix ExactMatrix::scaled(const Scalar& c) const {
    ExactMatrix out = *this;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(i, j) *= c;
    return out;
}

bool ExactMatrix::is_zero() const {
    for (const Scalar& s : a_)
        if (!s.is_zero()) return false;
    return true;
}

RankResult rank_kernel_image(const ExactMatrix& M) {
    const int rows = M.rows(), cols = M.cols();
    ExactMatrix R = M; // reduced row echelon form, computed in place
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (!R.at(i, c).is_zero()) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < cols; ++j) std::swap(R.at(p, j), R.at(r, j));
        Scalar inv = R.at(r, c).inverse();
        for (int j = c; j < cols; ++j) R.at(r, j) *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || R.at(i, c).is_zero()) continue;
            Scalar f = R.at(i, c);
            for (int j = c; j < cols; ++j) R.at(i, j) -= f * R.at(r, j);
        }
        pivot_col.push_back(c);
        ++r;
    }

    RankResult out;
    out.rank = r;
    std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
    for (int c : pivot_col) is_pivot[static_cast<size_t>(c)] = true;
    for (int c = 0; c < cols; ++c) {
        if (is_pivot[static_cast<size_t>(c)]) continue;
        std::vector<Scalar> v(static_cast<size_t>(cols), Scalar::zero(M.field()));
        v[static_cast<size_t>(c)] = Scalar::one(M.field());
        for (int i = 0; i < r; ++i) v[static_cast<size_t>(pivot_col[static_cast<size_t>(i)])] = -R.at(i, c);
        out.kernel_basis.push_back(std::move(v));
    }
    for (int c : pivot_col) {
        std::vector<Scalar> v(static_cast<size_t>(rows), Scalar::zero(M.field()));
        for (int i = 0; i < rows; ++i) v[static_cast<size_t>(i)] = M.at(i, c);
        out.image_basis.push_back(std::move(v));
    }
    return out;
}

int span_rank(const std::vector<std::vector<Scalar>>& vecs, const FieldSpec& field, int ambient_dim) {
    if (vecs.empty()) return 0;
    ExactMatrix M(field, ambient_dim, static_cast<int>(vecs.size()));
    for (int j = 0; j < static_cast<int>(vecs.size()); ++j) {
        if (static_cast<int>(vecs[static_cast<size_t>(j)].size()) != ambient_dim)
            throw structural_error("vector dimension mismatch");
        for (int i = 0; i < ambient_dim; ++i) M.at(i, j) = vecs[static_cast<size_t>(j)][static_cast<size_t>(i)];
    }
    return rank_kernel_image(M).rank;
}

int quotient_dimension(const std::vector<std::vector<Scalar>>& kernel,
                       const std::vector<std::vector<Scalar>>& image, const FieldSpec& field, int ambient_dim) {
    int kd = span_rank(kernel, field, ambient_dim);
    int id = span_rank(image, field, ambient_dim);
    // containment: rank must not grow when the image vectors join the kernel span
    std::vector<std::vector<Scalar>> joint = kernel;
    joint.insert(joint.end(), image.begin(), image.end());
    if (span_rank(joint, field, ambient_dim) != kd)
        throw consistency_error("image is not contained in kernel (d^2 != 0 upstream?)");
    return kd - id;
}

} // namespace ainf
