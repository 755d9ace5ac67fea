#pragma once

#include <string>
#include <vector>

#include "ainf/scalar.hpp"

namespace ainf {

/// Dense exact matrix over a field, row-major.
class ExactMatrix {
public:
    ExactMatrix(FieldSpec field, int rows, int cols)
        : field_(field), rows_(rows), cols_(cols),
          a_(static_cast<size_t>(rows) * static_cast<size_t>(cols), Scalar::zero(field)) {}

    const FieldSpec& field() const { return field_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Scalar& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const Scalar& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    ExactMatrix operator*(const ExactMatrix& o) const;
    ExactMatrix operator-(const ExactMatrix& o) const;
    ExactMatrix operator+(const ExactMatrix& o) const;
    ExactMatrix scaled(const Scalar& c) const;
    bool is_zero() const;

private:
    FieldSpec field_;
    int rows_, cols_;
    std::vector<Scalar> a_;
};

struct RankResult {
    int rank = 0;
    std::vector<std::vector<Scalar>> kernel_basis; // vectors in the domain
    std::vector<std::vector<Scalar>> image_basis;  // pivot columns of the original matrix
};

/// Exact fraction elimination; rank + explicit spanning sets, with
/// dim kernel + rank = #columns.
RankResult rank_kernel_image(const ExactMatrix& M);

/// dim kernel − dim image after verifying image ⊆ span(kernel); a violation
/// signals a broken differential upstream.
int quotient_dimension(const std::vector<std::vector<Scalar>>& kernel,
                       const std::vector<std::vector<Scalar>>& image, const FieldSpec& field, int ambient_dim);

/// Rank of a list of vectors.
int span_rank(const std::vector<std::vector<Scalar>>& vecs, const FieldSpec& field, int ambient_dim);

/// Matrix of a homogeneous linear map together with basis bookkeeping.
struct LinearMapMatrix {
    std::vector<std::string> domain_labels;
    std::vector<std::string> codomain_labels;
    ExactMatrix mat;
    int degree_shift = 0;
};

} // namespace ainf
