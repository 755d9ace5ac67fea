#pragma once

#include "ainf/helement.hpp"
#include "ainf/linalg.hpp"

namespace ainf {

/// Elementary generator of the weight-truncated complex h_{<=W} over k:
/// either one coderivation entry or one comap entry.
struct HBasisElem {
    bool comap = false;
    int k = 0, l = 0; // coder: arity k; comap: (k,l)
    Tuple in;
    int out = 0;
    std::string label(const GradedSpace& sp) const;
};

/// Basis of h^n_{<=W} (trivial coefficient ring).
std::vector<HBasisElem> h_basis(const SpacePtr& sp, int W, int n);

HElem h_basis_elem(const SpacePtr& sp, const RingPtr& R, int W, int n, const HBasisElem& b);

/// Coordinates of a (trivial-ring) h-element in the h^n basis.
std::vector<Scalar> h_coordinates(const HElem& x, const std::vector<HBasisElem>& basis);

/// Matrix of d: h^n -> h^{n+1} on the weight-truncated quotient complex.
LinearMapMatrix h_differential_matrix(const Polarization& P, int n);

struct TangentResult {
    int degree = 0;
    int dim = 0;      // dim H^degree of the weight-<=W quotient complex
    int dim_ker = 0;
    int dim_im = 0;   // image of d from degree-1
    std::vector<HElem> representatives; // cocycles spanning a complement of im in ker
};

/// Def_g(R) = ker(d)/Im(d) = H(g) degree by degree; results are exact
/// statements about the weight-<=W quotient (labels never claim stabilization).
TangentResult tangent_space_degree(const Polarization& P, int degree);
std::vector<TangentResult> tangent_space(const Polarization& P, int deg_lo, int deg_hi);

} // namespace ainf
