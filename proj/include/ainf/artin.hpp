#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ainf/scalar.hpp"

namespace ainf {

/// Monomial in the generators of an Artin ring, in normal form.
/// Encoding: 0 is the unit; for t_adic rings, e>0 is t^e; for square-zero
/// rings, j>0 is the j-th generator (products of generators vanish).
using Mono = int;

struct RingGenerator {
    std::string name;
    int degree = 0;
};

/// Nilpotent Artin local coefficient ring over the base field:
///   trivial      R = k               (m = 0)
///   t_adic       R = k[t]/t^{N+1}    (m = (t), m^{N+1} = 0)
///   square_zero  R = k[t_1..t_g]/(t_i t_j)   (m^2 = 0)
/// All deformation data lives in h ⊗ m. Graded commutativity constrains
/// gradings: a t_adic generator of odd degree requires N = 1.
class ArtinRing {
public:
    enum class Kind : uint8_t { trivial, t_adic, square_zero };

    static std::shared_ptr<const ArtinRing> trivial(const FieldSpec& f);
    static std::shared_ptr<const ArtinRing> t_adic(const FieldSpec& f, int order, std::string gen_name = "t",
                                                   int gen_degree = 0);
    static std::shared_ptr<const ArtinRing> square_zero(const FieldSpec& f, std::vector<RingGenerator> gens);

    Kind kind() const { return kind_; }
    const FieldSpec& field() const { return field_; }
    int order() const { return order_; }
    const std::vector<RingGenerator>& generators() const { return gens_; }

    /// Smallest n with m^n = 0.
    int nilpotency_index() const;

    /// All monomials in normal form, unit first.
    std::vector<Mono> monomials() const;
    int mono_degree(Mono m) const;
    /// Product of two monomials; nullopt when it is killed by the truncation.
    std::optional<Mono> mono_mul(Mono a, Mono b) const;
    std::string mono_name(Mono m) const;

    bool same_as(const ArtinRing& o) const;

private:
    FieldSpec field_;
    Kind kind_ = Kind::trivial;
    int order_ = 0; // t_adic: largest surviving power of t
    std::vector<RingGenerator> gens_;
};

using RingPtr = std::shared_ptr<const ArtinRing>;

void check_same_ring(const RingPtr& a, const RingPtr& b);

/// Exact element of an Artin ring: finitely many monomials with field
/// coefficients, always in normal form (no zero coefficients, nothing beyond
/// the truncation). Immutable-style value type.
class RingElem {
public:
    RingElem() = default;
    explicit RingElem(RingPtr ring) : ring_(std::move(ring)) {}
    static RingElem zero(RingPtr ring) { return RingElem(std::move(ring)); }
    static RingElem one(RingPtr ring);
    static RingElem monomial(RingPtr ring, Mono m, Scalar coeff);
    /// Parses truncated polynomials in the declared generators:
    /// "3/2", "t", "1+2t", "-t^2/3", "2*t0 - t1".
    static RingElem parse(RingPtr ring, const std::string& text);

    const RingPtr& ring() const { return ring_; }
    const std::map<Mono, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Scalar coeff(Mono m) const;

    /// True when every monomial lies in the maximal ideal.
    bool in_maximal_ideal() const;
    /// Degree shared by all stored monomials, if any (0 for the zero element).
    std::optional<int> homogeneous_degree() const;

    RingElem operator-() const;
    RingElem operator+(const RingElem& o) const;
    RingElem operator-(const RingElem& o) const;
    RingElem operator*(const RingElem& o) const;
    RingElem operator*(const Scalar& c) const;
    RingElem& operator+=(const RingElem& o) { return *this = *this + o; }

    bool operator==(const RingElem& o) const;
    std::string to_string() const;

    void add_term(Mono m, const Scalar& c); // normalizing accumulate

private:
    RingPtr ring_;
    std::map<Mono, Scalar> terms_;
};

/// Spec operation names.
RingElem ring_mul(const RingElem& a, const RingElem& b);
int nilpotency_index(const ArtinRing& spec);

} // namespace ainf
