#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "ainf/errors.hpp"

namespace ainf {

enum class FieldKind : uint8_t { rationals, prime };

/// Ground field: the rationals or F_p with p an odd prime (characteristic 2 is
/// rejected; the Maurer-Cartan 1/2 needs 2 invertible).
struct FieldSpec {
    FieldKind kind = FieldKind::rationals;
    uint32_t p = 0;

    static FieldSpec rationals() { return FieldSpec{FieldKind::rationals, 0}; }
    static FieldSpec prime(uint32_t p);

    bool operator==(const FieldSpec&) const = default;
    std::string to_string() const;
};

/// Exact field element. Rationals are GMP-backed; prime-field values are
/// residues in [0, p). Mixing fields is a structural error.
class Scalar {
public:
    Scalar() = default; // rational 0
    static Scalar zero(const FieldSpec& f);
    static Scalar one(const FieldSpec& f);
    static Scalar of_int(const FieldSpec& f, long v);
    static Scalar of_fraction(const FieldSpec& f, long num, long den);
    /// Parses "-3", "5/2", "0". Over F_p, `a/b` means a·b^{-1}.
    static Scalar parse(const FieldSpec& f, const std::string& text);

    const FieldSpec& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar inverse() const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    FieldSpec field_ = FieldSpec::rationals();
    mpq_class q_ = 0;   // rationals payload
    uint64_t r_ = 0;    // prime-field payload

    void check_same(const Scalar& o) const;
};

inline Scalar operator*(long c, const Scalar& s) { return Scalar::of_int(s.field(), c) * s; }

} // namespace ainf
