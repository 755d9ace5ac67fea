#include "ainf/scalar.hpp"

namespace ainf {

namespace {

bool is_small_prime(uint32_t p) {
    if (p < 2) return false;
    for (uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

uint64_t mod_pow(uint64_t b, uint64_t e, uint64_t p) {
    uint64_t acc = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) acc = acc * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return acc;
}

} // namespace

FieldSpec FieldSpec::prime(uint32_t p) {
    if (p == 2) throw structural_error("field characteristic 2 is not supported");
    if (!is_small_prime(p)) throw structural_error("field modulus " + std::to_string(p) + " is not prime");
    return FieldSpec{FieldKind::prime, p};
}

std::string FieldSpec::to_string() const {
    return kind == FieldKind::rationals ? "Q" : "F" + std::to_string(p);
}

void Scalar::check_same(const Scalar& o) const {
    if (!(field_ == o.field_))
        throw structural_error("scalar field mismatch: " + field_.to_string() + " vs " + o.field_.to_string());
}

Scalar Scalar::zero(const FieldSpec& f) {
    Scalar s;
    s.field_ = f;
    return s;
}

Scalar Scalar::one(const FieldSpec& f) {
    Scalar s;
    s.field_ = f;
    if (f.kind == FieldKind::rationals)
        s.q_ = 1;
    else
        s.r_ = 1 % f.p;
    return s;
}

Scalar Scalar::of_int(const FieldSpec& f, long v) {
    Scalar s;
    s.field_ = f;
    if (f.kind == FieldKind::rationals) {
        s.q_ = v;
    } else {
        long m = v % static_cast<long>(f.p);
        if (m < 0) m += f.p;
        s.r_ = static_cast<uint64_t>(m);
    }
    return s;
}

Scalar Scalar::of_fraction(const FieldSpec& f, long num, long den) {
    if (den == 0) throw structural_error("zero denominator");
    return of_int(f, num) / of_int(f, den);
}

Scalar Scalar::parse(const FieldSpec& f, const std::string& text) {
    std::string t;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t.empty()) throw parse_error("empty scalar literal");
    auto slash = t.find('/');
    auto check_int = [](const std::string& s) {
        if (s.empty()) throw parse_error("empty integer literal");
        size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) throw parse_error("bad integer literal '" + s + "'");
        for (; i < s.size(); ++i)
            if (!isdigit(static_cast<unsigned char>(s[i]))) throw parse_error("bad integer literal '" + s + "'");
    };
    Scalar out;
    out.field_ = f;
    if (f.kind == FieldKind::rationals) {
        std::string num = slash == std::string::npos ? t : t.substr(0, slash);
        std::string den = slash == std::string::npos ? std::string("1") : t.substr(slash + 1);
        check_int(num);
        check_int(den);
        mpq_class q;
        if (mpq_set_str(q.get_mpq_t(), (num + "/" + den).c_str(), 10) != 0)
            throw parse_error("bad rational literal '" + text + "'");
        if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
            throw parse_error("zero denominator in '" + text + "'");
        q.canonicalize();
        out.q_ = q;
        return out;
    }
    auto residue = [&](const std::string& s) {
        check_int(s);
        mpz_class z(s, 10);
        mpz_class m = z % f.p;
        if (m < 0) m += f.p;
        return static_cast<uint64_t>(m.get_ui());
    };
    if (slash == std::string::npos) {
        out.r_ = residue(t);
        return out;
    }
    Scalar num = Scalar::zero(f), den = Scalar::zero(f);
    num.r_ = residue(t.substr(0, slash));
    den.r_ = residue(t.substr(slash + 1));
    return num / den;
}

bool Scalar::is_zero() const {
    return field_.kind == FieldKind::rationals ? q_ == 0 : r_ == 0;
}

bool Scalar::is_one() const {
    return field_.kind == FieldKind::rationals ? q_ == 1 : r_ == 1;
}

Scalar Scalar::operator-() const {
    Scalar s = *this;
    if (field_.kind == FieldKind::rationals)
        s.q_ = -q_;
    else
        s.r_ = r_ == 0 ? 0 : field_.p - r_;
    return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same(o);
    Scalar s = *this;
    if (field_.kind == FieldKind::rationals)
        s.q_ = q_ + o.q_;
    else
        s.r_ = (r_ + o.r_) % field_.p;
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    check_same(o);
    Scalar s = *this;
    if (field_.kind == FieldKind::rationals)
        s.q_ = q_ * o.q_;
    else
        s.r_ = r_ * o.r_ % field_.p;
    return s;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw structural_error("division by zero");
    Scalar s = *this;
    if (field_.kind == FieldKind::rationals)
        s.q_ = 1 / q_;
    else
        s.r_ = mod_pow(r_, field_.p - 2, field_.p);
    return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

bool Scalar::operator==(const Scalar& o) const {
    if (!(field_ == o.field_)) return false;
    return field_.kind == FieldKind::rationals ? q_ == o.q_ : r_ == o.r_;
}

std::string Scalar::to_string() const {
    if (field_.kind == FieldKind::prime) return std::to_string(r_);
    return q_.get_str();
}

} // namespace ainf
