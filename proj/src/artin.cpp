#include "ainf/artin.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace ainf {

std::shared_ptr<const ArtinRing> ArtinRing::trivial(const FieldSpec& f) {
    auto r = std::make_shared<ArtinRing>();
    r->field_ = f;
    r->kind_ = Kind::trivial;
    return r;
}

std::shared_ptr<const ArtinRing> ArtinRing::t_adic(const FieldSpec& f, int order, std::string gen_name,
                                                   int gen_degree) {
    if (order < 1) throw structural_error("t_adic order must be >= 1");
    if ((gen_degree % 2 != 0) && order > 1)
        throw structural_error("t_adic generator of odd degree requires order 1 (graded commutativity)");
    auto r = std::make_shared<ArtinRing>();
    r->field_ = f;
    r->kind_ = Kind::t_adic;
    r->order_ = order;
    r->gens_ = {RingGenerator{std::move(gen_name), gen_degree}};
    return r;
}

std::shared_ptr<const ArtinRing> ArtinRing::square_zero(const FieldSpec& f, std::vector<RingGenerator> gens) {
    if (gens.empty()) throw structural_error("square_zero ring needs at least one generator");
    std::set<std::string> names;
    for (auto& g : gens)
        if (!names.insert(g.name).second) throw structural_error("duplicate ring generator '" + g.name + "'");
    auto r = std::make_shared<ArtinRing>();
    r->field_ = f;
    r->kind_ = Kind::square_zero;
    r->gens_ = std::move(gens);
    return r;
}

int ArtinRing::nilpotency_index() const {
    switch (kind_) {
        case Kind::trivial: return 1;
        case Kind::t_adic: return order_ + 1;
        case Kind::square_zero: return 2;
    }
    return 1;
}

std::vector<Mono> ArtinRing::monomials() const {
    std::vector<Mono> out{0};
    if (kind_ == Kind::t_adic)
        for (int e = 1; e <= order_; ++e) out.push_back(e);
    if (kind_ == Kind::square_zero)
        for (size_t j = 1; j <= gens_.size(); ++j) out.push_back(static_cast<Mono>(j));
    return out;
}

int ArtinRing::mono_degree(Mono m) const {
    if (m == 0) return 0;
    if (kind_ == Kind::t_adic) return m * gens_[0].degree;
    return gens_[static_cast<size_t>(m - 1)].degree;
}

std::optional<Mono> ArtinRing::mono_mul(Mono a, Mono b) const {
    if (a == 0) return b;
    if (b == 0) return a;
    if (kind_ == Kind::t_adic) {
        int e = a + b;
        if (e > order_) return std::nullopt;
        return e;
    }
    return std::nullopt; // square_zero: t_i t_j = 0
}

std::string ArtinRing::mono_name(Mono m) const {
    if (m == 0) return "1";
    if (kind_ == Kind::t_adic)
        return m == 1 ? gens_[0].name : gens_[0].name + "^" + std::to_string(m);
    return gens_[static_cast<size_t>(m - 1)].name;
}

bool ArtinRing::same_as(const ArtinRing& o) const {
    if (!(field_ == o.field_) || kind_ != o.kind_ || order_ != o.order_) return false;
    if (gens_.size() != o.gens_.size()) return false;
    for (size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name != o.gens_[i].name || gens_[i].degree != o.gens_[i].degree) return false;
    return true;
}

void check_same_ring(const RingPtr& a, const RingPtr& b) {
    if (!a || !b || !a->same_as(*b)) throw structural_error("coefficient ring mismatch");
}

RingElem RingElem::one(RingPtr ring) {
    RingElem e(ring);
    e.terms_[0] = Scalar::one(ring->field());
    return e;
}

RingElem RingElem::monomial(RingPtr ring, Mono m, Scalar coeff) {
    RingElem e(ring);
    e.add_term(m, coeff);
    return e;
}

Scalar RingElem::coeff(Mono m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar::zero(ring_->field()) : it->second;
}

bool RingElem::in_maximal_ideal() const { return terms_.find(0) == terms_.end(); }

std::optional<int> RingElem::homogeneous_degree() const {
    std::optional<int> d;
    for (auto& [m, c] : terms_) {
        int dm = ring_->mono_degree(m);
        if (d && *d != dm) return std::nullopt;
        d = dm;
    }
    return d ? d : std::optional<int>(0);
}

void RingElem::add_term(Mono m, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

RingElem RingElem::operator-() const {
    RingElem e(ring_);
    for (auto& [m, c] : terms_) e.terms_.emplace(m, -c);
    return e;
}

RingElem RingElem::operator+(const RingElem& o) const {
    check_same_ring(ring_, o.ring_);
    RingElem e = *this;
    for (auto& [m, c] : o.terms_) e.add_term(m, c);
    return e;
}

RingElem RingElem::operator-(const RingElem& o) const { return *this + (-o); }

RingElem RingElem::operator*(const RingElem& o) const {
    check_same_ring(ring_, o.ring_);
    RingElem e(ring_);
    for (auto& [ma, ca] : terms_)
        for (auto& [mb, cb] : o.terms_)
            if (auto m = ring_->mono_mul(ma, mb)) e.add_term(*m, ca * cb);
    return e;
}

RingElem RingElem::operator*(const Scalar& c) const {
    RingElem e(ring_);
    for (auto& [m, cm] : terms_) e.add_term(m, cm * c);
    return e;
}

bool RingElem::operator==(const RingElem& o) const {
    if (!ring_ || !o.ring_) return is_zero() && o.is_zero();
    return ring_->same_as(*o.ring_) && terms_ == o.terms_;
}

std::string RingElem::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto& [m, c] : terms_) {
        std::string cs = c.to_string();
        bool neg = !cs.empty() && cs[0] == '-';
        if (first) {
            out += cs;
            first = false;
        } else {
            out += neg ? " - " + cs.substr(1) : " + " + cs;
        }
        if (m != 0) {
            // elide the unit coefficient for readability
            std::string mn = ring_->mono_name(m);
            if (out.size() >= cs.size() && (cs == "1" || cs == "-1")) {
                out.resize(out.size() - 1);
                out += mn;
            } else {
                out += "*" + mn;
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// truncated-polynomial parser

namespace {

struct Lexer {
    std::string s;
    size_t i = 0;
    void skip() {
        while (i < s.size() && isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skip();
        return i >= s.size();
    }
    char peek() {
        skip();
        return i < s.size() ? s[i] : '\0';
    }
    char take() {
        skip();
        return s[i++];
    }
    std::string number() {
        skip();
        size_t j = i;
        while (j < s.size() && isdigit(static_cast<unsigned char>(s[j]))) ++j;
        std::string out = s.substr(i, j - i);
        i = j;
        return out;
    }
    std::string ident() {
        skip();
        size_t j = i;
        while (j < s.size() && (isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
        std::string out = s.substr(i, j - i);
        i = j;
        return out;
    }
};

} // namespace

RingElem RingElem::parse(RingPtr ring, const std::string& text) {
    Lexer lx{text};
    const FieldSpec& f = ring->field();
    auto gen_index = [&](const std::string& name) -> int {
        const auto& gens = ring->generators();
        for (size_t j = 0; j < gens.size(); ++j)
            if (gens[j].name == name) return static_cast<int>(j);
        throw parse_error("unknown ring generator '" + name + "' in '" + text + "'");
    };

    RingElem acc(ring);
    bool first_term = true;
    while (!lx.eof()) {
        bool neg = false;
        char c = lx.peek();
        if (c == '+' || c == '-') {
            lx.take();
            neg = c == '-';
        } else if (!first_term) {
            throw parse_error("expected '+' or '-' in '" + text + "'");
        }
        first_term = false;

        Scalar coeff = Scalar::one(f);
        Mono mono = 0;
        bool saw_factor = false;
        bool allow_more = true;
        while (allow_more) {
            char p = lx.peek();
            if (isdigit(static_cast<unsigned char>(p))) {
                std::string num = lx.number();
                std::string lit = num;
                if (lx.peek() == '/') {
                    lx.take();
                    if (!isdigit(static_cast<unsigned char>(lx.peek())))
                        throw parse_error("expected denominator in '" + text + "'");
                    lit += "/" + lx.number();
                }
                coeff *= Scalar::parse(f, lit);
                saw_factor = true;
            } else if (isalpha(static_cast<unsigned char>(p)) || p == '_') {
                std::string name = lx.ident();
                int exp = 1;
                if (lx.peek() == '^') {
                    lx.take();
                    if (!isdigit(static_cast<unsigned char>(lx.peek())))
                        throw parse_error("expected exponent in '" + text + "'");
                    exp = std::stoi(lx.number());
                }
                if (exp < 0) throw parse_error("negative exponent in '" + text + "'");
                int gi = gen_index(name);
                for (int e = 0; e < exp; ++e) {
                    Mono gm = ring->kind() == ArtinRing::Kind::t_adic ? 1 : gi + 1;
                    auto prod = ring->mono_mul(mono, gm);
                    if (!prod) {
                        mono = -1; // truncated away: whole term is zero
                        break;
                    }
                    mono = *prod;
                }
                saw_factor = true;
            } else {
                throw parse_error("unexpected character '" + std::string(1, p) + "' in '" + text + "'");
            }
            if (lx.peek() == '*') {
                lx.take();
                continue;
            }
            char nxt = lx.peek();
            allow_more = isalpha(static_cast<unsigned char>(nxt)) || nxt == '_' ||
                         isdigit(static_cast<unsigned char>(nxt));
        }
        if (!saw_factor) throw parse_error("empty term in '" + text + "'");
        if (mono >= 0) acc.add_term(mono, neg ? -coeff : coeff);
    }
    if (first_term) throw parse_error("empty ring element '" + text + "'");
    return acc;
}

RingElem ring_mul(const RingElem& a, const RingElem& b) { return a * b; }

int nilpotency_index(const ArtinRing& spec) { return spec.nilpotency_index(); }

} // namespace ainf
