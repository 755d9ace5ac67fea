#include "ainf/coder.hpp"

#include <algorithm>

namespace ainf {

FlatTable& KTables::ensure(int k, long long size, const FieldSpec& f) {
    if (static_cast<int>(byk.size()) < k) byk.resize(static_cast<size_t>(k));
    FlatTable& t = byk[static_cast<size_t>(k - 1)];
    if (t.empty()) t.assign(static_cast<size_t>(size), Scalar::zero(f));
    return t;
}

bool KTables::is_zero() const {
    for (const auto& t : byk)
        for (const auto& s : t)
            if (!s.is_zero()) return false;
    return true;
}

Coder::Coder(SpacePtr sp, RingPtr ring, int weight, int sdeg)
    : sp_(std::move(sp)), ring_(std::move(ring)), weight_(weight), sdeg_(sdeg) {
    if (!sp_ || !ring_) throw structural_error("coderivation needs a space and a ring");
    if (!(sp_->field() == ring_->field())) throw structural_error("space/ring field mismatch");
    if (weight_ < 1) throw structural_error("weight must be >= 1");
}

bool Coder::is_zero() const {
    for (auto& [m, t] : sl_)
        if (!t.is_zero()) return false;
    return true;
}

int Coder::first_nonzero_arity() const {
    for (int k = 1; k <= weight_; ++k)
        for (auto& [m, t] : sl_)
            if (const FlatTable* ft = t.arity(k))
                for (const Scalar& s : *ft)
                    if (!s.is_zero()) return k;
    return 0;
}

RingElem Coder::entry(int k, const Tuple& in, int out) const {
    if (k < 1 || k > weight_ || static_cast<int>(in.size()) != k) throw structural_error("bad arity");
    RingElem v(ring_);
    long long flat = tuple_rank(in, dim()) * dim() + out;
    for (auto& [m, t] : sl_)
        if (const FlatTable* ft = t.arity(k)) {
            const Scalar& c = (*ft)[static_cast<size_t>(flat)];
            if (!c.is_zero()) v.add_term(m, c);
        }
    return v;
}

void Coder::set_entry(int k, const Tuple& in, int out, const RingElem& v) {
    if (k < 1 || k > weight_) throw structural_error("component arity out of range 1..W");
    if (static_cast<int>(in.size()) != k) throw structural_error("tuple length != arity");
    check_same_ring(ring_, v.ring());
    int need = sp_->susp(out) - susp_sum(*sp_, in, 0, in.size());
    long long flat = tuple_rank(in, dim()) * dim() + out;
    for (auto& [m, c] : v.terms()) {
        if (need != sdeg_ - ring_->mono_degree(m))
            throw structural_error("entry violates declared suspended degree at arity " + std::to_string(k));
        FlatTable& t = sl_[m].ensure(k, tuple_count(k, dim()) * dim(), sp_->field());
        t[static_cast<size_t>(flat)] = c;
    }
}

void Coder::add_scalar(int k, Mono m, long long flat, const Scalar& c) {
    if (c.is_zero()) return;
    FlatTable& t = sl_[m].ensure(k, tuple_count(k, dim()) * dim(), sp_->field());
    t[static_cast<size_t>(flat)] += c;
}

void Coder::check_compatible(const Coder& o) const {
    check_same_space(sp_, o.sp_);
    check_same_ring(ring_, o.ring_);
    if (weight_ != o.weight_) throw structural_error("truncation weight mismatch");
}

Coder Coder::operator+(const Coder& o) const {
    check_compatible(o);
    if (sdeg_ != o.sdeg_ && !is_zero() && !o.is_zero()) throw structural_error("degree mismatch in sum");
    Coder out = *this;
    if (out.is_zero()) out.sdeg_ = o.sdeg_;
    for (auto& [m, t] : o.sl_)
        for (int k = 1; k <= weight_; ++k)
            if (const FlatTable* ft = t.arity(k))
                for (long long i = 0; i < static_cast<long long>(ft->size()); ++i)
                    out.add_scalar(k, m, i, (*ft)[static_cast<size_t>(i)]);
    out.prune();
    return out;
}

Coder Coder::operator-() const { return scaled(-Scalar::one(sp_->field())); }

Coder Coder::operator-(const Coder& o) const { return *this + (-o); }

Coder Coder::scaled(const Scalar& c) const {
    Coder out(sp_, ring_, weight_, sdeg_);
    if (c.is_zero()) return out;
    out.sl_ = sl_;
    for (auto& [m, t] : out.sl_)
        for (auto& ft : t.byk)
            for (auto& s : ft) s *= c;
    return out;
}

Coder Coder::scaled_h(const RingElem& r) const {
    check_same_ring(ring_, r.ring());
    auto d = r.homogeneous_degree();
    if (!d) throw structural_error("scaling ring element must be homogeneous");
    Coder out(sp_, ring_, weight_, sdeg_ + *d);
    for (auto& [mr, cr] : r.terms())
        for (auto& [m, t] : sl_) {
            auto prod = ring_->mono_mul(mr, m);
            if (!prod) continue;
            for (int k = 1; k <= weight_; ++k)
                if (const FlatTable* ft = t.arity(k))
                    for (long long i = 0; i < static_cast<long long>(ft->size()); ++i)
                        out.add_scalar(k, *prod, i, cr * (*ft)[static_cast<size_t>(i)]);
        }
    out.prune();
    return out;
}

bool Coder::operator==(const Coder& o) const {
    Coder d = *this - o;
    return d.is_zero();
}

bool Coder::in_maximal_ideal() const {
    auto it = sl_.find(0);
    return it == sl_.end() || it->second.is_zero();
}

void Coder::prune() {
    for (auto it = sl_.begin(); it != sl_.end();) {
        if (it->second.is_zero())
            it = sl_.erase(it);
        else
            ++it;
    }
}

void check_even_ring(const RingPtr& ring, const char* what) {
    for (const auto& g : ring->generators())
        if (g.degree % 2 != 0)
            throw structural_error(std::string(what) + " requires an evenly graded coefficient ring");
}

// --- composition kernels ----------------------------------------------------

namespace {

/// k-part of X̂∘Ŷ on one slice pair, accumulated into `out` under monomial
/// `mono` with an overall scalar factor.
void accumulate_insert_compose(Coder& out, Mono mono, int factor, const GradedSpace& sp, const KTables& X,
                               const KTables& Y, int sy, int W) {
    const int d = sp.dim();
    const FieldSpec& f = sp.field();
    for (int mo = 1; mo <= W; ++mo) {
        for (int ky = 1; ky <= mo; ++ky) {
            int kx = mo - ky + 1;
            const FlatTable* ty = Y.arity(ky);
            const FlatTable* tx = X.arity(kx);
            if (!ty || !tx) continue;
            long long ntup = tuple_count(mo, d);
            for (long long r = 0; r < ntup; ++r) {
                Tuple t = tuple_unrank(r, mo, d);
                for (int i = 0; i + ky <= mo; ++i) {
                    int pre = susp_sum(sp, t, 0, static_cast<size_t>(i));
                    int sgn = factor * sign_block_move(sy, pre);
                    long long inner_base = tuple_rank(Tuple(t.begin() + i, t.begin() + i + ky), d) * d;
                    for (int b = 0; b < d; ++b) {
                        const Scalar& cb = (*ty)[static_cast<size_t>(inner_base + b)];
                        if (cb.is_zero()) continue;
                        Tuple u;
                        u.reserve(static_cast<size_t>(kx));
                        u.insert(u.end(), t.begin(), t.begin() + i);
                        u.push_back(b);
                        u.insert(u.end(), t.begin() + i + ky, t.end());
                        long long outer_base = tuple_rank(u, d) * d;
                        for (int o = 0; o < d; ++o) {
                            const Scalar& cx = (*tx)[static_cast<size_t>(outer_base + o)];
                            if (cx.is_zero()) continue;
                            Scalar v = cx * cb;
                            if (sgn < 0) v = -v;
                            out.add_scalar(mo, mono, r * d + o, v);
                        }
                    }
                }
            }
        }
        (void)f;
    }
}

/// Evaluate the sliced morphism λ on a block, as a list of
/// (basis index, monomial, scalar) outputs.
struct MorOut {
    int b;
    Mono m;
    Scalar c;
};

std::vector<MorOut> eval_morphism_block(const Coder& lam, const Tuple& block) {
    std::vector<MorOut> outs;
    const int d = lam.dim();
    int k = static_cast<int>(block.size());
    long long base = tuple_rank(block, d) * d;
    for (auto& [m, t] : lam.slices()) {
        const FlatTable* ft = t.arity(k);
        if (!ft) continue;
        for (int b = 0; b < d; ++b) {
            const Scalar& c = (*ft)[static_cast<size_t>(base + b)];
            if (!c.is_zero()) outs.push_back({b, m, c});
        }
    }
    return outs;
}

void partitions_rec(const Coder& lam, const Tuple& t, size_t from, size_t to, const Tuple& heads, Mono mono,
                    const Scalar& coeff, std::vector<std::tuple<Tuple, Mono, Scalar>>& out) {
    if (from == to) {
        out.emplace_back(heads, mono, coeff);
        return;
    }
    for (size_t len = 1; from + len <= to; ++len) {
        Tuple block(t.begin() + static_cast<long>(from), t.begin() + static_cast<long>(from + len));
        for (const MorOut& mo : eval_morphism_block(lam, block)) {
            auto prod = lam.ring()->mono_mul(mono, mo.m);
            if (!prod) continue;
            Tuple h2 = heads;
            h2.push_back(mo.b);
            partitions_rec(lam, t, from + len, to, h2, *prod, coeff * mo.c, out);
        }
    }
}

} // namespace

void morphism_partitions(const Coder& lambda, const Tuple& t, size_t from, size_t to,
                         std::vector<std::tuple<Tuple, Mono, Scalar>>& out) {
    partitions_rec(lambda, t, from, to, {}, 0, Scalar::one(lambda.space()->field()), out);
}

Coder insert_compose(const Coder& X, const Coder& Y) {
    X.check_compatible(Y);
    Coder out(X.space(), X.ring(), X.weight(), X.sdeg() + Y.sdeg());
    for (auto& [mx, tx] : X.slices())
        for (auto& [my, ty] : Y.slices()) {
            auto prod = X.ring()->mono_mul(mx, my);
            if (!prod) continue;
            int factor = slice_sign(X.slice_kdeg(mx), X.ring()->mono_degree(my));
            accumulate_insert_compose(out, *prod, factor, *X.space(), tx, ty, Y.slice_kdeg(my), X.weight());
        }
    out.prune();
    return out;
}

Coder coder_bracket(const Coder& f, const Coder& g) {
    Coder fg = insert_compose(f, g);
    Coder gf = insert_compose(g, f);
    int tw = sign_block_move(f.sdeg(), g.sdeg());
    return tw < 0 ? fg + gf : fg - gf;
}

Coder compose_with_morphism(const Coder& D, const Coder& lambda) {
    D.check_compatible(lambda);
    if (lambda.sdeg() != 0) throw structural_error("morphism must have suspended degree 0");
    check_even_ring(D.ring(), "morphism composition");
    const GradedSpace& sp = *D.space();
    const int d = sp.dim();
    const int W = D.weight();
    Coder out(D.space(), D.ring(), W, D.sdeg());
    for (int mo = 1; mo <= W; ++mo) {
        long long ntup = tuple_count(mo, d);
        for (long long r = 0; r < ntup; ++r) {
            Tuple t = tuple_unrank(r, mo, d);
            std::vector<std::tuple<Tuple, Mono, Scalar>> parts;
            morphism_partitions(lambda, t, 0, t.size(), parts);
            for (auto& [heads, mono, coeff] : parts) {
                int j = static_cast<int>(heads.size());
                if (j < 1 || j > W) continue;
                long long base = tuple_rank(heads, d) * d;
                for (auto& [md, td] : D.slices()) {
                    const FlatTable* ft = td.arity(j);
                    if (!ft) continue;
                    auto prod = D.ring()->mono_mul(md, mono);
                    if (!prod) continue;
                    for (int o = 0; o < d; ++o) {
                        const Scalar& c = (*ft)[static_cast<size_t>(base + o)];
                        if (!c.is_zero()) out.add_scalar(mo, *prod, r * d + o, coeff * c);
                    }
                }
            }
        }
    }
    out.prune();
    return out;
}

Coder identity_morphism(const SpacePtr& sp, const RingPtr& ring, int weight) {
    Coder lam(sp, ring, weight, 0);
    RingElem one = RingElem::one(ring);
    for (int b = 0; b < sp->dim(); ++b) lam.set_entry(1, {b}, b, one);
    return lam;
}

// exp(f) through the word-level coLeibniz action: the word space of length
// <= W is stable under f̂ and coefficients gain one maximal-ideal factor per
// application, so the series is a finite sum.
namespace {

using WordKey = std::pair<Tuple, Mono>;
using WordSum = std::map<WordKey, Scalar>;

WordSum apply_coder_word(const Coder& f, const WordSum& w) {
    WordSum out;
    const GradedSpace& sp = *f.space();
    const int d = sp.dim();
    for (auto& [key, c] : w) {
        const Tuple& t = key.first;
        Mono wm = key.second;
        int n = static_cast<int>(t.size());
        for (auto& [mf, tf] : f.slices()) {
            int kd = f.slice_kdeg(mf);
            // the k-part passes the word's left coefficient zone
            int zone = sign_block_move(kd, f.ring()->mono_degree(wm));
            auto prod = f.ring()->mono_mul(mf, wm);
            if (!prod) continue;
            for (int k = 1; k <= n; ++k) {
                const FlatTable* ft = tf.arity(k);
                if (!ft) continue;
                for (int i = 0; i + k <= n; ++i) {
                    int sgn = zone * sign_block_move(kd, susp_sum(sp, t, 0, static_cast<size_t>(i)));
                    long long base = tuple_rank(Tuple(t.begin() + i, t.begin() + i + k), d) * d;
                    for (int b = 0; b < d; ++b) {
                        const Scalar& cb = (*ft)[static_cast<size_t>(base + b)];
                        if (cb.is_zero()) continue;
                        Tuple u;
                        u.insert(u.end(), t.begin(), t.begin() + i);
                        u.push_back(b);
                        u.insert(u.end(), t.begin() + i + k, t.end());
                        Scalar v = c * cb;
                        if (sgn < 0) v = -v;
                        auto [it, fresh] = out.try_emplace(WordKey{std::move(u), *prod}, v);
                        if (!fresh) {
                            it->second += v;
                            if (it->second.is_zero()) out.erase(it);
                        }
                    }
                }
            }
        }
    }
    return out;
}

} // namespace

Coder coder_exp(const Coder& f) {
    if (f.sdeg() != 0) throw structural_error("exp needs total suspended degree 0");
    if (!f.in_maximal_ideal()) throw structural_error("exp needs coefficients in the maximal ideal");
    check_even_ring(f.ring(), "exp");
    const GradedSpace& sp = *f.space();
    const FieldSpec& fld = sp.field();
    const int d = sp.dim();
    const int W = f.weight();
    const int nil = f.ring()->nilpotency_index();
    Coder out = identity_morphism(f.space(), f.ring(), W);
    for (int mo = 1; mo <= W; ++mo) {
        long long ntup = tuple_count(mo, d);
        for (long long r = 0; r < ntup; ++r) {
            WordSum w{{WordKey{tuple_unrank(r, mo, d), 0}, Scalar::one(fld)}};
            Scalar fact = Scalar::one(fld);
            for (int j = 1; j < nil; ++j) {
                w = apply_coder_word(f, w);
                if (w.empty()) break;
                Scalar jj = Scalar::of_int(fld, j);
                if (jj.is_zero()) throw structural_error("factorial 1/" + std::to_string(j) + "! not invertible");
                fact = fact / jj;
                for (auto& [key, c] : w)
                    if (key.first.size() == 1) out.add_scalar(mo, key.second, r * d + key.first[0], c * fact);
            }
        }
    }
    out.prune();
    return out;
}

bool is_ainf_morphism(const Coder& lambda, const Coder& Dsrc, const Coder& Ddst) {
    return morphism_after_coder(lambda, Dsrc) == compose_with_morphism(Ddst, lambda);
}

bool morphism_invertible(const Coder& lambda) {
    const int d = lambda.dim();
    auto it = lambda.slices().find(0);
    if (it == lambda.slices().end()) return false;
    const FlatTable* l1 = it->second.arity(1);
    if (!l1) return false;
    // rank of the unit-slice λ_1 matrix
    std::vector<std::vector<Scalar>> cols;
    for (int j = 0; j < d; ++j) {
        std::vector<Scalar> col;
        for (int i = 0; i < d; ++i) col.push_back((*l1)[static_cast<size_t>(j * d + i)]);
        cols.push_back(std::move(col));
    }
    // Gaussian rank without pulling in linalg.hpp: reuse a tiny elimination.
    int rank = 0;
    for (int c = 0; c < d; ++c) {
        int p = -1;
        for (int i = rank; i < d; ++i)
            if (!cols[static_cast<size_t>(c)][static_cast<size_t>(i)].is_zero()) {
                p = i;
                break;
            }
        if (p < 0) continue;
        for (auto& col : cols) std::swap(col[static_cast<size_t>(p)], col[static_cast<size_t>(rank)]);
        Scalar inv = cols[static_cast<size_t>(c)][static_cast<size_t>(rank)].inverse();
        for (int cc = 0; cc < d; ++cc) {
            if (cc == c) continue;
            Scalar f = cols[static_cast<size_t>(cc)][static_cast<size_t>(rank)] * inv;
            if (f.is_zero()) continue;
            for (int i = 0; i < d; ++i)
                cols[static_cast<size_t>(cc)][static_cast<size_t>(i)] -=
                    f * cols[static_cast<size_t>(c)][static_cast<size_t>(i)];
        }
        ++rank;
    }
    return rank == d;
}

} // namespace ainf
