#include "ainf/bimod.hpp"

#include <algorithm>

namespace ainf {

namespace {

/// Σ suspended degrees of word letters [from,to) where the letter at
/// `modpos` has module kind `kind`.
int wsusp(const GradedSpace& sp, const Tuple& t, size_t from, size_t to, size_t modpos, ModKind kind) {
    int s = 0;
    for (size_t i = from; i < to && i < t.size(); ++i)
        s += (i == modpos) ? module_susp(sp, kind, t[i]) : sp.susp(t[i]);
    return s;
}

} // namespace

BimodMap::BimodMap(SpacePtr sp, RingPtr ring, int weight, int sdeg, ModKind src, ModKind dst)
    : sp_(std::move(sp)), ring_(std::move(ring)), weight_(weight), sdeg_(sdeg), src_(src), dst_(dst) {
    if (!sp_ || !ring_) throw structural_error("comap needs a space and a ring");
    if (!(sp_->field() == ring_->field())) throw structural_error("space/ring field mismatch");
    if (weight_ < 2) throw structural_error("comap weight must be >= 2");
}

bool BimodMap::is_zero() const {
    for (auto& [m, bt] : sl_)
        for (auto& [kl, t] : bt)
            for (auto& s : t)
                if (!s.is_zero()) return false;
    return true;
}

std::optional<std::pair<int, int>> BimodMap::first_nonzero_kl() const {
    std::optional<std::pair<int, int>> best;
    for (auto& [m, bt] : sl_)
        for (auto& [kl, t] : bt)
            for (auto& s : t)
                if (!s.is_zero()) {
                    if (!best || kl < *best) best = kl;
                    break;
                }
    return best;
}

RingElem BimodMap::entry(int k, int l, const Tuple& in, int out) const {
    if (static_cast<int>(in.size()) != k + l + 1) throw structural_error("bad component tuple length");
    RingElem v(ring_);
    long long flat = tuple_rank(in, dim()) * dim() + out;
    for (auto& [m, bt] : sl_) {
        auto it = bt.find({k, l});
        if (it == bt.end() || it->second.empty()) continue;
        const Scalar& c = it->second[static_cast<size_t>(flat)];
        if (!c.is_zero()) v.add_term(m, c);
    }
    return v;
}

void BimodMap::set_entry(int k, int l, const Tuple& in, int out, const RingElem& v) {
    if (k < 0 || l < 0 || k + l + 2 > weight_) throw structural_error("comap component (k,l) outside weight");
    if (static_cast<int>(in.size()) != k + l + 1) throw structural_error("bad component tuple length");
    check_same_ring(ring_, v.ring());
    int in_susp = wsusp(*sp_, in, 0, in.size(), static_cast<size_t>(k), src_);
    int need = module_susp(*sp_, dst_, out) - in_susp;
    long long flat = tuple_rank(in, dim()) * dim() + out;
    for (auto& [m, c] : v.terms()) {
        if (need != sdeg_ - ring_->mono_degree(m))
            throw structural_error("comap entry violates declared suspended degree at (" + std::to_string(k) + "," +
                                   std::to_string(l) + ")");
        FlatTable& t = sl_[m][{k, l}];
        if (t.empty()) t.assign(static_cast<size_t>(tuple_count(k + l + 1, dim()) * dim()), Scalar::zero(sp_->field()));
        t[static_cast<size_t>(flat)] = c;
    }
}

void BimodMap::add_scalar(int k, int l, Mono m, long long flat, const Scalar& c) {
    if (c.is_zero()) return;
    FlatTable& t = sl_[m][{k, l}];
    if (t.empty()) t.assign(static_cast<size_t>(tuple_count(k + l + 1, dim()) * dim()), Scalar::zero(sp_->field()));
    t[static_cast<size_t>(flat)] += c;
}

RingElem BimodMap::form(int k, int l, const Tuple& in) const {
    if (dst_ != ModKind::Adual) throw structural_error("pairing form view needs an A*-valued comap");
    if (static_cast<int>(in.size()) != k + l + 2) throw structural_error("form tuple needs k+l+2 letters");
    Tuple head(in.begin(), in.end() - 1);
    return entry(k, l, head, in.back());
}

void BimodMap::check_compatible(const BimodMap& o) const {
    check_same_space(sp_, o.sp_);
    check_same_ring(ring_, o.ring_);
    if (weight_ != o.weight_) throw structural_error("truncation weight mismatch");
    if (src_ != o.src_ || dst_ != o.dst_) throw structural_error("bimodule species mismatch");
}

BimodMap BimodMap::operator+(const BimodMap& o) const {
    check_compatible(o);
    if (sdeg_ != o.sdeg_ && !is_zero() && !o.is_zero()) throw structural_error("degree mismatch in sum");
    BimodMap out = *this;
    if (out.is_zero()) out.sdeg_ = o.sdeg_;
    for (auto& [m, bt] : o.sl_)
        for (auto& [kl, t] : bt)
            for (long long i = 0; i < static_cast<long long>(t.size()); ++i)
                out.add_scalar(kl.first, kl.second, m, i, t[static_cast<size_t>(i)]);
    out.prune();
    return out;
}

BimodMap BimodMap::operator-() const { return scaled(-Scalar::one(sp_->field())); }
BimodMap BimodMap::operator-(const BimodMap& o) const { return *this + (-o); }

BimodMap BimodMap::scaled(const Scalar& c) const {
    BimodMap out(sp_, ring_, weight_, sdeg_, src_, dst_);
    if (c.is_zero()) return out;
    out.sl_ = sl_;
    for (auto& [m, bt] : out.sl_)
        for (auto& [kl, t] : bt)
            for (auto& s : t) s *= c;
    return out;
}

BimodMap BimodMap::scaled_h(const RingElem& r) const {
    check_same_ring(ring_, r.ring());
    auto d = r.homogeneous_degree();
    if (!d) throw structural_error("scaling ring element must be homogeneous");
    BimodMap out(sp_, ring_, weight_, sdeg_ + *d, src_, dst_);
    for (auto& [mr, cr] : r.terms())
        for (auto& [m, bt] : sl_) {
            auto prod = ring_->mono_mul(mr, m);
            if (!prod) continue;
            for (auto& [kl, t] : bt)
                for (long long i = 0; i < static_cast<long long>(t.size()); ++i)
                    out.add_scalar(kl.first, kl.second, *prod, i, cr * t[static_cast<size_t>(i)]);
        }
    out.prune();
    return out;
}

bool BimodMap::operator==(const BimodMap& o) const { return (*this - o).is_zero(); }

bool BimodMap::in_maximal_ideal() const {
    auto it = sl_.find(0);
    if (it == sl_.end()) return true;
    for (auto& [kl, t] : it->second)
        for (auto& s : t)
            if (!s.is_zero()) return false;
    return true;
}

void BimodMap::prune() {
    for (auto it = sl_.begin(); it != sl_.end();) {
        bool zero = true;
        for (auto& [kl, t] : it->second)
            for (auto& s : t)
                if (!s.is_zero()) {
                    zero = false;
                    break;
                }
        if (zero)
            it = sl_.erase(it);
        else
            ++it;
    }
}

// --- insertion term enumeration ---------------------------------------------

std::string InsertionTerm::line() const {
    std::string out = "f_" + std::to_string(n) + " @ position " + std::to_string(position);
    out += wraps ? " (wrap)" : " (nowrap)";
    out += " -> (" + std::to_string(k_out) + "," + std::to_string(l_out) + ")";
    return out;
}

std::vector<InsertionTerm> enumerate_insertion_terms(int k, int l, int W) {
    if (k < 0 || l < 0) throw structural_error("(k,l) must be nonnegative");
    const int P = k + l + 2;
    const int s1 = k + 1, s2 = k + l + 2; // the two special inputs
    std::vector<InsertionTerm> out;
    int nmax = std::min(W, k + l + 1);
    for (int n = 1; n <= nmax; ++n)
        for (int start = 1; start <= P; ++start) {
            bool has1 = false, has2 = false;
            for (int j = 0; j < n; ++j) {
                int pos = (start - 1 + j) % P + 1;
                has1 |= pos == s1;
                has2 |= pos == s2;
            }
            if (has1 && has2) continue;
            InsertionTerm t;
            t.n = n;
            t.position = start;
            t.wraps = start + n - 1 > P;
            if (has1) {
                t.type = 'c';
                int r = s1 - start;
                int s = n - 1 - r;
                t.k_out = k - r;
                t.l_out = l - s;
            } else if (has2) {
                t.type = 'd';
                int bt = (start == s2) ? 0 : (k + l + 2 - start); // bottom-tail letters in the block
                int tp = n - 1 - bt;                              // top-prefix letters in the block
                t.k_out = k - tp;
                t.l_out = l - bt;
            } else if (start + n - 1 <= k) {
                t.type = 'a';
                t.k_out = k - n + 1;
                t.l_out = l;
            } else {
                t.type = 'b';
                t.k_out = k;
                t.l_out = l - n + 1;
            }
            out.push_back(t);
        }
    return out;
}

// --- the two halves of δ_f ---------------------------------------------------

namespace {

/// Evaluate one coder slice at arity n on a tuple; calls fn(out_idx, coeff).
template <class Fn>
void eval_slice(const KTables& tf, int n, const Tuple& args, int d, Fn&& fn) {
    const FlatTable* ft = tf.arity(n);
    if (!ft) return;
    long long base = tuple_rank(args, d) * d;
    for (int b = 0; b < d; ++b) {
        const Scalar& c = (*ft)[static_cast<size_t>(base + b)];
        if (!c.is_zero()) fn(b, c);
    }
}

/// Look up a form value Ψ_{(k,l)}(tuple; z) in one comap slice.
const Scalar* slice_form(const BimodMap::BTables& bt, int k, int l, const Tuple& in, int z, int d) {
    auto it = bt.find({k, l});
    if (it == bt.end() || it->second.empty()) return nullptr;
    return &it->second[static_cast<size_t>(tuple_rank(in, d) * d + z)];
}

void check_delta_species(const BimodMap& F) {
    if (F.src() != ModKind::A || F.dst() != ModKind::Adual)
        throw structural_error("insertion engine expects a Comap(T^A A, T^{A*} A)");
}

} // namespace

BimodMap compose_dual_side(const Coder& f, const BimodMap& F) {
    check_same_space(f.space(), F.space());
    check_same_ring(f.ring(), F.ring());
    if (f.weight() != F.weight()) throw structural_error("truncation weight mismatch");
    check_delta_species(F);
    const GradedSpace& sp = *f.space();
    const int d = sp.dim();
    const int W = F.weight();
    BimodMap out(F.space(), F.ring(), W, f.sdeg() + F.sdeg(), ModKind::A, ModKind::Adual);

    for (auto& [mf, tf] : f.slices()) {
        int sphi = f.slice_kdeg(mf);
        for (auto& [mF, bF] : F.slices()) {
            auto prod = f.ring()->mono_mul(mf, mF);
            if (!prod) continue;
            int u = F.slice_kdeg(mF);
            int g = slice_sign(sphi, f.ring()->mono_degree(mF));
            for (int k = 0; k + 2 <= W; ++k)
                for (int l = 0; k + l + 2 <= W; ++l) {
                    const int len = k + l + 2;
                    for (const InsertionTerm& term : enumerate_insertion_terms(k, l, W)) {
                        if (term.type != 'd') continue;
                        int bt = (term.position == len) ? 0 : (len - term.position);
                        int tp = term.n - 1 - bt;
                        int q = k + l + 1 - bt; // 0-based end of the middle block
                        long long ntup = tuple_count(len, d);
                        for (long long r = 0; r < ntup; ++r) {
                            Tuple t = tuple_unrank(r, len, d);
                            int xs = susp_sum(sp, t, 0, static_cast<size_t>(tp));
                            int ys = susp_sum(sp, t, static_cast<size_t>(q), static_cast<size_t>(k + l + 1));
                            int nu = susp_sum(sp, t, static_cast<size_t>(tp), static_cast<size_t>(q)) + u;
                            int sg1 = sign_block_move(u, xs); // F jumps the top prefix
                            Tuple fargs(t.begin() + q, t.begin() + (k + l + 1));
                            fargs.push_back(t[static_cast<size_t>(k + l + 1)]);
                            fargs.insert(fargs.end(), t.begin(), t.begin() + tp);
                            eval_slice(tf, term.n, fargs, d, [&](int b, const Scalar& cb) {
                                // ‖z‖ is the original pairing input, not f's output
                                int da = dual_action_sign(sphi, xs, nu, ys,
                                                          sp.susp(t[static_cast<size_t>(k + l + 1)]));
                                Tuple inner(t.begin() + tp, t.begin() + q);
                                const Scalar* fv = slice_form(bF, term.k_out, term.l_out, inner, b, d);
                                if (!fv || fv->is_zero()) return;
                                Scalar v = cb * (*fv);
                                if (g * sg1 * da < 0) v = -v;
                                out.add_scalar(k, l, *prod, r, v);
                            });
                        }
                    }
                }
        }
    }
    out.prune();
    return out;
}

BimodMap compose_mod_side(const BimodMap& F, const Coder& f) {
    check_same_space(f.space(), F.space());
    check_same_ring(f.ring(), F.ring());
    if (f.weight() != F.weight()) throw structural_error("truncation weight mismatch");
    check_delta_species(F);
    const GradedSpace& sp = *f.space();
    const int d = sp.dim();
    const int W = F.weight();
    BimodMap out(F.space(), F.ring(), W, f.sdeg() + F.sdeg(), ModKind::A, ModKind::Adual);

    for (auto& [mF, bF] : F.slices()) {
        int u = F.slice_kdeg(mF);
        for (auto& [mf, tf] : f.slices()) {
            auto prod = f.ring()->mono_mul(mF, mf);
            if (!prod) continue;
            int sphi = f.slice_kdeg(mf);
            int g = slice_sign(u, f.ring()->mono_degree(mf));
            for (int k = 0; k + 2 <= W; ++k)
                for (int l = 0; k + l + 2 <= W; ++l) {
                    const int len = k + l + 2;
                    for (const InsertionTerm& term : enumerate_insertion_terms(k, l, W)) {
                        if (term.type == 'd') continue;
                        int i0 = term.position - 1; // 0-based block start
                        int n = term.n;
                        long long ntup = tuple_count(len, d);
                        for (long long r = 0; r < ntup; ++r) {
                            Tuple t = tuple_unrank(r, len, d);
                            // module letter sits at position k and has kind A: plain susp
                            int prefix = susp_sum(sp, t, 0, static_cast<size_t>(i0));
                            int sg1 = sign_block_move(sphi, prefix);
                            Tuple fargs(t.begin() + i0, t.begin() + i0 + n);
                            eval_slice(tf, n, fargs, d, [&](int b, const Scalar& cb) {
                                Tuple outer;
                                outer.reserve(static_cast<size_t>(len - n + 1));
                                outer.insert(outer.end(), t.begin(), t.begin() + i0);
                                outer.push_back(b);
                                outer.insert(outer.end(), t.begin() + i0 + n, t.end());
                                Tuple head(outer.begin(), outer.end() - 1);
                                const Scalar* fv =
                                    slice_form(bF, term.k_out, term.l_out, head, outer.back(), d);
                                if (!fv || fv->is_zero()) return;
                                Scalar v = cb * (*fv);
                                if (g * sg1 < 0) v = -v;
                                out.add_scalar(k, l, *prod, r, v);
                            });
                        }
                    }
                }
        }
    }
    out.prune();
    return out;
}

BimodMap delta_f(const Coder& f, const BimodMap& F) {
    BimodMap left = compose_dual_side(f, F);
    BimodMap right = compose_mod_side(F, f);
    int tw = sign_block_move(f.sdeg(), F.sdeg());
    return tw < 0 ? left + right : left - right;
}

BimodMap comap_differential(const Coder& gN, const Coder& gM, const BimodMap& F) {
    BimodMap left = compose_dual_side(gN, F);
    BimodMap right = compose_mod_side(F, gM);
    int tw = sign_pow(F.sdeg());
    return tw < 0 ? left + right : left - right;
}

// --- generic bimodule-map machinery ------------------------------------------

BimodMap compose_bimod(const BimodMap& G, const BimodMap& H) {
    check_same_space(G.space(), H.space());
    check_same_ring(G.ring(), H.ring());
    if (G.weight() != H.weight()) throw structural_error("truncation weight mismatch");
    if (G.src() != H.dst()) throw structural_error("bimodule species mismatch in composition");
    const GradedSpace& sp = *G.space();
    const int d = sp.dim();
    const int W = G.weight();
    BimodMap out(G.space(), G.ring(), W, G.sdeg() + H.sdeg(), H.src(), G.dst());

    for (auto& [mG, bG] : G.slices()) {
        for (auto& [mH, bH] : H.slices()) {
            auto prod = G.ring()->mono_mul(mG, mH);
            if (!prod) continue;
            int gsign = slice_sign(G.slice_kdeg(mG), G.ring()->mono_degree(mH));
            int uh = H.slice_kdeg(mH);
            for (int k = 0; k + 2 <= W; ++k)
                for (int l = 0; k + l + 2 <= W; ++l) {
                    const int len = k + l + 1;
                    long long ntup = tuple_count(len, d);
                    for (long long r = 0; r < ntup; ++r) {
                        Tuple t = tuple_unrank(r, len, d);
                        for (int i = 0; i <= k; ++i)
                            for (int j = k + 1; j <= len; ++j) {
                                // H's component on t[i..j) (module at k), G eats the rest
                                auto itH = bH.find({k - i, j - 1 - k});
                                if (itH == bH.end() || itH->second.empty()) continue;
                                auto itG = bG.find({i, len - j});
                                if (itG == bG.end() || itG->second.empty()) continue;
                                int pre = wsusp(sp, t, 0, static_cast<size_t>(i), static_cast<size_t>(k), H.src());
                                int sg = gsign * sign_block_move(uh, pre);
                                Tuple mid(t.begin() + i, t.begin() + j);
                                long long hbase = tuple_rank(mid, d) * d;
                                for (int hb = 0; hb < d; ++hb) {
                                    const Scalar& ch = itH->second[static_cast<size_t>(hbase + hb)];
                                    if (ch.is_zero()) continue;
                                    Tuple uu;
                                    uu.reserve(static_cast<size_t>(len - (j - i) + 1));
                                    uu.insert(uu.end(), t.begin(), t.begin() + i);
                                    uu.push_back(hb);
                                    uu.insert(uu.end(), t.begin() + j, t.end());
                                    long long gbase = tuple_rank(uu, d) * d;
                                    for (int o = 0; o < d; ++o) {
                                        const Scalar& cg = itG->second[static_cast<size_t>(gbase + o)];
                                        if (cg.is_zero()) continue;
                                        Scalar v = cg * ch;
                                        if (sg < 0) v = -v;
                                        out.add_scalar(k, l, *prod, r * d + o, v);
                                    }
                                }
                            }
                    }
                }
        }
    }
    out.prune();
    return out;
}

BimodMap module_action(const Coder& f, ModKind kind, int weight) {
    const GradedSpace& sp = *f.space();
    const int d = sp.dim();
    BimodMap out(f.space(), f.ring(), weight, f.sdeg(), kind, kind);
    for (auto& [mf, tf] : f.slices()) {
        int sphi = f.slice_kdeg(mf);
        for (int k = 0; k + 2 <= weight; ++k)
            for (int l = 0; k + l + 2 <= weight; ++l) {
                int n = k + l + 1;
                if (!tf.arity(n)) continue;
                long long ntup = tuple_count(n, d);
                for (long long r = 0; r < ntup; ++r) {
                    Tuple t = tuple_unrank(r, n, d);
                    if (kind == ModKind::A) {
                        eval_slice(tf, n, t, d,
                                   [&](int b, const Scalar& c) { out.add_scalar(k, l, mf, r * d + b, c); });
                    } else {
                        // (f^{A*}(x, ν, y))(z) = ± ν(f(y, z, x)) with ν = t[k]
                        int xs = susp_sum(sp, t, 0, static_cast<size_t>(k));
                        int ys = susp_sum(sp, t, static_cast<size_t>(k + 1), static_cast<size_t>(n));
                        int nu = sp.dual_susp(t[static_cast<size_t>(k)]);
                        for (int z = 0; z < d; ++z) {
                            Tuple fargs(t.begin() + k + 1, t.end());
                            fargs.push_back(z);
                            fargs.insert(fargs.end(), t.begin(), t.begin() + k);
                            eval_slice(tf, n, fargs, d, [&](int b, const Scalar& c) {
                                if (b != t[static_cast<size_t>(k)]) return;
                                int sg = dual_action_sign(sphi, xs, nu, ys, sp.susp(z));
                                out.add_scalar(k, l, mf, r * d + z, sg < 0 ? -c : c);
                            });
                        }
                    }
                }
            }
    }
    out.prune();
    return out;
}

BimodMap induce_along(const Coder& lambda, const BimodMap& S) {
    check_same_space(lambda.space(), S.space());
    check_same_ring(lambda.ring(), S.ring());
    if (lambda.weight() != S.weight()) throw structural_error("truncation weight mismatch");
    if (lambda.sdeg() != 0) throw structural_error("morphism must have suspended degree 0");
    check_even_ring(S.ring(), "induced maps along a morphism");
    const GradedSpace& sp = *S.space();
    const int d = sp.dim();
    const int W = S.weight();
    BimodMap out(S.space(), S.ring(), W, S.sdeg(), S.src(), S.dst());
    for (int k = 0; k + 2 <= W; ++k)
        for (int l = 0; k + l + 2 <= W; ++l) {
            const int len = k + l + 1;
            long long ntup = tuple_count(len, d);
            for (long long r = 0; r < ntup; ++r) {
                Tuple t = tuple_unrank(r, len, d);
                std::vector<std::tuple<Tuple, Mono, Scalar>> tops, bots;
                morphism_partitions(lambda, t, 0, static_cast<size_t>(k), tops);
                morphism_partitions(lambda, t, static_cast<size_t>(k + 1), static_cast<size_t>(len), bots);
                for (auto& [ht, mt, ct] : tops)
                    for (auto& [hb, mb, cb] : bots) {
                        auto mono_tb = S.ring()->mono_mul(mt, mb);
                        if (!mono_tb) continue;
                        Tuple in = ht;
                        in.push_back(t[static_cast<size_t>(k)]);
                        in.insert(in.end(), hb.begin(), hb.end());
                        int rK = static_cast<int>(ht.size()), sL = static_cast<int>(hb.size());
                        if (rK + sL + 2 > W) continue;
                        long long base = tuple_rank(in, d) * d;
                        for (auto& [mS, bS] : S.slices()) {
                            auto itS = bS.find({rK, sL});
                            if (itS == bS.end() || itS->second.empty()) continue;
                            auto prod = S.ring()->mono_mul(mS, *mono_tb);
                            if (!prod) continue;
                            for (int o = 0; o < d; ++o) {
                                const Scalar& c = itS->second[static_cast<size_t>(base + o)];
                                if (!c.is_zero()) out.add_scalar(k, l, *prod, r * d + o, ct * cb * c);
                            }
                        }
                    }
            }
        }
    out.prune();
    return out;
}

BimodMap bar_lambda(const Coder& lambda, int weight) {
    if (lambda.sdeg() != 0) throw structural_error("morphism must have suspended degree 0");
    const GradedSpace& sp = *lambda.space();
    const int d = sp.dim();
    BimodMap out(lambda.space(), lambda.ring(), weight, 0, ModKind::A, ModKind::A);
    for (auto& [m, tf] : lambda.slices())
        for (int k = 0; k + 2 <= weight; ++k)
            for (int l = 0; k + l + 2 <= weight; ++l) {
                int n = k + l + 1;
                const FlatTable* ft = tf.arity(n);
                if (!ft) continue;
                for (long long i = 0; i < static_cast<long long>(ft->size()); ++i) {
                    const Scalar& c = (*ft)[static_cast<size_t>(i)];
                    if (!c.is_zero()) out.add_scalar(k, l, m, i, c);
                }
            }
    out.prune();
    return out;
}

BimodMap tilde_lambda(const Coder& lambda, int weight) {
    if (lambda.sdeg() != 0) throw structural_error("morphism must have suspended degree 0");
    const GradedSpace& sp = *lambda.space();
    const int d = sp.dim();
    BimodMap out(lambda.space(), lambda.ring(), weight, 0, ModKind::Adual, ModKind::Adual);
    for (auto& [m, tf] : lambda.slices()) {
        int kd = lambda.slice_kdeg(m);
        for (int k = 0; k + 2 <= weight; ++k)
            for (int l = 0; k + l + 2 <= weight; ++l) {
                int n = k + l + 1;
                if (!tf.arity(n)) continue;
                long long ntup = tuple_count(n, d);
                for (long long r = 0; r < ntup; ++r) {
                    Tuple t = tuple_unrank(r, n, d);
                    int xs = susp_sum(sp, t, 0, static_cast<size_t>(k));
                    int ys = susp_sum(sp, t, static_cast<size_t>(k + 1), static_cast<size_t>(n));
                    int nu = sp.dual_susp(t[static_cast<size_t>(k)]);
                    for (int z = 0; z < d; ++z) {
                        Tuple args(t.begin() + k + 1, t.end());
                        args.push_back(z);
                        args.insert(args.end(), t.begin(), t.begin() + k);
                        eval_slice(tf, n, args, d, [&](int b, const Scalar& c) {
                            if (b != t[static_cast<size_t>(k)]) return;
                            int sg = dual_transpose_sign(kd, xs, nu, ys, sp.susp(z));
                            out.add_scalar(k, l, m, r * d + z, sg < 0 ? -c : c);
                        });
                    }
                }
            }
    }
    out.prune();
    return out;
}

// --- word-level coLeibniz actions --------------------------------------------

void bword_add(BWordSum& sum, const BWord& w, Mono m, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = sum.try_emplace(BWordTerm{w, m}, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) sum.erase(it);
    }
}

BWordSum apply_induced_coder(const Coder& f, ModKind kind, const BWord& w, Mono wm) {
    const GradedSpace& sp = *f.space();
    const int d = sp.dim();
    const int len = w.k + w.l + 1;
    BWordSum out;
    for (auto& [mf, tf] : f.slices()) {
        int kd = f.slice_kdeg(mf);
        auto mono = f.ring()->mono_mul(mf, wm);
        if (!mono) continue;
        int zone = sign_block_move(kd, f.ring()->mono_degree(wm));
        // pure-A Leibniz insertions (block strictly inside the top or bottom letters)
        for (int n = 1; n <= len; ++n) {
            if (!tf.arity(n)) continue;
            for (int i = 0; i + n <= len; ++i) {
                bool covers_mod = i <= w.k && w.k < i + n;
                int pre = wsusp(sp, w.t, 0, static_cast<size_t>(i), static_cast<size_t>(w.k), kind);
                int sg = zone * sign_block_move(kd, pre);
                if (!covers_mod) {
                    Tuple args(w.t.begin() + i, w.t.begin() + i + n);
                    eval_slice(tf, n, args, d, [&](int b, const Scalar& c) {
                        BWord nw;
                        nw.t.insert(nw.t.end(), w.t.begin(), w.t.begin() + i);
                        nw.t.push_back(b);
                        nw.t.insert(nw.t.end(), w.t.begin() + i + n, w.t.end());
                        nw.k = i + n <= w.k ? w.k - n + 1 : w.k;
                        nw.l = len - n + 1 - 1 - nw.k;
                        bword_add(out, nw, *mono, sg < 0 ? -c : c);
                    });
                } else if (kind == ModKind::A) {
                    Tuple args(w.t.begin() + i, w.t.begin() + i + n);
                    eval_slice(tf, n, args, d, [&](int b, const Scalar& c) {
                        BWord nw;
                        nw.t.insert(nw.t.end(), w.t.begin(), w.t.begin() + i);
                        nw.t.push_back(b);
                        nw.t.insert(nw.t.end(), w.t.begin() + i + n, w.t.end());
                        nw.k = i;
                        nw.l = len - n - i;
                        bword_add(out, nw, *mono, sg < 0 ? -c : c);
                    });
                } else {
                    // dual module action on the block t[i..i+n) around the dual slot
                    int xs = susp_sum(sp, w.t, static_cast<size_t>(i), static_cast<size_t>(w.k));
                    int ys = susp_sum(sp, w.t, static_cast<size_t>(w.k + 1), static_cast<size_t>(i + n));
                    int nu = sp.dual_susp(w.t[static_cast<size_t>(w.k)]);
                    for (int z = 0; z < d; ++z) {
                        Tuple args(w.t.begin() + w.k + 1, w.t.begin() + i + n);
                        args.push_back(z);
                        args.insert(args.end(), w.t.begin() + i, w.t.begin() + w.k);
                        eval_slice(tf, n, args, d, [&](int b, const Scalar& c) {
                            if (b != w.t[static_cast<size_t>(w.k)]) return;
                            int da = dual_action_sign(kd, xs, nu, ys, sp.susp(z));
                            BWord nw;
                            nw.t.insert(nw.t.end(), w.t.begin(), w.t.begin() + i);
                            nw.t.push_back(z);
                            nw.t.insert(nw.t.end(), w.t.begin() + i + n, w.t.end());
                            nw.k = i;
                            nw.l = len - n - i;
                            bword_add(out, nw, *mono, (sg * da) < 0 ? -c : c);
                        });
                    }
                }
            }
        }
    }
    return out;
}

BWordSum apply_comap_word(const BimodMap& F, const BWord& w, Mono wm) {
    const GradedSpace& sp = *F.space();
    const int d = sp.dim();
    const int len = w.k + w.l + 1;
    BWordSum out;
    for (auto& [mF, bF] : F.slices()) {
        int u = F.slice_kdeg(mF);
        auto mono = F.ring()->mono_mul(mF, wm);
        if (!mono) continue;
        int zone = sign_block_move(u, F.ring()->mono_degree(wm));
        for (int i = 0; i <= w.k; ++i)
            for (int j = w.k + 1; j <= len; ++j) {
                auto it = bF.find({w.k - i, j - 1 - w.k});
                if (it == bF.end() || it->second.empty()) continue;
                int pre = wsusp(sp, w.t, 0, static_cast<size_t>(i), static_cast<size_t>(w.k), F.src());
                int sg = zone * sign_block_move(u, pre);
                Tuple mid(w.t.begin() + i, w.t.begin() + j);
                long long base = tuple_rank(mid, d) * d;
                for (int b = 0; b < d; ++b) {
                    const Scalar& c = it->second[static_cast<size_t>(base + b)];
                    if (c.is_zero()) continue;
                    BWord nw;
                    nw.t.insert(nw.t.end(), w.t.begin(), w.t.begin() + i);
                    nw.t.push_back(b);
                    nw.t.insert(nw.t.end(), w.t.begin() + j, w.t.end());
                    nw.k = i;
                    nw.l = len - j;
                    bword_add(out, nw, *mono, sg < 0 ? -c : c);
                }
            }
    }
    return out;
}

} // namespace ainf
