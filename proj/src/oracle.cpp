#include "ainf/oracle.hpp"

namespace ainf {

WordSpace::WordSpace(SpacePtr sp_, ModKind kind_, int W_) : sp(std::move(sp_)), kind(kind_), W(W_) {
    const int d = sp->dim();
    for (int len = 1; len <= W; ++len)
        for (int k = 0; k < len; ++k) {
            int l = len - 1 - k;
            long long nt = tuple_count(len, d);
            for (long long r = 0; r < nt; ++r) {
                BWord w{k, l, tuple_unrank(r, len, d)};
                index.emplace(w, static_cast<int>(words.size()));
                words.push_back(std::move(w));
            }
        }
}

std::string WordSpace::label(int i) const {
    const BWord& w = words[static_cast<size_t>(i)];
    std::string out;
    for (int p = 0; p < static_cast<int>(w.t.size()); ++p) {
        if (p) out += "|";
        if (p == w.k)
            out += "[" + (kind == ModKind::A ? sp->basis(w.t[static_cast<size_t>(p)]).name
                                             : sp->dual_name(w.t[static_cast<size_t>(p)])) +
                   "]";
        else
            out += sp->basis(w.t[static_cast<size_t>(p)]).name;
    }
    return out;
}

Coder slice_restrict(const Coder& c, Mono m) {
    Coder out(c.space(), c.ring(), c.weight(), c.sdeg());
    auto it = c.slices().find(m);
    if (it == c.slices().end()) return out;
    for (int k = 1; k <= c.weight(); ++k)
        if (const FlatTable* ft = it->second.arity(k))
            for (long long x = 0; x < static_cast<long long>(ft->size()); ++x)
                out.add_scalar(k, m, x, (*ft)[static_cast<size_t>(x)]);
    out.prune();
    return out;
}

BimodMap slice_restrict(const BimodMap& c, Mono m) {
    BimodMap out(c.space(), c.ring(), c.weight(), c.sdeg(), c.src(), c.dst());
    auto it = c.slices().find(m);
    if (it == c.slices().end()) return out;
    for (auto& [kl, ft] : it->second)
        for (long long x = 0; x < static_cast<long long>(ft.size()); ++x)
            out.add_scalar(kl.first, kl.second, m, x, ft[static_cast<size_t>(x)]);
    out.prune();
    return out;
}

ExactMatrix induced_coder_matrix(const Coder& f_slice, Mono m, const WordSpace& ws) {
    const FieldSpec& fld = ws.sp->field();
    ExactMatrix M(fld, ws.size(), ws.size());
    for (int j = 0; j < ws.size(); ++j) {
        BWordSum img = apply_induced_coder(f_slice, ws.kind, ws.words[static_cast<size_t>(j)], 0);
        for (auto& [term, c] : img) {
            if (term.second != m) continue; // single-slice f applied to a unit-monomial word
            auto it = ws.index.find(term.first);
            if (it == ws.index.end()) continue; // beyond truncation (cannot happen: length shrinks)
            M.at(it->second, j) += c;
        }
    }
    return M;
}

ExactMatrix comap_matrix(const BimodMap& F_slice, Mono m, const WordSpace& src, const WordSpace& dst) {
    const FieldSpec& fld = src.sp->field();
    ExactMatrix M(fld, dst.size(), src.size());
    for (int j = 0; j < src.size(); ++j) {
        BWordSum img = apply_comap_word(F_slice, src.words[static_cast<size_t>(j)], 0);
        for (auto& [term, c] : img) {
            if (term.second != m) continue;
            auto it = dst.index.find(term.first);
            if (it == dst.index.end()) continue;
            M.at(it->second, j) += c;
        }
    }
    return M;
}

BimodMap compose_delta_oracle(const Coder& f, const BimodMap& F) {
    check_same_space(f.space(), F.space());
    check_same_ring(f.ring(), F.ring());
    if (f.weight() != F.weight()) throw structural_error("truncation weight mismatch");
    if (F.src() != ModKind::A || F.dst() != ModKind::Adual)
        throw structural_error("oracle expects a Comap(T^A A, T^{A*} A)");
    const SpacePtr& sp = f.space();
    const RingPtr& R = f.ring();
    const int W = f.weight();
    const int d = sp->dim();
    WordSpace wsA(sp, ModKind::A, W);
    WordSpace wsD(sp, ModKind::Adual, W);
    int tw = sign_block_move(f.sdeg(), F.sdeg());

    BimodMap out(sp, R, W, f.sdeg() + F.sdeg(), ModKind::A, ModKind::Adual);
    for (auto& [mf, tf] : f.slices()) {
        Coder fs = slice_restrict(f, mf);
        ExactMatrix MfA = induced_coder_matrix(fs, mf, wsA);
        ExactMatrix MfD = induced_coder_matrix(fs, mf, wsD);
        for (auto& [mF, bF] : F.slices()) {
            auto prod = R->mono_mul(mf, mF);
            if (!prod) continue;
            BimodMap Fs = slice_restrict(F, mF);
            ExactMatrix MF = comap_matrix(Fs, mF, wsA, wsD);
            int g_left = slice_sign(f.slice_kdeg(mf), R->mono_degree(mF));
            int g_right = slice_sign(F.slice_kdeg(mF), R->mono_degree(mf));
            ExactMatrix left = (MfD * MF).scaled(Scalar::of_int(sp->field(), g_left));
            ExactMatrix right = (MF * MfA).scaled(Scalar::of_int(sp->field(), tw * g_right));
            ExactMatrix comp = left - right;
            // read back the (k,l)-components: columns are pure (k,l)-words,
            // rows the length-1 dual words
            for (int j = 0; j < wsA.size(); ++j) {
                const BWord& w = wsA.words[static_cast<size_t>(j)];
                if (w.k + w.l + 2 > W) continue;
                for (int z = 0; z < d; ++z) {
                    BWord bare{0, 0, {z}};
                    int row = wsD.index.at(bare);
                    const Scalar& v = comp.at(row, j);
                    if (v.is_zero()) continue;
                    out.add_scalar(w.k, w.l, *prod, tuple_rank(w.t, d) * d + z, v);
                }
            }
        }
    }
    out.prune();
    return out;
}

} // namespace ainf
