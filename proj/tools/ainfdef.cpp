// ainfdef: exact deformation calculus for A-infinity algebras with
// infinity-inner products. Subcommands: check, terms, bracket, differential,
// mc, gauge, tangent, cyclic, selftest.
//
// Exit codes: 0 = success / property holds, 1 = check failed,
// 2 = parse or structural error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "ainf/cohomology.hpp"
#include "ainf/fixture.hpp"
#include "ainf/oracle.hpp"

using namespace ainf;
using ojson = nlohmann::ordered_json;

namespace {

struct Options {
    std::string fixture_path;
    std::string format = "text";
    std::string ring_spec;
    std::string degree_range = "0..2";
    int weight = 0; // 0 = use the fixture's weight
};

Fixture load(const Options& opt) {
    std::ifstream in(opt.fixture_path);
    if (!in) throw parse_error("cannot open fixture file '" + opt.fixture_path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    ojson j;
    try {
        j = ojson::parse(ss.str());
    } catch (const std::exception& e) {
        throw parse_error(std::string("invalid JSON: ") + e.what());
    }
    // apply overrides at the JSON level so ring-coefficient strings re-parse
    if (opt.weight > 0) j["weight"] = opt.weight;
    if (!opt.ring_spec.empty()) {
        FieldSpec field = FieldSpec::rationals();
        if (j.contains("field") && j["field"].value("kind", "") == "prime")
            field = FieldSpec::prime(j["field"].at("p").get<uint32_t>());
        RingPtr R = parse_ring_spec(field, opt.ring_spec);
        if (R->kind() == ArtinRing::Kind::t_adic)
            j["ring"] = {{"kind", "t_adic"},
                         {"order", R->order()},
                         {"generator", R->generators()[0].name},
                         {"degree", R->generators()[0].degree}};
        else {
            ojson gens = ojson::array();
            for (const auto& g : R->generators()) gens.push_back({{"name", g.name}, {"degree", g.degree}});
            j["ring"] = {{"kind", "square_zero"}, {"generators", gens}};
        }
    }
    return parse_fixture(j.dump());
}

void emit(const Options& opt, const ojson& structured, const std::string& text) {
    if (opt.format == "structured")
        std::cout << structured.dump(2) << "\n";
    else
        std::cout << text;
}

int cmd_check(const Options& opt) {
    Fixture f = load(opt);
    if (!f.D) throw structural_error("fixture has no coderivation block");
    bool has_inner = f.I.has_value();
    BimodMap I = has_inner ? *f.I : BimodMap(f.space, f.base_ring(), f.weight, 0, ModKind::A, ModKind::Adual);
    PolarizationReport rep = check_polarization(*f.D, I, has_inner);
    std::string text;
    text += rep.is_ainf ? "A∞: ok\n" : "A∞: FAIL at arity " + std::to_string(rep.fail_arity) + "\n";
    if (!has_inner)
        text += "inner product: absent, skipped\n";
    else if (rep.is_inner)
        text += "inner product: ok\n";
    else
        text += "inner product: FAIL at (k,l) = (" + std::to_string(rep.fail_kl.first) + "," +
                std::to_string(rep.fail_kl.second) + ")\n";
    ojson j;
    j["report"] = {{"is_ainf", rep.is_ainf},
                   {"inner_present", has_inner},
                   {"is_inner", rep.is_inner},
                   {"fail_arity", rep.fail_arity},
                   {"fail_kl", {rep.fail_kl.first, rep.fail_kl.second}}};
    emit(opt, j, text);
    return rep.ok() ? 0 : 1;
}

int cmd_terms(const Options& opt, int k, int l) {
    int W = opt.weight > 0 ? opt.weight : k + l + 1;
    auto terms = enumerate_insertion_terms(k, l, W);
    std::string text;
    ojson arr = ojson::array();
    for (const auto& t : terms) {
        text += t.line() + "\n";
        arr.push_back({{"n", t.n},
                       {"position", t.position},
                       {"wraps", t.wraps},
                       {"k_out", t.k_out},
                       {"l_out", t.l_out}});
    }
    text += "total: " + std::to_string(terms.size()) + " terms\n";
    ojson j;
    j["report"] = {{"k", k}, {"l", l}, {"count", terms.size()}, {"terms", arr}};
    emit(opt, j, text);
    return 0;
}

HElem named_element(const Fixture& f, const std::string& name) {
    auto it = f.elements.find(name);
    if (it == f.elements.end()) throw structural_error("fixture has no element named '" + name + "'");
    return it->second;
}

ojson helem_report(const Fixture& f, const HElem& x) {
    Fixture out;
    out.space = f.space;
    out.ring = x.ring();
    out.weight = f.weight;
    out.elements.emplace("result", x);
    return ojson::parse(serialize_fixture(out));
}

std::string helem_text(const HElem& x) {
    ojson j = ojson::parse(serialize_fixture([&] {
        Fixture out;
        out.space = x.space();
        out.ring = x.ring();
        out.weight = x.weight();
        out.elements.emplace("result", x);
        return out;
    }()));
    return j["elements"]["result"].dump(2) + "\n";
}

int cmd_bracket(const Options& opt) {
    Fixture f = load(opt);
    HElem x = named_element(f, "x");
    HElem y = named_element(f, "y");
    HElem b = h_bracket(x, y);
    emit(opt, helem_report(f, b), helem_text(b));
    return 0;
}

int cmd_differential(const Options& opt) {
    Fixture f = load(opt);
    Polarization P = f.polarization();
    HElem x = named_element(f, "x");
    // differential of a ring-coefficient element: bracket with (D_R, I_R)
    Polarization P_R(extend_scalars(P.D, x.ring()), extend_scalars(P.I, x.ring()));
    PolarizationReport rep = check_polarization(P.D, P.I);
    if (!rep.ok()) throw precondition_error("fixture pair is not a polarization");
    HElem dx = h_differential(P_R, x, true);
    emit(opt, helem_report(f, dx), helem_text(dx));
    return 0;
}

int cmd_mc(const Options& opt) {
    Fixture f = load(opt);
    Polarization P = f.polarization();
    if (!f.perturbation) throw structural_error("fixture has no perturbation block");
    DeformationDatum datum(P, f.ring, *f.perturbation);
    HElem res = mc_check(datum);
    bool ok = res.is_zero();
    std::string text;
    if (ok)
        text = "residual: 0 (order " + std::to_string(f.ring->nilpotency_index()) + ")\n";
    else {
        text = "residual: NONZERO\n";
        if (!res.f.is_zero())
            text += "  coder slot: first failing arity " + std::to_string(res.f.first_nonzero_arity()) + "\n";
        if (!res.i.is_zero()) {
            auto kl = res.i.first_nonzero_kl();
            text += "  comap slot: first failing (k,l) = (" + std::to_string(kl->first) + "," +
                    std::to_string(kl->second) + ")\n";
        }
    }
    ojson j;
    j["report"] = {{"residual_zero", ok}};
    if (!ok) {
        ojson rj = helem_report(f, res);
        j["residual"] = rj["elements"]["result"];
    }
    emit(opt, j, text);
    return ok ? 0 : 1;
}

int cmd_gauge(const Options& opt) {
    Fixture f = load(opt);
    Polarization P = f.polarization();
    if (!f.gauge) throw structural_error("fixture has no gauge block");
    auto [datum, w] = gauge_act_h(P, f.ring, *f.gauge);
    EquivalenceReport rep = check_trivial_equivalence(datum, w);
    HElem res = mc_check(datum);

    Fixture out = f;
    out.gauge.reset();
    out.perturbation = datum.perturbation;
    out.witness_lambda = w.lambda;
    out.witness_rho = w.rho;
    std::string serialized = serialize_fixture(out);

    std::string text = serialized;
    text += "mc residual: " + std::string(res.is_zero() ? "0" : "NONZERO") + "\n";
    text += "witness: condition (i) " + std::string(rep.cond_i ? "holds" : "FAILS") + ", condition (ii) " +
            std::string(rep.cond_ii ? "holds" : "FAILS") + "\n";
    ojson j = ojson::parse(serialized);
    j["report"] = {{"mc_residual_zero", res.is_zero()}, {"condition_i", rep.cond_i}, {"condition_ii", rep.cond_ii}};
    emit(opt, j, text);
    return (res.is_zero() && rep.ok()) ? 0 : 1;
}

std::pair<int, int> parse_range(const std::string& s) {
    auto dots = s.find("..");
    if (dots == std::string::npos) {
        int v = std::stoi(s);
        return {v, v};
    }
    return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
}

int cmd_tangent(const Options& opt) {
    Fixture f = load(opt);
    Polarization P = f.polarization();
    auto [lo, hi] = parse_range(opt.degree_range);
    auto results = tangent_space(P, lo, hi);
    std::string text;
    ojson arr = ojson::array();
    for (const auto& r : results) {
        text += "H^" + std::to_string(r.degree) + " (weight <= " + std::to_string(f.weight) +
                "): dim = " + std::to_string(r.dim) + "  (ker " + std::to_string(r.dim_ker) + ", im " +
                std::to_string(r.dim_im) + ")\n";
        ojson reps = ojson::array();
        for (const HElem& rep : r.representatives) {
            ojson rj = helem_report(f, rep);
            reps.push_back(rj["elements"]["result"]);
        }
        arr.push_back({{"degree", r.degree},
                       {"dim", r.dim},
                       {"dim_ker", r.dim_ker},
                       {"dim_im", r.dim_im},
                       {"representatives", reps}});
    }
    ojson j;
    j["report"] = {{"weight", f.weight}, {"degrees", arr}};
    emit(opt, j, text);
    return 0;
}

int cmd_cyclic(const Options& opt) {
    Fixture f = load(opt);
    Polarization P = f.polarization();
    std::string text;
    ojson arr = ojson::array();
    bool all_listed_cyclic = true;
    BimodMap I_R = extend_scalars(P.I, f.ring);
    auto report_one = [&](const std::string& name, const Coder& g, const BimodMap& I) {
        bool cyc = cyclic_check(g, I);
        text += name + ": " + (cyc ? "cyclic" : "not cyclic") + "\n";
        arr.push_back({{"name", name}, {"cyclic", cyc}});
        return cyc;
    };
    report_one("D", P.D, P.I);
    for (const auto& [name, x] : f.elements)
        all_listed_cyclic = report_one(name, x.f, I_R) && all_listed_cyclic;
    ojson j;
    j["report"] = {{"results", arr}};
    emit(opt, j, text);
    return all_listed_cyclic ? 0 : 1;
}

int cmd_selftest(const Options& opt) {
    const FieldSpec Q = FieldSpec::rationals();
    auto base = ArtinRing::trivial(Q);
    int W = opt.weight > 0 ? opt.weight : 4;
    auto sp = std::make_shared<GradedSpace>(Q, std::vector<BasisElem>{{"1", 0}, {"x", 0}});
    Coder D(sp, base, W, -1);
    D.set_entry(2, {0, 0}, 0, RingElem::one(base));
    D.set_entry(2, {0, 1}, 1, RingElem::one(base));
    D.set_entry(2, {1, 0}, 1, RingElem::one(base));
    BimodMap I(sp, base, W, 0, ModKind::A, ModKind::Adual);
    I.set_entry(0, 0, {0}, 1, RingElem::one(base));
    I.set_entry(0, 0, {1}, 0, RingElem::one(base));
    Polarization P(D, I);

    std::mt19937 rng(2026);
    std::uniform_int_distribution<long> val(-2, 2);
    auto random_coder_deg = [&](const RingPtr& R, int sdeg) {
        Coder f(sp, R, W, sdeg);
        for (int k = 1; k <= W; ++k) {
            long long n = tuple_count(k, 2);
            for (long long r = 0; r < n; ++r) {
                Tuple t = tuple_unrank(r, k, 2);
                for (int o = 0; o < 2; ++o) {
                    if (sp->susp(o) - susp_sum(*sp, t, 0, t.size()) != sdeg) continue;
                    long v = val(rng);
                    if (v) f.set_entry(k, t, o, RingElem::monomial(R, 0, Scalar::of_int(Q, v)));
                }
            }
        }
        return f;
    };
    auto random_comap_deg = [&](const RingPtr& R, int sdeg) {
        BimodMap m(sp, R, W, sdeg, ModKind::A, ModKind::Adual);
        for (int k = 0; k + 2 <= W; ++k)
            for (int l = 0; k + l + 2 <= W; ++l) {
                long long n = tuple_count(k + l + 1, 2);
                for (long long r = 0; r < n; ++r) {
                    Tuple t = tuple_unrank(r, k + l + 1, 2);
                    for (int o = 0; o < 2; ++o) {
                        if (sp->dual_susp(o) - susp_sum(*sp, t, 0, t.size()) != sdeg) continue;
                        long v = val(rng);
                        if (v) m.set_entry(k, l, t, o, RingElem::monomial(R, 0, Scalar::of_int(Q, v)));
                    }
                }
            }
        return m;
    };

    // delta oracle agreement
    int components = 0;
    bool delta_ok = true;
    for (int trial = 0; trial < 6; ++trial) {
        Coder g = random_coder_deg(base, trial % 2 ? -1 : 0);
        BimodMap i = random_comap_deg(base, (trial % 3) - 1);
        BimodMap engine = delta_f(g, i);
        BimodMap oracle = compose_delta_oracle(g, i);
        delta_ok = delta_ok && engine == oracle;
        for (int k = 0; k + 2 <= W; ++k)
            for (int l = 0; k + l + 2 <= W; ++l) ++components;
    }

    // iterated-ad oracle agreement over k[t]/t^3
    auto Rt = ArtinRing::t_adic(Q, 2);
    bool ad_ok = true;
    for (int trial = 0; trial < 4; ++trial) {
        HElem beta = HElem::zero(sp, Rt, W, 0);
        for (int b = 0; b < 2; ++b) {
            long v = val(rng);
            if (v) beta.f.set_entry(1, {b}, b, RingElem::monomial(Rt, 1, Scalar::of_int(Q, v)));
        }
        auto [datum, w] = gauge_act_h(P, Rt, beta);
        HElem closed = datum.base_R().as_helem() + datum.perturbation;
        ad_ok = ad_ok && closed == iterate_ad(P, Rt, beta, Rt->nilpotency_index());
        ad_ok = ad_ok && check_trivial_equivalence(datum, w).ok();
    }

    std::string text;
    text += std::string("delta oracle: ") + (delta_ok ? "agree" : "DISAGREE") + " (" + std::to_string(components) +
            " components)\n";
    text += std::string("ad oracle: ") + (ad_ok ? "agree" : "DISAGREE") + "\n";
    ojson j;
    j["report"] = {{"delta_oracle_agree", delta_ok}, {"components", components}, {"ad_oracle_agree", ad_ok}};
    emit(opt, j, text);
    return (delta_ok && ad_ok) ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact deformation calculus for A-infinity algebras with infinity inner products"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub, bool needs_fixture) {
        if (needs_fixture) sub->add_option("fixture", opt.fixture_path, "fixture file (JSON)")->required();
        sub->add_option("--weight", opt.weight, "override truncation weight W");
        sub->add_option("--format", opt.format, "text|structured")->check(CLI::IsMember({"text", "structured"}));
    };

    auto* check = app.add_subcommand("check", "polarization check: [D,D]=0 and delta_D(I)=0");
    add_common(check, true);
    int term_k = 0, term_l = 0;
    auto* terms = app.add_subcommand("terms", "enumerate the insertion terms of delta_f at (k,l)");
    terms->add_option("k", term_k)->required();
    terms->add_option("l", term_l)->required();
    add_common(terms, false);
    auto* bracket = app.add_subcommand("bracket", "h-bracket of fixture elements 'x' and 'y'");
    add_common(bracket, true);
    auto* differential = app.add_subcommand("differential", "d(x) = [(D,I), x] for fixture element 'x'");
    add_common(differential, true);
    auto* mc = app.add_subcommand("mc", "Maurer-Cartan residual of the perturbation block");
    add_common(mc, true);
    mc->add_option("--ring", opt.ring_spec, "coefficient ring spec, e.g. t_adic:3");
    auto* gauge = app.add_subcommand("gauge", "gauge the trivial deformation by the gauge block");
    add_common(gauge, true);
    gauge->add_option("--ring", opt.ring_spec, "coefficient ring spec");
    auto* tangent = app.add_subcommand("tangent", "tangent-space dimensions H^n of the weight-truncated complex");
    add_common(tangent, true);
    tangent->add_option("--degree", opt.degree_range, "degree or range, e.g. 1 or 0..2");
    auto* cyclic = app.add_subcommand("cyclic", "cyclicity of D and of each named element's coder part");
    add_common(cyclic, true);
    auto* selftest = app.add_subcommand("selftest", "oracle agreement self-checks");
    add_common(selftest, false);

    CLI11_PARSE(app, argc, argv);
    try {
        if (app.got_subcommand(check)) return cmd_check(opt);
        if (app.got_subcommand(terms)) return cmd_terms(opt, term_k, term_l);
        if (app.got_subcommand(bracket)) return cmd_bracket(opt);
        if (app.got_subcommand(differential)) return cmd_differential(opt);
        if (app.got_subcommand(mc)) return cmd_mc(opt);
        if (app.got_subcommand(gauge)) return cmd_gauge(opt);
        if (app.got_subcommand(tangent)) return cmd_tangent(opt);
        if (app.got_subcommand(cyclic)) return cmd_cyclic(opt);
        if (app.got_subcommand(selftest)) return cmd_selftest(opt);
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const structural_error& e) {
        std::cerr << "structural error: " << e.what() << "\n";
        return 2;
    } catch (const precondition_error& e) {
        std::cerr << "precondition error: " << e.what() << "\n";
        return 2;
    } catch (const consistency_error& e) {
        std::cerr << "consistency error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
