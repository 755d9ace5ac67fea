#include "ainf/fixture.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

namespace ainf {

using json = nlohmann::ordered_json;

namespace {

int basis_index(const GradedSpace& sp, const std::string& name) {
    int i = sp.index_of(name);
    if (i < 0) throw parse_error("unknown basis name '" + name + "'");
    return i;
}

FieldSpec parse_field(const json& j) {
    if (!j.is_object() || !j.contains("kind")) throw parse_error("field block needs a 'kind'");
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "rationals") return FieldSpec::rationals();
    if (kind == "prime") {
        if (!j.contains("p")) throw parse_error("prime field needs 'p'");
        return FieldSpec::prime(j.at("p").get<uint32_t>());
    }
    throw parse_error("unknown field kind '" + kind + "'");
}

RingPtr parse_ring(const FieldSpec& f, const json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "t_adic") {
        std::string gen = j.value("generator", std::string("t"));
        int deg = j.value("degree", 0);
        return ArtinRing::t_adic(f, j.at("order").get<int>(), gen, deg);
    }
    if (kind == "square_zero") {
        std::vector<RingGenerator> gens;
        for (const auto& g : j.at("generators"))
            gens.push_back({g.at("name").get<std::string>(), g.at("degree").get<int>()});
        return ArtinRing::square_zero(f, gens);
    }
    throw parse_error("unknown ring kind '" + kind + "'");
}

struct Entry {
    int k = 0, l = 0;
    Tuple in;
    int out = 0;
    RingElem coeff;
    bool comap = false;
};

Entry parse_entry(const GradedSpace& sp, const RingPtr& R, const json& j, bool comap) {
    Entry e;
    e.comap = comap;
    if (comap) {
        e.k = j.at("k").get<int>();
        e.l = j.at("l").get<int>();
    }
    for (const auto& n : j.at("inputs")) e.in.push_back(basis_index(sp, n.get<std::string>()));
    if (!comap && e.in.empty()) throw parse_error("coderivation component needs at least one input");
    if (comap && static_cast<int>(e.in.size()) != e.k + e.l + 1)
        throw parse_error("comap component needs k+l+1 inputs");
    e.out = basis_index(sp, j.at("output").get<std::string>());
    e.coeff = RingElem::parse(R, j.at("coeff").get<std::string>());
    return e;
}

/// Infer the total suspended degree from entries (must be consistent).
std::optional<int> infer_coder_sdeg(const GradedSpace& sp, const RingPtr& R, const std::vector<Entry>& es) {
    std::optional<int> sdeg;
    for (const Entry& e : es) {
        for (auto& [m, c] : e.coeff.terms()) {
            int s = sp.susp(e.out) - susp_sum(sp, e.in, 0, e.in.size()) + R->mono_degree(m);
            if (sdeg && *sdeg != s) throw parse_error("coderivation entries are not degree-homogeneous");
            sdeg = s;
        }
    }
    return sdeg;
}

std::optional<int> infer_comap_sdeg(const GradedSpace& sp, const RingPtr& R, const std::vector<Entry>& es) {
    std::optional<int> sdeg;
    for (const Entry& e : es) {
        for (auto& [m, c] : e.coeff.terms()) {
            int in_susp = susp_sum(sp, e.in, 0, e.in.size()); // src module letter is an A-letter
            int s = sp.dual_susp(e.out) - in_susp + R->mono_degree(m);
            if (sdeg && *sdeg != s) throw parse_error("comap entries are not degree-homogeneous");
            sdeg = s;
        }
    }
    return sdeg;
}

std::vector<Entry> parse_entries(const GradedSpace& sp, const RingPtr& R, const json& arr, bool comap) {
    std::vector<Entry> out;
    for (const auto& j : arr) out.push_back(parse_entry(sp, R, j, comap));
    return out;
}

Coder build_coder(const SpacePtr& sp, const RingPtr& R, int W, const std::vector<Entry>& es,
                  std::optional<int> expect_sdeg) {
    std::optional<int> sdeg = infer_coder_sdeg(*sp, R, es);
    if (expect_sdeg && sdeg && *sdeg != *expect_sdeg)
        throw parse_error("coderivation has suspended degree " + std::to_string(*sdeg) + ", expected " +
                          std::to_string(*expect_sdeg));
    Coder c(sp, R, W, expect_sdeg ? *expect_sdeg : sdeg.value_or(-1));
    for (const Entry& e : es) {
        if (static_cast<int>(e.in.size()) > W)
            throw parse_error("coderivation component exceeds the truncation weight");
        c.set_entry(static_cast<int>(e.in.size()), e.in, e.out, e.coeff);
    }
    return c;
}

BimodMap build_comap(const SpacePtr& sp, const RingPtr& R, int W, const std::vector<Entry>& es,
                     std::optional<int> expect_sdeg) {
    std::optional<int> sdeg = infer_comap_sdeg(*sp, R, es);
    if (expect_sdeg && sdeg && *sdeg != *expect_sdeg)
        throw parse_error("comap has suspended degree " + std::to_string(*sdeg) + ", expected " +
                          std::to_string(*expect_sdeg));
    BimodMap m(sp, R, W, expect_sdeg ? *expect_sdeg : sdeg.value_or(0), ModKind::A, ModKind::Adual);
    for (const Entry& e : es) {
        if (e.k + e.l + 2 > W) throw parse_error("comap component exceeds the truncation weight");
        m.set_entry(e.k, e.l, e.in, e.out, e.coeff);
    }
    return m;
}

HElem build_helem(const SpacePtr& sp, const RingPtr& R, int W, const json& j, std::optional<int> expect_hdeg) {
    std::vector<Entry> fe, ie;
    if (j.contains("coder")) fe = parse_entries(*sp, R, j.at("coder"), false);
    if (j.contains("comap")) ie = parse_entries(*sp, R, j.at("comap"), true);
    std::optional<int> fd = infer_coder_sdeg(*sp, R, fe);
    std::optional<int> id = infer_comap_sdeg(*sp, R, ie);
    int hdeg;
    if (expect_hdeg)
        hdeg = *expect_hdeg;
    else if (j.contains("hdegree"))
        hdeg = j.at("hdegree").get<int>();
    else if (fd)
        hdeg = -*fd;
    else if (id)
        hdeg = 1 - *id;
    else
        hdeg = 0;
    Coder f = build_coder(sp, R, W, fe, -hdeg);
    BimodMap i = build_comap(sp, R, W, ie, 1 - hdeg);
    return HElem(std::move(f), std::move(i), hdeg);
}

json entry_json(const GradedSpace& sp, bool comap, int k, int l, const Tuple& in, int out, const RingElem& c) {
    json j;
    if (comap) {
        j["k"] = k;
        j["l"] = l;
    }
    json names = json::array();
    for (int x : in) names.push_back(sp.basis(x).name);
    j["inputs"] = names;
    j["output"] = sp.basis(out).name;
    j["coeff"] = c.to_string();
    return j;
}

json coder_json(const Coder& c) {
    const GradedSpace& sp = *c.space();
    const int d = sp.dim();
    json arr = json::array();
    for (int k = 1; k <= c.weight(); ++k) {
        long long n = tuple_count(k, d);
        for (long long r = 0; r < n; ++r) {
            Tuple t = tuple_unrank(r, k, d);
            for (int o = 0; o < d; ++o) {
                RingElem v = c.entry(k, t, o);
                if (!v.is_zero()) arr.push_back(entry_json(sp, false, k, 0, t, o, v));
            }
        }
    }
    return arr;
}

json comap_json(const BimodMap& m) {
    const GradedSpace& sp = *m.space();
    const int d = sp.dim();
    json arr = json::array();
    for (int k = 0; k + 2 <= m.weight(); ++k)
        for (int l = 0; k + l + 2 <= m.weight(); ++l) {
            long long n = tuple_count(k + l + 1, d);
            for (long long r = 0; r < n; ++r) {
                Tuple t = tuple_unrank(r, k + l + 1, d);
                for (int o = 0; o < d; ++o) {
                    RingElem v = m.entry(k, l, t, o);
                    if (!v.is_zero()) arr.push_back(entry_json(sp, true, k, l, t, o, v));
                }
            }
        }
    return arr;
}

} // namespace

RingPtr Fixture::base_ring() const { return ArtinRing::trivial(space->field()); }

Polarization Fixture::polarization() const {
    if (!D) throw structural_error("fixture has no coderivation block");
    if (!I) throw structural_error("fixture has no comap block");
    return Polarization(*D, *I);
}

Fixture parse_fixture(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        throw parse_error(std::string("invalid JSON: ") + e.what());
    }
    try {
        Fixture f;
        FieldSpec field = j.contains("field") ? parse_field(j.at("field")) : FieldSpec::rationals();
        if (!j.contains("space")) throw parse_error("fixture needs a 'space' block");
        std::vector<BasisElem> basis;
        for (const auto& b : j.at("space").at("basis"))
            basis.push_back({b.at("name").get<std::string>(), b.at("degree").get<int>()});
        f.space = std::make_shared<GradedSpace>(field, std::move(basis));
        f.weight = j.value("weight", 3);
        if (f.weight < 2) throw parse_error("weight must be >= 2");
        f.ring = j.contains("ring") ? parse_ring(field, j.at("ring")) : ArtinRing::trivial(field);
        RingPtr base = f.base_ring();
        if (j.contains("coderivation"))
            f.D = build_coder(f.space, base, f.weight,
                              parse_entries(*f.space, base, j.at("coderivation").at("components"), false), -1);
        if (j.contains("comap"))
            f.I = build_comap(f.space, base, f.weight,
                              parse_entries(*f.space, base, j.at("comap").at("components"), true), 0);
        if (j.contains("perturbation")) f.perturbation = build_helem(f.space, f.ring, f.weight, j.at("perturbation"), 1);
        if (j.contains("gauge")) f.gauge = build_helem(f.space, f.ring, f.weight, j.at("gauge"), 0);
        if (j.contains("witness")) {
            const json& w = j.at("witness");
            if (w.contains("lambda"))
                f.witness_lambda =
                    build_coder(f.space, f.ring, f.weight, parse_entries(*f.space, f.ring, w.at("lambda"), false), 0);
            if (w.contains("rho"))
                f.witness_rho =
                    build_comap(f.space, f.ring, f.weight, parse_entries(*f.space, f.ring, w.at("rho"), true), 1);
        }
        if (j.contains("elements"))
            for (auto it = j.at("elements").begin(); it != j.at("elements").end(); ++it)
                f.elements.emplace(it.key(), build_helem(f.space, f.ring, f.weight, it.value(), std::nullopt));
        return f;
    } catch (const json::exception& e) {
        throw parse_error(std::string("fixture structure: ") + e.what());
    }
}

Fixture parse_fixture_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open fixture file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_fixture(ss.str());
}

std::string serialize_fixture(const Fixture& f) {
    json j;
    const FieldSpec& field = f.space->field();
    if (field.kind == FieldKind::rationals)
        j["field"] = {{"kind", "rationals"}};
    else
        j["field"] = {{"kind", "prime"}, {"p", field.p}};
    json basis = json::array();
    for (int i = 0; i < f.space->dim(); ++i)
        basis.push_back({{"name", f.space->basis(i).name}, {"degree", f.space->basis(i).degree}});
    j["space"] = {{"basis", basis}};
    j["weight"] = f.weight;
    if (f.ring->kind() == ArtinRing::Kind::t_adic)
        j["ring"] = {{"kind", "t_adic"},
                     {"order", f.ring->order()},
                     {"generator", f.ring->generators()[0].name},
                     {"degree", f.ring->generators()[0].degree}};
    else if (f.ring->kind() == ArtinRing::Kind::square_zero) {
        json gens = json::array();
        for (const auto& g : f.ring->generators()) gens.push_back({{"name", g.name}, {"degree", g.degree}});
        j["ring"] = {{"kind", "square_zero"}, {"generators", gens}};
    }
    if (f.D) j["coderivation"] = {{"components", coder_json(*f.D)}};
    if (f.I) j["comap"] = {{"components", comap_json(*f.I)}};
    auto helem_json = [&](const HElem& x) {
        json h;
        h["hdegree"] = x.hdeg;
        h["coder"] = coder_json(x.f);
        h["comap"] = comap_json(x.i);
        return h;
    };
    if (f.perturbation) j["perturbation"] = helem_json(*f.perturbation);
    if (f.gauge) j["gauge"] = helem_json(*f.gauge);
    if (f.witness_lambda || f.witness_rho) {
        json w;
        if (f.witness_lambda) w["lambda"] = coder_json(*f.witness_lambda);
        if (f.witness_rho) w["rho"] = comap_json(*f.witness_rho);
        j["witness"] = w;
    }
    if (!f.elements.empty()) {
        json els;
        for (const auto& [name, x] : f.elements) els[name] = helem_json(x);
        j["elements"] = els;
    }
    return j.dump(2) + "\n";
}

RingPtr parse_ring_spec(const FieldSpec& field, const std::string& spec) {
    auto split = [](const std::string& s, char c) {
        std::vector<std::string> out;
        std::string cur;
        for (char ch : s) {
            if (ch == c) {
                out.push_back(cur);
                cur.clear();
            } else
                cur.push_back(ch);
        }
        out.push_back(cur);
        return out;
    };
    auto parts = split(spec, ':');
    if (parts.empty()) throw parse_error("empty ring spec");
    if (parts[0] == "t_adic") {
        if (parts.size() < 2) throw parse_error("t_adic ring spec needs an order: t_adic:ORDER[:DEGREE]");
        int order = std::stoi(parts[1]);
        int degree = parts.size() > 2 ? std::stoi(parts[2]) : 0;
        return ArtinRing::t_adic(field, order, "t", degree);
    }
    if (parts[0] == "square_zero") {
        if (parts.size() < 2) throw parse_error("square_zero ring spec needs generators: square_zero:t0=0,t1=-1");
        std::vector<RingGenerator> gens;
        for (const std::string& g : split(parts[1], ',')) {
            auto eq = g.find('=');
            if (eq == std::string::npos)
                gens.push_back({g, 0});
            else
                gens.push_back({g.substr(0, eq), std::stoi(g.substr(eq + 1))});
        }
        return ArtinRing::square_zero(field, gens);
    }
    throw parse_error("unknown ring spec '" + spec + "'");
}

} // namespace ainf
