#include "xtop/json_io.hpp"

#include <fstream>
#include <sstream>

#include "xtop/errors.hpp"

namespace xtop {

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object()) throw ParseError("expected a JSON object");
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(std::string("missing field '") + key + "'");
    return *it;
}

std::vector<std::string> string_list(const Json& j, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
    std::vector<std::string> out;
    for (const auto& e : j) {
        if (e.is_string()) {
            out.push_back(e.get<std::string>());
        } else if (e.is_number_integer()) {
            out.push_back(std::to_string(e.get<long long>()));
        } else {
            throw ParseError(std::string(what) + " entries must be strings");
        }
    }
    return out;
}

std::string as_label(const Json& e) {
    if (e.is_string()) return e.get<std::string>();
    if (e.is_number_integer()) return std::to_string(e.get<long long>());
    throw ParseError("expected a label");
}

std::vector<Index> label_table(const Json& j, const FinitePoset& p, const char* what) {
    const std::size_t n = p.size();
    if (!j.is_array() || j.size() != n) throw ParseError(std::string(what) + " must be an n x n table");
    std::vector<Index> out(n * n);
    for (std::size_t a = 0; a < n; ++a) {
        if (!j[a].is_array() || j[a].size() != n) throw ParseError(std::string(what) + " must be an n x n table");
        for (std::size_t b = 0; b < n; ++b) out[a * n + b] = p.index_of(as_label(j[a][b]));
    }
    return out;
}

ElementSet label_set(const Json& j, const FiniteLattice& l, const char* what) {
    ElementSet s;
    for (const auto& name : string_list(j, what)) s.insert(l.index_of(name));
    return s;
}

}  // namespace

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("'" + path + "': " + e.what());
    }
}

Json label_array(const std::vector<std::string>& labels, const ElementSet& s) {
    Json out = Json::array();
    s.for_each([&](Index i) { out.push_back(labels.at(i)); });
    return out;
}

FinitePoset poset_from_json(const Json& j) {
    auto labels = string_list(field(j, "labels"), "labels");
    std::vector<std::pair<std::string, std::string>> pairs;
    if (j.contains("leq")) {
        const Json& leq = j["leq"];
        if (!leq.is_array()) throw ParseError("leq must be an array of pairs");
        for (const auto& e : leq) {
            if (!e.is_array() || e.size() != 2) throw ParseError("leq entries must be [a, b] pairs");
            pairs.emplace_back(as_label(e[0]), as_label(e[1]));
        }
    }
    return FinitePoset::from_relation(std::move(labels), pairs);
}

Json to_json(const FinitePoset& p) {
    Json j;
    j["labels"] = p.labels();
    Json leq = Json::array();
    for (const auto& [a, b] : p.covers()) leq.push_back({p.label(a), p.label(b)});
    j["leq"] = leq;
    return j;
}

FiniteLattice lattice_from_json(const Json& j) {
    FinitePoset p = poset_from_json(j);
    if (j.contains("meet") || j.contains("join")) {
        auto meet = label_table(field(j, "meet"), p, "meet");
        auto join = label_table(field(j, "join"), p, "join");
        return FiniteLattice::from_tables(std::move(p), std::move(meet), std::move(join));
    }
    return FiniteLattice::from_poset(std::move(p));
}

Json to_json(const FiniteLattice& l) {
    Json j = to_json(l.order());
    const std::size_t n = l.size();
    Json meet = Json::array(), join = Json::array();
    for (Index a = 0; a < n; ++a) {
        Json mr = Json::array(), jr = Json::array();
        for (Index b = 0; b < n; ++b) {
            mr.push_back(l.label(l.meet(a, b)));
            jr.push_back(l.label(l.join(a, b)));
        }
        meet.push_back(mr);
        join.push_back(jr);
    }
    j["meet"] = meet;
    j["join"] = join;
    return j;
}

XTopSpace space_from_json(const Json& j) {
    auto lattice = std::make_shared<const FiniteLattice>(lattice_from_json(field(j, "lattice")));
    ElementSet x = label_set(field(j, "X"), *lattice, "X");
    XTopSpace s = XTopSpace::build(lattice, std::move(x));
    if (j.contains("closed_sets")) {
        std::vector<ElementSet> given;
        for (const auto& c : j["closed_sets"]) given.push_back(label_set(c, *lattice, "closed_sets"));
        sort_canonical(given);
        given.erase(std::unique(given.begin(), given.end()), given.end());
        if (given != s.closed_family()) throw ParseError("closed_sets do not match the varieties of X");
    }
    return s;
}

Json to_json(const XTopSpace& s) {
    const auto& labels = s.lattice().order().labels();
    Json j;
    j["lattice"] = to_json(s.lattice());
    j["X"] = label_array(labels, s.points());
    Json closed = Json::array();
    for (const auto& c : s.closed_family()) closed.push_back(label_array(labels, c));
    j["closed_sets"] = closed;
    return j;
}

FiniteSemiring semiring_from_json(const Json& j) {
    auto labels = string_list(field(j, "labels"), "labels");
    const std::size_t n = labels.size();
    auto lookup = [&](const std::string& name) -> Index {
        for (Index k = 0; k < n; ++k) {
            if (labels[k] == name) return k;
        }
        throw ParseError("unknown semiring element '" + name + "'");
    };
    auto table = [&](const char* key) {
        const Json& t = field(j, key);
        if (!t.is_array() || t.size() != n) throw ParseError(std::string(key) + " must be an n x n table");
        std::vector<Index> out(n * n);
        for (std::size_t a = 0; a < n; ++a) {
            if (!t[a].is_array() || t[a].size() != n) throw ParseError(std::string(key) + " must be an n x n table");
            for (std::size_t b = 0; b < n; ++b) out[a * n + b] = lookup(as_label(t[a][b]));
        }
        return out;
    };
    auto add = table("add");
    auto mul = table("mul");
    const Index zero = lookup(as_label(field(j, "zero")));
    const Index one = lookup(as_label(field(j, "one")));
    return FiniteSemiring::from_tables(std::move(labels), std::move(add), std::move(mul), zero, one);
}

Json to_json(const FiniteSemiring& r) {
    const std::size_t n = r.size();
    Json j;
    j["labels"] = r.labels();
    Json add = Json::array(), mul = Json::array();
    for (Index a = 0; a < n; ++a) {
        Json ar = Json::array(), mr = Json::array();
        for (Index b = 0; b < n; ++b) {
            ar.push_back(r.label(r.add(a, b)));
            mr.push_back(r.label(r.mul(a, b)));
        }
        add.push_back(ar);
        mul.push_back(mr);
    }
    j["add"] = add;
    j["mul"] = mul;
    j["zero"] = r.label(r.zero());
    j["one"] = r.label(r.one());
    return j;
}

Json to_json(const XTopSpace& s, const SeparationReport& r) {
    const auto& labels = s.lattice().order().labels();
    Json j;
    j["kdim"] = r.kdim;
    j["t0"] = r.t0;
    j["t_quarter"] = r.t_quarter;
    j["t_half"] = r.t_half;
    j["t_threequarter"] = r.t_threequarter;
    j["t1"] = r.t1;
    j["t2"] = r.t2;
    j["t1half_kc"] = r.t1half_kc;
    j["r0"] = r.r0;
    j["r1"] = r.r1;
    j["tf"] = r.tf;
    j["es"] = r.es;
    j["discrete"] = r.discrete;
    j["irreducible"] = r.irreducible;
    j["anti_t2"] = r.anti_t2;
    j["connected"] = r.connected;
    j["sober"] = r.sober;
    j["spectral"] = r.spectral;
    j["quasi_hausdorff"] = r.quasi_hausdorff;
    j["totally_separated"] = r.totally_separated;
    j["totally_disconnected"] = r.totally_disconnected;
    j["ind_zero_dim"] = r.ind_zero_dim;
    j["stone"] = r.stone;
    j["amin"] = r.amin;
    j["bmax"] = r.bmax;
    j["pamin"] = r.pamin;
    j["pbmax"] = r.pbmax;
    j["complete_max_property"] = r.complete_max_property;
    Json comps = Json::array(), quasi = Json::array();
    for (const auto& c : r.components) comps.push_back(label_array(labels, c));
    for (const auto& c : r.quasicomponents) quasi.push_back(label_array(labels, c));
    j["components"] = comps;
    j["quasicomponents"] = quasi;
    return j;
}

Json to_json(const XTopSpace& s, const std::vector<PointFlags>& points) {
    Json out = Json::array();
    for (const auto& p : points) {
        Json j;
        j["point"] = s.label(p.point);
        j["is_closed"] = p.is_closed;
        j["is_kerneled"] = p.is_kerneled;
        j["is_isolated"] = p.is_isolated;
        j["is_regular_open"] = p.is_regular_open;
        j["is_excluded"] = p.is_excluded;
        j["is_min"] = p.is_min;
        j["is_max"] = p.is_max;
        j["in_si"] = p.in_si;
        j["in_csi"] = p.in_csi;
        j["is_abs_min"] = p.is_abs_min;
        j["is_barely_max"] = p.is_barely_max;
        out.push_back(j);
    }
    return out;
}

Json to_json(const FiniteSemiring& r, const SpectrumReport& rep) {
    const auto& labels = r.labels();
    auto family = [&](const std::vector<Ideal>& f) {
        Json a = Json::array();
        for (const auto& i : f) a.push_back(label_array(labels, i.members));
        return a;
    };
    Json j;
    j["ideals"] = family(rep.ideals);
    j["spec"] = family(rep.spec);
    j["max"] = family(rep.max);
    j["min_primes"] = family(rep.min_primes);
    j["jacobson"] = label_array(labels, rep.jacobson.members);
    j["nilradical"] = label_array(labels, rep.nilradical.members);
    j["prime_radical"] = label_array(labels, rep.prime_radical.members);
    j["kdim"] = rep.kdim;
    j["is_local"] = rep.is_local;
    j["is_reduced"] = rep.is_reduced;
    j["is_vnr"] = rep.is_vnr;
    j["is_pi_regular"] = rep.is_pi_regular;
    j["is_add_idempotent"] = rep.is_add_idempotent;
    j["is_mul_idempotent"] = rep.is_mul_idempotent;
    j["is_idempotent"] = rep.is_idempotent;
    j["is_subtractive_semiring"] = rep.is_subtractive_semiring;
    j["is_semidomain"] = rep.is_semidomain;
    j["is_fmax"] = rep.is_fmax;
    j["is_fmin"] = rep.is_fmin;
    j["is_bmax"] = rep.is_bmax;
    j["is_amin"] = rep.is_amin;
    j["is_pamin"] = rep.is_pamin;
    j["is_pbmax"] = rep.is_pbmax;
    return j;
}

Json to_json(const std::vector<CheckResult>& checks) {
    Json out = Json::array();
    for (const auto& c : checks) {
        Json j;
        j["id"] = c.id;
        j["holds"] = c.holds;
        if (!c.witness.empty()) j["witness"] = c.witness;
        out.push_back(j);
    }
    return out;
}

}  // namespace xtop
