#include "xtop/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "xtop/dot.hpp"
#include "xtop/errors.hpp"
#include "xtop/forest_spec.hpp"
#include "xtop/json_io.hpp"
#include "xtop/semiring.hpp"
#include "xtop/separation.hpp"
#include "xtop/verify.hpp"

namespace xtop {

namespace {

struct SpaceSource {
    std::string forest;
    std::string poset_file;
    std::string space_file;
};

struct RingSource {
    std::vector<std::size_t> bni;
    std::size_t zn = 0;
    bool s3 = false;
    bool boolean = false;
    std::string semiring_file;
};

void add_space_options(CLI::App* cmd, SpaceSource& src) {
    cmd->add_option("--forest", src.forest, "forest spec such as T2+V3+C2");
    cmd->add_option("--poset", src.poset_file, "poset JSON file");
    cmd->add_option("--space", src.space_file, "space JSON file (lattice plus X)");
}

void add_ring_options(CLI::App* cmd, RingSource& src) {
    cmd->add_option("--bni", src.bni, "B(n,i) semiring")->expected(2);
    cmd->add_option("--zn", src.zn, "integers modulo n");
    cmd->add_flag("--s3", src.s3, "the three-element semiring {0,a,1}");
    cmd->add_flag("--boolean", src.boolean, "the Boolean semiring");
    cmd->add_option("--semiring", src.semiring_file, "semiring JSON file");
}

std::size_t count_space(const SpaceSource& s) {
    return !s.forest.empty() + !s.poset_file.empty() + !s.space_file.empty();
}

std::size_t count_ring(const RingSource& r) {
    return !r.bni.empty() + (r.zn != 0) + r.s3 + r.boolean + !r.semiring_file.empty();
}

XTopSpace load_space(const SpaceSource& s) {
    if (!s.forest.empty()) return XTopSpace::from_poset(forest(parse_forest_spec(s.forest)));
    if (!s.poset_file.empty()) return XTopSpace::from_poset(poset_from_json(load_json_file(s.poset_file)));
    return space_from_json(load_json_file(s.space_file));
}

FiniteSemiring load_ring(const RingSource& r) {
    if (!r.bni.empty()) return bni(r.bni[0], r.bni[1]);
    if (r.zn != 0) return zn(r.zn);
    if (r.s3) return s3();
    if (r.boolean) return boolean_semiring();
    return semiring_from_json(load_json_file(r.semiring_file));
}

SpecSelector parse_selector(const std::string& s) {
    if (s == "all") return SpecSelector::All;
    if (s == "max") return SpecSelector::Max;
    if (s == "min") return SpecSelector::Min;
    if (s == "drop-zero") return SpecSelector::DropZero;
    throw ParseError("unknown subspace '" + s + "' (expected all, max, min or drop-zero)");
}

std::string yes(bool b) { return b ? "yes" : "no"; }

std::string set_text(const std::vector<std::string>& labels, const ElementSet& s) {
    std::string out = "{";
    bool first = true;
    s.for_each([&](Index i) {
        if (!first) out += ", ";
        out += labels.at(i);
        first = false;
    });
    return out + "}";
}

std::string family_text(const std::vector<std::string>& labels, const std::vector<ElementSet>& f) {
    std::string out = "{";
    for (std::size_t k = 0; k < f.size(); ++k) {
        if (k) out += ", ";
        out += set_text(labels, f[k]);
    }
    return out + "}";
}

std::string shape_of(const XTopSpace& s) { return describe_shape(s.specialization_poset()); }

void print_report(std::ostream& out, const XTopSpace& s, const SeparationReport& r,
                  const std::vector<PointFlags>& points) {
    const auto& labels = s.lattice().order().labels();
    out << "points: " << s.point_count() << "  shape: " << shape_of(s) << "  kdim: " << r.kdim << "\n";
    out << "open sets: " << family_text(labels, s.open_family()) << "\n";
    out << "axioms:\n";
    out << "  T0 " << yes(r.t0) << "  T1/4 " << yes(r.t_quarter) << "  T1/2 " << yes(r.t_half) << "  T3/4 "
        << yes(r.t_threequarter) << "  T1 " << yes(r.t1) << "  T2 " << yes(r.t2) << "\n";
    out << "  R0 " << yes(r.r0) << "  R1 " << yes(r.r1) << "  KC " << yes(r.t1half_kc) << "  TF " << yes(r.tf)
        << "  ES " << yes(r.es) << "\n";
    out << "  discrete " << yes(r.discrete) << "  irreducible " << yes(r.irreducible) << "  anti-T2 "
        << yes(r.anti_t2) << "  connected " << yes(r.connected) << "\n";
    out << "  sober " << yes(r.sober) << "  spectral " << yes(r.spectral) << "  quasi-Hausdorff "
        << yes(r.quasi_hausdorff) << "  stone " << yes(r.stone) << "\n";
    out << "  totally separated " << yes(r.totally_separated) << "  totally disconnected "
        << yes(r.totally_disconnected) << "  zero-dimensional " << yes(r.ind_zero_dim) << "\n";
    out << "  AMin " << yes(r.amin) << "  BMax " << yes(r.bmax) << "  PAMin " << yes(r.pamin) << "  PBMax "
        << yes(r.pbmax) << "  complete max-property " << yes(r.complete_max_property) << "\n";
    out << "components: " << family_text(labels, r.components) << "\n";
    out << "quasicomponents: " << family_text(labels, r.quasicomponents) << "\n";

    std::size_t width = 5;
    for (const auto& p : points) width = std::max(width, s.label(p.point).size());
    out << "point table:\n  " << std::left << std::setw(static_cast<int>(width)) << "point"
        << "  closed kern   iso    ro     excl   min    max    csi\n";
    for (const auto& p : points) {
        out << "  " << std::setw(static_cast<int>(width)) << s.label(p.point);
        for (bool b : {p.is_closed, p.is_kerneled, p.is_isolated, p.is_regular_open, p.is_excluded, p.is_min,
                       p.is_max, p.in_csi}) {
            out << "  " << std::setw(5) << yes(b);
        }
        out << "\n";
    }
    out << std::right;
}

void print_spectrum(std::ostream& out, const FiniteSemiring& r, const SpectrumReport& rep) {
    const auto& labels = r.labels();
    auto fam = [&](const std::vector<Ideal>& f) {
        std::vector<ElementSet> sets;
        for (const auto& i : f) sets.push_back(i.members);
        return family_text(labels, sets);
    };
    out << "ideals: " << fam(rep.ideals) << "\n";
    out << "spec: " << fam(rep.spec) << "\n";
    out << "max: " << fam(rep.max) << "\n";
    out << "min primes: " << fam(rep.min_primes) << "\n";
    out << "jacobson: " << set_text(labels, rep.jacobson.members) << "  nilradical: "
        << set_text(labels, rep.nilradical.members) << "  prime radical: "
        << set_text(labels, rep.prime_radical.members) << "\n";
    out << "kdim: " << rep.kdim << "\n";
    out << "  local " << yes(rep.is_local) << "  reduced " << yes(rep.is_reduced) << "  semidomain "
        << yes(rep.is_semidomain) << "  subtractive " << yes(rep.is_subtractive_semiring) << "\n";
    out << "  von Neumann regular " << yes(rep.is_vnr) << "  pi-regular " << yes(rep.is_pi_regular)
        << "  idempotent " << yes(rep.is_idempotent) << " (+ " << yes(rep.is_add_idempotent) << ", * "
        << yes(rep.is_mul_idempotent) << ")\n";
    out << "  AMin " << yes(rep.is_amin) << "  BMax " << yes(rep.is_bmax) << "  PAMin " << yes(rep.is_pamin)
        << "  PBMax " << yes(rep.is_pbmax) << "\n";
}

void print_checks(std::ostream& out, const std::vector<CheckResult>& checks) {
    out << "checks:\n";
    for (const auto& c : checks) {
        out << "  " << (c.holds ? "ok   " : "FAIL ") << c.id;
        if (!c.witness.empty()) out << "  [" << c.witness << "]";
        out << "\n";
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Zariski-like topologies on finite lattices and semiring spectra", "xtop"};
    app.require_subcommand(1);

    SpaceSource classify_src;
    bool classify_json = false, classify_checks = false;
    auto* classify = app.add_subcommand("classify", "separation report of a space");
    add_space_options(classify, classify_src);
    classify->add_flag("--json", classify_json, "JSON output");
    classify->add_flag("--checks", classify_checks, "also run the theorem cross-checks");

    RingSource spec_src;
    std::string spec_subspace = "all";
    bool spec_json = false;
    auto* spec = app.add_subcommand("spec", "spectrum of a finite commutative semiring");
    add_ring_options(spec, spec_src);
    spec->add_option("--subspace", spec_subspace, "all, max, min or drop-zero");
    spec->add_flag("--json", spec_json, "JSON output");

    std::size_t bni_n = 0, bni_i = 0;
    bool bni_json = false;
    auto* bni_cmd = app.add_subcommand("bni", "compare Spec(B(n,i)) with its predicted form");
    bni_cmd->add_option("n", bni_n)->required();
    bni_cmd->add_option("i", bni_i)->required();
    bni_cmd->add_flag("--json", bni_json, "JSON output");

    std::string suite;
    std::optional<std::size_t> max_size, max_n;
    auto* verify = app.add_subcommand("verify", "exhaustive theorem verification");
    verify->add_option("suite", suite, "xct, quarter, discrete, forest, bni or all")->required();
    verify->add_option("--max-size", max_size, "largest poset/lattice/forest size");
    verify->add_option("--max-n", max_n, "largest semiring size");

    SpaceSource export_space;
    RingSource export_ring;
    std::string export_format = "dot";
    std::string export_subspace = "all";
    bool export_closed = false;
    auto* exp = app.add_subcommand("export", "write a space as DOT or JSON");
    add_space_options(exp, export_space);
    add_ring_options(exp, export_ring);
    exp->add_option("--format", export_format, "dot or json");
    exp->add_option("--subspace", export_subspace, "all, max, min or drop-zero (semiring sources)");
    exp->add_flag("--closed-sets", export_closed, "list the closed sets in the diagram");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitParse;
    }

    try {
        if (classify->parsed()) {
            if (count_space(classify_src) != 1) throw ParseError("classify needs exactly one of --forest, --poset, --space");
            const XTopSpace s = load_space(classify_src);
            const auto rep = separation_report(s);
            const auto points = classify_points(s);
            if (classify_json) {
                Json j;
                j["shape"] = shape_of(s);
                j["space"] = to_json(s);
                j["report"] = to_json(s, rep);
                j["points"] = to_json(s, points);
                if (classify_checks) j["checks"] = to_json(cross_check(s));
                out << j.dump(2) << "\n";
            } else {
                print_report(out, s, rep, points);
                if (classify_checks) print_checks(out, cross_check(s));
            }
            return kExitOk;
        }
        if (spec->parsed()) {
            if (count_ring(spec_src) != 1) {
                throw ParseError("spec needs exactly one of --bni, --zn, --s3, --boolean, --semiring");
            }
            const FiniteSemiring r = load_ring(spec_src);
            const auto rep = spectrum(r);
            const XTopSpace s = spec_space(r, parse_selector(spec_subspace));
            const auto srep = separation_report(s);
            const auto points = classify_points(s);
            if (spec_json) {
                Json j;
                j["semiring"] = to_json(r);
                j["spectrum"] = to_json(r, rep);
                j["subspace"] = spec_subspace;
                j["shape"] = shape_of(s);
                j["space"] = to_json(s);
                j["report"] = to_json(s, srep);
                j["points"] = to_json(s, points);
                out << j.dump(2) << "\n";
            } else {
                print_spectrum(out, r, rep);
                out << "subspace: " << spec_subspace << "\n";
                print_report(out, s, srep, points);
            }
            return kExitOk;
        }
        if (bni_cmd->parsed()) {
            const auto v = verify_bni(bni_n, bni_i);
            const FiniteSemiring r = bni(bni_n, bni_i);
            const auto& labels = r.labels();
            if (bni_json) {
                Json j;
                j["n"] = v.n;
                j["i"] = v.i;
                j["case"] = v.theorem_case;
                Json p = Json::array(), c = Json::array();
                for (const auto& s : v.predicted_spec) p.push_back(label_array(labels, s));
                for (const auto& s : v.computed_spec) c.push_back(label_array(labels, s));
                j["predicted_spec"] = p;
                j["computed_spec"] = c;
                j["predicted_kdim"] = v.predicted_kdim;
                j["computed_kdim"] = v.computed_kdim;
                j["predicted_shape"] = v.predicted_shape;
                j["computed_shape"] = v.computed_shape;
                j["match"] = v.match;
                out << j.dump(2) << "\n";
            } else {
                out << "B(" << v.n << "," << v.i << ") case " << v.theorem_case << "\n";
                out << "predicted: " << family_text(labels, v.predicted_spec) << "  kdim " << v.predicted_kdim
                    << "  shape " << v.predicted_shape << "\n";
                out << "computed:  " << family_text(labels, v.computed_spec) << "  kdim " << v.computed_kdim
                    << "  shape " << v.computed_shape << "\n";
                out << (v.match ? "match" : "MISMATCH") << "\n";
            }
            return v.match ? kExitOk : kExitVerifyFailed;
        }
        if (verify->parsed()) {
            if ((max_size && *max_size == 0) || (max_n && *max_n == 0)) throw ParseError("bounds must be positive");
            bool ok = true;
            for (const auto& r : run_suite(suite, {max_size, max_n})) {
                out << r.suite << ": " << r.instances << " instances, " << r.failures.size() << " failures\n";
                const std::size_t shown = std::min<std::size_t>(r.failures.size(), 20);
                for (std::size_t k = 0; k < shown; ++k) out << "  " << r.failures[k] << "\n";
                if (r.failures.size() > shown) out << "  ... " << r.failures.size() - shown << " more\n";
                ok = ok && r.passed();
            }
            out << (ok ? "PASS" : "FAIL") << "\n";
            return ok ? kExitOk : kExitVerifyFailed;
        }
        if (exp->parsed()) {
            const std::size_t sources = count_space(export_space) + count_ring(export_ring);
            if (sources != 1) throw ParseError("export needs exactly one source");
            const XTopSpace s = count_space(export_space) == 1
                                    ? load_space(export_space)
                                    : spec_space(load_ring(export_ring), parse_selector(export_subspace));
            if (export_format == "dot") {
                out << space_dot(s, export_closed);
            } else if (export_format == "json") {
                out << to_json(s).dump(2) << "\n";
            } else {
                throw ParseError("unknown format '" + export_format + "' (expected dot or json)");
            }
            return kExitOk;
        }
    } catch (const NotXTopError& e) {
        err << "not X-top: " << e.what() << "\n";
        return kExitNotXTop;
    } catch (const AxiomError& e) {
        err << "semiring axiom '" << e.axiom() << "' fails: " << e.what() << "\n";
        return kExitAxiom;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitParse;
    }
    return kExitParse;
}

}  // namespace xtop
