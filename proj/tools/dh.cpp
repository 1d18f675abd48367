#include <CLI11.hpp>
#include <json.hpp>

#include "dh/associative.hpp"
#include "dh/distributive.hpp"
#include "dh/functor.hpp"
#include "dh/io.hpp"
#include "dh/knots.hpp"
#include "dh/leibniz.hpp"
#include "dh/yb.hpp"

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

using json = nlohmann::ordered_json;

namespace {

using namespace dh;

// Refuse runs whose basis would not fit in memory; DH_MAX_BASIS overrides.
long long basis_cap() {
    if (const char* env = std::getenv("DH_MAX_BASIS")) {
        try {
            return std::stoll(env);
        } catch (const std::exception&) {
            throw std::invalid_argument("DH_MAX_BASIS is not an integer");
        }
    }
    return 2000000;
}

void guard(long long estimated) {
    long long cap = basis_cap();
    if (estimated > cap)
        throw std::invalid_argument(
            "memory guard: estimated basis size " + std::to_string(estimated) +
            " exceeds the cap " + std::to_string(cap) +
            " (set DH_MAX_BASIS to override)");
}

// n^e, saturating instead of overflowing
long long power_estimate(long long n, int e) {
    long long r = 1;
    while (e-- > 0) {
        if (r > 4000000000LL / std::max(n, 1LL)) return 4000000000LL;
        r *= n;
    }
    return r;
}

std::string torsion_str(const std::vector<Int>& t) {
    std::string s = "[";
    for (size_t i = 0; i < t.size(); ++i) {
        if (i) s += ",";
        s += t[i].str();
    }
    return s + "]";
}

json group_json(const HomologyGroup& h) {
    json tors = json::array();
    for (const Int& d : h.torsion) tors.push_back(d.str());
    return json{{"free", h.free_rank}, {"torsion", tors}};
}

struct Options {
    bool as_json = false;
    bool dump = false;
    int max_degree = 3;
    long long seed = 0;
    int workers = 1;
};

void emit(const Options& opt, const json& report, const std::string& text) {
    if (opt.as_json)
        std::cout << report.dump(2) << "\n";
    else
        std::cout << text;
}

json run_meta(const Options& opt) {
    return json{{"seed", opt.seed}, {"workers", opt.workers}};
}

void print_homology(const Options& opt, json& report, std::ostringstream& text,
                    const ChainComplex& c, int lo, int hi) {
    json degrees = json::array();
    for (int n = lo; n <= hi; ++n) {
        HomologyGroup h = homology(c, n);
        text << "deg " << n << ": free=" << h.free_rank
             << ", torsion=" << torsion_str(h.torsion) << "\n";
        json g = group_json(h);
        g["deg"] = n;
        degrees.push_back(g);
    }
    report["homology"] = degrees;
    if (opt.dump) {
        text << dump_complex(c);
        report["complex"] = dump_complex(c);
    }
}

int cmd_check(const Options& opt, const std::string& path) {
    FiniteMagma m = load_magma(path);
    AxiomReport a = check_axioms(m);
    std::vector<std::pair<std::string, bool>> flags = {
        {"shelf", a.shelf},       {"spindle", a.spindle},
        {"rack", a.rack},         {"quandle", a.quandle},
        {"kei", a.kei},           {"entropic", a.entropic},
        {"left-distributive", a.left_distributive}};
    std::string names;
    json report{{"command", "check"}, {"size", m.size}};
    for (auto& [name, v] : flags) {
        if (v) names += (names.empty() ? "" : " ") + name;
        report[name] = v;
    }
    report["run"] = run_meta(opt);
    emit(opt, report,
         "size " + std::to_string(m.size) + "\nproperties: " +
             (names.empty() ? "none" : names) + "\n");
    return 0;
}

int cmd_homology(const Options& opt, const std::string& theory,
                 const std::string& path) {
    FiniteMagma m = load_magma(path);
    std::ostringstream text;
    json report{{"command", "homology"}, {"theory", theory}};
    text << "theory " << theory << ", carrier size " << m.size
         << ", max degree " << opt.max_degree << "\n";
    if (theory == "rack" || theory == "quandle" || theory == "degenerate") {
        guard(power_estimate(m.size, opt.max_degree + 1));
        RackComplexes rc = rack_quandle_complexes(m, opt.max_degree);
        const ChainComplex& c = theory == "rack"      ? rc.rack
                                : theory == "quandle" ? rc.quandle
                                                      : rc.degenerate;
        text << "grading: C_n has basis X^n\n";
        print_homology(opt, report, text, c, 0, opt.max_degree);
    } else if (theory == "oneterm") {
        guard(power_estimate(m.size, opt.max_degree + 2));
        ChainComplex c = one_term_complex(m, opt.max_degree);
        text << "grading: C_n has basis X^(n+1)\n";
        print_homology(opt, report, text, c, 0, opt.max_degree);
    } else if (theory == "bar" || theory == "hochschild") {
        guard(power_estimate(m.size, opt.max_degree + 3));
        SemigroupData s = semigroup(m);
        ChainComplex c =
            theory == "bar"
                ? bar_complex(s, std::nullopt, std::nullopt, opt.max_degree)
                : hochschild_complex(
                      s, multiplication_wall(s, WallSide::bi), opt.max_degree);
        print_homology(opt, report, text, c, 0, opt.max_degree);
    } else if (theory == "truncl" || theory == "truncr") {
        guard(power_estimate(m.size, opt.max_degree + 2));
        SemigroupData s = semigroup(m);
        TruncatedReport tr = truncated_acyclicity(
            s, theory == "truncl" ? WallSide::left : WallSide::right,
            opt.max_degree);
        text << "monoid: " << (tr.monoid ? "yes" : "no") << "\n";
        print_homology(opt, report, text, tr.complex, 0, opt.max_degree);
        text << "acyclic: " << (tr.acyclic ? "yes" : "no") << "\n";
        report["monoid"] = tr.monoid;
        report["acyclic"] = tr.acyclic;
    } else {
        throw CLI::ValidationError(
            "theory must be one of rack, quandle, degenerate, oneterm, bar, "
            "hochschild, truncl, truncr");
    }
    report["run"] = run_meta(opt);
    emit(opt, report, text.str());
    return 0;
}

int cmd_color(const Options& opt, const std::string& pd_path,
              const std::string& magma_path) {
    LinkDiagram d = parse_pd(load_text(pd_path));
    FiniteMagma m = load_magma(magma_path);
    guard(power_estimate(m.size, (int)d.arcs.size()));
    long long count = color_count(d, m);
    json report{{"command", "color"},
                {"count", count},
                {"run", run_meta(opt)}};
    emit(opt, report, std::to_string(count) + "\n");
    return 0;
}

int cmd_statesum(const Options& opt, const std::string& pd_path,
                 const std::string& data_path) {
    LinkDiagram d = parse_pd(load_text(pd_path));
    // dispatch on the data file's header keyword
    std::istringstream head(load_text(data_path));
    std::string keyword, line;
    while (std::getline(head, line)) {
        if (auto pos = line.find('#'); pos != std::string::npos)
            line.resize(pos);
        std::istringstream ls(line);
        if (ls >> keyword) break;
    }
    json report{{"command", "statesum"}};
    if (keyword == "cocycle") {
        CocycleFile cf = load_cocycle(data_path);
        TwoCocycle f = cf.two_cocycle();
        guard(power_estimate(f.base.size, (int)d.arcs.size()));
        GroupRing sum = cocycle_state_sum(d, f.base, f);
        report["kind"] = "cocycle";
        report["sum"] = format_group_ring(sum);
        report["run"] = run_meta(opt);
        emit(opt, report, format_group_ring(sum) + "\n");
    } else if (keyword == "weights") {
        StateSumWeights w = load_weights(data_path);
        guard(power_estimate(w.n, d.semi_arc_count()));
        Int sum = boltzmann_state_sum(d, w);
        report["kind"] = "weights";
        report["sum"] = sum.str();
        report["run"] = run_meta(opt);
        emit(opt, report, sum.str() + "\n");
    } else {
        throw FormatError("expected a 'cocycle' or 'weights' file", 1);
    }
    return 0;
}

int cmd_ybe(const Options& opt, const std::string& path) {
    SetYBOperator r = load_ybop(path);
    YbeCheck c = check_ybe(r);
    YbeCheck lc = check_ybe(linearize(r));
    bool inv = r.invertible();
    json report{{"command", "ybe"},
                {"ok", c.ok},
                {"witness", c.witness},
                {"linear_ok", lc.ok},
                {"invertible", inv},
                {"run", run_meta(opt)}};
    std::ostringstream text;
    text << "ybe: " << (c.ok ? "ok" : "fails at " + c.witness) << "\n";
    text << "linear check: " << (lc.ok ? "ok" : "fails") << "\n";
    text << "invertible: " << (inv ? "yes" : "no") << "\n";
    emit(opt, report, text.str());
    return 0;
}

int cmd_extend(const Options& opt, const std::string& path,
               const std::string& kind) {
    CocycleFile cf = load_cocycle(path);
    TwoCocycle f = cf.two_cocycle();
    std::ostringstream text;
    json report{{"command", "extend"}, {"kind", kind}};
    CocycleCheck check = check_two_cocycle(
        f, kind == "group" ? CocycleKind::group : CocycleKind::twisted_rack);
    text << kind << " cocycle: " << (check.ok ? "ok" : "fails at " + check.witness)
         << "\n";
    report["cocycle_ok"] = check.ok;
    report["witness"] = check.witness;
    if (kind == "twisted_rack") {
        ExtendResult ext = extend(alexander_cocycle(f), ExtendKind::distributive);
        AxiomReport a = check_axioms(ext.product);
        text << "extension: size " << ext.product.size
             << ", cocycle identity " << (ext.cocycle_identity ? "ok" : "fails")
             << ", shelf " << (a.shelf ? "yes" : "no") << ", rack "
             << (a.rack ? "yes" : "no") << ", quandle "
             << (a.quandle ? "yes" : "no") << "\n";
        report["extension"] = json{{"size", ext.product.size},
                                   {"cocycle_identity", ext.cocycle_identity},
                                   {"shelf", a.shelf},
                                   {"rack", a.rack},
                                   {"quandle", a.quandle}};
    }
    report["run"] = run_meta(opt);
    emit(opt, report, text.str());
    return 0;
}

int cmd_cube(const Options& opt, const std::string& pd_path, int m) {
    LinkDiagram d = parse_pd(load_text(pd_path));
    {
        long long total = 0;
        long long per_state =
            power_estimate(m, d.semi_arc_count() + d.unknots);
        total = power_estimate(2, (int)d.crossings.size());
        guard(total > 4000000000LL / std::max(per_state, 1LL)
                  ? 4000000000LL
                  : total * per_state);
    }
    CubeHomology cube = khovanov_cube(d, m);
    std::ostringstream text;
    text << "cube homology (m=" << m << ", " << cube.crossings
         << " crossings)\n";
    json degrees = json::array();
    for (int k = 0; k <= cube.crossings; ++k) {
        const HomologyGroup& h = cube.by_cube_degree[k];
        text << "cube deg " << k << ": free=" << h.free_rank
             << ", torsion=" << torsion_str(h.torsion) << "\n";
        json g = group_json(h);
        g["deg"] = k;
        degrees.push_back(g);
    }
    json report{{"command", "cube"},
                {"m", m},
                {"crossings", cube.crossings},
                {"homology", degrees}};
    if (opt.dump) {
        text << dump_complex(cube.complex);
        report["complex"] = dump_complex(cube.complex);
    }
    report["run"] = run_meta(opt);
    emit(opt, report, text.str());
    return 0;
}

int cmd_leibniz(const Options& opt, const std::string& path) {
    LeibnizAlgebraData l = load_leibniz(path);
    LeibnizReport lr = check_leibniz(l);
    std::ostringstream text;
    text << "leibniz check: bracket=" << (lr.bracket_ok ? "ok" : "fails")
         << ", squares_vanish=" << (lr.squares_vanish ? "yes" : "no") << "\n";
    json report{{"command", "leibniz"},
                {"bracket_ok", lr.bracket_ok},
                {"squares_vanish", lr.squares_vanish}};
    if (!lr.ok()) {
        for (const auto& fail : lr.failures) text << "  " << fail << "\n";
        report["failures"] = lr.failures;
        report["run"] = run_meta(opt);
        emit(opt, report, text.str());
        return 1;
    }
    guard(power_estimate(l.dim, opt.max_degree + 2) * l.dim_m);
    ChainComplex c = leibniz_complex(l, opt.max_degree);
    print_homology(opt, report, text, c, 0, opt.max_degree);
    report["run"] = run_meta(opt);
    emit(opt, report, text.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite distributive-algebra toolkit"};
    app.require_subcommand(1);

    Options opt;
    app.add_flag("--json", opt.as_json, "emit a JSON report");
    app.add_option("--max-degree", opt.max_degree, "top homology degree")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    app.add_flag("--dump-complex", opt.dump,
                 "also print the chain complex dump");
    app.add_option("--seed", opt.seed, "seed recorded in the report")
        ->capture_default_str();
    app.add_option("--workers", opt.workers, "worker count")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    std::string magma_path, pd_path, data_path, theory, kind = "twisted_rack";
    int cube_m = 2;

    CLI::App* c_check = app.add_subcommand("check", "magma axiom flags");
    c_check->add_option("magma", magma_path)->required();

    CLI::App* c_hom = app.add_subcommand("homology", "integer homology");
    c_hom->add_option("theory", theory)->required();
    c_hom->add_option("magma", magma_path)->required();

    CLI::App* c_color = app.add_subcommand("color", "coloring count");
    c_color->add_option("pd", pd_path)->required();
    c_color->add_option("magma", magma_path)->required();

    CLI::App* c_sum = app.add_subcommand("statesum", "state-sum invariants");
    c_sum->add_option("pd", pd_path)->required();
    c_sum->add_option("data", data_path)->required();

    CLI::App* c_ybe = app.add_subcommand("ybe", "Yang-Baxter check");
    c_ybe->add_option("op", data_path)->required();

    CLI::App* c_ext = app.add_subcommand("extend", "cocycle extensions");
    c_ext->add_option("cocycle", data_path)->required();
    c_ext->add_option("--kind", kind)
        ->check(CLI::IsMember({"twisted_rack", "group"}));

    CLI::App* c_cube = app.add_subcommand("cube", "cube homology of a diagram");
    c_cube->add_option("pd", pd_path)->required();
    c_cube->add_option("--m", cube_m, "rank of Z[x]/(x^m)")
        ->check(CLI::Range(2, 64));

    CLI::App* c_lei = app.add_subcommand("leibniz", "Leibniz algebra homology");
    c_lei->add_option("file", data_path)->required();

    // global flags may appear after the subcommand arguments
    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
        if (*c_check) return cmd_check(opt, magma_path);
        if (*c_hom) return cmd_homology(opt, theory, magma_path);
        if (*c_color) return cmd_color(opt, pd_path, magma_path);
        if (*c_sum) return cmd_statesum(opt, pd_path, data_path);
        if (*c_ybe) return cmd_ybe(opt, data_path);
        if (*c_ext) return cmd_extend(opt, data_path, kind);
        if (*c_cube) return cmd_cube(opt, pd_path, cube_m);
        if (*c_lei) return cmd_leibniz(opt, data_path);
        return 2;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const dh::FormatError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const dh::PdParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
