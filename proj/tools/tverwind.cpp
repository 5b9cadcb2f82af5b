#include "tverwind/bounds.hpp"
#include "tverwind/drawings.hpp"
#include "tverwind/errors.hpp"
#include "tverwind/hunt.hpp"
#include "tverwind/qwinding.hpp"
#include "tverwind/service.hpp"
#include "tverwind/tverberg.hpp"
#include "tverwind/winding.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

using namespace tverwind;
using nlohmann::json;

namespace {

enum Exit { ok = 0, check_failed = 1, usage = 2, input = 3 };

// Errors while reading or interpreting an input file.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

template <class F>
auto load(const std::string& path, F&& parse) {
    const std::string text = slurp(path);
    try {
        return parse(parse_json_text(text));
    } catch (const Error& e) {
        throw InputError(path + ": " + e.what());
    }
}

Drawing load_drawing(const std::string& path) { return load(path, drawing_from_json); }

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

void note(const std::string& s) { std::cerr << s << "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tverberg and winding partitions of small point sets and graph drawings"};
    app.require_subcommand(1);
    int rc = ok;

    // generate
    auto* gen = app.add_subcommand("generate", "Write a drawing or point configuration as JSON");
    gen->require_subcommand(1);
    int alt_n = 7;
    std::string alt_graph;
    auto* alt = gen->add_subcommand("alternating", "Alternating linear drawing of K_n");
    alt->add_option("--n", alt_n, "Number of vertices")->required()->check(CLI::Range(1, 64));
    alt->add_option("--graph", alt_graph, "Keep only the edges of this preset graph");
    alt->callback([&] {
        Drawing dr = alternating_linear_drawing(alt_n);
        if (!alt_graph.empty()) dr = restrict_drawing(dr, graph_preset(alt_graph));
        emit(drawing_to_json(dr));
        note("alternating drawing on " + std::to_string(alt_n) + " vertices, " +
             std::to_string(dr.graph().edge_count()) + " edges");
    });
    int sk_d = 2, sk_q = 3;
    auto* sk = gen->add_subcommand("sierksma", "Sierksma's cluster configuration");
    sk->add_option("--d", sk_d, "Dimension (1 or 2)")->required();
    sk->add_option("--q", sk_q, "Number of blocks")->required();
    sk->callback([&] {
        PointConfig c{sk_d, sk_q, sierksma_configuration(sk_d, sk_q)};
        emit(point_config_to_json(c));
        note(std::to_string(c.points.size()) + " points");
    });
    std::string rnd_graph;
    std::uint64_t rnd_seed = 0;
    auto* rnd = gen->add_subcommand("random", "Random straight-line drawing in general position");
    rnd->add_option("--graph", rnd_graph, "Preset graph name (K7, K2_3, C5, ...)")->required();
    rnd->add_option("--seed", rnd_seed, "Seed")->required();
    rnd->callback([&] { emit(drawing_to_json(random_drawing(graph_preset(rnd_graph), rnd_seed))); });

    // gp-check
    std::string gp_file;
    auto* gp = app.add_subcommand("gp-check", "Report general-position violations");
    gp->add_option("file", gp_file, "Drawing JSON")->required();
    gp->callback([&] {
        const auto v = general_position_check(load_drawing(gp_file));
        emit(gp_report_to_json(v));
        note(v.empty() ? "general position" : std::to_string(v.size()) + " violation(s)");
        if (!v.empty()) rc = check_failed;
    });

    // perturb
    std::string pt_file, pt_mag;
    std::uint64_t pt_seed = 0;
    auto* pt = app.add_subcommand("perturb", "Perturb a drawing into general position");
    pt->add_option("file", pt_file, "Drawing JSON")->required();
    pt->add_option("--seed", pt_seed, "Seed")->required();
    pt->add_option("--mag", pt_mag, "Perturbation magnitude (rational)")->required();
    pt->callback([&] {
        const Drawing dr = load_drawing(pt_file);
        emit(drawing_to_json(perturb(dr, pt_seed, parse_rational(pt_mag))));
    });

    // enumerate
    auto* en = app.add_subcommand("enumerate", "Enumerate winding or Tverberg partitions");
    en->require_subcommand(1);
    std::string ew_file;
    int ew_q = 0, jobs = 1;
    bool ew_reference = false;
    auto* ew = en->add_subcommand("winding", "Winding partitions of a drawing of K_{3q-2}");
    ew->add_option("file", ew_file, "Drawing JSON")->required();
    ew->add_option("--q", ew_q, "Number of blocks")->required();
    ew->add_option("--jobs", jobs, "Worker threads (0 = all cores)");
    ew->add_flag("--reference", ew_reference, "Use the serial reference search");
    ew->callback([&] {
        const Drawing dr = load_drawing(ew_file);
        const auto certs = ew_reference ? enumerate_winding_reference(dr, ew_q)
                                        : enumerate_winding_subgraph(dr, ew_q, jobs);
        json list = json::array();
        for (const auto& c : certs) list.push_back(certificate_to_json(c));
        emit({{"q", ew_q}, {"count", certs.size()}, {"certificates", list}});
        note(std::to_string(certs.size()) + " winding partition(s)");
    });
    std::string et_file;
    int et_q = 0;
    auto* et = en->add_subcommand("tverberg", "Tverberg partitions of a point configuration");
    et->add_option("file", et_file, "Point configuration JSON")->required();
    et->add_option("--q", et_q, "Number of blocks")->required();
    et->add_option("--jobs", jobs, "Worker threads (0 = all cores)");
    et->callback([&] {
        PointConfig c = load(et_file, point_config_from_json);
        if (c.q != et_q)
            throw InputError(et_file + ": configuration has q = " + std::to_string(c.q) + ", --q is " +
                             std::to_string(et_q));
        const auto certs = enumerate_tverberg(c, jobs);
        json list = json::array();
        for (const auto& t : certs)
            list.push_back({{"family", family_to_json(t.family)}, {"witness", point_to_json(t.witness)}});
        emit({{"d", c.d}, {"q", c.q}, {"count", certs.size()}, {"partitions", list}});
        note(std::to_string(certs.size()) + " Tverberg partition(s)");
    });

    // check
    std::string ck_file, ck_family;
    auto* ck = app.add_subcommand("check", "Certify one face family as a winding partition");
    ck->add_option("file", ck_file, "Drawing JSON")->required();
    ck->add_option("--family", ck_family, "Faces like \"4|0,1,6|2,3,5\"")->required();
    ck->callback([&] {
        const Drawing dr = load_drawing(ck_file);
        const FaceFamily fam = parse_family(ck_family);
        const auto cert = is_winding_partition(dr, fam);
        emit({{"family", family_to_json(fam)},
              {"certified", cert.has_value()},
              {"certificate", cert ? certificate_to_json(*cert) : json(nullptr)}});
        note(cert ? "certified at " + to_string(cert->witness) : "not a winding partition");
        if (!cert) rc = check_failed;
    });

    // bounds
    int bd_d = 2, bd_q = 3;
    std::optional<long long> bd_observed;
    auto* bd = app.add_subcommand("bounds", "Evaluate the counting bounds");
    bd->add_option("--d", bd_d, "Dimension")->required()->check(CLI::PositiveNumber);
    bd->add_option("--q", bd_q, "Number of blocks")->required()->check(CLI::Range(2, 1000));
    bd->add_option("--observed", bd_observed, "Observed count to compare against");
    bd->callback([&] {
        const auto r = bound_report(bd_d, bd_q, bd_observed);
        emit(bound_report_to_json(r));
        if (r.flagged()) {
            note("observed count is below the proved bound");
            rc = check_failed;
        }
    });

    // qwinding
    std::string qw_file;
    int qw_q = 2, qw_len = 3;
    auto* qw = app.add_subcommand("qwinding", "Search disjoint paths/cycles with a common witness");
    qw->add_option("file", qw_file, "Drawing JSON")->required();
    qw->add_option("--q", qw_q, "Number of paths/cycles")->required();
    qw->add_option("--max-len", qw_len, "Maximum vertices per path or cycle")->check(CLI::PositiveNumber);
    qw->callback([&] {
        const Drawing dr = load_drawing(qw_file);
        const auto cert = has_q_winding_partition(dr, qw_q, qw_len);
        emit({{"q", qw_q},
              {"max_len", qw_len},
              {"found", cert.has_value()},
              {"family", cert ? pc_family_to_json(cert->family) : json(nullptr)},
              {"witness", cert ? point_to_json(cert->witness) : json(nullptr)}});
        note(cert ? to_string(cert->family) + " at " + to_string(cert->witness) : "no q-winding partition");
    });

    // outerplanar
    std::string op_file;
    bool op_draw = false;
    auto* op = app.add_subcommand("outerplanar", "Decide outerplanarity of a graph");
    op->add_option("file", op_file, "Graph or drawing JSON")->required();
    op->add_flag("--drawing", op_draw, "Include a convex-position drawing when outerplanar");
    op->callback([&] {
        const Graph g = load(op_file, graph_from_json);
        const auto r = is_outerplanar(g);
        json out{{"outerplanar", r.outerplanar}};
        if (r.outerplanar) {
            out["circle_order"] = r.circle_order;
            if (op_draw) out["drawing"] = drawing_to_json(convex_position_drawing(g));
        } else {
            out["witness"] = minor_witness_to_json(*r.witness);
        }
        emit(out);
        note(r.outerplanar ? "outerplanar" : "contains a " + r.witness->minor + " minor");
    });

    // hunt
    std::string hu_graph, hu_log;
    int hu_q = 2, hu_budget = 100;
    std::uint64_t hu_seed = 0;
    auto* hu = app.add_subcommand("hunt", "Annealing search for drawings with few winding partitions");
    hu->add_option("--graph", hu_graph, "Preset graph on 3q-2 vertices")->required();
    hu->add_option("--q", hu_q, "Number of blocks")->required();
    hu->add_option("--seed", hu_seed, "Seed")->required();
    hu->add_option("--budget", hu_budget, "Annealing steps")->required()->check(CLI::NonNegativeNumber);
    hu->add_option("--log", hu_log, "Write the step log as NDJSON to this file");
    hu->add_option("--jobs", jobs, "Worker threads per count (0 = all cores)");
    hu->callback([&] {
        const auto r = hunt(graph_preset(hu_graph), hu_q, hu_seed, hu_budget, jobs);
        if (!hu_log.empty()) {
            std::ofstream log(hu_log);
            if (!log) throw InputError("cannot write " + hu_log);
            for (const auto& s : r.trace) log << hunt_log_line(s);
        }
        emit({{"graph", hu_graph},
              {"q", hu_q},
              {"seed", hu_seed},
              {"budget", hu_budget},
              {"best_count", r.best_count},
              {"best_drawing", drawing_to_json(r.best)},
              {"final_count", r.current_count}});
        note("best count " + std::to_string(r.best_count) + " after " + std::to_string(hu_budget) + " steps");
    });

    // serve
    ServeOptions so;
    auto* sv = app.add_subcommand("serve", "Run the HTTP service");
    sv->add_option("--port", so.port, "Port (0 picks a free one)")->check(CLI::Range(0, 65535));
    sv->add_option("--host", so.host, "Bind address");
    sv->add_option("--jobs", so.service.jobs, "Worker threads per enumeration");
    sv->callback([&] {
        HttpService svc(so);
        const int port = svc.bind();
        if (port < 0) throw InputError("cannot bind " + so.host + ":" + std::to_string(so.port));
        note("listening on http://" + so.host + ":" + std::to_string(port));
        if (!svc.listen()) throw InputError("server stopped with an error");
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ok : usage;
    } catch (const InputError& e) {
        note(std::string("error: ") + e.what());
        return input;
    } catch (const ParseError& e) {
        note(std::string("error: ") + e.what());
        return usage;
    } catch (const InvalidArgument& e) {
        note(std::string("error: ") + e.what());
        return usage;
    } catch (const UnsupportedDimension& e) {
        note(std::string("error: ") + e.what());
        return usage;
    } catch (const Error& e) {
        note("error (" + e.kind() + "): " + e.what());
        return input;
    }
    return rc;
}
