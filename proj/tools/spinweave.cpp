// spinweave: build coupled-spin-chain diagrams, run measurement schedules,
// tabulate ground-state degeneracies, sweep single-Pauli errors, and run the
// built-in verification checks.
#include "CLI11.hpp"

#include "sw/decoder.hpp"
#include "sw/phases.hpp"
#include "sw/polyring.hpp"
#include "sw/ssg.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

using namespace sw;

namespace {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string data_dir() {
    const char* env = std::getenv("SW_DATA_DIR");
    return env ? std::string(env) : std::string("data");
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out.good()) throw ConfigError("cannot write " + path);
    out << text;
}

struct BuildOpts {
    std::string lattice = "hypercubic";
    std::string lattice_file;
    int n = 2;
    int L = 4;
    std::string placement = "plaquettes";
};

CellComplex make_lattice(const BuildOpts& o) {
    if (!o.lattice_file.empty()) return lattice_from_file(o.lattice_file);
    if (o.lattice == "hypercubic") return build_hypercubic(o.n, o.L);
    if (o.lattice == "hex-prism") return build_hex_prism(o.L, o.L, o.L);
    throw ConfigError("unknown lattice '" + o.lattice +
                      "' (expected hypercubic or hex-prism)");
}

InteractionDiagram make_diagram(const BuildOpts& o) {
    if (o.placement == "bacon-shor") return build_bacon_shor(o.L);
    CellComplex cc = make_lattice(o);
    if (o.placement == "vertices") return place_chains_around_vertices(cc);
    if (o.placement != "plaquettes")
        throw ConfigError("unknown placement '" + o.placement +
                          "' (expected plaquettes, vertices or bacon-shor)");
    VertexColoring col = two_color_vertices(cc);
    try {
        return place_chains_on_plaquettes(cc, col);
    } catch (const OddParity&) {
        // compensate odd edge-parity loops with extra chains along them
        InteractionDiagram partial = place_chains_on_plaquettes(cc, col, true);
        ParityReport pr = edge_face_parity(cc);
        return add_vertical_chains(partial, pr.loops);
    }
}

Schedule resolve_schedule(const std::string& name, const InteractionDiagram& d) {
    if (name == "auto") {
        bool has_black = false, has_blue = false;
        for (const Check& c : d.checks) {
            if (c.color == Color::black) has_black = true;
            if (c.color == Color::blue) has_blue = true;
        }
        return builtin_schedule(has_black ? "toric-nd-6step"
                                          : (has_blue ? "toric2d-3step"
                                                      : "baconshor-2step"));
    }
    if (name.size() > 5 && name.substr(name.size() - 5) == ".json")
        return schedule_from_file(name);
    return builtin_schedule(name);
}

void print_summary(const InteractionDiagram& d) {
    std::printf("qubits: %zu\nchains: %zu\n", d.n_qubits(), d.chains.size());
    for (Color c : {Color::green, Color::blue, Color::red, Color::black}) {
        size_t k = d.count_checks(c);
        if (k) std::printf("%s checks: %zu\n", color_name(c), k);
    }
}

// ---- verify subcommands; each returns true on pass and prints a line ----

bool verify_matrix_identity_cmd() {
    std::string base = data_dir() + "/matrix_identity/";
    MatrixIdentityReport rep = verify_matrix_identity(
        matrix_from_file(base + "H.json"), matrix_from_file(base + "r.json"),
        matrix_from_file(base + "l.json"), matrix_from_file(base + "target.json"));
    bool ok = rep.ok();
    LaurentMatrix H = matrix_from_file(base + "H.json");
    for (int L : {2, 3}) {
        std::vector<PauliWord> gens = instantiate_on_torus(H, L, true);
        ok = ok && gsd(gens, gens[0].n()) == 3;
    }
    std::printf("matrix-identity: %s (identity=%d, det_r unit=%d, det_l unit=%d, "
                "log2 GSD = 3 at L=2,3)\n",
                ok ? "pass" : "FAIL", int(rep.identity_plain || rep.identity_inverting),
                int(rep.det_r_unit), int(rep.det_l_unit));
    return ok;
}

bool verify_phase3d_cmd() {
    CellComplex cc = build_hypercubic(3, 2);
    InteractionDiagram d = place_chains_on_plaquettes(cc, two_color_vertices(cc));
    bool ok = verify_phase(d, ssg_words(compute_ssg(d)), reference_toric(cc));
    std::printf("phase-3d: %s (effective steady group equals the 3D toric code)\n",
                ok ? "pass" : "FAIL");
    return ok;
}

bool verify_bacon_shor_cmd() {
    InteractionDiagram d = build_bacon_shor(3);
    Schedule s = builtin_schedule("baconshor-2step");
    bool ok = true;
    for (size_t off = 0; off < s.period(); ++off) {
        ClassicalCodeReport rep = ssg_classical_code_check(d, s, off);
        ok = ok && rep.uniform_round && rep.n_effective == 4 &&
             rep.is_repetition_code && rep.all_detected_some_type;
    }
    std::printf("bacon-shor: %s (length-4 repetition code at every round offset)\n",
                ok ? "pass" : "FAIL");
    return ok;
}

bool verify_logical_rewind_cmd() {
    CellComplex cc = build_hypercubic(3, 2);
    InteractionDiagram d = place_chains_on_plaquettes(cc, two_color_vertices(cc));
    PauliWord ll = line_logical(d, 0);
    LogicalTrack six = track_logical(d, builtin_schedule("toric-nd-6step"), ll, 6, 19);
    bool ok = !six.collapsed && six.returned;
    Schedule naive;
    naive.name = "naive-3step";
    naive.rounds = {Round{{Color::red, Color::black}, {}}, Round{{Color::green}, {}},
                    Round{{Color::blue}, {}}};
    LogicalTrack three = track_logical(d, naive, ll, 6, 18);
    ok = ok && three.collapsed;
    std::printf("logical-rewind: %s (six-round cycle returns the logical, "
                "three-round cycle collapses it)\n",
                ok ? "pass" : "FAIL");
    return ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"spinweave: Floquet codes from coupled spin chains"};
    app.require_subcommand(1);

    BuildOpts opt;
    std::string schedule = "auto", out, verify_name, family = "xcube";
    std::string L_list = "2,3,4";
    int rounds = 24, jobs = 0;
    uint64_t seed = 1;

    auto add_lattice_flags = [&](CLI::App* c) {
        c->add_option("--lattice", opt.lattice, "builtin lattice: hypercubic, hex-prism");
        c->add_option("--lattice-file", opt.lattice_file, "lattice JSON file");
        c->add_option("--n", opt.n, "lattice dimension");
        c->add_option("--L", opt.L, "linear system size");
        c->add_option("--placement", opt.placement,
                      "chain placement: plaquettes, vertices, bacon-shor");
    };

    CLI::App* cmd_build = app.add_subcommand("build", "build an interaction diagram");
    add_lattice_flags(cmd_build);
    cmd_build->add_option("--out", out, "write diagram JSON here");

    CLI::App* cmd_run = app.add_subcommand("run", "run a measurement schedule");
    add_lattice_flags(cmd_run);
    cmd_run->add_option("--schedule", schedule, "builtin name, JSON file, or auto");
    cmd_run->add_option("--rounds", rounds, "number of measurement rounds");
    cmd_run->add_option("--seed", seed, "random seed");
    cmd_run->add_option("--out", out, "write trace JSON here");

    CLI::App* cmd_gsd = app.add_subcommand("gsd", "ground-state degeneracy table");
    cmd_gsd->add_option("--family", family, "reference family: toric, xcube");
    cmd_gsd->add_option("--lattice", family, "alias of --family");
    cmd_gsd->add_option("--n", opt.n, "lattice dimension");
    cmd_gsd->add_option("--L", L_list, "comma-separated sizes, e.g. 2,3,4");

    CLI::App* cmd_sweep = app.add_subcommand("decode-sweep",
                                             "single-Pauli error sweep");
    add_lattice_flags(cmd_sweep);
    cmd_sweep->add_option("--schedule", schedule, "builtin name, JSON file, or auto");
    cmd_sweep->add_option("--jobs", jobs, "worker threads (0 = hardware)");
    cmd_sweep->add_option("--out", out, "write per-case CSV here");

    CLI::App* cmd_verify = app.add_subcommand("verify", "run built-in checks");
    cmd_verify->add_option("name", verify_name,
                           "matrix-identity, phase-3d, bacon-shor, logical-rewind, all")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (*cmd_build) {
            InteractionDiagram d = make_diagram(opt);
            print_summary(d);
            if (!out.empty()) write_file(out, diagram_to_json(d));
            return 0;
        }
        if (*cmd_run) {
            InteractionDiagram d = make_diagram(opt);
            Schedule s = resolve_schedule(schedule, d);
            std::vector<PauliWord> tracked = ssg_words(compute_ssg(d, s));
            FloquetRun run = run_schedule(d, s, size_t(rounds), seed, true, tracked);
            std::printf("ran %d rounds of %s on %zu qubits; steady elements: %zu\n",
                        rounds, s.name.c_str(), d.n_qubits(), tracked.size());
            if (!out.empty()) write_file(out, trace_to_json(run));
            return 0;
        }
        if (*cmd_gsd) {
            std::printf("L\tlog2GSD\n");
            std::stringstream ss(L_list);
            std::string tok;
            while (std::getline(ss, tok, ',')) {
                int L = std::stoi(tok);
                CellComplex cc = build_hypercubic(opt.n, L);
                ReferenceCode ref = family == "toric" ? reference_toric(cc)
                                    : family == "xcube"
                                        ? reference_xcube(cc)
                                        : throw ConfigError("unknown family '" +
                                                            family + "'");
                std::printf("%d\t%d\n", L, gsd(ref.stabilizers, ref.n_qubits));
            }
            return 0;
        }
        if (*cmd_sweep) {
            InteractionDiagram d = make_diagram(opt);
            Schedule s = resolve_schedule(schedule, d);
            int j = jobs > 0 ? jobs : int(std::thread::hardware_concurrency());
            SweepReport rep = sweep_single_errors(d, s, j > 0 ? j : 4);
            std::printf("%zu/%zu corrected (%zu detected)\n", rep.n_corrected,
                        rep.cases.size(), rep.n_detected);
            if (!out.empty()) write_file(out, rep.csv());
            return rep.all_pass ? 0 : 1;
        }
        if (*cmd_verify) {
            bool ok = true;
            if (verify_name == "matrix-identity") ok = verify_matrix_identity_cmd();
            else if (verify_name == "phase-3d") ok = verify_phase3d_cmd();
            else if (verify_name == "bacon-shor") ok = verify_bacon_shor_cmd();
            else if (verify_name == "logical-rewind") ok = verify_logical_rewind_cmd();
            else if (verify_name == "all") {
                ok = verify_matrix_identity_cmd();
                ok = verify_phase3d_cmd() && ok;
                ok = verify_bacon_shor_cmd() && ok;
                ok = verify_logical_rewind_cmd() && ok;
            } else {
                throw ConfigError("unknown verify target '" + verify_name + "'");
            }
            return ok ? 0 : 1;
        }
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const NotBipartite& e) {
        std::fprintf(stderr, "NotBipartite: %s\n", e.what());
        return 2;
    } catch (const OddParity& e) {
        std::fprintf(stderr, "OddParity: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 2;
}
