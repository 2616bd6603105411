// amplifiber: fibers of amplituhedra, their chamber fans, triangulations
// and canonical functions, all in exact rational arithmetic.
//
// Subcommands: instance | fan | canonical | conjecture | identity.
// Exit codes: 0 success, 2 validation, 3 genericity/degeneracy, 4 internal.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "amplifiber/json_io.hpp"
#include "amplifiber/linalg.hpp"
#include "amplifiber/svg.hpp"
#include "amplifiber/version.hpp"

namespace {

using namespace amplifiber;

struct RunConfig {
    std::string command;
    int n = 0;
    int k = 0;
    int m = 0;
    std::string nodes;   // comma-separated rationals, empty = default 1..n
    uint64_t seed = 0;
    int samples = 100;
    std::string out;     // empty = stdout
    int chamber = -1;    // canonical: restrict to one chamber
    std::string point;   // canonical: classify this direction instead
    std::string svg;     // fan: also write an SVG sketch here
};

std::vector<Rat> parse_rat_list(const std::string& s, const char* what) {
    std::vector<Rat> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) {
            throw ValidationError(std::string(what) + ": empty entry");
        }
        out.push_back(rat_parse(item));
    }
    if (out.empty()) {
        throw ValidationError(std::string(what) + ": empty list");
    }
    return out;
}

json config_json(const RunConfig& cfg) {
    json out;
    out["command"] = cfg.command;
    out["n"] = cfg.n;
    out["k"] = cfg.k;
    out["m"] = cfg.m;
    out["nodes"] = cfg.nodes.empty() ? json(nullptr) : json(cfg.nodes);
    out["seed"] = cfg.seed;
    out["samples"] = cfg.samples;
    if (cfg.command == "canonical") {
        out["chamber"] = cfg.chamber;
        out["point"] = cfg.point.empty() ? json(nullptr) : json(cfg.point);
    }
    return out;
}

void emit(const RunConfig& cfg, json payload) {
    payload["command"] = cfg.command;
    payload["version"] = kVersion;
    payload["config"] = config_json(cfg);
    std::string text = payload.dump(2) + "\n";
    if (cfg.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(cfg.out);
        if (!f) {
            throw ValidationError("cannot open output file " + cfg.out);
        }
        f << text;
    }
}

Instance build_instance(const RunConfig& cfg) {
    std::vector<Rat> nodes;
    if (!cfg.nodes.empty()) {
        nodes = parse_rat_list(cfg.nodes, "nodes");
    }
    return build_Z_moment_curve(cfg.n, cfg.m, cfg.k, nodes);
}

// Sampled positive C, its image Y, and the frame over Y with C remembered.
FiberFrame sampled_frame(const Instance& inst, uint64_t seed) {
    Rng rng(derive_seed(seed, 0));
    Mat c = sample_positive_C(inst.k, inst.n, rng);
    Mat y = amplituhedron_map(c, inst);
    return fiber_frame(inst, y, c);
}

int cmd_instance(const RunConfig& cfg) {
    Instance inst = build_instance(cfg);
    json out = instance_json(inst);
    out["ell"] = inst.ell;
    out["polytopal"] = inst.polytopal();
    out["conjugate"] = inst.conjugate();
    emit(cfg, std::move(out));
    return 0;
}

int cmd_fan(const RunConfig& cfg) {
    Instance inst = build_instance(cfg);
    json out;
    ChamberFan fan;
    if (inst.polytopal()) {
        fan = enumerate_chambers(secondary_fan_polytope(inst));
    } else if (inst.conjugate()) {
        FiberFrame frame = sampled_frame(inst, cfg.seed);
        fan = enumerate_chambers(rays_from_frame(frame));
        out["Y"] = mat_json(frame.Y);
    } else {
        throw ValidationError("fan: needs k = 1 or k = n - m - 1");
    }
    json fj = fan_json(fan);
    for (auto& [key, val] : fj.items()) {
        out[key] = std::move(val);
    }
    if (!cfg.svg.empty()) {
        std::ofstream f(cfg.svg);
        if (!f) {
            throw ValidationError("cannot open svg file " + cfg.svg);
        }
        f << fan_svg(fan);
    }
    emit(cfg, std::move(out));
    return 0;
}

int cmd_canonical(const RunConfig& cfg) {
    Instance inst = build_instance(cfg);
    FiberFrame frame = sampled_frame(inst, cfg.seed);
    FiberForm form = affine_forms(frame);
    RaySystem rs = rays_from_frame(form);

    if (!cfg.point.empty()) {
        Vec xi = parse_rat_list(cfg.point, "point");
        if (static_cast<int>(xi.size()) != rs.r) {
            throw ValidationError("point: expected " + std::to_string(rs.r) +
                                  " coordinates");
        }
        if (auto wall = wall_hit(rs, xi)) {
            throw GenericityError("canonical: direction lies on a wall (" +
                                  *wall + ")");
        }
        std::vector<IndexSet> cells = containment_pattern(rs, xi);
        Rat value = jk_residue(form, cells);
        ChamberFan fan = enumerate_chambers(rs);
        int match = -1;
        for (size_t i = 0; i < fan.chambers.size(); ++i) {
            if (fan.chambers[i].cones == cells) {
                match = static_cast<int>(i);
                break;
            }
        }
        json out = triangulation_json(inst, match, cells, value);
        out["Y"] = mat_json(frame.Y);
        emit(cfg, std::move(out));
        return 0;
    }

    ChamberFan fan = enumerate_chambers(rs);
    if (cfg.chamber >= 0) {
        Triangulation t = triangulation_from_chamber(fan, cfg.chamber);
        Rat value = jk_residue(form, t.cells);
        json out = triangulation_json(inst, cfg.chamber, t.cells, value);
        out["Y"] = mat_json(frame.Y);
        emit(cfg, std::move(out));
        return 0;
    }

    json tris = json::array();
    bool all_equal = true;
    Rat first;
    for (size_t i = 0; i < fan.chambers.size(); ++i) {
        Triangulation t =
            triangulation_from_chamber(fan, static_cast<int>(i));
        Rat value = jk_residue(form, t.cells);
        if (i == 0) {
            first = value;
        } else if (value != first) {
            all_equal = false;
        }
        tris.push_back(triangulation_json(inst, static_cast<int>(i), t.cells,
                                          value));
    }
    json out;
    out["Y"] = mat_json(frame.Y);
    out["triangulations"] = std::move(tris);
    out["allEqual"] = all_equal;
    emit(cfg, std::move(out));
    return 0;
}

int cmd_conjecture(const RunConfig& cfg) {
    Instance inst = build_instance(cfg);
    ConjectureReport rep = conjecture_check(inst, cfg.samples, cfg.seed);
    emit(cfg, conjecture_report_json(inst, rep));
    return 0;
}

// Exact identity suites on one instance: the boundary factorization of the
// fiber denominators, the ray-bracket determinant identity with its
// componentwise refinement (conjugate chart only), and the kernel duality
// between the maximal minors of Z and Zperp.
int cmd_identity(const RunConfig& cfg) {
    Instance inst = build_instance(cfg);
    const int n = inst.n;
    const int k = inst.k;
    bool all_passed = true;

    int fact_checked = 0, fact_passed = 0;
    for (int s = 0; s < cfg.samples; ++s) {
        Rng rng(derive_seed(cfg.seed, static_cast<uint64_t>(s)));
        Mat c = sample_positive_C(k, n, rng);
        Mat y = amplituhedron_map(c, inst);
        FiberFrame frame = fiber_frame(inst, y, c);
        Mat lam(k, n - inst.m);
        do {
            for (int r = 0; r < k; ++r) {
                for (int cc = 0; cc < n - inst.m; ++cc) {
                    lam.at(r, cc) = rng.signed_rat();
                }
            }
        } while (rank_of(lam) < k);
        Mat v = mat_mul(lam, frame.A);
        for (int j = 1; j <= n; ++j) {
            ++fact_checked;
            Rat lhs = fiber_denominator(lam, frame, j);
            Rat rhs = pluecker(v, cyclic_interval(j, k, n));
            if (lhs == rhs) {
                ++fact_passed;
            }
        }
    }
    all_passed = all_passed && fact_checked == fact_passed;

    json suites;
    suites["factorization"] = {{"checked", fact_checked},
                               {"passed", fact_passed}};

    if (inst.conjugate()) {
        int rb_checked = 0, rb_passed = 0;
        int cw_checked = 0, cw_passed = 0;
        for (int s = 0; s < cfg.samples; ++s) {
            Rng rng(derive_seed(cfg.seed ^ 0x5eedULL,
                                static_cast<uint64_t>(s)));
            Mat c = sample_positive_C(k, n, rng);
            Mat y = amplituhedron_map(c, inst);
            FiberFrame frame = fiber_frame(inst, y, c);
            FiberForm form = affine_forms(frame);
            for (const IndexSet& J : subsets_of_size(n, k)) {
                ++rb_checked;
                if (ray_bracket_identity(frame, form, J).equal) {
                    ++rb_passed;
                }
            }
            for (int j = 1; j <= n; ++j) {
                ++cw_checked;
                if (ray_bracket_components(frame, form, j)) {
                    ++cw_passed;
                }
            }
        }
        all_passed = all_passed && rb_checked == rb_passed &&
                     cw_checked == cw_passed;
        suites["rayBracket"] = {{"checked", rb_checked},
                                {"passed", rb_passed}};
        suites["rayBracketComponents"] = {{"checked", cw_checked},
                                          {"passed", cw_passed}};
    } else {
        suites["rayBracket"] = nullptr;
        suites["rayBracketComponents"] = nullptr;
    }

    int kd_checked = 0, kd_passed = 0;
    for (const IndexSet& I : subsets_of_size(n, inst.ell)) {
        ++kd_checked;
        Rat lhs = pluecker(inst.Zperp, I);
        IndexSet ic = complement_in(n, I);
        // The kernel minor on I equals the Z minor on the complement, up to
        // the sign of the shuffle that lists the complement first. Putting I
        // first instead is off by (-1)^(|I| * |ic|), which bites when both
        // block sizes are odd.
        Rat rhs = Rat(levi_civita(ic, I)) * pluecker(inst.Z, ic);
        if (lhs == rhs) {
            ++kd_passed;
        }
    }
    all_passed = all_passed && kd_checked == kd_passed;
    suites["kernelDuality"] = {{"checked", kd_checked},
                               {"passed", kd_passed}};

    json out;
    out["suites"] = std::move(suites);
    out["allPassed"] = all_passed;
    emit(cfg, std::move(out));
    if (!all_passed) {
        throw InternalError("identity: a suite failed");
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    CLI::App app{"exact fibers, fans and canonical functions of "
                 "amplituhedra"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("-n", cfg.n, "number of boundary points")
            ->required();
        sub->add_option("-k", cfg.k, "Grassmannian rank")->required();
        sub->add_option("-m", cfg.m, "amplituhedron dimension")->required();
        sub->add_option("--nodes", cfg.nodes,
                        "comma-separated positive increasing rationals "
                        "(default 1..n)");
        sub->add_option("--seed", cfg.seed, "64-bit sampling seed");
        sub->add_option("--samples", cfg.samples, "sample count");
        sub->add_option("--out", cfg.out, "output path (default stdout)");
    };

    CLI::App* c_inst = app.add_subcommand("instance",
                                          "build and certify an instance");
    add_common(c_inst);
    CLI::App* c_fan = app.add_subcommand("fan", "enumerate the chamber fan");
    add_common(c_fan);
    c_fan->add_option("--svg", cfg.svg, "also write an SVG sketch (r = 2)");
    CLI::App* c_canon = app.add_subcommand(
        "canonical", "triangulations and canonical function per chamber");
    add_common(c_canon);
    c_canon->add_option("--chamber", cfg.chamber,
                        "restrict to this chamber index");
    c_canon->add_option("--point", cfg.point,
                        "comma-separated direction to classify instead");
    CLI::App* c_conj = app.add_subcommand(
        "conjecture", "randomized bracket positivity sweep");
    add_common(c_conj);
    CLI::App* c_ident =
        app.add_subcommand("identity", "exact identity suites");
    add_common(c_ident);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (const char* env = std::getenv("AMPLIFIBER_SEED")) {
        try {
            cfg.seed = std::stoull(env);
        } catch (const std::exception&) {
            std::cerr << "error: AMPLIFIBER_SEED is not a 64-bit integer\n";
            return 2;
        }
    }

    try {
        if (c_inst->parsed()) {
            cfg.command = "instance";
            return cmd_instance(cfg);
        }
        if (c_fan->parsed()) {
            cfg.command = "fan";
            return cmd_fan(cfg);
        }
        if (c_canon->parsed()) {
            cfg.command = "canonical";
            return cmd_canonical(cfg);
        }
        if (c_conj->parsed()) {
            cfg.command = "conjecture";
            return cmd_conjecture(cfg);
        }
        cfg.command = "identity";
        return cmd_identity(cfg);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const GenericityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
}
