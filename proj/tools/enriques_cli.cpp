// Command-line front end: lattice arithmetic, involution classification,
// quadric actions, branch-polynomial membership, and the verify-paper runner.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "enriques/json_io.hpp"
#include "enriques/samplers.hpp"
#include "enriques/verify.hpp"

namespace {

using namespace enriques;
using nlohmann::json;

json read_json_input(const std::string& path) {
    if (path.empty() || path == "-") {
        json j;
        std::cin >> j;
        return j;
    }
    std::ifstream in(path);
    if (!in) throw Error("IoError", "cannot open '" + path + "'");
    json j;
    in >> j;
    return j;
}

void emit(const json& j, bool as_json, const std::string& plain) {
    if (as_json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << plain << "\n";
}

Lattice lattice_from_options(const std::string& name, const std::string& file) {
    if (!name.empty()) return standard_lattice(name);
    if (!file.empty()) return io::lattice_from_json(read_json_input(file));
    throw Error("Usage", "provide --name or --file");
}

int run_verify(const std::string& only, bool as_json) {
    Report report = verify_paper(only.empty() ? std::nullopt
                                              : std::optional<std::string>(only));
    if (as_json) {
        json out = json::array();
        for (const ReportEntry& e : report.entries)
            out.push_back(json{{"id", e.id},
                               {"status", e.status},
                               {"detail", e.detail},
                               {"runtime_ms", e.runtime_ms}});
        std::cout << out.dump(2) << "\n";
    } else {
        for (const ReportEntry& e : report.entries) {
            std::cout << e.id << " " << e.status << " (" << static_cast<long>(e.runtime_ms)
                      << " ms)";
            if (!e.detail.empty()) std::cout << ": " << e.detail;
            std::cout << "\n";
        }
    }
    return report.all_verified() ? 0 : 1;
}

void print_actions_table() {
    std::cout << "P1xP1 actions (holomorphic involution s with isolated fixed points,\n"
                 "antiholomorphic c; halves are the real point sets of c and s o c):\n";
    for (int t = 1; t <= 5; ++t) {
        ActionReport r = classify_action(canonical_action(t));
        std::cout << "  " << t << "  "
                  << (t == 5 ? "indecomposable " : "decomposable   ") << "halves ("
                  << half_topology_name(r.half1) << ", " << half_topology_name(r.half2)
                  << ")";
        if (r.fibers1 == kRulingsSwapped)
            std::cout << "  rulings swapped";
        else
            std::cout << "  invariant fibers " << r.fibers1 << "+" << r.fibers2;
        std::cout << "\n";
    }
    std::cout << "Sigma2 actions:\n";
    for (int t = 1; t <= 2; ++t) {
        ActionReport r = classify_sigma2_action(canonical_sigma2_action(t));
        std::cout << "  " << t << "  halves (" << half_topology_name(r.half1) << ", "
                  << half_topology_name(r.half2) << ")  invariant generatrices " << r.fibers1
                  << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact lattice arithmetic, involution classification, and certified "
                 "branch-curve membership"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output");

    // ---- lattice ----
    auto* lat = app.add_subcommand("lattice", "integral lattice operations");
    lat->require_subcommand(1);
    std::string lat_name, lat_file;
    auto add_lattice_opts = [&](CLI::App* cmd) {
        cmd->add_option("--name", lat_name, "built-in lattice (U, E8neg, D4neg, nA1, diag(...))");
        cmd->add_option("--file", lat_file, "lattice JSON file ('-' for stdin)");
    };
    auto* lat_sig = lat->add_subcommand("signature", "exact inertia of the Gram form");
    add_lattice_opts(lat_sig);
    lat_sig->callback([&] {
        Lattice l = lattice_from_options(lat_name, lat_file);
        Signature s = signature(l);
        emit(json{{"positive", s.positive}, {"negative", s.negative}, {"zero", s.zero}},
             as_json,
             "(" + std::to_string(s.positive) + "," + std::to_string(s.negative) + "," +
                 std::to_string(s.zero) + ")");
    });
    auto* lat_inv = lat->add_subcommand("invariants", "rank, determinant, parity, discriminant");
    add_lattice_opts(lat_inv);
    lat_inv->callback([&] {
        Lattice l = lattice_from_options(lat_name, lat_file);
        json inv{{"rank", l.rank()},
                 {"det", io::int_to_json(l.det())},
                 {"even", is_even(l)}};
        std::string plain = "rank " + std::to_string(l.rank()) + ", det " + l.det().get_str() +
                            ", " + (is_even(l) ? "even" : "odd");
        if (!l.is_degenerate()) {
            json group = json::array();
            std::string gs;
            for (const Int& d : discriminant_group(l)) {
                group.push_back(io::int_to_json(d));
                gs += (gs.empty() ? "" : ",") + d.get_str();
            }
            inv["discriminant_group"] = group;
            plain += ", discriminant group [" + gs + "]";
        }
        emit(inv, as_json, plain);
    });
    auto* lat_gram = lat->add_subcommand("gram", "print the Gram matrix as JSON");
    add_lattice_opts(lat_gram);
    lat_gram->callback([&] {
        Lattice l = lattice_from_options(lat_name, lat_file);
        std::cout << io::lattice_to_json(l).dump(2) << "\n";
    });

    // ---- involution ----
    auto* inv = app.add_subcommand("involution", "conj_* data on E8 + U with delta bookkeeping");
    inv->require_subcommand(1);
    std::string inv_file = "-";
    auto* inv_plane = inv->add_subcommand(
        "classify-plane", "type of an invariant hyperbolic plane; input JSON "
                          "{involution: {m, eps}, u1: {coords}, u2: {coords}}");
    inv_plane->add_option("file", inv_file, "input file or '-'");
    inv_plane->callback([&] {
        json j = read_json_input(inv_file);
        ExtendedInvolution e = io::involution_from_json(j.at("involution"));
        PlaneTag tag = classify_plane(e, io::ivec_from_json(j.at("u1")),
                                      io::ivec_from_json(j.at("u2")));
        emit(json{{"type", plane_tag_name(tag)}}, as_json, plane_tag_name(tag));
    });
    auto* inv_find = inv->add_subcommand(
        "find-i0w2", "construct an I(0,w2) plane; input adds d4: [4 coord vectors]");
    inv_find->add_option("file", inv_file, "input file or '-'");
    inv_find->callback([&] {
        json j = read_json_input(inv_file);
        ExtendedInvolution e = io::involution_from_json(j.at("involution"));
        std::array<IVec, 4> d4;
        for (int i = 0; i < 4; ++i)
            d4[static_cast<std::size_t>(i)] = io::ivec_from_json(j.at("d4").at(i));
        auto [v1, v2] = find_plane_i0w2(e, io::ivec_from_json(j.at("u1")),
                                        io::ivec_from_json(j.at("u2")), d4);
        json out{{"u1", io::ivec_to_json(v1)}, {"u2", io::ivec_to_json(v2)}};
        emit(out, as_json, out.dump());
    });
    auto* inv_real = inv->add_subcommand(
        "pencil-reality", "reality of a half-pencil class; input adds x: {coords}");
    inv_real->add_option("file", inv_file, "input file or '-'");
    inv_real->callback([&] {
        json j = read_json_input(inv_file);
        ExtendedInvolution e = io::involution_from_json(j.at("involution"));
        RealityTag tag = pencil_reality(e, io::ivec_from_json(j.at("x")));
        emit(json{{"verdict", reality_tag_name(tag)}}, as_json, reality_tag_name(tag));
    });

    // ---- actions ----
    auto* act = app.add_subcommand("actions", "commuting involution pairs on quadrics");
    act->require_subcommand(1);
    std::string act_file = "-";
    auto* act_classify = act->add_subcommand("classify", "classify an action given as JSON");
    act_classify->add_option("file", act_file, "input file or '-'");
    act_classify->callback([&] {
        QuadricAction a = io::action_from_json(read_json_input(act_file));
        ActionReport r = classify_action(a);
        emit(io::action_report_to_json(r), as_json,
             "type " + std::to_string(r.type_id) + ", halves (" + half_topology_name(r.half1) +
                 ", " + half_topology_name(r.half2) + ")");
    });
    act->add_subcommand("table", "print the classification tables")->callback([&] {
        if (as_json) {
            json rows = json::array();
            for (int t = 1; t <= 5; ++t)
                rows.push_back(io::action_report_to_json(classify_action(canonical_action(t))));
            for (int t = 1; t <= 2; ++t)
                rows.push_back(
                    io::action_report_to_json(classify_sigma2_action(canonical_sigma2_action(t))));
            std::cout << rows.dump(2) << "\n";
        } else {
            print_actions_table();
        }
    });

    // ---- model ----
    auto* model = app.add_subcommand("model", "branch polynomials and certified membership");
    model->require_subcommand(1);
    std::string model_file = "-";
    std::size_t budget = 200000;
    model->add_option("--budget", budget, "box budget for positivity certification");
    auto* mv = model->add_subcommand("validate", "check parity/reality constraints");
    mv->add_option("file", model_file, "polynomial JSON file or '-'");
    mv->callback([&] {
        BranchPolynomial p = io::branch_from_json(read_json_input(model_file));
        emit(io::branch_to_json(p), as_json, "valid");
    });
    auto* mc = model->add_subcommand("check", "certified membership in M0");
    mc->add_option("file", model_file, "polynomial JSON file or '-'");
    mc->callback([&] {
        BranchPolynomial p = io::branch_from_json(read_json_input(model_file));
        M0Result r = is_in_m0(p, budget);
        json out = io::m0_result_to_json(r);
        std::string plain = out["member"].get<bool>()
                                ? "in M0 (sign " + std::to_string(out["sign"].get<int>()) + ")"
                                : "not certified: " + out["clause"].get<std::string>() + " (" +
                                      out["detail"].get<std::string>() + ")";
        emit(out, as_json, plain);
    });
    auto* mcert = model->add_subcommand("certificate", "emit the full positivity certificate");
    mcert->add_option("file", model_file, "polynomial JSON file or '-'");
    mcert->callback([&] {
        BranchPolynomial p = io::branch_from_json(read_json_input(model_file));
        SignOutcome out = certify_sign(p, budget);
        if (auto* cert = std::get_if<TorusCertificate>(&out)) {
            std::cout << io::certificate_to_json(*cert).dump(2) << "\n";
        } else if (auto* hz = std::get_if<HasZero>(&out)) {
            json w;
            if (hz->zero) w = json{{"zero", io::sample_to_json(*hz->zero)}};
            else
                w = json{{"negative", io::sample_to_json(hz->pair->second)},
                         {"positive", io::sample_to_json(hz->pair->first)}};
            std::cout << json{{"has_zero", w}}.dump(2) << "\n";
            std::exit(1);
        } else {
            std::cout << json{{"budget_exhausted", true}}.dump(2) << "\n";
            std::exit(1);
        }
    });
    auto* ms = model->add_subcommand("sample", "seeded certified sample around the center");
    std::uint64_t seed = 0;
    std::string radius = "1/4";
    ms->add_option("--seed", seed, "PRNG seed")->required();
    ms->add_option("--radius", radius, "perturbation radius (rational)");
    ms->callback([&] {
        BranchPolynomial p = sample_m0(seed, rat_from_string(radius), budget);
        std::cout << io::branch_to_json(p).dump(2) << "\n";
    });
    auto* mconn = model->add_subcommand("connect", "certified segment chain between two members");
    std::string file_a, file_b;
    int samples = 33;
    mconn->add_option("a", file_a, "first polynomial JSON")->required();
    mconn->add_option("b", file_b, "second polynomial JSON")->required();
    mconn->add_option("--samples", samples, "number of samples along the segment");
    mconn->add_option("--seed", seed, "seed for repair perturbations");
    mconn->callback([&] {
        BranchPolynomial a = io::branch_from_json(read_json_input(file_a));
        BranchPolynomial b = io::branch_from_json(read_json_input(file_b));
        auto chain = connect_path(a, b, samples, seed, budget);
        json out = json::array();
        int repaired = 0;
        for (const PathSample& s : chain) {
            out.push_back(json{{"t", io::rat_to_json(s.t)},
                               {"repaired", s.repaired},
                               {"polynomial", io::branch_to_json(s.polynomial)}});
            repaired += s.repaired ? 1 : 0;
        }
        emit(out, as_json,
             "certified chain of " + std::to_string(chain.size()) + " samples (" +
                 std::to_string(repaired) + " repaired)");
    });
    model->add_subcommand("center", "print the center polynomial")->callback([&] {
        std::cout << io::branch_to_json(center_polynomial()).dump(2) << "\n";
    });

    // ---- verify-paper ----
    auto* verify = app.add_subcommand("verify-paper", "run the acceptance checks");
    std::string only;
    verify->add_option("--only", only, "run a single check (e.g. AC-8)");

    try {
        app.parse(argc, argv);
        if (verify->parsed()) return run_verify(only, as_json);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == "Usage" || e.code() == "IoError" ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
