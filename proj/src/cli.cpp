#include "orbilat/cli.hpp"

#include "orbilat/fingrp.hpp"
#include "orbilat/json_io.hpp"
#include "orbilat/orbifold.hpp"
#include "orbilat/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <thread>

namespace orbilat::cli {

namespace {

using nlohmann::json;

json layout_json(const AmbientLattice& L) {
    json arr = json::array();
    for (const auto& [t, off] : L.layout) arr.push_back({{"component", t.name()}, {"offset", off}});
    return arr;
}

json invariants_json(const InvariantReport& inv) {
    json perm = json::array();
    for (auto p : inv.component_perm) perm.push_back(p);
    return json{{"order", inv.order},
                {"fixed_rank", inv.fixed_rank},
                {"in_weyl", inv.in_weyl},
                {"component_perm", perm},
                {"phi_cycles", inv.phi_cycles},
                {"root_fix", inv.root_fix},
                {"glue_action_order", inv.glue_action_order},
                {"miyamoto_ok", inv.miyamoto_ok}};
}

json orbifold_json(const OrbifoldReport& r) {
    json j{{"lattice", niemeier_id_name(r.lattice)},
           {"automorphism", r.automorphism},
           {"order", r.invariants.order},
           {"fixed_rank", r.invariants.fixed_rank},
           {"in_weyl", r.invariants.in_weyl},
           {"phi_cycles", r.invariants.phi_cycles},
           {"root_fix", r.invariants.root_fix},
           {"outcome", outcome_name(r.outcome)}};
    j["rho"] = r.top_weight ? json(rat_to_string(*r.top_weight)) : json();
    j["g0_dim"] = r.g0 ? json(*r.g0) : json();
    j["class_label"] = r.class_label.empty() ? json() : json(r.class_label);
    return j;
}

json checks_json(const std::vector<Check>& checks) {
    json arr = json::array();
    for (const auto& c : checks)
        arr.push_back({{"check", c.check}, {"expected", c.expected}, {"got", c.got}, {"pass", c.pass}});
    return arr;
}

NiemeierId parse_lattice_or_throw(const std::string& name) {
    auto id = niemeier_id_parse(name);
    if (!id) throw CLI::ValidationError("lattice", "unknown lattice '" + name + "'");
    return *id;
}

LatticeAutomorphism resolve_aut(NiemeierId id, const std::string& name, const std::string& file) {
    if (!file.empty()) {
        std::ifstream f(file);
        if (!f) throw CLI::ValidationError("--file", "cannot open '" + file + "'");
        json j;
        f >> j;
        return make_automorphism(id, matrix_from_json(j), "input");
    }
    auto a = catalog_lookup(name);
    if (!a || a->lattice != id)
        throw CLI::ValidationError("automorphism", "unknown automorphism '" + name + "' on " + niemeier_id_name(id));
    return *a;
}

void print_checks_text(const std::vector<Check>& checks, std::ostream& out) {
    for (const auto& c : checks)
        out << (c.pass ? "PASS " : "FAIL ") << c.check
            << (c.pass ? "" : "  expected " + c.expected.dump() + " got " + c.got.dump()) << "\n";
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"niemeier lattice and Z3-orbifold admissibility toolkit"};
    app.require_subcommand(1);

    bool as_json = false;
    std::uint64_t seed = 20150801;
    std::size_t cap = 200000;
    int jobs = 0;
    app.add_flag("--json", as_json, "emit JSON on stdout");
    app.add_option("--seed", seed, "seed for randomized property checks");
    app.add_option("--cap", cap, "group closure element cap");
    app.add_option("--jobs", jobs, "worker threads for the stabilizer scan (0 = hardware)");

    std::string lattice_name, aut_name, aut2_name, matrix_file, g_file, suite_name;

    auto* cmd_build = app.add_subcommand("build", "construct a lattice and print its certification");
    cmd_build->fallthrough();
    cmd_build->add_option("lattice", lattice_name)->required();

    auto* cmd_roots = app.add_subcommand("roots", "enumerate the norm-2 vectors");
    cmd_roots->fallthrough();
    cmd_roots->add_option("lattice", lattice_name)->required();

    auto* cmd_inv = app.add_subcommand("invariants", "invariant report of an automorphism");
    cmd_inv->fallthrough();
    cmd_inv->add_option("lattice", lattice_name)->required();
    cmd_inv->add_option("automorphism", aut_name);
    cmd_inv->add_option("--file", matrix_file, "matrix JSON file instead of a catalog name");

    auto* cmd_cls = app.add_subcommand("classify", "orbifold classification of an automorphism");
    cmd_cls->fallthrough();
    cmd_cls->add_option("lattice", lattice_name)->required();
    cmd_cls->add_option("automorphism", aut_name);
    cmd_cls->add_option("--file", matrix_file, "matrix JSON file instead of a catalog name");

    auto* cmd_cert = app.add_subcommand("certify", "check a conjugacy certificate g^{-1} tau g = tau'");
    cmd_cert->fallthrough();
    cmd_cert->add_option("lattice", lattice_name)->required();
    cmd_cert->add_option("tau", aut_name)->required();
    cmd_cert->add_option("tau2", aut2_name)->required();
    cmd_cert->add_option("--g", g_file, "conjugator matrix JSON file")->required();

    auto* cmd_verify = app.add_subcommand("verify", "run a verification suite (or 'all')");
    cmd_verify->fallthrough();
    cmd_verify->add_option("suite", suite_name)->required();
    bool deep = false;
    cmd_verify->add_flag("--deep", deep, "include the slow nonsplitness search");

    std::vector<std::string> argv = args;
    try {
        std::vector<const char*> cargs;
        cargs.push_back("orbilat");
        for (const auto& a : argv) cargs.push_back(a.c_str());
        app.parse(int(cargs.size()), cargs.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*cmd_build) {
            NiemeierId id = parse_lattice_or_throw(lattice_name);
            const AmbientLattice& L = niemeier(id);
            bool even = L.gram.is_integral();
            for (std::size_t i = 0; i < 24 && even; ++i) even = (L.gram.at(i, i).get_num() % 2 == 0);
            json j{{"lattice", niemeier_id_name(id)},
                   {"rank", L.rank()},
                   {"ambient_dim", L.ambient_dim},
                   {"det", rat_to_string(det(L.gram))},
                   {"even", even},
                   {"component_layout", layout_json(L)},
                   {"glue_code_size", L.is_leech() ? 0 : L.code.elements.size()},
                   {"basis", matrix_to_json(L.basis)}};
            if (as_json) out << j.dump(2) << "\n";
            else
                out << niemeier_id_name(id) << ": rank " << L.rank() << ", det " << rat_to_string(det(L.gram))
                    << ", even " << (even ? "yes" : "no") << ", ambient dim " << L.ambient_dim << "\n";
            return 0;
        }
        if (*cmd_roots) {
            NiemeierId id = parse_lattice_or_throw(lattice_name);
            const AmbientLattice& L = niemeier(id);
            std::size_t n = roots_of(L).size();
            if (as_json) out << json{{"lattice", niemeier_id_name(id)}, {"root_count", n}}.dump(2) << "\n";
            else out << niemeier_id_name(id) << ": " << n << " roots\n";
            return 0;
        }
        if (*cmd_inv) {
            NiemeierId id = parse_lattice_or_throw(lattice_name);
            LatticeAutomorphism a = resolve_aut(id, aut_name, matrix_file);
            InvariantReport inv = invariants(a);
            if (as_json) out << invariants_json(inv).dump(2) << "\n";
            else
                out << a.name << " on " << niemeier_id_name(id) << ": order " << inv.order << ", fixed rank "
                    << inv.fixed_rank << ", root fix " << inv.root_fix << ", phi " << inv.phi_cycles
                    << (inv.in_weyl ? ", in Weyl" : ", outside Weyl")
                    << (inv.miyamoto_ok ? ", admissible" : ", not admissible") << "\n";
            return 0;
        }
        if (*cmd_cls) {
            NiemeierId id = parse_lattice_or_throw(lattice_name);
            LatticeAutomorphism a = resolve_aut(id, aut_name, matrix_file);
            OrbifoldReport rep = classify(niemeier(id), a);
            if (as_json) out << orbifold_json(rep).dump(2) << "\n";
            else
                out << rep.automorphism << " on " << niemeier_id_name(id) << ": " << outcome_name(rep.outcome)
                    << (rep.class_label.empty() ? "" : " [" + rep.class_label + "]") << "\n";
            return 0;
        }
        if (*cmd_cert) {
            NiemeierId id = parse_lattice_or_throw(lattice_name);
            LatticeAutomorphism t1 = resolve_aut(id, aut_name, "");
            LatticeAutomorphism t2 = resolve_aut(id, aut2_name, "");
            std::ifstream f(g_file);
            if (!f) {
                err << "error: cannot open '" << g_file << "'\n";
                return 2;
            }
            json gj;
            f >> gj;
            bool ok = certify_conjugate(matrix_from_json(gj), t1, t2);
            if (as_json) out << json{{"conjugate", ok}}.dump(2) << "\n";
            else out << (ok ? "certified" : "not a certificate") << "\n";
            return ok ? 0 : 1;
        }
        if (*cmd_verify) {
            VerifyOptions opt;
            opt.seed = seed;
            opt.cap = cap;
            opt.jobs = jobs;
            opt.deep = deep;
            std::vector<std::string> suites;
            if (suite_name == "all") suites = verify_suite_names();
            else suites = {suite_name};
            bool ok = true;
            json all = json::array();
            for (const auto& s : suites) {
                auto checks = verify_suite(s, opt);
                ok = ok && all_pass(checks);
                if (as_json)
                    all.push_back({{"suite", s}, {"checks", checks_json(checks)}, {"pass", all_pass(checks)}});
                else {
                    out << "== " << s << " ==\n";
                    print_checks_text(checks, out);
                }
            }
            if (as_json) out << all.dump(2) << "\n";
            return ok ? 0 : 1;
        }
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "error: no command\n";
    return 2;
}

} // namespace orbilat::cli
