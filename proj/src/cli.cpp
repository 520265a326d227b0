/*
   Copyright 2026 The hopfkernel Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "hopfkernel/cli.hpp"

#include <ostream>

#include "CLI11.hpp"
#include "hopfkernel/commands.hpp"
#include "hopfkernel/errors.hpp"
#include "hopfkernel/group_algebra.hpp"
#include "hopfkernel/instance_io.hpp"

namespace hopfkernel {

namespace {

struct Options {
    AnalysisOptions analysis;
    bool json = false;
    std::string file;
    std::string subset;
    std::string k_subset;
    std::string l_subset;
    std::string output;
    bool dual = false;
};

int emit(const Report& rep, const Options& opt, std::ostream& out) {
    if (opt.json)
        out << rep.to_json().dump(2) << "\n";
    else
        out << rep.to_text();
    return rep.ok() ? kExitOk : kExitAssertion;
}

/// Without -o the instance document is the whole of stdout, so it can be piped;
/// with -o the file is written and a summary report is printed instead.
int build_group_command(const Options& opt, std::ostream& out) {
    const auto g = read_group_file(opt.file);
    const auto ga = make_group_algebra(g, opt.analysis.seed, opt.analysis.tol);
    const auto pair = opt.dual ? dualize(ga.pair) : ga.pair;
    Report rep(pair.name(), "build-group");
    auto& s = rep.section("instance");
    s["group_order"] = g.order();
    s["dim"] = pair.dim();
    s["irr_h"] = pair.size(Side::H);
    s["irr_hstar"] = pair.size(Side::HStar);
    s["degrees"] = ga.table.degrees;
    s["burnside_attempts"] = ga.table.attempts;
    s["orthogonality_residual"] = ga.table.orthogonality_residual();
    rep.check("build-group", "validated", true);
    if (opt.output.empty()) {
        out << instance_to_json(pair.to_raw()).dump() << "\n";
        return kExitOk;
    }
    write_instance_file(opt.output, pair);
    s["output"] = opt.output;
    return emit(rep, opt, out);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"Kernels, normal Hopf subalgebras, cores, central partitions and double cosets "
                 "of semisimple Hopf algebras from character data.",
                 "hopfkernel"};
    app.require_subcommand(1);
    app.option_defaults()->always_capture_default();
    app.add_option("--seed", opt.analysis.seed, "seed for the Burnside random combinations")
        ->capture_default_str();
    app.add_option("--eps", opt.analysis.tol.eps, "equality tolerance")->check(CLI::PositiveNumber);
    app.add_option("--threads", opt.analysis.threads, "worker threads for per-character loops")
        ->check(CLI::Range(1u, 256u));
    app.add_flag("--json", opt.json, "machine-readable report");

    auto file_arg = [&](CLI::App* sub, const char* what) {
        sub->add_option("file", opt.file, what)->required()->check(CLI::ExistingFile);
        sub->fallthrough();
    };
    auto* validate = app.add_subcommand("validate", "check every instance invariant");
    file_arg(validate, "instance file");
    auto* build = app.add_subcommand("build-group", "build kG (or k^G) from a group file");
    file_arg(build, "group file");
    build->add_flag("--dual", opt.dual, "emit k^G instead of kG");
    build->add_option("-o,--output", opt.output, "write the instance here instead of stdout");
    auto* kernels = app.add_subcommand("kernels", "ker and z of every irreducible character");
    file_arg(kernels, "instance file");
    auto* normal = app.add_subcommand("normal", "normality of the subalgebra generated by a subset");
    file_arg(normal, "instance file");
    normal->add_option("--subset", opt.subset, "comma-separated labels or indices of Irr(H*)")
        ->required();
    auto* core = app.add_subcommand("core", "core of the subalgebra generated by a subset");
    file_arg(core, "instance file");
    core->add_option("--subset", opt.subset, "comma-separated labels or indices of Irr(H*)")
        ->required();
    auto* lattice = app.add_subcommand("lattice", "normal lattice and maximal normals, both routes");
    file_arg(lattice, "instance file");
    auto* partition = app.add_subcommand("partition", "central partitions and theorem checks");
    file_arg(partition, "instance file");
    auto* cosets = app.add_subcommand("cosets", "double coset classes for two subalgebras");
    file_arg(cosets, "instance file");
    cosets->add_option("--k", opt.k_subset, "generators of K")->required();
    cosets->add_option("--l", opt.l_subset, "generators of L")->required();
    auto* oracle = app.add_subcommand("oracle-compare", "cross-check kG and k^G against the group oracle");
    file_arg(oracle, "group file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    const auto& tol = opt.analysis.tol;
    try {
        if (build->parsed()) return build_group_command(opt, out);
        if (oracle->parsed()) return emit(oracle_compare(read_group_file(opt.file), opt.analysis), opt, out);
        if (validate->parsed()) return emit(validate_report(read_instance_file(opt.file), tol), opt, out);

        const auto pair = load_instance(opt.file, tol);
        const auto& hs = pair.ring_hstar();
        if (kernels->parsed()) return emit(kernels_report(pair), opt, out);
        if (normal->parsed()) return emit(normal_report(pair, parse_subset(hs, opt.subset)), opt, out);
        if (core->parsed()) return emit(core_report(pair, parse_subset(hs, opt.subset)), opt, out);
        if (lattice->parsed()) return emit(lattice_report(pair, opt.analysis.threads), opt, out);
        if (partition->parsed()) return emit(partition_report(pair), opt, out);
        if (cosets->parsed())
            return emit(cosets_report(pair, parse_subset(hs, opt.k_subset), parse_subset(hs, opt.l_subset)),
                        opt, out);
    } catch (const InvalidInstance& e) {
        err << "error: invalid instance: " << e.what() << "\n";
        for (const auto& v : e.report().violations)
            err << "  " << v.invariant << " at " << v.location << " (residual " << v.residual << ")\n";
        return kExitUsage;
    } catch (const StructuralError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const AssertionFailure& e) {
        err << "FAIL " << e.label() << ": " << e.what() << "\n";
        return kExitAssertion;
    } catch (const Error& e) {
        err << "FAIL " << e.what() << "\n";
        return kExitAssertion;
    }
    return kExitUsage;
}

}  // namespace hopfkernel
