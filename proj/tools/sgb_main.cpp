// Command-line front end: gb / verify / bench.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "sgb/bench.hpp"
#include "sgb/buchberger.hpp"
#include "sgb/sigcore.hpp"
#include "sgb/system_io.hpp"
#include "sgb/verify.hpp"

namespace {

using nlohmann::json;

sgb::MonomialOrder parse_order(const std::string& name) {
    if (name == "lex") return {sgb::MonomialOrder::Kind::lex};
    if (name == "deglex") return {sgb::MonomialOrder::Kind::deglex};
    if (name == "degrevlex") return {sgb::MonomialOrder::Kind::degrevlex};
    throw CLI::ValidationError("--order", "expected lex|deglex|degrevlex");
}

sgb::TermOrder parse_module_order(const std::string& name, sgb::MonomialOrder mo) {
    if (name == "pot") return sgb::pot(mo);
    if (name == "top") return sgb::top(mo);
    throw CLI::ValidationError("--module-order", "expected pot|top");
}

sgb::RewriteOrder parse_rewrite(const std::string& name) {
    if (name == "rat") return sgb::RewriteOrder::rat;
    if (name == "add") return sgb::RewriteOrder::add;
    throw CLI::ValidationError("--rewrite", "expected rat|add");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct CommonFlags {
    std::string order = "degrevlex";
    std::string module_order = "pot";
    std::string rewrite = "rat";
    std::string algorithm = "sig";

    void attach(CLI::App* cmd, bool with_algorithm) {
        cmd->add_option("--order", order, "Monomial order (lex|deglex|degrevlex)")
            ->default_val("degrevlex");
        cmd->add_option("--module-order", module_order, "Module term order (pot|top)")
            ->default_val("pot");
        cmd->add_option("--rewrite", rewrite, "Rewrite order (rat|add)")->default_val("rat");
        if (with_algorithm) {
            cmd->add_option("--algorithm", algorithm, "Algorithm (sig|buchberger)")
                ->default_val("sig");
        }
    }
};

json stats_json(const std::string& order, const std::string& module_order,
                const std::string& rewrite, const std::string& algorithm, std::size_t basis_size,
                unsigned long zero_reductions, unsigned long time_ms) {
    return json{{"order", order},           {"module_order", module_order},
                {"rewrite", rewrite},       {"algorithm", algorithm},
                {"basis_size", basis_size}, {"zero_reductions", zero_reductions},
                {"time_ms", time_ms}};
}

int cmd_gb(const std::string& file, const CommonFlags& flags, bool reduced, bool stats) {
    sgb::MonomialOrder mo = parse_order(flags.order);
    sgb::TermOrder to = parse_module_order(flags.module_order, mo);
    sgb::RewriteOrder rw = parse_rewrite(flags.rewrite);
    if (flags.algorithm != "sig" && flags.algorithm != "buchberger") {
        throw CLI::ValidationError("--algorithm", "expected sig|buchberger");
    }

    sgb::SystemFile sys = parse_system(read_file(file), mo);

    auto start = std::chrono::steady_clock::now();
    std::vector<sgb::Polynomial> basis;
    unsigned long zeros = 0;
    if (flags.algorithm == "sig") {
        auto [b, z] = sgb::gb_sig(sys.polynomials, to, rw);
        basis = std::move(b);
        zeros = z;
    } else {
        sgb::BuchbergerResult r = sgb::buchberger(mo, sys.polynomials);
        basis = std::move(r.basis);
        zeros = r.zero_reductions;
    }
    if (reduced) basis = sgb::autoreduce(mo, basis);
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();

    for (const auto& p : basis) {
        std::cout << sgb::format_poly(p, sys.variables) << "\n";
    }
    if (stats) {
        std::cout << stats_json(flags.order, flags.module_order, flags.rewrite, flags.algorithm,
                                basis.size(), zeros, static_cast<unsigned long>(elapsed))
                         .dump()
                  << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& file, const CommonFlags& flags, bool json_out) {
    sgb::MonomialOrder mo = parse_order(flags.order);
    sgb::TermOrder to = parse_module_order(flags.module_order, mo);
    sgb::RewriteOrder rw = parse_rewrite(flags.rewrite);

    sgb::SystemFile sys = parse_system(read_file(file), mo);
    sgb::CrossCheckReport report = sgb::cross_check(sys.polynomials, to, rw);

    if (json_out) {
        json j{{"pass", report.passed()},
               {"reduced_bases_equal", report.reduced_bases_equal},
               {"sig_is_groebner", report.sig_is_gb},
               {"buchberger_is_groebner", report.buch_is_gb},
               {"inputs_reduce_in_sig", report.inputs_reduce_in_sig},
               {"inputs_reduce_in_buchberger", report.inputs_reduce_in_buch},
               {"sig_basis_size", report.sig_basis_size},
               {"buchberger_basis_size", report.buch_basis_size},
               {"sig_zero_reductions", report.sig_zero_reductions},
               {"buchberger_zero_reductions", report.buch_zero_reductions}};
        std::cout << j.dump() << "\n";
    } else {
        auto yn = [](bool b) { return b ? "yes" : "no"; };
        std::cout << "signature basis:   " << report.sig_basis_size << " elements, "
                  << report.sig_zero_reductions << " zero-reductions\n"
                  << "buchberger basis:  " << report.buch_basis_size << " elements, "
                  << report.buch_zero_reductions << " zero-reductions\n"
                  << "reduced bases equal:        " << yn(report.reduced_bases_equal) << "\n"
                  << "signature output is GB:     " << yn(report.sig_is_gb) << "\n"
                  << "buchberger output is GB:    " << yn(report.buch_is_gb) << "\n"
                  << "inputs reduce (signature):  " << yn(report.inputs_reduce_in_sig) << "\n"
                  << "inputs reduce (buchberger): " << yn(report.inputs_reduce_in_buch) << "\n"
                  << (report.passed() ? "PASS" : "FAIL") << "\n";
    }
    return report.passed() ? 0 : 1;
}

int cmd_bench(const std::string& family, unsigned n, const CommonFlags& flags, bool json_out) {
    sgb::BenchSpec spec;
    if (family == "cyclic") spec.family = sgb::BenchFamily::cyclic;
    else if (family == "katsura") spec.family = sgb::BenchFamily::katsura;
    else if (family == "eco") spec.family = sgb::BenchFamily::eco;
    else if (family == "noon") spec.family = sgb::BenchFamily::noon;
    else throw CLI::ValidationError("--family", "expected cyclic|katsura|eco|noon");
    spec.n = n;
    sgb::MonomialOrder mo = parse_order(flags.order);
    spec.to = parse_module_order(flags.module_order, mo);
    spec.rw = parse_rewrite(flags.rewrite);
    if (flags.algorithm == "sig") spec.algorithm = sgb::BenchSpec::Algorithm::sig;
    else if (flags.algorithm == "buchberger") spec.algorithm = sgb::BenchSpec::Algorithm::buchberger;
    else throw CLI::ValidationError("--algorithm", "expected sig|buchberger");

    sgb::BenchResult result = sgb::run_bench(spec);

    if (json_out) {
        json j = stats_json(flags.order, flags.module_order, flags.rewrite, flags.algorithm,
                            result.basis_size, result.zero_reductions, result.time_ms);
        j["family"] = family;
        j["n"] = n;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << family << "-" << n << " (" << flags.order << ", " << flags.module_order
                  << ", " << flags.rewrite << ", " << flags.algorithm << "): basis "
                  << result.basis_size << ", zero-reductions " << result.zero_reductions << ", "
                  << result.time_ms << " ms\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Groebner bases via signature-based rewrite-basis computation"};
    app.require_subcommand(1);

    std::string gb_file, verify_file;
    std::string bench_family;
    unsigned bench_n = 0;
    bool reduced = false, gb_stats = false, verify_json = false, bench_json = false;
    CommonFlags gb_flags, verify_flags, bench_flags;

    CLI::App* gb = app.add_subcommand("gb", "Compute a Groebner basis of a system file");
    gb->add_option("file", gb_file, "Input system file")->required();
    gb_flags.attach(gb, true);
    gb->add_flag("--reduced", reduced, "Output the unique reduced basis");
    gb->add_flag("--stats", gb_stats, "Append a JSON stats object");

    CLI::App* verify = app.add_subcommand("verify", "Cross-check both algorithms on a system file");
    verify->add_option("file", verify_file, "Input system file")->required();
    verify_flags.attach(verify, false);
    verify->add_flag("--json", verify_json, "Machine-readable report");

    CLI::App* bench = app.add_subcommand("bench", "Run a standard benchmark system");
    bench->add_option("--family", bench_family, "cyclic|katsura|eco|noon")->required();
    bench->add_option("--n", bench_n, "Family size parameter")->required();
    bench_flags.attach(bench, true);
    bench->add_flag("--json", bench_json, "One JSON object for the run");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gb->parsed()) return cmd_gb(gb_file, gb_flags, reduced, gb_stats);
        if (verify->parsed()) return cmd_verify(verify_file, verify_flags, verify_json);
        if (bench->parsed()) return cmd_bench(bench_family, bench_n, bench_flags, bench_json);
    } catch (const sgb::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
