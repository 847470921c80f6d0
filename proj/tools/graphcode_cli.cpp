// Command-line front end: constructions, verification, exact search and
// rate reports with JSON/CSV artifacts. Exit codes: 0 success/pass,
// 1 counterexample or violation found, 2 usage/resource error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "graphcode/graphcode.hpp"
#include "graphcode/io.hpp"

namespace gc = graphcode;

namespace {

void print_code_summary(const gc::LinearGraphCode& code) {
    const std::size_t n_edges = gc::edge_slots(code.n);
    const std::size_t codim = code.codim();
    std::cout << "n=" << code.n << " codim=" << codim << " size=2^" << (n_edges - codim)
              << " rate=2^-" << codim << " (" << std::ldexp(1.0, -static_cast<int>(codim))
              << ")\n";
}

void maybe_write(const std::string& path, const gc::json& j) {
    if (!path.empty()) gc::write_json_file(path, j);
}

int run(int argc, char** argv) {
    CLI::App app{"graph codes: constructions, verification and exact search"};
    app.require_subcommand(1);
    int threads = 1;
    app.add_option("--threads", threads, "worker cap (currently single-threaded)");

    // construct ------------------------------------------------------------
    auto* construct = app.add_subcommand("construct", "build a code or certificate");
    std::string kind, out_path, hprime_path;
    int n = 0, k = 1, r = 1;
    std::vector<int> indep;
    construct->add_option("--kind", kind, "star|matching|small-clique|clique-linear|even-parity|doubled-certificate")
        ->required();
    construct->add_option("--n", n, "vertex count")->required();
    construct->add_option("--k", k, "star/matching parameter");
    construct->add_option("--r", r, "small-clique parameter");
    construct->add_option("--hprime", hprime_path, "graph JSON for H' (doubled-certificate)");
    construct->add_option("--indep", indep, "independent set of H' (doubled-certificate)");
    construct->add_option("--out", out_path, "output JSON path");

    // verify ---------------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "check a code against a family");
    std::string code_path, family_spec, mode_name = "exhaustive", report_path;
    std::uint64_t seed = 0, samples = 100'000;
    verify->add_option("--code", code_path, "code JSON file")->required();
    verify->add_option("--family", family_spec, "star:<t>|matching:<t>|cliques|cliques<=r|iso:<file>|explicit:<file>")
        ->required();
    verify->add_option("--mode", mode_name, "exhaustive|sampled");
    verify->add_option("--seed", seed, "sampling seed");
    verify->add_option("--samples", samples, "sample count");
    verify->add_option("--report", report_path, "report JSON path");

    // exact ----------------------------------------------------------------
    auto* exact = app.add_subcommand("exact", "exact desk-scale computations");
    exact->require_subcommand(1);
    auto* exact_max = exact->add_subcommand("max", "maximum code size D(n)");
    auto* exact_min = exact->add_subcommand("min-codim", "minimum linear co-dimension");
    int exact_n = 0;
    std::string exact_family, exact_out;
    double time_limit = 60.0;
    for (auto* sub : {exact_max, exact_min}) {
        sub->add_option("--n", exact_n, "vertex count")->required();
        sub->add_option("--family", exact_family, "family spec")->required();
        sub->add_option("--out", exact_out, "result JSON path");
    }
    exact_max->add_option("--time-limit", time_limit, "seconds (default 60)");

    // witness --------------------------------------------------------------
    auto* witness = app.add_subcommand("witness", "existence witnesses");
    auto* witness_ec = witness->add_subcommand("even-clique", "even clique with all-even intersections");
    int wn = 0;
    std::vector<std::string> graph_paths;
    std::string witness_out;
    witness_ec->add_option("--n", wn, "even vertex count")->required();
    witness_ec->add_option("--graphs", graph_paths, "graph JSON file(s)")->required();
    witness_ec->add_option("--out", witness_out, "result JSON path");

    // enumerate ------------------------------------------------------------
    auto* enumerate = app.add_subcommand("enumerate", "list all copies of a family in K_n");
    int en = 0;
    std::string efam, eout;
    enumerate->add_option("--family", efam, "family spec")->required();
    enumerate->add_option("--n", en, "vertex count")->required();
    enumerate->add_option("--out", eout, "output JSON path");

    // report ---------------------------------------------------------------
    auto* report = app.add_subcommand("report", "tabulated artifacts");
    auto* report_rates = report->add_subcommand("rates", "construction rate table as CSV");
    int rn_min = 0, rn_max = 0;
    std::string rout;
    report_rates->add_option("--n-min", rn_min, "first n")->required();
    report_rates->add_option("--n-max", rn_max, "last n")->required();
    report_rates->add_option("--out", rout, "CSV path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (*construct) {
        if (kind == "doubled-certificate") {
            if (hprime_path.empty()) throw CLI::ValidationError("--hprime is required");
            const gc::LabeledGraph hp = gc::graph_from_json(gc::load_json_file(hprime_path));
            const gc::CliqueCertificate cert = gc::doubled_clique_certificate(hp, indep, n);
            std::cout << "n=" << n << " m=" << cert.m << " bound d<=1/" << cert.m << "\n";
            maybe_write(out_path, gc::certificate_to_json(cert));
            return 0;
        }
        gc::LinearGraphCode code;
        if (kind == "star")
            code = gc::star_code(n, k);
        else if (kind == "matching")
            code = gc::matching_code(n, k);
        else if (kind == "small-clique")
            code = gc::small_clique_code(n, r);
        else if (kind == "clique-linear")
            code = gc::clique_linear_code(n);
        else if (kind == "even-parity")
            code = gc::even_parity_code(n);
        else
            throw CLI::ValidationError("unknown --kind " + kind);
        print_code_summary(code);
        maybe_write(out_path, gc::code_to_json(code));
        return 0;
    }

    if (*verify) {
        const gc::json j = gc::load_json_file(code_path);
        const gc::ForbiddenFamily fam = gc::parse_family_spec(family_spec);
        gc::VerifyMode mode = gc::VerifyMode::exhaustive();
        if (mode_name == "sampled")
            mode = gc::VerifyMode::sampled(seed, samples);
        else if (mode_name != "exhaustive")
            throw CLI::ValidationError("unknown --mode " + mode_name);
        gc::VerificationReport rep;
        if (j.at("type") == "linear")
            rep = gc::verify_code(gc::linear_code_from_json(j), fam, mode);
        else
            rep = gc::verify_code(gc::explicit_code_from_json(j), fam, mode);
        std::cout << (rep.passed ? "PASS" : "FAIL") << " family=" << rep.family
                  << " copies_checked=" << rep.copies_checked
                  << " violations=" << rep.violation_count << "\n";
        maybe_write(report_path, gc::report_to_json(rep));
        return rep.passed ? 0 : 1;
    }

    if (*exact_max) {
        const gc::ForbiddenFamily fam = gc::parse_family_spec(exact_family);
        const gc::MaxCodeResult res =
            gc::max_code_exact(exact_n, fam, std::chrono::duration<double>(time_limit));
        std::cout << "D=" << res.value << " status="
                  << (res.status == gc::SearchStatus::Proven ? "proven" : "time_limited_lower_bound")
                  << " nodes=" << res.stats.nodes << "\n";
        maybe_write(exact_out, gc::result_to_json(res));
        return 0;
    }

    if (*exact_min) {
        const gc::ForbiddenFamily fam = gc::parse_family_spec(exact_family);
        const gc::MinCodimResult res = gc::min_codim_exact(exact_n, fam);
        std::cout << "min-codim=" << res.codim << " nodes=" << res.stats.nodes << "\n";
        maybe_write(exact_out, gc::result_to_json(res));
        return 0;
    }

    if (*witness_ec) {
        std::vector<gc::LabeledGraph> graphs;
        for (const std::string& path : graph_paths) {
            const gc::json j = gc::load_json_file(path);
            if (j.is_array())
                for (const gc::json& g : j) graphs.push_back(gc::graph_from_json(g));
            else
                graphs.push_back(gc::graph_from_json(j));
        }
        const gc::CliqueWitness w = gc::even_clique_witness(graphs, wn);
        if (w.found) {
            std::cout << "witness {";
            for (std::size_t i = 0; i < w.subset.size(); ++i)
                std::cout << (i ? "," : "") << w.subset[i];
            std::cout << "}\n";
        } else {
            std::cout << "no witness\n";
        }
        maybe_write(witness_out, gc::witness_to_json(w));
        return w.found ? 0 : 1;
    }

    if (*enumerate) {
        const gc::ForbiddenFamily fam = gc::parse_family_spec(efam);
        const std::vector<gc::LabeledGraph> copies = gc::enumerate_copies(fam, en);
        std::cout << "copies=" << copies.size() << "\n";
        if (!eout.empty()) {
            gc::json arr = gc::json::array();
            for (const gc::LabeledGraph& c : copies) arr.push_back(gc::graph_to_json(c));
            gc::write_json_file(eout, arr);
        }
        return 0;
    }

    if (*report_rates) {
        if (rn_min < 2 || rn_max < rn_min) throw CLI::ValidationError("need 2 <= n-min <= n-max");
        std::ostringstream csv;
        csv << "n,construction,codim,rate_exact,rate_decimal,bound\n";
        auto row = [&](int nn, const char* name, const gc::LinearGraphCode& code, const char* bound) {
            const std::size_t c = code.codim();
            csv << nn << "," << name << "," << c << ",2^-" << c << ","
                << std::ldexp(1.0, -static_cast<int>(c)) << "," << bound << "\n";
        };
        for (int nn = rn_min; nn <= rn_max; ++nn) {
            row(nn, "even-parity", gc::even_parity_code(nn), "1/2");
            row(nn, "clique-linear", gc::clique_linear_code(nn), "2^-floor(n/2)");
            row(nn, "small-clique-r1", gc::small_clique_code(nn, 1), "Omega(1/n)");
            if (nn >= 3) row(nn, "star-k1", gc::star_code(nn, 1), "Theta(1/n)");
            if (nn >= 5) row(nn, "star-k2", gc::star_code(nn, 2), "Theta(1/n^2)");
            if (nn >= 4) row(nn, "matching-k1", gc::matching_code(nn, 1), "Theta(1/n)");
            if (nn >= 8) row(nn, "matching-k2", gc::matching_code(nn, 2), "Theta(1/n^2)");
        }
        if (rout.empty()) {
            std::cout << csv.str();
        } else {
            std::ofstream out(rout);
            if (!out) throw std::runtime_error("cannot write " + rout);
            out << csv.str();
        }
        return 0;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
