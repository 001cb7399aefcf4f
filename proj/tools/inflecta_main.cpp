// Command-line front end: solve fibers, run monodromy experiments, probe
// pencil bypasses, verify registered claims and replay stored certificates.
//
// Exit codes, stable across subcommands:
//   0  success / claim passed
//   1  usage error, malformed input or unknown claim id
//   2  claim failed or replay mismatch
//   3  degenerate fiber (curve on or too near the discriminant)
//   4  tracking failure (lost, colliding or ambiguous strands)

#include <cstdint>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "inflecta/errors.hpp"
#include "inflecta/experiment.hpp"
#include "inflecta/serialize.hpp"
#include "inflecta/solver.hpp"

namespace {

using namespace inflecta;

int run_guarded(const std::function<int()>& body) {
    try {
        return body();
    } catch (const DegenerateFiber& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const RadiusTooLarge& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const PathFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const PathCollision& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const MatchAmbiguous& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

// JSON payloads go to stdout unless an output path was requested.
void emit(const json& j, const std::string& out_path) {
    if (out_path.empty())
        std::cout << j.dump(2) << "\n";
    else
        write_json_file(j, out_path);
}

int cmd_solve(int degree, bool degree_given, std::uint64_t seed, const std::string& curve_name,
              const std::string& out_path) {
    HomPoly3 curve(0);
    if (curve_name == "random") {
        curve = random_smooth_curve(degree, seed);
    } else if (curve_name == "fermat") {
        curve = fermat(degree);
    } else if (curve_name == "klein") {
        if (degree_given && degree != 4)
            throw std::invalid_argument("the Klein curve has degree 4");
        curve = klein();
    } else if (curve_name == "hesse") {
        if (degree_given && degree != 3)
            throw std::invalid_argument("Hesse pencil members have degree 3");
        curve = hesse_member(cplx{1.0, 0.0}, cplx{1.0, 0.0});
    } else {
        throw std::invalid_argument("unknown curve kind: " + curve_name);
    }

    const InflectionSet fiber = inflection_points(curve, seed);
    emit(fiber_to_json(fiber), out_path);
    if (!out_path.empty())
        std::cout << "wrote " << fiber.points.size() << " inflection points to " << out_path
                  << "\n";
    return 0;
}

int cmd_monodromy(const std::string& config_path, int degree, std::uint64_t seed, int loops,
                  const std::vector<std::string>& families, double radius,
                  const std::string& out_path) {
    ExperimentConfig cfg;
    if (!config_path.empty()) {
        cfg = config_from_json(read_json_file(config_path));
    } else {
        cfg.degree = degree;
        cfg.seed = seed;
        cfg.num_random_loops = loops >= 0 ? loops : (degree == 3 ? 25 : 50);
        for (const std::string& family : families) cfg.bypasses.push_back({family, seed, radius});
    }
    if (!out_path.empty()) cfg.output_path = out_path;

    const MonodromyCertificate cert = run_monodromy(cfg);
    if (cert.loops.empty()) {
        std::cerr << "error: every requested loop failed\n";
        for (const LoopFailure& f : cert.failures)
            std::cerr << "  " << f.kind << " seed " << f.seed << ": " << f.error << "\n";
        return 4;
    }
    if (cfg.output_path.empty()) {
        std::cout << certificate_to_json(cert).dump(2) << "\n";
    } else {
        std::cout << "order " << cert.group.at("order").get<std::string>() << " from "
                  << cert.loops.size() << " loops in " << static_cast<long>(cert.wall_ms)
                  << " ms, certificate at " << cfg.output_path << "\n";
    }
    return 0;
}

int cmd_bypass(int degree, const std::string& family, std::uint64_t seed, double radius,
               const std::string& out_path) {
    const json report = run_bypass(family, degree, seed, radius);
    emit(report, out_path);
    if (!out_path.empty())
        std::cout << family << " bypass acts with cycle type "
                  << report.at("cycle_type").get<std::string>() << ", report at " << out_path
                  << "\n";
    return 0;
}

int cmd_verify(const std::vector<std::string>& ids, const std::string& csv_path,
               const std::string& out_path) {
    if (ids.empty()) {
        for (const Claim& c : claim_registry())
            std::printf("%-26s %s\n", c.id.c_str(), c.description.c_str());
        return 0;
    }
    json reports = json::array();
    bool all_pass = true;
    for (const std::string& id : ids) {
        ClaimOutcome outcome = run_claim(id, csv_path);
        all_pass = all_pass && outcome.pass;
        std::cerr << (outcome.pass ? "PASS" : "FAIL") << " " << id << "\n";
        reports.push_back(std::move(outcome.report));
    }
    emit(ids.size() == 1 ? reports.front() : reports, out_path);
    return all_pass ? 0 : 2;
}

int cmd_replay(const std::string& cert_path, int loops, const std::string& out_path) {
    const json report = replay_certificate(read_json_file(cert_path), loops);
    emit(report, out_path);
    return report.at("pass").get<bool>() ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical monodromy of inflection points of plane algebraic curves"};
    app.name("inflecta");
    app.require_subcommand(1);

    auto* solve = app.add_subcommand("solve", "compute the inflection fiber of one curve");
    int s_degree = 3;
    std::uint64_t s_seed = 1;
    std::string s_curve = "random";
    std::string s_out;
    auto* s_degree_opt = solve->add_option("--degree", s_degree, "curve degree (at least 3)")
                             ->check(CLI::Range(3, 64));
    solve->add_option("--seed", s_seed, "seed for the random curve and the working chart");
    solve->add_option("--curve", s_curve, "curve kind")
        ->check(CLI::IsMember({"random", "fermat", "klein", "hesse"}));
    solve->add_option("--out", s_out, "write the fiber JSON here instead of stdout");

    auto* mono = app.add_subcommand("monodromy", "run loops and assemble a monodromy certificate");
    std::string m_config;
    int m_degree = 3;
    std::uint64_t m_seed = 1;
    int m_loops = -1;
    std::vector<std::string> m_families;
    double m_radius = 0.0;
    std::string m_out;
    auto* m_config_opt =
        mono->add_option("--config", m_config, "experiment configuration JSON file")
            ->check(CLI::ExistingFile);
    auto* m_degree_opt = mono->add_option("--degree", m_degree, "curve degree (at least 3)")
                             ->check(CLI::Range(3, 64));
    auto* m_seed_opt = mono->add_option("--seed", m_seed, "base curve seed");
    auto* m_loops_opt =
        mono->add_option("--loops", m_loops, "random loop budget (default 25 at degree 3, else 50)")
            ->check(CLI::NonNegativeNumber);
    auto* m_family_opt =
        mono->add_option("--family", m_families, "pencil bypass to include (repeatable)")
            ->check(CLI::IsMember({"nodal", "two-tuple", "fermat"}));
    auto* m_radius_opt =
        mono->add_option("--radius", m_radius,
                         "pencil radius for the requested bypasses (0 = family default)");
    mono->add_option("--out", m_out, "write the certificate here instead of stdout");
    m_config_opt->excludes(m_degree_opt, m_seed_opt, m_loops_opt, m_family_opt, m_radius_opt);

    auto* byp = app.add_subcommand("bypass", "measure the local action of one pencil bypass");
    int b_degree = 4;
    std::string b_family;
    std::uint64_t b_seed = 1;
    double b_radius = 0.0;
    std::string b_out;
    byp->add_option("--degree", b_degree, "curve degree")->check(CLI::Range(3, 64));
    byp->add_option("--family", b_family, "pencil family")
        ->required()
        ->check(CLI::IsMember({"nodal", "two-tuple", "fermat"}));
    byp->add_option("--seed", b_seed, "pencil seed");
    byp->add_option("--radius", b_radius, "pencil radius (0 = family default)");
    byp->add_option("--out", b_out, "write the report here instead of stdout");

    auto* verify = app.add_subcommand("verify", "run registered claims (no ids: list them)");
    std::vector<std::string> v_ids;
    std::string v_csv;
    std::string v_out;
    verify->add_option("claims", v_ids, "claim ids to verify");
    verify->add_option("--csv", v_csv, "CSV output path for claims with plot support");
    verify->add_option("--out", v_out, "write the reports here instead of stdout");

    auto* replay = app.add_subcommand("replay", "re-verify a stored monodromy certificate");
    std::string r_cert;
    int r_loops = 1;
    std::string r_out;
    replay->add_option("certificate", r_cert, "certificate JSON file")
        ->required()
        ->check(CLI::ExistingFile);
    replay->add_option("--loops", r_loops, "number of loops to re-track from provenance")
        ->check(CLI::NonNegativeNumber);
    replay->add_option("--out", r_out, "write the report here instead of stdout");

    if (argc <= 1) {
        std::cout << app.help();
        return 1;
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    return run_guarded([&]() -> int {
        if (solve->parsed())
            return cmd_solve(s_degree, s_degree_opt->count() > 0, s_seed, s_curve, s_out);
        if (mono->parsed())
            return cmd_monodromy(m_config, m_degree, m_seed, m_loops, m_families, m_radius, m_out);
        if (byp->parsed()) return cmd_bypass(b_degree, b_family, b_seed, b_radius, b_out);
        if (verify->parsed()) return cmd_verify(v_ids, v_csv, v_out);
        if (replay->parsed()) return cmd_replay(r_cert, r_loops, r_out);
        return 1;
    });
}
