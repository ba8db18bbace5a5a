#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gmc/conditioning.hpp"
#include "gmc/diagnostics.hpp"
#include "gmc/entropy.hpp"
#include "gmc/entropy_opt.hpp"
#include "gmc/geometry.hpp"
#include "gmc/io.hpp"
#include "gmc/markov.hpp"
#include "gmc/sampler.hpp"

namespace {

using nlohmann::json;

// Output goes to the --out path when given, otherwise stdout.
struct Sink {
    std::string path;

    void write(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream out(path);
        if (!out) throw gmc::ParseError("cannot open output file: " + path);
        out << text;
    }
};

gmc::GaussianModel model_from_matrix(const gmc::SymmetricMatrix& c) {
    gmc::CholeskyFactor f = gmc::cholesky(c);
    return gmc::GaussianModel{c, gmc::inverse(c), f, f.logdet()};
}

std::string matrix_text(const gmc::SymmetricMatrix& m) {
    std::ostringstream os;
    gmc::write_matrix_json(os, m);
    return os.str();
}

json matrix_rows(const gmc::SymmetricMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.size(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.size(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

int run_check(const std::string& path, double tol, const Sink& sink) {
    gmc::MarkovDiagnosis d = gmc::diagnose(gmc::read_matrix_file(path), tol);
    json j{{"tolerance", d.tolerance},
           {"tridiagonal", {{"pass", d.tridiagonal_pass}, {"worst", d.tridiagonal_worst}}},
           {"factorization", {{"pass", d.factorization_pass}, {"worst", d.factorization_worst}}},
           {"regression", {{"pass", d.regression_pass}, {"worst", d.regression_worst}}},
           {"markov", d.all_pass()}};
    sink.write(j.dump(2) + "\n");
    return d.all_pass() ? 0 : 1;
}

int run_condition(const std::string& path, std::vector<int> target,
                  std::vector<int> given, const Sink& sink) {
    gmc::GaussianModel model = gmc::build_model(gmc::read_spec_file(path));
    gmc::ConditionalLaw law = gmc::condition(model, target, given);
    json mean_map = json::array();
    for (const auto& row : law.mean_map) mean_map.push_back(row);
    json j{{"target", law.target_indices},
           {"given", law.given_indices},
           {"mean_map", std::move(mean_map)},
           {"conditional_covariance",
            {{"n", law.conditional_covariance.size()},
             {"rows", matrix_rows(law.conditional_covariance)}}}};
    sink.write(j.dump(2) + "\n");
    return 0;
}

int run_geometry(const std::string& path, double tol, const Sink& sink) {
    gmc::Basis basis = gmc::basis_from_gram(gmc::read_matrix_file(path));
    gmc::MarkovBasisCheck check = gmc::is_markov_basis(basis, tol);
    json gaps = json::object();
    {
        json pb = json::array(), pe = json::array(), pc = json::array();
        for (int k = 1; k < basis.n; ++k) {
            pb.push_back(gmc::projection_parallelism_gap(basis, k));
            pe.push_back(gmc::symmetric_parallelism_gap(basis, k));
        }
        for (int k = 2; k < basis.n; ++k)
            pc.push_back(gmc::split_orthogonality_gap(basis, k));
        gaps = {{"projection_parallelism", std::move(pb)},
                {"symmetric_parallelism", std::move(pe)},
                {"split_orthogonality", std::move(pc)}};
    }
    json j{{"tolerance", tol},
           {"is_markov", check.is_markov},
           {"criteria",
            {{"parallelism", {{"pass", check.criteria[0]}, {"worst", check.worst[0]}}},
             {"product_rule", {{"pass", check.criteria[1]}, {"worst", check.worst[1]}}},
             {"dual_recurrence", {{"pass", check.criteria[2]}, {"worst", check.worst[2]}}},
             {"dual_tridiagonal", {{"pass", check.criteria[3]}, {"worst", check.worst[3]}}}}},
           {"gaps", std::move(gaps)}};
    sink.write(j.dump(2) + "\n");
    return check.is_markov ? 0 : 1;
}

int run_entropy(const std::string& path, const Sink& sink) {
    gmc::EntropyReport r;
    if (gmc::is_spec_file(path)) {
        r = gmc::markov_entropy(gmc::read_spec_file(path));
    } else {
        r = gmc::gaussian_entropy(model_from_matrix(gmc::read_matrix_file(path)));
    }
    json j{{"n", r.n}, {"logdet", r.logdet}, {"dent", r.dent}};
    sink.write(j.dump(2) + "\n");
    return 0;
}

int run_maxent(const std::string& path, int trials, std::uint64_t seed,
               const Sink& sink) {
    gmc::ChainSpec spec = gmc::read_spec_file(path);
    gmc::CompletionProblem problem = gmc::make_completion_problem(spec);
    gmc::OptimizationResult best = gmc::maximize(problem);
    gmc::Theorem2Report report = gmc::verify_theorem2(spec, trials, seed);
    const bool verified =
        report.vacuous || (report.multistart_ok && report.perturbation_ok);
    json j{{"max_logdet", best.max_logdet},
           {"iterations", best.iterations},
           {"converged", best.converged},
           {"gradient_norm_final", best.gradient_norm_final},
           {"argmax", {{"n", best.argmax_matrix.size()},
                       {"rows", matrix_rows(best.argmax_matrix)}}},
           {"theorem2",
            {{"vacuous", report.vacuous},
             {"trials", report.trials},
             {"multistart_ok", report.multistart_ok},
             {"worst_argmax_error", report.worst_argmax_error},
             {"perturbation_ok", report.perturbation_ok},
             {"min_margin", report.min_margin},
             {"verified", verified}}}};
    if (report.vacuous)
        std::cerr << "note: no free entries for n <= 2; completion is unique\n";
    sink.write(j.dump(2) + "\n");
    return verified ? 0 : 1;
}

int run_sample(const std::string& path, int count, std::uint64_t seed,
               const Sink& sink) {
    gmc::SampleBatch batch =
        gmc::sample_chain(gmc::read_spec_file(path), count, seed);
    std::ostringstream os;
    os << std::setprecision(17);
    for (int r = 0; r < batch.count; ++r) {
        for (int c = 0; c < batch.n; ++c) {
            if (c) os << '\t';
            os << batch.at(r, c);
        }
        os << '\n';
    }
    sink.write(os.str());
    return 0;
}

int run_estimate(const std::string& path, const Sink& sink) {
    std::ifstream in(path);
    if (!in) throw gmc::ParseError("cannot open file: " + path);
    std::vector<double> values;
    int n = 0, count = 0;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::vector<double> row;
        double v;
        while (ls >> v) row.push_back(v);
        if (!ls.eof())
            throw gmc::ParseError("bad number on line " +
                                  std::to_string(count + 1));
        if (n == 0) n = static_cast<int>(row.size());
        if (static_cast<int>(row.size()) != n)
            throw gmc::ParseError("ragged row on line " +
                                  std::to_string(count + 1));
        values.insert(values.end(), row.begin(), row.end());
        ++count;
    }
    if (count < 2) throw gmc::ParseError("need at least 2 sample rows");
    gmc::SampleBatch batch{n, count, std::move(values), 0};
    sink.write(matrix_text(gmc::empirical_covariance(batch)));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Markov Gaussian chains: construction, diagnostics, "
                 "geometry, entropy"};
    app.require_subcommand(1);

    std::string input, out_path;
    double tol = 1e-8;
    std::uint64_t seed = 0;
    int count = 100000, trials = 50;
    std::vector<int> target, given;

    auto* build = app.add_subcommand(
        "build", "Covariance of the Markov chain for a spec file");
    build->add_option("spec", input, "spec JSON file")->required();
    build->add_option("--out", out_path, "output path (default stdout)");

    auto* check = app.add_subcommand(
        "check", "Run the three Markov criteria on a covariance matrix");
    check->add_option("matrix", input, "matrix JSON file")->required();
    check->add_option("--tol", tol, "tolerance (default 1e-8)");
    check->add_option("--out", out_path, "output path");

    auto* cond = app.add_subcommand(
        "condition", "Conditional law of target coordinates given others");
    cond->add_option("spec", input, "spec JSON file")->required();
    cond->add_option("--target", target, "1-based target indices")->required();
    cond->add_option("--given", given, "1-based given indices")->required();
    cond->add_option("--out", out_path, "output path");

    auto* geom = app.add_subcommand(
        "geometry", "Markov-basis criteria for a unit-diagonal Gram matrix");
    geom->add_option("gram", input, "Gram matrix JSON file")->required();
    geom->add_option("--tol", tol, "tolerance (default 1e-8)");
    geom->add_option("--out", out_path, "output path");

    auto* ent = app.add_subcommand(
        "entropy", "Differential entropy of a spec or covariance matrix");
    ent->add_option("input", input, "spec or matrix JSON file")->required();
    ent->add_option("--out", out_path, "output path");

    auto* maxent = app.add_subcommand(
        "maxent", "Verify the max-entropy completion for a spec");
    maxent->add_option("spec", input, "spec JSON file")->required();
    maxent->add_option("--trials", trials, "multistart/perturbation trials");
    maxent->add_option("--seed", seed, "random seed");
    maxent->add_option("--out", out_path, "output path");

    auto* sample = app.add_subcommand(
        "sample", "Draw chain samples as tab-separated rows");
    sample->add_option("spec", input, "spec JSON file")->required();
    sample->add_option("--count", count, "number of draws");
    sample->add_option("--seed", seed, "random seed");
    sample->add_option("--out", out_path, "output path");

    auto* estimate = app.add_subcommand(
        "estimate", "Empirical covariance of a sample file");
    estimate->add_option("samples", input, "tab-separated sample rows")
        ->required();
    estimate->add_option("--out", out_path, "output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        Sink sink{out_path};
        if (*build) {
            sink.write(matrix_text(
                gmc::markov_covariance(gmc::read_spec_file(input))));
            return 0;
        }
        if (*check) return run_check(input, tol, sink);
        if (*cond) return run_condition(input, target, given, sink);
        if (*geom) return run_geometry(input, tol, sink);
        if (*ent) return run_entropy(input, sink);
        if (*maxent) return run_maxent(input, trials, seed, sink);
        if (*sample) return run_sample(input, count, seed, sink);
        if (*estimate) return run_estimate(input, sink);
    } catch (const gmc::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const gmc::NotPositiveDefinite& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
