// Command-line front end: instance I/O, random generation, analysis,
// verification and exhaustive parameter sweeps over two-band matrices.

#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "twoband/json_io.hpp"

namespace {

using namespace twoband;
using nlohmann::json;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) fail(ErrorCode::InvalidInput, "cannot open input file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool ray_phases_ok(const ComplexMultiset& s, int p, double tau0, double phase_tol) {
    const double rho = spectral_scale(s);
    const double step = 2.0 * std::numbers::pi / p;
    for (const Complex& z : s.values) {
        if (std::abs(z) < tau0 * rho) continue;
        if (std::abs(std::remainder(std::arg(z), step)) > phase_tol) return false;
    }
    return true;
}

struct VerifyOutcome {
    json report;
    bool pass = false;
};

VerifyOutcome run_verify(const BandMatrix& bm, double tol_factor, double zero_tol, double phase_tol,
                         const SolverOptions& opts) {
    const PeriodInfo info = period_info(bm);
    const SpectrumReport structured = structured_eigenvalues(bm, opts);
    const ComplexMultiset oracle = dense_eigenvalues(to_dense(bm), opts);
    const double rho = spectral_scale(oracle);
    const double tol = tol_factor * rho;

    ComplexMultiset structured_set{structured.eigenvalues, tol};
    const MatchReport match = spectra_match(structured_set, oracle, tol);
    const bool rotation = rotation_invariance(oracle, info.p, tol);

    json checks;
    checks["spectra_match"] = match.matched;
    checks["rotation_invariance"] = rotation;
    bool pass = match.matched && rotation;

    if (bm.mode() != Mode::Complex) {
        const bool phases = ray_phases_ok(oracle, info.p, zero_tol, phase_tol);
        checks["ray_phases"] = phases;
        pass = pass && phases;
    }
    if (bm.mode() == Mode::PositiveReal) {
        const CountPrediction cp = predicted_counts(bm.n(), bm.b(), bm.k());
        const std::size_t oracle_zeros = count_zeros(oracle, zero_tol);
        const bool counts = cp.zero_multiplicity == structured.zero_multiplicity &&
                            oracle_zeros == static_cast<std::size_t>(cp.zero_multiplicity);
        checks["count_agreement"] = counts;
        checks["predicted_zero_multiplicity"] = cp.zero_multiplicity;
        checks["oracle_zero_count"] = oracle_zeros;
        pass = pass && counts;
    }

    VerifyOutcome out;
    out.report["n"] = bm.n();
    out.report["b"] = bm.b();
    out.report["k"] = bm.k();
    out.report["mode"] = mode_name(bm.mode());
    out.report["p"] = info.p;
    out.report["g"] = info.g;
    out.report["match"] = {{"matched", match.matched}, {"max_residual", match.max_residual}, {"tol", tol}};
    out.report["checks"] = std::move(checks);
    out.pass = pass;
    out.report["pass"] = pass;
    return out;
}

struct SweepRow {
    int n = 0, b = 0, k = 0;
    std::uint64_t seed = 0;
    bool pass = false;
    bool spectra_match_ok = false;
    bool rotation_ok = false;
    bool phases_ok = true;
    bool counts_ok = true;
    double max_residual = 0.0;
    std::string error;
};

SweepRow sweep_cell(const SweepSpec& spec, int n, int b, int k, const SolverOptions& opts) {
    SweepRow row;
    row.n = n;
    row.b = b;
    row.k = k;
    row.seed = derive_seed(spec.master_seed, n, b, k);
    try {
        GeneratorSpec gen{n, b, k, spec.mode, row.seed, spec.low, spec.high};
        const BandMatrix bm = generate_band_matrix(gen);
        const VerifyOutcome outcome = run_verify(bm, spec.tol, spec.zero_tol, spec.phase_tol, opts);
        row.pass = outcome.pass;
        row.spectra_match_ok = outcome.report["checks"]["spectra_match"].get<bool>();
        row.rotation_ok = outcome.report["checks"]["rotation_invariance"].get<bool>();
        if (outcome.report["checks"].contains("ray_phases"))
            row.phases_ok = outcome.report["checks"]["ray_phases"].get<bool>();
        if (outcome.report["checks"].contains("count_agreement"))
            row.counts_ok = outcome.report["checks"]["count_agreement"].get<bool>();
        row.max_residual = outcome.report["match"]["max_residual"].get<double>();
    } catch (const std::exception& e) {
        row.pass = false;
        row.error = e.what();
    }
    return row;
}

int cmd_analyze(const std::string& input, const SolverOptions& opts) {
    const BandMatrix bm = realize(parse_instance(read_input(input)));
    const SpectrumReport report = structured_eigenvalues(bm, opts);
    std::cout << spectrum_report_to_json(report, 2) << "\n";
    return 0;
}

int cmd_verify(const std::string& input, double tol, double zero_tol, double phase_tol, const SolverOptions& opts) {
    const BandMatrix bm = realize(parse_instance(read_input(input)));
    const VerifyOutcome outcome = run_verify(bm, tol, zero_tol, phase_tol, opts);
    std::cout << outcome.report.dump(2) << "\n";
    return outcome.pass ? 0 : 1;
}

int cmd_decompose(const std::string& input, bool cyclic) {
    const BandMatrix bm = realize(parse_instance(read_input(input)));
    const DirectSumDecomposition dec = split(bm);
    json out = json::parse(direct_sum_to_json(dec));
    if (cyclic) {
        json per_block = json::array();
        for (const BandMatrix& blk : dec.blocks) {
            if (blk.n() == 0 || blk.lower_empty() || blk.upper_empty()) {
                per_block.push_back(nullptr); // degenerate block, all-zero spectrum
                continue;
            }
            per_block.push_back(json::parse(cyclic_to_json(extract_cyclic(blk))));
        }
        out["cyclic"] = std::move(per_block);
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_check_tn(const std::string& input, double tol, int guard, const SolverOptions& opts) {
    const BandMatrix bm = realize(parse_instance(read_input(input)));
    const DirectSumDecomposition dec = split(bm);
    json blocks = json::array();
    bool all_ok = true;
    int index = 0;
    for (const BandMatrix& blk : dec.blocks) {
        ++index;
        json entry;
        entry["block"] = index;
        entry["size"] = blk.n();
        if (blk.n() == 0 || blk.lower_empty() || blk.upper_empty() || period_info(blk).m == 0) {
            entry["oscillatory"] = nullptr; // no base product to test
            blocks.push_back(std::move(entry));
            continue;
        }
        const CyclicDecomposition cyc = extract_cyclic(blk);
        const int j = base_index(cyc);
        const ComplexMatrix d = block_product(cyc, j);
        const OscillatoryReport report = oscillatory_check(real_part_checked(d), tol, guard);
        entry["base_index"] = j;
        entry["m"] = d.rows();
        entry["oscillatory"] = json::parse(oscillatory_to_json(report));
        all_ok = all_ok && report.oscillatory();
        blocks.push_back(std::move(entry));
    }
    json out;
    out["blocks"] = std::move(blocks);
    out["pass"] = all_ok;
    (void)opts;
    std::cout << out.dump(2) << "\n";
    return all_ok ? 0 : 1;
}

int cmd_generate(const std::string& input, std::optional<std::uint64_t> seed_override) {
    InstanceSpec spec = parse_instance(read_input(input));
    if (!spec.generator) fail(ErrorCode::InvalidInput, "generate needs a generator-form instance (with 'seed')");
    if (seed_override) spec.generator->seed = *seed_override;
    std::cout << instance_to_json(generate_band_matrix(*spec.generator), 2) << "\n";
    return 0;
}

int cmd_sweep(const std::string& input, bool csv, int threads, std::optional<std::uint64_t> seed_override,
              const SolverOptions& opts) {
    SweepSpec spec = parse_sweep(read_input(input));
    if (seed_override) spec.master_seed = *seed_override;

    std::vector<std::tuple<int, int, int>> cells;
    for (int n = spec.n_lo; n <= spec.n_hi; ++n)
        for (int b = spec.b_lo; b <= spec.b_hi; ++b)
            for (int k = spec.k_lo; k <= spec.k_hi; ++k) cells.emplace_back(n, b, k);

    std::vector<SweepRow> rows(cells.size());
    std::atomic<std::size_t> cursor{0};
    const int pool = std::max(1, std::min<int>(threads, static_cast<int>(cells.size()) > 0 ? threads : 1));
    std::vector<std::thread> workers;
    workers.reserve(static_cast<std::size_t>(pool));
    for (int t = 0; t < pool; ++t)
        workers.emplace_back([&]() {
            for (;;) {
                const std::size_t i = cursor.fetch_add(1);
                if (i >= cells.size()) return;
                const auto [n, b, k] = cells[i];
                rows[i] = sweep_cell(spec, n, b, k, opts);
            }
        });
    for (auto& w : workers) w.join();

    bool all_pass = true;
    for (const SweepRow& r : rows) all_pass = all_pass && r.pass;

    if (csv) {
        std::cout << "n,b,k,seed,pass,spectra_match,rotation_invariance,ray_phases,count_agreement,max_residual\n";
        for (const SweepRow& r : rows)
            std::printf("%d,%d,%d,%llu,%d,%d,%d,%d,%d,%.3e\n", r.n, r.b, r.k,
                        static_cast<unsigned long long>(r.seed), r.pass ? 1 : 0, r.spectra_match_ok ? 1 : 0,
                        r.rotation_ok ? 1 : 0, r.phases_ok ? 1 : 0, r.counts_ok ? 1 : 0, r.max_residual);
    } else {
        json out;
        json cells_json = json::array();
        for (const SweepRow& r : rows) {
            json c;
            c["n"] = r.n;
            c["b"] = r.b;
            c["k"] = r.k;
            c["seed"] = r.seed;
            c["pass"] = r.pass;
            c["spectra_match"] = r.spectra_match_ok;
            c["rotation_invariance"] = r.rotation_ok;
            c["ray_phases"] = r.phases_ok;
            c["count_agreement"] = r.counts_ok;
            c["max_residual"] = r.max_residual;
            if (!r.error.empty()) c["error"] = r.error;
            cells_json.push_back(std::move(c));
        }
        out["cells"] = std::move(cells_json);
        out["total"] = rows.size();
        out["pass"] = all_pass;
        std::cout << out.dump(2) << "\n";
    }
    return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectral structure of two-band matrices: analysis, decomposition and verification"};
    app.require_subcommand(1);

    std::string input = "-";
    double tol = 1e-6;
    double zero_tol = 1e-5;
    double phase_tol = 1e-6;
    int max_n = 128;
    int guard = 8;
    int threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
    bool csv = false;
    bool json_flag = false;
    bool cyclic = false;
    std::optional<std::uint64_t> seed_override;

    app.add_option("--input", input, "Input JSON file, or - for stdin")->capture_default_str();
    app.add_option("--tol", tol, "Spectrum match tolerance factor (times max(1, rho))")->capture_default_str();
    app.add_option("--zero-tol", zero_tol, "Zero-classification threshold tau0 (relative)")->capture_default_str();
    app.add_option("--phase-tol", phase_tol, "Ray-phase tolerance in radians")->capture_default_str();
    app.add_option("--max-n", max_n, "Dense eigensolver dimension cap")->capture_default_str();
    app.add_option("--seed", seed_override, "Override the instance/sweep seed");
    app.add_option("--threads", threads, "Sweep worker threads")->capture_default_str();

    auto* analyze = app.add_subcommand("analyze", "Structured spectrum report of one instance");
    auto* verify = app.add_subcommand("verify", "Structured-vs-oracle verification of one instance");
    auto* decompose = app.add_subcommand("decompose", "Direct-sum (and optionally cyclic) decomposition");
    decompose->add_flag("--cyclic", cyclic, "Also emit the superdiagonal block form per coprime block");
    auto* check_tn = app.add_subcommand("check-tn", "Oscillatory-condition report of the base block products");
    check_tn->add_option("--guard", guard, "Combinatorial dimension guard for minors")->capture_default_str();
    auto* sweep = app.add_subcommand("sweep", "Exhaustive verification sweep over (n, b, k) ranges");
    sweep->add_flag("--csv", csv, "CSV output");
    sweep->add_flag("--json", json_flag, "JSON output (default)");
    auto* generate = app.add_subcommand("generate", "Materialize a generator-form instance");

    CLI11_PARSE(app, argc, argv);

    SolverOptions opts;
    opts.max_dim = max_n;

    try {
        if (analyze->parsed()) return cmd_analyze(input, opts);
        if (verify->parsed()) return cmd_verify(input, tol, zero_tol, phase_tol, opts);
        if (decompose->parsed()) return cmd_decompose(input, cyclic);
        if (check_tn->parsed()) return cmd_check_tn(input, 1e-10, guard, opts);
        if (sweep->parsed()) return cmd_sweep(input, csv && !json_flag, threads, seed_override, opts);
        if (generate->parsed()) return cmd_generate(input, seed_override);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
