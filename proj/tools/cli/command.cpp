#include "command.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "holoca/holoca.hpp"
#include "manifest.hpp"

namespace holoca::cli {

namespace {

constexpr std::size_t kMaxExhaustiveLength = 20;

std::uint64_t parse_rule_code(const std::string& text) {
    std::uint64_t code = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), code);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw UsageError("rule must be an integer in [0, 256), got '" + text + "'", {});
    if (code > 255) throw UsageError("rule " + text + " out of range [0, 256)", {});
    return code;
}

std::vector<std::size_t> parse_cells(const std::string& text) {
    std::vector<std::size_t> cells;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t v = 0;
        const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (ec != std::errc() || ptr != item.data() + item.size() || item.empty())
            throw UsageError("bad cell index '" + item + "'", {});
        cells.push_back(v);
    }
    return cells;
}

std::string offset_key(int o) { return o > 0 ? "+" + std::to_string(o) : std::to_string(o); }

class Runner {
public:
    explicit Runner(const Command& c) : c_(c), manifest_(c.name, c.argv, c.seed) {
        std::error_code ec;
        std::filesystem::create_directories(c_.out_dir, ec);
        if (ec) throw IoError("cannot create " + c_.out_dir.string() + ": " + ec.message());
        manifest_.config() = {{"rule", c_.all_rules ? nlohmann::ordered_json("all") : nlohmann::ordered_json(c_.rule)},
                              {"length", c_.length},
                              {"steps", c_.steps},
                              {"seed", c_.seed},
                              {"out_dir", c_.out_dir.string()}};
    }

    int run() {
        if (c_.name == "evolve") evolve_cmd();
        else if (c_.name == "verify-identity") verify_identity();
        else if (c_.name == "truncate") truncate_cmd();
        else if (c_.name == "classify") classify();
        else if (c_.name == "split") split();
        else if (c_.name == "spectral-step") spectral_step();
        else if (c_.name == "langlet") langlet();
        else if (c_.name == "reservoir-run") reservoir_run();
        else if (c_.name == "armas-run") armas_run();
        return finish();
    }

    int fail(const std::string& what) {
        manifest_.add_check("completed", false, what);
        return finish();
    }

private:
    std::filesystem::path resolve(const std::optional<std::filesystem::path>& p, const char* fallback) const {
        const std::filesystem::path path = p ? *p : std::filesystem::path(fallback);
        return path.is_absolute() ? path : c_.out_dir / path;
    }

    std::ofstream open(const std::filesystem::path& path) {
        std::ofstream out(path);
        if (!out) throw IoError("cannot write " + path.string());
        return out;
    }

    void close(std::ofstream& out, const std::filesystem::path& path) {
        out.close();
        if (!out) throw IoError("write failed for " + path.string());
        manifest_.add_output(path);
    }

    BitState initial_state() const {
        if (c_.init == "random") {
            std::mt19937_64 rng(c_.seed);
            std::vector<std::uint8_t> bits(c_.length);
            for (auto& b : bits) b = static_cast<std::uint8_t>(rng() >> 63);
            return BitState(std::move(bits));
        }
        return BitState::single_seed(c_.length, c_.length / 2);
    }

    void write_pbm(const std::filesystem::path& path, std::size_t width, std::size_t height,
                   const std::function<int(std::size_t, std::size_t)>& pixel) {
        auto out = open(path);
        out << "P1\n" << width << ' ' << height << '\n';
        for (std::size_t r = 0; r < height; ++r) {
            for (std::size_t c = 0; c < width; ++c) out << (c ? " " : "") << pixel(r, c);
            out << '\n';
        }
        close(out, path);
    }

    void evolve_cmd() {
        const auto rule = parse_rule(c_.rule);
        manifest_.config()["init"] = c_.init;
        const auto traj = evolve(initial_state(), rule, c_.steps);
        std::size_t mismatches = 0;
        const ProjectorEvolution projectors(rule);
        for (std::size_t t = 0; t + 1 < traj.size(); ++t) mismatches += projectors.step(traj[t]) != traj[t + 1];
        manifest_.add_check("projector evolution reproduces trajectory", mismatches == 0,
                            std::to_string(mismatches) + " mismatched steps");
        const auto path = resolve(c_.out, "evolve.pbm");
        write_pbm(path, c_.length, traj.size(), [&](std::size_t r, std::size_t col) { return traj[r][col]; });
        std::cout << "wrote " << path.string() << " (" << traj.size() << " rows)\n";
    }

    void verify_identity() {
        if (c_.exhaustive && c_.length > kMaxExhaustiveLength)
            throw UsageError("--exhaustive supports --length up to " + std::to_string(kMaxExhaustiveLength), {});
        manifest_.config()["exhaustive"] = c_.exhaustive;
        if (!c_.exhaustive) manifest_.config()["samples"] = c_.samples;

        std::vector<BitState> states;
        if (c_.exhaustive) {
            for (std::uint64_t v = 0; v < (std::uint64_t{1} << c_.length); ++v)
                states.push_back(BitState::from_index(v, c_.length));
        } else {
            std::mt19937_64 rng(c_.seed);
            for (std::size_t i = 0; i < c_.samples; ++i) {
                std::vector<std::uint8_t> bits(c_.length);
                for (auto& b : bits) b = static_cast<std::uint8_t>(rng() >> 63);
                states.emplace_back(std::move(bits));
            }
        }

        std::size_t identity_violations = 0;
        for (const auto& x : states)
            for (auto v : resolution_of_identity(x, NeighborhoodSpec::elementary())) identity_violations += v != 1;
        manifest_.add_check("resolution of identity", identity_violations == 0,
                            std::to_string(identity_violations) + " violating cells");

        std::vector<std::uint64_t> rules;
        if (c_.all_rules)
            for (std::uint64_t r = 0; r < 256; ++r) rules.push_back(r);
        else
            rules.push_back(c_.rule);

        auto table = nlohmann::ordered_json::array();
        std::size_t failed_rules = 0;
        for (auto code : rules) {
            const auto rule = parse_rule(code);
            const ProjectorEvolution projectors(rule);
            const PolynomialStepper polynomial(rule);
            std::size_t proj_bad = 0, poly_bad = 0;
            for (const auto& x : states) {
                const auto ref = step_reference(x, rule);
                proj_bad += projectors.step(x) != ref;
                poly_bad += polynomial.step(x) != ref;
            }
            failed_rules += proj_bad + poly_bad > 0;
            table.push_back({{"rule", code}, {"projector_mismatches", proj_bad}, {"polynomial_mismatches", poly_bad}});
        }
        manifest_.results()["states_per_rule"] = states.size();
        manifest_.results()["rules"] = table;
        manifest_.add_check("projector and polynomial steps equal reference", failed_rules == 0,
                            std::to_string(failed_rules) + " of " + std::to_string(rules.size()) + " rules failed");
        std::cout << rules.size() << " rules x " << states.size() << " states: "
                  << (failed_rules == 0 && identity_violations == 0 ? "all checks passed" : "FAILED") << '\n';
    }

    void truncate_cmd() {
        const auto rule = parse_rule(c_.rule);
        const auto rt = truncate_rule(rule);
        const auto stats = rule_stats(rule);
        std::vector<int> entries(rt.entries().begin(), rt.entries().end());
        std::string tuple = "(";
        for (std::size_t i = 0; i < entries.size(); ++i) tuple += (i ? "," : "") + std::to_string(entries[i]);
        tuple += ")";

        std::size_t mismatches = 0;
        for (std::uint64_t v = 0; v < 1024; ++v) {
            const auto x = BitState::from_index(v, 10);
            mismatches += truncated_step(x, rt) != step_reference(x, rule);
        }
        manifest_.add_check("truncated step equals reference at L=10", mismatches == 0,
                            std::to_string(mismatches) + " mismatches");

        nlohmann::ordered_json j{{"rule", c_.rule},
                                 {"truncated", entries},
                                 {"lambda", std::to_string(stats.lambda.num) + "/" + std::to_string(stats.lambda.den)},
                                 {"lambda_t",
                                  std::to_string(stats.lambda_t.num) + "/" + std::to_string(stats.lambda_t.den)},
                                 {"signed_code", rt.signed_code()},
                                 {"magnitude_code", rt.magnitude_code()}};
        manifest_.results() = j;
        const auto path = resolve(c_.out, "truncate.json");
        auto out = open(path);
        out << j.dump(2) << '\n';
        close(out, path);
        std::cout << "rule " << c_.rule << " truncated " << tuple << '\n';
    }

    void classify() {
        const auto rows = truncated_rule_codes();
        const auto path = resolve(c_.csv ? c_.csv : c_.out, "classify.csv");
        auto out = open(path);
        out << "rule,lambda,lambda_t,ratio,signed_code,magnitude_code,efficient\n";
        std::size_t efficient = 0, closed_form_disagreements = 0;
        for (const auto& r : rows) {
            out << r.rule << ',' << std::setprecision(6) << r.stats.lambda.value() << ',' << r.stats.lambda_t.value()
                << ',';
            if (r.stats.ratio_infinite) out << "inf";
            else out << r.stats.ratio;
            out << ',' << r.signed_code << ',' << r.magnitude_code << ',' << (r.efficient ? 1 : 0) << '\n';
            efficient += r.efficient;
            // Only center-one outputs decide: at least three of sigma_2,3,6,7 set.
            const auto k = ((r.rule >> 2) & 1) + ((r.rule >> 3) & 1) + ((r.rule >> 6) & 1) + ((r.rule >> 7) & 1);
            closed_form_disagreements += r.efficient != (k >= 3);
        }
        close(out, path);
        manifest_.results()["efficient_rules"] = efficient;
        manifest_.add_check("classification agrees with center-output count", closed_form_disagreements == 0,
                            std::to_string(closed_form_disagreements) + " disagreements");
        std::cout << "efficient rules: " << efficient << '\n';
    }

    void split() {
        const auto rule = parse_rule(c_.rule);
        const auto mode = c_.mode == "raw" ? SplitMode::Raw : SplitMode::Truncated;
        manifest_.config()["mode"] = c_.mode;
        const auto form = split_linearize(rule, mode);

        nlohmann::ordered_json linear = nlohmann::ordered_json::object();
        for (const auto& [o, w] : form.linear.weights()) linear[offset_key(o)] = w;
        auto corrections = nlohmann::ordered_json::array();
        for (const auto& corr : form.corrections)
            corrections.push_back({{"pattern", corr.pattern.tuple_string()},
                                   {"label", corr.pattern.label()},
                                   {"address", corr.pattern.address()},
                                   {"coefficient", corr.coefficient}});
        nlohmann::ordered_json j{{"rule", c_.rule}, {"mode", c_.mode}, {"linear", linear}, {"corrections", corrections}};

        std::size_t mismatches = 0;
        for (std::uint64_t v = 0; v < 1024; ++v) {
            const auto x = BitState::from_index(v, 10);
            mismatches += split_step(x, form) != step_reference(x, rule);
        }
        manifest_.add_check("split step equals reference at L=10", mismatches == 0,
                            std::to_string(mismatches) + " mismatches");
        manifest_.results() = j;
        const auto path = resolve(c_.out, "split.json");
        auto out = open(path);
        out << j.dump(2) << '\n';
        close(out, path);
        std::cout << j.dump() << '\n';
    }

    void spectral_step() {
        const auto rule = parse_rule(c_.rule);
        manifest_.config()["engine"] = c_.engine;
        manifest_.config()["init"] = c_.init;
        const auto x = initial_state();
        const auto X = dft(x);
        Spectrum Y;
        if (c_.engine == "projector") Y = SpectralProjectorEngine(rule, c_.length).step(X);
        else if (c_.engine == "polynomial") Y = SpectralPolynomialEngine(rule, c_.length).step(X);
        else Y = SpectralSplitEngine(split_linearize(rule, SplitMode::Truncated), c_.length).step(X);

        const auto ref = step_reference(x, rule);
        const double err = Y.max_abs_difference(dft(ref));
        const bool bits_ok = to_bit_state(Y) == ref;
        const double tol = 1e-8 * static_cast<double>(c_.length);
        manifest_.results()["max_abs_error"] = err;
        manifest_.add_check("spectral step within 1e-8*L of reference spectrum", err < tol);
        manifest_.add_check("inverse transform rounds to reference state", bits_ok);

        const auto path = resolve(c_.out, "spectral.csv");
        auto out = open(path);
        out << "k,re_before,im_before,re_after,im_after\n" << std::setprecision(17);
        for (std::size_t k = 0; k < X.size(); ++k)
            out << k << ',' << X[k].real() << ',' << X[k].imag() << ',' << Y[k].real() << ',' << Y[k].imag() << '\n';
        close(out, path);
        std::cout << "max error " << std::setprecision(3) << err << (err < tol && bits_ok ? " (ok)" : " (FAILED)")
                  << '\n';
    }

    void langlet() {
        manifest_.config()["order"] = c_.order;
        const auto h = langlet_matrix(c_.order);
        std::size_t violations = 0;
        for (std::size_t r = 0; r < h.side(); ++r)
            for (std::size_t col = 0; col < h.side(); ++col) violations += (h(r, col) == 1) != ((r & col) == 0);
        manifest_.add_check("entries mark disjoint index pairs", violations == 0,
                            std::to_string(violations) + " violations");
        const auto path = resolve(c_.out, "langlet.pbm");
        write_pbm(path, h.side(), h.side(), [&](std::size_t r, std::size_t col) { return h(r, col); });
        std::cout << "wrote " << path.string() << " (" << h.side() << "x" << h.side() << ")\n";
    }

    static nlohmann::ordered_json metrics_json(const TaskMetrics& m) {
        auto confusion = nlohmann::ordered_json::array();
        for (const auto& c : m.confusion)
            confusion.push_back({{"tp", c.true_positive}, {"tn", c.true_negative}, {"fp", c.false_positive},
                                 {"fn", c.false_negative}});
        return {{"accuracy", m.accuracy},
                {"per_output_accuracy", m.per_output_accuracy},
                {"confusion", confusion},
                {"perfect_sequences", m.perfect_sequences},
                {"evaluated_sequences", m.evaluated_sequences},
                {"feature_dimension", m.feature_dimension},
                {"normal_equation_residual", m.train_normal_equation_residual}};
    }

    void reservoir_run() {
        TaskSpec spec;
        spec.kind = task_kind_from_string(c_.task);
        spec.delay = c_.delay;
        spec.sequence_length = c_.sequence_length;
        spec.trials = c_.trials;
        spec.ridge = c_.ridge;
        ReservoirConfig cfg;
        cfg.rule = parse_rule(c_.rule);
        cfg.width = c_.width;
        cfg.iterations = c_.iterations;
        cfg.redundancy = c_.redundancy;
        cfg.seed = c_.seed;
        cfg.injection = c_.injection == "xor" ? Injection::Xor : Injection::Overwrite;
        manifest_.config().update({{"task", c_.task},
                                   {"width", c_.width},
                                   {"iterations", c_.iterations},
                                   {"redundancy", c_.redundancy},
                                   {"delay", c_.delay},
                                   {"sequence_length", c_.sequence_length},
                                   {"trials", c_.trials},
                                   {"ridge", c_.ridge},
                                   {"injection", c_.injection}});

        const auto m = run_task(spec, cfg, c_.seed);
        nlohmann::ordered_json j{{"reservoir", metrics_json(m)}};
        manifest_.add_check("ridge normal equations hold to 1e-8", m.train_normal_equation_residual < 1e-8);
        if (c_.baseline) {
            const auto b = run_raw_baseline(spec, c_.seed);
            j["baseline"] = metrics_json(b);
            manifest_.add_check("baseline normal equations hold to 1e-8", b.train_normal_equation_residual < 1e-8);
        }
        manifest_.results() = j;
        const auto path = resolve(c_.out, "reservoir.json");
        auto out = open(path);
        out << j.dump(2) << '\n';
        close(out, path);
        std::cout << c_.task << " accuracy " << m.accuracy;
        if (c_.baseline) std::cout << " (baseline " << j["baseline"]["accuracy"].get<double>() << ")";
        std::cout << '\n';
    }

    void armas_run() {
        const auto rule = parse_rule(c_.rule);
        const auto mode = c_.mode == "spectral" ? UpdateMode::Spectral : UpdateMode::Spatial;
        UpdateEngine engine = rule;
        if (c_.engine == "split") engine = split_linearize(rule, SplitMode::Truncated);
        manifest_.config().update({{"agents", c_.agents},
                                   {"mode", c_.mode},
                                   {"engine", c_.engine},
                                   {"init", c_.init},
                                   {"inject", c_.injections}});

        auto net = build_network(c_.agents, engine, mode, c_.seed);
        std::vector<std::optional<BitState>> perturbation(c_.agents);
        for (const auto& spec : c_.injections) {
            const auto colon = spec.find(':');
            if (colon == std::string::npos) throw UsageError("--inject expects agent:cell[,cell...]", {});
            const auto agent = parse_cells(spec.substr(0, colon));
            if (agent.size() != 1 || agent[0] >= c_.agents)
                throw UsageError("--inject agent out of range: " + spec, {});
            BitState p(c_.length);
            for (auto cell : parse_cells(spec.substr(colon + 1))) {
                if (cell >= c_.length) throw UsageError("--inject cell out of range: " + spec, {});
                p.set(cell, true);
            }
            perturbation[agent[0]] = perturbation[agent[0]] ? *perturbation[agent[0]] ^ p : p;
        }
        for (std::size_t a = 0; a < c_.agents; ++a)
            if (perturbation[a]) net.inject(a, *perturbation[a]);
        net.set_frame_capture(c_.dump_frames);

        const auto x0 = initial_state();
        const auto result = net.run_cycles(x0, c_.steps);

        // Monolithic twin: agent a first handles step a, so its perturbation
        // lands there.
        std::vector<BitState> expected{x0};
        for (std::size_t t = 0; t < c_.steps; ++t) {
            BitState x = expected.back();
            if (t < c_.agents && perturbation[t]) x = x ^ *perturbation[t];
            expected.push_back(step_reference(x, rule));
        }
        manifest_.add_check("hop log equals monolithic trajectory", result.trajectory() == expected);
        const auto& w = result.window;
        bool window_ok = w.states.size() <= c_.agents + 1;
        for (std::size_t i = 0; window_ok && i < w.states.size(); ++i)
            window_ok = w.first_step + i < expected.size() &&
                        (w.states[i] == expected[w.first_step + i] ||
                         (w.first_step + i < c_.agents && perturbation[w.first_step + i] &&
                          w.states[i] == (expected[w.first_step + i] ^ *perturbation[w.first_step + i])));
        manifest_.add_check("trajectory window is a contiguous slice", window_ok);

        auto events = nlohmann::ordered_json::array();
        for (const auto& e : result.events) events.push_back({{"agent", e.agent}, {"step", e.step}});
        manifest_.results() = {{"hops", result.log.size() - 1},
                               {"events", events},
                               {"window_first_step", w.first_step},
                               {"window_size", w.states.size()}};

        const auto path = resolve(c_.out, "armas.jsonl");
        auto out = open(path);
        out << hop_log_jsonl(result);
        close(out, path);

        if (c_.dump_frames) {
            const auto dir = c_.out_dir / "frames";
            std::error_code ec;
            std::filesystem::create_directories(dir, ec);
            if (ec) throw IoError("cannot create " + dir.string());
            const auto& frames = net.captured_frames();
            for (std::size_t i = 0; i < frames.size(); ++i) {
                std::ostringstream name;
                name << "hop_" << std::setw(6) << std::setfill('0') << i << ".bin";
                const auto fp = dir / name.str();
                std::ofstream f(fp, std::ios::binary);
                if (!f) throw IoError("cannot write " + fp.string());
                f.write(reinterpret_cast<const char*>(frames[i].data()), static_cast<std::streamsize>(frames[i].size()));
                f.close();
                if (!f) throw IoError("write failed for " + fp.string());
                manifest_.add_output(fp);
            }
        }
        std::cout << result.log.size() - 1 << " hops over " << c_.agents << " agents, log " << path.string() << '\n';
    }

    int finish() {
        const auto path = c_.manifest ? (c_.manifest->is_absolute() ? *c_.manifest : c_.out_dir / *c_.manifest)
                                      : c_.out_dir / (c_.name + ".manifest.json");
        manifest_.write(path);
        if (!manifest_.all_passed()) {
            std::cerr << "checks failed; see " << path.string() << '\n';
            return kCheckFailure;
        }
        return kSuccess;
    }

    const Command& c_;
    RunManifest manifest_;
};

} // namespace

std::optional<Command> parse_args(int argc, const char* const* argv) {
    Command c;
    for (int i = 1; i < argc; ++i) c.argv.emplace_back(argv[i]);
    if (const char* dir = std::getenv("HOLOCA_OUT_DIR"); dir && *dir) c.out_dir = dir;

    CLI::App app{"Cellular automaton linearization, spectral evolution and reservoir tools", "holoca-cli"};
    app.require_subcommand(1);
    std::string rule_text = "110";
    std::string seed_text;
    std::string out_dir_text;
    std::string out_text, csv_text, manifest_text;

    auto common = [&](CLI::App* sub, bool rule, bool lattice) {
        if (rule) sub->add_option("--rule", rule_text, "Wolfram rule code in [0, 256)")->capture_default_str();
        if (lattice) {
            sub->add_option("--length,-L", c.length, "lattice length")->capture_default_str()->check(CLI::Range(3, 1 << 20));
        }
        sub->add_option("--seed", seed_text, "RNG seed (default 0, env HOLOCA_SEED)");
        sub->add_option("--out", out_text, "primary output file");
        sub->add_option("--out-dir", out_dir_text, "directory for outputs (env HOLOCA_OUT_DIR)");
        sub->add_option("--manifest", manifest_text, "manifest path");
    };
    const std::vector<std::string> inits{"center", "random"};

    auto* evolve = app.add_subcommand("evolve", "space-time diagram as a P1 bitmap");
    common(evolve, true, true);
    evolve->add_option("--steps", c.steps, "time steps")->capture_default_str();
    evolve->add_option("--init", c.init, "initial state")->check(CLI::IsMember(inits))->capture_default_str();

    auto* verify = app.add_subcommand("verify-identity", "check projector and polynomial steps against the rule table");
    common(verify, true, true);
    verify->add_flag("--exhaustive", c.exhaustive, "enumerate all 2^L states");
    verify->add_option("--samples", c.samples, "random states when not exhaustive")->capture_default_str();

    auto* truncate = app.add_subcommand("truncate", "ternary transition vector of a rule");
    common(truncate, true, false);

    auto* classify = app.add_subcommand("classify", "transition economy of all 256 elementary rules");
    common(classify, false, false);
    classify->add_option("--csv", csv_text, "CSV table path");

    auto* split = app.add_subcommand("split", "linear mask plus projector corrections");
    common(split, true, false);
    c.mode = "truncated";
    split->add_option("--mode", c.mode, "fit target")
        ->check(CLI::IsMember({"truncated", "raw"}))
        ->capture_default_str();

    auto* spectral = app.add_subcommand("spectral-step", "one update in the DFT domain");
    common(spectral, true, true);
    c.engine = "split";
    spectral->add_option("--engine", c.engine, "spectral engine")
        ->check(CLI::IsMember({"projector", "polynomial", "split"}))
        ->capture_default_str();
    spectral->add_option("--init", c.init, "initial state")->check(CLI::IsMember(inits))->capture_default_str();

    auto* langlet = app.add_subcommand("langlet", "Langlet matrix as a P1 bitmap");
    common(langlet, false, false);
    langlet->add_option("--order,-n", c.order, "matrix order")->capture_default_str();

    auto* reservoir = app.add_subcommand("reservoir-run", "reservoir computing task with a ridge readout");
    common(reservoir, true, false);
    reservoir->add_option("--task", c.task, "task")
        ->check(CLI::IsMember({"five-bit-memory", "temporal-parity", "temporal-density"}))
        ->capture_default_str();
    reservoir->add_option("--width", c.width, "cells per instance")->capture_default_str();
    reservoir->add_option("--iterations,-I", c.iterations, "states per input")->capture_default_str();
    reservoir->add_option("--redundancy,-R", c.redundancy, "instances")->capture_default_str();
    reservoir->add_option("--delay", c.delay, "task delay or distractor period")->capture_default_str();
    reservoir->add_option("--sequence-length", c.sequence_length, "steps per sequence")->capture_default_str();
    reservoir->add_option("--trials", c.trials, "sequences")->capture_default_str();
    reservoir->add_option("--ridge", c.ridge, "ridge coefficient")->capture_default_str();
    reservoir->add_option("--injection", c.injection, "input injection")
        ->check(CLI::IsMember({"overwrite", "xor"}))
        ->capture_default_str();
    reservoir->add_flag("--baseline", c.baseline, "also run the raw-input baseline");

    auto* armas = app.add_subcommand("armas-run", "ring of router agents, one step per hop");
    common(armas, true, true);
    armas->add_option("--steps", c.steps, "hops")->capture_default_str();
    armas->add_option("--agents,-m", c.agents, "ring size")->capture_default_str()->check(CLI::Range(1, 65534));
    c.mode = "spatial";
    armas->add_option("--mode", c.mode, "payload domain")
        ->check(CLI::IsMember({"spatial", "spectral"}))
        ->capture_default_str();
    c.engine = "rule";
    armas->add_option("--engine", c.engine, "update engine")
        ->check(CLI::IsMember({"rule", "split"}))
        ->capture_default_str();
    armas->add_option("--init", c.init, "initial state")->check(CLI::IsMember(inits))->capture_default_str();
    armas->add_option("--inject", c.injections, "perturbation agent:cell[,cell...]");
    armas->add_flag("--dump-frames", c.dump_frames, "write every frame to <out-dir>/frames");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help();
        return std::nullopt;
    } catch (const CLI::ParseError& e) {
        const auto* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
        throw UsageError(e.what(), sub->help());
    }

    const auto* sub = app.get_subcommands().front();
    c.name = sub->get_name();
    try {
        if (c.name == "verify-identity" && rule_text == "all") c.all_rules = true;
        else c.rule = parse_rule_code(rule_text);

        if (seed_text.empty())
            if (const char* env = std::getenv("HOLOCA_SEED"); env && *env) seed_text = env;
        if (!seed_text.empty()) {
            const auto [ptr, ec] = std::from_chars(seed_text.data(), seed_text.data() + seed_text.size(), c.seed);
            if (ec != std::errc() || ptr != seed_text.data() + seed_text.size())
                throw UsageError("seed must be a non-negative integer, got '" + seed_text + "'", {});
        }
        if (c.name == "langlet" && (c.order < 0 || c.order > LangletMatrix::kMaxOrder))
            throw UsageError("order must lie in [0, " + std::to_string(LangletMatrix::kMaxOrder) + "]", {});
    } catch (const UsageError& e) {
        throw UsageError(e.what(), sub->help());
    }
    if (!out_dir_text.empty()) c.out_dir = out_dir_text;
    if (!out_text.empty()) c.out = out_text;
    if (!csv_text.empty()) c.csv = csv_text;
    if (!manifest_text.empty()) c.manifest = manifest_text;
    return c;
}

int execute(const Command& command) {
    std::optional<Runner> runner;
    try {
        runner.emplace(command);
        return runner->run();
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const IoError& e) {
        std::cerr << "I/O error: " << e.what() << '\n';
        return kIoError;
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "I/O error: " << e.what() << '\n';
        return kIoError;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        if (!runner) return kCheckFailure;
        try {
            runner->fail(e.what());
        } catch (const IoError& io) {
            std::cerr << "I/O error: " << io.what() << '\n';
            return kIoError;
        }
        return kCheckFailure;
    }
}

} // namespace holoca::cli
