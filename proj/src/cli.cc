// Copyright 2026 The ghzsig Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ghzsig/cli.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <fstream>
#include <functional>
#include <memory>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "ghzsig/errors.h"
#include "ghzsig/fingerprint.h"
#include "ghzsig/linear_code.h"
#include "ghzsig/qkd.h"
#include "ghzsig/scenario.h"

namespace ghzsig::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Runs task(0..count-1) on up to `workers` threads. Results are stored by
/// index, so the output never depends on the worker count. The first
/// exception (by index) is rethrown.
template <class T>
std::vector<T> run_indexed(std::size_t count, std::size_t workers, const std::function<T(std::size_t)>& task) {
    std::vector<std::optional<T>> results(count);
    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                results[i] = task(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    workers = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(count, 1));
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; w++) {
            pool.emplace_back(worker);
        }
        for (auto& t : pool) {
            t.join();
        }
    }
    std::vector<T> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; i++) {
        if (errors[i]) {
            std::rethrow_exception(errors[i]);
        }
        out.push_back(std::move(*results[i]));
    }
    return out;
}

// Fills options the command line left unset from a JSON object whose keys are
// long flag names without the leading dashes.
void apply_config_file(CLI::App& sub, const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot open config file " + path);
    }
    nlohmann::json config;
    try {
        config = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw UsageError("config file " + path + " is not valid JSON: " + e.what());
    }
    if (!config.is_object()) {
        throw UsageError("config file " + path + " must hold a JSON object");
    }
    for (const auto& [key, value] : config.items()) {
        CLI::Option* opt = sub.get_option_no_throw("--" + key);
        if (opt == nullptr || key == "config") {
            throw UsageError("unknown config key \"" + key + "\" for " + sub.get_name());
        }
        if (opt->count() > 0) {
            continue;  // the command line wins
        }
        auto add = [&](const nlohmann::json& v) {
            opt->add_result(v.is_string() ? v.get<std::string>() : v.dump());
        };
        if (value.is_array()) {
            for (const auto& v : value) {
                add(v);
            }
        } else {
            add(value);
        }
        try {
            opt->run_callback();
        } catch (const CLI::ParseError& e) {
            throw UsageError("config key \"" + key + "\": " + e.what());
        }
    }
}

struct OutputTarget {
    std::string path;
    std::ostream& fallback;
    std::unique_ptr<std::ofstream> file;

    std::ostream& stream() {
        if (path.empty()) {
            return fallback;
        }
        if (!file) {
            file = std::make_unique<std::ofstream>(path);
            if (!*file) {
                throw UsageError("cannot open output file " + path);
            }
        }
        return *file;
    }
};

template <class J>
void emit(OutputTarget& target, const J& j) {
    target.stream() << j.dump() << '\n';
}

struct ScenarioFlags {
    std::size_t n = 64;
    std::uint64_t seed = 0;
    std::string message;
    double c = 2.0;
    std::uint64_t code_seed = 0;
    std::size_t r = kDefaultSwapRepetitions;
    std::size_t bb84_raw = 0;
    std::size_t runs = 1;
    std::size_t parallel = 1;
    bool timing = false;
    std::vector<std::size_t> flip;
    std::vector<std::size_t> phase;
    bool tamper_ciphertext = false;
    std::vector<std::size_t> forge_flip;
};

void add_scenario_options(CLI::App* sub, ScenarioFlags& f) {
    sub->add_option("--n", f.n, "Message length N in bits")->capture_default_str();
    sub->add_option("--seed", f.seed, "Master seed")->capture_default_str();
    sub->add_option("--message", f.message, "Message as a 0/1 string (default: random from the seed)");
    sub->add_option("--c", f.c, "Fingerprint expansion ratio c > 1")->capture_default_str();
    sub->add_option("--code-seed", f.code_seed, "Seed of Alice's fingerprint code")->capture_default_str();
    sub->add_option("--r", f.r, "Fingerprint copies deposited with Trent")->capture_default_str();
    sub->add_option("--bb84-raw", f.bb84_raw, "Raw BB84 qubits (default 8N, at least 16)");
    sub->add_option("--runs", f.runs, "Run this many scenarios with seeds seed, seed+1, ...; one JSON line each")
        ->capture_default_str();
    sub->add_option("--parallel", f.parallel, "Worker threads for --runs")->capture_default_str();
    sub->add_flag("--timing", f.timing, "Include wall_time_seconds in reports");
}

ScenarioConfig to_config(const ScenarioFlags& f, Attack attack) {
    ScenarioConfig config;
    config.n_bits = f.n;
    config.master_seed = f.seed;
    if (!f.message.empty()) {
        config.message = parse_bits(f.message);
    }
    config.c_requested = f.c;
    config.code_seed = f.code_seed;
    config.r_copies = f.r;
    if (f.bb84_raw != 0) {
        config.bb84_raw_count = f.bb84_raw;
    }
    config.attack = std::move(attack);
    validate(config);
    if (f.runs == 0) {
        throw std::invalid_argument("--runs must be >= 1");
    }
    return config;
}

int run_scenarios(const ScenarioConfig& base, const ScenarioFlags& f, OutputTarget& target) {
    auto reports = run_indexed<nlohmann::ordered_json>(f.runs, f.parallel, [&](std::size_t i) {
        ScenarioConfig config = base;
        config.master_seed = base.master_seed + i;
        ScenarioReport report = run_scenario(config);
        auto j = to_json(report, f.timing);
        j["exit_code"] = (report.attack_detected || !report.accepted) ? kExitRejected : kExitOk;
        return j;
    });
    int code = kExitOk;
    for (auto& j : reports) {
        code = std::max(code, j["exit_code"].get<int>());
        j.erase("exit_code");
        emit(target, j);
    }
    return code;
}

}  // namespace

nlohmann::ordered_json fingerprint_stats(const FingerprintStatsOptions& options) {
    if (options.trials == 0 || options.pairs == 0) {
        throw std::invalid_argument("trials and pairs must be >= 1");
    }
    if (options.exact && options.n > LinearCode::kMaxExhaustiveInputBits) {
        throw CapabilityError("exact distance mode supports n <= " +
                              std::to_string(LinearCode::kMaxExhaustiveInputBits) + "; pass --no-exact");
    }

    std::shared_ptr<const LinearCode> code;
    if (options.mode == "orthogonal") {
        // Repetition code: E(0...0) and E(1...1) differ everywhere.
        code = std::make_shared<const LinearCode>(
            LinearCode::repetition(options.n, codeword_length(options.n, options.c)));
    } else if (options.mode == "random" || options.mode == "equal") {
        code = std::make_shared<const LinearCode>(LinearCode::make(options.n, options.c, options.seed));
    } else {
        throw std::invalid_argument("unknown mode \"" + options.mode + "\" (random, equal, orthogonal)");
    }
    if (fingerprint_qubits(code->m()) * 2 + 1 > StateVector::kMaxQubits) {
        throw std::invalid_argument("swap-test register would exceed " + std::to_string(StateVector::kMaxQubits) +
                                    " qubits");
    }

    Rng root(options.seed);
    Rng pair_rng = root.split("pairs");
    std::vector<std::pair<Bits, Bits>> inputs;
    for (std::size_t p = 0; p < options.pairs; p++) {
        Bits x(options.n);
        Bits y(options.n);
        if (options.mode == "orthogonal") {
            std::fill(y.begin(), y.end(), 1);
        } else {
            for (auto& b : x) {
                b = pair_rng.coin() ? 1 : 0;
            }
            if (options.mode == "equal") {
                y = x;
            } else {
                do {
                    for (auto& b : y) {
                        b = pair_rng.coin() ? 1 : 0;
                    }
                } while (y == x);
            }
        }
        inputs.emplace_back(std::move(x), std::move(y));
    }

    nlohmann::ordered_json j;
    j["n"] = options.n;
    j["m"] = code->m();
    j["c"] = code->c();
    j["code_seed"] = options.seed;
    j["mode"] = options.mode;
    j["trials"] = options.trials;
    if (options.exact) {
        std::size_t d = min_distance(*code);
        j["d_min"] = d;
        j["max_distinct_overlap"] = 1.0 - static_cast<double>(d) / static_cast<double>(code->m());
    } else {
        j["d_min"] = nullptr;
        j["max_distinct_overlap"] = nullptr;
    }

    bool all_within = true;
    auto pairs = nlohmann::ordered_json::array();
    for (std::size_t p = 0; p < inputs.size(); p++) {
        const auto& [x, y] = inputs[p];
        double s = overlap(make_fingerprint(code, x), make_fingerprint(code, y));
        double prob = swap_accept_probability(s);
        Rng trial_root = root.split("trials").split(static_cast<std::uint64_t>(p));
        auto accepts = run_indexed<int>(options.trials, options.parallel, [&](std::size_t t) {
            Rng rng = trial_root.split(static_cast<std::uint64_t>(t));
            return swap_test(make_fingerprint(code, x), make_fingerprint(code, y), rng) ? 1 : 0;
        });
        std::size_t accepted = 0;
        for (int a : accepts) {
            accepted += static_cast<std::size_t>(a);
        }
        double rate = static_cast<double>(accepted) / static_cast<double>(options.trials);
        double se = std::sqrt(prob * (1 - prob) / static_cast<double>(options.trials));
        bool within = se > 0 ? std::abs(rate - prob) <= 3 * se : rate == prob;
        all_within = all_within && within;

        nlohmann::ordered_json pj;
        pj["x"] = to_string(x);
        pj["y"] = to_string(y);
        pj["hamming_distance"] = hamming_distance(code->encode(x), code->encode(y));
        pj["overlap"] = s;
        pj["analytic_accept"] = prob;
        pj["empirical_accept"] = rate;
        pj["std_error"] = se;
        if (se > 0) {
            pj["deviation_sigma"] = std::abs(rate - prob) / se;
        } else {
            pj["deviation_sigma"] = rate == prob ? nlohmann::ordered_json(0.0) : nlohmann::ordered_json(nullptr);
        }
        pj["within_3_sigma"] = within;
        pairs.push_back(std::move(pj));
    }
    j["pairs"] = std::move(pairs);
    j["all_within_3_sigma"] = all_within;
    return j;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Simulator for a GHZ-triplet quantum digital signature protocol", "ghzsig"};
    app.require_subcommand(1);
    std::string output_path;
    std::string config_path;

    ScenarioFlags flags;
    auto* honest = app.add_subcommand("honest", "Run the protocol with no adversary");
    auto* eve = app.add_subcommand("eve", "Eve tampers with the signature particles on their way to Bob");
    auto* forge = app.add_subcommand("forge", "Bob forges a message and Alice disputes it");
    auto* disavow = app.add_subcommand("disavow", "Alice denies a genuine signature and Bob disputes it");
    for (auto* sub : {honest, eve, forge, disavow}) {
        add_scenario_options(sub, flags);
    }
    eve->add_option("--flip", flags.flip, "1-based positions Eve flips with sigma_x")->delimiter(',');
    eve->add_option("--phase", flags.phase, "1-based positions Eve flips with sigma_z")->delimiter(',');
    eve->add_flag("--tamper-ciphertext", flags.tamper_ciphertext,
                  "With --flip, also flip the same bits of the ciphertext");
    forge->add_option("--forge-flip", flags.forge_flip,
                      "1-based positions Bob changes (default: one random position)")
        ->delimiter(',');

    Bb84Options bb84_options;
    bb84_options.raw_count = 10000;
    std::uint64_t bb84_seed = 0;
    auto* bb84 = app.add_subcommand("bb84", "Run one BB84 key exchange");
    bb84->add_option("--raw", bb84_options.raw_count, "Raw qubits sent")->capture_default_str();
    bb84->add_flag("--eve", bb84_options.eve_present, "Full intercept-resend eavesdropper");
    bb84->add_option("--sample-fraction", bb84_options.sample_fraction, "Sifted fraction used for QBER estimation")
        ->capture_default_str();
    bb84->add_option("--threshold", bb84_options.qber_threshold, "Abort above this QBER")->capture_default_str();
    bb84->add_option("--seed", bb84_seed, "Seed")->capture_default_str();

    std::size_t table_n = 64;
    double table_c = 2.0;
    std::size_t table_r = 1;
    bool table_compare = false;
    auto* table1 = app.add_subcommand("table1", "Qubits sent per channel for one n-bit message");
    table1->add_option("--n", table_n, "Message bits")->capture_default_str();
    table1->add_option("--c", table_c, "Expansion ratio c > 1")->capture_default_str();
    table1->add_option("--r", table_r, "Fingerprint copies")->capture_default_str();
    table1->add_flag("--compare", table_compare, "Also list the arbitrated reference schemes");

    FingerprintStatsOptions stats;
    bool no_exact = false;
    auto* fstats = app.add_subcommand("fingerprint-stats", "Swap-test statistics on fingerprint pairs");
    fstats->add_option("--n", stats.n, "Input bits")->capture_default_str();
    fstats->add_option("--c", stats.c, "Expansion ratio c > 1")->capture_default_str();
    fstats->add_option("--seed", stats.seed, "Code and sampling seed")->capture_default_str();
    fstats->add_option("--trials", stats.trials, "Swap tests per pair")->capture_default_str();
    fstats->add_option("--pairs", stats.pairs, "Number of input pairs")->capture_default_str();
    fstats->add_option("--mode", stats.mode, "random, equal or orthogonal")
        ->check(CLI::IsMember({"random", "equal", "orthogonal"}))
        ->capture_default_str();
    fstats->add_flag("--no-exact", no_exact, "Skip exhaustive d_min (allows n > 16)");
    fstats->add_option("--parallel", stats.parallel, "Worker threads")->capture_default_str();

    for (auto* sub : {honest, eve, forge, disavow, bb84, table1, fstats}) {
        sub->add_option("--output", output_path, "Write the JSON report here instead of stdout");
        sub->add_option("--config", config_path, "JSON file of flag defaults; flags override");
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kExitOk;
        }
        err << "ghzsig: " << e.what() << '\n';
        return kExitUsage;
    }

    CLI::App* sub = app.get_subcommands().front();
    OutputTarget target{output_path, out, nullptr};
    try {
        if (!config_path.empty()) {
            apply_config_file(*sub, config_path);
        }

        if (sub == honest || sub == eve || sub == forge || sub == disavow) {
            Attack attack = NoAttack{};
            if (sub == eve) {
                if (flags.flip.empty() == flags.phase.empty()) {
                    throw UsageError("eve needs exactly one of --flip or --phase");
                }
                if (!flags.flip.empty()) {
                    attack = EveFlip{mask_from_positions(flags.n, flags.flip), flags.tamper_ciphertext};
                } else {
                    if (flags.tamper_ciphertext) {
                        throw UsageError("--tamper-ciphertext applies to --flip only");
                    }
                    attack = EvePhase{mask_from_positions(flags.n, flags.phase)};
                }
            } else if (sub == forge) {
                Bits mask;
                if (!flags.forge_flip.empty()) {
                    mask = mask_from_positions(flags.n, flags.forge_flip);
                }
                attack = BobForge{mask};
            } else if (sub == disavow) {
                attack = AliceDisavow{};
            }
            ScenarioConfig config = to_config(flags, std::move(attack));
            return run_scenarios(config, flags, target);
        }
        if (sub == bb84) {
            Rng rng(bb84_seed);
            Bb84Report report = bb84_exchange(bb84_options, rng);
            emit(target, to_json(report));
            return report.aborted ? kExitRejected : kExitOk;
        }
        if (sub == table1) {
            Table1Row row = table1_row(table_n, table_c, table_r);
            if (!table_compare) {
                emit(target, to_json(row));
            } else {
                nlohmann::ordered_json j;
                j["this_protocol"] = to_json(row);
                auto refs = nlohmann::ordered_json::array();
                for (const auto& s : table1_reference_schemes(table_n)) {
                    nlohmann::ordered_json r;
                    r["scheme"] = s.name;
                    r["alice_to_bob"] = s.alice_to_bob;
                    r["bob_to_arbitrator"] = s.bob_to_arbitrator;
                    r["arbitrator_to_bob"] = s.arbitrator_to_bob;
                    refs.push_back(std::move(r));
                }
                j["reference_schemes"] = std::move(refs);
                emit(target, j);
            }
            return kExitOk;
        }
        if (sub == fstats) {
            stats.exact = !no_exact;
            auto j = fingerprint_stats(stats);
            emit(target, j);
            return j["all_within_3_sigma"].get<bool>() ? kExitOk : kExitRejected;
        }
    } catch (const UsageError& e) {
        err << "ghzsig: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "ghzsig: " << e.what() << '\n';
        return kExitUsage;
    } catch (const CapabilityError& e) {
        err << "ghzsig: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ScenarioError& e) {
        nlohmann::ordered_json j;
        j["error"] = e.what();
        emit(target, j);
        return kExitRejected;
    }
    err << "ghzsig: no subcommand handled\n";
    return kExitUsage;
}

}  // namespace ghzsig::cli
