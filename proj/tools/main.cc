// Copyright 2026 The qspoof Authors
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

#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "emit.h"
#include "qspoof/errors.h"
#include "sweep.h"
#include "verify.h"

namespace {

using namespace qspoof;
using namespace qspoof::tools;

enum ExitCode { kOk = 0, kInvalidConfig = 1, kNumericalFailure = 2, kIoFailure = 3 };

struct Flags {
    double n = 0.0;
    double p = 0.0;
    double grid_min = 0.0;
    double grid_max = 0.0;
    size_t grid_count = 0;
    bool log = false;
    uint64_t seed = 0;
    uint64_t pulses = 0;
    uint64_t trials = 0;
    size_t cutoff = 0;
    std::string out;
    std::string format = "csv";
    std::string scenario;
    bool adaptive = false;
};

struct FlagOptions {
    CLI::Option *n, *p, *grid_min, *grid_max, *grid_count, *log, *seed, *pulses, *trials, *cutoff, *out, *format,
        *adaptive;
};

RunConfig resolve(Scenario scenario, const Flags &f, const FlagOptions &o) {
    RunConfig c = default_config(scenario);
    if (o.n->count()) c.n = f.n;
    if (o.p->count()) c.p = f.p;
    if (o.grid_min->count()) c.grid.min = f.grid_min;
    if (o.grid_max->count()) c.grid.max = f.grid_max;
    if (o.grid_count->count()) c.grid.count = f.grid_count;
    if (o.log->count()) c.grid.log = f.log;
    if (o.seed->count()) c.seed = f.seed;
    if (o.pulses->count()) c.n_pulses = f.pulses;
    if (o.trials->count()) c.n_trials = f.trials;
    if (o.cutoff->count()) c.cutoff = f.cutoff;
    if (o.adaptive->count() && f.adaptive) c.projector = ProjectorMode::kAdaptive;
    c.out = f.out;
    c.format = f.format == "svg" ? Format::kSvg : Format::kCsv;
    c.validate();
    return c;
}

void write(const SweepTable &table, const RunConfig &config) {
    for (const auto &[key, value] : table.notes) {
        std::fprintf(stderr, "# %s = %.17g\n", key.c_str(), value);
    }
    if (config.out.empty()) {
        std::cout << (config.format == Format::kCsv ? to_csv(table) : to_svg(table));
        std::cout.flush();
        if (!std::cout) {
            throw IoError("failed writing to stdout");
        }
        return;
    }
    emit(table, config.format, config.out);
}

int run_verify() {
    bool all = true;
    for (const auto &r : run_oracle_suites()) {
        std::printf("[%s] %s: %s\n", r.passed ? "PASS" : "FAIL", r.name.c_str(), r.detail.c_str());
        all = all && r.passed;
    }
    return all ? kOk : kNumericalFailure;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Quantum limits on measure-and-prepare spoofing of coherent-state signals"};
    app.require_subcommand(1);
    app.set_config("--config", "", "TOML/INI file of flag values; command-line flags win");

    Flags f;
    FlagOptions o{};
    o.n = app.add_option("--n", f.n, "Mean photon number N");
    o.p = app.add_option("--p", f.p, "Prior probability of a spoof");
    o.grid_min = app.add_option("--grid-min", f.grid_min, "Sweep grid minimum");
    o.grid_max = app.add_option("--grid-max", f.grid_max, "Sweep grid maximum");
    o.grid_count = app.add_option("--grid-count", f.grid_count, "Sweep grid point count (>= 2)");
    o.log = app.add_flag("--log{true},--linear{false}", f.log, "Logarithmic grid spacing");
    o.seed = app.add_option("--seed", f.seed, "Random seed");
    o.pulses = app.add_option("--pulses", f.pulses, "Pulses per Bayesian trajectory");
    o.trials = app.add_option("--trials", f.trials, "Replicate trajectories summarised by fig3");
    o.cutoff = app.add_option("--cutoff", f.cutoff, "Photon-number cutoff override (Gaussian scenario)");
    o.out = app.add_option("--out", f.out, "Output path (stdout when omitted)");
    o.format = app.add_option("--format", f.format, "Output format")->check(CLI::IsMember({"csv", "svg"}));
    o.adaptive = app.add_flag("--adaptive", f.adaptive, "Re-derive the receiver measurement from the current prior");

    struct Command {
        const char *name;
        const char *help;
        std::optional<Scenario> scenario;
    };
    const Command commands[] = {
        {"fig1", "Success probability vs prior p, binary phase-shift keying", Scenario::kBpskVsP},
        {"fig2", "Success probability vs N at fixed p, binary phase-shift keying", Scenario::kBpskVsN},
        {"fig3", "Bayesian trajectories with and without a spoofer", Scenario::kBayes},
        {"fig4", "Success probability vs N, Gaussian-noise modulation", Scenario::kGaussVsN},
        {"fig5", "Success probability vs p, skin return plus spoof pulse", Scenario::kTwoPulseVsP},
        {"sweep", "Generic scenario runner (--scenario)", std::nullopt},
        {"verify", "Run closed-form vs oracle agreement suites", std::nullopt},
    };
    for (const auto &cmd : commands) {
        auto *sub = app.add_subcommand(cmd.name, cmd.help);
        sub->fallthrough();
        if (std::string(cmd.name) == "sweep") {
            sub->add_option("--scenario", f.scenario, "Scenario to run")
                ->required()
                ->check(CLI::IsMember({"bpsk-vs-p", "bpsk-vs-n", "bayes", "gauss-vs-n", "twopulse-vs-p"}));
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kInvalidConfig;
    }

    try {
        for (const auto &cmd : commands) {
            if (!app.got_subcommand(cmd.name)) {
                continue;
            }
            const std::string name = cmd.name;
            if (name == "verify") {
                return run_verify();
            }
            const Scenario scenario = cmd.scenario ? *cmd.scenario : *parse_scenario(f.scenario);
            const RunConfig config = resolve(scenario, f, o);
            write(run_scenario(config), config);
        }
    } catch (const IoError &e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kIoFailure;
    } catch (const std::invalid_argument &e) {
        std::fprintf(stderr, "invalid configuration: %s\n", e.what());
        return kInvalidConfig;
    } catch (const std::exception &e) {
        std::fprintf(stderr, "numerical failure: %s\n", e.what());
        return kNumericalFailure;
    }
    return kOk;
}
