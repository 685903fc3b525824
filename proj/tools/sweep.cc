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

#include "sweep.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "qspoof/bpsk.h"
#include "qspoof/gaussian.h"
#include "qspoof/two_pulse.h"

namespace qspoof::tools {

void Grid::validate() const {
    if (count < 2) {
        throw std::invalid_argument("grid count must be >= 2");
    }
    if (!std::isfinite(min) || !std::isfinite(max) || !(min < max)) {
        throw std::invalid_argument("grid requires finite min < max");
    }
    if (log && !(min > 0.0)) {
        throw std::invalid_argument("log grid requires min > 0");
    }
}

std::vector<double> Grid::points() const {
    validate();
    std::vector<double> xs(count);
    const double last = static_cast<double>(count - 1);
    for (size_t i = 0; i < count; ++i) {
        const double t = static_cast<double>(i) / last;
        xs[i] = log ? std::exp(std::log(min) + t * (std::log(max) - std::log(min))) : min + t * (max - min);
    }
    xs.front() = min;
    xs.back() = max;
    return xs;
}

void SweepTable::validate() const {
    for (size_t i = 1; i < x_values.size(); ++i) {
        if (!(x_values[i] > x_values[i - 1])) {
            throw std::invalid_argument("sweep table x values must be strictly increasing");
        }
    }
    for (const auto &s : series) {
        if (s.values.size() != x_values.size()) {
            throw std::invalid_argument("series '" + s.name + "' length differs from x values");
        }
    }
}

const Series &SweepTable::find(const std::string &name) const {
    for (const auto &s : series) {
        if (s.name == name) {
            return s;
        }
    }
    throw std::out_of_range("no series named '" + name + "'");
}

std::optional<double> SweepTable::note(const std::string &key) const {
    for (const auto &[k, v] : notes) {
        if (k == key) {
            return v;
        }
    }
    return std::nullopt;
}

std::optional<Scenario> parse_scenario(const std::string &name) {
    if (name == "bpsk-vs-p") return Scenario::kBpskVsP;
    if (name == "bpsk-vs-n") return Scenario::kBpskVsN;
    if (name == "bayes") return Scenario::kBayes;
    if (name == "gauss-vs-n") return Scenario::kGaussVsN;
    if (name == "twopulse-vs-p") return Scenario::kTwoPulseVsP;
    return std::nullopt;
}

std::string scenario_name(Scenario scenario) {
    switch (scenario) {
        case Scenario::kBpskVsP:
            return "bpsk-vs-p";
        case Scenario::kBpskVsN:
            return "bpsk-vs-n";
        case Scenario::kBayes:
            return "bayes";
        case Scenario::kGaussVsN:
            return "gauss-vs-n";
        case Scenario::kTwoPulseVsP:
            return "twopulse-vs-p";
    }
    return "?";
}

void RunConfig::validate() const {
    if (scenario != Scenario::kBayes) {
        grid.validate();
    }
    if (!std::isfinite(n) || n < 0.0) {
        throw std::invalid_argument("--n must be finite and >= 0");
    }
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("--p must lie in [0, 1]");
    }
    if (n_pulses == 0) {
        throw std::invalid_argument("--pulses must be >= 1");
    }
    if (n_trials == 0) {
        throw std::invalid_argument("--trials must be >= 1");
    }
    if (cutoff && *cutoff == 0) {
        throw std::invalid_argument("--cutoff must be >= 1");
    }
    const bool p_axis = scenario == Scenario::kBpskVsP || scenario == Scenario::kTwoPulseVsP;
    if (p_axis && (grid.min < 0.0 || grid.max > 1.0)) {
        throw std::invalid_argument("p grid must lie within [0, 1]");
    }
    const bool n_axis = scenario == Scenario::kBpskVsN || scenario == Scenario::kGaussVsN;
    if (n_axis && grid.min < 0.0) {
        throw std::invalid_argument("N grid must be non-negative");
    }
}

RunConfig default_config(Scenario scenario) {
    RunConfig c;
    c.scenario = scenario;
    switch (scenario) {
        case Scenario::kBpskVsP:
        case Scenario::kTwoPulseVsP:
            c.grid = {0.0, 1.0, 101, false};
            c.n = 0.1;
            break;
        case Scenario::kBpskVsN:
            c.grid = {1e-5, 10.0, 61, true};
            c.p = 0.5;
            break;
        case Scenario::kBayes:
            c.n = 0.1;
            c.n_pulses = 200;
            break;
        case Scenario::kGaussVsN:
            c.grid = {0.01, 20.0, 61, true};
            c.p = 0.5;
            break;
    }
    return c;
}

double median(std::vector<double> values) {
    if (values.empty()) {
        throw std::invalid_argument("median of empty sample");
    }
    const size_t mid = values.size() / 2;
    std::nth_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid), values.end());
    const double upper = values[mid];
    if (values.size() % 2 == 1) {
        return upper;
    }
    const double lower = *std::max_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid));
    return 0.5 * (lower + upper);
}

size_t argmax(const std::vector<double> &values) {
    return static_cast<size_t>(std::max_element(values.begin(), values.end()) - values.begin());
}

namespace {

// Evaluates f at every x, spreading indices across hardware threads. Output order
// (and hence bytes) does not depend on the thread count.
template <typename F>
std::vector<double> parallel_map(const std::vector<double> &xs, F f) {
    std::vector<double> out(xs.size());
    const size_t workers = std::max<size_t>(1, std::min<size_t>(std::thread::hardware_concurrency(), xs.size()));
    if (workers == 1) {
        for (size_t i = 0; i < xs.size(); ++i) {
            out[i] = f(xs[i]);
        }
        return out;
    }
    std::atomic<size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    for (size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (size_t i = next++; i < xs.size(); i = next++) {
                try {
                    out[i] = f(xs[i]);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(failure_mutex);
                    if (!failure) {
                        failure = std::current_exception();
                    }
                }
            }
        });
    }
    for (auto &t : pool) {
        t.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return out;
}

double max_of(const std::vector<double> &v) {
    return *std::max_element(v.begin(), v.end());
}

double min_of(const std::vector<double> &v) {
    return *std::min_element(v.begin(), v.end());
}

}  // namespace

SweepTable run_fig1(const RunConfig &config) {
    config.validate();
    SweepTable t;
    t.x_name = "p";
    t.x_values = config.grid.points();
    t.log_x = config.grid.log;
    auto quantum = parallel_map(t.x_values, [&](double p) { return p_success_bpsk(ScenarioParams(config.n, p)); });
    auto prior = parallel_map(t.x_values, [](double p) { return p_success_prior_only(p); });
    std::vector<double> gap(quantum.size());
    for (size_t i = 0; i < gap.size(); ++i) {
        gap[i] = quantum[i] - prior[i];
    }
    t.series.push_back({"p_success_bpsk", "optimal measure-and-prepare spoofer", std::move(quantum)});
    t.series.push_back({"p_success_prior_only", "perfect spoofer (gamma = 1)", std::move(prior)});
    t.notes.emplace_back("N", config.n);
    t.notes.emplace_back("max_separation", max_of(gap));
    t.notes.emplace_back("threshold_p", spoof_assumption_threshold(config.n));
    return t;
}

SweepTable run_fig2(const RunConfig &config) {
    config.validate();
    SweepTable t;
    t.x_name = "N";
    t.x_values = config.grid.points();
    t.log_x = config.grid.log;
    auto values = parallel_map(t.x_values, [&](double n) { return p_success_bpsk(ScenarioParams(n, config.p)); });
    const size_t best = argmax(values);
    t.notes.emplace_back("p", config.p);
    t.notes.emplace_back("argmax_N", t.x_values[best]);
    t.notes.emplace_back("max_p_success", values[best]);
    t.series.push_back({"p_success_bpsk", "optimal measure-and-prepare spoofer", std::move(values)});
    return t;
}

Fig3Result run_fig3(const RunConfig &config) {
    config.validate();
    const ScenarioParams params(config.n, 0.5);
    TrajectoryOptions options;
    options.mode = config.projector;
    Fig3Result r{simulate_trajectory(Hypothesis::kTrueReturn, params, config.n_pulses, config.seed, options),
                 simulate_trajectory(Hypothesis::kSpoof, params, config.n_pulses, config.seed, options),
                 {}};
    SweepTable &t = r.table;
    t.x_name = "pulse_index";
    std::vector<double> a0, a1, b0, b1;
    for (size_t k = 0; k < r.truth_h0.states.size(); ++k) {
        t.x_values.push_back(static_cast<double>(r.truth_h0.states[k].pulse_index));
        a0.push_back(r.truth_h0.states[k].prior_h0);
        a1.push_back(r.truth_h0.states[k].prior_h1);
        b0.push_back(r.truth_h1.states[k].prior_h0);
        b1.push_back(r.truth_h1.states[k].prior_h1);
    }
    t.series.push_back({"truth_h0_P_H0", "(a) no spoofer: P(H0)", std::move(a0)});
    t.series.push_back({"truth_h0_P_H1", "(a) no spoofer: P(H1)", std::move(a1)});
    t.series.push_back({"truth_h1_P_H0", "(b) spoofer: P(H0)", std::move(b0)});
    t.series.push_back({"truth_h1_P_H1", "(b) spoofer: P(H1)", std::move(b1)});
    t.notes.emplace_back("N", config.n);
    t.notes.emplace_back("seed", static_cast<double>(config.seed));
    t.notes.emplace_back("final_P_H0_truth_h0", r.truth_h0.states.back().prior_h0);
    t.notes.emplace_back("final_P_H1_truth_h1", r.truth_h1.states.back().prior_h1);

    // Replicates over seeds seed .. seed + n_trials - 1.
    std::vector<double> finals_h0, finals_h1;
    for (uint64_t k = 0; k < config.n_trials; ++k) {
        finals_h0.push_back(
            simulate_trajectory(Hypothesis::kTrueReturn, params, config.n_pulses, config.seed + k, options)
                .states.back()
                .prior_h0);
        finals_h1.push_back(
            simulate_trajectory(Hypothesis::kSpoof, params, config.n_pulses, config.seed + k, options)
                .states.back()
                .prior_h1);
    }
    t.notes.emplace_back("median_final_P_H0_truth_h0", median(finals_h0));
    t.notes.emplace_back("median_final_P_H1_truth_h1", median(finals_h1));
    return r;
}

SweepTable run_fig4(const RunConfig &config) {
    config.validate();
    SweepTable t;
    t.x_name = "N";
    t.x_values = config.grid.points();
    t.log_x = config.grid.log;
    auto values = parallel_map(t.x_values, [&](double n) {
        const double alpha = std::sqrt(n);
        const TruncationPolicy policy =
            config.cutoff ? TruncationPolicy{*config.cutoff} : TruncationPolicy::for_amplitude(alpha);
        return p_success_gaussian(alpha, policy, config.p);
    });
    const size_t best = argmax(values);
    t.notes.emplace_back("p", config.p);
    t.notes.emplace_back("argmax_N", t.x_values[best]);
    t.notes.emplace_back("max_p_success", values[best]);
    t.notes.emplace_back("min_p_success", min_of(values));
    t.series.push_back({"p_success_gaussian", "heterodyne measure-and-prepare spoofer", std::move(values)});
    return t;
}

SweepTable run_fig5(const RunConfig &config) {
    config.validate();
    SweepTable t;
    t.x_name = "p";
    t.x_values = config.grid.points();
    t.log_x = config.grid.log;
    auto quantum =
        parallel_map(t.x_values, [&](double p) { return p_success_two_pulse(ScenarioParams(config.n, p)); });
    auto prior = parallel_map(t.x_values, [](double p) { return p_success_prior_only(p); });
    t.series.push_back({"p_success_two_pulse", "optimal measure-and-prepare spoofer", std::move(quantum)});
    t.series.push_back({"p_success_prior_only", "perfect spoofer (gamma = 1)", std::move(prior)});
    t.notes.emplace_back("N", config.n);
    return t;
}

SweepTable run_scenario(const RunConfig &config) {
    switch (config.scenario) {
        case Scenario::kBpskVsP:
            return run_fig1(config);
        case Scenario::kBpskVsN:
            return run_fig2(config);
        case Scenario::kBayes:
            return run_fig3(config).table;
        case Scenario::kGaussVsN:
            return run_fig4(config);
        case Scenario::kTwoPulseVsP:
            return run_fig5(config);
    }
    throw std::invalid_argument("unknown scenario");
}

}  // namespace qspoof::tools
