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

#ifndef QSPOOF_TOOLS_SWEEP_H
#define QSPOOF_TOOLS_SWEEP_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qspoof/bayes.h"

namespace qspoof::tools {

struct Grid {
    double min = 0.0;
    double max = 1.0;
    size_t count = 101;
    bool log = false;

    /// Throws std::invalid_argument unless count >= 2, min < max and (log => min > 0).
    void validate() const;
    /// Endpoints exact; log grids are geometric.
    std::vector<double> points() const;
};

struct Series {
    std::string name;
    std::string label;
    std::vector<double> values;
};

/// One figure's worth of curves sharing an x axis.
struct SweepTable {
    std::string x_name;
    std::vector<double> x_values;
    std::vector<Series> series;
    bool log_x = false;
    /// Scalar annotations (argmax, minimum, ...) reported alongside the table.
    std::vector<std::pair<std::string, double>> notes;

    /// Throws std::invalid_argument if a series length differs from x_values or
    /// x_values is not strictly increasing.
    void validate() const;
    const Series &find(const std::string &name) const;
    std::optional<double> note(const std::string &key) const;
};

enum class Scenario { kBpskVsP, kBpskVsN, kBayes, kGaussVsN, kTwoPulseVsP };
enum class Format { kCsv, kSvg };

std::optional<Scenario> parse_scenario(const std::string &name);
std::string scenario_name(Scenario scenario);

struct RunConfig {
    Scenario scenario = Scenario::kBpskVsP;
    Grid grid;
    double n = 0.1;
    double p = 0.5;
    uint64_t seed = 1;
    uint64_t n_pulses = 200;
    /// Replicate trajectories summarised in fig3 notes.
    uint64_t n_trials = 500;
    std::optional<size_t> cutoff;
    std::string out;
    Format format = Format::kCsv;
    ProjectorMode projector = ProjectorMode::kFixed;

    void validate() const;
};

/// Figure defaults: 101-point linear p-grids on [0, 1], 61-point log N-grids,
/// N = 0.1 where the scenario fixes it.
RunConfig default_config(Scenario scenario);

double median(std::vector<double> values);

/// Index of the largest value (first occurrence).
size_t argmax(const std::vector<double> &values);

SweepTable run_fig1(const RunConfig &config);
SweepTable run_fig2(const RunConfig &config);

struct Fig3Result {
    BayesTrajectory truth_h0;
    BayesTrajectory truth_h1;
    SweepTable table;
};
Fig3Result run_fig3(const RunConfig &config);

SweepTable run_fig4(const RunConfig &config);
SweepTable run_fig5(const RunConfig &config);

/// Dispatches on config.scenario.
SweepTable run_scenario(const RunConfig &config);

}  // namespace qspoof::tools

#endif  // QSPOOF_TOOLS_SWEEP_H
