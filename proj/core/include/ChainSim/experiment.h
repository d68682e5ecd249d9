/*
              __ __ __
             |__|__|  | __
             |  |  |  ||__|
  ___ ___ __ |  |  |  |
 |   |   |  ||  |  |  |    Ubiquitous Internet @ IIT-CNR
 |   |   |  ||  |  |  |    C++ edge computing libraries and tools
 |_______|__||__|__|__|    chainsim: stateful function chains simulator

Licensed under the MIT License <http://opensource.org/licenses/MIT>
Copyright (c) 2026 The chainsim authors

Permission is hereby  granted, free of charge, to any  person obtaining a copy
of this software and associated  documentation files (the "Software"), to deal
in the Software  without restriction, including without  limitation the rights
to  use, copy,  modify, merge,  publish, distribute,  sublicense, and/or  sell
copies  of  the Software,  and  to  permit persons  to  whom  the Software  is
furnished to do so, subject to the following conditions:

The above copyright notice and this permission notice shall be included in all
copies or substantial portions of the Software.

THE SOFTWARE  IS PROVIDED "AS  IS", WITHOUT WARRANTY  OF ANY KIND,  EXPRESS OR
IMPLIED,  INCLUDING BUT  NOT  LIMITED TO  THE  WARRANTIES OF  MERCHANTABILITY,
FITNESS FOR  A PARTICULAR PURPOSE AND  NONINFRINGEMENT. IN NO EVENT  SHALL THE
AUTHORS  OR COPYRIGHT  HOLDERS  BE  LIABLE FOR  ANY  CLAIM,  DAMAGES OR  OTHER
LIABILITY, WHETHER IN AN ACTION OF  CONTRACT, TORT OR OTHERWISE, ARISING FROM,
OUT OF OR IN CONNECTION WITH THE SOFTWARE  OR THE USE OR OTHER DEALINGS IN THE
SOFTWARE.
*/

#pragma once

#include "ChainSim/config.h"
#include "ChainSim/stats.h"

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace uiiit {
namespace chainsim {

//! One scenario point of an experiment, replicated with consecutive seeds.
struct ExperimentPoint {
  ScenarioConfig             theConfig;
  std::optional<std::string> theValue;  //!< swept value, if any
  std::filesystem::path      theSubdir; //!< relative to the output dir
};

struct ExperimentOptions {
  std::filesystem::path theOutput;
  unsigned              theJobs         = 1;
  bool                  theEmitPlotdata = false;
};

//! The single point of a plain run, stored in the output dir.
std::vector<ExperimentPoint> experimentPoints(const ScenarioConfig& aConfig);

//! One point per sweep value, stored in point-<k> subdirectories.
std::vector<ExperimentPoint> experimentPoints(const SweepSpec& aSweep);

/**
 * Run all the replications of all the points, replication r with seed
 * base + r, and write:
 *
 * - <subdir>/seed-<seed>/{invocations,links,workers}.csv for each run;
 * - summary.json, with one record per (point, seed), sorted;
 * - plotdata.csv, if requested, with the replication-averaged latency of
 *   each point.
 *
 * Replications run on up to theJobs threads; results do not depend on it.
 *
 * \throw std::runtime_error if the output cannot be written or a run fails.
 */
std::vector<SummaryStats>
runExperiment(const std::vector<ExperimentPoint>& aPoints,
              const ExperimentOptions&            aOptions);

//! Serialize summary records as the content of summary.json.
std::string summaryJson(const std::vector<SummaryStats>& aRecords);

} // namespace chainsim
} // namespace uiiit
