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

#include "ChainSim/engine.h"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace uiiit {
namespace chainsim {

/**
 * Nearest-rank percentile: the ceil(p * n)-th smallest value.
 *
 * \throw std::invalid_argument if aValues is empty or aP is not in (0, 1].
 */
double percentile(std::vector<double> aValues, const double aP);

//! Index (0-based) of the nearest-rank order statistic.
std::size_t nearestRankIndex(const std::size_t aSize, const double aP);

//! Summary of one replication of one scenario point.
struct SummaryStats {
  std::size_t                thePoint = 0;
  std::optional<std::string> theValue; //!< swept value, if any
  uint64_t                   theSeed  = 0;

  std::size_t theInjected  = 0;
  std::size_t theCompleted = 0;
  std::size_t theInFlight  = 0;

  // empty if no invocation completed
  std::optional<double> theMeanLatency;
  std::optional<double> theP50Latency;
  std::optional<double> theP95Latency;
  std::optional<double> theP99Latency;

  double                   theThroughput = 0; //!< completed / horizon
  double                   theStateBytes = 0;
  std::size_t              theMigrations = 0;
  std::map<NodeId, double> theUtilization;
};

/**
 * Statistics over the invocations in id order, considering the latency
 * only of those completed.
 */
SummaryStats summarize(const MetricsLog& aLog, const double aHorizon);

} // namespace chainsim
} // namespace uiiit
