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

#include "ChainSim/stats.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace uiiit {
namespace chainsim {

std::size_t nearestRankIndex(const std::size_t aSize, const double aP) {
  if (aSize == 0) {
    throw std::invalid_argument("percentile of an empty sample");
  }
  if (not(aP > 0 and aP <= 1)) {
    throw std::invalid_argument("invalid percentile: " + std::to_string(aP));
  }
  // p * n may land a few ulps above an integer, e.g., 0.07 * 100
  const auto myRank = static_cast<std::size_t>(
      std::ceil(aP * static_cast<double>(aSize) * (1 - 1e-12)));
  return std::clamp<std::size_t>(myRank, 1, aSize) - 1;
}

double percentile(std::vector<double> aValues, const double aP) {
  const auto myIndex = nearestRankIndex(aValues.size(), aP);
  std::nth_element(aValues.begin(), aValues.begin() + myIndex, aValues.end());
  return aValues[myIndex];
}

SummaryStats summarize(const MetricsLog& aLog, const double aHorizon) {
  SummaryStats ret;
  ret.theInjected  = aLog.theInjected;
  ret.theCompleted = aLog.theCompleted;
  ret.theInFlight  = aLog.theInFlight;

  std::vector<double> myLatencies;
  auto                mySum = 0.0;
  for (const auto& myRecord : aLog.theInvocations) {
    ret.theStateBytes += myRecord.stateBytes();
    ret.theMigrations += myRecord.migrations();
    if (myRecord.theCompletion.has_value()) {
      myLatencies.emplace_back(myRecord.latency());
      mySum += myLatencies.back();
    }
  }

  if (not myLatencies.empty()) {
    ret.theMeanLatency = mySum / myLatencies.size();
    ret.theP50Latency  = percentile(myLatencies, 0.50);
    ret.theP95Latency  = percentile(myLatencies, 0.95);
    ret.theP99Latency  = percentile(myLatencies, 0.99);
  }
  ret.theThroughput = aHorizon > 0 ? aLog.theCompleted / aHorizon : 0.0;

  for (const auto& myWorker : aLog.theWorkers) {
    ret.theUtilization.emplace(myWorker.theId, myWorker.theUtilization);
  }
  return ret;
}

} // namespace chainsim
} // namespace uiiit
