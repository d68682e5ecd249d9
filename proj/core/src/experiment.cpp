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

#include "ChainSim/experiment.h"

#include "ChainSim/output.h"

#include "json.hpp"

#include <glog/logging.h>

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <functional>
#include <mutex>
#include <thread>

namespace uiiit {
namespace chainsim {

using json = nlohmann::json;

std::vector<ExperimentPoint> experimentPoints(const ScenarioConfig& aConfig) {
  return {ExperimentPoint{aConfig, std::nullopt, ""}};
}

std::vector<ExperimentPoint> experimentPoints(const SweepSpec& aSweep) {
  std::vector<ExperimentPoint> ret;
  for (std::size_t i = 0; i < aSweep.theValues.size(); i++) {
    ret.emplace_back(ExperimentPoint{pointConfig(aSweep, i),
                                     aSweep.theValues[i],
                                     "point-" + std::to_string(i)});
  }
  return ret;
}

namespace {

void writeFile(const std::filesystem::path& aPath,
               const std::function<void(std::ostream&)>& aWriter) {
  std::ofstream myStream(aPath, std::ios::binary | std::ios::trunc);
  if (not myStream) {
    throw std::runtime_error("cannot write " + aPath.string());
  }
  aWriter(myStream);
  myStream.flush();
  if (not myStream) {
    throw std::runtime_error("error while writing " + aPath.string());
  }
}

json optionalJson(const std::optional<double>& aValue) {
  return aValue.has_value() ? json(*aValue) : json(nullptr);
}

void writePlotdata(const std::filesystem::path&        aPath,
                   const std::vector<ExperimentPoint>& aPoints,
                   const std::vector<SummaryStats>&    aRecords) {
  writeFile(aPath, [&](std::ostream& aStream) {
    aStream << "point,value,replications,mean_latency_s,p95_latency_s,"
               "throughput\n";
    for (std::size_t p = 0; p < aPoints.size(); p++) {
      auto        myReplications = 0u;
      auto        myMean         = 0.0;
      auto        myP95          = 0.0;
      auto        myThroughput   = 0.0;
      std::size_t myWithLatency  = 0;
      for (const auto& myRecord : aRecords) {
        if (myRecord.thePoint != p) {
          continue;
        }
        myReplications++;
        myThroughput += myRecord.theThroughput;
        if (myRecord.theMeanLatency.has_value()) {
          myWithLatency++;
          myMean += *myRecord.theMeanLatency;
          myP95 += *myRecord.theP95Latency;
        }
      }
      aStream << p << ',' << aPoints[p].theValue.value_or("") << ','
              << myReplications << ',';
      if (myWithLatency > 0) {
        aStream << formatDouble(myMean / myWithLatency) << ','
                << formatDouble(myP95 / myWithLatency);
      } else {
        aStream << ',';
      }
      aStream << ','
              << formatDouble(myReplications > 0 ? myThroughput / myReplications
                                                 : 0.0)
              << '\n';
    }
  });
}

} // namespace

std::string summaryJson(const std::vector<SummaryStats>& aRecords) {
  json myRecords = json::array();
  for (const auto& myRecord : aRecords) {
    json myUtilization = json::object();
    for (const auto& [myWorker, myValue] : myRecord.theUtilization) {
      myUtilization[std::to_string(myWorker)] = myValue;
    }
    myRecords.push_back(json{
        {"point", myRecord.thePoint},
        {"value",
         myRecord.theValue.has_value() ? json(*myRecord.theValue)
                                       : json(nullptr)},
        {"seed", myRecord.theSeed},
        {"injected", myRecord.theInjected},
        {"completed", myRecord.theCompleted},
        {"in_flight", myRecord.theInFlight},
        {"mean_latency_s", optionalJson(myRecord.theMeanLatency)},
        {"p50_latency_s", optionalJson(myRecord.theP50Latency)},
        {"p95_latency_s", optionalJson(myRecord.theP95Latency)},
        {"p99_latency_s", optionalJson(myRecord.theP99Latency)},
        {"throughput", myRecord.theThroughput},
        {"state_bytes", myRecord.theStateBytes},
        {"migrations", myRecord.theMigrations},
        {"utilization", myUtilization},
    });
  }
  return json{{"records", myRecords}}.dump(2) + "\n";
}

std::vector<SummaryStats>
runExperiment(const std::vector<ExperimentPoint>& aPoints,
              const ExperimentOptions&            aOptions) {
  struct Task {
    std::size_t thePoint;
    uint64_t    theSeed;
  };
  std::vector<Task> myTasks;
  for (std::size_t p = 0; p < aPoints.size(); p++) {
    const auto& myConfig = aPoints[p].theConfig;
    for (unsigned r = 0; r < myConfig.theReplications; r++) {
      myTasks.emplace_back(Task{p, myConfig.theScenario.theSeed + r});
    }
  }

  std::error_code myErr;
  std::filesystem::create_directories(aOptions.theOutput, myErr);
  if (myErr) {
    throw std::runtime_error("cannot create output directory " +
                             aOptions.theOutput.string() + ": " +
                             myErr.message());
  }

  std::vector<SummaryStats> ret(myTasks.size());
  std::atomic<std::size_t>  myNext(0);
  std::mutex                myWriteMutex;
  std::exception_ptr        myError;

  const auto myWorker = [&]() {
    while (true) {
      const auto i = myNext++;
      if (i >= myTasks.size()) {
        return;
      }
      try {
        const auto& myTask  = myTasks[i];
        const auto& myPoint = aPoints[myTask.thePoint];
        auto        myScenario = myPoint.theConfig.theScenario;
        myScenario.theSeed     = myTask.theSeed;

        const auto myLog = run(myScenario);
        ret[i]           = summarize(myLog, myScenario.theHorizon);
        ret[i].thePoint  = myTask.thePoint;
        ret[i].theValue  = myPoint.theValue;
        ret[i].theSeed   = myTask.theSeed;

        const std::lock_guard<std::mutex> myLock(myWriteMutex);
        const auto myDir = aOptions.theOutput / myPoint.theSubdir /
                           ("seed-" + std::to_string(myTask.theSeed));
        std::filesystem::create_directories(myDir);
        writeFile(myDir / "invocations.csv",
                  [&](std::ostream& aStream) { writeInvocations(aStream, myLog); });
        writeFile(myDir / "links.csv",
                  [&](std::ostream& aStream) { writeLinks(aStream, myLog); });
        writeFile(myDir / "workers.csv",
                  [&](std::ostream& aStream) { writeWorkers(aStream, myLog); });
        LOG(INFO) << "completed point " << myTask.thePoint << " seed "
                  << myTask.theSeed << ": " << myLog.theCompleted
                  << " invocations";
      } catch (...) {
        const std::lock_guard<std::mutex> myLock(myWriteMutex);
        if (not myError) {
          myError = std::current_exception();
        }
        myNext = myTasks.size();
      }
    }
  };

  const auto myNumThreads =
      std::max(1u, std::min<unsigned>(aOptions.theJobs, myTasks.size()));
  std::vector<std::thread> myThreads;
  for (unsigned t = 1; t < myNumThreads; t++) {
    myThreads.emplace_back(myWorker);
  }
  myWorker();
  for (auto& myThread : myThreads) {
    myThread.join();
  }
  if (myError) {
    std::rethrow_exception(myError);
  }

  // tasks are already in (point, seed) order
  writeFile(aOptions.theOutput / "summary.json",
            [&](std::ostream& aStream) { aStream << summaryJson(ret); });
  if (aOptions.theEmitPlotdata) {
    writePlotdata(aOptions.theOutput / "plotdata.csv", aPoints, ret);
  }
  return ret;
}

} // namespace chainsim
} // namespace uiiit
