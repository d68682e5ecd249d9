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
#include "ChainSim/criticalpath.h"
#include "ChainSim/dispatch.h"
#include "ChainSim/engine.h"
#include "ChainSim/random.h"
#include "ChainSim/state.h"
#include "ChainSim/topology.h"
#include "ChainSim/workflow.h"

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace uiiit {
namespace chainsim {
namespace test {

// generators

/**
 * Connected topology with aSize nodes: node ids are distinct but not
 * contiguous, the first node is a client, at least one node is a worker.
 * Propagation delays are multiples of 1/1024 s so that path sums are exact
 * and ties are frequent.
 */
Topology randomTopology(RandomStream&     aRng,
                        const std::size_t aSize,
                        const double      aExtraLinkProb);

//! Valid DAG with aSize vertices and random names, single source and sink.
DagSpec randomDag(RandomStream&      aRng,
                  const std::size_t  aSize,
                  const double       aExtraEdgeProb,
                  const std::string& aAppId = "app");

//! A function for each name, with random costs.
FunctionCatalog randomFunctions(RandomStream&                   aRng,
                                const std::vector<std::string>& aNames,
                                const bool                      aStateful);

//! Random path costs for a workflow.
PathCosts randomCosts(RandomStream& aRng, const Workflow& aWorkflow);

// oracles

//! Best route by enumeration of all the simple paths.
struct BruteRoute {
  std::vector<NodeId> theHops;
  double              thePropagation = 0;
  double              theBottleneck  = 0;
};
BruteRoute bruteForceRoute(const Topology& aTopology,
                           const NodeId    aSrc,
                           const NodeId    aDst);

//! Store-and-forward delay computed hop by hop along a hop sequence.
double hopByHopDelay(const Topology&            aTopology,
                     const NodeId               aSrc,
                     const std::vector<NodeId>& aHops,
                     const double               aBytes);

//! Longest source-to-sink path by enumeration of all the paths.
double bruteForceCriticalPath(const Workflow& aWorkflow, const PathCosts& aCosts);

/**
 * Zero-load latency of a single invocation of a chain, summed stage by stage
 * over brute-force routes.
 */
double chainLatencyOracle(const std::vector<FunctionSpec>& aChain,
                          const std::vector<NodeId>&       aWorkers,
                          const Topology&                  aTopology,
                          const StateRegistry&             aRegistry,
                          const std::string&               aApp,
                          const StateMode                  aMode,
                          const NodeId                     aClient,
                          const double                     aEntryPayload);

//! Completion estimate recomputed term by term over brute-force routes.
double estimateOracle(const DispatchContext& aContext,
                      const FunctionSpec&    aFunction,
                      const NodeId           aWorker,
                      const double           aInputBytes,
                      const StateMode        aMode);

// dispatch contexts

//! Owns everything a DispatchContext refers to.
struct DispatchCase {
  explicit DispatchCase(const Topology& aTopology)
      : theRoutes(aTopology) {
  }

  RouteTable               theRoutes;
  StateRegistry            theRegistry;
  std::string              theAppId = "app";
  std::vector<NodeId>      theCandidates;
  std::map<NodeId, double> theBacklog;
  NodeId                   thePayloadLocation = 0;
  FunctionSpec             theFunction;
  double                   theInputBytes = 0;
  StateMode                theMode       = StateMode::Embedded;

  DispatchContext context(RandomStream& aRng) const {
    return DispatchContext{theRoutes,
                           theRegistry,
                           aRng,
                           theAppId,
                           theCandidates,
                           theBacklog,
                           thePayloadLocation};
  }
};

/**
 * Random dispatch instance with up to aMaxCandidates candidates, listed in
 * random order. Some workers are clones of others, with identical links and
 * backlog, to produce ties.
 */
DispatchCase randomDispatchCase(RandomStream&     aRng,
                                const std::size_t aMaxCandidates);

//! Exhaustive argmin of the estimator, ties to the lowest worker id.
NodeId bruteForceMinLatency(const DispatchCase& aCase, RandomStream& aRng);

// scenarios

//! Single-invocation scenario over a random topology and chain.
struct ZeroLoadCase {
  Scenario                  theScenario;
  std::vector<FunctionSpec> theChain;
  StateRegistry             theInitial;
};
ZeroLoadCase randomZeroLoadCase(RandomStream&     aRng,
                                const PolicyKind  aPolicy,
                                const StateMode   aMode,
                                const std::size_t aNodes,
                                const std::size_t aFunctions);

/**
 * One client, one single-core worker, a single-function chain with
 * exponential service of rate aMu and Poisson arrivals of rate aLambda,
 * negligible network delay.
 */
Scenario mm1Scenario(const double   aLambda,
                     const double   aMu,
                     const double   aHorizon,
                     const uint64_t aSeed);

//! Multi-app edge scenario with chains and a DAG, several workers.
Scenario edgeScenario(const PolicyKind aPolicy,
                      const StateMode  aMode,
                      const double     aHorizon,
                      const uint64_t   aSeed);

/**
 * Summary statistics recomputed from the invocations.csv and workers.csv
 * files of a run directory. Percentiles use integer nearest-rank indices.
 */
struct OfflineSummary {
  std::size_t              theInjected  = 0;
  std::size_t              theCompleted = 0;
  std::optional<double>    theMean;
  std::optional<double>    theP50;
  std::optional<double>    theP95;
  std::optional<double>    theP99;
  double                   theThroughput = 0;
  double                   theStateBytes = 0;
  std::size_t              theMigrations = 0;
  std::map<NodeId, double> theUtilization;
};
OfflineSummary summarizeOffline(const std::filesystem::path& aRunDir,
                                const double                 aHorizon);

//! Lines of a text file, without terminators.
std::vector<std::string> readLines(const std::filesystem::path& aPath);

//! Serialized invocations.csv of a run.
std::string invocationsCsv(const MetricsLog& aLog);

//! Directory with the bundled test configurations.
std::filesystem::path configsDir();

//! Directory with the bundled scenarios.
std::filesystem::path scenariosDir();

} // namespace test
} // namespace chainsim
} // namespace uiiit
