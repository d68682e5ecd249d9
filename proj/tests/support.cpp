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

#include "support.h"

#include "ChainSim/output.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace uiiit {
namespace chainsim {
namespace test {

namespace {

template <class T>
void shuffle(std::vector<T>& aValues, RandomStream& aRng) {
  for (std::size_t i = aValues.size(); i > 1; i--) {
    std::swap(aValues[i - 1], aValues[aRng.index(i)]);
  }
}

template <class T>
const T& pick(const std::vector<T>& aValues, RandomStream& aRng) {
  return aValues.at(aRng.index(aValues.size()));
}

const LinkSpec* findLink(const Topology& aTopology,
                         const NodeId    aA,
                         const NodeId    aB) {
  for (const auto& myLink : aTopology.theLinks) {
    if ((myLink.theEndpointA == aA and myLink.theEndpointB == aB) or
        (myLink.theEndpointA == aB and myLink.theEndpointB == aA)) {
      return &myLink;
    }
  }
  return nullptr;
}

double bruteDelay(const Topology& aTopology,
                  const NodeId    aSrc,
                  const NodeId    aDst,
                  const double    aBytes) {
  return hopByHopDelay(
      aTopology, aSrc, bruteForceRoute(aTopology, aSrc, aDst).theHops, aBytes);
}

double stateDelayOracle(const Topology&      aTopology,
                        const StateRegistry& aRegistry,
                        const std::string&   aApp,
                        const FunctionSpec&  aFunction,
                        const NodeId         aExec,
                        const StateMode      aMode) {
  if (aMode == StateMode::Embedded or aFunction.theStateSize == 0) {
    return 0;
  }
  const auto myEntry = aRegistry.find(aApp, aFunction.theId);
  if (myEntry == nullptr or myEntry->theHost == aExec) {
    return 0;
  }
  const auto myFetch =
      bruteDelay(aTopology, myEntry->theHost, aExec, myEntry->theSize);
  if (aMode == StateMode::RemoteMigrate) {
    return myFetch;
  }
  return myFetch +
         bruteDelay(aTopology, aExec, myEntry->theHost, myEntry->theSize);
}

} // namespace

Topology randomTopology(RandomStream&     aRng,
                        const std::size_t aSize,
                        const double      aExtraLinkProb) {
  if (aSize < 2) {
    throw std::invalid_argument("a topology needs at least two nodes");
  }
  std::vector<NodeId> myIds(4 * aSize);
  std::iota(myIds.begin(), myIds.end(), 0);
  shuffle(myIds, aRng);
  myIds.resize(aSize);

  Topology ret;
  for (std::size_t i = 0; i < aSize; i++) {
    NodeSpec myNode;
    myNode.theId = myIds[i];
    const auto myDraw = aRng.uniform(0, 1);
    if (i == 0 or (i > 1 and myDraw < 0.15)) {
      myNode.theRole = Role::Client;
    } else if (i > 1 and myDraw < 0.35) {
      myNode.theRole = Role::Broker;
    } else {
      myNode.theRole      = Role::Worker;
      myNode.theCores     = 1 + aRng.index(4);
      myNode.theCoreSpeed = pick(std::vector<double>{1e6, 2e6, 4e6, 1e9}, aRng);
    }
    ret.theNodes.emplace_back(myNode);
  }

  const auto myLink = [&](const NodeId aA, const NodeId aB) {
    ret.theLinks.emplace_back(
        LinkSpec{aA,
                 aB,
                 (1.0 + aRng.index(8)) / 1024.0,
                 pick(std::vector<double>{1e6, 2e6, 4e6, 1.25e7}, aRng)});
  };
  for (std::size_t i = 1; i < aSize; i++) {
    myLink(myIds[aRng.index(i)], myIds[i]);
  }
  for (std::size_t i = 0; i < aSize; i++) {
    for (std::size_t j = i + 1; j < aSize; j++) {
      if (findLink(ret, myIds[i], myIds[j]) == nullptr and
          aRng.uniform(0, 1) < aExtraLinkProb) {
        myLink(myIds[i], myIds[j]);
      }
    }
  }
  return ret;
}

DagSpec randomDag(RandomStream&      aRng,
                  const std::size_t  aSize,
                  const double       aExtraEdgeProb,
                  const std::string& aAppId) {
  std::vector<std::size_t> myNumbers(100);
  std::iota(myNumbers.begin(), myNumbers.end(), 0);
  shuffle(myNumbers, aRng);

  DagSpec ret;
  ret.theAppId        = aAppId;
  ret.theEntryPayload = 1000.0 * (1 + aRng.index(100));
  for (std::size_t i = 0; i < aSize; i++) {
    ret.theVertices.emplace_back("f" + std::to_string(myNumbers[i]));
  }

  // every vertex but the first has an earlier predecessor and every vertex
  // but the last has a later successor
  std::set<std::pair<std::size_t, std::size_t>> myEdges;
  for (std::size_t v = 1; v < aSize; v++) {
    myEdges.emplace(aRng.index(v), v);
  }
  for (std::size_t v = 0; v + 1 < aSize; v++) {
    myEdges.emplace(v, v + 1 + aRng.index(aSize - v - 1));
  }
  for (std::size_t i = 0; i < aSize; i++) {
    for (std::size_t j = i + 1; j < aSize; j++) {
      if (aRng.uniform(0, 1) < aExtraEdgeProb) {
        myEdges.emplace(i, j);
      }
    }
  }
  for (const auto& [p, c] : myEdges) {
    ret.theEdges.emplace_back(ret.theVertices[p], ret.theVertices[c]);
  }
  shuffle(ret.theEdges, aRng);
  return ret;
}

FunctionCatalog randomFunctions(RandomStream&                   aRng,
                                const std::vector<std::string>& aNames,
                                const bool                      aStateful) {
  FunctionCatalog ret;
  for (const auto& myName : aNames) {
    FunctionSpec myFunc;
    myFunc.theId          = myName;
    myFunc.theFixedOps    = 1000.0 * (1 + aRng.index(50));
    myFunc.theOpsPerByte  = static_cast<double>(aRng.index(4));
    myFunc.theOutputRatio = pick(std::vector<double>{0, 0.5, 1, 2}, aRng);
    myFunc.theStateSize   = aStateful ? 256.0 * aRng.index(9) : 0.0;
    ret.emplace(myName, myFunc);
  }
  return ret;
}

PathCosts randomCosts(RandomStream& aRng, const Workflow& aWorkflow) {
  const auto myDraw = [&]() {
    return aRng.index(5) == 0 ? 0.0 : aRng.uniform(0, 1);
  };
  PathCosts ret;
  ret.theEntry = myDraw();
  for (std::size_t v = 0; v < aWorkflow.size(); v++) {
    ret.theState.emplace_back(myDraw());
    ret.theCompute.emplace_back(myDraw());
    for (const auto s : aWorkflow.successors(v)) {
      ret.theEdge.emplace(std::make_pair(v, s), myDraw());
    }
  }
  ret.theExit = myDraw();
  return ret;
}

BruteRoute bruteForceRoute(const Topology& aTopology,
                           const NodeId    aSrc,
                           const NodeId    aDst) {
  using Key = std::tuple<double, std::size_t, std::vector<NodeId>>;
  std::optional<Key> myBest;
  std::set<NodeId>   myVisited{aSrc};
  std::vector<NodeId> myHops;

  std::function<void(NodeId, double)> myVisit = [&](const NodeId aCur,
                                                    const double aProp) {
    if (aCur == aDst) {
      Key myKey{aProp, myHops.size(), myHops};
      if (not myBest.has_value() or myKey < *myBest) {
        myBest = std::move(myKey);
      }
      return;
    }
    for (const auto& myNode : aTopology.theNodes) {
      const auto myLink = findLink(aTopology, aCur, myNode.theId);
      if (myLink == nullptr or myVisited.count(myNode.theId) > 0) {
        continue;
      }
      myVisited.insert(myNode.theId);
      myHops.emplace_back(myNode.theId);
      myVisit(myNode.theId, aProp + myLink->thePropagation);
      myHops.pop_back();
      myVisited.erase(myNode.theId);
    }
  };
  myVisit(aSrc, 0.0);

  if (not myBest.has_value()) {
    throw std::invalid_argument("no path");
  }
  BruteRoute ret;
  ret.theHops        = std::get<2>(*myBest);
  ret.thePropagation = std::get<0>(*myBest);
  ret.theBottleneck  = std::numeric_limits<double>::infinity();
  auto myPrev        = aSrc;
  for (const auto myHop : ret.theHops) {
    ret.theBottleneck =
        std::min(ret.theBottleneck, findLink(aTopology, myPrev, myHop)->theRate);
    myPrev = myHop;
  }
  return ret;
}

double hopByHopDelay(const Topology&            aTopology,
                     const NodeId               aSrc,
                     const std::vector<NodeId>& aHops,
                     const double               aBytes) {
  auto ret    = 0.0;
  auto myPrev = aSrc;
  for (const auto myHop : aHops) {
    const auto myLink = findLink(aTopology, myPrev, myHop);
    if (myLink == nullptr) {
      throw std::invalid_argument("hop without a link");
    }
    ret += myLink->thePropagation + aBytes / myLink->theRate;
    myPrev = myHop;
  }
  return ret;
}

double bruteForceCriticalPath(const Workflow& aWorkflow,
                              const PathCosts& aCosts) {
  auto ret = -std::numeric_limits<double>::infinity();
  std::function<void(std::size_t, double)> myVisit = [&](const std::size_t v,
                                                         double aTime) {
    aTime += aCosts.theState[v];
    aTime += aCosts.theCompute[v];
    if (v == aWorkflow.sink()) {
      ret = std::max(ret, aTime + aCosts.theExit);
      return;
    }
    for (const auto s : aWorkflow.successors(v)) {
      myVisit(s, aTime + aCosts.theEdge.at({v, s}));
    }
  };
  myVisit(aWorkflow.source(), aCosts.theEntry);
  return ret;
}

double chainLatencyOracle(const std::vector<FunctionSpec>& aChain,
                          const std::vector<NodeId>&       aWorkers,
                          const Topology&                  aTopology,
                          const StateRegistry&             aRegistry,
                          const std::string&               aApp,
                          const StateMode                  aMode,
                          const NodeId                     aClient,
                          const double                     aEntryPayload) {
  auto ret        = 0.0;
  auto myLocation = aClient;
  auto myInput    = aEntryPayload;
  auto myPrevEmb  = 0.0;
  for (std::size_t i = 0; i < aChain.size(); i++) {
    const auto& myFunc = aChain[i];
    const auto  myExec = aWorkers.at(i);
    const auto  myEmb =
        aMode == StateMode::Embedded ? myFunc.theStateSize : 0.0;

    ret += bruteDelay(aTopology, myLocation, myExec, myInput + myPrevEmb + myEmb);
    ret += stateDelayOracle(
        aTopology, aRegistry, aApp, myFunc, myExec, aMode);
    ret += (myFunc.theFixedOps + myFunc.theOpsPerByte * myInput) /
           aTopology.node(myExec)->theCoreSpeed;

    myInput    = std::round(myFunc.theOutputRatio * myInput);
    myLocation = myExec;
    myPrevEmb  = myEmb;
  }
  return ret + bruteDelay(aTopology, myLocation, aClient, myInput + myPrevEmb);
}

double estimateOracle(const DispatchContext& aContext,
                      const FunctionSpec&    aFunction,
                      const NodeId           aWorker,
                      const double           aInputBytes,
                      const StateMode        aMode) {
  const auto& myTopology = aContext.theRoutes.topology();
  const auto  myNode     = myTopology.node(aWorker);
  const auto  myEmb =
      aMode == StateMode::Embedded ? aFunction.theStateSize : 0.0;
  const auto it      = aContext.theBacklog.find(aWorker);
  const auto myQueue = it == aContext.theBacklog.end() ? 0.0 : it->second;

  return bruteDelay(myTopology,
                    aContext.thePayloadLocation,
                    aWorker,
                    aInputBytes + myEmb) +
         stateDelayOracle(myTopology,
                          aContext.theRegistry,
                          aContext.theAppId,
                          aFunction,
                          aWorker,
                          aMode) +
         myQueue / (myNode->theCores * myNode->theCoreSpeed) +
         (aFunction.theFixedOps + aFunction.theOpsPerByte * aInputBytes) /
             myNode->theCoreSpeed;
}

DispatchCase randomDispatchCase(RandomStream&     aRng,
                                const std::size_t aMaxCandidates) {
  auto myTopology = randomTopology(aRng, 2 + aRng.index(6), 0.3);

  // clone some workers, with the same links
  const auto               myOriginals = myTopology.workers();
  std::map<NodeId, NodeId> myCloneOf;
  NodeId                   myNextId = 1000;
  for (const auto myWorker : myOriginals) {
    if (aRng.index(2) == 0) {
      continue;
    }
    auto myClone  = *myTopology.node(myWorker);
    myClone.theId = myNextId++;
    myCloneOf.emplace(myClone.theId, myWorker);
    myTopology.theNodes.emplace_back(myClone);
    const auto myLinks = myTopology.theLinks;
    for (const auto& myLink : myLinks) {
      if (myLink.theEndpointA == myWorker or myLink.theEndpointB == myWorker) {
        auto myCopy = myLink;
        (myCopy.theEndpointA == myWorker ? myCopy.theEndpointA
                                         : myCopy.theEndpointB) = myClone.theId;
        myTopology.theLinks.emplace_back(myCopy);
      }
    }
  }

  DispatchCase ret(myTopology);
  auto         myWorkers = myTopology.workers();
  shuffle(myWorkers, aRng);
  myWorkers.resize(
      1 + aRng.index(std::min<std::size_t>(aMaxCandidates, myWorkers.size())));
  ret.theCandidates = myWorkers;

  for (const auto myWorker : myOriginals) {
    ret.theBacklog[myWorker] = 4096.0 * aRng.index(4);
  }
  for (const auto& [myClone, myOriginal] : myCloneOf) {
    ret.theBacklog[myClone] = ret.theBacklog[myOriginal];
  }
  const auto& myIds      = ret.theRoutes.nodeIds();
  ret.thePayloadLocation = myIds[aRng.index(myIds.size())];

  ret.theFunction = randomFunctions(aRng, {"f"}, true).at("f");
  ret.theMode     = static_cast<StateMode>(aRng.index(3));
  ret.theInputBytes = 512.0 * aRng.index(20);
  if (aRng.index(4) != 0) {
    const auto& myAll = myTopology.workers();
    ret.theRegistry.place(ret.theAppId,
                          "f",
                          myAll[aRng.index(myAll.size())],
                          ret.theFunction.theStateSize);
  }
  return ret;
}

NodeId bruteForceMinLatency(const DispatchCase& aCase, RandomStream& aRng) {
  const auto myContext = aCase.context(aRng);
  std::optional<std::pair<double, NodeId>> myBest;
  for (const auto myWorker : aCase.theCandidates) {
    const std::pair<double, NodeId> myValue{
        estimateCompletion(myContext,
                           aCase.theFunction,
                           myWorker,
                           aCase.theInputBytes,
                           aCase.theMode),
        myWorker};
    if (not myBest.has_value() or myValue < *myBest) {
      myBest = myValue;
    }
  }
  return myBest.value().second;
}

ZeroLoadCase randomZeroLoadCase(RandomStream&     aRng,
                                const PolicyKind  aPolicy,
                                const StateMode   aMode,
                                const std::size_t aNodes,
                                const std::size_t aFunctions) {
  ZeroLoadCase ret;
  auto&        myScenario = ret.theScenario;
  myScenario.theTopology  = randomTopology(aRng, aNodes, 0.3);

  std::vector<std::string> myNames;
  for (std::size_t i = 0; i < aFunctions; i++) {
    myNames.emplace_back("g" + std::to_string(i));
  }
  shuffle(myNames, aRng);
  myScenario.theFunctions = randomFunctions(aRng, myNames, true);
  for (const auto& myName : myNames) {
    ret.theChain.emplace_back(myScenario.theFunctions.at(myName));
  }

  Application myApp;
  myApp.theDag = chainToDag(
      ChainSpec{"zl", myNames, 1000.0 * (1 + aRng.index(100))});
  myApp.theClient =
      pick(myScenario.theTopology.withRole(Role::Client), aRng);
  myApp.theFixedArrivals = std::vector<double>{aRng.index(1024) / 1024.0};
  myScenario.theApps.emplace_back(myApp);

  const auto myWorkers = myScenario.theTopology.workers();
  for (const auto& myName : myNames) {
    if (aRng.index(2) == 0) {
      const auto myHost = pick(myWorkers, aRng);
      myScenario.theInitialState.emplace_back(
          InitialState{"zl", myName, myHost});
      ret.theInitial.place(
          "zl", myName, myHost, myScenario.theFunctions.at(myName).theStateSize);
    }
  }

  myScenario.theHorizon   = 1;
  myScenario.thePolicy    = aPolicy;
  myScenario.theStateMode = aMode;
  myScenario.theSeed      = mix64(aRng.index(1 << 30));
  return ret;
}

Scenario mm1Scenario(const double   aLambda,
                     const double   aMu,
                     const double   aHorizon,
                     const uint64_t aSeed) {
  Scenario ret;
  ret.theTopology.theNodes = {NodeSpec{0, Role::Client, 0, 0},
                              NodeSpec{1, Role::Worker, 1, 1e6}};
  ret.theTopology.theLinks = {
      LinkSpec{0, 1, 0.0, std::numeric_limits<double>::infinity()}};
  ret.theFunctions.emplace("serve", FunctionSpec{"serve", 1e6 / aMu, 0, 0, 0});

  Application myApp;
  myApp.theDag    = chainToDag(ChainSpec{"mm1", {"serve"}, 1});
  myApp.theClient = 0;
  myApp.theRate   = aLambda;
  ret.theApps.emplace_back(myApp);

  ret.theHorizon       = aHorizon;
  ret.theComputeRandom = true;
  ret.thePolicy        = PolicyKind::LeastLoaded;
  ret.theSeed          = aSeed;
  return ret;
}

Scenario edgeScenario(const PolicyKind aPolicy,
                      const StateMode  aMode,
                      const double     aHorizon,
                      const uint64_t   aSeed) {
  auto ret                 = loadConfig(scenariosDir() / "edge_chain_dag.json")
                 .theScenario;
  ret.thePolicy    = aPolicy;
  ret.theStateMode = aMode;
  ret.theHorizon   = aHorizon;
  ret.theSeed      = aSeed;
  return ret;
}

namespace {

std::vector<std::string> splitCsv(const std::string& aLine) {
  std::vector<std::string> ret;
  std::string              myField;
  std::istringstream       myStream(aLine);
  while (std::getline(myStream, myField, ',')) {
    ret.emplace_back(myField);
  }
  if (not aLine.empty() and aLine.back() == ',') {
    ret.emplace_back();
  }
  return ret;
}

// element of rank ceil(aPercent * n / 100), with integer arithmetic
double nearestRank(const std::vector<double>& aSorted, const std::size_t aPercent) {
  const auto myRank = (aPercent * aSorted.size() + 99) / 100;
  return aSorted.at(myRank - 1);
}

} // namespace

std::vector<std::string> readLines(const std::filesystem::path& aPath) {
  std::ifstream myStream(aPath);
  if (not myStream) {
    throw std::runtime_error("cannot read " + aPath.string());
  }
  std::vector<std::string> ret;
  std::string              myLine;
  while (std::getline(myStream, myLine)) {
    ret.emplace_back(myLine);
  }
  return ret;
}

OfflineSummary summarizeOffline(const std::filesystem::path& aRunDir,
                                const double                 aHorizon) {
  OfflineSummary ret;

  const auto myInvocations = readLines(aRunDir / "invocations.csv");
  if (myInvocations.empty() or
      myInvocations[0] != "inv_id,app,arrival_s,completion_s,latency_s,stages,"
                          "state_bytes,migrations") {
    throw std::runtime_error("bad invocations.csv header");
  }
  std::vector<double> myLatencies;
  auto                mySum = 0.0;
  for (std::size_t i = 1; i < myInvocations.size(); i++) {
    const auto myFields = splitCsv(myInvocations[i]);
    if (myFields.size() != 8) {
      throw std::runtime_error("bad invocations.csv row: " + myInvocations[i]);
    }
    ret.theInjected++;
    ret.theStateBytes += std::stod(myFields[6]);
    ret.theMigrations += std::stoul(myFields[7]);
    if (not myFields[4].empty()) {
      ret.theCompleted++;
      myLatencies.emplace_back(std::stod(myFields[4]));
      mySum += myLatencies.back();
    }
  }
  if (not myLatencies.empty()) {
    ret.theMean = mySum / myLatencies.size();
    std::sort(myLatencies.begin(), myLatencies.end());
    ret.theP50 = nearestRank(myLatencies, 50);
    ret.theP95 = nearestRank(myLatencies, 95);
    ret.theP99 = nearestRank(myLatencies, 99);
  }
  ret.theThroughput = ret.theCompleted / aHorizon;

  const auto myWorkers = readLines(aRunDir / "workers.csv");
  if (myWorkers.empty() or myWorkers[0] != "worker_id,busy_s,utilization") {
    throw std::runtime_error("bad workers.csv header");
  }
  for (std::size_t i = 1; i < myWorkers.size(); i++) {
    const auto myFields = splitCsv(myWorkers[i]);
    ret.theUtilization.emplace(std::stoull(myFields.at(0)),
                               std::stod(myFields.at(2)));
  }
  return ret;
}

std::string invocationsCsv(const MetricsLog& aLog) {
  std::ostringstream myStream;
  writeInvocations(myStream, aLog);
  return myStream.str();
}

std::filesystem::path configsDir() {
  return CHAINSIM_TEST_CONFIGS;
}

std::filesystem::path scenariosDir() {
  return CHAINSIM_SCENARIOS;
}

} // namespace test
} // namespace chainsim
} // namespace uiiit
