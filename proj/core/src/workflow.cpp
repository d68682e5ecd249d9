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

#include "ChainSim/workflow.h"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace uiiit {
namespace chainsim {

DagSpec chainToDag(const ChainSpec& aChain) {
  DagSpec ret;
  ret.theAppId        = aChain.theAppId;
  ret.theVertices     = aChain.theFunctions;
  ret.theEntryPayload = aChain.theEntryPayload;
  for (std::size_t i = 1; i < aChain.theFunctions.size(); i++) {
    ret.theEdges.emplace_back(aChain.theFunctions[i - 1],
                              aChain.theFunctions[i]);
  }
  return ret;
}

namespace {

// successors of each vertex, ignoring edges with unknown endpoints
std::map<std::string, std::set<std::string>>
successorMap(const DagSpec& aDag, const std::set<std::string>& aVertices) {
  std::map<std::string, std::set<std::string>> ret;
  for (const auto& myVertex : aVertices) {
    ret[myVertex];
  }
  for (const auto& [myFrom, myTo] : aDag.theEdges) {
    if (aVertices.count(myFrom) > 0 and aVertices.count(myTo) > 0) {
      ret[myFrom].insert(myTo);
    }
  }
  return ret;
}

// Kahn's algorithm with lowest-id-first; may return fewer vertices than
// there are in the graph if there is a cycle
std::vector<std::string>
kahn(const std::map<std::string, std::set<std::string>>& aSuccessors) {
  std::map<std::string, std::size_t> myInDegree;
  for (const auto& [myVertex, mySuccessors] : aSuccessors) {
    myInDegree.emplace(myVertex, 0);
  }
  for (const auto& [myVertex, mySuccessors] : aSuccessors) {
    for (const auto& mySucc : mySuccessors) {
      myInDegree[mySucc]++;
    }
  }
  std::set<std::string> myReady;
  for (const auto& [myVertex, myDegree] : myInDegree) {
    if (myDegree == 0) {
      myReady.insert(myVertex);
    }
  }
  std::vector<std::string> ret;
  while (not myReady.empty()) {
    const auto myCur = *myReady.begin();
    myReady.erase(myReady.begin());
    ret.emplace_back(myCur);
    for (const auto& mySucc : aSuccessors.at(myCur)) {
      if (--myInDegree[mySucc] == 0) {
        myReady.insert(mySucc);
      }
    }
  }
  return ret;
}

} // namespace

std::vector<std::string> validateDag(const DagSpec& aDag) {
  std::vector<std::string> ret;

  if (aDag.theVertices.empty()) {
    ret.emplace_back("no vertices");
    return ret;
  }
  if (not(aDag.theEntryPayload > 0) or not std::isfinite(aDag.theEntryPayload)) {
    ret.emplace_back("entry payload must be positive");
  } else if (std::floor(aDag.theEntryPayload) != aDag.theEntryPayload) {
    ret.emplace_back("entry payload must be a whole number of bytes");
  }

  std::set<std::string> myVertices;
  for (const auto& myVertex : aDag.theVertices) {
    if (not myVertices.insert(myVertex).second) {
      ret.emplace_back("duplicate vertex " + myVertex);
    }
  }

  std::set<Edge> myEdges;
  for (const auto& myEdge : aDag.theEdges) {
    const auto myName = myEdge.first + "->" + myEdge.second;
    if (myVertices.count(myEdge.first) == 0 or
        myVertices.count(myEdge.second) == 0) {
      ret.emplace_back("edge " + myName + " has unknown endpoint");
    } else if (not myEdges.insert(myEdge).second) {
      ret.emplace_back("duplicate edge " + myName);
    }
  }

  const auto mySuccessors = successorMap(aDag, myVertices);
  if (kahn(mySuccessors).size() != myVertices.size()) {
    ret.emplace_back("cycle detected");
    return ret;
  }

  std::set<std::string> mySources(myVertices);
  std::set<std::string> mySinks;
  for (const auto& [myVertex, mySucc] : mySuccessors) {
    if (mySucc.empty()) {
      mySinks.insert(myVertex);
    }
    for (const auto& myOther : mySucc) {
      mySources.erase(myOther);
    }
  }
  if (mySources.size() > 1) {
    ret.emplace_back("multiple sources");
  }
  if (mySinks.size() > 1) {
    ret.emplace_back("multiple sinks");
  }
  if (mySources.size() != 1 or mySinks.size() != 1) {
    return ret;
  }

  // every vertex must be reachable from the source and reach the sink
  std::set<std::string> myForward({*mySources.begin()});
  std::set<std::string> myBackward({*mySinks.begin()});
  for (const auto& myVertex : kahn(mySuccessors)) {
    if (myForward.count(myVertex) > 0) {
      myForward.insert(mySuccessors.at(myVertex).begin(),
                       mySuccessors.at(myVertex).end());
    }
  }
  auto myOrder = kahn(mySuccessors);
  std::reverse(myOrder.begin(), myOrder.end());
  for (const auto& myVertex : myOrder) {
    for (const auto& mySucc : mySuccessors.at(myVertex)) {
      if (myBackward.count(mySucc) > 0) {
        myBackward.insert(myVertex);
      }
    }
  }
  for (const auto& myVertex : myVertices) {
    if (myForward.count(myVertex) == 0 or myBackward.count(myVertex) == 0) {
      ret.emplace_back("vertex " + myVertex + " not on a source-sink path");
    }
  }

  return ret;
}

std::vector<std::string> validate(const FunctionSpec& aFunction) {
  std::vector<std::string> ret;
  const auto               myName = "function " + aFunction.theId;
  if (aFunction.theId.empty()) {
    ret.emplace_back("function with empty id");
  }
  const std::vector<std::pair<double, const char*>> myFields({
      {aFunction.theFixedOps, "fixed_ops"},
      {aFunction.theOpsPerByte, "ops_per_byte"},
      {aFunction.theOutputRatio, "output_ratio"},
      {aFunction.theStateSize, "state_size"},
  });
  for (const auto& [myValue, myField] : myFields) {
    if (not(myValue >= 0) or not std::isfinite(myValue)) {
      ret.emplace_back(myName + " has invalid " + myField);
    }
  }
  if (std::isfinite(aFunction.theStateSize) and
      std::floor(aFunction.theStateSize) != aFunction.theStateSize) {
    ret.emplace_back(myName + " has fractional state_size");
  }
  if (not(aFunction.theFixedOps + aFunction.theOpsPerByte > 0)) {
    ret.emplace_back(myName + " does no work");
  }
  return ret;
}

std::vector<std::string> validateWorkflow(const DagSpec&         aDag,
                                          const FunctionCatalog& aFunctions) {
  auto ret = validateDag(aDag);
  for (const auto& myVertex : aDag.theVertices) {
    const auto it = aFunctions.find(myVertex);
    if (it == aFunctions.end()) {
      ret.emplace_back("app " + aDag.theAppId + " uses unknown function " +
                       myVertex);
    } else {
      const auto myErrors = validate(it->second);
      ret.insert(ret.end(), myErrors.begin(), myErrors.end());
    }
  }
  return ret;
}

std::set<std::string> enabledFrontier(const DagSpec&               aDag,
                                      const std::set<std::string>& aCompleted) {
  std::map<std::string, std::set<std::string>> myPredecessors;
  for (const auto& myVertex : aDag.theVertices) {
    myPredecessors[myVertex];
  }
  for (const auto& [myFrom, myTo] : aDag.theEdges) {
    myPredecessors[myTo].insert(myFrom);
  }

  for (const auto& myDone : aCompleted) {
    const auto it = myPredecessors.find(myDone);
    if (it == myPredecessors.end()) {
      throw std::invalid_argument("completed vertex " + myDone +
                                  " is not in the DAG");
    }
    for (const auto& myPred : it->second) {
      if (aCompleted.count(myPred) == 0) {
        throw std::invalid_argument("completed vertex " + myDone +
                                    " has predecessor " + myPred +
                                    " not completed");
      }
    }
  }

  std::set<std::string> ret;
  for (const auto& [myVertex, myPreds] : myPredecessors) {
    if (aCompleted.count(myVertex) > 0) {
      continue;
    }
    if (std::all_of(myPreds.begin(), myPreds.end(), [&](const auto& aPred) {
          return aCompleted.count(aPred) > 0;
        })) {
      ret.insert(myVertex);
    }
  }
  return ret;
}

StageIo stageIo(const FunctionSpec& aFunction, const double aInputBytes) {
  assert(aInputBytes >= 0);
  return StageIo{
      aFunction.theFixedOps + aFunction.theOpsPerByte * aInputBytes,
      std::round(aFunction.theOutputRatio * aInputBytes),
  };
}

double joinPayload(std::span<const double> aIncoming) {
  if (aIncoming.empty()) {
    throw std::invalid_argument("join with no inputs");
  }
  return std::accumulate(aIncoming.begin(), aIncoming.end(), 0.0);
}

std::vector<std::string> topologicalOrder(const DagSpec& aDag) {
  const std::set<std::string> myVertices(aDag.theVertices.begin(),
                                         aDag.theVertices.end());
  auto ret = kahn(successorMap(aDag, myVertices));
  if (ret.size() != myVertices.size()) {
    throw std::invalid_argument("cycle detected in app " + aDag.theAppId);
  }
  return ret;
}

Workflow::Workflow(const DagSpec& aDag, const FunctionCatalog& aFunctions)
    : theDag(aDag)
    , theFunctions()
    , thePredecessors()
    , theSuccessors()
    , theIndex() {
  const auto myViolations = validateWorkflow(aDag, aFunctions);
  if (not myViolations.empty()) {
    throw std::invalid_argument("invalid workflow " + aDag.theAppId + ": " +
                                myViolations.front());
  }
  for (const auto& myName : topologicalOrder(aDag)) {
    theIndex.emplace(myName, theFunctions.size());
    theFunctions.emplace_back(aFunctions.at(myName));
  }
  thePredecessors.resize(size());
  theSuccessors.resize(size());
  for (const auto& [myFrom, myTo] : aDag.theEdges) {
    thePredecessors[index(myTo)].emplace_back(index(myFrom));
    theSuccessors[index(myFrom)].emplace_back(index(myTo));
  }
  for (std::size_t i = 0; i < size(); i++) {
    std::sort(thePredecessors[i].begin(), thePredecessors[i].end());
    std::sort(theSuccessors[i].begin(), theSuccessors[i].end());
  }
  assert(thePredecessors[source()].empty());
  assert(theSuccessors[sink()].empty());
}

std::size_t Workflow::index(const std::string& aFunction) const {
  const auto it = theIndex.find(aFunction);
  if (it == theIndex.end()) {
    throw std::out_of_range("function " + aFunction + " not in app " +
                            appId());
  }
  return it->second;
}

bool Workflow::linear() const noexcept {
  for (std::size_t i = 0; i < size(); i++) {
    if (thePredecessors[i].size() > 1 or theSuccessors[i].size() > 1) {
      return false;
    }
  }
  return true;
}

std::string Workflow::toString() const {
  std::stringstream ret;
  ret << "app " << appId() << " (" << (linear() ? "chain" : "dag") << ", "
      << size() << " functions, entry payload " << entryPayload() << " B)\n";
  for (std::size_t i = 0; i < size(); i++) {
    const auto& myFunc = theFunctions[i];
    ret << "  " << myFunc.theId << ": fixed_ops " << myFunc.theFixedOps
        << ", ops_per_byte " << myFunc.theOpsPerByte << ", output_ratio "
        << myFunc.theOutputRatio << ", state_size " << myFunc.theStateSize
        << " B, successors [";
    for (std::size_t j = 0; j < theSuccessors[i].size(); j++) {
      ret << (j == 0 ? "" : ",") << theFunctions[theSuccessors[i][j]].theId;
    }
    ret << "]\n";
  }
  return ret.str();
}

} // namespace chainsim
} // namespace uiiit
