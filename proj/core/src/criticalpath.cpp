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

#include "ChainSim/criticalpath.h"

#include <algorithm>
#include <cassert>
#include <limits>
#include <stdexcept>

namespace uiiit {
namespace chainsim {

PathCosts zeroLoadCosts(const Workflow&      aWorkflow,
                        const Assignment&    aAssignment,
                        const RouteTable&    aRoutes,
                        const StateRegistry& aRegistry,
                        const StateMode      aMode,
                        const NodeId         aClient,
                        const double         aEntryPayload) {
  const auto N = aWorkflow.size();

  std::vector<NodeId> myExec(N);
  std::vector<double> mySpeed(N);
  for (std::size_t v = 0; v < N; v++) {
    const auto& myName = aWorkflow.function(v).theId;
    const auto  it     = aAssignment.find(myName);
    if (it == aAssignment.end()) {
      throw std::invalid_argument("function " + myName + " is not assigned");
    }
    const auto myNode = aRoutes.topology().node(it->second);
    if (myNode == nullptr or myNode->theRole != Role::Worker) {
      throw std::invalid_argument("function " + myName +
                                  " assigned to non-worker node " +
                                  std::to_string(it->second));
    }
    myExec[v]  = it->second;
    mySpeed[v] = myNode->theCoreSpeed;
  }

  const auto myOverhead = [&](const std::size_t v) {
    return embeddedPayloadOverhead(aWorkflow.function(v), aMode);
  };

  PathCosts ret;
  ret.theState.resize(N, 0);
  ret.theCompute.resize(N, 0);

  std::vector<double> myOutput(N, 0);
  for (std::size_t v = 0; v < N; v++) {
    const auto& myFunc = aWorkflow.function(v);

    auto myInput = aEntryPayload;
    if (v != aWorkflow.source()) {
      std::vector<double> myIncoming;
      for (const auto p : aWorkflow.predecessors(v)) {
        myIncoming.emplace_back(myOutput[p]);
      }
      myInput = joinPayload(myIncoming);
    }
    const auto myIo = stageIo(myFunc, myInput);
    myOutput[v]     = myIo.theOutputBytes;

    ret.theCompute[v] = myIo.theComputeOps / mySpeed[v];
    if (remote(aMode) and myFunc.theStateSize > 0 and
        aRegistry.find(aWorkflow.appId(), myFunc.theId) != nullptr) {
      ret.theState[v] = remoteStateAccess(aMode,
                                          aRegistry,
                                          aWorkflow.appId(),
                                          myFunc,
                                          myExec[v],
                                          aRoutes)
                            .theDelay;
    }

    if (v == aWorkflow.source()) {
      ret.theEntry = aRoutes.transferDelay(
          aClient, myExec[v], aEntryPayload + myOverhead(v));
    }
    for (const auto p : aWorkflow.predecessors(v)) {
      ret.theEdge.emplace(
          std::make_pair(p, v),
          aRoutes.transferDelay(
              myExec[p], myExec[v], myOutput[p] + myOverhead(p) + myOverhead(v)));
    }
  }

  const auto mySink = aWorkflow.sink();
  ret.theExit       = aRoutes.transferDelay(
      myExec[mySink], aClient, myOutput[mySink] + myOverhead(mySink));
  return ret;
}

double criticalPathTime(const Workflow& aWorkflow, const PathCosts& aCosts) {
  const auto N = aWorkflow.size();
  assert(aCosts.theState.size() == N);
  assert(aCosts.theCompute.size() == N);

  std::vector<double> myFinish(N, 0);
  for (std::size_t v = 0; v < N; v++) {
    auto myStart = -std::numeric_limits<double>::infinity();
    if (v == aWorkflow.source()) {
      myStart = 0.0 + aCosts.theEntry;
    }
    for (const auto p : aWorkflow.predecessors(v)) {
      myStart = std::max(myStart, myFinish[p] + aCosts.theEdge.at({p, v}));
    }
    myStart += aCosts.theState[v];
    myFinish[v] = myStart + aCosts.theCompute[v];
  }
  return myFinish[aWorkflow.sink()] + aCosts.theExit;
}

double criticalPathTime(const Workflow&      aWorkflow,
                        const Assignment&    aAssignment,
                        const RouteTable&    aRoutes,
                        const StateRegistry& aRegistry,
                        const StateMode      aMode,
                        const NodeId         aClient) {
  return criticalPathTime(aWorkflow,
                          zeroLoadCosts(aWorkflow,
                                        aAssignment,
                                        aRoutes,
                                        aRegistry,
                                        aMode,
                                        aClient,
                                        aWorkflow.entryPayload()));
}

} // namespace chainsim
} // namespace uiiit
