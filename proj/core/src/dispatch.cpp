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

#include "ChainSim/dispatch.h"

#include <cassert>
#include <stdexcept>

namespace uiiit {
namespace chainsim {

std::string toString(const PolicyKind aPolicy) {
  switch (aPolicy) {
    case PolicyKind::Random:
      return "Random";
    case PolicyKind::RoundRobin:
      return "RoundRobin";
    case PolicyKind::LeastLoaded:
      return "LeastLoaded";
    case PolicyKind::StateLocal:
      return "StateLocal";
    case PolicyKind::MinLatencyEstimate:
      return "MinLatencyEstimate";
  }
  return "unknown";
}

PolicyKind policyFromString(const std::string& aName) {
  for (const auto myPolicy : allPolicies()) {
    if (aName == toString(myPolicy)) {
      return myPolicy;
    }
  }
  throw std::invalid_argument("invalid policy: " + aName);
}

const std::vector<PolicyKind>& allPolicies() {
  static const std::vector<PolicyKind> ret({
      PolicyKind::Random,
      PolicyKind::RoundRobin,
      PolicyKind::LeastLoaded,
      PolicyKind::StateLocal,
      PolicyKind::MinLatencyEstimate,
  });
  return ret;
}

double DispatchContext::backlog(const NodeId aWorker) const {
  const auto it = theBacklog.find(aWorker);
  return it == theBacklog.end() ? 0.0 : it->second;
}

std::size_t RrState::next(const std::string& aApp,
                          const std::string& aFunction,
                          const std::size_t  aCount) {
  assert(aCount > 0);
  auto& myCursor = theCursors[StateKey(aApp, aFunction)];
  // the candidate list may have shrunk since the last call
  const auto ret = myCursor % aCount;
  myCursor       = (ret + 1) % aCount;
  return ret;
}

std::size_t RrState::cursor(const std::string& aApp,
                            const std::string& aFunction) const {
  const auto it = theCursors.find(StateKey(aApp, aFunction));
  return it == theCursors.end() ? 0 : it->second;
}

double estimateCompletion(const DispatchContext& aContext,
                          const FunctionSpec&    aFunction,
                          const NodeId           aWorker,
                          const double           aInputBytes,
                          const StateMode        aMode) {
  const auto myNode = aContext.theRoutes.topology().node(aWorker);
  if (myNode == nullptr or myNode->theRole != Role::Worker) {
    throw std::invalid_argument("not a worker: " + std::to_string(aWorker));
  }

  const auto myTransfer = aContext.theRoutes.transferDelay(
      aContext.thePayloadLocation,
      aWorker,
      aInputBytes + embeddedPayloadOverhead(aFunction, aMode));

  auto myState = 0.0;
  if (remote(aMode) and aFunction.theStateSize > 0 and
      aContext.theRegistry.find(aContext.theAppId, aFunction.theId) !=
          nullptr) {
    myState = remoteStateAccess(aMode,
                                aContext.theRegistry,
                                aContext.theAppId,
                                aFunction,
                                aWorker,
                                aContext.theRoutes)
                  .theDelay;
  }

  const auto myQueue =
      aContext.backlog(aWorker) / (myNode->theCores * myNode->theCoreSpeed);
  const auto myCompute =
      stageIo(aFunction, aInputBytes).theComputeOps / myNode->theCoreSpeed;

  return myTransfer + myState + myQueue + myCompute;
}

namespace {

// argmin of aCost over the candidates, ties to the lowest id
template <class COST>
NodeId argmin(const std::vector<NodeId>& aCandidates, COST&& aCost) {
  assert(not aCandidates.empty());
  auto ret     = aCandidates.front();
  auto retCost = aCost(ret);
  for (std::size_t i = 1; i < aCandidates.size(); i++) {
    const auto myCandidate = aCandidates[i];
    const auto myCost      = aCost(myCandidate);
    if (myCost < retCost or (myCost == retCost and myCandidate < ret)) {
      ret     = myCandidate;
      retCost = myCost;
    }
  }
  return ret;
}

} // namespace

NodeId chooseWorker(const PolicyKind       aPolicy,
                    const DispatchContext& aContext,
                    RrState&               aRrState,
                    const FunctionSpec&    aFunction,
                    const double           aInputBytes,
                    const StateMode        aMode) {
  const auto& myCandidates = aContext.theCandidates;
  if (myCandidates.empty()) {
    throw std::invalid_argument("no candidate workers for function " +
                                aFunction.theId);
  }

  const auto myLeastLoaded = [&]() {
    return argmin(myCandidates,
                  [&](const NodeId aWorker) { return aContext.backlog(aWorker); });
  };

  switch (aPolicy) {
    case PolicyKind::Random:
      return myCandidates[aContext.theRng.index(myCandidates.size())];

    case PolicyKind::RoundRobin:
      return myCandidates[aRrState.next(
          aContext.theAppId, aFunction.theId, myCandidates.size())];

    case PolicyKind::LeastLoaded:
      return myLeastLoaded();

    case PolicyKind::StateLocal: {
      const auto myEntry =
          aContext.theRegistry.find(aContext.theAppId, aFunction.theId);
      if (myEntry != nullptr) {
        for (const auto myCandidate : myCandidates) {
          if (myCandidate == myEntry->theHost) {
            return myCandidate;
          }
        }
      }
      return myLeastLoaded();
    }

    case PolicyKind::MinLatencyEstimate:
      return argmin(myCandidates, [&](const NodeId aWorker) {
        return estimateCompletion(
            aContext, aFunction, aWorker, aInputBytes, aMode);
      });
  }
  throw std::invalid_argument("unknown policy");
}

} // namespace chainsim
} // namespace uiiit
