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

#include "ChainSim/topology.h"

#include <glog/logging.h>

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

namespace uiiit {
namespace chainsim {

std::string toString(const Role aRole) {
  switch (aRole) {
    case Role::Client:
      return "client";
    case Role::Broker:
      return "broker";
    case Role::Worker:
      return "worker";
  }
  return "unknown";
}

Role roleFromString(const std::string& aName) {
  for (const auto myRole : {Role::Client, Role::Broker, Role::Worker}) {
    if (aName == toString(myRole)) {
      return myRole;
    }
  }
  throw std::invalid_argument("invalid node role: " + aName);
}

const NodeSpec* Topology::node(const NodeId aId) const noexcept {
  for (const auto& myNode : theNodes) {
    if (myNode.theId == aId) {
      return &myNode;
    }
  }
  return nullptr;
}

std::vector<NodeId> Topology::withRole(const Role aRole) const {
  std::vector<NodeId> ret;
  for (const auto& myNode : theNodes) {
    if (myNode.theRole == aRole) {
      ret.emplace_back(myNode.theId);
    }
  }
  std::sort(ret.begin(), ret.end());
  ret.erase(std::unique(ret.begin(), ret.end()), ret.end());
  return ret;
}

std::vector<std::string> validate(const Topology& aTopology) {
  std::vector<std::string> ret;

  std::set<NodeId> myIds;
  std::set<NodeId> myDuplicates;
  auto             myClients = 0u;
  auto             myWorkers = 0u;
  for (const auto& myNode : aTopology.theNodes) {
    const auto myId = std::to_string(myNode.theId);
    if (not myIds.insert(myNode.theId).second and
        myDuplicates.insert(myNode.theId).second) {
      ret.emplace_back("duplicate node id " + myId);
    }
    if (myNode.theRole == Role::Worker) {
      myWorkers++;
      if (myNode.theCores < 1) {
        ret.emplace_back("worker " + myId + " has no cores");
      }
      if (not(myNode.theCoreSpeed > 0) or
          not std::isfinite(myNode.theCoreSpeed)) {
        ret.emplace_back("worker " + myId + " has invalid core speed");
      }
    } else {
      if (myNode.theRole == Role::Client) {
        myClients++;
      }
      if (myNode.theCores != 0 or myNode.theCoreSpeed != 0) {
        ret.emplace_back(toString(myNode.theRole) + " " + myId +
                         " has compute capacity");
      }
    }
  }
  if (myClients == 0) {
    ret.emplace_back("no client node");
  }
  if (myWorkers == 0) {
    ret.emplace_back("no worker node");
  }

  std::set<std::pair<NodeId, NodeId>> myPairs;
  for (const auto& myLink : aTopology.theLinks) {
    const auto myName = "link " + std::to_string(myLink.theEndpointA) + "-" +
                        std::to_string(myLink.theEndpointB);
    auto myEndpointsOk = true;
    for (const auto myEndpoint : {myLink.theEndpointA, myLink.theEndpointB}) {
      if (myIds.count(myEndpoint) == 0) {
        ret.emplace_back(myName + " has unknown endpoint " +
                         std::to_string(myEndpoint));
        myEndpointsOk = false;
      }
    }
    if (myLink.theEndpointA == myLink.theEndpointB) {
      ret.emplace_back(myName + " has identical endpoints");
      myEndpointsOk = false;
    }
    if (not(myLink.thePropagation >= 0) or
        not std::isfinite(myLink.thePropagation)) {
      ret.emplace_back(myName + " has invalid propagation delay");
    }
    if (not(myLink.theRate > 0)) {
      ret.emplace_back(myName + " has invalid rate");
    }
    if (myEndpointsOk and
        not myPairs
                .emplace(std::min(myLink.theEndpointA, myLink.theEndpointB),
                         std::max(myLink.theEndpointA, myLink.theEndpointB))
                .second) {
      ret.emplace_back("duplicate " + myName);
    }
  }

  // connectivity, by flooding from the smallest id over the valid links
  if (not myIds.empty()) {
    std::set<NodeId> myReached({*myIds.begin()});
    auto             myChanged = true;
    while (myChanged) {
      myChanged = false;
      for (const auto& myLink : aTopology.theLinks) {
        const auto myHasA = myReached.count(myLink.theEndpointA) > 0;
        const auto myHasB = myReached.count(myLink.theEndpointB) > 0;
        if (myHasA != myHasB and myIds.count(myLink.theEndpointA) > 0 and
            myIds.count(myLink.theEndpointB) > 0) {
          myReached.insert(myHasA ? myLink.theEndpointB : myLink.theEndpointA);
          myChanged = true;
        }
      }
    }
    if (myReached.size() != myIds.size()) {
      ret.emplace_back("topology not connected");
    }
  }

  return ret;
}

namespace {

// route label under construction, compared by (propagation, hops, path)
struct Label {
  double              theProp = std::numeric_limits<double>::infinity();
  std::vector<NodeId> thePath; // excluding the source
  std::size_t         theLastLink = 0;
  std::size_t         thePrev     = 0;
  bool                theReached  = false;

  bool better(const Label& aOther) const {
    if (not aOther.theReached) {
      return theReached;
    }
    if (not theReached) {
      return false;
    }
    if (theProp != aOther.theProp) {
      return theProp < aOther.theProp;
    }
    if (thePath.size() != aOther.thePath.size()) {
      return thePath.size() < aOther.thePath.size();
    }
    return thePath < aOther.thePath;
  }
};

} // namespace

RouteTable::RouteTable(const Topology& aTopology)
    : theTopology(aTopology)
    , theIds()
    , theIndex()
    , theRoutes() {
  const auto myViolations = validate(aTopology);
  if (not myViolations.empty()) {
    throw std::invalid_argument("cannot build routes on an invalid topology: " +
                                myViolations.front());
  }

  for (const auto& myNode : theTopology.theNodes) {
    theIds.emplace_back(myNode.theId);
  }
  std::sort(theIds.begin(), theIds.end());
  for (std::size_t i = 0; i < theIds.size(); i++) {
    theIndex.emplace(theIds[i], i);
  }

  const auto N = theIds.size();

  // adjacency: (neighbor index, link index)
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> myAdj(N);
  for (std::size_t l = 0; l < theTopology.theLinks.size(); l++) {
    const auto& myLink = theTopology.theLinks[l];
    const auto  a      = index(myLink.theEndpointA);
    const auto  b      = index(myLink.theEndpointB);
    myAdj[a].emplace_back(b, l);
    myAdj[b].emplace_back(a, l);
  }

  theRoutes.resize(N * N);
  theDelayOrder.resize(N * N);
  for (std::size_t s = 0; s < N; s++) {
    // Dijkstra with full-key label comparison, O(N^2) selection
    std::vector<Label> myLabels(N);
    std::vector<bool>  myDone(N, false);
    myLabels[s].theProp    = 0;
    myLabels[s].theReached = true;
    for (std::size_t myIter = 0; myIter < N; myIter++) {
      std::size_t u = N;
      for (std::size_t v = 0; v < N; v++) {
        if (not myDone[v] and myLabels[v].theReached and
            (u == N or myLabels[v].better(myLabels[u]))) {
          u = v;
        }
      }
      if (u == N) {
        break;
      }
      myDone[u] = true;
      for (const auto& [v, l] : myAdj[u]) {
        if (myDone[v]) {
          continue;
        }
        Label myCandidate;
        myCandidate.theReached = true;
        myCandidate.theProp =
            myLabels[u].theProp + theTopology.theLinks[l].thePropagation;
        myCandidate.thePath = myLabels[u].thePath;
        myCandidate.thePath.emplace_back(theIds[v]);
        myCandidate.theLastLink = l;
        myCandidate.thePrev     = u;
        if (myCandidate.better(myLabels[v])) {
          myLabels[v] = std::move(myCandidate);
        }
      }
    }

    for (std::size_t d = 0; d < N; d++) {
      assert(myLabels[d].theReached);
      auto& myRoute             = theRoutes[s * N + d];
      myRoute.theHops           = myLabels[d].thePath;
      myRoute.thePropagation    = myLabels[d].theProp;
      myRoute.theBottleneckRate = std::numeric_limits<double>::infinity();
      for (auto v = d; v != s; v = myLabels[v].thePrev) {
        myRoute.theLinks.emplace_back(myLabels[v].theLastLink);
      }
      std::reverse(myRoute.theLinks.begin(), myRoute.theLinks.end());
      for (const auto l : myRoute.theLinks) {
        myRoute.theBottleneckRate =
            std::min(myRoute.theBottleneckRate, theTopology.theLinks[l].theRate);
      }
      assert(myRoute.theLinks.size() == myRoute.theHops.size());
      auto& myOrder = theDelayOrder[s * N + d];
      myOrder       = myRoute.theLinks;
      std::sort(myOrder.begin(), myOrder.end());
    }
  }

  VLOG(1) << "built routes among " << N << " nodes";
}

std::size_t RouteTable::index(const NodeId aId) const {
  const auto it = theIndex.find(aId);
  if (it == theIndex.end()) {
    throw std::out_of_range("unknown node id " + std::to_string(aId));
  }
  return it->second;
}

const Route& RouteTable::route(const NodeId aSrc, const NodeId aDst) const {
  return theRoutes[index(aSrc) * theIds.size() + index(aDst)];
}

double RouteTable::transferDelay(const NodeId aSrc,
                                 const NodeId aDst,
                                 const double aBytes) const {
  if (not(aBytes >= 0)) {
    throw std::invalid_argument("invalid payload size: " +
                                std::to_string(aBytes));
  }
  const auto& myOrder =
      theDelayOrder[index(aSrc) * theIds.size() + index(aDst)];
  auto ret = 0.0;
  for (const auto l : myOrder) {
    const auto& myLink = theTopology.theLinks[l];
    ret += myLink.thePropagation + aBytes / myLink.theRate;
  }
  return ret;
}

std::string RouteTable::toString() const {
  std::stringstream ret;
  for (const auto mySrc : theIds) {
    for (const auto myDst : theIds) {
      const auto& myRoute = route(mySrc, myDst);
      ret << mySrc << " -> " << myDst << ": hops [";
      for (std::size_t i = 0; i < myRoute.theHops.size(); i++) {
        ret << (i == 0 ? "" : ",") << myRoute.theHops[i];
      }
      ret << "] prop " << myRoute.thePropagation << " s, bottleneck "
          << myRoute.theBottleneckRate << " B/s, " << myRoute.hopCount()
          << " hops\n";
    }
  }
  return ret.str();
}

RouteTable buildRoutes(const Topology& aTopology) {
  return RouteTable(aTopology);
}

} // namespace chainsim
} // namespace uiiit
