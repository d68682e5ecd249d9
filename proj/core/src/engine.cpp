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

#include "ChainSim/engine.h"

#include <glog/logging.h>

#include <algorithm>
#include <cassert>
#include <cmath>
#include <deque>
#include <queue>
#include <set>
#include <stdexcept>

namespace uiiit {
namespace chainsim {

std::string toString(const Event::Kind aKind) {
  switch (aKind) {
    case Event::Kind::Arrival:
      return "Arrival";
    case Event::Kind::StageReady:
      return "StageReady";
    case Event::Kind::ExecStart:
      return "ExecStart";
    case Event::Kind::ExecDone:
      return "ExecDone";
    case Event::Kind::Delivered:
      return "Delivered";
  }
  return "unknown";
}

double InvocationRecord::latency() const {
  if (not theCompletion.has_value()) {
    throw std::logic_error("latency of invocation " + std::to_string(theId) +
                           " not completed");
  }
  return *theCompletion - theArrival;
}

double InvocationRecord::stateBytes() const noexcept {
  auto ret = 0.0;
  for (const auto& myStage : theStages) {
    ret += myStage.theStateBytes;
  }
  return ret;
}

std::size_t InvocationRecord::migrations() const noexcept {
  return std::count_if(theStages.begin(),
                       theStages.end(),
                       [](const auto& aStage) { return aStage.theMigration; });
}

double InvocationRecord::netBytes() const noexcept {
  auto ret = 0.0;
  for (const auto& myStage : theStages) {
    ret += myStage.theNetBytes;
  }
  return ret;
}

std::vector<std::string> validate(const Scenario& aScenario) {
  auto ret = validate(aScenario.theTopology);
  const auto& myTopo = aScenario.theTopology;

  for (const auto& [myName, myFunc] : aScenario.theFunctions) {
    if (myName != myFunc.theId) {
      ret.emplace_back("function " + myFunc.theId + " catalogued as " + myName);
    }
    const auto myErrors = validate(myFunc);
    ret.insert(ret.end(), myErrors.begin(), myErrors.end());
  }

  if (aScenario.theApps.empty()) {
    ret.emplace_back("no applications");
  }
  std::set<std::string> myAppIds;
  for (const auto& myApp : aScenario.theApps) {
    const auto& myId = myApp.theDag.theAppId;
    if (myId.empty() or myId.find_first_of(",\"\r\n") != std::string::npos) {
      ret.emplace_back("invalid app id '" + myId + "'");
    }
    if (not myAppIds.insert(myId).second) {
      ret.emplace_back("duplicate app id " + myId);
    }
    for (const auto& myError : validateDag(myApp.theDag)) {
      ret.emplace_back("app " + myId + ": " + myError);
    }
    for (const auto& myVertex : myApp.theDag.theVertices) {
      if (aScenario.theFunctions.count(myVertex) == 0) {
        ret.emplace_back("app " + myId + " uses unknown function " + myVertex);
      }
    }
    const auto myClient = myTopo.node(myApp.theClient);
    if (myClient == nullptr or myClient->theRole != Role::Client) {
      ret.emplace_back("app " + myId + " has invalid client " +
                       std::to_string(myApp.theClient));
    }
    if (myApp.theFixedArrivals.has_value()) {
      for (const auto myTime : *myApp.theFixedArrivals) {
        if (not(myTime >= 0) or not std::isfinite(myTime)) {
          ret.emplace_back("app " + myId + " has invalid arrival time");
          break;
        }
      }
    } else if (not(myApp.theRate > 0) or not std::isfinite(myApp.theRate)) {
      ret.emplace_back("app " + myId + " has invalid arrival rate");
    }
    for (const auto& myError : myApp.thePayload.validate()) {
      ret.emplace_back("app " + myId + ": " + myError);
    }
  }

  if (not(aScenario.theHorizon > 0) or not std::isfinite(aScenario.theHorizon)) {
    ret.emplace_back("horizon must be positive");
  }

  for (const auto myCandidate : aScenario.theCandidates) {
    const auto myNode = myTopo.node(myCandidate);
    if (myNode == nullptr or myNode->theRole != Role::Worker) {
      ret.emplace_back("candidate " + std::to_string(myCandidate) +
                       " is not a worker");
    }
  }

  for (const auto& myInitial : aScenario.theInitialState) {
    const auto myName = "initial state " + myInitial.theAppId + ":" +
                        myInitial.theFunction;
    if (myAppIds.count(myInitial.theAppId) == 0) {
      ret.emplace_back(myName + " refers to unknown app");
    }
    if (aScenario.theFunctions.count(myInitial.theFunction) == 0) {
      ret.emplace_back(myName + " refers to unknown function");
    }
    const auto myNode = myTopo.node(myInitial.theHost);
    if (myNode == nullptr or myNode->theRole != Role::Worker) {
      ret.emplace_back(myName + " hosted on a node that is not a worker");
    }
  }

  return ret;
}

namespace {

struct Job {
  uint64_t theInvocation = 0;
  std::size_t theVertex  = 0;
  double      theOps     = 0;
  double      theEnqueue = 0;
};

struct WorkerRuntime {
  NodeId              theId    = 0;
  double              theSpeed = 0;
  std::vector<bool>   theBusy;      // per core
  std::vector<double> theBusyUntil; // per core
  std::vector<double> theStart;     // per core
  std::deque<Job>     theQueue;
  double              theQueuedOps = 0;
  double              theBusyTime  = 0;

  // pending operations: queued plus the remainder of the jobs in service
  double backlog(const double aNow) const {
    auto ret = theQueuedOps;
    for (std::size_t c = 0; c < theBusy.size(); c++) {
      if (theBusy[c]) {
        ret += std::max(0.0, theBusyUntil[c] - aNow) * theSpeed;
      }
    }
    return ret;
  }

  std::optional<std::size_t> freeCore() const {
    for (std::size_t c = 0; c < theBusy.size(); c++) {
      if (not theBusy[c]) {
        return c;
      }
    }
    return std::nullopt;
  }
};

struct InvocationState {
  std::size_t              theApp     = 0;
  double                   theEntry   = 0; // entry payload, bytes
  double                   theFactor  = 1; // compute randomization
  std::vector<std::size_t> thePending; // predecessors not done, per vertex
  std::vector<NodeId>      theExec;
  std::vector<double>      theInput;
  std::vector<double>      theOutput;
  std::vector<std::size_t> theStage; // index into the record stages
};

class Simulator
{
 public:
  Simulator(const Scenario& aScenario, const RunOptions& aOptions)
      : theScenario(aScenario)
      , theOptions(aOptions)
      , theRoutes(aScenario.theTopology)
      , theWorkflows()
      , theArrivals()
      , theNextArrival()
      , theCandidates(aScenario.theCandidates)
      , theWorkers()
      , theWorkerIndex()
      , theRegistry()
      , theRrState()
      , thePolicyRng(RandomStream::derive(aScenario.theSeed, "policy"))
      , theComputeRng(RandomStream::derive(aScenario.theSeed, "compute"))
      , thePayloadRng()
      , theEvents()
      , theSeq(0)
      , theInvocations()
      , theLog() {
    for (const auto& myApp : theScenario.theApps) {
      theWorkflows.emplace_back(myApp.theDag, theScenario.theFunctions);
      thePayloadRng.emplace_back(RandomStream::derive(
          theScenario.theSeed, "payload/" + myApp.theDag.theAppId));
      if (myApp.theFixedArrivals.has_value()) {
        std::vector<double> myTimes;
        for (const auto myTime : *myApp.theFixedArrivals) {
          if (myTime < theScenario.theHorizon) {
            myTimes.emplace_back(myTime);
          }
        }
        std::sort(myTimes.begin(), myTimes.end());
        theArrivals.emplace_back(std::move(myTimes));
      } else {
        auto myRng = RandomStream::derive(theScenario.theSeed,
                                          "arrivals/" + myApp.theDag.theAppId);
        theArrivals.emplace_back(
            genArrivals(myApp.theRate, theScenario.theHorizon, myRng));
      }
      theNextArrival.emplace_back(0);
    }

    if (theCandidates.empty()) {
      theCandidates = theScenario.theTopology.workers();
    }

    for (const auto myId : theScenario.theTopology.workers()) {
      const auto     myNode = theScenario.theTopology.node(myId);
      WorkerRuntime  myWorker;
      myWorker.theId    = myId;
      myWorker.theSpeed = myNode->theCoreSpeed;
      myWorker.theBusy.resize(myNode->theCores, false);
      myWorker.theBusyUntil.resize(myNode->theCores, 0);
      myWorker.theStart.resize(myNode->theCores, 0);
      theWorkerIndex.emplace(myId, theWorkers.size());
      theWorkers.emplace_back(std::move(myWorker));
    }

    if (remote(theScenario.theStateMode)) {
      for (const auto& myInitial : theScenario.theInitialState) {
        const auto& myFunc = theScenario.theFunctions.at(myInitial.theFunction);
        if (myFunc.theStateSize > 0) {
          theRegistry.place(myInitial.theAppId,
                            myInitial.theFunction,
                            myInitial.theHost,
                            myFunc.theStateSize);
        }
      }
    }

    for (const auto& myLink : theScenario.theTopology.theLinks) {
      theLog.theLinks.emplace_back(
          LinkUsage{myLink.theEndpointA, myLink.theEndpointB, 0});
    }
  }

  MetricsLog run() {
    for (std::size_t a = 0; a < theArrivals.size(); a++) {
      scheduleNextArrival(a);
    }

    auto myLastTime = 0.0;
    while (not theEvents.empty()) {
      const auto myEvent = theEvents.top();
      if (not theScenario.theDrain and myEvent.theTime > theScenario.theHorizon) {
        break;
      }
      theEvents.pop();
      assert(myEvent.theTime >= myLastTime);
      myLastTime = myEvent.theTime;
      if (theOptions.theObserver) {
        theOptions.theObserver(myEvent);
      }
      process(myEvent);
    }

    theLog.theEndTime =
        theScenario.theDrain ? myLastTime : theScenario.theHorizon;
    for (auto& myWorker : theWorkers) {
      // jobs in service when the simulation was cut at the horizon
      for (std::size_t c = 0; c < myWorker.theBusy.size(); c++) {
        if (myWorker.theBusy[c]) {
          myWorker.theBusyTime +=
              std::max(0.0,
                       std::min(myWorker.theBusyUntil[c], theLog.theEndTime) -
                           myWorker.theStart[c]);
        }
      }
      const auto myCapacity =
          myWorker.theBusy.size() * theLog.theEndTime;
      theLog.theWorkers.emplace_back(WorkerUsage{
          myWorker.theId,
          myWorker.theBusyTime,
          myCapacity > 0 ? myWorker.theBusyTime / myCapacity : 0.0});
    }

    theLog.theInjected = theLog.theInvocations.size();
    theLog.theInFlight = theLog.theInjected - theLog.theCompleted;
    VLOG(1) << "run seed " << theScenario.theSeed << ": injected "
            << theLog.theInjected << ", completed " << theLog.theCompleted
            << ", end time " << theLog.theEndTime;
    return std::move(theLog);
  }

 private:
  void schedule(Event aEvent) {
    if (not std::isfinite(aEvent.theTime)) {
      throw std::runtime_error("non-finite time for event " +
                               toString(aEvent.theKind));
    }
    aEvent.theSeq = theSeq++;
    theEvents.push(aEvent);
  }

  void scheduleNextArrival(const std::size_t aApp) {
    auto& myNext = theNextArrival[aApp];
    if (myNext < theArrivals[aApp].size()) {
      Event myEvent;
      myEvent.theKind = Event::Kind::Arrival;
      myEvent.theTime = theArrivals[aApp][myNext++];
      myEvent.theApp  = aApp;
      schedule(myEvent);
    }
  }

  void process(const Event& aEvent) {
    switch (aEvent.theKind) {
      case Event::Kind::Arrival:
        arrival(aEvent);
        break;
      case Event::Kind::StageReady:
        stageReady(aEvent);
        break;
      case Event::Kind::ExecStart:
        execStart(aEvent);
        break;
      case Event::Kind::ExecDone:
        execDone(aEvent);
        break;
      case Event::Kind::Delivered:
        delivered(aEvent);
        break;
    }
  }

  const Application& app(const std::size_t aApp) const {
    return theScenario.theApps[aApp];
  }

  double overhead(const FunctionSpec& aFunction) const {
    return embeddedPayloadOverhead(aFunction, theScenario.theStateMode);
  }

  // transfer of aBytes from aSrc to aDst: account the bytes on the links
  // traversed and return bytes times links
  double account(const NodeId aSrc, const NodeId aDst, const double aBytes) {
    const auto& myRoute = theRoutes.route(aSrc, aDst);
    for (const auto l : myRoute.theLinks) {
      theLog.theLinks[l].theBytes += aBytes;
    }
    return aBytes * myRoute.theLinks.size();
  }

  WorkerRuntime& worker(const NodeId aId) {
    return theWorkers[theWorkerIndex.at(aId)];
  }

  void arrival(const Event& aEvent) {
    const auto  myApp = aEvent.theApp;
    const auto& myWf  = theWorkflows[myApp];

    InvocationState myState;
    myState.theApp   = myApp;
    myState.theEntry = app(myApp).thePayload.sample(thePayloadRng[myApp],
                                                    myWf.entryPayload());
    if (theScenario.theComputeRandom) {
      myState.theFactor = theComputeRng.exponential(1.0);
    }
    myState.thePending.resize(myWf.size());
    for (std::size_t v = 0; v < myWf.size(); v++) {
      myState.thePending[v] = myWf.predecessors(v).size();
    }
    myState.theExec.resize(myWf.size(), 0);
    myState.theInput.resize(myWf.size(), 0);
    myState.theOutput.resize(myWf.size(), 0);
    myState.theStage.resize(myWf.size(), 0);

    InvocationRecord myRecord;
    myRecord.theId      = theLog.theInvocations.size();
    myRecord.theApp     = myWf.appId();
    myRecord.theArrival = aEvent.theTime;

    Event myReady;
    myReady.theKind       = Event::Kind::StageReady;
    myReady.theTime       = aEvent.theTime;
    myReady.theApp        = myApp;
    myReady.theInvocation = myRecord.theId;
    myReady.theVertex     = myWf.source();
    myReady.theNode       = app(myApp).theClient;

    theInvocations.emplace_back(std::move(myState));
    theLog.theInvocations.emplace_back(std::move(myRecord));
    schedule(myReady);
    scheduleNextArrival(myApp);
  }

  void stageReady(const Event& aEvent) {
    const auto  myNow    = aEvent.theTime;
    auto&       myState  = theInvocations[aEvent.theInvocation];
    auto&       myRecord = theLog.theInvocations[aEvent.theInvocation];
    const auto& myWf     = theWorkflows[myState.theApp];
    const auto  v        = aEvent.theVertex;
    const auto& myFunc   = myWf.function(v);
    const auto  myMode   = theScenario.theStateMode;

    // input data size
    if (v == myWf.source()) {
      myState.theInput[v] = myState.theEntry;
    } else {
      std::vector<double> myIncoming;
      for (const auto p : myWf.predecessors(v)) {
        myIncoming.emplace_back(myState.theOutput[p]);
      }
      myState.theInput[v] = joinPayload(myIncoming);
    }

    // dispatch
    DispatchContext myContext{theRoutes,
                              theRegistry,
                              thePolicyRng,
                              myWf.appId(),
                              theCandidates,
                              {},
                              aEvent.theNode};
    for (const auto myCandidate : theCandidates) {
      myContext.theBacklog.emplace(myCandidate,
                                   worker(myCandidate).backlog(myNow));
    }
    const auto myWorker = chooseWorker(theScenario.thePolicy,
                                       myContext,
                                       theRrState,
                                       myFunc,
                                       myState.theInput[v],
                                       myMode);
    myState.theExec[v] = myWorker;

    StageRecord myStage;
    myStage.theFunction     = myFunc.theId;
    myStage.theDispatchTime = myNow;
    myStage.theWorker       = myWorker;

    // input transfers, in parallel from all the producers
    auto myTransfer = 0.0;
    if (v == myWf.source()) {
      const auto myBytes = myState.theEntry + overhead(myFunc);
      const auto myClient = app(myState.theApp).theClient;
      myTransfer = theRoutes.transferDelay(myClient, myWorker, myBytes);
      myStage.theNetBytes += account(myClient, myWorker, myBytes);
    } else {
      for (const auto p : myWf.predecessors(v)) {
        const auto myBytes = myState.theOutput[p] +
                             overhead(myWf.function(p)) + overhead(myFunc);
        myTransfer = std::max(
            myTransfer,
            theRoutes.transferDelay(myState.theExec[p], myWorker, myBytes));
        myStage.theNetBytes += account(myState.theExec[p], myWorker, myBytes);
      }
    }
    myStage.theTransfer = myTransfer;

    // state access, applied at dispatch time
    if (remote(myMode) and myFunc.theStateSize > 0) {
      if (theRegistry.find(myWf.appId(), myFunc.theId) == nullptr) {
        theRegistry.place(
            myWf.appId(), myFunc.theId, myWorker, myFunc.theStateSize);
        VLOG(2) << "state of " << myWf.appId() << ":" << myFunc.theId
                << " placed on " << myWorker;
      }
      const auto myAccess = remoteStateAccess(
          myMode, theRegistry, myWf.appId(), myFunc, myWorker, theRoutes);
      for (const auto& [mySrc, myDst, myBytes] : myAccess.theTransfers) {
        myStage.theNetBytes += account(mySrc, myDst, myBytes);
      }
      myStage.theStateDelay = myAccess.theDelay;
      myStage.theStateBytes = myAccess.theBytesMoved;
      myStage.theMigration  = myAccess.theMigration;
      if (myAccess.theMigration) {
        theLog.theMigrations++;
        theRegistry = applyStateAccess(
            std::move(theRegistry), myAccess, myWf.appId(), myFunc.theId);
      }
    }

    const auto myDelay = myStage.theTransfer + myStage.theStateDelay;
    if (not std::isfinite(myDelay)) {
      throw std::runtime_error("non-finite dispatch delay for " +
                               myWf.appId() + ":" + myFunc.theId);
    }

    myState.theStage[v] = myRecord.theStages.size();
    myRecord.theStages.emplace_back(std::move(myStage));

    Event myStart(aEvent);
    myStart.theKind = Event::Kind::ExecStart;
    myStart.theTime = myNow + myDelay;
    myStart.theNode = myWorker;
    schedule(myStart);
  }

  void startJob(WorkerRuntime&    aWorker,
                const std::size_t aCore,
                const Job&        aJob,
                const double      aNow) {
    const auto myCompute = aJob.theOps / aWorker.theSpeed;
    if (not std::isfinite(myCompute)) {
      throw std::runtime_error("non-finite execution time on worker " +
                               std::to_string(aWorker.theId));
    }
    aWorker.theBusy[aCore]      = true;
    aWorker.theStart[aCore]     = aNow;
    aWorker.theBusyUntil[aCore] = aNow + myCompute;

    const auto& myState  = theInvocations[aJob.theInvocation];
    auto&       myRecord = theLog.theInvocations[aJob.theInvocation];
    auto&       myStage  = myRecord.theStages[myState.theStage[aJob.theVertex]];
    myStage.theQueueWait = aNow - aJob.theEnqueue;
    myStage.theCompute   = myCompute;

    Event myDone;
    myDone.theKind       = Event::Kind::ExecDone;
    myDone.theTime       = aWorker.theBusyUntil[aCore];
    myDone.theApp        = myState.theApp;
    myDone.theInvocation = aJob.theInvocation;
    myDone.theVertex     = aJob.theVertex;
    myDone.theNode       = aWorker.theId;
    myDone.theCore       = aCore;
    schedule(myDone);
  }

  void execStart(const Event& aEvent) {
    const auto& myState = theInvocations[aEvent.theInvocation];
    const auto& myFunc  = theWorkflows[myState.theApp].function(aEvent.theVertex);
    const auto  myInput = myState.theInput[aEvent.theVertex];

    Job myJob;
    myJob.theInvocation = aEvent.theInvocation;
    myJob.theVertex     = aEvent.theVertex;
    myJob.theOps =
        myFunc.theFixedOps * myState.theFactor + myFunc.theOpsPerByte * myInput;
    myJob.theEnqueue = aEvent.theTime;

    auto&      myWorker = worker(aEvent.theNode);
    const auto myCore   = myWorker.freeCore();
    if (myCore.has_value()) {
      startJob(myWorker, *myCore, myJob, aEvent.theTime);
    } else {
      myWorker.theQueuedOps += myJob.theOps;
      myWorker.theQueue.emplace_back(myJob);
    }
  }

  void execDone(const Event& aEvent) {
    const auto myNow    = aEvent.theTime;
    auto&      myWorker = worker(aEvent.theNode);
    assert(myWorker.theBusy[aEvent.theCore]);
    myWorker.theBusy[aEvent.theCore] = false;
    myWorker.theBusyTime += myNow - myWorker.theStart[aEvent.theCore];

    if (not myWorker.theQueue.empty()) {
      const auto myJob = myWorker.theQueue.front();
      myWorker.theQueue.pop_front();
      myWorker.theQueuedOps = myWorker.theQueue.empty()
                                  ? 0.0
                                  : myWorker.theQueuedOps - myJob.theOps;
      startJob(myWorker, *myWorker.freeCore(), myJob, myNow);
    }

    auto&       myState = theInvocations[aEvent.theInvocation];
    const auto& myWf    = theWorkflows[myState.theApp];
    const auto  v       = aEvent.theVertex;
    const auto& myFunc  = myWf.function(v);
    myState.theOutput[v] = stageIo(myFunc, myState.theInput[v]).theOutputBytes;

    for (const auto s : myWf.successors(v)) {
      assert(myState.thePending[s] > 0);
      if (--myState.thePending[s] == 0) {
        Event myReady(aEvent);
        myReady.theKind   = Event::Kind::StageReady;
        myReady.theVertex = s;
        myReady.theNode   = aEvent.theNode;
        schedule(myReady);
      }
    }

    if (v == myWf.sink()) {
      auto&      myRecord = theLog.theInvocations[aEvent.theInvocation];
      const auto myClient = app(myState.theApp).theClient;
      const auto myBytes  = myState.theOutput[v] + overhead(myFunc);
      myRecord.theResultTransfer =
          theRoutes.transferDelay(aEvent.theNode, myClient, myBytes);
      myRecord.theStages[myState.theStage[v]].theNetBytes +=
          account(aEvent.theNode, myClient, myBytes);

      Event myDelivered(aEvent);
      myDelivered.theKind = Event::Kind::Delivered;
      myDelivered.theTime = myNow + myRecord.theResultTransfer;
      myDelivered.theNode = myClient;
      schedule(myDelivered);
    }
  }

  void delivered(const Event& aEvent) {
    auto& myRecord         = theLog.theInvocations[aEvent.theInvocation];
    myRecord.theCompletion = aEvent.theTime;
    theLog.theCompleted++;
  }

 private:
  struct Later {
    bool operator()(const Event& aLhs, const Event& aRhs) const noexcept {
      return aRhs < aLhs;
    }
  };

  const Scenario&                  theScenario;
  const RunOptions&                theOptions;
  const RouteTable                 theRoutes;
  std::vector<Workflow>            theWorkflows;
  std::vector<std::vector<double>> theArrivals;
  std::vector<std::size_t>         theNextArrival;
  std::vector<NodeId>              theCandidates;
  std::vector<WorkerRuntime>       theWorkers;
  std::map<NodeId, std::size_t>    theWorkerIndex;
  StateRegistry                    theRegistry;
  RrState                          theRrState;
  RandomStream                     thePolicyRng;
  RandomStream                     theComputeRng;
  std::vector<RandomStream>        thePayloadRng;

  std::priority_queue<Event, std::vector<Event>, Later> theEvents;
  uint64_t                                              theSeq;

  std::vector<InvocationState> theInvocations;
  MetricsLog                   theLog;
};

} // namespace

MetricsLog run(const Scenario& aScenario, const RunOptions& aOptions) {
  const auto myViolations = validate(aScenario);
  if (not myViolations.empty()) {
    throw std::invalid_argument("invalid scenario: " + myViolations.front());
  }
  return Simulator(aScenario, aOptions).run();
}

} // namespace chainsim
} // namespace uiiit
