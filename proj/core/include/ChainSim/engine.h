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

#include "ChainSim/dispatch.h"
#include "ChainSim/state.h"
#include "ChainSim/topology.h"
#include "ChainSim/workflow.h"
#include "ChainSim/workload.h"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace uiiit {
namespace chainsim {

//! A workflow together with its workload.
struct Application {
  DagSpec             theDag;
  NodeId              theClient = 0;
  double              theRate   = 0; //!< invocations/s
  PayloadDistribution thePayload;
  //! If set, these arrival times replace the Poisson process.
  std::optional<std::vector<double>> theFixedArrivals;
};

//! Host of a function's state before its first invocation.
struct InitialState {
  std::string theAppId;
  std::string theFunction;
  NodeId      theHost = 0;
};

struct Scenario {
  Topology                  theTopology;
  FunctionCatalog           theFunctions;
  std::vector<Application>  theApps;
  double                    theHorizon       = 0; //!< s, arrival cutoff
  bool                      theComputeRandom = false;
  bool                      theDrain         = true;
  PolicyKind                thePolicy        = PolicyKind::LeastLoaded;
  StateMode                 theStateMode     = StateMode::Embedded;
  uint64_t                  theSeed          = 0;
  std::vector<NodeId>       theCandidates; //!< empty means all workers
  std::vector<InitialState> theInitialState;
};

std::vector<std::string> validate(const Scenario& aScenario);

struct Event {
  enum class Kind : int {
    Arrival    = 0,
    StageReady = 1,
    ExecStart  = 2, //!< input and state at the worker, enqueue or start
    ExecDone   = 3,
    Delivered  = 4,
  };

  double      theTime = 0;
  uint64_t    theSeq  = 0;
  Kind        theKind = Kind::Arrival;
  std::size_t theApp  = 0; //!< index into Scenario::theApps
  uint64_t    theInvocation = 0;
  std::size_t theVertex     = 0; //!< index into Workflow
  NodeId      theNode       = 0;
  std::size_t theCore       = 0;

  //! Total order by (time, seq).
  bool operator<(const Event& aOther) const noexcept {
    return theTime < aOther.theTime or
           (theTime == aOther.theTime and theSeq < aOther.theSeq);
  }
};

std::string toString(const Event::Kind aKind);

struct StageRecord {
  std::string theFunction;
  double      theDispatchTime = 0;
  NodeId      theWorker       = 0;
  double      theQueueWait    = 0; //!< s
  double      theCompute      = 0; //!< s
  double      theTransfer     = 0; //!< s, input transfer
  double      theStateDelay   = 0; //!< s
  double      theStateBytes   = 0;
  bool        theMigration    = false;
  //! Bytes times links traversed by all the transfers of this stage,
  //! including the result delivery for the sink.
  double theNetBytes = 0;
};

struct InvocationRecord {
  uint64_t                 theId = 0;
  std::string              theApp;
  double                   theArrival = 0;
  std::optional<double>    theCompletion;
  double                   theResultTransfer = 0; //!< s, sink to client
  std::vector<StageRecord> theStages;             //!< in dispatch order

  double      latency() const;
  double      stateBytes() const noexcept;
  std::size_t migrations() const noexcept;
  double      netBytes() const noexcept;
};

struct LinkUsage {
  NodeId theEndpointA = 0;
  NodeId theEndpointB = 0;
  double theBytes     = 0;
};

struct WorkerUsage {
  NodeId theId          = 0;
  double theBusy        = 0; //!< core-seconds
  double theUtilization = 0;
};

struct MetricsLog {
  std::vector<InvocationRecord> theInvocations; //!< by id
  std::vector<LinkUsage>        theLinks;       //!< as in the topology
  std::vector<WorkerUsage>      theWorkers;     //!< ascending id
  std::size_t                   theMigrations = 0;
  std::size_t                   theInjected   = 0;
  std::size_t                   theCompleted  = 0;
  std::size_t                   theInFlight   = 0;
  double                        theEndTime    = 0;
};

struct RunOptions {
  //! Called on every event, in processing order.
  std::function<void(const Event&)> theObserver;
};

/**
 * Simulate a scenario until all the work injected before the horizon is
 * drained (or, without drain, until the horizon).
 *
 * \throw std::invalid_argument if the scenario is not valid.
 * \throw std::runtime_error if a delay becomes non-finite.
 */
MetricsLog run(const Scenario& aScenario, const RunOptions& aOptions = {});

} // namespace chainsim
} // namespace uiiit
