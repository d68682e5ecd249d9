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

#include "ChainSim/random.h"
#include "ChainSim/state.h"
#include "ChainSim/topology.h"
#include "ChainSim/workflow.h"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace uiiit {
namespace chainsim {

enum class PolicyKind : int {
  Random             = 0,
  RoundRobin         = 1,
  LeastLoaded        = 2,
  StateLocal         = 3,
  MinLatencyEstimate = 4,
};

std::string toString(const PolicyKind aPolicy);
//! \throw std::invalid_argument if the name is not a policy.
PolicyKind         policyFromString(const std::string& aName);
const std::vector<PolicyKind>& allPolicies();

/**
 * What the dispatcher knows when choosing the executor of one stage.
 *
 * The backlog of a worker is the number of operations queued or still to
 * be served there; workers not in the map have zero backlog.
 */
struct DispatchContext {
  const RouteTable&        theRoutes;
  const StateRegistry&     theRegistry;
  RandomStream&            theRng;
  std::string              theAppId;
  std::vector<NodeId>      theCandidates;
  std::map<NodeId, double> theBacklog;
  NodeId                   thePayloadLocation = 0;

  double backlog(const NodeId aWorker) const;
};

//! Round-robin cursors, one per (application, function).
class RrState
{
 public:
  //! Current cursor, then advance it modulo aCount.
  std::size_t next(const std::string& aApp,
                   const std::string& aFunction,
                   const std::size_t  aCount);

  std::size_t cursor(const std::string& aApp,
                     const std::string& aFunction) const;

 private:
  std::map<StateKey, std::size_t> theCursors;
};

/**
 * Predicted completion time of a stage on worker aWorker: input transfer
 * from the payload location, remote state fetch from the current host
 * (migration not applied), backlog drained at the full capacity of the
 * worker, and the stage execution on a single core.
 */
double estimateCompletion(const DispatchContext& aContext,
                          const FunctionSpec&    aFunction,
                          const NodeId           aWorker,
                          const double           aInputBytes,
                          const StateMode        aMode);

/**
 * Choose the executor of a stage among the candidates of aContext.
 *
 * Ties are always broken in favor of the lowest worker id.
 *
 * \throw std::invalid_argument if there are no candidates.
 */
NodeId chooseWorker(const PolicyKind       aPolicy,
                    const DispatchContext& aContext,
                    RrState&               aRrState,
                    const FunctionSpec&    aFunction,
                    const double           aInputBytes,
                    const StateMode        aMode);

} // namespace chainsim
} // namespace uiiit
