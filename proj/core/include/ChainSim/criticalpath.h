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

#include "ChainSim/state.h"
#include "ChainSim/topology.h"
#include "ChainSim/workflow.h"

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

namespace uiiit {
namespace chainsim {

/**
 * Per-vertex and per-edge delays of a workflow under a fixed assignment and
 * no queueing. Vertices are indexed as in Workflow.
 */
struct PathCosts {
  double              theEntry = 0; //!< client to source executor
  std::vector<double> theState;     //!< state access, per vertex
  std::vector<double> theCompute;   //!< execution, per vertex
  //! Output transfer between executors, per edge (producer, consumer).
  std::map<std::pair<std::size_t, std::size_t>, double> theEdge;
  double                                                theExit = 0; //!< sink executor to client
};

/**
 * Zero-load costs of one invocation issued by aClient.
 *
 * The input of a vertex is the sum of its predecessors' outputs; an edge
 * carries the producer's output, plus both functions' states in Embedded
 * mode. Remote state costs are taken from aRegistry, where a missing entry
 * means that the state will be placed at its first executor.
 *
 * \throw std::invalid_argument if the assignment is incomplete or maps a
 * function to a node that is not a worker.
 */
PathCosts zeroLoadCosts(const Workflow&      aWorkflow,
                        const Assignment&    aAssignment,
                        const RouteTable&    aRoutes,
                        const StateRegistry& aRegistry,
                        const StateMode      aMode,
                        const NodeId         aClient,
                        const double         aEntryPayload);

//! Longest path by dynamic programming in topological order.
double criticalPathTime(const Workflow& aWorkflow, const PathCosts& aCosts);

//! Zero-load end-to-end latency with the workflow's entry payload.
double criticalPathTime(const Workflow&      aWorkflow,
                        const Assignment&    aAssignment,
                        const RouteTable&    aRoutes,
                        const StateRegistry& aRegistry,
                        const StateMode      aMode,
                        const NodeId         aClient);

} // namespace chainsim
} // namespace uiiit
