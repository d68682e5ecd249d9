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

#include "ChainSim/topology.h"

#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace uiiit {
namespace chainsim {

struct FunctionSpec {
  std::string theId;
  double      theFixedOps    = 0; //!< operations per invocation
  double      theOpsPerByte  = 0; //!< operations per input byte
  double      theOutputRatio = 0; //!< output bytes per input byte
  double      theStateSize   = 0; //!< bytes

  bool operator==(const FunctionSpec&) const = default;
};

using FunctionCatalog = std::map<std::string, FunctionSpec>;

//! Linear composition: the output of each function feeds the next one.
struct ChainSpec {
  std::string              theAppId;
  std::vector<std::string> theFunctions;
  double                   theEntryPayload = 0;
};

using Edge = std::pair<std::string, std::string>; //!< (producer, consumer)

struct DagSpec {
  std::string              theAppId;
  std::vector<std::string> theVertices;
  std::vector<Edge>        theEdges;
  double                   theEntryPayload = 0;

  bool operator==(const DagSpec&) const = default;
};

//! Function id -> worker executing it.
using Assignment = std::map<std::string, NodeId>;

DagSpec chainToDag(const ChainSpec& aChain);

/**
 * Structural checks on a DAG: unknown endpoints, duplicates, cycles (found
 * by repeatedly removing the vertices with no incoming edges), the single
 * source and single sink, and that every vertex lies on a source-sink path.
 */
std::vector<std::string> validateDag(const DagSpec& aDag);

//! validateDag() plus function resolution and cost-parameter checks.
std::vector<std::string> validateWorkflow(const DagSpec&         aDag,
                                          const FunctionCatalog& aFunctions);

std::vector<std::string> validate(const FunctionSpec& aFunction);

/**
 * Vertices not yet completed whose predecessors are all completed.
 *
 * \throw std::invalid_argument if aCompleted contains an unknown vertex or a
 * vertex with a predecessor not completed.
 */
std::set<std::string> enabledFrontier(const DagSpec&               aDag,
                                      const std::set<std::string>& aCompleted);

struct StageIo {
  double theComputeOps   = 0;
  double theOutputBytes  = 0; //!< rounded to whole bytes
};

StageIo stageIo(const FunctionSpec& aFunction, const double aInputBytes);

//! Input size of a join vertex: the sum of its inputs.
//! \throw std::invalid_argument if there are no inputs.
double joinPayload(std::span<const double> aIncoming);

/**
 * Kahn's algorithm, picking the lowest function id among ready vertices.
 *
 * \throw std::invalid_argument if the graph has a cycle.
 */
std::vector<std::string> topologicalOrder(const DagSpec& aDag);

/**
 * A validated workflow with its vertices indexed in topological order, so
 * that index 0 is the source and size() - 1 the sink.
 */
class Workflow
{
 public:
  //! \throw std::invalid_argument if validateWorkflow() finds violations.
  Workflow(const DagSpec& aDag, const FunctionCatalog& aFunctions);

  const std::string& appId() const noexcept {
    return theDag.theAppId;
  }
  double entryPayload() const noexcept {
    return theDag.theEntryPayload;
  }
  const DagSpec& dag() const noexcept {
    return theDag;
  }
  std::size_t size() const noexcept {
    return theFunctions.size();
  }
  std::size_t source() const noexcept {
    return 0;
  }
  std::size_t sink() const noexcept {
    return size() - 1;
  }
  const FunctionSpec& function(const std::size_t aVertex) const {
    return theFunctions.at(aVertex);
  }
  const std::vector<std::size_t>& predecessors(const std::size_t aVertex) const {
    return thePredecessors.at(aVertex);
  }
  const std::vector<std::size_t>& successors(const std::size_t aVertex) const {
    return theSuccessors.at(aVertex);
  }
  //! \throw std::out_of_range if not a vertex.
  std::size_t index(const std::string& aFunction) const;

  //! True if the workflow is a chain.
  bool linear() const noexcept;

  std::string toString() const;

 private:
  DagSpec                               theDag;
  std::vector<FunctionSpec>             theFunctions;
  std::vector<std::vector<std::size_t>> thePredecessors;
  std::vector<std::vector<std::size_t>> theSuccessors;
  std::map<std::string, std::size_t>    theIndex;
};

} // namespace chainsim
} // namespace uiiit
