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
#include "ChainSim/workflow.h"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace uiiit {
namespace chainsim {

/**
 * Where the state of a stateful function lives.
 *
 * - Embedded: carried by the invocation payload into and out of the
 *   executor, no node hosts it.
 * - RemoteFixed: hosted by a worker that never changes; an execution
 *   elsewhere fetches it and writes it back.
 * - RemoteMigrate: hosted by a worker; an execution elsewhere pulls it and
 *   the executor becomes the new host.
 */
enum class StateMode : int {
  Embedded      = 0,
  RemoteFixed   = 1,
  RemoteMigrate = 2,
};

std::string toString(const StateMode aMode);
//! \throw std::invalid_argument if the name is not a state mode.
StateMode stateModeFromString(const std::string& aName);
bool      remote(const StateMode aMode) noexcept;

struct StateEntry {
  NodeId theHost = 0;
  double theSize = 0;

  bool operator==(const StateEntry&) const = default;
};

//! (application, function)
using StateKey = std::pair<std::string, std::string>;

class StateRegistry
{
 public:
  //! \return nullptr if there is no entry.
  const StateEntry* find(const std::string& aApp,
                         const std::string& aFunction) const noexcept;

  //! Add or overwrite an entry.
  void place(const std::string& aApp,
             const std::string& aFunction,
             const NodeId       aHost,
             const double       aSize);

  std::size_t size() const noexcept {
    return theEntries.size();
  }
  const std::map<StateKey, StateEntry>& entries() const noexcept {
    return theEntries;
  }

  bool operator==(const StateRegistry&) const = default;

 private:
  std::map<StateKey, StateEntry> theEntries;
};

struct StateAccess {
  double                theDelay     = 0; //!< s
  double                theBytesMoved = 0;
  bool                  theMigration = false;
  std::optional<NodeId> theNewHost;
  //! Transfers performed, (from, to, bytes), for network accounting.
  std::vector<std::tuple<NodeId, NodeId, double>> theTransfers;
};

//! Bytes added by the function's state on each of its input/output hops.
double embeddedPayloadOverhead(const FunctionSpec& aFunction,
                               const StateMode     aMode) noexcept;

/**
 * Cost of making the state of aFunction available at aExec.
 *
 * A stateless function, or one whose state is already at aExec, costs
 * nothing.
 *
 * \throw std::invalid_argument if aMode is not a remote mode, or if the
 * function is stateful and has no registry entry.
 */
StateAccess remoteStateAccess(const StateMode      aMode,
                              const StateRegistry& aRegistry,
                              const std::string&   aApp,
                              const FunctionSpec&  aFunction,
                              const NodeId         aExec,
                              const RouteTable&    aRoutes);

//! Registry after the access, i.e., with the host moved if it migrated.
StateRegistry applyStateAccess(StateRegistry      aRegistry,
                               const StateAccess& aAccess,
                               const std::string& aApp,
                               const std::string& aFunction);

} // namespace chainsim
} // namespace uiiit
