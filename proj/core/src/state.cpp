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

#include "ChainSim/state.h"

#include <cassert>
#include <stdexcept>

namespace uiiit {
namespace chainsim {

std::string toString(const StateMode aMode) {
  switch (aMode) {
    case StateMode::Embedded:
      return "Embedded";
    case StateMode::RemoteFixed:
      return "RemoteFixed";
    case StateMode::RemoteMigrate:
      return "RemoteMigrate";
  }
  return "unknown";
}

StateMode stateModeFromString(const std::string& aName) {
  for (const auto myMode : {StateMode::Embedded,
                            StateMode::RemoteFixed,
                            StateMode::RemoteMigrate}) {
    if (aName == toString(myMode)) {
      return myMode;
    }
  }
  throw std::invalid_argument("invalid state mode: " + aName);
}

bool remote(const StateMode aMode) noexcept {
  return aMode == StateMode::RemoteFixed or aMode == StateMode::RemoteMigrate;
}

const StateEntry* StateRegistry::find(const std::string& aApp,
                                      const std::string& aFunction) const
    noexcept {
  const auto it = theEntries.find(StateKey(aApp, aFunction));
  return it == theEntries.end() ? nullptr : &it->second;
}

void StateRegistry::place(const std::string& aApp,
                          const std::string& aFunction,
                          const NodeId       aHost,
                          const double       aSize) {
  theEntries[StateKey(aApp, aFunction)] = StateEntry{aHost, aSize};
}

double embeddedPayloadOverhead(const FunctionSpec& aFunction,
                               const StateMode     aMode) noexcept {
  return aMode == StateMode::Embedded ? aFunction.theStateSize : 0.0;
}

StateAccess remoteStateAccess(const StateMode      aMode,
                              const StateRegistry& aRegistry,
                              const std::string&   aApp,
                              const FunctionSpec&  aFunction,
                              const NodeId         aExec,
                              const RouteTable&    aRoutes) {
  if (not remote(aMode)) {
    throw std::invalid_argument("remote state access in mode " +
                                toString(aMode));
  }
  StateAccess ret;
  if (aFunction.theStateSize == 0) {
    return ret;
  }
  const auto myEntry = aRegistry.find(aApp, aFunction.theId);
  if (myEntry == nullptr) {
    throw std::invalid_argument("no state entry for " + aApp + ":" +
                                aFunction.theId);
  }
  if (myEntry->theHost == aExec) {
    return ret;
  }

  const auto mySize = myEntry->theSize;
  if (aMode == StateMode::RemoteFixed) {
    // fetch, then write back
    ret.theDelay = aRoutes.transferDelay(myEntry->theHost, aExec, mySize) +
                   aRoutes.transferDelay(aExec, myEntry->theHost, mySize);
    ret.theBytesMoved = 2 * mySize;
    ret.theTransfers.emplace_back(myEntry->theHost, aExec, mySize);
    ret.theTransfers.emplace_back(aExec, myEntry->theHost, mySize);
  } else {
    assert(aMode == StateMode::RemoteMigrate);
    ret.theDelay      = aRoutes.transferDelay(myEntry->theHost, aExec, mySize);
    ret.theBytesMoved = mySize;
    ret.theMigration  = true;
    ret.theNewHost    = aExec;
    ret.theTransfers.emplace_back(myEntry->theHost, aExec, mySize);
  }
  return ret;
}

StateRegistry applyStateAccess(StateRegistry      aRegistry,
                               const StateAccess& aAccess,
                               const std::string& aApp,
                               const std::string& aFunction) {
  if (aAccess.theMigration) {
    assert(aAccess.theNewHost.has_value());
    const auto myEntry = aRegistry.find(aApp, aFunction);
    if (myEntry != nullptr) {
      aRegistry.place(aApp, aFunction, *aAccess.theNewHost, myEntry->theSize);
    }
  }
  return aRegistry;
}

} // namespace chainsim
} // namespace uiiit
