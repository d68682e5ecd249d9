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

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace uiiit {
namespace chainsim {

using NodeId = uint64_t;

enum class Role : int {
  Client = 0,
  Broker = 1,
  Worker = 2,
};

std::string toString(const Role aRole);
//! Throw std::invalid_argument if the name is not a role.
Role roleFromString(const std::string& aName);

struct NodeSpec {
  NodeId   theId        = 0;
  Role     theRole      = Role::Client;
  unsigned theCores     = 0; //!< workers only
  double   theCoreSpeed = 0; //!< operations/s, workers only

  bool operator==(const NodeSpec&) const = default;
};

//! Bidirectional, symmetric link.
struct LinkSpec {
  NodeId theEndpointA  = 0;
  NodeId theEndpointB  = 0;
  double thePropagation = 0; //!< s
  double theRate        = 0; //!< bytes/s

  bool operator==(const LinkSpec&) const = default;
};

struct Topology {
  std::vector<NodeSpec> theNodes;
  std::vector<LinkSpec> theLinks;

  //! \return nullptr if there is no node with this id.
  const NodeSpec* node(const NodeId aId) const noexcept;

  //! Ids of the nodes with a given role, ascending.
  std::vector<NodeId> withRole(const Role aRole) const;
  std::vector<NodeId> workers() const {
    return withRole(Role::Worker);
  }
};

/**
 * Check all the structural invariants of a topology.
 *
 * \return the list of violations found, empty iff the topology is valid.
 */
std::vector<std::string> validate(const Topology& aTopology);

struct Route {
  std::vector<NodeId>      theHops;  //!< nodes traversed after the source
  std::vector<std::size_t> theLinks; //!< indices into Topology::theLinks
  double                   thePropagation = 0;
  double                   theBottleneckRate; //!< +inf for empty routes

  std::size_t hopCount() const noexcept {
    return theHops.size();
  }
};

/**
 * All-pairs routes on a static topology.
 *
 * The route between any two nodes minimizes the total propagation delay,
 * with ties broken by fewer hops and then by the lexicographically smallest
 * sequence of traversed node ids. Immutable once built.
 */
class RouteTable
{
 public:
  //! \throw std::invalid_argument if the topology is not valid.
  explicit RouteTable(const Topology& aTopology);

  //! \throw std::out_of_range if either node does not exist.
  const Route& route(const NodeId aSrc, const NodeId aDst) const;

  /**
   * Store-and-forward delay of a payload from aSrc to aDst: the sum over
   * the hops of propagation + aBytes / rate, zero if aSrc == aDst.
   *
   * \throw std::out_of_range if either node does not exist.
   * \throw std::invalid_argument if aBytes is negative.
   */
  double transferDelay(const NodeId aSrc,
                       const NodeId aDst,
                       const double aBytes) const;

  const Topology& topology() const noexcept {
    return theTopology;
  }

  //! All node ids, ascending.
  const std::vector<NodeId>& nodeIds() const noexcept {
    return theIds;
  }

  //! Human-readable dump of all the routes.
  std::string toString() const;

 private:
  std::size_t index(const NodeId aId) const;

 private:
  Topology                      theTopology;
  std::vector<NodeId>           theIds;
  std::map<NodeId, std::size_t> theIndex;
  std::vector<Route>            theRoutes; // row-major, src * N + dst
  // link indices of each route in ascending order, so that the delays of
  // routes over the same links are summed identically in both directions
  std::vector<std::vector<std::size_t>> theDelayOrder;
};

RouteTable buildRoutes(const Topology& aTopology);

inline double transferDelay(const RouteTable& aRoutes,
                            const NodeId      aSrc,
                            const NodeId      aDst,
                            const double      aBytes) {
  return aRoutes.transferDelay(aSrc, aDst, aBytes);
}

} // namespace chainsim
} // namespace uiiit
