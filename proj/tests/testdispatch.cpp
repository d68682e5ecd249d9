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

#include "support.h"

#include "gtest/gtest.h"

#include <cmath>
#include <map>
#include <stdexcept>

namespace uiiit {
namespace chainsim {

struct TestDispatch : public ::testing::Test {
  // client 0 - broker 9 - workers 1, 2, 3, identical links
  static Topology star() {
    Topology ret;
    ret.theNodes = {NodeSpec{0, Role::Client, 0, 0},
                    NodeSpec{9, Role::Broker, 0, 0},
                    NodeSpec{1, Role::Worker, 1, 1e6},
                    NodeSpec{2, Role::Worker, 1, 1e6},
                    NodeSpec{3, Role::Worker, 1, 1e6}};
    ret.theLinks = {LinkSpec{0, 9, 0.001, 1e6},
                    LinkSpec{9, 1, 0.001, 1e6},
                    LinkSpec{9, 2, 0.001, 1e6},
                    LinkSpec{9, 3, 0.001, 1e6}};
    return ret;
  }

  // a single worker 1 with a client 0 one hop away
  static Topology pair() {
    Topology ret;
    ret.theNodes = {NodeSpec{0, Role::Client, 0, 0},
                    NodeSpec{1, Role::Worker, 1, 1e6}};
    ret.theLinks = {LinkSpec{0, 1, 0.001, 1e6}};
    return ret;
  }
};

TEST_F(TestDispatch, test_policy_names) {
  ASSERT_EQ(5u, allPolicies().size());
  for (const auto myPolicy : allPolicies()) {
    EXPECT_EQ(myPolicy, policyFromString(toString(myPolicy)));
  }
  EXPECT_THROW(policyFromString("Fastest"), std::invalid_argument);
}

TEST_F(TestDispatch, test_estimate_examples) {
  const RouteTable myRoutes(pair());
  StateRegistry    myRegistry;
  RandomStream     myRng(1);
  DispatchContext  myContext{myRoutes, myRegistry, myRng, "app", {1}, {}, 1};
  const FunctionSpec myFunc{"f", 1000, 0, 1, 0};

  EXPECT_DOUBLE_EQ(
      0.001, estimateCompletion(myContext, myFunc, 1, 0, StateMode::Embedded));

  myContext.theBacklog[1] = 1000;
  EXPECT_DOUBLE_EQ(
      0.002, estimateCompletion(myContext, myFunc, 1, 0, StateMode::Embedded));

  // plus the input transfer: 1 ms + 1000 B / 1e6 B/s
  myContext.thePayloadLocation = 0;
  const auto myExpected        = 0.002 + (0.001 + 1000 / 1e6);
  EXPECT_DOUBLE_EQ(myExpected,
                   estimateCompletion(myContext,
                                      FunctionSpec{"f", 1000, 0, 1, 0},
                                      1,
                                      1000,
                                      StateMode::Embedded));
  EXPECT_DOUBLE_EQ(0.004,
                   estimateCompletion(myContext,
                                      FunctionSpec{"f", 1000, 0, 1, 0},
                                      1,
                                      1000,
                                      StateMode::RemoteFixed));

  EXPECT_THROW(estimateCompletion(myContext, myFunc, 0, 0, StateMode::Embedded),
               std::invalid_argument);
}

TEST_F(TestDispatch, test_estimate_vs_oracle) {
  RandomStream myRng(10);
  for (auto i = 0; i < 300; i++) {
    const auto myCase    = test::randomDispatchCase(myRng, 6);
    const auto myContext = myCase.context(myRng);
    for (const auto myWorker : myCase.theCandidates) {
      const auto myExpected = test::estimateOracle(myContext,
                                                   myCase.theFunction,
                                                   myWorker,
                                                   myCase.theInputBytes,
                                                   myCase.theMode);
      EXPECT_NEAR(myExpected,
                  estimateCompletion(myContext,
                                     myCase.theFunction,
                                     myWorker,
                                     myCase.theInputBytes,
                                     myCase.theMode),
                  1e-12 * std::max(1.0, myExpected));
    }
  }
}

TEST_F(TestDispatch, test_single_candidate) {
  const RouteTable myRoutes(star());
  StateRegistry    myRegistry;
  myRegistry.place("app", "f", 3, 100);
  RandomStream    myRng(2);
  DispatchContext myContext{myRoutes, myRegistry, myRng, "app", {2}, {}, 0};
  RrState         myRr;
  for (const auto myPolicy : allPolicies()) {
    for (const auto myMode : {StateMode::Embedded,
                              StateMode::RemoteFixed,
                              StateMode::RemoteMigrate}) {
      EXPECT_EQ(NodeId(2),
                chooseWorker(myPolicy,
                             myContext,
                             myRr,
                             FunctionSpec{"f", 1, 0, 1, 100},
                             10,
                             myMode));
    }
  }

  myContext.theCandidates.clear();
  EXPECT_THROW(chooseWorker(PolicyKind::Random,
                            myContext,
                            myRr,
                            FunctionSpec{"f", 1, 0, 1, 100},
                            10,
                            StateMode::Embedded),
               std::invalid_argument);
}

TEST_F(TestDispatch, test_least_loaded) {
  const RouteTable myRoutes(star());
  StateRegistry    myRegistry;
  RandomStream     myRng(3);
  DispatchContext  myContext{
      myRoutes, myRegistry, myRng, "app", {3, 2, 1}, {{1, 5}, {2, 5}, {3, 9}}, 0};
  RrState            myRr;
  const FunctionSpec myFunc{"f", 1, 0, 1, 0};
  EXPECT_EQ(NodeId(1),
            chooseWorker(PolicyKind::LeastLoaded,
                         myContext,
                         myRr,
                         myFunc,
                         0,
                         StateMode::Embedded));

  myContext.theBacklog = {{1, 7}, {2, 5}, {3, 5}};
  EXPECT_EQ(NodeId(2),
            chooseWorker(PolicyKind::LeastLoaded,
                         myContext,
                         myRr,
                         myFunc,
                         0,
                         StateMode::Embedded));
}

TEST_F(TestDispatch, test_state_local) {
  const RouteTable myRoutes(star());
  StateRegistry    myRegistry;
  RandomStream     myRng(4);
  DispatchContext  myContext{
      myRoutes, myRegistry, myRng, "app", {1, 2, 3}, {{1, 0}, {2, 50}, {3, 90}}, 0};
  RrState            myRr;
  const FunctionSpec myFunc{"f", 1, 0, 1, 100};

  // no entry: least loaded
  EXPECT_EQ(NodeId(1),
            chooseWorker(PolicyKind::StateLocal,
                         myContext,
                         myRr,
                         myFunc,
                         0,
                         StateMode::RemoteFixed));

  myRegistry.place("app", "f", 3, 100);
  EXPECT_EQ(NodeId(3),
            chooseWorker(PolicyKind::StateLocal,
                         myContext,
                         myRr,
                         myFunc,
                         0,
                         StateMode::RemoteFixed));

  // host not among the candidates
  myContext.theCandidates = {1, 2};
  EXPECT_EQ(NodeId(1),
            chooseWorker(PolicyKind::StateLocal,
                         myContext,
                         myRr,
                         myFunc,
                         0,
                         StateMode::RemoteFixed));
}

TEST_F(TestDispatch, test_min_latency_ties) {
  const RouteTable myRoutes(star());
  StateRegistry    myRegistry;
  RandomStream     myRng(5);
  DispatchContext  myContext{myRoutes, myRegistry, myRng, "app", {3, 2, 1}, {}, 0};
  RrState          myRr;
  const FunctionSpec myFunc{"f", 1000, 1, 1, 0};
  EXPECT_EQ(NodeId(1),
            chooseWorker(PolicyKind::MinLatencyEstimate,
                         myContext,
                         myRr,
                         myFunc,
                         1000,
                         StateMode::Embedded));

  myContext.theBacklog = {{1, 1}};
  EXPECT_EQ(NodeId(2),
            chooseWorker(PolicyKind::MinLatencyEstimate,
                         myContext,
                         myRr,
                         myFunc,
                         1000,
                         StateMode::Embedded));

  // remote state on 3 makes it the fastest
  myRegistry.place("app", "g", 3, 1e5);
  const FunctionSpec myStateful{"g", 1000, 1, 1, 1e5};
  EXPECT_EQ(NodeId(3),
            chooseWorker(PolicyKind::MinLatencyEstimate,
                         myContext,
                         myRr,
                         myStateful,
                         1000,
                         StateMode::RemoteFixed));
}

TEST_F(TestDispatch, test_min_latency_vs_brute_force) {
  RandomStream myRng(11);
  for (auto i = 0; i < 1000; i++) {
    const auto myCase = test::randomDispatchCase(myRng, 6);
    RrState    myRr;
    ASSERT_EQ(test::bruteForceMinLatency(myCase, myRng),
              chooseWorker(PolicyKind::MinLatencyEstimate,
                           myCase.context(myRng),
                           myRr,
                           myCase.theFunction,
                           myCase.theInputBytes,
                           myCase.theMode));
  }
}

TEST_F(TestDispatch, test_min_latency_scale_invariance) {
  RandomStream myRng(12);
  for (auto i = 0; i < 300; i++) {
    const auto myCase = test::randomDispatchCase(myRng, 6);

    // skip instances with ties or near-ties
    std::vector<double> myEstimates;
    for (const auto myWorker : myCase.theCandidates) {
      myEstimates.emplace_back(estimateCompletion(myCase.context(myRng),
                                                  myCase.theFunction,
                                                  myWorker,
                                                  myCase.theInputBytes,
                                                  myCase.theMode));
    }
    std::sort(myEstimates.begin(), myEstimates.end());
    if (myEstimates.size() > 1 and
        myEstimates[1] - myEstimates[0] < 1e-9 * myEstimates[1]) {
      continue;
    }

    // scaling speed and rates also requires scaling the propagation delays
    // for the estimates to scale by the same factor, powers of two keep the
    // route ties exact
    const auto myFactor   = static_cast<double>(1u << myRng.index(4));
    auto       myTopology = myCase.theRoutes.topology();
    for (auto& myNode : myTopology.theNodes) {
      myNode.theCoreSpeed *= myFactor;
    }
    for (auto& myLink : myTopology.theLinks) {
      myLink.theRate *= myFactor;
      myLink.thePropagation /= myFactor;
    }
    test::DispatchCase myScaled(myTopology);
    myScaled.theRegistry        = myCase.theRegistry;
    myScaled.theCandidates      = myCase.theCandidates;
    myScaled.theBacklog         = myCase.theBacklog;
    myScaled.thePayloadLocation = myCase.thePayloadLocation;
    myScaled.theFunction        = myCase.theFunction;
    myScaled.theInputBytes      = myCase.theInputBytes;
    myScaled.theMode            = myCase.theMode;

    RrState myRr;
    EXPECT_EQ(chooseWorker(PolicyKind::MinLatencyEstimate,
                           myCase.context(myRng),
                           myRr,
                           myCase.theFunction,
                           myCase.theInputBytes,
                           myCase.theMode),
              chooseWorker(PolicyKind::MinLatencyEstimate,
                           myScaled.context(myRng),
                           myRr,
                           myScaled.theFunction,
                           myScaled.theInputBytes,
                           myScaled.theMode));
  }
}

TEST_F(TestDispatch, test_round_robin) {
  const RouteTable myRoutes(star());
  StateRegistry    myRegistry;
  RandomStream     myRng(6);
  DispatchContext  myContext{myRoutes, myRegistry, myRng, "app", {3, 1, 2}, {}, 0};
  RrState          myRr;
  const FunctionSpec myF{"f", 1, 0, 1, 0};
  const FunctionSpec myG{"g", 1, 0, 1, 0};

  for (auto myRound = 0; myRound < 5; myRound++) {
    std::map<NodeId, int> myVisits;
    for (auto i = 0; i < 3; i++) {
      myVisits[chooseWorker(
          PolicyKind::RoundRobin, myContext, myRr, myF, 0, StateMode::Embedded)]++;
      // interleaved calls for another function do not interfere
      chooseWorker(
          PolicyKind::RoundRobin, myContext, myRr, myG, 0, StateMode::Embedded);
    }
    EXPECT_EQ((std::map<NodeId, int>{{1, 1}, {2, 1}, {3, 1}}), myVisits);
  }
  EXPECT_EQ(0u, myRr.cursor("app", "f"));
  EXPECT_EQ(0u, myRr.cursor("other", "f"));
}

TEST_F(TestDispatch, test_random_uniform) {
  const RouteTable myRoutes(star());
  StateRegistry    myRegistry;
  RandomStream     myRng(7);
  DispatchContext  myContext{myRoutes, myRegistry, myRng, "app", {1, 2, 3}, {}, 0};
  RrState          myRr;
  const FunctionSpec myF{"f", 1, 0, 1, 0};

  const auto            N = 10000;
  std::map<NodeId, int> myCounts;
  for (auto i = 0; i < N; i++) {
    myCounts[chooseWorker(
        PolicyKind::Random, myContext, myRr, myF, 0, StateMode::Embedded)]++;
  }
  const auto p     = 1.0 / 3;
  const auto sigma = std::sqrt(N * p * (1 - p));
  for (const auto myWorker : {1, 2, 3}) {
    EXPECT_NEAR(N * p, myCounts[myWorker], 3 * sigma);
  }
}

TEST_F(TestDispatch, test_determinism) {
  RandomStream mySource(13);
  for (auto i = 0; i < 100; i++) {
    const auto myCase = test::randomDispatchCase(mySource, 6);
    for (const auto myPolicy : allPolicies()) {
      RandomStream myRng1(i);
      RandomStream myRng2(i);
      RrState      myRr1;
      RrState      myRr2;
      for (auto j = 0; j < 5; j++) {
        EXPECT_EQ(chooseWorker(myPolicy,
                               myCase.context(myRng1),
                               myRr1,
                               myCase.theFunction,
                               myCase.theInputBytes,
                               myCase.theMode),
                  chooseWorker(myPolicy,
                               myCase.context(myRng2),
                               myRr2,
                               myCase.theFunction,
                               myCase.theInputBytes,
                               myCase.theMode));
      }
    }
  }
}

} // namespace chainsim
} // namespace uiiit
