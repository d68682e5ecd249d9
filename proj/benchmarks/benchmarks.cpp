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

#include "ChainSim/config.h"
#include "ChainSim/dispatch.h"
#include "ChainSim/engine.h"
#include "ChainSim/random.h"
#include "ChainSim/state.h"
#include "ChainSim/topology.h"

#include "benchmark/benchmark.h"

#include <filesystem>

namespace cs = uiiit::chainsim;

namespace {

// square grid of side aSide: node 0 is the client, all the others are workers
cs::Topology grid(const std::size_t aSide) {
  cs::Topology ret;
  for (std::size_t i = 0; i < aSide * aSide; i++) {
    ret.theNodes.emplace_back(cs::NodeSpec{
        i, i == 0 ? cs::Role::Client : cs::Role::Worker, i == 0 ? 0u : 2u,
        i == 0 ? 0.0 : 1e9});
  }
  for (std::size_t r = 0; r < aSide; r++) {
    for (std::size_t c = 0; c < aSide; c++) {
      const auto myId = r * aSide + c;
      if (c + 1 < aSide) {
        ret.theLinks.emplace_back(
            cs::LinkSpec{myId, myId + 1, 0.001 * (1 + myId % 3), 1e8});
      }
      if (r + 1 < aSide) {
        ret.theLinks.emplace_back(
            cs::LinkSpec{myId, myId + aSide, 0.001 * (1 + myId % 5), 1e8});
      }
    }
  }
  return ret;
}

cs::Scenario scenario(const std::string& aName) {
  return cs::loadConfig(std::filesystem::path(CHAINSIM_SCENARIOS) / aName)
      .theScenario;
}

} // namespace

static void BM_BuildRoutes(benchmark::State& aState) {
  const auto myTopology = grid(static_cast<std::size_t>(aState.range(0)));
  for (auto _ : aState) {
    cs::RouteTable myRoutes(myTopology);
    benchmark::DoNotOptimize(myRoutes);
  }
  aState.SetComplexityN(aState.range(0) * aState.range(0));
}
BENCHMARK(BM_BuildRoutes)->RangeMultiplier(2)->Range(2, 16)->Complexity();

static void BM_MinLatencyDispatch(benchmark::State& aState) {
  const auto         myTopology = grid(8);
  const cs::RouteTable myRoutes(myTopology);
  cs::StateRegistry  myRegistry;
  myRegistry.place("app", "f", 63, 4096);
  cs::RandomStream    myRng(1);
  cs::DispatchContext myContext{myRoutes, myRegistry, myRng, "app", {}, {}, 0};
  for (const auto myWorker : myTopology.workers()) {
    myContext.theCandidates.emplace_back(myWorker);
    myContext.theBacklog[myWorker] = 1e6 * (myWorker % 7);
  }
  const cs::FunctionSpec myFunction{"f", 1e6, 10, 0.5, 4096};
  cs::RrState            myRr;
  for (auto _ : aState) {
    benchmark::DoNotOptimize(cs::chooseWorker(cs::PolicyKind::MinLatencyEstimate,
                                              myContext,
                                              myRr,
                                              myFunction,
                                              1e5,
                                              cs::StateMode::RemoteMigrate));
  }
}
BENCHMARK(BM_MinLatencyDispatch);

static void BM_RunBaseline(benchmark::State& aState) {
  auto myScenario        = scenario("baseline_single_worker.json");
  myScenario.theHorizon  = static_cast<double>(aState.range(0));
  std::size_t myCompleted = 0;
  for (auto _ : aState) {
    const auto myLog = cs::run(myScenario);
    myCompleted += myLog.theCompleted;
  }
  aState.counters["invocations/s"] = benchmark::Counter(
      static_cast<double>(myCompleted), benchmark::Counter::kIsRate);
}
BENCHMARK(BM_RunBaseline)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

static void BM_RunEdge(benchmark::State& aState) {
  auto myScenario         = scenario("edge_chain_dag.json");
  myScenario.thePolicy    = static_cast<cs::PolicyKind>(aState.range(0));
  std::size_t myCompleted = 0;
  for (auto _ : aState) {
    const auto myLog = cs::run(myScenario);
    myCompleted += myLog.theCompleted;
  }
  aState.SetLabel(cs::toString(myScenario.thePolicy));
  aState.counters["invocations/s"] = benchmark::Counter(
      static_cast<double>(myCompleted), benchmark::Counter::kIsRate);
}
BENCHMARK(BM_RunEdge)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
