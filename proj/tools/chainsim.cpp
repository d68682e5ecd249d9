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
#include "ChainSim/experiment.h"
#include "ChainSim/topology.h"
#include "ChainSim/workflow.h"

#include "CLI11.hpp"

#include <glog/logging.h>

#include <cstdlib>
#include <iostream>

namespace cs = uiiit::chainsim;

namespace {

constexpr int EXIT_CONFIG  = 1;
constexpr int EXIT_RUNTIME = 2;

cs::ScenarioConfig loadValid(const std::string& aPath) {
  auto ret = cs::loadConfig(aPath);
  cs::applySeedOverride(ret);
  const auto myErrors = cs::validate(ret);
  if (not myErrors.empty()) {
    for (const auto& myError : myErrors) {
      std::cerr << aPath << ": " << myError << '\n';
    }
    throw cs::ConfigError("invalid configuration " + aPath);
  }
  return ret;
}

cs::SweepSpec loadValidSweep(const std::string& aPath) {
  auto ret = cs::loadSweep(aPath);
  cs::applySeedOverride(ret.theBase);
  const auto myErrors = cs::validate(ret);
  if (not myErrors.empty()) {
    for (const auto& myError : myErrors) {
      std::cerr << aPath << ": " << myError << '\n';
    }
    throw cs::ConfigError("invalid sweep " + aPath);
  }
  return ret;
}

void describe(const cs::ScenarioConfig& aConfig) {
  const auto& myScenario = aConfig.theScenario;
  const cs::RouteTable myRoutes(myScenario.theTopology);

  std::cout << "policy " << cs::toString(myScenario.thePolicy)
            << ", state mode " << cs::toString(myScenario.theStateMode)
            << ", seed " << myScenario.theSeed << ", replications "
            << aConfig.theReplications << ", horizon "
            << myScenario.theHorizon << " s\n\n";

  std::cout << "nodes:\n";
  for (const auto& myNode : myScenario.theTopology.theNodes) {
    std::cout << "  " << myNode.theId << " " << cs::toString(myNode.theRole);
    if (myNode.theRole == cs::Role::Worker) {
      std::cout << " (" << myNode.theCores << " cores at "
                << myNode.theCoreSpeed << " ops/s)";
    }
    std::cout << '\n';
  }
  std::cout << "\nroutes:\n" << myRoutes.toString() << '\n';

  for (const auto& myApp : myScenario.theApps) {
    const cs::Workflow myWorkflow(myApp.theDag, myScenario.theFunctions);
    std::cout << myWorkflow.toString() << "  client " << myApp.theClient
              << ", ";
    if (myApp.theFixedArrivals.has_value()) {
      std::cout << myApp.theFixedArrivals->size() << " fixed arrivals";
    } else {
      std::cout << "rate " << myApp.theRate << " /s";
    }
    std::cout << ", payload " << myApp.thePayload.toString() << "\n\n";
  }
}

} // namespace

int main(int argc, char** argv) {
  google::InitGoogleLogging(argv[0]);
  FLAGS_logtostderr = true;

  CLI::App myApp{"Discrete-event simulator of stateful function chains and "
                 "DAGs on edge networks"};
  myApp.require_subcommand(1);

  int myVerbosity = 0;
  myApp.add_option("-v,--verbose", myVerbosity, "Verbosity level");

  std::string myConfigPath;
  std::string myOutput;
  unsigned    myJobs          = 1;
  bool        myEmitPlotdata  = false;

  auto myValidate =
      myApp.add_subcommand("validate", "Check a scenario configuration");
  myValidate->add_option("config", myConfigPath, "Configuration file")
      ->required();

  auto myRun = myApp.add_subcommand("run", "Run a scenario");
  myRun->add_option("config", myConfigPath, "Configuration file")->required();
  myRun->add_option("--out", myOutput, "Output directory")->required();
  myRun->add_option("--jobs", myJobs, "Concurrent replications");
  myRun->add_flag("--emit-plotdata", myEmitPlotdata, "Write plotdata.csv");

  auto mySweep = myApp.add_subcommand("sweep", "Run a parameter sweep");
  mySweep->add_option("sweepfile", myConfigPath, "Sweep file")->required();
  mySweep->add_option("--out", myOutput, "Output directory")->required();
  mySweep->add_option("--jobs", myJobs, "Concurrent replications");
  mySweep->add_flag("--emit-plotdata", myEmitPlotdata, "Write plotdata.csv");

  auto myDescribe = myApp.add_subcommand(
      "describe", "Print the route table and the workflows of a scenario");
  myDescribe->add_option("config", myConfigPath, "Configuration file")
      ->required();

  try {
    myApp.parse(argc, argv);
  } catch (const CLI::ParseError& aErr) {
    const auto ret = myApp.exit(aErr);
    return ret == 0 ? EXIT_SUCCESS : EXIT_CONFIG;
  }
  FLAGS_v = myVerbosity;

  try {
    if (myValidate->parsed()) {
      loadValid(myConfigPath);
      std::cout << myConfigPath << ": ok\n";

    } else if (myRun->parsed() or mySweep->parsed()) {
      const auto myPoints =
          myRun->parsed() ? cs::experimentPoints(loadValid(myConfigPath))
                          : cs::experimentPoints(loadValidSweep(myConfigPath));
      const auto myRecords = cs::runExperiment(
          myPoints, cs::ExperimentOptions{myOutput, myJobs, myEmitPlotdata});
      std::cout << "wrote " << myRecords.size() << " summary records to "
                << myOutput << '\n';

    } else if (myDescribe->parsed()) {
      describe(loadValid(myConfigPath));
    }
  } catch (const cs::ConfigError& aErr) {
    std::cerr << "configuration error: " << aErr.what() << '\n';
    return EXIT_CONFIG;
  } catch (const std::exception& aErr) {
    std::cerr << "runtime error: " << aErr.what() << '\n';
    return EXIT_RUNTIME;
  }

  return EXIT_SUCCESS;
}
