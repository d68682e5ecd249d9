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

#include "ChainSim/output.h"

#include "json.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace uiiit {
namespace chainsim {

using json = nlohmann::json;

namespace {

void checkKeys(const json&                  aObject,
               const std::set<std::string>& aAllowed,
               const std::string&           aWhere) {
  if (not aObject.is_object()) {
    throw ConfigError(aWhere + " must be an object");
  }
  for (const auto& [myKey, myValue] : aObject.items()) {
    if (aAllowed.count(myKey) == 0) {
      throw ConfigError("unknown field '" + myKey + "' in " + aWhere);
    }
  }
}

const json& required(const json&        aObject,
                     const std::string& aKey,
                     const std::string& aWhere) {
  const auto it = aObject.find(aKey);
  if (it == aObject.end()) {
    throw ConfigError("missing field '" + aKey + "' in " + aWhere);
  }
  return *it;
}

double number(const json& aValue, const std::string& aWhere) {
  if (not aValue.is_number()) {
    throw ConfigError(aWhere + " must be a number");
  }
  return aValue.get<double>();
}

double optionalNumber(const json&        aObject,
                      const std::string& aKey,
                      const std::string& aWhere,
                      const double       aDefault) {
  const auto it = aObject.find(aKey);
  return it == aObject.end() ? aDefault : number(*it, aWhere + "." + aKey);
}

std::string string(const json& aValue, const std::string& aWhere) {
  if (not aValue.is_string()) {
    throw ConfigError(aWhere + " must be a string");
  }
  return aValue.get<std::string>();
}

NodeId nodeId(const json& aValue, const std::string& aWhere) {
  if (not aValue.is_number_unsigned()) {
    throw ConfigError(aWhere + " must be a non-negative integer");
  }
  return aValue.get<NodeId>();
}

const json& array(const json& aValue, const std::string& aWhere) {
  if (not aValue.is_array()) {
    throw ConfigError(aWhere + " must be an array");
  }
  return aValue;
}

Topology parseTopology(const json& aObject) {
  checkKeys(aObject, {"nodes", "links"}, "topology");
  Topology ret;
  for (const auto& myNode : array(required(aObject, "nodes", "topology"),
                                  "topology.nodes")) {
    const std::string myWhere = "topology node";
    checkKeys(myNode, {"id", "role", "cores", "core_speed"}, myWhere);
    NodeSpec mySpec;
    mySpec.theId = nodeId(required(myNode, "id", myWhere), myWhere + ".id");
    try {
      mySpec.theRole =
          roleFromString(string(required(myNode, "role", myWhere), "role"));
    } catch (const std::invalid_argument& aErr) {
      throw ConfigError(aErr.what());
    }
    const auto myCores = optionalNumber(myNode, "cores", myWhere, 0);
    if (myCores < 0 or myCores != static_cast<unsigned>(myCores)) {
      throw ConfigError("cores of node " + std::to_string(mySpec.theId) +
                        " must be a non-negative integer");
    }
    mySpec.theCores     = static_cast<unsigned>(myCores);
    mySpec.theCoreSpeed = optionalNumber(myNode, "core_speed", myWhere, 0);
    ret.theNodes.emplace_back(mySpec);
  }
  for (const auto& myLink : array(required(aObject, "links", "topology"),
                                  "topology.links")) {
    const std::string myWhere = "topology link";
    checkKeys(myLink, {"endpoint_a", "endpoint_b", "propagation", "rate"},
              myWhere);
    LinkSpec mySpec;
    mySpec.theEndpointA = nodeId(required(myLink, "endpoint_a", myWhere),
                                 myWhere + ".endpoint_a");
    mySpec.theEndpointB = nodeId(required(myLink, "endpoint_b", myWhere),
                                 myWhere + ".endpoint_b");
    mySpec.thePropagation =
        number(required(myLink, "propagation", myWhere), "propagation");
    mySpec.theRate = number(required(myLink, "rate", myWhere), "rate");
    ret.theLinks.emplace_back(mySpec);
  }
  return ret;
}

FunctionCatalog parseFunctions(const json& aArray) {
  FunctionCatalog ret;
  for (const auto& myFunc : array(aArray, "functions")) {
    const std::string myWhere = "function";
    checkKeys(myFunc,
              {"id", "fixed_ops", "ops_per_byte", "output_ratio", "state_size"},
              myWhere);
    FunctionSpec mySpec;
    mySpec.theId          = string(required(myFunc, "id", myWhere), "id");
    mySpec.theFixedOps    = optionalNumber(myFunc, "fixed_ops", myWhere, 0);
    mySpec.theOpsPerByte  = optionalNumber(myFunc, "ops_per_byte", myWhere, 0);
    mySpec.theOutputRatio = optionalNumber(myFunc, "output_ratio", myWhere, 0);
    mySpec.theStateSize   = optionalNumber(myFunc, "state_size", myWhere, 0);
    if (not ret.emplace(mySpec.theId, mySpec).second) {
      throw ConfigError("duplicate function " + mySpec.theId);
    }
  }
  return ret;
}

std::vector<std::string> stringArray(const json& aValue,
                                     const std::string& aWhere) {
  std::vector<std::string> ret;
  for (const auto& myItem : array(aValue, aWhere)) {
    ret.emplace_back(string(myItem, aWhere + " item"));
  }
  return ret;
}

PayloadDistribution parsePayload(const json& aObject) {
  const std::string myWhere = "payload";
  checkKeys(aObject, {"type", "lo", "hi", "mean"}, myWhere);
  PayloadDistribution ret;
  const auto myType = string(required(aObject, "type", myWhere), "type");
  if (myType == "constant") {
    ret.theKind = PayloadDistribution::Kind::Constant;
  } else if (myType == "uniform") {
    ret.theKind = PayloadDistribution::Kind::Uniform;
    ret.theLo   = number(required(aObject, "lo", myWhere), "payload.lo");
    ret.theHi   = number(required(aObject, "hi", myWhere), "payload.hi");
  } else if (myType == "exponential") {
    ret.theKind = PayloadDistribution::Kind::Exponential;
    ret.theMean = number(required(aObject, "mean", myWhere), "payload.mean");
  } else {
    throw ConfigError("invalid payload type: " + myType);
  }
  return ret;
}

std::vector<Application> parseApplications(const json&     aWorkflows,
                                           const json&     aWorkload,
                                           const Topology& aTopology,
                                           double&         aHorizon,
                                           bool&           aComputeRandom,
                                           bool&           aDrain) {
  std::vector<Application> ret;

  const auto myClients = aTopology.withRole(Role::Client);
  for (const auto& myWorkflow : array(aWorkflows, "workflows")) {
    const std::string myWhere = "workflow";
    checkKeys(myWorkflow,
              {"app_id", "chain", "dag", "entry_payload", "client"},
              myWhere);
    Application myApp;
    const auto  myAppId = string(required(myWorkflow, "app_id", myWhere), "app_id");
    const auto  myEntry =
        number(required(myWorkflow, "entry_payload", myWhere), "entry_payload");
    const auto myChain = myWorkflow.find("chain");
    const auto myDag   = myWorkflow.find("dag");
    if ((myChain == myWorkflow.end()) == (myDag == myWorkflow.end())) {
      throw ConfigError("workflow " + myAppId +
                        " must have exactly one of 'chain' and 'dag'");
    }
    if (myChain != myWorkflow.end()) {
      myApp.theDag = chainToDag(
          ChainSpec{myAppId, stringArray(*myChain, "chain"), myEntry});
    } else {
      checkKeys(*myDag, {"vertices", "edges"}, "dag");
      myApp.theDag.theAppId        = myAppId;
      myApp.theDag.theEntryPayload = myEntry;
      myApp.theDag.theVertices =
          stringArray(required(*myDag, "vertices", "dag"), "dag.vertices");
      for (const auto& myEdge :
           array(required(*myDag, "edges", "dag"), "dag.edges")) {
        const auto myPair = stringArray(myEdge, "dag edge");
        if (myPair.size() != 2) {
          throw ConfigError("dag edge must be a [producer, consumer] pair");
        }
        myApp.theDag.theEdges.emplace_back(myPair[0], myPair[1]);
      }
    }
    const auto myClient = myWorkflow.find("client");
    if (myClient != myWorkflow.end()) {
      myApp.theClient = nodeId(*myClient, "client");
    } else if (not myClients.empty()) {
      myApp.theClient = myClients.front();
    }
    ret.emplace_back(std::move(myApp));
  }

  const std::string myWhere = "workload";
  checkKeys(aWorkload,
            {"horizon", "rate", "payload", "compute_random", "drain", "apps"},
            myWhere);
  aHorizon = number(required(aWorkload, "horizon", myWhere), "horizon");
  if (aWorkload.contains("compute_random")) {
    aComputeRandom = aWorkload["compute_random"].get<bool>();
  }
  if (aWorkload.contains("drain")) {
    aDrain = aWorkload["drain"].get<bool>();
  }
  const auto myDefaultRate = optionalNumber(aWorkload, "rate", myWhere, 0);
  PayloadDistribution myDefaultPayload;
  if (aWorkload.contains("payload")) {
    myDefaultPayload = parsePayload(aWorkload["payload"]);
  }
  for (auto& myApp : ret) {
    myApp.theRate    = myDefaultRate;
    myApp.thePayload = myDefaultPayload;
  }

  if (aWorkload.contains("apps")) {
    for (const auto& myEntry : array(aWorkload["apps"], "workload.apps")) {
      checkKeys(myEntry, {"app_id", "rate", "payload", "arrivals"}, "workload app");
      const auto myAppId =
          string(required(myEntry, "app_id", "workload app"), "app_id");
      auto it = std::find_if(ret.begin(), ret.end(), [&](const auto& aApp) {
        return aApp.theDag.theAppId == myAppId;
      });
      if (it == ret.end()) {
        throw ConfigError("workload refers to unknown app " + myAppId);
      }
      it->theRate = optionalNumber(myEntry, "rate", "workload app", it->theRate);
      if (myEntry.contains("payload")) {
        it->thePayload = parsePayload(myEntry["payload"]);
      }
      if (myEntry.contains("arrivals")) {
        std::vector<double> myTimes;
        for (const auto& myTime : array(myEntry["arrivals"], "arrivals")) {
          myTimes.emplace_back(number(myTime, "arrival time"));
        }
        it->theFixedArrivals = std::move(myTimes);
      }
    }
  }
  return ret;
}

std::string readFile(const std::filesystem::path& aPath) {
  std::ifstream myStream(aPath);
  if (not myStream) {
    throw ConfigError("cannot read " + aPath.string());
  }
  std::stringstream ret;
  ret << myStream.rdbuf();
  return ret.str();
}

ScenarioConfig parseConfigJson(const json& aDoc) {
  checkKeys(aDoc,
            {"topology",
             "functions",
             "workflows",
             "workload",
             "policy",
             "state_mode",
             "seed",
             "replications",
             "candidates",
             "initial_state"},
            "configuration");

  ScenarioConfig ret;
  auto&          myScenario = ret.theScenario;
  myScenario.theTopology    = parseTopology(required(aDoc, "topology", "configuration"));
  myScenario.theFunctions   = parseFunctions(required(aDoc, "functions", "configuration"));
  myScenario.theApps        = parseApplications(required(aDoc, "workflows", "configuration"),
                                         required(aDoc, "workload", "configuration"),
                                         myScenario.theTopology,
                                         myScenario.theHorizon,
                                         myScenario.theComputeRandom,
                                         myScenario.theDrain);
  try {
    myScenario.thePolicy = policyFromString(
        string(required(aDoc, "policy", "configuration"), "policy"));
    myScenario.theStateMode = stateModeFromString(
        string(required(aDoc, "state_mode", "configuration"), "state_mode"));
  } catch (const std::invalid_argument& aErr) {
    throw ConfigError(aErr.what());
  }

  const auto& mySeed = required(aDoc, "seed", "configuration");
  if (not mySeed.is_number_unsigned()) {
    throw ConfigError("seed must be an unsigned 64-bit integer");
  }
  myScenario.theSeed = mySeed.get<uint64_t>();

  const auto& myReplications = required(aDoc, "replications", "configuration");
  if (not myReplications.is_number_unsigned() or
      myReplications.get<uint64_t>() > std::numeric_limits<unsigned>::max()) {
    throw ConfigError("replications must be a positive integer");
  }
  ret.theReplications = myReplications.get<unsigned>();

  if (aDoc.contains("candidates")) {
    for (const auto& myCandidate : array(aDoc["candidates"], "candidates")) {
      myScenario.theCandidates.emplace_back(nodeId(myCandidate, "candidate"));
    }
  }
  if (aDoc.contains("initial_state")) {
    for (const auto& myEntry : array(aDoc["initial_state"], "initial_state")) {
      const std::string myWhere = "initial_state entry";
      checkKeys(myEntry, {"app_id", "function", "host"}, myWhere);
      myScenario.theInitialState.emplace_back(InitialState{
          string(required(myEntry, "app_id", myWhere), "app_id"),
          string(required(myEntry, "function", myWhere), "function"),
          nodeId(required(myEntry, "host", myWhere), "host")});
    }
  }
  return ret;
}

} // namespace

ScenarioConfig parseConfig(const std::string& aText) {
  try {
    return parseConfigJson(json::parse(aText));
  } catch (const json::exception& aErr) {
    throw ConfigError(std::string("malformed configuration: ") + aErr.what());
  }
}

ScenarioConfig loadConfig(const std::filesystem::path& aPath) {
  return parseConfig(readFile(aPath));
}

std::vector<std::string> validate(const ScenarioConfig& aConfig) {
  auto ret = validate(aConfig.theScenario);
  if (aConfig.theReplications < 1) {
    ret.emplace_back("replications must be positive");
  }
  return ret;
}

void applySeedOverride(ScenarioConfig& aConfig) {
  const auto myValue = std::getenv("CHAINSIM_SEED");
  if (myValue == nullptr) {
    return;
  }
  const std::string myText(myValue);
  std::size_t       myPos = 0;
  try {
    if (myText.empty() or myText.front() == '-') {
      throw std::invalid_argument("negative");
    }
    const auto mySeed = std::stoull(myText, &myPos);
    if (myPos != myText.size()) {
      throw std::invalid_argument("trailing characters");
    }
    aConfig.theScenario.theSeed = mySeed;
  } catch (const std::exception&) {
    throw ConfigError("invalid CHAINSIM_SEED: " + myText);
  }
}

std::string toString(const SweepField aField) {
  switch (aField) {
    case SweepField::ArrivalRate:
      return "arrival_rate";
    case SweepField::Policy:
      return "policy";
    case SweepField::StateMode:
      return "state_mode";
    case SweepField::LinkRate:
      return "link_rate";
  }
  return "unknown";
}

SweepSpec parseSweep(const std::string&           aText,
                     const std::filesystem::path& aBaseDir) {
  try {
    const auto myDoc = json::parse(aText);
    checkKeys(myDoc, {"base", "field", "link", "values"}, "sweep");

    SweepSpec   ret;
    const auto& myBase = required(myDoc, "base", "sweep");
    if (myBase.is_string()) {
      std::filesystem::path myPath(myBase.get<std::string>());
      if (myPath.is_relative()) {
        myPath = aBaseDir / myPath;
      }
      ret.theBase = loadConfig(myPath);
    } else {
      ret.theBase = parseConfigJson(myBase);
    }

    const auto myField = string(required(myDoc, "field", "sweep"), "field");
    auto       myFound = false;
    for (const auto myCandidate : {SweepField::ArrivalRate,
                                   SweepField::Policy,
                                   SweepField::StateMode,
                                   SweepField::LinkRate}) {
      if (myField == toString(myCandidate)) {
        ret.theField = myCandidate;
        myFound      = true;
      }
    }
    if (not myFound) {
      throw ConfigError("invalid sweep field: " + myField);
    }

    if (ret.theField == SweepField::LinkRate) {
      const auto& myLink = array(required(myDoc, "link", "sweep"), "link");
      if (myLink.size() != 2) {
        throw ConfigError("sweep link must be a pair of node ids");
      }
      ret.theLink = {nodeId(myLink[0], "link"), nodeId(myLink[1], "link")};
    }

    for (const auto& myValue : array(required(myDoc, "values", "sweep"), "values")) {
      if (myValue.is_number()) {
        ret.theValues.emplace_back(formatDouble(myValue.get<double>()));
      } else if (myValue.is_string()) {
        ret.theValues.emplace_back(myValue.get<std::string>());
      } else {
        throw ConfigError("sweep values must be numbers or strings");
      }
    }
    return ret;
  } catch (const json::exception& aErr) {
    throw ConfigError(std::string("malformed sweep: ") + aErr.what());
  }
}

SweepSpec loadSweep(const std::filesystem::path& aPath) {
  return parseSweep(readFile(aPath), aPath.parent_path());
}

ScenarioConfig pointConfig(const SweepSpec& aSweep, const std::size_t aPoint) {
  if (aPoint >= aSweep.theValues.size()) {
    throw ConfigError("sweep point " + std::to_string(aPoint) +
                      " out of range");
  }
  auto        ret     = aSweep.theBase;
  const auto& myValue = aSweep.theValues[aPoint];

  const auto myNumber = [&]() {
    std::size_t myPos = 0;
    double      ret   = 0;
    try {
      ret = std::stod(myValue, &myPos);
    } catch (const std::exception&) {
      myPos = 0;
    }
    if (myPos == 0 or myPos != myValue.size()) {
      throw ConfigError("sweep value '" + myValue + "' is not a number");
    }
    return ret;
  };

  try {
    switch (aSweep.theField) {
      case SweepField::ArrivalRate: {
        const auto myRate = myNumber();
        for (auto& myApp : ret.theScenario.theApps) {
          myApp.theRate = myRate;
        }
        break;
      }
      case SweepField::Policy:
        ret.theScenario.thePolicy = policyFromString(myValue);
        break;
      case SweepField::StateMode:
        ret.theScenario.theStateMode = stateModeFromString(myValue);
        break;
      case SweepField::LinkRate: {
        const auto myRate  = myNumber();
        auto       myFound = false;
        for (auto& myLink : ret.theScenario.theTopology.theLinks) {
          const auto [a, b] = aSweep.theLink;
          if ((myLink.theEndpointA == a and myLink.theEndpointB == b) or
              (myLink.theEndpointA == b and myLink.theEndpointB == a)) {
            myLink.theRate = myRate;
            myFound        = true;
          }
        }
        if (not myFound) {
          throw ConfigError("sweep link " + std::to_string(aSweep.theLink.first) +
                            "-" + std::to_string(aSweep.theLink.second) +
                            " not in the topology");
        }
        break;
      }
    }
  } catch (const std::invalid_argument& aErr) {
    throw ConfigError(aErr.what());
  }
  return ret;
}

std::vector<std::string> validate(const SweepSpec& aSweep) {
  auto ret = validate(aSweep.theBase);
  if (aSweep.theValues.empty()) {
    ret.emplace_back("sweep has no values");
  }
  for (std::size_t i = 0; i < aSweep.theValues.size(); i++) {
    try {
      for (const auto& myError : validate(pointConfig(aSweep, i))) {
        ret.emplace_back("sweep point " + std::to_string(i) + ": " + myError);
      }
    } catch (const ConfigError& aErr) {
      ret.emplace_back(aErr.what());
    }
  }
  return ret;
}

} // namespace chainsim
} // namespace uiiit
