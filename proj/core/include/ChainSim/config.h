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

#include "ChainSim/engine.h"

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace uiiit {
namespace chainsim {

//! Malformed configuration document.
struct ConfigError : public std::runtime_error {
  explicit ConfigError(const std::string& aWhat)
      : std::runtime_error(aWhat) {
  }
};

struct ScenarioConfig {
  Scenario theScenario;
  unsigned theReplications = 1;
};

/**
 * Parse a JSON scenario configuration.
 *
 * Top-level fields: topology, functions, workflows, workload, policy,
 * state_mode, seed, replications, and optionally candidates and
 * initial_state. Unknown fields are rejected. The semantic checks are left
 * to validate().
 *
 * \throw ConfigError if the document is not valid JSON or does not match the
 * schema.
 */
ScenarioConfig parseConfig(const std::string& aText);

//! \throw ConfigError also if the file cannot be read.
ScenarioConfig loadConfig(const std::filesystem::path& aPath);

std::vector<std::string> validate(const ScenarioConfig& aConfig);

//! Override the seed with the CHAINSIM_SEED environment variable, if set.
//! \throw ConfigError if the variable is not an unsigned 64-bit integer.
void applySeedOverride(ScenarioConfig& aConfig);

enum class SweepField : int {
  ArrivalRate = 0, //!< rate of all the applications
  Policy      = 1,
  StateMode   = 2,
  LinkRate    = 3, //!< rate of one named link
};

std::string toString(const SweepField aField);

struct SweepSpec {
  ScenarioConfig           theBase;
  SweepField               theField = SweepField::ArrivalRate;
  std::pair<NodeId, NodeId> theLink; //!< LinkRate only
  std::vector<std::string>  theValues;
};

/**
 * Parse a JSON sweep document: {"base": <config object or path>, "field":
 * "arrival_rate" | "policy" | "state_mode" | "link_rate", "link": [a, b],
 * "values": [...]}. A relative base path is resolved against aBaseDir.
 *
 * \throw ConfigError if malformed.
 */
SweepSpec parseSweep(const std::string&           aText,
                     const std::filesystem::path& aBaseDir);

SweepSpec loadSweep(const std::filesystem::path& aPath);

std::vector<std::string> validate(const SweepSpec& aSweep);

//! Configuration of the aPoint-th value of the sweep.
//! \throw ConfigError if the value does not apply.
ScenarioConfig pointConfig(const SweepSpec& aSweep, const std::size_t aPoint);

} // namespace chainsim
} // namespace uiiit
