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

#include "ChainSim/random.h"

#include <string>
#include <vector>

namespace uiiit {
namespace chainsim {

//! Distribution of the entry payload of invocations, in bytes.
struct PayloadDistribution {
  enum class Kind : int {
    Constant    = 0, //!< always the workflow's entry payload
    Uniform     = 1, //!< uniform in [theLo, theHi)
    Exponential = 2, //!< exponential with mean theMean
  };

  Kind   theKind = Kind::Constant;
  double theLo   = 0;
  double theHi   = 0;
  double theMean = 0;

  //! Payload in whole bytes, rounded to the nearest.
  double sample(RandomStream& aRng, const double aEntryPayload) const;

  std::vector<std::string> validate() const;

  std::string toString() const;

  bool operator==(const PayloadDistribution&) const = default;
};

/**
 * Poisson arrival times in [0, aHorizon), with exponential inter-arrival
 * times drawn by inverse transform from aRng.
 *
 * \throw std::invalid_argument if aRate is not positive.
 */
std::vector<double>
genArrivals(const double aRate, const double aHorizon, RandomStream& aRng);

} // namespace chainsim
} // namespace uiiit
