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

#include "ChainSim/workload.h"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace uiiit {
namespace chainsim {

double PayloadDistribution::sample(RandomStream& aRng,
                                   const double  aEntryPayload) const {
  switch (theKind) {
    case Kind::Constant:
      return std::round(aEntryPayload);
    case Kind::Uniform:
      return std::round(aRng.uniform(theLo, theHi));
    case Kind::Exponential:
      return std::round(aRng.exponential(1.0 / theMean));
  }
  throw std::invalid_argument("unknown payload distribution");
}

std::vector<std::string> PayloadDistribution::validate() const {
  std::vector<std::string> ret;
  if (theKind == Kind::Uniform and
      not(theLo >= 0 and theLo <= theHi and std::isfinite(theHi))) {
    ret.emplace_back("invalid uniform payload bounds");
  }
  if (theKind == Kind::Exponential and
      not(theMean > 0 and std::isfinite(theMean))) {
    ret.emplace_back("invalid exponential payload mean");
  }
  return ret;
}

std::string PayloadDistribution::toString() const {
  std::stringstream ret;
  switch (theKind) {
    case Kind::Constant:
      ret << "constant";
      break;
    case Kind::Uniform:
      ret << "uniform(" << theLo << "," << theHi << ")";
      break;
    case Kind::Exponential:
      ret << "exponential(" << theMean << ")";
      break;
  }
  return ret.str();
}

std::vector<double>
genArrivals(const double aRate, const double aHorizon, RandomStream& aRng) {
  if (not(aRate > 0) or not std::isfinite(aRate)) {
    throw std::invalid_argument("invalid arrival rate: " +
                                std::to_string(aRate));
  }
  std::vector<double> ret;
  auto                myTime = 0.0;
  while (true) {
    myTime += -std::log(aRng.uniformOpenClosed()) / aRate;
    if (not(myTime < aHorizon)) {
      break;
    }
    // a zero gap (u == 1) would break strict monotonicity
    if (ret.empty() or myTime > ret.back()) {
      ret.emplace_back(myTime);
    }
  }
  return ret;
}

} // namespace chainsim
} // namespace uiiit
