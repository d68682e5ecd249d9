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

#include "ChainSim/output.h"

#include <array>
#include <charconv>
#include <stdexcept>

namespace uiiit {
namespace chainsim {

std::string formatDouble(const double aValue) {
  std::array<char, 64> myBuffer;
  const auto [myEnd, myErr] =
      std::to_chars(myBuffer.data(), myBuffer.data() + myBuffer.size(), aValue);
  if (myErr != std::errc()) {
    throw std::runtime_error("cannot format floating point value");
  }
  return std::string(myBuffer.data(), myEnd);
}

void writeInvocations(std::ostream& aStream, const MetricsLog& aLog) {
  aStream << "inv_id,app,arrival_s,completion_s,latency_s,stages,state_bytes,"
             "migrations\n";
  for (const auto& myRecord : aLog.theInvocations) {
    aStream << myRecord.theId << ',' << myRecord.theApp << ','
            << formatDouble(myRecord.theArrival) << ',';
    if (myRecord.theCompletion.has_value()) {
      aStream << formatDouble(*myRecord.theCompletion) << ','
              << formatDouble(myRecord.latency()) << ',';
    } else {
      aStream << ",,";
    }
    aStream << myRecord.theStages.size() << ','
            << formatDouble(myRecord.stateBytes()) << ','
            << myRecord.migrations() << '\n';
  }
}

void writeLinks(std::ostream& aStream, const MetricsLog& aLog) {
  aStream << "node_a,node_b,bytes\n";
  for (const auto& myLink : aLog.theLinks) {
    aStream << myLink.theEndpointA << ',' << myLink.theEndpointB << ','
            << formatDouble(myLink.theBytes) << '\n';
  }
}

void writeWorkers(std::ostream& aStream, const MetricsLog& aLog) {
  aStream << "worker_id,busy_s,utilization\n";
  for (const auto& myWorker : aLog.theWorkers) {
    aStream << myWorker.theId << ',' << formatDouble(myWorker.theBusy) << ','
            << formatDouble(myWorker.theUtilization) << '\n';
  }
}

} // namespace chainsim
} // namespace uiiit
