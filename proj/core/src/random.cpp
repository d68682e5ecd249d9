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

#include "ChainSim/random.h"

#include <cassert>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace uiiit {
namespace chainsim {

uint64_t mix64(uint64_t aValue) noexcept {
  aValue += 0x9e3779b97f4a7c15ull;
  aValue = (aValue ^ (aValue >> 30)) * 0xbf58476d1ce4e5b9ull;
  aValue = (aValue ^ (aValue >> 27)) * 0x94d049bb133111ebull;
  return aValue ^ (aValue >> 31);
}

RandomStream::RandomStream(const uint64_t aSeed)
    : theEngine(aSeed) {
  // noop
}

RandomStream RandomStream::derive(const uint64_t         aRunSeed,
                                  const std::string_view aLabel) {
  // FNV-1a over the label
  uint64_t myHash = 0xcbf29ce484222325ull;
  for (const auto myChar : aLabel) {
    myHash ^= static_cast<unsigned char>(myChar);
    myHash *= 0x100000001b3ull;
  }
  return RandomStream(mix64(mix64(aRunSeed) ^ myHash));
}

double RandomStream::uniformOpenClosed() {
  // 53 random bits mapped onto {1, ..., 2^53} / 2^53
  const auto myBits = theEngine() >> 11;
  return static_cast<double>(myBits + 1) * 0x1.0p-53;
}

double RandomStream::uniform(const double aLo, const double aHi) {
  assert(aLo <= aHi);
  return aLo + (aHi - aLo) * (1.0 - uniformOpenClosed());
}

std::size_t RandomStream::index(const std::size_t aSize) {
  if (aSize == 0) {
    throw std::invalid_argument("cannot draw an index from an empty range");
  }
  const uint64_t myRange = static_cast<uint64_t>(aSize);
  // reject the incomplete last block to avoid modulo bias
  const uint64_t myLimit = std::numeric_limits<uint64_t>::max() -
                           std::numeric_limits<uint64_t>::max() % myRange;
  uint64_t myDraw;
  do {
    myDraw = theEngine();
  } while (myDraw >= myLimit);
  return static_cast<std::size_t>(myDraw % myRange);
}

double RandomStream::exponential(const double aRate) {
  assert(aRate > 0);
  return -std::log(uniformOpenClosed()) / aRate;
}

} // namespace chainsim
} // namespace uiiit
