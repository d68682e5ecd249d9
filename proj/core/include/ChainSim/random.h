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
#include <random>
#include <string_view>

namespace uiiit {
namespace chainsim {

/**
 * Pseudo-random stream with platform-independent output.
 *
 * The engine is std::mt19937_64, whose sequence is fixed by the standard;
 * all the derived variates are computed here rather than through the
 * <random> distributions, whose algorithms are implementation-defined.
 */
class RandomStream
{
 public:
  explicit RandomStream(const uint64_t aSeed);

  //! Stream for a given run seed and a fixed label, e.g. "arrivals/app1".
  static RandomStream derive(const uint64_t aRunSeed,
                             const std::string_view aLabel);

  //! Uniform in (0, 1].
  double uniformOpenClosed();

  //! Uniform in [aLo, aHi).
  double uniform(const double aLo, const double aHi);

  //! Uniform integer in [0, aSize), aSize > 0.
  std::size_t index(const std::size_t aSize);

  //! Exponential variate with the given rate, by inverse transform.
  double exponential(const double aRate);

 private:
  std::mt19937_64 theEngine;
};

//! SplitMix64 finalizer.
uint64_t mix64(uint64_t aValue) noexcept;

} // namespace chainsim
} // namespace uiiit
