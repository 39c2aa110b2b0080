// risthz - outage analysis for RIS-assisted terahertz links
// Copyright (C) 2026 the risthz contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <stdexcept>
#include <string>

namespace risthz
{

// Configuration file errors (syntax or semantic validation). `line` is the
// 1-based line number when known, 0 otherwise.
class config_error : public std::runtime_error
{
  public:
    config_error(const std::string &msg, std::size_t line = 0) : std::runtime_error(msg), line_(line) {}
    std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

// Numerical evaluation failed in a way that is not a caller mistake, e.g. a
// contour cannot be placed between the two pole families.
class evaluation_error : public std::runtime_error
{
    using std::runtime_error::runtime_error;
};

// An adaptive scheme exhausted its budget before reaching the accuracy
// target. Carries the best estimate obtained so far and its error bound so
// callers can decide whether the partial result is still usable.
class tolerance_error : public evaluation_error
{
  public:
    tolerance_error(const std::string &msg, double best, double rel_err)
        : evaluation_error(msg), best_(best), rel_err_(rel_err)
    {
    }
    double best_estimate() const noexcept { return best_; }
    double rel_error() const noexcept { return rel_err_; }

  private:
    double best_;
    double rel_err_;
};

} // namespace risthz
