/*
 Copyright 2026 The pagerank-toolkit Authors
 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

      http://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace pagerank {

// Base for every error the library raises. The C API maps each subclass to
// one status code.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input violates a documented precondition (bad alpha, non-stochastic vector,
// negative weight, shape mismatch, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

// Malformed input file; carries the 1-based line number when known.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line)
        : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class IoError : public Error {
public:
    using Error::Error;
};

// Zero-mass or otherwise degenerate data where a normalization is undefined.
class DegenerateError : public Error {
public:
    using Error::Error;
};

// A linear system or eigenproblem is singular at the requested parameter.
class SingularError : public Error {
public:
    using Error::Error;
};

// Iteration cap exceeded. The residual history is kept for diagnosis.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, std::vector<double> residuals)
        : Error(what), residuals_(std::move(residuals)) {}

    const std::vector<double>& residuals() const noexcept { return residuals_; }

private:
    std::vector<double> residuals_;
};

}  // namespace pagerank
