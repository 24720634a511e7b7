// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ndcbench Authors

#pragma once

#include <stdexcept>
#include <string>

namespace ndc {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A circuit or model invariant was violated (bad wire index, bad angle, ...).
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what) : Error(what) {}
};

// The textual circuit format could not be parsed. Messages carry the
// 1-based line number and the offending token.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

// A computation would exceed a hard resource limit (path count, wire count).
class ResourceLimitError : public Error {
 public:
  explicit ResourceLimitError(const std::string& what) : Error(what) {}
};

// A rewrite pass could not be applied soundly to the given circuit.
class PassError : public Error {
 public:
  explicit PassError(const std::string& what) : Error(what) {}
};

}  // namespace ndc
