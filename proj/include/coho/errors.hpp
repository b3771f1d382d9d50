#pragma once

#include <stdexcept>
#include <string>

namespace coho {

/// Base class for all library errors.
class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed or ill-typed input (JSON that does not parse or lacks fields).
class parse_error : public error {
public:
  using error::error;
};

/// Domain violation: non-dominant weight, purity-shape failure, mismatched
/// embedding sets, invalid permutation data.
class domain_error : public error {
public:
  using error::error;
};

/// Transfer case incompatible with the weight (rank-parity mismatch,
/// wrong place type for the endoscopy group).
class case_error : public error {
public:
  using error::error;
};

/// A configurable resource cap was exceeded (group closure, enumeration).
class resource_error : public error {
public:
  using error::error;
};

} // namespace coho
