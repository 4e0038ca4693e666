#pragma once

#include <stdexcept>
#include <string>

namespace cospec {

/// Base of every error raised for bad input or an unmet precondition.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid graph construction or a reference to an unknown vertex.
class GraphError : public Error {
 public:
  using Error::Error;
};

/// Input that is well formed but outside an operation's domain
/// (zero-degree vertex, unverified witness, non-simple blowup input, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed text: rationals, graph files, witness files.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A mathematical guarantee failed at runtime. Never expected; surfaced
/// instead of being ignored.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace cospec
