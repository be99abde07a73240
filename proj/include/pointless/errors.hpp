#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pointless {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input that does not even describe the structure it claims to (a relation
/// that is not a partial order, a meet table that is not a semilattice).
class StructureError : public Error {
 public:
  using Error::Error;
};

/// An element or frame argument that does not belong where it was passed.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A poset that is well formed but not a frame where a frame was required.
class FrameError : public Error {
 public:
  using Error::Error;
};

/// A size cap was reached before the construction finished.
class ResourceError : public Error {
 public:
  ResourceError(const std::string& what, std::size_t reached)
      : Error(what + " (reached " + std::to_string(reached) + ")"), reached_(reached) {}
  std::size_t reached() const { return reached_; }

 private:
  std::size_t reached_;
};

/// A construction produced something it is proven never to produce.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace pointless
