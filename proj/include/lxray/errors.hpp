#pragma once

#include <stdexcept>
#include <string>

namespace lxray {

// Base class for all library errors. Everything the library throws on bad
// input or arithmetic trouble derives from this; plain std::logic_error-type
// conditions (programming mistakes) are not wrapped.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class OverflowError : public Error {
  public:
    using Error::Error;
};

class ZeroVectorError : public Error {
  public:
    using Error::Error;
};

class EmptySetError : public Error {
  public:
    using Error::Error;
};

class InvalidPolygonError : public Error {
  public:
    using Error::Error;
};

class NotConvexLatticeSetError : public Error {
  public:
    using Error::Error;
};

class NotAnEdgeDirectionError : public Error {
  public:
    using Error::Error;
};

class DirectionNotInD1Error : public Error {
  public:
    using Error::Error;
};

class UnboundedError : public Error {
  public:
    using Error::Error;
};

class NonIntegerVertexError : public Error {
  public:
    using Error::Error;
};

class ParseError : public Error {
  public:
    using Error::Error;
};

}  // namespace lxray
