#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ul {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
  using Error::Error;
};

class InsufficientPrecision : public Error {
public:
  using Error::Error;
};

class BoundExceeded : public Error {
public:
  using Error::Error;
};

class NotAVertex : public Error {
public:
  using Error::Error;
};

class ChainViolation : public Error {
public:
  using Error::Error;
};

class NotInJ : public Error {
public:
  using Error::Error;
};

class ChartViolation : public Error {
public:
  using Error::Error;
};

class OddShiftUnsupported : public Error {
public:
  using Error::Error;
};

class NonVanishing : public Error {
public:
  using Error::Error;
};

class NotInBall : public Error {
public:
  using Error::Error;
};

// Global cap on enumeration sizes. Initialised from UL_MAX_ENUM when set.
std::uint64_t enumeration_bound();
void set_enumeration_bound(std::uint64_t bound);

// Throws BoundExceeded when `size` exceeds the current bound.
void check_enumeration(std::uint64_t size, const std::string &what);

} // namespace ul
