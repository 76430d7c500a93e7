#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fcm {

  class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
  };

  // A CommRule node whose children do not fit the rule's side conditions.
  class MalformedComm : public Error {
  public:
    using Error::Error;
  };

  class EndpointMismatch : public Error {
  public:
    using Error::Error;
  };

  class SizeMismatch : public Error {
  public:
    using Error::Error;
  };

  class SizeLimitExceeded : public Error {
  public:
    using Error::Error;
  };

  class DomainError : public Error {
  public:
    using Error::Error;
  };

  class CarrierMismatch : public Error {
  public:
    using Error::Error;
  };

  class LawViolation : public Error {
  public:
    using Error::Error;
  };

  class CostGuardExceeded : public Error {
  public:
    using Error::Error;
  };

  // `where` is a byte offset for syntax errors, or a JSON pointer for schema errors.
  class ParseError : public Error {
  public:
    ParseError(const std::string& what, std::string where):
      Error(what + " (at " + where + ")"), where_(std::move(where)) {}
    ParseError(const std::string& what, std::size_t offset):
      ParseError(what, "byte " + std::to_string(offset)) {}
    const std::string& where() const noexcept { return where_; }

  private:
    std::string where_;
  };

}
