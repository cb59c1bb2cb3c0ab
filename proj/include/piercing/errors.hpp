#pragma once

#include <stdexcept>
#include <string>

namespace piercing {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input file or constructed value breaks a type invariant. `where` is a
// JSON-pointer style path ("/edges/3/0") or a field name.
class InvalidInstance : public Error {
 public:
  InvalidInstance(std::string where, std::string detail)
      : Error(where + ": " + detail), where_(std::move(where)), detail_(std::move(detail)) {}
  const std::string& where() const noexcept { return where_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::string where_;
  std::string detail_;
};

class EmptyIntersection : public Error { using Error::Error; };
class TooLarge : public Error { using Error::Error; };
class NotPrime : public Error { using Error::Error; };
class PlantFailed : public Error { using Error::Error; };
class InvalidDecomposition : public Error { using Error::Error; };
class NotACover : public Error { using Error::Error; };
class BadParams : public Error { using Error::Error; };
class EmptySubfamily : public Error { using Error::Error; };

}  // namespace piercing
