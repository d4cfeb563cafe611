#pragma once

#include <stdexcept>
#include <string>

namespace fanostrat {

// Input is well-formed but mathematically unusable (line not on X, field
// mismatch, inadmissible splitting type, ...). The CLI maps this to exit 2.
class DomainError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

// An identity that must hold for genuine inputs failed. Exit 3.
class ConsistencyError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class FieldMismatch : public DomainError {
   public:
    FieldMismatch(const std::string& lhs, const std::string& rhs)
        : DomainError("field mismatch: " + lhs + " vs " + rhs) {}
};

}  // namespace fanostrat
