#pragma once

#include <stdexcept>
#include <string>

namespace ghom {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Structural or axiom-level failure of an input object (groupoid table,
// functor, cover, subgroupoid, homomorphism).
struct ValidationError : Error {
    using Error::Error;
};

// Malformed input document or coefficient string.
struct ParseError : Error {
    using Error::Error;
};

// A nerve level would exceed the configured tuple budget.
struct BudgetError : Error {
    using Error::Error;
};

}  // namespace ghom
