#pragma once

#include <stdexcept>
#include <string>

namespace vaeq {

// Base type for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An operation was called outside its stated domain (bad q, undefined value, ...).
class PreconditionViolated : public Error {
public:
    using Error::Error;
};

// A constructor was asked for a partition that provably does not exist.
class Infeasible : public Error {
public:
    using Error::Error;
};

// No single-part re-split reaches a coloring with one fewer class.
class ReductionImpossible : public Error {
public:
    using Error::Error;
};

// A partition is structurally inconsistent, as opposed to merely failing a check.
class MalformedPartition : public Error {
public:
    using Error::Error;
};

// The brute-force oracle refuses instances above its size cap.
class CapExceeded : public Error {
public:
    using Error::Error;
};

} // namespace vaeq
