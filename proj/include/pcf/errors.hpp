#pragma once

#include <stdexcept>
#include <string>

namespace pcf {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An exact division did not go through. Inside the dynatomic construction
/// this means a divisibility guarantee was violated.
class NotDivisible : public Error {
public:
    using Error::Error;
};

class NotMonic : public Error {
public:
    using Error::Error;
};

/// A size guard (orbit degree, resultant size, time) was exceeded.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

class NotSquarefreeModP : public Error {
public:
    using Error::Error;
};

class LiftInconsistency : public Error {
public:
    using Error::Error;
};

class Reducible : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

class RankDeficient : public Error {
public:
    using Error::Error;
};

class FieldMismatch : public Error {
public:
    using Error::Error;
};

} // namespace pcf
