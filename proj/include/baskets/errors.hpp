#pragma once

#include <stdexcept>
#include <string>

namespace baskets {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// b <= 0, r <= 0, or b >= r at construction.
struct InvalidPair : Error {
    using Error::Error;
};

// terminal pair violating gcd(b,r)=1 or 2b <= r.
struct NotTerminal : Error {
    using Error::Error;
};

// pack() asked to remove a pair the basket does not contain.
struct PairNotPresent : Error {
    using Error::Error;
};

// neighbors() called on a fraction already in S^(n).
struct AlreadyAtLevel : Error {
    using Error::Error;
};

// a coefficient form or epsilon went negative for a profile.
struct InfeasibleProfile : Error {
    using Error::Error;
};

// chi_m recursion produced a non-integer.
struct NonIntegerChi : Error {
    using Error::Error;
};

// Delta^n requested outside its domain (b/r > 1/2).
struct DomainError : Error {
    using Error::Error;
};

// basket text / golden file syntax problem.
struct ParseError : Error {
    using Error::Error;
};

// missing files and other environment trouble; not a domain error.
struct EnvironmentError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace baskets
