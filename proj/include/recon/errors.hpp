#ifndef RECON_ERRORS_HPP
#define RECON_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace recon {

// Base for all library errors. exit_code() gives the CLI process exit code:
//   1 I/O or parse error, 2 infeasible levels, 3 topology/pathological curve,
//   4 non-convergence.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual int exit_code() const { return 1; }
};

class IoError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class InputError : public Error {
public:
    using Error::Error;
};

class UnsupportedError : public Error {
public:
    using Error::Error;
};

// Level assignment violates the gradual-variation existence condition.
class FeasibilityError : public Error {
public:
    using Error::Error;
    int exit_code() const override { return 2; }
};

class TopologyError : public Error {
public:
    using Error::Error;
    int exit_code() const override { return 3; }
};

// A linking path was forced through a sample or could not be routed.
class PathologicalCurveError : public TopologyError {
public:
    using TopologyError::TopologyError;
};

// Dirichlet problem has an unknown with no path to boundary data.
class SingularityError : public TopologyError {
public:
    using TopologyError::TopologyError;
};

class ConvergenceError : public Error {
public:
    using Error::Error;
    int exit_code() const override { return 4; }
};

} // namespace recon

#endif
