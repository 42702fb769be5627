#pragma once

#include <stdexcept>
#include <string>

namespace tailcheck {

// Bad argument values (wrong sign, empty grid, dimension mismatch, ...).
class parameter_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Input data outside an estimator's domain (e.g. nonpositive order
// statistics fed to a log-based estimator).
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Data that is formally admissible but makes the estimate undefined
// (zero quantile gaps, all top values equal).
class degenerate_data_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Power iteration failed to certify an operator norm; carries the last
// iterate so callers can inspect how far it got.
class certification_error : public std::runtime_error {
public:
    certification_error(const std::string& msg, double last_iterate)
        : std::runtime_error(msg), last_iterate_(last_iterate) {}
    double last_iterate() const { return last_iterate_; }

private:
    double last_iterate_;
};

// Adaptive quadrature ran out of subdivisions before reaching the
// requested tolerance; carries the best estimate and its error bound.
class accuracy_error : public std::runtime_error {
public:
    accuracy_error(const std::string& msg, double best_estimate, double error_bound)
        : std::runtime_error(msg), best_estimate_(best_estimate), error_bound_(error_bound) {}
    double best_estimate() const { return best_estimate_; }
    double error_bound() const { return error_bound_; }

private:
    double best_estimate_;
    double error_bound_;
};

// Experiment configuration failed validation; message lists every
// failure at once.
class validation_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace tailcheck
