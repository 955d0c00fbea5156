#ifndef SLOWLIGHT_ERRORS_HPP
#define SLOWLIGHT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace slowlight {

// Numeric-domain violations (bad parameter ranges, anomalous-dispersion
// group velocity, degenerate inputs). CLI exit code 4.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input files (CSV/JSON). CLI exit code 3.
class DataFormatError : public std::runtime_error {
public:
    explicit DataFormatError(const std::string& what) : std::runtime_error(what) {}
};

// Propagation grid cannot accommodate the predicted delay.
class GridError : public DomainError {
public:
    explicit GridError(const std::string& what) : DomainError(what) {}
};

}  // namespace slowlight

#endif
