#ifndef DIRRES_ERRORS_HPP_
#define DIRRES_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dirres {

// Rejected input: bad vertex ids, nonpositive weights, graphs that are not
// strongly connected, out-of-range k, and similar contract violations.
// The CLI maps this to exit code 2.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

// Parse failure in an edge list or CSV, carrying the 1-based line number.
class ParseError : public DataError {
public:
    ParseError(std::size_t line, const std::string& what)
        : DataError("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// Numerical breakdown: a singular pivot, a vanishing denominator, or a
// violated self-check tolerance. The CLI maps this to exit code 3.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace dirres

#endif // DIRRES_ERRORS_HPP_
