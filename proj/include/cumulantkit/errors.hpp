#ifndef CUMULANTKIT_ERRORS_HPP
#define CUMULANTKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cumulantkit {

// Malformed or incomplete input data (files, rationals, schemas).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A computation asked for a moment/cumulant beyond the stored depth.
class DepthError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace cumulantkit

#endif
