#ifndef FAIRANK_ERRORS_HPP
#define FAIRANK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fairank {

// Malformed or unusable input data (bad files, single-color graphs, ...).
// Parameter violations are reported as std::invalid_argument instead.
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace fairank

#endif // FAIRANK_ERRORS_HPP
