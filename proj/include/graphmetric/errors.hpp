#ifndef GRAPHMETRIC_ERRORS_HPP
#define GRAPHMETRIC_ERRORS_HPP

#include <stdexcept>

namespace graphmetric {

// Bad argument values: weights outside (0,1], exponents below 1, size mismatches.
struct invalid_parameter : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A computation needed log(1 - d) but d reached 1.
struct saturated_distance : std::domain_error {
    using std::domain_error::domain_error;
};

// A graph edit would leave the graph in an illegal state.
struct edit_rejected : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed or unreadable input data.
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Could not write an output file.
struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace graphmetric

#endif
