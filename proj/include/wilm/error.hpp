#ifndef WILM_ERROR_HPP
#define WILM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace wilm {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid domain parameters (n <= m, epsilon <= 0, empty schedule, ...).
struct ParameterError : Error {
    using Error::Error;
};

// Malformed serialized input (bad dyadic string, bad certificate JSON).
struct SchemaError : Error {
    using Error::Error;
};

} // namespace wilm

#endif
