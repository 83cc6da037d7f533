#ifndef QCOUNT_ERRORS_HPP
#define QCOUNT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qcount {

// a configured resource cap (depth, doublings, samples, measurements) was exceeded
struct ResourceCapError : std::runtime_error {
    explicit ResourceCapError(const std::string& what) : std::runtime_error(what) {}
};

// bad config file / bad CLI parameters
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// every batch was collision-free (Q_M = M): the batch size must be increased
struct NoCollisionsError : std::runtime_error {
    explicit NoCollisionsError(const std::string& what) : std::runtime_error(what) {}
};

// alternating series lost too many digits to cancellation to be trusted
struct CancellationError : std::runtime_error {
    explicit CancellationError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace qcount

#endif
