#ifndef NEWSFLOW_ERRORS_HPP
#define NEWSFLOW_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace newsflow {

// Bad input: unreadable/malformed files, schema violations, out-of-range
// parameters. The CLI maps these to exit code 1, everything else to 2.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace newsflow

#endif  // NEWSFLOW_ERRORS_HPP
