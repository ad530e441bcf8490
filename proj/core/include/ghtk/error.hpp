#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace ghtk {

// Every failure carries a stable machine-readable name ("TriangleViolation",
// "TooLarge", ...) next to the human-readable message; the CLI echoes the name.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(what), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

[[noreturn]] inline void fail(std::string name, const std::string& what) {
    throw Error(std::move(name), what);
}

}  // namespace ghtk
