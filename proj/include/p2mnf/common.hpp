#pragma once

#include <stdexcept>
#include <string>

namespace p2mnf {

// Error carrying a stable machine-readable name; the CLI prints the name on
// the diagnostic stream and exits 1.
class MathError : public std::runtime_error {
public:
    MathError(std::string name, const std::string& what)
        : std::runtime_error(name + ": " + what), name_(std::move(name)) {}

    const std::string& name() const { return name_; }

private:
    std::string name_;
};

}  // namespace p2mnf
