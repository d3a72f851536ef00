#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fks {

// Invalid grid/parameter/argument combinations detected up front.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Failures that appear at run time inside a numerical routine
// (NaN/Inf coefficients, degenerate fits, empty inputs).
struct NumericalError : std::runtime_error {
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

// Config files that parse but violate the documented key set; carries the
// offending keys so the command line can list them.
struct SchemaError : ConfigError {
    std::vector<std::string> offending_keys;

    SchemaError(const std::string& what, std::vector<std::string> keys)
        : ConfigError(what), offending_keys(std::move(keys)) {}
};

} // namespace fks
