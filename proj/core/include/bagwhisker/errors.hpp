#pragma once

#include <stdexcept>
#include <string>

namespace bagwhisker {

enum class ErrorKind {
    // dataset / configuration (input-class errors, CLI exit code 2)
    NonNumericCell,
    TooFewRows,
    MissingColumn,
    IoError,
    BadConfig,
    // geometry / numerics / degeneracy (CLI exit code 3)
    EmptyInput,
    DegeneratePolygon,
    CenterNotInterior,
    ZeroDirection,
    NonPositiveFactor,
    NotNested,
    BadDirectionCount,
    EmptyRegion,
    SingularSubset,
    BadSubsetSize,
    SingularCovariance,
    TooFewWeighted,
    SingularMatrix,
    DomainError,
    BadLevel,
    ZeroMedian,
    EmptyModel,
};

const char* to_string(ErrorKind kind);

// Input-class errors map to CLI exit code 2, everything else to 3.
bool is_input_error(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string module, const std::string& message);

    ErrorKind kind() const { return kind_; }
    const std::string& module() const { return module_; }

private:
    ErrorKind kind_;
    std::string module_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& module, const std::string& message);

} // namespace bagwhisker
