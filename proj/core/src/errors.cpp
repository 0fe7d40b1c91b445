#include "bagwhisker/errors.hpp"

namespace bagwhisker {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NonNumericCell: return "NonNumericCell";
        case ErrorKind::TooFewRows: return "TooFewRows";
        case ErrorKind::MissingColumn: return "MissingColumn";
        case ErrorKind::IoError: return "IoError";
        case ErrorKind::BadConfig: return "BadConfig";
        case ErrorKind::EmptyInput: return "EmptyInput";
        case ErrorKind::DegeneratePolygon: return "DegeneratePolygon";
        case ErrorKind::CenterNotInterior: return "CenterNotInterior";
        case ErrorKind::ZeroDirection: return "ZeroDirection";
        case ErrorKind::NonPositiveFactor: return "NonPositiveFactor";
        case ErrorKind::NotNested: return "NotNested";
        case ErrorKind::BadDirectionCount: return "BadDirectionCount";
        case ErrorKind::EmptyRegion: return "EmptyRegion";
        case ErrorKind::SingularSubset: return "SingularSubset";
        case ErrorKind::BadSubsetSize: return "BadSubsetSize";
        case ErrorKind::SingularCovariance: return "SingularCovariance";
        case ErrorKind::TooFewWeighted: return "TooFewWeighted";
        case ErrorKind::SingularMatrix: return "SingularMatrix";
        case ErrorKind::DomainError: return "DomainError";
        case ErrorKind::BadLevel: return "BadLevel";
        case ErrorKind::ZeroMedian: return "ZeroMedian";
        case ErrorKind::EmptyModel: return "EmptyModel";
    }
    return "UnknownError";
}

bool is_input_error(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NonNumericCell:
        case ErrorKind::TooFewRows:
        case ErrorKind::MissingColumn:
        case ErrorKind::IoError:
        case ErrorKind::BadConfig:
            return true;
        default:
            return false;
    }
}

Error::Error(ErrorKind kind, std::string module, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + " [" + module + "]: " + message),
      kind_(kind),
      module_(std::move(module)) {}

void fail(ErrorKind kind, const std::string& module, const std::string& message) {
    throw Error(kind, module, message);
}

} // namespace bagwhisker
