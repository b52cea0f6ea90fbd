#include "qck/error.hpp"

namespace qck {

const char* error_kind_name(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NonReducedWord: return "NonReducedWord";
    case ErrorKind::NotSkewSymmetric: return "NotSkewSymmetric";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::InvalidString: return "InvalidString";
    case ErrorKind::CrossCheckFailed: return "CrossCheckFailed";
    case ErrorKind::InvalidType: return "InvalidType";
    case ErrorKind::ExpressionNotUnit: return "ExpressionNotUnit";
    case ErrorKind::AutoConstructionFailed: return "AutoConstructionFailed";
    case ErrorKind::IndexOutOfDomain: return "IndexOutOfDomain";
    case ErrorKind::Unsolvable: return "Unsolvable";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Error";
}

} // namespace qck
