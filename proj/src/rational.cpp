#include "lss/rational.hpp"

#include "lss/error.hpp"

namespace lss {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::InvalidEdge: return "InvalidEdge";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::UnknownFamily: return "UnknownFamily";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::SizeLimit: return "SizeLimit";
    case ErrorCode::NotAMatching: return "NotAMatching";
    case ErrorCode::UnsupportedShape: return "UnsupportedShape";
    case ErrorCode::StageOutOfRange: return "StageOutOfRange";
    case ErrorCode::MissingCertificate: return "MissingCertificate";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::UnknownDialect: return "UnknownDialect";
    case ErrorCode::NotClassified: return "NotClassified";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::NotACI: return "NotACI";
  }
  return "Unknown";
}

std::string to_string(const Rational& r) { return r.str(); }

Rational parse_rational(std::string_view text) {
  try {
    return Rational(std::string(text));
  } catch (const std::exception&) {
    throw Error(ErrorCode::Parse, "malformed rational '" + std::string(text) + "'");
  }
}

}  // namespace lss
