#include "lelong/rational.hpp"

#include <algorithm>
#include <cctype>

#include "lelong/error.hpp"

namespace lelong {

namespace {

bool is_integer_literal(std::string_view s, bool allow_sign) {
  if (!s.empty() && allow_sign && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
}

}  // namespace

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EqualPoints: return "EqualPoints";
    case ErrorCode::EqualLines: return "EqualLines";
    case ErrorCode::UnsupportedDegree: return "UnsupportedDegree";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::ReducibleConic: return "ReducibleConic";
    case ErrorCode::ZeroForm: return "ZeroForm";
    case ErrorCode::WeightExceeded: return "WeightExceeded";
    case ErrorCode::NegativeScale: return "NegativeScale";
    case ErrorCode::NegativeWeight: return "NegativeWeight";
    case ErrorCode::NonpositiveThreshold: return "NonpositiveThreshold";
    case ErrorCode::IrrationalIntersection: return "IrrationalIntersection";
    case ErrorCode::AlphaOutOfRange: return "AlphaOutOfRange";
    case ErrorCode::InvalidInstance: return "InvalidInstance";
    case ErrorCode::CollinearPoints: return "CollinearPoints";
    case ErrorCode::BadAlphaPrime: return "BadAlphaPrime";
    case ErrorCode::NonUnitMass: return "NonUnitMass";
    case ErrorCode::FullWeightLine: return "FullWeightLine";
    case ErrorCode::DegenerateSeed: return "DegenerateSeed";
    case ErrorCode::UnknownExample: return "UnknownExample";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::GridTooLarge: return "GridTooLarge";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_literal(num, true) || !is_integer_literal(den, false)) {
    throw Error(ErrorCode::Parse, "not a rational: '" + std::string(text) + "'");
  }
  std::string num_str(num);
  if (num_str.front() == '+') num_str.erase(0, 1);
  Integer n(num_str, 10);
  Integer d(std::string(den), 10);
  if (d == 0) throw Error(ErrorCode::Parse, "zero denominator in '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

std::size_t bit_size(const Rational& value) {
  return std::max(mpz_sizeinbase(value.get_num_mpz_t(), 2), mpz_sizeinbase(value.get_den_mpz_t(), 2));
}

}  // namespace lelong
