#include "spinspec/rational.hpp"

#include <cctype>

#include "spinspec/error.hpp"

namespace spinspec {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidRank: return "INVALID_RANK";
    case Errc::DimensionMismatch: return "DIMENSION_MISMATCH";
    case Errc::NotARoot: return "NOT_A_ROOT";
    case Errc::NotDominant: return "NOT_DOMINANT";
    case Errc::NotIntegral: return "NOT_INTEGRAL";
    case Errc::InvalidSubsystem: return "INVALID_SUBSYSTEM";
    case Errc::CapExceeded: return "CAP_EXCEEDED";
    case Errc::NotClosed: return "NOT_CLOSED";
    case Errc::NotGraded: return "NOT_GRADED";
    case Errc::NotSimpleList: return "NOT_SIMPLE_LIST";
    case Errc::NoNoncompact: return "NO_NONCOMPACT";
    case Errc::NotSpin: return "NOT_SPIN";
    case Errc::InconsistentCharacter: return "INCONSISTENT_CHARACTER";
    case Errc::ParseError: return "PARSE_ERROR";
    case Errc::UnknownSpace: return "UNKNOWN_SPACE";
  }
  return "UNKNOWN";
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);

  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                         : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' ||
      den.front() == '+')
    throw Error(Errc::ParseError, "not a rational: '" + std::string(text) + "'");

  std::string n(num);
  if (n.front() == '+') n.erase(0, 1);
  Integer d(std::string(den), 10);
  if (d == 0) throw Error(Errc::ParseError, "zero denominator in '" + std::string(text) + "'");
  Rational q{Integer(n, 10), d};
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_decimal(const Rational& q, int digits) {
  Integer scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  Integer num = q.get_num();
  bool negative = num < 0;
  if (negative) num = -num;
  Integer scaled = (num * scale) / q.get_den();
  Integer whole = scaled / scale;
  Integer frac = scaled % scale;
  std::string f = frac.get_str();
  if (static_cast<int>(f.size()) < digits) f.insert(0, digits - f.size(), '0');
  std::string out = (negative ? "-" : "") + whole.get_str();
  if (digits > 0) out += "." + f;
  return out;
}

}  // namespace spinspec
