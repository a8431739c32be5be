#include "maniforge/error.hpp"

#include <sstream>

namespace maniforge {

std::string_view to_string(ValidationErrorKind kind) {
  switch (kind) {
    case ValidationErrorKind::Malformed: return "Malformed";
    case ValidationErrorKind::NotInvolution: return "NotInvolution";
    case ValidationErrorKind::FixedPoint: return "FixedPoint";
    case ValidationErrorKind::NotSimple: return "NotSimple";
    case ValidationErrorKind::BadSquare: return "BadSquare";
    case ValidationErrorKind::Disconnected: return "Disconnected";
  }
  return "Unknown";
}

ValidationError::ValidationError(ValidationErrorKind kind, Flag flag, Colour colour, Colour other_colour,
                                 std::string detail)
    : Error(std::string(to_string(kind)) + ": " + detail),
      kind_(kind),
      flag_(flag),
      colour_(colour),
      other_colour_(other_colour) {}

ColourOutOfRange::ColourOutOfRange(Colour colour, std::size_t rank)
    : Error("colour " + std::to_string(colour) + " out of range for rank " + std::to_string(rank)) {}

NotManiplex::NotManiplex(const ValidationError& cause)
    : Error(std::string("not a maniplex: ") + cause.what()), kind_(cause.kind()), flag_(cause.flag()) {}

NoExtension::NoExtension(Flag conflict)
    : Error("no colour-preserving extension; conflict at flag " + std::to_string(conflict)), conflict_(conflict) {}

NoLift::NoLift(Dart witness)
    : Error("voltage compatibility fails at dart (" + std::to_string(witness.flag) + ", colour " +
            std::to_string(witness.colour) + ")"),
      witness_(witness) {}

NotAutomorphism::NotAutomorphism(Dart witness)
    : Error("permutation does not commute with colour " + std::to_string(witness.colour) + " at flag " +
            std::to_string(witness.flag)),
      witness_(witness) {}

CosetOverflow::CosetOverflow(std::size_t limit)
    : Error("coset table exceeded " + std::to_string(limit) + " cosets"), limit_(limit) {}

namespace {
std::string mismatch_message(const std::string& object, const std::vector<std::string>& failed) {
  std::ostringstream os;
  os << object << " failed verification:";
  for (const auto& f : failed) os << ' ' << f << ';';
  return os.str();
}
}  // namespace

ConstructionMismatch::ConstructionMismatch(std::string object, std::vector<std::string> failed_checks)
    : Error(mismatch_message(object, failed_checks)), failed_(std::move(failed_checks)) {}

ParseError::ParseError(std::size_t line, const std::string& message)
    : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

}  // namespace maniforge
