#ifndef ALCOVE_ERRORS_HPP
#define ALCOVE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace alcove {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Configuration / input errors.
struct UnsupportedType : Error { using Error::Error; };
struct NonDominant : Error { using Error::Error; };
struct NotSpecialForm : Error { using Error::Error; };
struct InvalidWindow : Error { using Error::Error; };
struct NotComparable : Error { using Error::Error; };
struct NotAdmissible : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct UnknownSuite : Error { using Error::Error; };

// Search budget exhausted (connectivity is guaranteed, so this signals a bug
// or an undersized budget).
struct NotConnected : Error { using Error::Error; };

// Violations of theorem-backed guarantees; always indicate a bug or corrupted
// input, never a recoverable condition.
struct PatternMismatch : Error { using Error::Error; };
struct UniquenessViolation : Error { using Error::Error; };
struct IsoFailure : Error { using Error::Error; };
struct ConflictingAssignment : Error { using Error::Error; };
struct AdmissibilityViolated : Error { using Error::Error; };
struct NoChain : Error { using Error::Error; };
struct MultipleChains : Error { using Error::Error; };
struct InternalInvariant : Error { using Error::Error; };

}  // namespace alcove

#endif
