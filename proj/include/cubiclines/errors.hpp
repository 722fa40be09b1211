#pragma once
// ============================================================================
// Error taxonomy shared by all modules.  Every throwing operation documents
// which of these it raises; anything else escaping is a bug.
// ============================================================================

#include <stdexcept>
#include <string>

namespace cubiclines {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// ---- polynomial layer ----
struct DivisibilityError : Error { using Error::Error; };
struct DegenerateResultant : Error { using Error::Error; };
struct InvalidIndex : Error { using Error::Error; };
struct UnsupportedShape : Error { using Error::Error; };
struct SingularTransform : Error { using Error::Error; };
struct InvalidDegree : Error { using Error::Error; };

// ---- comitant layer ----
struct DegenerateOmega : Error { using Error::Error; };
struct DegenerateSystem : Error { using Error::Error; };
struct InternalInconsistency : Error { using Error::Error; };

// ---- root structure layer ----
struct LineAtInfinityDegenerate : Error { using Error::Error; };

// ---- line extraction layer ----
struct UnsupportedExtension : Error { using Error::Error; };
struct NotAnAsymptoticDirection : Error { using Error::Error; };

// ---- classifier ----
struct InconsistentCertificate : Error { using Error::Error; };

// ---- input handling ----
struct ParseError : Error { using Error::Error; };
struct NotCubic : Error { using Error::Error; };

} // namespace cubiclines
