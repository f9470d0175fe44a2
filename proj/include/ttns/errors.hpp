#pragma once

#include <stdexcept>
#include <string>

namespace ttns {

// Base class for all library errors. Every concrete error names the
// offending vertices / values in its message.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// tree_graph
struct CycleDetected : Error { using Error::Error; };
struct Disconnected : Error { using Error::Error; };
struct DuplicateEdge : Error { using Error::Error; };
struct EdgeOutOfRange : Error { using Error::Error; };

// dense_state
struct EmptyPart : Error { using Error::Error; };
struct FullPart : Error { using Error::Error; };
struct DimMismatch : Error { using Error::Error; };

// ttns_core
struct NotNormalized : Error { using Error::Error; };
struct ShapeInconsistent : Error { using Error::Error; };
struct SpectraUnavailable : Error { using Error::Error; };

// truncation
struct PlanShapeMismatch : Error { using Error::Error; };
struct NotLinearTree : Error { using Error::Error; };

// entropy_bounds
struct BadDistribution : Error { using Error::Error; };
struct NonpositiveAlpha : Error { using Error::Error; };
struct BadRange : Error { using Error::Error; };
struct AlphaOutOfRange : Error { using Error::Error; };
struct BadEps : Error { using Error::Error; };
struct Infeasible : Error { using Error::Error; };
struct NoValidAlpha : Error { using Error::Error; };

// target_states
struct BadDims : Error { using Error::Error; };
struct TooLarge : Error { using Error::Error; };

// file formats / cli
struct FormatError : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };
struct InvalidInput : Error { using Error::Error; };

} // namespace ttns
