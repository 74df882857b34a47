#pragma once

#include <stdexcept>
#include <string>

namespace cryoinr {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// mrc_io
struct TruncatedFile : Error { using Error::Error; };
struct UnsupportedMode : Error { using Error::Error; };
struct BadMagic : Error { using Error::Error; };
struct FormatError : Error { using Error::Error; };

// byte streams, archive
struct CorruptStream : Error { using Error::Error; };
struct CorruptArchive : Error { using Error::Error; };
struct UnknownFile : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };

// network / loss / trainer
struct DimensionMismatch : Error { using Error::Error; };
struct EmptyBatch : Error { using Error::Error; };
struct NonFiniteInput : Error { using Error::Error; };
struct NonFiniteLoss : Error { using Error::Error; };
struct DuplicateFileId : Error { using Error::Error; };
struct EmptyStore : Error { using Error::Error; };

// metrics
struct EmptyEvaluationSet : Error { using Error::Error; };
struct ZeroRange : Error { using Error::Error; };
struct DivisionByZero : Error { using Error::Error; };

} // namespace cryoinr
