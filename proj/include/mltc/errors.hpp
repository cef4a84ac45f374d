#pragma once

#include <stdexcept>
#include <string>

namespace mltc {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// tensor core
struct InvalidShape : Error { using Error::Error; };
struct ShapeMismatch : Error { using Error::Error; };
struct DegenerateMask : Error { using Error::Error; };
struct NotScalar : Error { using Error::Error; };
struct NonFiniteLoss : Error { using Error::Error; };
struct IndexError : Error { using Error::Error; };

// text pipeline
struct EmptyCorpus : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct InvalidBatchSpec : Error { using Error::Error; };

// model / objectives / trainer
struct CorruptCheckpoint : Error { using Error::Error; };
struct NoPositivePairs : Error { using Error::Error; };
struct NonFiniteGradient : Error { using Error::Error; };

// config
struct UnknownKey : Error { using Error::Error; };
struct BadValue : Error { using Error::Error; };

}  // namespace mltc
