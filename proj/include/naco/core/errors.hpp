#pragma once

#include <stdexcept>
#include <string>

namespace naco {

/// Base class for every error raised by the toolkit. Each subclass corresponds
/// to one named failure of a module contract, so callers can catch precisely.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// llm
class AuthError : public Error { using Error::Error; };
class RateLimitExhausted : public Error { using Error::Error; };
class ProviderError : public Error { using Error::Error; };
class FixtureMissing : public Error { using Error::Error; };
class CacheCorrupt : public Error { using Error::Error; };

// parse
class ParseFailed : public Error { using Error::Error; };
class OutOfRange : public Error { using Error::Error; };

// scoring
class NoUsableTraces : public Error { using Error::Error; };

// baselines / analysis
class EmptyList : public Error { using Error::Error; };
class SchemaMismatch : public Error { using Error::Error; };
class DuplicateCell : public Error { using Error::Error; };
class DegenerateInput : public Error { using Error::Error; };
class EmptyGroup : public Error { using Error::Error; };
class EmptyRatings : public Error { using Error::Error; };

// io
class SchemaError : public Error { using Error::Error; };
class DuplicateId : public Error { using Error::Error; };
class PassageCountMismatch : public Error { using Error::Error; };
class UnknownExampleId : public Error { using Error::Error; };

/// A command precondition failed before any work (or provider call) started.
class PreconditionError : public Error { using Error::Error; };

}  // namespace naco
