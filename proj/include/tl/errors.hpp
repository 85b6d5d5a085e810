#pragma once

#include <stdexcept>
#include <string>

namespace tl {

// Base of every error thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& message) : std::runtime_error(message) {}
};

// Bad user input: malformed files, violated invariants, unusable config.
// CLI exit code 1.
class ValidationError : public Error {
public:
    using Error::Error;
};

// Remote text/embedding service failed. CLI exit code 2.
class ProviderError : public Error {
public:
    using Error::Error;
};

// corpus
class MissingIdError : public ValidationError {
public:
    using ValidationError::ValidationError;
};
class DuplicateIdError : public ValidationError {
public:
    using ValidationError::ValidationError;
};
class EmptyCorpusError : public ValidationError {
public:
    using ValidationError::ValidationError;
};
class MalformedRecordError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// store
class IoFailureError : public Error {
public:
    using Error::Error;
};
// Re-put of an existing key with different bytes. The store is content
// addressed, so this means a corrupted entry or a nondeterministic producer.
class HashMismatchError : public Error {
public:
    using Error::Error;
};
class CorruptStoreError : public Error {
public:
    using Error::Error;
};

// generation / embedding providers
class ProviderUnavailableError : public ProviderError {
public:
    using ProviderError::ProviderError;
};
class RateLimitedError : public ProviderError {
public:
    using ProviderError::ProviderError;
};
class EmptyCompletionError : public ProviderError {
public:
    using ProviderError::ProviderError;
};
class DimensionMismatchError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// topic model
class KTooLargeError : public ValidationError {
public:
    using ValidationError::ValidationError;
};
class EmptyClassError : public ValidationError {
public:
    using ValidationError::ValidationError;
};
class SchemaViolationError : public ValidationError {
public:
    using ValidationError::ValidationError;
};
class UnknownDocIdError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// metric
class MissingLabelError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// pipeline
class ConfigDriftError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

} // namespace tl
