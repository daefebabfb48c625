#pragma once

#include <stdexcept>
#include <string>

namespace kuttaka {

// Base of every deliberate failure the toolkit reports. kind() is the
// stable identifier used in CLI error envelopes; position() is the
// 1-based token index for parse-level errors and -1 otherwise.
class KitError : public std::runtime_error {
public:
    explicit KitError(const std::string& msg) : std::runtime_error(msg) {}
    virtual const char* kind() const noexcept = 0;
    virtual long long position() const noexcept { return -1; }
};

class OverflowError : public KitError {
public:
    using KitError::KitError;
    const char* kind() const noexcept override { return "OverflowError"; }
};

class NoSolutionError : public KitError {
public:
    using KitError::KitError;
    const char* kind() const noexcept override { return "NoSolutionError"; }
};

class NotCoprimeError : public KitError {
public:
    NotCoprimeError(const std::string& msg, long long gcd) : KitError(msg), gcd_(gcd) {}
    const char* kind() const noexcept override { return "NotCoprimeError"; }
    long long gcd() const noexcept { return gcd_; }

private:
    long long gcd_;
};

class InconsistentSystemError : public KitError {
public:
    using KitError::KitError;
    const char* kind() const noexcept override { return "InconsistentSystemError"; }
};

class ParseError : public KitError {
public:
    ParseError(const std::string& msg, long long token_index)
        : KitError(msg), token_index_(token_index) {}
    const char* kind() const noexcept override { return "ParseError"; }
    long long position() const noexcept override { return token_index_; }

private:
    long long token_index_;
};

class RangeError : public KitError {
public:
    using KitError::KitError;
    const char* kind() const noexcept override { return "RangeError"; }
};

class EmptyDecodeError : public KitError {
public:
    using KitError::KitError;
    const char* kind() const noexcept override { return "EmptyDecodeError"; }
};

class UnknownTokenError : public KitError {
public:
    UnknownTokenError(const std::string& msg, long long token_index)
        : KitError(msg), token_index_(token_index) {}
    const char* kind() const noexcept override { return "UnknownTokenError"; }
    long long position() const noexcept override { return token_index_; }

private:
    long long token_index_;
};

}  // namespace kuttaka
