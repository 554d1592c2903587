#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tskd {

enum class ErrorKind : std::uint8_t {
    Generic = 0,
    Config,
    StaleCache,
    Io,
    Parse,
    Contract,
    Shape,
    Format,
    InsufficientData,
    NonFinite,
    CacheMiss,
    DegenerateRow,
    Length,
};

// Stable process exit codes for the CLI. StaleCache must stay 3.
inline int exit_code(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Generic: return 1;
        case ErrorKind::Config: return 2;
        case ErrorKind::StaleCache: return 3;
        case ErrorKind::Io: return 4;
        case ErrorKind::Parse: return 5;
        case ErrorKind::Contract: return 6;
        case ErrorKind::Shape: return 6;
        case ErrorKind::Format: return 7;
        case ErrorKind::InsufficientData: return 8;
        case ErrorKind::NonFinite: return 9;
        case ErrorKind::CacheMiss: return 10;
        case ErrorKind::DegenerateRow: return 11;
        case ErrorKind::Length: return 12;
    }
    return 1;
}

inline std::string_view kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Generic: return "Error";
        case ErrorKind::Config: return "ConfigError";
        case ErrorKind::StaleCache: return "StaleCacheError";
        case ErrorKind::Io: return "IoError";
        case ErrorKind::Parse: return "ParseError";
        case ErrorKind::Contract: return "ContractError";
        case ErrorKind::Shape: return "ShapeError";
        case ErrorKind::Format: return "FormatError";
        case ErrorKind::InsufficientData: return "InsufficientDataError";
        case ErrorKind::NonFinite: return "NonFiniteError";
        case ErrorKind::CacheMiss: return "CacheMissError";
        case ErrorKind::DegenerateRow: return "DegenerateRowError";
        case ErrorKind::Length: return "LengthError";
    }
    return "Error";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(std::string(kind_name(kind)) + ": " + msg), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

#define TSKD_DEFINE_ERROR(Name, Kind)                                     \
    class Name : public Error {                                           \
    public:                                                               \
        explicit Name(const std::string& msg) : Error(Kind, msg) {}       \
    }

TSKD_DEFINE_ERROR(ConfigError, ErrorKind::Config);
TSKD_DEFINE_ERROR(StaleCacheError, ErrorKind::StaleCache);
TSKD_DEFINE_ERROR(IoError, ErrorKind::Io);
TSKD_DEFINE_ERROR(ContractError, ErrorKind::Contract);
TSKD_DEFINE_ERROR(ShapeError, ErrorKind::Shape);
TSKD_DEFINE_ERROR(InsufficientDataError, ErrorKind::InsufficientData);
TSKD_DEFINE_ERROR(NonFiniteError, ErrorKind::NonFinite);
TSKD_DEFINE_ERROR(DegenerateRowError, ErrorKind::DegenerateRow);
TSKD_DEFINE_ERROR(LengthError, ErrorKind::Length);

#undef TSKD_DEFINE_ERROR

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& msg)
        : Error(ErrorKind::Parse, "line " + std::to_string(line) + ": " + msg), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class FormatError : public Error {
public:
    FormatError(std::uint64_t byte_offset, const std::string& msg)
        : Error(ErrorKind::Format, "at byte " + std::to_string(byte_offset) + ": " + msg),
          offset_(byte_offset) {}
    std::uint64_t offset() const noexcept { return offset_; }

private:
    std::uint64_t offset_;
};

class CacheMissError : public Error {
public:
    explicit CacheMissError(std::size_t window, const std::string& msg = "no cached artifact")
        : Error(ErrorKind::CacheMiss, "window " + std::to_string(window) + ": " + msg),
          window_(window) {}
    std::size_t window() const noexcept { return window_; }

private:
    std::size_t window_;
};

} // namespace tskd
