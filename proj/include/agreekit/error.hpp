#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace agreekit {

// Error categories map to CLI exit codes: validation/config -> 2,
// coverage/join -> 3, io -> 4.
enum class ErrorCategory { validation, coverage, io };

class Error : public std::runtime_error {
public:
    Error(std::string error_class, const std::string& message,
          ErrorCategory category = ErrorCategory::validation,
          std::vector<std::string> ids = {})
        : std::runtime_error(message),
          error_class_(std::move(error_class)),
          category_(category),
          ids_(std::move(ids)) {}

    const std::string& error_class() const { return error_class_; }
    ErrorCategory category() const { return category_; }

    // Offending item/annotator ids, when the failure is about specific rows.
    const std::vector<std::string>& ids() const { return ids_; }

private:
    std::string error_class_;
    ErrorCategory category_;
    std::vector<std::string> ids_;
};

class ValidationError : public Error {
public:
    ValidationError(const std::string& error_class, const std::string& message,
                    std::vector<std::string> ids = {})
        : Error(error_class, message, ErrorCategory::validation, std::move(ids)) {}
};

class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& message)
        : Error("config", message, ErrorCategory::validation) {}
};

class CoverageError : public Error {
public:
    CoverageError(const std::string& error_class, const std::string& message,
                  std::vector<std::string> ids = {})
        : Error(error_class, message, ErrorCategory::coverage, std::move(ids)) {}
};

class IoError : public Error {
public:
    explicit IoError(const std::string& message)
        : Error("io", message, ErrorCategory::io) {}
};

}  // namespace agreekit
