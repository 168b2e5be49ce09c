#pragma once

#include <stdexcept>
#include <string>

namespace gnum {

class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what) : std::runtime_error(what), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error("syntax-error", what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

struct UnknownName : Error {
    explicit UnknownName(const std::string& name) : Error("unknown-name", "unknown set descriptor '" + name + "'") {}
};

struct NotNormalizable : Error {
    explicit NotNormalizable(const std::string& why) : Error("not-normalizable", why) {}
};

struct PrecisionUnreachable : Error {
    explicit PrecisionUnreachable(const std::string& why) : Error("precision-unreachable", why) {}
};

struct PreconditionError : Error {
    explicit PreconditionError(const std::string& why) : Error("precondition-violation", why) {}
};

struct TooLarge : Error {
    explicit TooLarge(const std::string& why) : Error("too-large", why) {}
};

struct NotFound : Error {
    explicit NotFound(const std::string& why) : Error("no-a-found", why) {}
};

}  // namespace gnum
