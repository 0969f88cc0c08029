#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace inoue {

/// A mathematical precondition was violated (infeasible or inconsistent input).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed structured-text input. Line and column are 1-based; 0 means unknown.
class ParseError : public DomainError {
public:
    ParseError(std::string source, std::size_t line, std::size_t column, const std::string& what)
        : DomainError(format(source, line, column, what)),
          source_(std::move(source)),
          line_(line),
          column_(column) {}

    const std::string& source() const noexcept { return source_; }
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    static std::string format(const std::string& source, std::size_t line, std::size_t column,
                              const std::string& what) {
        std::string out = source.empty() ? std::string("<input>") : source;
        if (line != 0) {
            out += ":" + std::to_string(line);
            if (column != 0) out += ":" + std::to_string(column);
        }
        return out + ": " + what;
    }

    std::string source_;
    std::size_t line_;
    std::size_t column_;
};

}  // namespace inoue
