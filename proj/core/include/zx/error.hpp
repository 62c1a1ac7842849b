#pragma once

#include <stdexcept>
#include <string>

namespace zx {

/// Everything thrown by this library derives from ZXError.
class ZXError : public std::runtime_error {
public:
    explicit ZXError(const std::string& msg):
        std::runtime_error(msg) {}
};

struct SymbolicScalarError : ZXError {
    explicit SymbolicScalarError(const std::string& msg): ZXError(msg) {}
};
struct UnknownVertexError : ZXError {
    explicit UnknownVertexError(const std::string& msg): ZXError(msg) {}
};
struct ArityMismatchError : ZXError {
    explicit ArityMismatchError(const std::string& msg): ZXError(msg) {}
};
struct TooLargeError : ZXError {
    explicit TooLargeError(const std::string& msg): ZXError(msg) {}
};
struct DimensionMismatchError : ZXError {
    explicit DimensionMismatchError(const std::string& msg): ZXError(msg) {}
};
struct StaleMatchError : ZXError {
    explicit StaleMatchError(const std::string& msg): ZXError(msg) {}
};
struct NotOrthonormalError : ZXError {
    explicit NotOrthonormalError(const std::string& msg): ZXError(msg) {}
};
struct NotHadamardError : ZXError {
    explicit NotHadamardError(const std::string& msg): ZXError(msg) {}
};
struct MissingBasisError : ZXError {
    explicit MissingBasisError(const std::string& msg): ZXError(msg) {}
};
struct ZeroOverlapError : ZXError {
    explicit ZeroOverlapError(const std::string& msg): ZXError(msg) {}
};
struct SyntaxError : ZXError {
    SyntaxError(const std::string& msg, int line, int col):
        ZXError(msg + " (line " + std::to_string(line) + ", col " + std::to_string(col) + ")"),
        line(line), col(col) {}
    int line;
    int col;
};
struct ValidationError : ZXError {
    explicit ValidationError(const std::string& msg): ZXError(msg) {}
};

} // namespace zx
