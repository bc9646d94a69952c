#pragma once

#include <stdexcept>
#include <string>

namespace ncproj {

/// Base class for all domain errors raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct FieldMismatch : Error {
    explicit FieldMismatch(const std::string& msg) : Error("FieldMismatch: " + msg) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& msg) : Error("DimensionMismatch: " + msg) {}
};

struct ContextMismatch : Error {
    explicit ContextMismatch(const std::string& msg) : Error("ContextMismatch: " + msg) {}
};

struct ZeroWeight : Error {
    explicit ZeroWeight(const std::string& msg) : Error("ZeroWeight: " + msg) {}
};

struct DuplicateGenerator : Error {
    explicit DuplicateGenerator(const std::string& msg) : Error("DuplicateGenerator: " + msg) {}
};

struct InhomogeneousRelation : Error {
    explicit InhomogeneousRelation(const std::string& msg) : Error("InhomogeneousRelation: " + msg) {}
};

/// A computation asked for a degree above the certified bound of an algebra.
struct DegreeAboveBound : Error {
    int degree;
    DegreeAboveBound(int deg, const std::string& msg)
        : Error("DegreeAboveBound: degree " + std::to_string(deg) + ": " + msg), degree(deg) {}
};

/// A window does not cover a degree that the operation needs.
struct WindowInsufficient : Error {
    int degree;
    WindowInsufficient(int deg, const std::string& msg)
        : Error("WindowInsufficient: degree " + std::to_string(deg) + ": " + msg), degree(deg) {}
};

/// A requested window exceeds what the inputs can certify.
struct WindowExceeded : Error {
    int degree;
    WindowExceeded(int deg, const std::string& msg)
        : Error("WindowExceeded: degree " + std::to_string(deg) + ": " + msg), degree(deg) {}
};

struct JActsNonzero : Error {
    explicit JActsNonzero(const std::string& msg) : Error("JActsNonzero: " + msg) {}
};

struct NotADerivation : Error {
    explicit NotADerivation(const std::string& msg) : Error("NotADerivation: " + msg) {}
};

struct NotAnAutomorphism : Error {
    explicit NotAnAutomorphism(const std::string& msg) : Error("NotAnAutomorphism: " + msg) {}
};

struct AlgebraNotConcentrated : Error {
    explicit AlgebraNotConcentrated(const std::string& msg) : Error("AlgebraNotConcentrated: " + msg) {}
};

/// Syntax error in the input DSL, with 1-based line/column.
struct ParseError : Error {
    int line, column;
    ParseError(int ln, int col, const std::string& msg)
        : Error("parse error at " + std::to_string(ln) + ":" + std::to_string(col) + ": " + msg),
          line(ln), column(col) {}
};

} // namespace ncproj
