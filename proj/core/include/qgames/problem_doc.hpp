#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qgames/complex_linalg.hpp"
#include "qgames/game_model.hpp"

namespace qgames {

enum class Scheme { Mw, Refined, Emw };

std::string scheme_name(Scheme s);

/// Problem-document parse failure with a JSON-pointer-style path.
class SchemaError : public Error {
public:
    SchemaError(std::string path, const std::string& msg)
        : Error(path + ": " + msg), path_(std::move(path)) {}
    const std::string& path() const { return path_; }

private:
    std::string path_;
};

class NormalizationError : public SchemaError {
public:
    NormalizationError(std::string path, const std::string& msg)
        : SchemaError(std::move(path), msg) {}
};

class DimensionError : public SchemaError {
public:
    DimensionError(std::string path, const std::string& msg)
        : SchemaError(std::move(path), msg) {}
};

struct ProblemOptions {
    std::optional<double> tolerance;
    std::optional<std::string> format;  // "json" or "table"
};

/// A parsed problem: input game, joint state(s) as amplitude vectors in
/// row-major basis order, the scheme to apply, and options.
struct ProblemDocument {
    BimatrixGame game;
    std::vector<CVector> states;
    Scheme scheme = Scheme::Mw;
    ProblemOptions options;
};

/// Parses and validates a UTF-8 JSON problem document. Throws SchemaError
/// (or its Normalization/Dimension refinements) with the offending path.
ProblemDocument parse_problem(const std::string& text);

/// Serializes back to the canonical JSON form; parse(serialize(doc)) yields
/// an equal document.
std::string serialize_problem(const ProblemDocument& doc);

}  // namespace qgames
