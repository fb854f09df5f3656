#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ilr/defenv.hpp"
#include "ilr/error.hpp"
#include "ilr/formula.hpp"
#include "ilr/proof.hpp"
#include "ilr/term.hpp"

namespace ilr {

enum class Severity { Error, Warning };

struct Diagnostic {
    Severity severity = Severity::Error;
    int line = 0;
    int column = 0;
    std::string message;
};

std::string to_string(const Diagnostic& d);

/// Parse failure; carries at least one diagnostic with a source span.
struct ParseError : Error {
    explicit ParseError(std::vector<Diagnostic> ds);
    std::vector<Diagnostic> diagnostics;
};

enum class SourceKind { Term, Formula, Proof, State, Defs };

struct SourceFile {
    std::string path;
    SourceKind kind;
    std::string text;
};

/// Kind from the file extension (.term/.form/.proof/.state/.defs).
std::optional<SourceKind> kind_from_path(const std::string& path);

// Throwing parsers (ParseError). env resolves definition references;
// `ambient` is the state the keyword `s` denotes inside terms (absent
// means `s` is rejected).
Term parse_term(const DefEnv& env, const std::string& text, std::optional<StateId> ambient = {});
Formula parse_formula(const DefEnv& env, const std::string& text,
                      std::optional<StateId> ambient = {});
ProofNode parse_proof(const DefEnv& env, const std::string& text,
                      std::optional<StateId> ambient = {});

/// Atoms are validated against env (predicate bound, instance true).
StateId parse_state(const DefEnv& env, const std::string& text);

/// Line-oriented definitions `name : type = term`, '#' comments. New
/// definitions are added to env in file order.
void parse_defs(DefEnv& env, const std::string& text);

}  // namespace ilr
