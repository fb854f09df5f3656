#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <variant>

#include "ilr/defenv.hpp"
#include "ilr/term.hpp"

namespace ilr {

enum class Strategy { Outermost, Innermost };

inline constexpr std::uint64_t kDefaultStepCap = 1'000'000;

/// Value view of a closed normal form at atomic type.
struct Numeral { std::uint64_t k = 0; };
struct Boolean { bool b = false; };
struct StateVal { StateId s; };
using Value = std::variant<Numeral, Boolean, StateVal>;

bool operator==(const Value& a, const Value& b);
std::string to_string(const Value& v);

/// A term with no redex left (weak reduction: nothing under binders).
/// At atomic type the Value view is populated.
struct NormalForm {
    Term term;
    std::optional<Value> value;
};

/// Observation hook for the reduction of state-indexed constants; used by
/// convergence tests to learn which lookups a term performs.
struct EvalHooks {
    std::function<void(const PredName&, const std::vector<std::uint64_t>&, StateId)> on_lookup;
};

/// Normalizes a closed term containing no oracle-family constants.
/// Both strategies reach the same value at atomic type.
NormalForm normalize(const DefEnv& env, const Term& t,
                     Strategy strategy = Strategy::Outermost,
                     std::uint64_t step_cap = kDefaultStepCap,
                     const EvalHooks* hooks = nullptr);

/// Specialization at a state: every oracle-family constant becomes its
/// state-indexed approximation applied to the constant for s.
/// Throws WrongFragmentError if t already contains approximation constants.
Term approximate(const Term& t, StateId s);

/// Normalize + extract the Value; t must be closed of atomic type.
Value eval_atomic(const DefEnv& env, const Term& t,
                  std::uint64_t step_cap = kDefaultStepCap,
                  const EvalHooks* hooks = nullptr);

/// Provable equality at closed atomic type, decided by comparing normal forms.
bool equal_learn(const DefEnv& env, const Term& t1, const Term& t2);

}  // namespace ilr
