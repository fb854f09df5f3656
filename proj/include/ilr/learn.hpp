#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ilr/eval.hpp"
#include "ilr/formula.hpp"

namespace ilr {

inline constexpr std::uint64_t kDefaultIterCap = 10'000;
inline constexpr std::uint64_t kDefaultDepth = 10;

/// Outcome of bounded realizability checking. Fail carries the formula
/// path of the refuted subgoal, the state, and a human-readable detail.
struct Verdict {
    enum class Kind { Pass, PassUnverifiedImp, Fail };
    Kind kind = Kind::Pass;
    std::uint64_t unverified_imps = 0;  // PassUnverifiedImp
    std::string path;                   // Fail: slash-joined child indices
    StateId state;                      // Fail
    std::string detail;                 // Fail

    bool passed() const { return kind != Kind::Fail; }
};

/// One round of the learning loop; after = before ∪ tau.
struct Iteration {
    std::uint64_t index = 0;
    StateId before, tau, after;
};

struct LearnTrace {
    std::vector<Iteration> iterations;
    bool stable = false;      // final tau was empty
    bool warm_start = false;  // started from a non-empty prior state
};

/// Weakly increasing chain of states; inclusion checked at construction.
class WiChain {
public:
    explicit WiChain(std::vector<StateId> states);
    const std::vector<StateId>& states() const { return states_; }

private:
    std::vector<StateId> states_;
};

/// Candidate realizers for implication subformulas, keyed by the formula
/// path of the implication node: child indices from the root joined by
/// '/': And/Or children are 0/1, Imp children are 0 (antecedent) and
/// 1 (consequent), quantifier bodies are 0. The root path is "".
using ImpCandidates = std::map<std::string, std::vector<Term>>;

/// Bounded realizability check of t against A at state s. Universal
/// formulas are checked on instances 0..depth; implications only against
/// the supplied candidates (marked unverified when none are given).
Verdict realizes_at(const DefEnv& env, const Term& t, const Formula& a, StateId s,
                    std::uint64_t depth = kDefaultDepth,
                    const ImpCandidates& imp_candidates = {});

struct ConvergenceReport {
    std::uint64_t last_change_index = 0;  // last i with value(s_i) != value(s_{i-1})
    Value final_value;
};

/// Evaluates the approximations of t along the chain and reports where the
/// value last changed.
ConvergenceReport check_converges(const DefEnv& env, const Term& t, const WiChain& chain);

/// Iterates S <- S ∪ value(t[S]) from `start` until the increment is empty.
/// The returned state extends start and is a fixed point of the update.
std::pair<StateId, LearnTrace> fixed_point(const DefEnv& env, const Term& t, StateId start,
                                           std::uint64_t iter_cap = kDefaultIterCap);

struct WitnessResult {
    std::uint64_t witness = 0;
    LearnTrace trace;
};

/// Witness extraction for a realizer t : N -> (N x S) of ∀x ∃y p(x,y):
/// runs the learning loop on the state component at input n, then reads
/// the witness off the numeral component at the final state. The pair is
/// re-checked against p; a false instance raises CheckFailedError.
WitnessResult pi02_witness(const DefEnv& env, const Term& t, const PredName& p,
                           std::uint64_t n, std::uint64_t iter_cap = kDefaultIterCap,
                           StateId start = kEmptyState);

/// One JSON object per iteration, newline-separated:
/// {"iter":k,"state":[{"pred":…,"args":[…],"witness":…},…],"tau":[…],"stable":bool}
std::string trace_to_json(const LearnTrace& trace);

}  // namespace ilr
