#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace ilr {

class DefEnv;

using PredName = std::string;

/// One verified witness: predicate name, first k arguments, witness value.
/// The truth of pred(args, witness) is enforced by the construction paths
/// (mk_atom, add_step); Atom itself is plain data.
struct Atom {
    PredName pred;
    std::vector<std::uint64_t> args;
    std::uint64_t witness = 0;

    friend auto operator<=>(const Atom&, const Atom&) = default;
};

/// Interned handle for a state of knowledge. Id 0 is the empty state.
struct StateId {
    std::uint32_t v = 0;
    friend auto operator<=>(const StateId&, const StateId&) = default;
};
inline constexpr StateId kEmptyState{0};

/// Two atoms conflict only when they claim different witnesses for the
/// same (pred, args).
bool atoms_consistent(const Atom& a, const Atom& b);

/// Interner for states: canonical sorted atom vectors, one id per set.
/// Safe under concurrent insertion; equal sets get equal ids.
class StateStore {
public:
    static StateStore& instance();

    // Atoms must be pairwise consistent; sorted/deduplicated internally.
    StateId intern(std::vector<Atom> atoms);
    const std::vector<Atom>& atoms(StateId id) const;

private:
    StateStore();
    struct Impl;
    Impl* impl_;
};

// -- queries -----------------------------------------------------------

bool state_empty(StateId s);
std::size_t state_size(StateId s);
bool state_subset(StateId a, StateId b);
bool states_consistent(StateId a, StateId b);
bool states_disjoint(StateId a, StateId b);

// -- operations --------------------------------------------------------

/// Left-biased consistent union: keeps every atom of a, drops atoms of b
/// that conflict with an atom of a.
StateId cunion(StateId a, StateId b);

/// Plain set union; the arguments must be consistent.
StateId state_union(StateId a, StateId b);

/// Builds the atom ⟨p, args, m⟩ after checking that p is bound with the
/// right arity and that p(args, m) evaluates to true.
Atom mk_atom(const DefEnv& env, const PredName& p,
             const std::vector<std::uint64_t>& args, std::uint64_t m);

/// State extension step: empty if s already has a witness for (p, args)
/// or p(args, m) is false; the singleton {⟨p, args, m⟩} otherwise.
StateId add_step(const DefEnv& env, StateId s, const PredName& p,
                 const std::vector<std::uint64_t>& args, std::uint64_t m);

/// Witness lookup: (true, m) if ⟨p, args, m⟩ ∈ s, else (false, 0).
std::pair<bool, std::uint64_t> chi_phi_lookup(StateId s, const PredName& p,
                                              const std::vector<std::uint64_t>& args);

std::string to_string(const Atom& a);

}  // namespace ilr
