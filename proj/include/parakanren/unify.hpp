#pragma once

#include "parakanren/subst.hpp"
#include "parakanren/term.hpp"

#include <optional>
#include <span>
#include <vector>

namespace pk {

/// The unit flowing through every stream: a substitution plus the next fresh
/// variable id. Immutable; extension produces a new State.
struct State {
  Subst subst;
  std::int64_t counter = 0;
};

/// Follows variable bindings until a non-variable term or an unbound variable
/// is reached. Never mutates the substitution.
Term walk(Term t, const Subst& s);

/// Minimal extension of s making u and v equal under walk, or nullopt.
/// Failure is a normal return. No occurs check, matching microKanren
/// tradition: pathological queries can build cyclic terms, which callers of
/// walkDeep on untrusted bindings would have to guard against themselves.
std::optional<Subst> unify(const Term& u, const Term& v, const Subst& s);

/// Resolves a term all the way down: every reachable variable is walked.
Term walkDeep(Term t, const Subst& s);

/// Renders the answer for the query variables: each is deep-walked, unbound
/// variables become _0, _1, ... in first-occurrence order. A single query
/// variable reifies to its value, several to the list of their values.
Term reify(const State& st, std::span<const Term> queryVars);

} // namespace pk
