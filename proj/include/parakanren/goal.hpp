#pragma once

#include "parakanren/term.hpp"

#include <functional>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

namespace pk {

struct GoalNode;

/// Engine-agnostic program tree. Goals are data rather than host closures so
/// the same program can run under every engine; Fresh and Delay carry host
/// functions (a fresh body receives the new variable as a term).
class Goal {
public:
  Goal() = default;

  static Goal equalo(Term u, Term v);
  static Goal conj(Goal a, Goal b);
  static Goal disj(Goal a, Goal b);
  /// Right-nested binary disjunction tree; a single goal is returned as is.
  /// Throws std::invalid_argument on an empty list.
  static Goal disjPlus(std::vector<Goal> goals);
  /// N-ary concurrent disjunction node. Throws on an empty list.
  static Goal disjConc(std::vector<Goal> goals);
  static Goal conjSce(Goal a, Goal b);
  static Goal fresh(std::function<Goal(Term)> body);
  static Goal delayed(std::function<Goal()> thunk);
  static Goal call(SymId callee, std::vector<Term> args);
  static Goal call(std::string_view callee, std::vector<Term> args);

  const GoalNode& node() const;
  explicit operator bool() const { return node_ != nullptr; }

private:
  explicit Goal(GoalNode n);
  std::shared_ptr<const GoalNode> node_;
};

using FreshBody = std::function<Goal(Term)>;
using DelayThunk = std::function<Goal()>;

struct GEqualo {
  Term u, v;
};
struct GConj {
  Goal g1, g2;
};
struct GDisj {
  Goal g1, g2;
};
struct GDisjConc {
  std::vector<Goal> goals;
};
struct GConjSce {
  Goal g1, g2;
};
struct GFresh {
  FreshBody body;
};
struct GDelay {
  DelayThunk thunk;
};
struct GCall {
  SymId callee;
  std::vector<Term> args;
};

struct GoalNode {
  std::variant<GEqualo, GConj, GDisj, GDisjConc, GConjSce, GFresh, GDelay, GCall> v;
};

inline const GoalNode& Goal::node() const { return *node_; }

using RelationBody = std::function<Goal(std::span<const Term>)>;

struct Relation {
  std::string name;
  int arity = 0;
  RelationBody body;
};

/// Immutable-after-construction registry of named relations. Registration
/// rejects duplicate names and bodies whose direct self-call is not guarded
/// by a delay (those would loop forever under every engine).
class RelationTable {
public:
  /// Throws std::invalid_argument on duplicates or unguarded direct recursion.
  void define(std::string_view name, int arity, RelationBody body);
  /// Same checks as define, but an existing name is replaced. Used by the
  /// query language so scripts can shadow prelude relations.
  void defineOrReplace(std::string_view name, int arity, RelationBody body);

  const Relation* find(SymId id) const;
  /// Throws std::out_of_range with the relation name when missing.
  const Relation& at(SymId id) const;

private:
  void checkBody(std::string_view name, SymId id, int arity, const RelationBody& body) const;
  std::unordered_map<SymId, Relation> rels_;
};

} // namespace pk
