#pragma once

#include "parakanren/goal.hpp"
#include "parakanren/unify.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <vector>

namespace pk {

/// Classic microKanren stream: a cons list of states whose tail may be an
/// unevaluated thunk (an immature stream). Empty is the null stream. Thunks
/// are forced only by take and by the structural rules of mplus/bind, never
/// eagerly, which is what keeps the interleaving bias of nested disjunctions
/// observable. Not safe to share across threads.
class LazyStream {
public:
  LazyStream() = default; // empty

  static LazyStream empty() { return LazyStream(); }
  static LazyStream cons(State head, LazyStream tail);
  static LazyStream thunk(std::function<LazyStream()> force);

  bool isEmpty() const { return node_ == nullptr; }
  bool isCons() const;
  bool isThunk() const;

  const State& head() const;
  const LazyStream& tail() const;
  LazyStream force() const;

private:
  struct Node;
  std::shared_ptr<const Node> node_;
};

/// Interleaving merge: the classic binary trampoline. Swaps its arguments
/// when the first stream is a thunk so two infinite streams alternate.
LazyStream mplusBase(LazyStream s1, LazyStream s2);

/// Stream flat-map through a goal; realizes conjunction.
LazyStream bindBase(LazyStream s, std::function<LazyStream(const State&)> g);

/// Forces thunks until n states are collected or the stream ends. nullopt
/// means unlimited and may diverge on infinite streams; callers wanting a
/// bound impose it externally (the CLI uses a wall-clock watchdog).
std::vector<State> takeBase(std::optional<std::size_t> n, LazyStream s);

/// Evaluates a goal to a stream. DisjConc degrades to nested binary
/// disjunction and ConjSce to plain conjunction on this engine; relation
/// calls are inlined. Throws on unknown relation names.
LazyStream evalBase(const Goal& g, const State& st, const RelationTable& table);

std::vector<State> runBaseline(const Goal& g, State init, std::optional<std::size_t> n,
                               const RelationTable& table);

} // namespace pk
