#include "parakanren/baseline.hpp"

#include <utility>
#include <variant>

namespace pk {

struct LazyStream::Node {
  std::variant<std::pair<State, LazyStream>, std::function<LazyStream()>> v;
};

LazyStream LazyStream::cons(State head, LazyStream tail) {
  LazyStream s;
  s.node_ = std::make_shared<const Node>(
      Node{std::make_pair(std::move(head), std::move(tail))});
  return s;
}

LazyStream LazyStream::thunk(std::function<LazyStream()> force) {
  LazyStream s;
  s.node_ = std::make_shared<const Node>(Node{std::move(force)});
  return s;
}

bool LazyStream::isCons() const { return node_ && node_->v.index() == 0; }
bool LazyStream::isThunk() const { return node_ && node_->v.index() == 1; }

const State& LazyStream::head() const {
  return std::get<0>(node_->v).first;
}

const LazyStream& LazyStream::tail() const {
  return std::get<0>(node_->v).second;
}

LazyStream LazyStream::force() const {
  return std::get<1>(node_->v)();
}

LazyStream mplusBase(LazyStream s1, LazyStream s2) {
  if (s1.isEmpty()) return s2;
  if (s1.isThunk())
    return LazyStream::thunk([s1 = std::move(s1), s2 = std::move(s2)] {
      return mplusBase(s2, s1.force()); // argument swap: the interleaving rule
    });
  return LazyStream::cons(s1.head(), mplusBase(s1.tail(), std::move(s2)));
}

LazyStream bindBase(LazyStream s, std::function<LazyStream(const State&)> g) {
  if (s.isEmpty()) return LazyStream::empty();
  if (s.isThunk())
    return LazyStream::thunk([s = std::move(s), g]() { return bindBase(s.force(), g); });
  return mplusBase(g(s.head()), bindBase(s.tail(), std::move(g)));
}

std::vector<State> takeBase(std::optional<std::size_t> n, LazyStream s) {
  std::vector<State> out;
  while (!n || out.size() < *n) {
    if (s.isEmpty()) break;
    if (s.isThunk()) {
      s = s.force();
      continue;
    }
    out.push_back(s.head());
    s = s.tail();
  }
  return out;
}

LazyStream evalBase(const Goal& goal, const State& state, const RelationTable& table) {
  Goal g = goal;
  State st = state;
  // Fresh, Call and the degraded concurrent goals resolve structurally
  // before any stream is built.
  for (;;) {
    const auto& n = g.node().v;
    switch (n.index()) {
    case 0: { // Equalo
      const auto& e = std::get<GEqualo>(n);
      auto s2 = unify(e.u, e.v, st.subst);
      if (!s2) return LazyStream::empty();
      return LazyStream::cons(State{std::move(*s2), st.counter}, LazyStream::empty());
    }
    case 1: { // Conj
      const auto& c = std::get<GConj>(n);
      Goal g2 = c.g2;
      return bindBase(evalBase(c.g1, st, table), [g2, &table](const State& s) {
        return evalBase(g2, s, table);
      });
    }
    case 2: { // Disj
      const auto& d = std::get<GDisj>(n);
      return mplusBase(evalBase(d.g1, st, table), evalBase(d.g2, st, table));
    }
    case 3: { // DisjConc degrades to nested binary disjunction here
      const auto& d = std::get<GDisjConc>(n);
      g = Goal::disjPlus(d.goals);
      continue;
    }
    case 4: { // ConjSce degrades to plain conjunction (termination differs by design)
      const auto& c = std::get<GConjSce>(n);
      g = Goal::conj(c.g1, c.g2);
      continue;
    }
    case 5: { // Fresh
      const auto& f = std::get<GFresh>(n);
      Term v = Term::var(st.counter);
      st.counter += 1;
      g = f.body(v);
      continue;
    }
    case 6: { // Delay
      const auto& d = std::get<GDelay>(n);
      return LazyStream::thunk([thunk = d.thunk, st, &table] {
        return evalBase(thunk(), st, table);
      });
    }
    default: { // Call: inline the relation body
      const auto& c = std::get<GCall>(n);
      const Relation& rel = table.at(c.callee);
      if (static_cast<int>(c.args.size()) != rel.arity)
        throw std::invalid_argument("relation '" + rel.name + "' expects " +
                                    std::to_string(rel.arity) + " arguments");
      g = rel.body(c.args);
      continue;
    }
    }
  }
}

std::vector<State> runBaseline(const Goal& g, State init, std::optional<std::size_t> n,
                               const RelationTable& table) {
  return takeBase(n, evalBase(g, init, table));
}

} // namespace pk
