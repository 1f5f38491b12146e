#include "parakanren/goal.hpp"

namespace pk {

Goal::Goal(GoalNode n) : node_(std::make_shared<const GoalNode>(std::move(n))) {}

Goal Goal::equalo(Term u, Term v) {
  return Goal(GoalNode{GEqualo{std::move(u), std::move(v)}});
}

Goal Goal::conj(Goal a, Goal b) {
  return Goal(GoalNode{GConj{std::move(a), std::move(b)}});
}

Goal Goal::disj(Goal a, Goal b) {
  return Goal(GoalNode{GDisj{std::move(a), std::move(b)}});
}

Goal Goal::disjPlus(std::vector<Goal> goals) {
  if (goals.empty()) throw std::invalid_argument("disj+ needs at least one goal");
  Goal out = goals.back();
  for (std::size_t i = goals.size() - 1; i > 0; --i)
    out = disj(goals[i - 1], std::move(out));
  return out;
}

Goal Goal::disjConc(std::vector<Goal> goals) {
  if (goals.empty()) throw std::invalid_argument("disj+c needs at least one goal");
  return Goal(GoalNode{GDisjConc{std::move(goals)}});
}

Goal Goal::conjSce(Goal a, Goal b) {
  return Goal(GoalNode{GConjSce{std::move(a), std::move(b)}});
}

Goal Goal::fresh(std::function<Goal(Term)> body) {
  return Goal(GoalNode{GFresh{std::move(body)}});
}

Goal Goal::delayed(std::function<Goal()> thunk) {
  return Goal(GoalNode{GDelay{std::move(thunk)}});
}

Goal Goal::call(SymId callee, std::vector<Term> args) {
  return Goal(GoalNode{GCall{callee, std::move(args)}});
}

Goal Goal::call(std::string_view callee, std::vector<Term> args) {
  return call(symbols::intern(callee), std::move(args));
}

namespace {

// Structural scan for a direct self-call outside any delay. Fresh bodies are
// probed with placeholder variables; delay thunks are deliberately not
// forced, since a delay is exactly what makes recursion legal.
bool callsDirectly(const Goal& g, SymId self, std::int64_t& probe) {
  const auto& n = g.node().v;
  if (const auto* c = std::get_if<GCall>(&n)) return c->callee == self;
  if (const auto* c = std::get_if<GConj>(&n))
    return callsDirectly(c->g1, self, probe) || callsDirectly(c->g2, self, probe);
  if (const auto* d = std::get_if<GDisj>(&n))
    return callsDirectly(d->g1, self, probe) || callsDirectly(d->g2, self, probe);
  if (const auto* d = std::get_if<GDisjConc>(&n)) {
    for (const Goal& sub : d->goals)
      if (callsDirectly(sub, self, probe)) return true;
    return false;
  }
  if (const auto* c = std::get_if<GConjSce>(&n))
    return callsDirectly(c->g1, self, probe) || callsDirectly(c->g2, self, probe);
  if (const auto* f = std::get_if<GFresh>(&n))
    return callsDirectly(f->body(Term::var(probe++)), self, probe);
  return false; // equalo, delay
}

} // namespace

void RelationTable::checkBody(std::string_view name, SymId id, int arity,
                              const RelationBody& body) const {
  std::vector<Term> probeArgs;
  std::int64_t probe = 1'000'000'000;
  for (int i = 0; i < arity; ++i) probeArgs.push_back(Term::var(probe++));
  Goal instantiated = body(probeArgs);
  if (callsDirectly(instantiated, id, probe))
    throw std::invalid_argument("relation '" + std::string(name) +
                                "': direct self-call must be wrapped in delay");
}

void RelationTable::define(std::string_view name, int arity, RelationBody body) {
  SymId id = symbols::intern(name);
  if (rels_.count(id))
    throw std::invalid_argument("relation '" + std::string(name) + "' already defined");
  checkBody(name, id, arity, body);
  rels_.emplace(id, Relation{std::string(name), arity, std::move(body)});
}

void RelationTable::defineOrReplace(std::string_view name, int arity, RelationBody body) {
  SymId id = symbols::intern(name);
  checkBody(name, id, arity, body);
  rels_[id] = Relation{std::string(name), arity, std::move(body)};
}

const Relation* RelationTable::find(SymId id) const {
  auto it = rels_.find(id);
  return it == rels_.end() ? nullptr : &it->second;
}

const Relation& RelationTable::at(SymId id) const {
  const Relation* r = find(id);
  if (!r) throw std::out_of_range("unknown relation '" + symbols::name(id) + "'");
  return *r;
}

} // namespace pk
