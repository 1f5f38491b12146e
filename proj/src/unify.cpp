#include "parakanren/unify.hpp"

#include <unordered_map>

namespace pk {

Term walk(Term t, const Subst& s) {
  while (t.isVar()) {
    const Term* bound = s.lookup(t.varId());
    if (!bound) return t;
    t = *bound;
  }
  return t;
}

std::optional<Subst> unify(const Term& u, const Term& v, const Subst& s) {
  Term uw = walk(u, s);
  Term vw = walk(v, s);
  if (uw.isVar() && vw.isVar() && uw.varId() == vw.varId()) return s;
  if (uw.isVar()) return s.insert(uw.varId(), vw);
  if (vw.isVar()) return s.insert(vw.varId(), uw);
  if (uw.isPair() && vw.isPair()) {
    auto s1 = unify(uw.head(), vw.head(), s);
    if (!s1) return std::nullopt;
    return unify(uw.tail(), vw.tail(), *s1);
  }
  if (uw == vw) return s;
  return std::nullopt;
}

Term walkDeep(Term t, const Subst& s) {
  t = walk(std::move(t), s);
  if (t.isPair()) return Term::pair(walkDeep(t.head(), s), walkDeep(t.tail(), s));
  return t;
}

namespace {

// Replaces unbound variables by _n symbols, numbering by first occurrence.
Term nameFresh(const Term& t, std::unordered_map<std::int64_t, Term>& names) {
  if (t.isVar()) {
    auto found = names.find(t.varId());
    if (found != names.end()) return found->second;
    Term sym = Term::symbol("_" + std::to_string(names.size()));
    names.emplace(t.varId(), sym);
    return sym;
  }
  if (t.isPair()) {
    Term head = nameFresh(t.head(), names);
    Term tail = nameFresh(t.tail(), names);
    return Term::pair(std::move(head), std::move(tail));
  }
  return t;
}

} // namespace

Term reify(const State& st, std::span<const Term> queryVars) {
  std::vector<Term> values;
  values.reserve(queryVars.size());
  for (const Term& v : queryVars) values.push_back(walkDeep(v, st.subst));
  std::unordered_map<std::int64_t, Term> names;
  if (values.size() == 1) return nameFresh(values.front(), names);
  Term out = Term::nil();
  for (std::size_t i = values.size(); i > 0; --i)
    out = Term::pair(values[i - 1], out);
  return nameFresh(out, names);
}

} // namespace pk
