#include "parakanren/term.hpp"

#include <mutex>
#include <sstream>
#include <unordered_map>
#include <vector>

namespace pk {

namespace symbols {

namespace {
struct Interner {
  std::mutex mu;
  std::unordered_map<std::string, SymId> ids;
  std::vector<std::string> names;
};

Interner& interner() {
  static Interner it;
  return it;
}
} // namespace

SymId intern(std::string_view name) {
  auto& it = interner();
  std::lock_guard lock(it.mu);
  auto found = it.ids.find(std::string(name));
  if (found != it.ids.end()) return found->second;
  SymId id = static_cast<SymId>(it.names.size());
  it.names.emplace_back(name);
  it.ids.emplace(std::string(name), id);
  return id;
}

const std::string& name(SymId id) {
  auto& it = interner();
  std::lock_guard lock(it.mu);
  return it.names.at(id);
}

} // namespace symbols

Term Term::pair(Term head, Term tail) {
  Term t(Kind::Pair, 0);
  t.cell_ = std::make_shared<const Cell>(Cell{std::move(head), std::move(tail)});
  return t;
}

Term Term::list(std::initializer_list<Term> items) {
  Term out = nil();
  const Term* base = items.begin();
  for (std::size_t i = items.size(); i > 0; --i) out = pair(base[i - 1], out);
  return out;
}

bool operator==(const Term& a, const Term& b) {
  if (a.kind_ != b.kind_) return false;
  switch (a.kind_) {
  case Term::Kind::Nil: return true;
  case Term::Kind::Int:
  case Term::Kind::Sym:
  case Term::Kind::Var: return a.num_ == b.num_;
  case Term::Kind::Pair:
    if (a.cell_ == b.cell_) return true;
    if (!(a.head() == b.head())) return false;
    return a.tail() == b.tail();
  }
  return false;
}

namespace {
void showInto(const Term& t, std::ostringstream& out) {
  switch (t.kind()) {
  case Term::Kind::Nil: out << "()"; return;
  case Term::Kind::Int: out << t.intValue(); return;
  case Term::Kind::Sym: out << symbols::name(t.symId()); return;
  case Term::Kind::Var: out << "#" << t.varId(); return;
  case Term::Kind::Pair: {
    out << "(";
    const Term* cur = &t;
    bool first = true;
    while (cur->isPair()) {
      if (!first) out << " ";
      showInto(cur->head(), out);
      first = false;
      cur = &cur->tail();
    }
    if (!cur->isNil()) {
      out << " . ";
      showInto(*cur, out);
    }
    out << ")";
    return;
  }
  }
}
} // namespace

std::string Term::show() const {
  std::ostringstream out;
  showInto(*this, out);
  return out.str();
}

} // namespace pk
