#pragma once

#include <cstdint>
#include <initializer_list>
#include <memory>
#include <string>
#include <string_view>

namespace pk {

using SymId = std::uint32_t;

// Global interner for symbol atoms. Ids are stable for the process lifetime,
// so symbol equality is an integer compare.
namespace symbols {
SymId intern(std::string_view name);
const std::string& name(SymId id);
}

/// An immutable logic term: nil, integer atom, interned symbol atom, logic
/// variable, or pair. Pairs share structure through shared_ptr, so terms are
/// cheap to copy and safe to read from any thread.
class Term {
public:
  enum class Kind : std::uint8_t { Nil, Int, Sym, Var, Pair };

  Term() = default; // nil

  static Term nil() { return Term(); }
  static Term integer(std::int64_t v) { return Term(Kind::Int, v); }
  static Term symbol(SymId id) { return Term(Kind::Sym, id); }
  static Term symbol(std::string_view s) { return Term(Kind::Sym, symbols::intern(s)); }
  static Term var(std::int64_t id) { return Term(Kind::Var, id); }
  static Term pair(Term head, Term tail);
  static Term list(std::initializer_list<Term> items);

  Kind kind() const { return kind_; }
  bool isNil() const { return kind_ == Kind::Nil; }
  bool isInt() const { return kind_ == Kind::Int; }
  bool isSym() const { return kind_ == Kind::Sym; }
  bool isVar() const { return kind_ == Kind::Var; }
  bool isPair() const { return kind_ == Kind::Pair; }

  std::int64_t intValue() const { return num_; }
  SymId symId() const { return static_cast<SymId>(num_); }
  std::int64_t varId() const { return num_; }
  const Term& head() const { return cell_->head; }
  const Term& tail() const { return cell_->tail; }

  /// Structural equality (variables equal iff same id).
  friend bool operator==(const Term& a, const Term& b);
  friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }

  /// Renders as an s-expression: lists as (a b c), improper tails as
  /// (a . b), variables as #<n>.
  std::string show() const;

private:
  struct Cell {
    Term head;
    Term tail;
  };

  Term(Kind k, std::int64_t n) : kind_(k), num_(n) {}

  Kind kind_ = Kind::Nil;
  std::int64_t num_ = 0;
  std::shared_ptr<const Cell> cell_;
};

} // namespace pk
