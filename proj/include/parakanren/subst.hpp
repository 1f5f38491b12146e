#pragma once

#include "parakanren/term.hpp"

#include <cstddef>
#include <functional>
#include <memory>
#include <stdexcept>

namespace pk {

/// Persistent height-balanced map from variable id to term. Insertion copies
/// only the path from the root down to the new leaf (plus at most one
/// rotation), so every older version stays valid and most structure is shared.
/// Nodes are never mutated after construction; any number of threads may read
/// any version without synchronization.
class Subst {
public:
  struct Node {
    std::int64_t key;
    Term value;
    std::shared_ptr<const Node> left;
    std::shared_ptr<const Node> right;
    int height; // leaf == 1
  };
  using NodePtr = std::shared_ptr<const Node>;

  Subst() = default;

  bool empty() const { return root_ == nullptr; }
  std::size_t size() const { return size_; }
  int height() const { return root_ ? root_->height : 0; }

  /// Pointer to the bound term, or nullptr when the key is absent.
  const Term* lookup(std::int64_t key) const;

  /// New map with the binding added. Substitutions only ever extend, so a
  /// duplicate key is a caller bug and throws std::logic_error.
  Subst insert(std::int64_t key, Term value) const;

  /// Visits every node (preorder). Exposes node identities so tests can
  /// verify structure sharing and balance without friend access.
  void visitNodes(const std::function<void(const Node&)>& f) const;

  const NodePtr& root() const { return root_; }

private:
  Subst(NodePtr root, std::size_t size) : root_(std::move(root)), size_(size) {}

  NodePtr root_;
  std::size_t size_ = 0;
};

} // namespace pk
