#include "parakanren/subst.hpp"

#include <algorithm>

namespace pk {

namespace {

using NodePtr = Subst::NodePtr;

int heightOf(const NodePtr& n) { return n ? n->height : 0; }

NodePtr makeNode(std::int64_t key, Term value, NodePtr left, NodePtr right) {
  int h = 1 + std::max(heightOf(left), heightOf(right));
  return std::make_shared<const Subst::Node>(
      Subst::Node{key, std::move(value), std::move(left), std::move(right), h});
}

int balanceOf(const NodePtr& n) { return heightOf(n->left) - heightOf(n->right); }

NodePtr rotateRight(const NodePtr& n) {
  const NodePtr& l = n->left;
  return makeNode(l->key, l->value, l->left, makeNode(n->key, n->value, l->right, n->right));
}

NodePtr rotateLeft(const NodePtr& n) {
  const NodePtr& r = n->right;
  return makeNode(r->key, r->value, makeNode(n->key, n->value, n->left, r->left), r->right);
}

NodePtr rebalance(NodePtr n) {
  int b = balanceOf(n);
  if (b > 1) {
    if (balanceOf(n->left) < 0)
      n = makeNode(n->key, n->value, rotateLeft(n->left), n->right);
    return rotateRight(n);
  }
  if (b < -1) {
    if (balanceOf(n->right) > 0)
      n = makeNode(n->key, n->value, n->left, rotateRight(n->right));
    return rotateLeft(n);
  }
  return n;
}

NodePtr insertNode(const NodePtr& n, std::int64_t key, const Term& value) {
  if (!n) return makeNode(key, value, nullptr, nullptr);
  if (key == n->key) throw std::logic_error("Subst::insert: duplicate key");
  NodePtr child = key < n->key
                      ? makeNode(n->key, n->value, insertNode(n->left, key, value), n->right)
                      : makeNode(n->key, n->value, n->left, insertNode(n->right, key, value));
  return rebalance(std::move(child));
}

void visit(const NodePtr& n, const std::function<void(const Subst::Node&)>& f) {
  if (!n) return;
  f(*n);
  visit(n->left, f);
  visit(n->right, f);
}

} // namespace

const Term* Subst::lookup(std::int64_t key) const {
  const Node* n = root_.get();
  while (n) {
    if (key == n->key) return &n->value;
    n = key < n->key ? n->left.get() : n->right.get();
  }
  return nullptr;
}

Subst Subst::insert(std::int64_t key, Term value) const {
  return Subst(insertNode(root_, key, value), size_ + 1);
}

void Subst::visitNodes(const std::function<void(const Node&)>& f) const {
  visit(root_, f);
}

} // namespace pk
