#include "surreal/genealogy.hpp"

#include <algorithm>

namespace surreal {

namespace {

// Simplest dyadic strictly inside (lo, hi).
Dyadic nameFor(const std::optional<Dyadic>& lo, const std::optional<Dyadic>& hi) {
  if (!lo && !hi) return Dyadic(0);
  if (lo && !hi) return *lo + Dyadic(1);
  if (!lo && hi) return *hi - Dyadic(1);
  return Dyadic::midpoint(*lo, *hi);
}

void collectInOrder(const CanonicalNode* n, std::uint32_t depth,
                    std::vector<const CanonicalNode*>& out) {
  if (n->generation() < depth) collectInOrder(n->leftChild(), depth, out);
  out.push_back(n);
  if (n->generation() < depth) collectInOrder(n->rightChild(), depth, out);
}

}  // namespace

CanonicalNode::CanonicalNode(Genealogy& tree, Form form, const CanonicalNode* parent,
                             std::optional<Side> side, std::uint32_t generation,
                             std::optional<Dyadic> lo, std::optional<Dyadic> hi)
    : tree_(&tree),
      form_(std::move(form)),
      parent_(parent),
      side_(side),
      generation_(generation),
      lo_(std::move(lo)),
      hi_(std::move(hi)),
      name_(nameFor(lo_, hi_)) {}

CanonicalNode::~CanonicalNode() {
  // Tear down long one-sided spines iteratively so deep trees don't overflow
  // the stack through nested unique_ptr destructors.
  std::vector<std::unique_ptr<CanonicalNode>> pending;
  for (auto& slot : slots_) {
    if (slot.owned) pending.push_back(std::move(slot.owned));
  }
  while (!pending.empty()) {
    auto node = std::move(pending.back());
    pending.pop_back();
    for (auto& slot : node->slots_) {
      if (slot.owned) pending.push_back(std::move(slot.owned));
    }
  }
}

const CanonicalNode* CanonicalNode::child(Side s) const {
  Slot& slot = slots_[index(s)];
  if (const CanonicalNode* built = slot.node.load(std::memory_order_acquire)) return built;
  std::call_once(slot.once, [&] {
    slot.owned = tree_->build(*this, s);
    slot.node.store(slot.owned.get(), std::memory_order_release);
  });
  return slot.node.load(std::memory_order_acquire);
}

Genealogy::Genealogy(std::uint32_t maxGeneration) : maxGeneration_(maxGeneration) {
  root_.reset(new CanonicalNode(*this, Form{}, nullptr, std::nullopt, 0, std::nullopt, std::nullopt));
  nodesBuilt_.fetch_add(1, std::memory_order_relaxed);
}

std::unique_ptr<CanonicalNode> Genealogy::build(const CanonicalNode& parent, Side side) {
  const std::uint32_t generation = parent.generation() + 1;
  if (generation > maxGeneration_) {
    throw ResourceLimitError("generation cap of " + std::to_string(maxGeneration_) + " exceeded");
  }
  Form form;
  std::optional<Dyadic> lo, hi;
  if (side == Side::LeftChild) {
    form.left = parent.form().left;  // <L | <L|R>>
    form.right = {&parent};
    lo = parent.lo_;
    hi = parent.name();
  } else {
    form.left = {&parent};  // <<L|R> | R>
    form.right = parent.form().right;
    lo = parent.name();
    hi = parent.hi_;
  }
  std::unique_ptr<CanonicalNode> node(
      new CanonicalNode(*this, std::move(form), &parent, side, generation, std::move(lo), std::move(hi)));
  nodesBuilt_.fetch_add(1, std::memory_order_relaxed);
  return node;
}

const CanonicalNode* Genealogy::canonical(const Form& x, Order& order) const {
  const CanonicalNode* s = root();
  for (;;) {
    switch (order.cmp(x, s)) {
      case Ordering::Less: s = s->leftChild(); break;
      case Ordering::Greater: s = s->rightChild(); break;
      case Ordering::Equal: return s;
    }
  }
}

const CanonicalNode* Genealogy::fromDyadic(const Dyadic& d) const {
  const CanonicalNode* s = root();
  for (;;) {
    const auto c = d <=> s->name();
    if (c == 0) return s;
    s = c < 0 ? s->leftChild() : s->rightChild();
  }
}

const CanonicalNode* Genealogy::atPath(const std::vector<Side>& path) const {
  const CanonicalNode* s = root();
  for (Side side : path) s = s->child(side);
  return s;
}

std::vector<const CanonicalNode*> Genealogy::inOrder(std::uint32_t depth) const {
  std::vector<const CanonicalNode*> out;
  collectInOrder(root(), depth, out);
  return out;
}

std::vector<Side> pathOf(const CanonicalNode* n) {
  std::vector<Side> path;
  path.reserve(n->generation());
  for (; !n->isRoot(); n = n->parent()) path.push_back(*n->side());
  std::reverse(path.begin(), path.end());
  return path;
}

std::string renderPath(const std::vector<Side>& path) {
  if (path.empty()) return ".";
  std::string s;
  s.reserve(path.size());
  for (Side side : path) s += side == Side::LeftChild ? 'L' : 'R';
  return s;
}

std::string describe(const CanonicalNode* n) {
  return n->name().toString() + " = " + render(n->form()) + " (gen " +
         std::to_string(n->generation()) + ")";
}

std::string dumpTree(const Genealogy& tree, std::uint32_t depth) {
  std::string out;
  for (const CanonicalNode* n : tree.inOrder(depth)) {
    out += renderPath(pathOf(n));
    out += '\t';
    out += n->name().toString();
    out += '\t';
    out += render(n->form());
    out += '\n';
  }
  return out;
}

}  // namespace surreal
