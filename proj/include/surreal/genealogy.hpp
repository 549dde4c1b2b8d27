#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "surreal/dyadic.hpp"
#include "surreal/form.hpp"

namespace surreal {

class Genealogy;

enum class Side : std::uint8_t { LeftChild, RightChild };

inline Side flip(Side s) { return s == Side::LeftChild ? Side::RightChild : Side::LeftChild; }

/// A node of the genealogy tree: the canonical form of one short surreal.
///
/// The left child of <L|R> is <L|<L|R>> and the right child is <<L|R>|R>.
/// Children are built on first use and never rebuilt; concurrent forcing of the
/// same slot yields one node. Nodes are owned by their parent (the root by the
/// Genealogy) and live as long as the tree.
class CanonicalNode {
 public:
  const Form& form() const { return form_; }
  const CanonicalNode* parent() const { return parent_; }
  std::optional<Side> side() const { return side_; }
  std::uint32_t generation() const { return generation_; }
  const Dyadic& name() const { return name_; }
  bool isRoot() const { return parent_ == nullptr; }

  const CanonicalNode* leftChild() const { return child(Side::LeftChild); }
  const CanonicalNode* rightChild() const { return child(Side::RightChild); }
  const CanonicalNode* child(Side s) const;

  /// Child if already built, nullptr otherwise. Never forces.
  const CanonicalNode* peekChild(Side s) const {
    return slots_[index(s)].node.load(std::memory_order_acquire);
  }

  CanonicalNode(const CanonicalNode&) = delete;
  CanonicalNode& operator=(const CanonicalNode&) = delete;
  ~CanonicalNode();

 private:
  friend class Genealogy;

  struct Slot {
    std::once_flag once;
    std::atomic<const CanonicalNode*> node{nullptr};
    std::unique_ptr<CanonicalNode> owned;
  };

  CanonicalNode(Genealogy& tree, Form form, const CanonicalNode* parent, std::optional<Side> side,
                std::uint32_t generation, std::optional<Dyadic> lo, std::optional<Dyadic> hi);

  static std::size_t index(Side s) { return s == Side::LeftChild ? 0 : 1; }

  Genealogy* tree_;
  Form form_;
  const CanonicalNode* parent_;
  std::optional<Side> side_;
  std::uint32_t generation_;
  std::optional<Dyadic> lo_;  // open interval this node's subtree covers
  std::optional<Dyadic> hi_;
  Dyadic name_;
  mutable Slot slots_[2];
};

/// The lazy infinite tree of canonical short surreals rooted at zero.
class Genealogy {
 public:
  static constexpr std::uint32_t kDefaultMaxGeneration = 4096;

  explicit Genealogy(std::uint32_t maxGeneration = kDefaultMaxGeneration);
  Genealogy(const Genealogy&) = delete;
  Genealogy& operator=(const Genealogy&) = delete;

  const CanonicalNode* root() const { return root_.get(); }
  std::uint32_t maxGeneration() const { return maxGeneration_; }

  /// Total nodes constructed so far, root included.
  std::uint64_t nodesBuilt() const { return nodesBuilt_.load(std::memory_order_relaxed); }

  /// The node eq to x, found by descending from the root with cmp.
  /// Precondition: x is a number.
  const CanonicalNode* canonical(const Form& x, Order& order) const;

  /// The node named d, found by Dyadic comparisons only.
  const CanonicalNode* fromDyadic(const Dyadic& d) const;

  /// The node at the end of a root-relative path.
  const CanonicalNode* atPath(const std::vector<Side>& path) const;

  /// All nodes of generation <= depth, in order.
  std::vector<const CanonicalNode*> inOrder(std::uint32_t depth) const;

 private:
  friend class CanonicalNode;
  std::unique_ptr<CanonicalNode> build(const CanonicalNode& parent, Side side);

  std::uint32_t maxGeneration_;
  std::atomic<std::uint64_t> nodesBuilt_{0};
  std::unique_ptr<CanonicalNode> root_;
};

/// Root-to-n sequence of sides, read off the parent links. No comparisons.
std::vector<Side> pathOf(const CanonicalNode* n);

inline const Dyadic& valueOf(const CanonicalNode* n) { return n->name(); }
inline std::uint32_t generationOf(const CanonicalNode* n) { return n->generation(); }

/// "L"/"R" letters; the root renders as ".".
std::string renderPath(const std::vector<Side>& path);

/// "1/2 = ⟨0|1⟩ (gen 2)"
std::string describe(const CanonicalNode* n);

/// One line per node of generation <= depth, in order: path<TAB>name<TAB>form.
std::string dumpTree(const Genealogy& tree, std::uint32_t depth);

}  // namespace surreal
