#pragma once

#include <chrono>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "surreal/form.hpp"
#include "surreal/genealogy.hpp"
#include "surreal/stats.hpp"

namespace surreal {

/// How add/mul obtain sub-results.
///   Naive        definitional recursion, nothing cached, every sub-result
///                re-derived and canonicalized on the spot
///   Memo         lazy tables, select walks SNs with comparisons
///   MemoParents  lazy tables, select follows the operand's parent chain
enum class Strategy { Naive, Memo, MemoParents };

const char* toString(Strategy s);  // "naive", "memo", "parents"
std::optional<Strategy> parseStrategy(std::string_view s);

/// Raised when an evaluation runs past its deadline.
class BudgetExceeded : public ResourceLimitError {
 public:
  using ResourceLimitError::ResourceLimitError;
};

/// A lazy tree shaped like SNs; each cell is created the first time a lookup
/// reaches it and then keeps its value for the tree's lifetime.
template <class T>
class MirrorTree {
 public:
  struct Cell {
    T value{};
    std::unique_ptr<Cell> children[2];

    Cell& child(Side s) {
      auto& slot = children[s == Side::LeftChild ? 0 : 1];
      if (!slot) slot = std::make_unique<Cell>();
      return *slot;
    }
  };

  Cell& root() { return root_; }
  void clear() { root_ = Cell{}; }

 private:
  Cell root_;
};

/// TimesTable / PlusTable: outer tree indexed by x, inner tree by y, inner
/// cells holding the canonical result node (nullptr until forced).
struct ResultCell {
  const CanonicalNode* result = nullptr;
};
using InnerTable = MirrorTree<ResultCell>;
using MemoTable = MirrorTree<InnerTable>;

struct EngineConfig {
  Strategy strategy = Strategy::MemoParents;
  std::size_t maxDescent = Order::kDefaultMaxDescent;
  bool memoizeOrder = false;
};

/// Conway's +, -, * over canonical nodes of one shared genealogy tree.
///
/// An engine owns its memo tables and counters and is single-threaded. Several
/// engines may share one Genealogy.
class Engine {
 public:
  using Clock = std::chrono::steady_clock;

  explicit Engine(const Genealogy& tree, EngineConfig config = {});

  const Genealogy& tree() const { return *tree_; }
  Order& order() { return order_; }

  Strategy strategy() const { return strategy_; }
  /// Switching strategy drops both tables.
  void setStrategy(Strategy s);

  /// The mirror-path node of x; no comparisons.
  const CanonicalNode* negate(const CanonicalNode* x);
  const CanonicalNode* add(const CanonicalNode* x, const CanonicalNode* y);
  const CanonicalNode* sub(const CanonicalNode* x, const CanonicalNode* y);
  const CanonicalNode* mul(const CanonicalNode* x, const CanonicalNode* y);

  /// <-x_R | -x_L>
  Form negateForm(const CanonicalNode* x);
  /// <x_L+y, x+y_L | x_R+y, x+y_R>
  Form plusForm(const CanonicalNode* x, const CanonicalNode* y);
  /// <x_L*y + x*y_L - x_L*y_L, x_R*y + x*y_R - x_R*y_R |
  ///  x_L*y + x*y_R - x_L*y_R, x_R*y + x*y_L - x_R*y_L>
  Form timesForm(const CanonicalNode* x, const CanonicalNode* y);

  /// The cell of tr that corresponds to x.
  template <class T>
  typename MirrorTree<T>::Cell& select(MirrorTree<T>& tr, const CanonicalNode* x);

  Stats statsSnapshot() const;
  void statsReset();

  /// Naive evaluation past the deadline throws BudgetExceeded.
  void setDeadline(std::optional<Clock::time_point> deadline) { deadline_ = deadline; }

  /// Filled result cells, i.e. distinct (x, y) pairs evaluated so far.
  std::uint64_t filledTimesCells() const { return filledTimes_; }
  std::uint64_t filledPlusCells() const { return filledPlus_; }

 private:
  const CanonicalNode* lookup(MemoTable& table, const CanonicalNode* x, const CanonicalNode* y,
                              bool times);
  const CanonicalNode* evalPlus(const CanonicalNode* x, const CanonicalNode* y);
  const CanonicalNode* evalTimes(const CanonicalNode* x, const CanonicalNode* y);
  void checkDeadline();

  const Genealogy* tree_;
  Strategy strategy_;
  Stats stats_;
  std::uint64_t nodesBaseline_ = 0;
  Order order_;
  MemoTable plusTable_;
  MemoTable timesTable_;
  std::uint64_t filledPlus_ = 0;
  std::uint64_t filledTimes_ = 0;
  std::optional<Clock::time_point> deadline_;
  std::uint32_t deadlineTick_ = 0;
};

template <class T>
typename MirrorTree<T>::Cell& Engine::select(MirrorTree<T>& tr, const CanonicalNode* x) {
  auto* cell = &tr.root();
  if (strategy_ == Strategy::MemoParents) {
    for (Side s : pathOf(x)) {
      cell = &cell->child(s);
      ++stats_.selectSteps;
    }
    return *cell;
  }
  const CanonicalNode* s = tree_->root();
  for (;;) {
    switch (order_.cmp(x, s)) {
      case Ordering::Less:
        s = s->leftChild();
        cell = &cell->child(Side::LeftChild);
        break;
      case Ordering::Greater:
        s = s->rightChild();
        cell = &cell->child(Side::RightChild);
        break;
      case Ordering::Equal:
        return *cell;
    }
    ++stats_.selectSteps;
  }
}

}  // namespace surreal
