#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "surreal/stats.hpp"

namespace surreal {

class CanonicalNode;

/// Base of every error the engine reports. what() carries the message without
/// the "error: " prefix used for display.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured limit (recursion descent, generation cap, time budget) was hit.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

/// A surreal form <L|R>. Options are canonical surreals, so the option graph
/// is acyclic by construction and bottoms out at zero. Duplicates are allowed:
/// 1+1 yields <1,1|>.
struct Form {
  std::vector<const CanonicalNode*> left;
  std::vector<const CanonicalNode*> right;

  bool empty() const { return left.empty() && right.empty(); }
};

/// Renders as ⟨a,b|c⟩ using the names of the option nodes.
std::string render(const Form& f);

enum class Ordering { Less, Equal, Greater };

const char* toString(Ordering o);

/// Conway's order relation on forms:
///   x >= y  iff  no x_R <= y  and  no y_L >= x
/// with le, lt, eq, ne, gt and cmp derived from it. lt is taken as !ge, which
/// holds for numbers; non-number forms are filtered out by isNumber upstream.
///
/// Every ge invocation, recursive or not, bumps Stats::geCalls when a sink is
/// attached. Recursion deeper than maxDescent raises ResourceLimitError.
class Order {
 public:
  static constexpr std::size_t kDefaultMaxDescent = 100'000;

  explicit Order(Stats* stats = nullptr, std::size_t maxDescent = kDefaultMaxDescent)
      : stats_(stats), maxDescent_(maxDescent) {}

  void attach(Stats* stats) { stats_ = stats; }
  void setMaxDescent(std::size_t n) { maxDescent_ = n; }
  std::size_t maxDescent() const { return maxDescent_; }

  /// Caches ge results on pairs of canonical nodes. Off by default.
  void setMemoize(bool on);
  bool memoize() const { return memoize_; }
  void clearMemo() { memo_.clear(); }

  bool ge(const Form& x, const Form& y);
  bool le(const Form& x, const Form& y) { return ge(y, x); }
  bool lt(const Form& x, const Form& y) { return !ge(x, y); }
  bool gt(const Form& x, const Form& y) { return !ge(y, x); }
  bool eq(const Form& x, const Form& y) { return ge(x, y) && ge(y, x); }
  bool ne(const Form& x, const Form& y) { return !eq(x, y); }

  /// ge(x, y) first; ge(y, x) only when the first holds.
  Ordering cmp(const Form& x, const Form& y);

  bool ge(const CanonicalNode* x, const CanonicalNode* y);
  Ordering cmp(const CanonicalNode* x, const CanonicalNode* y);
  Ordering cmp(const Form& x, const CanonicalNode* y);

  /// True iff no right option is <= any left option.
  bool isNumber(const Form& x);

 private:
  struct Ref {
    const Form* form;
    const CanonicalNode* node;  // non-null when form is a canonical node's form
  };
  static Ref refOf(const CanonicalNode* n);

  bool geImpl(Ref x, Ref y);

  struct PairHash {
    std::size_t operator()(const std::pair<const CanonicalNode*, const CanonicalNode*>& p) const {
      auto a = reinterpret_cast<std::uintptr_t>(p.first);
      auto b = reinterpret_cast<std::uintptr_t>(p.second);
      return std::hash<std::uintptr_t>{}(a * 0x9E3779B97F4A7C15ull ^ b);
    }
  };

  Stats* stats_;
  std::size_t maxDescent_;
  std::size_t depth_ = 0;
  bool memoize_ = false;
  std::unordered_map<std::pair<const CanonicalNode*, const CanonicalNode*>, bool, PairHash> memo_;
};

}  // namespace surreal
