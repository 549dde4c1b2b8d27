#include "surreal/form.hpp"

#include "surreal/genealogy.hpp"

namespace surreal {

namespace {

void appendNames(std::string& out, const std::vector<const CanonicalNode*>& opts) {
  for (std::size_t i = 0; i < opts.size(); ++i) {
    if (i) out += ',';
    out += opts[i]->name().toString();
  }
}

// Keeps the recursion depth counter balanced when ge unwinds by exception.
class DescentGuard {
 public:
  DescentGuard(std::size_t& depth, std::size_t limit) : depth_(depth) {
    if (++depth_ > limit) {
      --depth_;
      throw ResourceLimitError("order relation exceeded maximum descent of " +
                               std::to_string(limit) + " (cyclic or malformed form?)");
    }
  }
  ~DescentGuard() { --depth_; }
  DescentGuard(const DescentGuard&) = delete;
  DescentGuard& operator=(const DescentGuard&) = delete;

 private:
  std::size_t& depth_;
};

}  // namespace

std::string render(const Form& f) {
  std::string out = "⟨";
  appendNames(out, f.left);
  out += '|';
  appendNames(out, f.right);
  out += "⟩";
  return out;
}

const char* toString(Ordering o) {
  switch (o) {
    case Ordering::Less: return "Less";
    case Ordering::Equal: return "Equal";
    case Ordering::Greater: return "Greater";
  }
  return "?";
}

void Order::setMemoize(bool on) {
  memoize_ = on;
  if (!on) memo_.clear();
}

Order::Ref Order::refOf(const CanonicalNode* n) { return Ref{&n->form(), n}; }

bool Order::geImpl(Ref x, Ref y) {
  const bool cacheable = memoize_ && x.node && y.node;
  if (cacheable) {
    if (auto it = memo_.find({x.node, y.node}); it != memo_.end()) return it->second;
  }
  DescentGuard guard(depth_, maxDescent_);
  if (stats_) ++stats_->geCalls;

  bool result = true;
  for (const CanonicalNode* xr : x.form->right) {
    if (geImpl(y, refOf(xr))) {  // x_R <= y
      result = false;
      break;
    }
  }
  if (result) {
    for (const CanonicalNode* yl : y.form->left) {
      if (geImpl(refOf(yl), x)) {  // y_L >= x
        result = false;
        break;
      }
    }
  }
  if (cacheable) memo_.emplace(std::pair{x.node, y.node}, result);
  return result;
}

bool Order::ge(const Form& x, const Form& y) { return geImpl(Ref{&x, nullptr}, Ref{&y, nullptr}); }

bool Order::ge(const CanonicalNode* x, const CanonicalNode* y) { return geImpl(refOf(x), refOf(y)); }

Ordering Order::cmp(const Form& x, const Form& y) {
  if (!ge(x, y)) return Ordering::Less;
  return ge(y, x) ? Ordering::Equal : Ordering::Greater;
}

Ordering Order::cmp(const CanonicalNode* x, const CanonicalNode* y) {
  if (!geImpl(refOf(x), refOf(y))) return Ordering::Less;
  return geImpl(refOf(y), refOf(x)) ? Ordering::Equal : Ordering::Greater;
}

Ordering Order::cmp(const Form& x, const CanonicalNode* y) {
  const Ref xr{&x, nullptr};
  if (!geImpl(xr, refOf(y))) return Ordering::Less;
  return geImpl(refOf(y), xr) ? Ordering::Equal : Ordering::Greater;
}

bool Order::isNumber(const Form& x) {
  for (const CanonicalNode* r : x.right) {
    for (const CanonicalNode* l : x.left) {
      if (ge(l, r)) return false;  // r <= l
    }
  }
  return true;
}

}  // namespace surreal
