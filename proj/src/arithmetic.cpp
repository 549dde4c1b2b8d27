#include "surreal/arithmetic.hpp"

namespace surreal {

const char* toString(Strategy s) {
  switch (s) {
    case Strategy::Naive: return "naive";
    case Strategy::Memo: return "memo";
    case Strategy::MemoParents: return "parents";
  }
  return "?";
}

std::optional<Strategy> parseStrategy(std::string_view s) {
  if (s == "naive") return Strategy::Naive;
  if (s == "memo") return Strategy::Memo;
  if (s == "parents") return Strategy::MemoParents;
  return std::nullopt;
}

Engine::Engine(const Genealogy& tree, EngineConfig config)
    : tree_(&tree),
      strategy_(config.strategy),
      nodesBaseline_(tree.nodesBuilt()),
      order_(&stats_, config.maxDescent) {
  order_.setMemoize(config.memoizeOrder);
}

void Engine::setStrategy(Strategy s) {
  strategy_ = s;
  plusTable_.clear();
  timesTable_.clear();
  filledPlus_ = 0;
  filledTimes_ = 0;
  order_.clearMemo();
}

Stats Engine::statsSnapshot() const {
  Stats s = stats_;
  s.nodesBuilt = tree_->nodesBuilt() - nodesBaseline_;
  return s;
}

void Engine::statsReset() {
  stats_ = Stats{};
  nodesBaseline_ = tree_->nodesBuilt();
}

void Engine::checkDeadline() {
  if (!deadline_) return;
  if ((++deadlineTick_ & 0xFF) != 0) return;
  if (Clock::now() > *deadline_) throw BudgetExceeded("time budget exceeded");
}

const CanonicalNode* Engine::negate(const CanonicalNode* x) {
  const CanonicalNode* n = tree_->root();
  for (Side s : pathOf(x)) n = n->child(flip(s));
  return n;
}

Form Engine::negateForm(const CanonicalNode* x) {
  Form f;
  for (const CanonicalNode* r : x->form().right) f.left.push_back(negate(r));
  for (const CanonicalNode* l : x->form().left) f.right.push_back(negate(l));
  return f;
}

Form Engine::plusForm(const CanonicalNode* x, const CanonicalNode* y) {
  const Form& fx = x->form();
  const Form& fy = y->form();
  Form f;
  for (const CanonicalNode* xl : fx.left) f.left.push_back(add(xl, y));
  for (const CanonicalNode* yl : fy.left) f.left.push_back(add(x, yl));
  for (const CanonicalNode* xr : fx.right) f.right.push_back(add(xr, y));
  for (const CanonicalNode* yr : fy.right) f.right.push_back(add(x, yr));
  return f;
}

Form Engine::timesForm(const CanonicalNode* x, const CanonicalNode* y) {
  const Form& fx = x->form();
  const Form& fy = y->form();
  // a*y + x*b - a*b
  auto term = [&](const CanonicalNode* a, const CanonicalNode* b) {
    return sub(add(mul(a, y), mul(x, b)), mul(a, b));
  };
  Form f;
  for (const CanonicalNode* xl : fx.left)
    for (const CanonicalNode* yl : fy.left) f.left.push_back(term(xl, yl));
  for (const CanonicalNode* xr : fx.right)
    for (const CanonicalNode* yr : fy.right) f.left.push_back(term(xr, yr));
  for (const CanonicalNode* xl : fx.left)
    for (const CanonicalNode* yr : fy.right) f.right.push_back(term(xl, yr));
  for (const CanonicalNode* xr : fx.right)
    for (const CanonicalNode* yl : fy.left) f.right.push_back(term(xr, yl));
  return f;
}

const CanonicalNode* Engine::evalPlus(const CanonicalNode* x, const CanonicalNode* y) {
  ++stats_.plusEvals;
  checkDeadline();
  return tree_->canonical(plusForm(x, y), order_);
}

const CanonicalNode* Engine::evalTimes(const CanonicalNode* x, const CanonicalNode* y) {
  ++stats_.timesEvals;
  checkDeadline();
  return tree_->canonical(timesForm(x, y), order_);
}

const CanonicalNode* Engine::lookup(MemoTable& table, const CanonicalNode* x,
                                    const CanonicalNode* y, bool times) {
  auto& inner = select(table, x).value;
  auto& cell = select(inner, y).value;
  if (cell.result) {
    ++stats_.tableHits;
    return cell.result;
  }
  // Sub-lookups only reach smaller pairs, so this cell cannot be filled
  // re-entrantly, and cell addresses are stable under tree growth.
  const CanonicalNode* r = times ? evalTimes(x, y) : evalPlus(x, y);
  cell.result = r;
  ++(times ? filledTimes_ : filledPlus_);
  return r;
}

const CanonicalNode* Engine::add(const CanonicalNode* x, const CanonicalNode* y) {
  if (strategy_ == Strategy::Naive) return evalPlus(x, y);
  return lookup(plusTable_, x, y, false);
}

const CanonicalNode* Engine::mul(const CanonicalNode* x, const CanonicalNode* y) {
  if (strategy_ == Strategy::Naive) return evalTimes(x, y);
  return lookup(timesTable_, x, y, true);
}

const CanonicalNode* Engine::sub(const CanonicalNode* x, const CanonicalNode* y) {
  return add(x, negate(y));
}

}  // namespace surreal
