#include <doctest.h>

#include <thread>

#include "surreal/arithmetic.hpp"
#include "surreal/genealogy.hpp"
#include "test_support.hpp"

using namespace surreal;
using surreal::testing::makeForm;

namespace {

const auto L = Side::LeftChild;
const auto R = Side::RightChild;

Dyadic dy(const char* s) { return Dyadic::parse(s); }

}  // namespace

TEST_CASE("root is zero") {
  Genealogy tree;
  const CanonicalNode* z = tree.root();
  CHECK(z->form().empty());
  CHECK(z->generation() == 0);
  CHECK(z->name() == Dyadic(0));
  CHECK(z->parent() == nullptr);
  CHECK_FALSE(z->side().has_value());
  CHECK(pathOf(z).empty());
}

TEST_CASE("first generations") {
  Genealogy tree;
  const CanonicalNode* z = tree.root();
  const CanonicalNode* one = z->rightChild();
  const CanonicalNode* minusOne = z->leftChild();
  CHECK(render(one->form()) == "⟨0|⟩");
  CHECK(one->name() == Dyadic(1));
  CHECK(render(minusOne->form()) == "⟨|0⟩");
  CHECK(minusOne->name() == Dyadic(-1));
  CHECK(one->rightChild()->name() == Dyadic(2));
  CHECK(one->leftChild()->name() == dy("1/2"));
  CHECK(render(one->leftChild()->form()) == "⟨0|1⟩");
  CHECK(render(one->rightChild()->form()) == "⟨1|⟩");
  CHECK(one->leftChild()->generation() == 2);
  CHECK(one->parent() == z);
  CHECK(one->side() == R);
}

TEST_CASE("paths and names") {
  Genealogy tree;
  CHECK(pathOf(tree.fromDyadic(dy("1/2"))) == std::vector<Side>{R, L});
  CHECK(pathOf(tree.fromDyadic(-2)) == std::vector<Side>{L, L});
  CHECK(tree.atPath({R, L, R})->name() == dy("3/4"));
  CHECK(pathOf(tree.fromDyadic(dy("3/4"))) == std::vector<Side>{R, L, R});
  CHECK(pathOf(tree.fromDyadic(-3)) == std::vector<Side>{L, L, L});
  CHECK(tree.fromDyadic(0) == tree.root());
  CHECK(valueOf(tree.fromDyadic(2)) == Dyadic(2));
  CHECK(generationOf(tree.fromDyadic(dy("1/2"))) == 2);
  CHECK(describe(tree.fromDyadic(dy("1/2"))) == "1/2 = ⟨0|1⟩ (gen 2)");
  CHECK(describe(tree.root()) == "0 = ⟨|⟩ (gen 0)");
  CHECK(describe(tree.fromDyadic(dy("-1/2"))) == "-1/2 = ⟨-1|0⟩ (gen 2)");
}

TEST_CASE("pathOf makes no comparisons") {
  Genealogy tree;
  const CanonicalNode* n = tree.fromDyadic(dy("37/16"));
  // pathOf has no Order to count with; it only walks parent links, so the
  // walk back down must land on the same node.
  CHECK(tree.atPath(pathOf(n)) == n);
  CHECK(pathOf(n).size() == n->generation());
}

TEST_CASE("tree shape") {
  Genealogy tree;
  for (std::uint32_t g = 0; g <= 8; ++g) {
    std::size_t count = 0;
    for (auto* n : tree.inOrder(g)) count += n->generation() == g;
    CHECK(count == (std::size_t{1} << g));
  }
  const auto g4 = tree.inOrder(4);
  REQUIRE(g4.size() == 31);
  for (std::size_t i = 1; i < g4.size(); ++i) CHECK(g4[i - 1]->name() < g4[i]->name());
  CHECK(g4.front()->name() == Dyadic(-4));
  CHECK(g4.back()->name() == Dyadic(4));
  // -4 < -3 < -5/2 < -2 < -7/4 < -3/2 < -5/4 < -1 < -7/8 < ...
  CHECK(g4[1]->name() == Dyadic(-3));
  CHECK(g4[2]->name() == dy("-5/2"));
  CHECK(g4[5]->name() == dy("-3/2"));
  CHECK(g4[7]->name() == Dyadic(-1));
  CHECK(g4[8]->name() == dy("-7/8"));
  CHECK(g4[15]->name() == Dyadic(0));
}

TEST_CASE("round trip and negation mirror") {
  Genealogy tree;
  for (auto* n : tree.inOrder(8)) CHECK(tree.fromDyadic(valueOf(n)) == n);
  for (auto* n : tree.inOrder(6)) {
    auto path = pathOf(n);
    for (auto& s : path) s = flip(s);
    CHECK(tree.atPath(path)->name() == -n->name());
  }
}

TEST_CASE("order isomorphism on generation <= 6") {
  Genealogy tree;
  Order order;
  const auto nodes = tree.inOrder(6);
  for (std::size_t i = 0; i < nodes.size(); i += 3)
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      const auto expected = i < j ? Ordering::Less : i == j ? Ordering::Equal : Ordering::Greater;
      CHECK((order.cmp(nodes[i], nodes[j]) == expected));
    }
}

TEST_CASE("canonical") {
  Genealogy tree;
  Order order;
  const auto* one = tree.fromDyadic(1);
  CHECK(tree.canonical(makeForm({one, one}, {}), order) == tree.fromDyadic(2));
  CHECK(tree.canonical(Form{}, order) == tree.root());
  CHECK(tree.canonical(makeForm({tree.fromDyadic(dy("1/2"))}, {tree.fromDyadic(dy("3/2"))}), order) == one);
  // <-1 | 5> is born at 0, <1/4 | 3/8> at 5/16
  CHECK(tree.canonical(makeForm({tree.fromDyadic(-1)}, {tree.fromDyadic(5)}), order) == tree.root());
  CHECK(tree.canonical(makeForm({tree.fromDyadic(dy("1/4"))}, {tree.fromDyadic(dy("3/8"))}), order)->name() ==
        dy("5/16"));
}

TEST_CASE("canonical returns the simplest equivalent node") {
  Genealogy tree;
  Engine engine(tree);
  Order& order = engine.order();
  const auto g3 = tree.inOrder(3);
  for (auto* x : g3)
    for (auto* y : g3) {
      for (const Form& f : {engine.plusForm(x, y), engine.timesForm(x, y)}) {
        const CanonicalNode* viaTree = tree.canonical(f, order);
        if (viaTree->generation() <= 5) {
          CHECK(viaTree == surreal::testing::simplestByScan(tree, f, order, 5));
        } else {
          CHECK(surreal::testing::simplestByScan(tree, f, order, 5) == nullptr);
        }
      }
    }
}

TEST_CASE("lazy children are built once") {
  Genealogy tree;
  const auto before = tree.nodesBuilt();
  const CanonicalNode* a = tree.root()->rightChild();
  const CanonicalNode* b = tree.root()->rightChild();
  CHECK(a == b);
  CHECK(tree.nodesBuilt() == before + 1);
  CHECK(tree.root()->peekChild(Side::LeftChild) == nullptr);
}

TEST_CASE("concurrent forcing yields one node per slot") {
  Genealogy tree;
  std::vector<std::thread> workers;
  std::vector<const CanonicalNode*> seen(8);
  for (int t = 0; t < 8; ++t) {
    workers.emplace_back([&, t] { seen[t] = tree.fromDyadic(dy("1023/512")); });
  }
  for (auto& w : workers) w.join();
  for (auto* n : seen) CHECK(n == seen[0]);
  CHECK(tree.nodesBuilt() == 1 + seen[0]->generation());
}

TEST_CASE("generation cap") {
  Genealogy tree(5);
  CHECK(tree.fromDyadic(5)->generation() == 5);
  CHECK_THROWS_AS(tree.fromDyadic(6), ResourceLimitError);
  Order order;
  const auto* five = tree.fromDyadic(5);
  CHECK_THROWS_AS(tree.canonical(makeForm({five}, {}), order), ResourceLimitError);
}

TEST_CASE("tree dump") {
  Genealogy tree;
  CHECK(dumpTree(tree, 0) == ".\t0\t⟨|⟩\n");
  CHECK(dumpTree(tree, 1) == "L\t-1\t⟨|0⟩\n.\t0\t⟨|⟩\nR\t1\t⟨0|⟩\n");
  const std::string d2 = dumpTree(tree, 2);
  CHECK(std::count(d2.begin(), d2.end(), '\n') == 7);
  CHECK(d2.substr(d2.rfind('\n', d2.size() - 2) + 1) == "RR\t2\t⟨1|⟩\n");
}
