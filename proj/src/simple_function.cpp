#include "padic/simple_function.hpp"

#include <algorithm>
#include <set>

namespace padic {

namespace mp = boost::multiprecision;

namespace {

void check_disjoint(const std::vector<Cell>& cells) {
  if (cells.size() < 2) return;
  // Visit larger balls first; a later ball overlaps an earlier one iff one of
  // its ancestors (or itself) was already seen.
  std::vector<std::size_t> order(cells.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return cells[a].ball.gamma() > cells[b].ball.gamma();
  });
  const std::int64_t top = cells[order.front()].ball.gamma();
  std::set<Ball> seen;
  for (std::size_t i : order) {
    const Ball& b = cells[i].ball;
    for (std::int64_t g = b.gamma(); g <= top; ++g) {
      Ball a = g == b.gamma() ? b : b.ancestor(g);
      if (seen.count(a)) {
        throw InputError("cells overlap: " + b.to_string() + " meets " + a.to_string());
      }
    }
    seen.insert(b);
  }
}

}  // namespace

SimpleFunction::SimpleFunction(std::int64_t prime, int dim) : prime_(prime), dim_(dim) {
  require_prime(prime);
  if (dim < 1) throw ParameterError("dim must be >= 1");
}

SimpleFunction::SimpleFunction(std::int64_t prime, int dim, std::vector<Cell> cells)
    : SimpleFunction(prime, dim, std::move(cells), Unchecked{}) {
  check_disjoint(cells_);
}

SimpleFunction::SimpleFunction(std::int64_t prime, int dim, std::vector<Cell> cells, Unchecked)
    : prime_(prime), dim_(dim), cells_(std::move(cells)) {
  require_prime(prime);
  if (dim < 1) throw ParameterError("dim must be >= 1");
  for (const auto& c : cells_) {
    require_same_space(prime_, dim_, c.ball.prime(), c.ball.dim());
  }
}

SimpleFunction make_unchecked(std::int64_t prime, int dim, std::vector<Cell> cells) {
  return SimpleFunction(prime, dim, std::move(cells), SimpleFunction::Unchecked{});
}

SimpleFunction SimpleFunction::indicator(const Ball& ball, const Rational& value) {
  return SimpleFunction(ball.prime(), ball.dim(), {Cell{ball, value}});
}

bool SimpleFunction::is_zero() const {
  return std::all_of(cells_.begin(), cells_.end(), [](const Cell& c) { return c.value == 0; });
}

Rational SimpleFunction::evaluate(const PAdicPoint& x) const {
  require_same_space(prime_, dim_, x.prime(), x.dim());
  for (const auto& c : cells_) {
    if (c.ball.contains(x)) return c.value;
  }
  return Rational(0);
}

std::optional<Ball> SimpleFunction::support_ball() const {
  if (cells_.empty()) return std::nullopt;
  return enclosing_ball(balls());
}

std::optional<std::int64_t> SimpleFunction::resolution_scale() const {
  if (cells_.empty()) return std::nullopt;
  std::int64_t s = cells_.front().ball.gamma();
  for (const auto& c : cells_) s = std::min(s, c.ball.gamma());
  return s;
}

Rational SimpleFunction::max_abs() const {
  Rational m(0);
  for (const auto& c : cells_) m = std::max(m, Rational(mp::abs(c.value)));
  return m;
}

std::vector<Ball> SimpleFunction::balls() const {
  std::vector<Ball> out;
  out.reserve(cells_.size());
  for (const auto& c : cells_) out.push_back(c.ball);
  return out;
}

SimpleFunction SimpleFunction::normalized() const {
  std::vector<Cell> kept;
  for (const auto& c : cells_) {
    if (c.value != 0) kept.push_back(c);
  }
  std::sort(kept.begin(), kept.end(), [](const Cell& a, const Cell& b) { return a.ball < b.ball; });
  return make_unchecked(prime_, dim_, std::move(kept));
}

bool operator==(const SimpleFunction& a, const SimpleFunction& b) {
  if (a.prime_ != b.prime_ || a.dim_ != b.dim_) return false;
  auto na = a.normalized();
  auto nb = b.normalized();
  if (na.cells_.size() != nb.cells_.size()) return false;
  for (std::size_t i = 0; i < na.cells_.size(); ++i) {
    if (!(na.cells_[i].ball == nb.cells_[i].ball) || na.cells_[i].value != nb.cells_[i].value) {
      return false;
    }
  }
  return true;
}

namespace {

struct PartitionBuilder {
  const std::vector<const std::vector<Cell>*>& layers;
  std::vector<PartitionLeaf>* leaves;
  std::vector<Ball>* nodes;

  void visit(const Ball& ball, const std::vector<std::vector<int>>& candidates) {
    const std::size_t L = layers.size();
    std::vector<int> owner(L, -1);
    std::vector<std::vector<int>> next(L);
    bool split = false;
    for (std::size_t l = 0; l < L; ++l) {
      std::vector<int> inside;
      for (int idx : candidates[l]) {
        const Ball& cell = (*layers[l])[static_cast<std::size_t>(idx)].ball;
        BallRelation r = ball_relation(ball, cell);
        if (r == BallRelation::FirstInsideSecond || r == BallRelation::Equal) {
          owner[l] = idx;
          inside.clear();
          break;
        }
        if (r == BallRelation::SecondInsideFirst) inside.push_back(idx);
      }
      if (owner[l] >= 0) {
        next[l] = {owner[l]};
      } else if (!inside.empty()) {
        split = true;
        next[l] = std::move(inside);
      }
    }
    if (!split) {
      if (leaves) leaves->push_back(PartitionLeaf{ball, std::move(owner)});
      return;
    }
    if (nodes) nodes->push_back(ball);
    for (const Ball& child : children(ball)) visit(child, next);
  }
};

std::vector<std::vector<int>> all_candidates(const std::vector<const std::vector<Cell>*>& layers) {
  std::vector<std::vector<int>> c(layers.size());
  for (std::size_t l = 0; l < layers.size(); ++l) {
    for (std::size_t i = 0; i < layers[l]->size(); ++i) c[l].push_back(static_cast<int>(i));
  }
  return c;
}

}  // namespace

std::vector<PartitionLeaf> partition_ball(const Ball& root,
                                          const std::vector<const std::vector<Cell>*>& layers) {
  std::vector<PartitionLeaf> leaves;
  PartitionBuilder builder{layers, &leaves, nullptr};
  builder.visit(root, all_candidates(layers));
  return leaves;
}

std::vector<Ball> partition_split_nodes(const Ball& root,
                                        const std::vector<const std::vector<Cell>*>& layers) {
  std::vector<Ball> nodes;
  PartitionBuilder builder{layers, nullptr, &nodes};
  builder.visit(root, all_candidates(layers));
  return nodes;
}

std::vector<Cell> complete_partition(const SimpleFunction& f, const Ball& root) {
  require_same_space(f.prime(), f.dim(), root.prime(), root.dim());
  std::vector<Cell> out;
  for (auto& leaf : partition_ball(root, {&f.cells()})) {
    int k = leaf.owner[0];
    out.push_back(Cell{leaf.ball, k >= 0 ? f.cells()[static_cast<std::size_t>(k)].value : Rational(0)});
  }
  return out;
}

std::pair<SimpleFunction, SimpleFunction> refine_common(const SimpleFunction& f,
                                                        const SimpleFunction& g) {
  require_same_space(f.prime(), f.dim(), g.prime(), g.dim());
  std::vector<Ball> all = f.balls();
  for (const auto& b : g.balls()) all.push_back(b);
  if (all.empty()) return {f, g};
  Ball root = enclosing_ball(all);
  std::vector<Cell> fc;
  std::vector<Cell> gc;
  for (auto& leaf : partition_ball(root, {&f.cells(), &g.cells()})) {
    int i = leaf.owner[0];
    int j = leaf.owner[1];
    if (i < 0 && j < 0) continue;
    fc.push_back(Cell{leaf.ball, i >= 0 ? f.cells()[static_cast<std::size_t>(i)].value : Rational(0)});
    gc.push_back(Cell{leaf.ball, j >= 0 ? g.cells()[static_cast<std::size_t>(j)].value : Rational(0)});
  }
  return {make_unchecked(f.prime(), f.dim(), std::move(fc)),
          make_unchecked(g.prime(), g.dim(), std::move(gc))};
}

SimpleFunction pointwise(const SimpleFunction& f, const SimpleFunction& g, BinaryOp op) {
  auto [rf, rg] = refine_common(f, g);
  std::vector<Cell> out;
  for (std::size_t i = 0; i < rf.cells().size(); ++i) {
    const Rational& a = rf.cells()[i].value;
    const Rational& b = rg.cells()[i].value;
    Rational v;
    switch (op) {
      case BinaryOp::Add:
        v = a + b;
        break;
      case BinaryOp::Sub:
        v = a - b;
        break;
      case BinaryOp::Mul:
        v = a * b;
        break;
    }
    if (v != 0) out.push_back(Cell{rf.cells()[i].ball, std::move(v)});
  }
  return make_unchecked(f.prime(), f.dim(), std::move(out));
}

SimpleFunction add(const SimpleFunction& f, const SimpleFunction& g) {
  return pointwise(f, g, BinaryOp::Add);
}
SimpleFunction sub(const SimpleFunction& f, const SimpleFunction& g) {
  return pointwise(f, g, BinaryOp::Sub);
}
SimpleFunction mul(const SimpleFunction& f, const SimpleFunction& g) {
  return pointwise(f, g, BinaryOp::Mul);
}

SimpleFunction abs(const SimpleFunction& f) {
  std::vector<Cell> out = f.cells();
  for (auto& c : out) c.value = mp::abs(c.value);
  return make_unchecked(f.prime(), f.dim(), std::move(out));
}

SimpleFunction scale(const SimpleFunction& f, const Rational& lambda) {
  std::vector<Cell> out = f.cells();
  for (auto& c : out) c.value *= lambda;
  return make_unchecked(f.prime(), f.dim(), std::move(out));
}

Rational integrate(const SimpleFunction& f) {
  Rational total(0);
  for (const auto& c : f.cells()) total += c.value * haar_measure(c.ball);
  return total;
}

Rational integral_abs_over(const SimpleFunction& f, const Ball& ball) {
  Rational total(0);
  for (const auto& c : f.cells()) {
    switch (ball_relation(c.ball, ball)) {
      case BallRelation::FirstInsideSecond:
      case BallRelation::Equal:
        total += mp::abs(c.value) * haar_measure(c.ball);
        break;
      case BallRelation::SecondInsideFirst:
        total += mp::abs(c.value) * haar_measure(ball);
        break;
      case BallRelation::Disjoint:
        break;
    }
  }
  return total;
}

SimpleFunction restrict(const SimpleFunction& f, const Ball& ball) {
  require_same_space(f.prime(), f.dim(), ball.prime(), ball.dim());
  std::vector<Cell> out;
  for (const auto& c : f.cells()) {
    switch (ball_relation(c.ball, ball)) {
      case BallRelation::FirstInsideSecond:
      case BallRelation::Equal:
        out.push_back(c);
        break;
      case BallRelation::SecondInsideFirst:
        out.push_back(Cell{ball, c.value});
        break;
      case BallRelation::Disjoint:
        break;
    }
  }
  return make_unchecked(f.prime(), f.dim(), std::move(out));
}

Rational average_over(const SimpleFunction& f, const Ball& ball) {
  return integrate(restrict(f, ball)) / haar_measure(ball);
}

Magnitude lq_modular(const SimpleFunction& f, const Rational& q) {
  if (q <= 0) throw ParameterError("lq_modular requires q > 0");
  if (is_integer(q)) {
    auto k = q.convert_to<std::int64_t>();
    Rational total(0);
    for (const auto& c : f.cells()) total += pow_int(mp::abs(c.value), k) * haar_measure(c.ball);
    return Magnitude(total);
  }
  Magnitude total;
  for (const auto& c : f.cells()) {
    if (c.value == 0) continue;
    total = total + Magnitude(Rational(mp::abs(c.value))).pow(q, f.prime()) * Magnitude(haar_measure(c.ball));
  }
  return total;
}

}  // namespace padic
