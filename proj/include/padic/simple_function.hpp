#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "padic/core.hpp"
#include "padic/magnitude.hpp"

namespace padic {

struct Cell {
  Ball ball;
  Rational value;
};

/// A locally constant, compactly supported function on Q_p^n: a finite list
/// of pairwise disjoint balls carrying exact rational values, zero elsewhere.
class SimpleFunction {
 public:
  /// The zero function.
  SimpleFunction(std::int64_t prime, int dim);
  /// Throws InputError if two cells overlap.
  SimpleFunction(std::int64_t prime, int dim, std::vector<Cell> cells);

  static SimpleFunction indicator(const Ball& ball, const Rational& value = Rational(1));

  std::int64_t prime() const { return prime_; }
  int dim() const { return dim_; }
  const std::vector<Cell>& cells() const { return cells_; }

  bool is_zero() const;
  Rational evaluate(const PAdicPoint& x) const;

  /// Smallest ball containing every cell; nullopt for an empty cell list.
  std::optional<Ball> support_ball() const;
  /// Minimum radius exponent over the cells; f is constant on every ball of
  /// that radius it meets.
  std::optional<std::int64_t> resolution_scale() const;

  Rational max_abs() const;
  std::vector<Ball> balls() const;

  /// Same function with zero-valued cells dropped and cells sorted.
  SimpleFunction normalized() const;

  /// Structural equality after normalization.
  friend bool operator==(const SimpleFunction& a, const SimpleFunction& b);

 private:
  struct Unchecked {};
  SimpleFunction(std::int64_t prime, int dim, std::vector<Cell> cells, Unchecked);
  friend SimpleFunction make_unchecked(std::int64_t, int, std::vector<Cell>);

  std::int64_t prime_;
  int dim_;
  std::vector<Cell> cells_;
};

/// Builds a function from cells already known to be disjoint (partition
/// leaves); skips the overlap check.
SimpleFunction make_unchecked(std::int64_t prime, int dim, std::vector<Cell> cells);

/// One leaf of an adaptive partition: a ball that is either inside exactly
/// one cell of each layer or disjoint from all of that layer's cells.
struct PartitionLeaf {
  Ball ball;
  /// Per layer: index of the containing cell, or -1 when outside every cell.
  std::vector<int> owner;
};

/// Adaptive partition of root refined against several disjoint cell layers:
/// a ball is split into its children only while some layer has a cell
/// strictly inside it.
std::vector<PartitionLeaf> partition_ball(const Ball& root,
                                          const std::vector<const std::vector<Cell>*>& layers);

/// The split (internal) nodes of the same adaptive tree, root first.
std::vector<Ball> partition_split_nodes(const Ball& root,
                                        const std::vector<const std::vector<Cell>*>& layers);

/// f on a complete partition of root, zero cells included.
std::vector<Cell> complete_partition(const SimpleFunction& f, const Ball& root);

/// Both functions on one shared partition of the union of their supports.
std::pair<SimpleFunction, SimpleFunction> refine_common(const SimpleFunction& f,
                                                        const SimpleFunction& g);

enum class BinaryOp { Add, Sub, Mul };

SimpleFunction pointwise(const SimpleFunction& f, const SimpleFunction& g, BinaryOp op);
SimpleFunction add(const SimpleFunction& f, const SimpleFunction& g);
SimpleFunction sub(const SimpleFunction& f, const SimpleFunction& g);
SimpleFunction mul(const SimpleFunction& f, const SimpleFunction& g);
SimpleFunction abs(const SimpleFunction& f);
SimpleFunction scale(const SimpleFunction& f, const Rational& lambda);

Rational integrate(const SimpleFunction& f);
/// Integral of |f| over the ball, without materializing the restriction.
Rational integral_abs_over(const SimpleFunction& f, const Ball& ball);
SimpleFunction restrict(const SimpleFunction& f, const Ball& ball);
/// f_B = |B|^{-1} * integral of f over B.
Rational average_over(const SimpleFunction& f, const Ball& ball);

/// Integral of |f|^q; exact for integer q, otherwise a Real at the working
/// precision.
Magnitude lq_modular(const SimpleFunction& f, const Rational& q);

}  // namespace padic
