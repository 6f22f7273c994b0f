#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qpi/numeric.hpp"

namespace qpi {

/// Partition of {1..n}; block[i-1] is the block id of point i, ids
/// normalized by first occurrence (0,1,2,...), so structural equality is
/// semantic equality.
struct SetPartition {
  int n = 0;
  std::vector<int> block;

  SetPartition() = default;
  SetPartition(int n_, std::vector<int> block_);

  static SetPartition discrete(int n);  // n singletons
  static SetPartition full(int n);      // one block

  int num_blocks() const;
  bool is_noncrossing() const;
  std::vector<std::vector<int>> blocks() const;

  /// "1,3|2|4"
  std::string to_string() const;

  bool operator==(const SetPartition& o) const {
    return n == o.n && block == o.block;
  }
  bool operator<(const SetPartition& o) const { return block < o.block; }
};

/// least common coarsening (union-find)
SetPartition join(const SetPartition& p, const SetPartition& q);

/// p refines q
bool refines(const SetPartition& p, const SetPartition& q);

/// letters: +1 for the symbol '1', -1 for '*'
using ColoredWord = std::vector<int>;

inline ColoredWord ones_word(int n) { return ColoredWord(static_cast<size_t>(n), 1); }

enum class CategoryTag { P, P2, Px, NC, NC2, NCx };

struct Category {
  CategoryTag tag;
  long x = 1;  // for Px / NCx

  static Category P() { return {CategoryTag::P}; }
  static Category P2() { return {CategoryTag::P2}; }
  static Category Px(long x) { return {CategoryTag::Px, x}; }
  static Category NC() { return {CategoryTag::NC}; }
  static Category NC2() { return {CategoryTag::NC2}; }
  static Category NCx(long x) { return {CategoryTag::NCx, x}; }

  bool colored() const {
    return tag == CategoryTag::Px || tag == CategoryTag::NCx;
  }
  bool crossing_allowed() const {
    return tag == CategoryTag::P || tag == CategoryTag::P2 ||
           tag == CategoryTag::Px;
  }
  std::string name() const;
};

Category parse_category(const std::string& s);

/// Partitions of {1..n} admissible for the category; word is required for
/// the colored (x-balanced) families and must have length n.
std::vector<SetPartition> enumerate_partitions(
    int n, const Category& cat,
    const std::optional<ColoredWord>& word = std::nullopt);

enum class Lattice { P, NC };

/// Moebius function of the interval [p,q] in P(n) or NC(n); requires p <= q.
Int mobius(const SetPartition& p, const SetPartition& q, Lattice lattice);

/// Partitions r with p <= r <= q inside the lattice.
std::vector<SetPartition> interval(const SetPartition& p,
                                   const SetPartition& q, Lattice lattice);

struct order_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace qpi
