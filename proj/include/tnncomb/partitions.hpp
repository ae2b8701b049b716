#pragma once

#include <string>
#include <vector>

#include "tnncomb/rational.hpp"

namespace tnn {

// Weakly decreasing positive parts. Trailing zeros are stripped on
// construction; the empty partition is allowed.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  static Partition parse(const std::string& text);  // "3,1"; "" is empty

  int length() const { return static_cast<int>(parts_.size()); }
  int sum() const;
  bool empty() const { return parts_.empty(); }
  int part(int i) const;  // 1-based, 0 beyond the last part
  const std::vector<int>& parts() const { return parts_; }
  Partition conjugate() const;
  bool contains(const Partition& mu) const;
  std::string str() const;  // "3,1"; "-" for empty

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
  friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

 private:
  std::vector<int> parts_;
};

// display/map order: larger degree first, then lexicographically larger first
struct PartitionDisplayLess {
  bool operator()(const Partition& a, const Partition& b) const {
    if (a.sum() != b.sum()) return a.sum() > b.sum();
    return b < a;
  }
};

std::vector<Partition> partitions_of(int n);
// all partitions contained in an r x c box
std::vector<Partition> partitions_in_box(int r, int c);

struct SkewShape {
  Partition outer, inner;

  SkewShape() = default;
  SkewShape(Partition outer_, Partition inner_);
  static SkewShape parse(const std::string& text);  // "3,2,1/2,1" or "3,2,1"

  int cells() const { return outer.sum() - inner.sum(); }
  bool straight() const { return inner.empty(); }
  std::string str() const;
};

// Filling of a skew shape, rows stored left to right. Cell (r,c) is 1-based,
// row 1 on top.
class Tableau {
 public:
  Tableau() = default;
  Tableau(SkewShape shape, std::vector<std::vector<int>> rows);
  static Tableau parse(const std::string& text);  // one row per line, "." marks inner cells

  const SkewShape& shape() const { return shape_; }
  int entry(int r, int c) const;  // 0 when (r,c) is not a cell
  bool has_cell(int r, int c) const;
  int cell_count() const { return shape_.cells(); }
  const std::vector<std::vector<int>>& row_entries() const { return rows_; }

  bool is_semistandard() const;
  bool is_standard() const;
  std::string str() const;

  friend bool operator==(const Tableau& a, const Tableau& b);
  friend bool operator<(const Tableau& a, const Tableau& b);

 private:
  SkewShape shape_;
  std::vector<std::vector<int>> rows_;  // rows_[r] holds columns inner[r]+1..outer[r]
};

// multiplicity vector of entries, trailing zeros stripped
std::vector<int> content(const Tableau& t);

// the tableau made of columns j..end, columns renumbered from 1
Tableau column_suffix(const Tableau& t, int j);

// entries row by row, top to bottom, left to right
std::vector<int> reading_word(const Tableau& t);

// all semistandard fillings with entries <= max_entry, ordered
// lexicographically by reading word
std::vector<Tableau> enumerate_ssyt(const SkewShape& shape, int max_entry, long cap = 1'000'000);

// all standard fillings, same order
std::vector<Tableau> enumerate_syt(const SkewShape& shape, long cap = 1'000'000);

// removable inner corners (bottom-most first), as (row, col)
std::vector<std::pair<int, int>> inner_corners(const Tableau& t);

// one slide starting from the given inner corner
Tableau jdt_slide(const Tableau& t, std::pair<int, int> corner);

// full jeu de taquin; default corner policy is bottom-most then right-most.
// Requires a standard tableau.
Tableau jeu_de_taquin(const Tableau& t);

}  // namespace tnn
