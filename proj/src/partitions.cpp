#include "tnncomb/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace tnn {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] < 1) throw std::invalid_argument("partition parts must be positive");
    if (k > 0 && parts_[k] > parts_[k - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

Partition Partition::parse(const std::string& text) {
  std::vector<int> v;
  std::string tok;
  std::istringstream is(text);
  while (std::getline(is, tok, ',')) {
    if (tok.find_first_not_of(" \t") == std::string::npos) continue;
    v.push_back(std::stoi(tok));
  }
  return Partition(std::move(v));
}

int Partition::sum() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::part(int i) const {
  if (i < 1) throw std::invalid_argument("partition parts are 1-based");
  return i <= length() ? parts_[static_cast<size_t>(i - 1)] : 0;
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return Partition();
  std::vector<int> c(static_cast<size_t>(parts_[0]), 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++c[static_cast<size_t>(j)];
  return Partition(std::move(c));
}

bool Partition::contains(const Partition& mu) const {
  for (int i = 1; i <= mu.length(); ++i)
    if (mu.part(i) > part(i)) return false;
  return true;
}

std::string Partition::str() const {
  if (parts_.empty()) return "-";
  std::string s;
  for (size_t k = 0; k < parts_.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(parts_[k]);
  }
  return s;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int maxpart) {
    if (rest == 0) {
      out.push_back(Partition(cur));
      return;
    }
    for (int p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<Partition> partitions_in_box(int r, int c) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int row, int maxpart) {
    out.push_back(Partition(cur));
    if (row == r) return;
    for (int p = maxpart; p >= 1; --p) {
      cur.push_back(p);
      rec(row + 1, p);
      cur.pop_back();
    }
  };
  rec(0, c);
  return out;
}

SkewShape::SkewShape(Partition outer_, Partition inner_)
    : outer(std::move(outer_)), inner(std::move(inner_)) {
  if (!outer.contains(inner)) throw std::invalid_argument("inner shape must fit inside outer");
}

SkewShape SkewShape::parse(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return SkewShape(Partition::parse(text), Partition());
  return SkewShape(Partition::parse(text.substr(0, slash)),
                   Partition::parse(text.substr(slash + 1)));
}

std::string SkewShape::str() const {
  return straight() ? outer.str() : outer.str() + "/" + inner.str();
}

Tableau::Tableau(SkewShape shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  if (static_cast<int>(rows_.size()) != shape_.outer.length())
    throw std::invalid_argument("tableau rows must match the shape");
  for (int r = 1; r <= shape_.outer.length(); ++r) {
    int want = shape_.outer.part(r) - shape_.inner.part(r);
    if (static_cast<int>(rows_[static_cast<size_t>(r - 1)].size()) != want)
      throw std::invalid_argument("tableau row length must match the shape");
    for (int v : rows_[static_cast<size_t>(r - 1)])
      if (v < 1) throw std::invalid_argument("tableau entries must be positive");
  }
}

bool Tableau::has_cell(int r, int c) const {
  return r >= 1 && r <= shape_.outer.length() && c > shape_.inner.part(r) &&
         c <= shape_.outer.part(r);
}

int Tableau::entry(int r, int c) const {
  if (!has_cell(r, c)) return 0;
  return rows_[static_cast<size_t>(r - 1)][static_cast<size_t>(c - shape_.inner.part(r) - 1)];
}

bool Tableau::is_semistandard() const {
  for (int r = 1; r <= shape_.outer.length(); ++r)
    for (int c = shape_.inner.part(r) + 1; c <= shape_.outer.part(r); ++c) {
      int v = entry(r, c);
      if (has_cell(r, c + 1) && entry(r, c + 1) < v) return false;
      if (has_cell(r + 1, c) && entry(r + 1, c) <= v) return false;
    }
  return true;
}

bool Tableau::is_standard() const {
  if (!is_semistandard()) return false;
  int n = cell_count();
  std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
  for (const auto& row : rows_)
    for (int v : row) {
      if (v > n || seen[static_cast<size_t>(v)]) return false;
      seen[static_cast<size_t>(v)] = 1;
    }
  return true;
}

std::string Tableau::str() const {
  std::ostringstream os;
  for (int r = 1; r <= shape_.outer.length(); ++r) {
    for (int c = 1; c <= shape_.outer.part(r); ++c) {
      if (c > 1) os << " ";
      if (c <= shape_.inner.part(r))
        os << ".";
      else
        os << entry(r, c);
    }
    os << "\n";
  }
  return os.str();
}

Tableau Tableau::parse(const std::string& text) {
  std::vector<int> outer, inner;
  std::vector<std::vector<int>> rows;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    std::istringstream ls(line);
    std::string tok;
    int dots = 0;
    std::vector<int> entries;
    bool entries_started = false;
    bool any = false;
    while (ls >> tok) {
      any = true;
      if (tok == ".") {
        if (entries_started) throw std::invalid_argument("inner cells must precede entries");
        ++dots;
      } else {
        entries_started = true;
        entries.push_back(std::stoi(tok));
      }
    }
    if (!any) continue;
    inner.push_back(dots);
    outer.push_back(dots + static_cast<int>(entries.size()));
    rows.push_back(std::move(entries));
  }
  if (rows.empty()) throw std::invalid_argument("empty tableau text");
  return Tableau(SkewShape(Partition(outer), Partition(inner)), std::move(rows));
}

bool operator==(const Tableau& a, const Tableau& b) {
  return a.shape_.outer == b.shape_.outer && a.shape_.inner == b.shape_.inner && a.rows_ == b.rows_;
}

bool operator<(const Tableau& a, const Tableau& b) {
  if (a.shape_.outer != b.shape_.outer) return a.shape_.outer < b.shape_.outer;
  if (a.shape_.inner != b.shape_.inner) return a.shape_.inner < b.shape_.inner;
  return a.rows_ < b.rows_;
}

std::vector<int> content(const Tableau& t) {
  std::vector<int> c;
  for (const auto& row : t.row_entries())
    for (int v : row) {
      if (static_cast<size_t>(v) > c.size()) c.resize(static_cast<size_t>(v), 0);
      ++c[static_cast<size_t>(v - 1)];
    }
  return c;
}

Tableau column_suffix(const Tableau& t, int j) {
  if (j < 1 || j > std::max(1, t.shape().outer.part(1)))
    throw std::invalid_argument("column index out of range");
  std::vector<int> outer, inner;
  std::vector<std::vector<int>> rows;
  for (int r = 1; r <= t.shape().outer.length(); ++r) {
    outer.push_back(std::max(0, t.shape().outer.part(r) - (j - 1)));
    inner.push_back(std::max(0, t.shape().inner.part(r) - (j - 1)));
    std::vector<int> row;
    for (int c = std::max(j, t.shape().inner.part(r) + 1); c <= t.shape().outer.part(r); ++c)
      row.push_back(t.entry(r, c));
    rows.push_back(std::move(row));
  }
  Partition out(outer);
  rows.resize(static_cast<size_t>(out.length()));
  return Tableau(SkewShape(out, Partition(inner)), std::move(rows));
}

std::vector<int> reading_word(const Tableau& t) {
  std::vector<int> w;
  for (const auto& row : t.row_entries()) w.insert(w.end(), row.begin(), row.end());
  return w;
}

std::vector<Tableau> enumerate_ssyt(const SkewShape& shape, int max_entry, long cap) {
  if (max_entry < 1) throw std::invalid_argument("max entry must be >= 1");
  std::vector<Tableau> out;
  int height = shape.outer.length();
  std::vector<std::vector<int>> rows(static_cast<size_t>(height));
  for (int r = 1; r <= height; ++r)
    rows[static_cast<size_t>(r - 1)].assign(
        static_cast<size_t>(shape.outer.part(r) - shape.inner.part(r)), 0);

  std::vector<std::pair<int, int>> cells;  // reading order
  for (int r = 1; r <= height; ++r)
    for (int c = shape.inner.part(r) + 1; c <= shape.outer.part(r); ++c) cells.push_back({r, c});

  auto get = [&](int r, int c) -> int {
    if (r < 1 || r > height) return 0;
    if (c <= shape.inner.part(r) || c > shape.outer.part(r)) return 0;
    return rows[static_cast<size_t>(r - 1)][static_cast<size_t>(c - shape.inner.part(r) - 1)];
  };

  std::function<void(size_t)> rec = [&](size_t k) {
    if (k == cells.size()) {
      if (static_cast<long>(out.size()) >= cap) throw guard_error("semistandard enumeration guard exceeded");
      out.push_back(Tableau(shape, rows));
      return;
    }
    auto [r, c] = cells[k];
    int lo = 1;
    int left = get(r, c - 1);
    if (left > 0) lo = std::max(lo, left);
    int up = get(r - 1, c);
    if (up > 0) lo = std::max(lo, up + 1);
    for (int v = lo; v <= max_entry; ++v) {
      rows[static_cast<size_t>(r - 1)][static_cast<size_t>(c - shape.inner.part(r) - 1)] = v;
      rec(k + 1);
    }
    rows[static_cast<size_t>(r - 1)][static_cast<size_t>(c - shape.inner.part(r) - 1)] = 0;
  };
  rec(0);
  return out;
}

std::vector<Tableau> enumerate_syt(const SkewShape& shape, long cap) {
  int n = shape.cells();
  std::vector<Tableau> out;
  if (n == 0) {
    return out;
  }
  int height = shape.outer.length();
  std::vector<std::vector<int>> rows(static_cast<size_t>(height));
  for (int r = 1; r <= height; ++r)
    rows[static_cast<size_t>(r - 1)].assign(
        static_cast<size_t>(shape.outer.part(r) - shape.inner.part(r)), 0);
  auto get = [&](int r, int c) -> int {
    if (r < 1 || r > height) return -1;
    if (c <= shape.inner.part(r) || c > shape.outer.part(r)) return -1;
    return rows[static_cast<size_t>(r - 1)][static_cast<size_t>(c - shape.inner.part(r) - 1)];
  };
  std::function<void(int)> rec = [&](int v) {
    if (v > n) {
      if (static_cast<long>(out.size()) >= cap) throw guard_error("standard enumeration guard exceeded");
      out.push_back(Tableau(shape, rows));
      return;
    }
    for (int r = 1; r <= height; ++r)
      for (int c = shape.inner.part(r) + 1; c <= shape.outer.part(r); ++c) {
        if (get(r, c) != 0) continue;
        int left = get(r, c - 1), up = get(r - 1, c);
        if (left == 0 || up == 0) continue;  // fill left-to-right, top-to-bottom
        rows[static_cast<size_t>(r - 1)][static_cast<size_t>(c - shape.inner.part(r) - 1)] = v;
        rec(v + 1);
        rows[static_cast<size_t>(r - 1)][static_cast<size_t>(c - shape.inner.part(r) - 1)] = 0;
      }
  };
  rec(1);
  std::sort(out.begin(), out.end(), [](const Tableau& a, const Tableau& b) {
    return reading_word(a) < reading_word(b);
  });
  return out;
}

std::vector<std::pair<int, int>> inner_corners(const Tableau& t) {
  std::vector<std::pair<int, int>> out;
  const Partition& mu = t.shape().inner;
  for (int r = 1; r <= mu.length(); ++r)
    if (mu.part(r) > 0 && mu.part(r) > mu.part(r + 1)) out.push_back({r, mu.part(r)});
  return out;
}

Tableau jdt_slide(const Tableau& t, std::pair<int, int> corner) {
  auto corners = inner_corners(t);
  if (std::find(corners.begin(), corners.end(), corner) == corners.end())
    throw std::invalid_argument("not a removable inner corner");

  const Partition& nu = t.shape().outer;
  const Partition& mu = t.shape().inner;
  int height = nu.length();
  int width = nu.part(1);
  // grid codes: -1 outside, 0 inner, >0 entry
  std::vector<std::vector<int>> grid(static_cast<size_t>(height),
                                     std::vector<int>(static_cast<size_t>(width), -1));
  for (int r = 1; r <= height; ++r)
    for (int c = 1; c <= nu.part(r); ++c)
      grid[static_cast<size_t>(r - 1)][static_cast<size_t>(c - 1)] =
          (c <= mu.part(r)) ? 0 : t.entry(r, c);

  auto val = [&](int r, int c) -> int {
    if (r < 1 || r > height || c < 1 || c > width) return -1;
    return grid[static_cast<size_t>(r - 1)][static_cast<size_t>(c - 1)];
  };

  int hr = corner.first, hc = corner.second;
  while (true) {
    int below = val(hr + 1, hc);
    int right = val(hr, hc + 1);
    if (below <= 0 && right <= 0) {
      grid[static_cast<size_t>(hr - 1)][static_cast<size_t>(hc - 1)] = -1;
      break;
    }
    bool move_below = (right <= 0) || (below > 0 && below < right);
    int fr = move_below ? hr + 1 : hr;
    int fc = move_below ? hc : hc + 1;
    grid[static_cast<size_t>(hr - 1)][static_cast<size_t>(hc - 1)] =
        grid[static_cast<size_t>(fr - 1)][static_cast<size_t>(fc - 1)];
    hr = fr;
    hc = fc;
  }

  std::vector<int> outer, inner;
  std::vector<std::vector<int>> rows;
  for (int r = 1; r <= height; ++r) {
    int in = 0;
    while (in < width && val(r, in + 1) == 0) ++in;
    int out_len = in;
    std::vector<int> row;
    for (int c = in + 1; c <= width && val(r, c) > 0; ++c) {
      row.push_back(val(r, c));
      ++out_len;
    }
    inner.push_back(in);
    outer.push_back(out_len);
    rows.push_back(std::move(row));
  }
  Partition out_part(outer);
  rows.resize(static_cast<size_t>(out_part.length()));
  return Tableau(SkewShape(out_part, Partition(inner)), std::move(rows));
}

Tableau jeu_de_taquin(const Tableau& t) {
  if (!t.is_standard()) throw std::invalid_argument("jeu de taquin needs a standard tableau");
  Tableau cur = t;
  while (!cur.shape().inner.empty()) {
    auto corners = inner_corners(cur);
    cur = jdt_slide(cur, corners.back());  // bottom-most, then right-most
  }
  return cur;
}

}  // namespace tnn
