#include "repmatch/young.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace repmatch {

YoungDiagram::YoungDiagram(std::vector<int> rows) : rows_(std::move(rows)) {
  while (!rows_.empty() && rows_.back() == 0) rows_.pop_back();
  for (size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i] < 0) throw std::invalid_argument("YoungDiagram: negative row length");
    if (i > 0 && rows_[i] > rows_[i - 1])
      throw std::invalid_argument("YoungDiagram: rows must be non-increasing");
  }
}

int YoungDiagram::box_count() const {
  return std::accumulate(rows_.begin(), rows_.end(), 0);
}

std::vector<int> YoungDiagram::column_heights() const {
  if (rows_.empty()) return {};
  std::vector<int> cols(static_cast<size_t>(rows_[0]));
  for (int c = 0; c < rows_[0]; ++c) {
    int h = 0;
    for (int r : rows_)
      if (r > c) ++h;
    cols[static_cast<size_t>(c)] = h;
  }
  return cols;
}

bool YoungDiagram::operator<(const YoungDiagram& o) const {
  const int m = std::max(row_count(), o.row_count());
  for (int i = 0; i < m; ++i) {
    if (row(i) != o.row(i)) return row(i) > o.row(i);  // descending lex
  }
  return false;
}

std::string YoungDiagram::to_string() const {
  std::string s = "[";
  for (size_t i = 0; i < rows_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(rows_[i]);
  }
  return s + "]";
}

std::vector<YoungDiagram> enumerate_diagrams(int n, int d) {
  if (n < 0 || d < 1) throw std::invalid_argument("enumerate_diagrams: need n >= 0, d >= 1");
  std::vector<YoungDiagram> out;
  std::vector<int> parts;
  // Choosing the largest remaining part first yields descending lex order.
  auto rec = [&](auto&& self, int rem, int maxpart) -> void {
    if (rem == 0) {
      out.emplace_back(parts);
      return;
    }
    if (static_cast<int>(parts.size()) == d) return;
    int lo = (rem + (d - static_cast<int>(parts.size())) - 1) /
             (d - static_cast<int>(parts.size()));  // must still fit
    for (int p = std::min(rem, maxpart); p >= lo; --p) {
      parts.push_back(p);
      self(self, rem - p, p);
      parts.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

BigInt su_dimension(const YoungDiagram& lambda, int d) {
  if (d < 1) throw std::invalid_argument("su_dimension: need d >= 1");
  if (lambda.row_count() > d)
    throw std::invalid_argument("su_dimension: diagram has more than d rows");
  BigInt num = 1;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) num *= lambda.row(i) - lambda.row(j) - i + j;
  BigInt den = 1;
  for (int k = 1; k < d; ++k) den *= factorial(k);
  return num / den;  // exact: Weyl dimension is an integer
}

BigInt sym_dimension(const YoungDiagram& lambda, int n, int d) {
  if (lambda.box_count() != n)
    throw std::invalid_argument("sym_dimension: box count does not match n");
  if (lambda.row_count() > d)
    throw std::invalid_argument("sym_dimension: diagram has more than d rows");
  const int r = lambda.row_count();
  if (r == 0) return 1;
  // First-column hook lengths l_i = lambda_i + r - i (1-based i).
  std::vector<int> l(static_cast<size_t>(r));
  for (int i = 0; i < r; ++i) l[static_cast<size_t>(i)] = lambda.row(i) + (r - 1 - i);
  BigInt num = factorial(n);
  for (int j = 0; j < r; ++j)
    for (int k = j + 1; k < r; ++k) num *= l[static_cast<size_t>(j)] - l[static_cast<size_t>(k)];
  BigInt den = 1;
  for (int i = 0; i < r; ++i) den *= factorial(l[static_cast<size_t>(i)]);
  return num / den;  // exact: equals the standard-tableau count
}

YoungDiagram associated_diagram(const YoungDiagram& lambda, int d, int pad_to) {
  if (lambda.row_count() > d)
    throw std::invalid_argument("associated_diagram: diagram has more than d rows");
  std::vector<int> cols = lambda.column_heights();
  std::vector<int> newcols;
  newcols.reserve(cols.size());
  for (int h : cols) {
    if (d - h > 0) newcols.push_back(d - h);
  }
  std::sort(newcols.begin(), newcols.end(), std::greater<int>());

  int boxes = std::accumulate(newcols.begin(), newcols.end(), 0);
  if (pad_to >= 0) {
    const int deficit = pad_to - boxes;
    if (deficit < 0 || deficit % d != 0)
      throw std::invalid_argument(
          "associated_diagram: pad_to deficit must be a nonnegative multiple of d");
    newcols.insert(newcols.begin(), static_cast<size_t>(deficit / d), d);
  }
  if (newcols.empty()) return YoungDiagram{};

  std::vector<int> rows(static_cast<size_t>(newcols.front()));
  for (size_t i = 0; i < rows.size(); ++i) {
    int len = 0;
    for (int h : newcols)
      if (h >= static_cast<int>(i) + 1) ++len;
    rows[i] = len;
  }
  return YoungDiagram{rows};
}

namespace {

BigInt mn_character_beta(std::vector<int> beta, const std::vector<int>& mu, size_t k) {
  // beta: strictly decreasing beta-set; mu[k..]: remaining cycle lengths.
  if (k == mu.size()) return 1;
  const int t = mu[k];
  BigInt total = 0;
  for (size_t i = 0; i < beta.size(); ++i) {
    const int b = beta[i];
    if (b < t) continue;
    const int nb = b - t;
    bool occupied = false;
    int between = 0;
    for (int c : beta) {
      if (c == nb) {
        occupied = true;
        break;
      }
      if (c > nb && c < b) ++between;
    }
    if (occupied) continue;
    std::vector<int> next = beta;
    next[i] = nb;
    std::sort(next.begin(), next.end(), std::greater<int>());
    const BigInt sub = mn_character_beta(std::move(next), mu, k + 1);
    if (between % 2 == 0)
      total += sub;
    else
      total -= sub;
  }
  return total;
}

}  // namespace

BigInt mn_character(const YoungDiagram& lambda, const CycleType& mu) {
  if (lambda.box_count() != mu.box_count())
    throw std::invalid_argument("mn_character: lambda and mu must partition the same n");
  const int r = lambda.row_count();
  std::vector<int> beta(static_cast<size_t>(r));
  for (int i = 0; i < r; ++i) beta[static_cast<size_t>(i)] = lambda.row(i) + (r - 1 - i);
  std::vector<int> cycles = mu.rows();
  return mn_character_beta(std::move(beta), cycles, 0);
}

BigInt centralizer_order(const CycleType& mu) {
  std::map<int, int> mult;
  for (int c : mu.rows()) ++mult[c];
  BigInt z = 1;
  for (auto [len, count] : mult) z *= pow_int(len, count) * factorial(count);
  return z;
}

}  // namespace repmatch
