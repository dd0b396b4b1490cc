#include "repmatch/irrep_table.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace repmatch {

std::string role_name(Role role) {
  return role == Role::kUnitaryArray ? "unitary-array" : "permutation";
}

int IrrepTable::index_of(const YoungDiagram& lambda) const {
  for (size_t i = 0; i < entries.size(); ++i)
    if (entries[i].lambda == lambda) return static_cast<int>(i);
  return -1;
}

std::string IrrepTable::to_csv() const {
  std::string out = "lambda,d_lambda,m_lambda\n";
  for (const auto& e : entries) {
    out += "\"" + e.lambda.to_string() + "\"," + e.su_dim.str() + "," + e.sym_dim.str() + "\n";
  }
  out += "# role=" + role_name(role) + " d_R=" + d_R.str() + " d_tot=" + d_tot.str() +
         " d_tot_sq=" + d_tot_sq.str() + "\n";
  return out;
}

namespace {

void fill_aggregates(IrrepTable& t) {
  t.d_R = 0;
  t.d_tot = 0;
  t.d_tot_sq = 0;
  for (const auto& e : t.entries) {
    const BigInt& r = e.rep_dim(t.role);
    t.d_R = std::max(t.d_R, r);
    t.d_tot += r;
    t.d_tot_sq += r * r;
  }
}

}  // namespace

IrrepTable build_table(int n, int d, Role role) {
  if (n < 0 || d < 1) throw std::invalid_argument("build_table: need n >= 0, d >= 1");
  IrrepTable t;
  t.n = n;
  t.d = d;
  t.role = role;
  for (const auto& lambda : enumerate_diagrams(n, d)) {
    t.entries.push_back({lambda, su_dimension(lambda, d), sym_dimension(lambda, n, d)});
  }
  fill_aggregates(t);
  return t;
}

void scan_tables_up_to(int n_max, int d, Role role,
                       const std::function<void(const IrrepTable&)>& visit) {
  if (n_max < 0 || d < 1)
    throw std::invalid_argument("scan_tables_up_to: need n_max >= 0, d >= 1");

  // Multiplicities by the branching rule, carried from level n-1 to level n.
  std::map<std::vector<int>, BigInt> prev;
  prev[{}] = 1;

  for (int n = 0; n <= n_max; ++n) {
    IrrepTable t;
    t.n = n;
    t.d = d;
    t.role = role;
    std::map<std::vector<int>, BigInt> cur;
    if (n == 0) {
      cur[{}] = 1;
    } else {
      for (const auto& [rows, m] : prev) {
        // Add one box at every addable corner with at most d rows.
        for (int i = 0; i <= static_cast<int>(rows.size()); ++i) {
          if (i >= d) break;
          const int len = i < static_cast<int>(rows.size()) ? rows[static_cast<size_t>(i)] : 0;
          const int above = i == 0 ? INT32_MAX : rows[static_cast<size_t>(i) - 1];
          if (len + 1 > above) continue;
          std::vector<int> next = rows;
          if (i < static_cast<int>(next.size()))
            ++next[static_cast<size_t>(i)];
          else
            next.push_back(1);
          cur[next] += m;
        }
      }
    }
    for (const auto& [rows, m] : cur) {
      YoungDiagram lambda{rows};
      t.entries.push_back({lambda, su_dimension(lambda, d), m});
    }
    std::sort(t.entries.begin(), t.entries.end(),
              [](const IrrepEntry& a, const IrrepEntry& b) { return a.lambda < b.lambda; });
    fill_aggregates(t);
    visit(t);
    prev = std::move(cur);
  }
}

std::vector<IrrepTable> build_tables_up_to(int n_max, int d, Role role) {
  std::vector<IrrepTable> out;
  out.reserve(static_cast<size_t>(n_max) + 1);
  scan_tables_up_to(n_max, d, role, [&out](const IrrepTable& t) { out.push_back(t); });
  return out;
}

}  // namespace repmatch
