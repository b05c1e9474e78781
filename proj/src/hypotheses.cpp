#include "alab/hypotheses.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include "alab/errors.hpp"
#include "alab/simplex.hpp"

namespace alab {

namespace {

int label_sign(int idx) { return idx == 1 ? 1 : -1; }

}  // namespace

FunctionClass make_function_class(int num_labels,
                                  const std::vector<std::vector<int>>& columns,
                                  std::vector<std::string> ids) {
  if (num_labels < 2) throw ValidationError("function class needs at least 2 labels");
  if (columns.empty()) throw ValidationError("function class needs at least 1 column");
  const int m = static_cast<int>(columns.front().size());
  if (m < 2) throw ValidationError("function class needs at least 2 functions");
  if (!ids.empty() && ids.size() != columns.size())
    throw std::invalid_argument("make_function_class: one id per column expected");

  FunctionClass fc;
  fc.num_functions = m;
  fc.num_labels = num_labels;

  std::map<std::vector<int>, int> seen;
  for (std::size_t c = 0; c < columns.size(); ++c) {
    const auto& col = columns[c];
    if (static_cast<int>(col.size()) != m)
      throw ValidationError("function class columns have inconsistent lengths");
    for (int v : col)
      if (v < 0 || v >= num_labels)
        throw ValidationError("label index " + std::to_string(v) + " out of range");
    if (seen.emplace(col, 1).second) {
      fc.labels.insert(fc.labels.end(), col.begin(), col.end());
      fc.column_ids.push_back(ids.empty() ? "c" + std::to_string(c) : ids[c]);
    }
  }

  // Functions must be pairwise distinct on the merged columns.
  const int a = fc.num_columns();
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      bool same = true;
      for (int x = 0; x < a && same; ++x) same = fc.label(i, x) == fc.label(j, x);
      if (same)
        throw ValidationError("functions " + std::to_string(i) + " and " +
                              std::to_string(j) + " are identical");
    }
  return fc;
}

FunctionClass make_disjoint(int m) {
  if (m < 2) throw std::invalid_argument("make_disjoint: m must be >= 2");
  std::vector<std::vector<int>> cols(m, std::vector<int>(m, 0));
  std::vector<std::string> ids(m);
  for (int i = 0; i < m; ++i) {
    cols[i][i] = 1;
    ids[i] = "e" + std::to_string(i + 1);
  }
  return make_function_class(2, cols, std::move(ids));
}

FunctionClass make_threshold(int m) {
  if (m < 2) throw std::invalid_argument("make_threshold: m must be >= 2");
  std::vector<std::vector<int>> cols(m + 1, std::vector<int>(m, 1));
  std::vector<std::string> ids(m + 1);
  for (int i = 0; i <= m; ++i) {
    for (int f = 0; f < i; ++f) cols[i][f] = 0;  // first i functions get -1
    ids[i] = "u" + std::to_string(i);
  }
  return make_function_class(2, cols, std::move(ids));
}

FunctionClass make_sample_rich(int m, int num_labels) {
  if (m < 2) throw std::invalid_argument("make_sample_rich: m must be >= 2");
  if (num_labels < 2) throw std::invalid_argument("make_sample_rich: need >= 2 labels");
  double count = 1.0;
  for (int i = 0; i < m; ++i) count *= num_labels;
  if (count > static_cast<double>(1 << 20))
    throw SizeError("make_sample_rich: num_labels^m exceeds the 2^20 column guard");

  const long total = static_cast<long>(count);
  std::vector<std::vector<int>> cols;
  std::vector<std::string> ids;
  cols.reserve(total);
  std::vector<int> digits(m, 0);
  for (long v = 0; v < total; ++v) {
    const bool constant =
        std::all_of(digits.begin(), digits.end(), [&](int d) { return d == digits[0]; });
    if (!constant) {
      cols.push_back(digits);
      std::string id = "v";
      for (int d : digits) id += std::to_string(d);
      ids.push_back(std::move(id));
    }
    for (int i = m - 1; i >= 0; --i) {  // odometer, last function fastest
      if (++digits[i] < num_labels) break;
      digits[i] = 0;
    }
  }
  return make_function_class(num_labels, cols, std::move(ids));
}

std::vector<std::vector<int>> column_partition(const FunctionClass& fc, int x) {
  if (x < 0 || x >= fc.num_columns())
    throw std::out_of_range("column_partition: column index out of range");
  std::vector<std::vector<int>> cells(fc.num_labels);
  for (int i = 0; i < fc.num_functions; ++i) cells[fc.label(i, x)].push_back(i);
  return cells;
}

bool check_one_neighborly(const FunctionClass& fc) {
  if (!fc.binary()) throw std::invalid_argument("check_one_neighborly: binary classes only");
  const int m = fc.num_functions;
  const int a = fc.num_columns();

  // complement[i] = j when h_j is the pointwise negation of h_i.
  std::vector<int> complement(m, -1);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      bool neg = true;
      for (int x = 0; x < a && neg; ++x) neg = fc.label(j, x) == 1 - fc.label(i, x);
      if (neg) {
        complement[i] = j;
        break;
      }
    }

  for (int i = 0; i < m; ++i) {
    bool found = false;
    for (int x = 0; x < a && !found; ++x)
      for (int x2 = 0; x2 < a && !found; ++x2) {
        if (fc.label(i, x) == fc.label(i, x2)) continue;
        bool ok = true;
        for (int j = 0; j < m && ok; ++j) {
          if (j == i || j == complement[i]) continue;
          ok = fc.label(j, x) == fc.label(j, x2);
        }
        found = ok;
      }
    if (!found) return false;
  }
  return true;
}

LocalIdResult check_locally_identifiable(const FunctionClass& fc) {
  const int m = fc.num_functions;
  const int a = fc.num_columns();
  const int k = fc.num_labels;
  LocalIdResult out;
  out.witnesses.assign(m, std::nullopt);
  out.ok = true;

  for (int i = 0; i < m; ++i) {
    std::optional<LocalIdWitness> witness;
    for (int x = 0; x < a && !witness; ++x)
      for (int x2 = 0; x2 < a && !witness; ++x2)
        for (int l = 0; l < k && !witness; ++l)
          for (int l2 = 0; l2 < k && !witness; ++l2) {
            if (l == l2) continue;
            // Condition 1: h_i takes (l, l2) across the pair, everyone else
            // either agrees on the pair or takes the swapped values (l2, l).
            if (fc.label(i, x) == l && fc.label(i, x2) == l2) {
              bool ok = true;
              for (int j = 0; j < m && ok; ++j) {
                if (j == i) continue;
                const int vx = fc.label(j, x);
                const int vx2 = fc.label(j, x2);
                ok = vx == vx2 || (vx == l2 && vx2 == l);
              }
              if (ok) witness = LocalIdWitness{x, x2, l, l2, 1};
            }
            // Condition 2: h_i is the unique function agreeing on the pair
            // with value l, and no label beyond {l, l2} appears on either
            // column.
            if (!witness && fc.label(i, x) == l && fc.label(i, x2) == l) {
              bool ok = true;
              for (int j = 0; j < m && ok; ++j) {
                const int vx = fc.label(j, x);
                const int vx2 = fc.label(j, x2);
                if (vx != l && vx != l2) ok = false;
                if (vx2 != l && vx2 != l2) ok = false;
                if (j != i && vx == l && vx2 == l) ok = false;
              }
              if (ok) witness = LocalIdWitness{x, x2, l, l2, 2};
            }
          }
    out.witnesses[i] = witness;
    if (!witness) out.ok = false;
  }
  return out;
}

double c_star(const FunctionClass& fc) {
  if (!fc.binary()) throw std::invalid_argument("c_star: binary classes only");
  const int m = fc.num_functions;
  const int a = fc.num_columns();

  // Variables: P_0..P_{a-1}, t, then one slack per inequality.
  //   sum_x h(x) P(x) - t + s_h      = 0   for every h
  //  -sum_x h(x) P(x) - t + r_h      = 0   for every h
  //   sum_x P(x)                     = 1
  const int vars = a + 1 + 2 * m;
  std::vector<std::vector<double>> rows;
  std::vector<double> rhs;
  for (int i = 0; i < m; ++i) {
    std::vector<double> up(vars, 0.0), down(vars, 0.0);
    for (int x = 0; x < a; ++x) {
      const double s = label_sign(fc.label(i, x));
      up[x] = s;
      down[x] = -s;
    }
    up[a] = -1.0;
    down[a] = -1.0;
    up[a + 1 + i] = 1.0;
    down[a + 1 + m + i] = 1.0;
    rows.push_back(std::move(up));
    rhs.push_back(0.0);
    rows.push_back(std::move(down));
    rhs.push_back(0.0);
  }
  std::vector<double> simplex_row(vars, 0.0);
  for (int x = 0; x < a; ++x) simplex_row[x] = 1.0;
  rows.push_back(std::move(simplex_row));
  rhs.push_back(1.0);

  std::vector<double> cost(vars, 0.0);
  cost[a] = 1.0;
  const LpResult lp = solve_lp_min(rows, rhs, cost);
  return std::clamp(lp.objective, 0.0, 1.0);
}

int n0(const FunctionClass& fc) {
  const int m = fc.num_functions;
  const int a = fc.num_columns();
  int worst = 0;
  std::vector<int> cell_size(fc.num_labels);
  for (int truth = 0; truth < m; ++truth) {
    std::vector<int> version(m);
    std::iota(version.begin(), version.end(), 0);
    int queries = 0;
    while (version.size() > 1) {
      int best_col = -1;
      int best_cell = m + 1;
      for (int x = 0; x < a; ++x) {
        std::fill(cell_size.begin(), cell_size.end(), 0);
        for (int i : version) ++cell_size[fc.label(i, x)];
        const int largest = *std::max_element(cell_size.begin(), cell_size.end());
        if (largest < best_cell) {
          best_cell = largest;
          best_col = x;
        }
      }
      const int observed = fc.label(truth, best_col);
      std::vector<int> next;
      for (int i : version)
        if (fc.label(i, best_col) == observed) next.push_back(i);
      version = std::move(next);
      ++queries;
    }
    worst = std::max(worst, queries);
  }
  return worst;
}

bool is_sample_rich(const FunctionClass& fc) {
  double full = 1.0;
  for (int i = 0; i < fc.num_functions; ++i) {
    full *= fc.num_labels;
    if (full > 1e18) return false;  // cannot possibly hold all columns
  }
  const double expected = full - fc.num_labels;
  if (static_cast<double>(fc.num_columns()) != expected) return false;
  for (int x = 0; x < fc.num_columns(); ++x) {
    const auto col = fc.column(x);
    if (std::all_of(col.begin(), col.end(), [&](int v) { return v == col[0]; }))
      return false;
  }
  return true;  // distinct non-constant columns of the right count = all of them
}

ClassReport make_class_report(const FunctionClass& fc) {
  ClassReport rep;
  rep.one_neighborly = fc.binary() && check_one_neighborly(fc);
  rep.locally_identifiable = check_locally_identifiable(fc).ok;
  rep.sample_rich = is_sample_rich(fc);
  if (fc.binary()) rep.c_star = c_star(fc);
  rep.n0 = n0(fc);
  return rep;
}

std::string format_function_class(const FunctionClass& fc) {
  std::string out = "functions " + std::to_string(fc.num_functions) + " labels " +
                    std::to_string(fc.num_labels) + " columns " +
                    std::to_string(fc.num_columns()) + "\n";
  for (int i = 0; i < fc.num_functions; ++i) {
    for (int x = 0; x < fc.num_columns(); ++x) {
      if (x) out += ' ';
      out += std::to_string(fc.label(i, x));
    }
    out += '\n';
  }
  return out;
}

FunctionClass parse_function_class(std::istream& in) {
  std::string kw_functions, kw_labels, kw_columns;
  int m = 0, k = 0, a = 0;
  if (!(in >> kw_functions >> m >> kw_labels >> k >> kw_columns >> a) ||
      kw_functions != "functions" || kw_labels != "labels" || kw_columns != "columns")
    throw ValidationError("class file must start with \"functions M labels K columns A\"");
  if (m < 2 || k < 2 || a < 1)
    throw ValidationError("class file declares an empty or degenerate class");
  std::vector<std::vector<int>> cols(a, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int x = 0; x < a; ++x)
      if (!(in >> cols[x][i])) throw ValidationError("class file is missing label entries");
  return make_function_class(k, cols);
}

FunctionClass parse_function_class_text(const std::string& text) {
  std::istringstream in(text);
  return parse_function_class(in);
}

ClassSpec parse_class_spec(const std::string& spec) {
  ClassSpec out;
  out.tag = spec;
  auto parse_kv = [&](const std::string& body) {
    std::map<std::string, long> kv;
    std::istringstream in(body);
    std::string item;
    while (std::getline(in, item, ',')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos)
        throw ValidationError("class shorthand expects key=value pairs: " + spec);
      kv[item.substr(0, eq)] = std::stol(item.substr(eq + 1));
    }
    return kv;
  };

  if (spec.rfind("disjoint:", 0) == 0) {
    const auto kv = parse_kv(spec.substr(9));
    out.kind = "disjoint";
    out.m = static_cast<int>(kv.at("m"));
    out.fc = make_disjoint(out.m);
    return out;
  }
  if (spec.rfind("threshold:", 0) == 0) {
    const auto kv = parse_kv(spec.substr(10));
    out.kind = "threshold";
    out.m = static_cast<int>(kv.at("m"));
    out.fc = make_threshold(out.m);
    return out;
  }
  if (spec.rfind("rich:", 0) == 0) {
    const auto kv = parse_kv(spec.substr(5));
    out.kind = "rich";
    out.m = static_cast<int>(kv.at("m"));
    out.labels = kv.count("labels") ? static_cast<int>(kv.at("labels")) : 2;
    out.fc = make_sample_rich(out.m, out.labels);
    return out;
  }
  std::ifstream file(spec);
  if (!file) throw ValidationError("cannot open class file: " + spec);
  out.kind = "file";
  out.fc = parse_function_class(file);
  out.m = out.fc.num_functions;
  out.labels = out.fc.num_labels;
  return out;
}

}  // namespace alab
