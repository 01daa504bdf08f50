#include "aont/transforms.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "aont/combinatorics.hpp"

namespace aont {

namespace {

std::size_t sz(std::uint64_t v) { return static_cast<std::size_t>(v); }

void check_ceiling(unsigned v, int s, std::uint64_t ceiling, const char* what) {
  const std::uint64_t rows = checked_pow(v, static_cast<std::uint64_t>(s));
  if (rows > ceiling) {
    throw CeilingError(std::string(what) + " needs " + std::to_string(v) + "^" + std::to_string(s) + " rows (about " +
                       std::to_string(rows == UINT64_MAX ? rows : rows * static_cast<std::uint64_t>(s) * 2) +
                       " bytes), above the ceiling of " + std::to_string(ceiling) + " rows");
  }
}

// Column sets checked by verify_general_aont, in witness order.
std::vector<std::vector<int>> required_subsets(int s, int t) {
  std::vector<std::vector<int>> out;
  std::vector<int> inputs(static_cast<std::size_t>(s));
  std::iota(inputs.begin(), inputs.end(), 0);
  std::vector<int> outputs(static_cast<std::size_t>(s));
  std::iota(outputs.begin(), outputs.end(), s);
  out.push_back(inputs);
  out.push_back(outputs);
  for_each_combination(s, t, [&](const std::vector<int>& in) {
    for_each_combination(s, t, [&](const std::vector<int>& dropped) {
      std::vector<int> d = in;
      for (int c = 0; c < s; ++c) {
        if (!std::binary_search(dropped.begin(), dropped.end(), c)) d.push_back(s + c);
      }
      out.push_back(std::move(d));
      return true;
    });
    return true;
  });
  return out;
}

std::uint64_t projection_rank(std::span<const std::uint8_t> row, std::span<const int> columns, unsigned v) {
  std::uint64_t r = 0;
  for (int c : columns) r = r * v + row[static_cast<std::size_t>(c)];
  return r;
}

}  // namespace

std::uint64_t tuple_rank(std::span<const std::uint8_t> x, unsigned v) {
  std::uint64_t r = 0;
  for (auto c : x) r = r * v + c;
  return r;
}

Tuple tuple_unrank(std::uint64_t rank, unsigned v, int s) {
  Tuple x(static_cast<std::size_t>(s));
  for (int i = s - 1; i >= 0; --i) {
    x[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(rank % v);
    rank /= v;
  }
  return x;
}

GeneralTransform::GeneralTransform(unsigned v, int s, std::vector<std::uint8_t> table)
    : v_(v), s_(s), rows_(checked_pow(v, static_cast<std::uint64_t>(s))), table_(std::move(table)) {
  if (v < 2 || v > 256) throw std::invalid_argument("alphabet size must be in 2..256");
  if (s < 1) throw std::invalid_argument("tuple length must be positive");
  if (rows_ == UINT64_MAX || table_.size() != rows_ * static_cast<std::uint64_t>(s)) {
    throw std::invalid_argument("transform table must hold v^s output tuples of length s");
  }
  for (auto c : table_) {
    if (c >= v) throw std::invalid_argument("transform symbol out of range");
  }
  std::vector<bool> seen(sz(rows_), false);
  for (std::uint64_t r = 0; r < rows_; ++r) {
    const auto y = tuple_rank(output(r), v);
    if (seen[sz(y)]) throw std::invalid_argument("transform table is not a bijection");
    seen[sz(y)] = true;
  }
}

GeneralTransform identity_transform(unsigned v, int s) {
  check_ceiling(v, s, kDefaultTableCeiling, "identity transform");
  const std::uint64_t rows = checked_pow(v, static_cast<std::uint64_t>(s));
  std::vector<std::uint8_t> table;
  table.reserve(sz(rows) * static_cast<std::size_t>(s));
  for (std::uint64_t r = 0; r < rows; ++r) {
    const auto x = tuple_unrank(r, v, s);
    table.insert(table.end(), x.begin(), x.end());
  }
  return GeneralTransform(v, s, std::move(table));
}

GeneralTransform linear_to_general(const Matrix& m, std::uint64_t ceiling) {
  const Field& f = m.field();
  const int s = m.size();
  check_ceiling(f.q(), s, ceiling, "transform table");
  const Matrix minv = inverse(m);
  const std::uint64_t rows = checked_pow(f.q(), static_cast<std::uint64_t>(s));
  std::vector<std::uint8_t> table(sz(rows) * static_cast<std::size_t>(s));
  for (std::uint64_t r = 0; r < rows; ++r) {
    const auto x = tuple_unrank(r, f.q(), s);
    for (int j = 0; j < s; ++j) {
      Element acc = f.zero();
      for (int i = 0; i < s; ++i) acc = f.add(acc, f.mul(Element{x[static_cast<std::size_t>(i)]}, minv.at(i, j)));
      table[sz(r) * static_cast<std::size_t>(s) + static_cast<std::size_t>(j)] = acc.code;
    }
  }
  return GeneralTransform(f.q(), s, std::move(table));
}

bool is_unbiased(const Array& a, std::span<const int> columns) {
  const std::uint64_t cells = checked_pow(a.v, columns.size());
  if (cells == UINT64_MAX || (cells != 0 && a.n_rows % cells != 0)) return false;
  const std::uint64_t lambda = a.n_rows / cells;
  std::vector<std::uint64_t> counts(sz(cells), 0);
  for (std::uint64_t i = 0; i < a.n_rows; ++i) {
    if (++counts[sz(projection_rank(a.row(i), columns, a.v))] > lambda) return false;
  }
  return std::all_of(counts.begin(), counts.end(), [&](std::uint64_t c) { return c == lambda; });
}

bool is_orthogonal_array(const Array& a, int t) {
  return for_each_combination(a.k, t, [&](const std::vector<int>& cols) { return is_unbiased(a, cols); });
}

Array transform_array(const GeneralTransform& phi) {
  const int s = phi.s();
  Array a{phi.rows(), 2 * s, phi.v(), {}};
  a.cells.reserve(sz(phi.rows()) * static_cast<std::size_t>(2 * s));
  for (std::uint64_t r = 0; r < phi.rows(); ++r) {
    const auto x = tuple_unrank(r, phi.v(), s);
    a.cells.insert(a.cells.end(), x.begin(), x.end());
    const auto y = phi.output(r);
    a.cells.insert(a.cells.end(), y.begin(), y.end());
  }
  return a;
}

GeneralVerifyReport verify_general_aont(const GeneralTransform& phi, int t) {
  if (t < 1 || t > phi.s()) throw std::invalid_argument("t must satisfy 1 <= t <= s");
  GeneralVerifyReport report;
  report.t = t;
  const Array a = transform_array(phi);
  for (const auto& d : required_subsets(phi.s(), t)) {
    if (!is_unbiased(a, d)) {
      report.witness_columns = d;
      return report;
    }
  }
  report.valid = true;
  return report;
}

namespace {

void require_aont(const GeneralTransform& phi, int t) {
  if (!verify_general_aont(phi, t).valid) {
    throw std::invalid_argument("transform is not a (" + std::to_string(t) + "," + std::to_string(phi.s()) + "," +
                                std::to_string(phi.v()) + ")-AONT");
  }
}

std::uint64_t suffix_rank(const GeneralTransform& phi, std::uint64_t r, int t) {
  return tuple_rank(phi.output(r).subspan(static_cast<std::size_t>(t)), phi.v());
}

OrthogonalArray empty_oa(const GeneralTransform& phi, int t) {
  OrthogonalArray oa;
  oa.array = Array{0, phi.s(), phi.v(), {}};
  oa.t = t;
  oa.lambda = 1;
  return oa;
}

void append_input(OrthogonalArray& oa, const GeneralTransform& phi, std::uint64_t r) {
  const auto x = tuple_unrank(r, phi.v(), phi.s());
  oa.array.cells.insert(oa.array.cells.end(), x.begin(), x.end());
  ++oa.array.n_rows;
}

}  // namespace

OrthogonalArray extract_oa(const GeneralTransform& phi, int t, std::span<const std::uint8_t> suffix) {
  if (t < 1 || t > phi.s()) throw std::invalid_argument("t must satisfy 1 <= t <= s");
  if (static_cast<int>(suffix.size()) != phi.s() - t) {
    throw std::invalid_argument("suffix must have s - t = " + std::to_string(phi.s() - t) + " symbols");
  }
  for (auto c : suffix) {
    if (c >= phi.v()) throw std::invalid_argument("suffix symbol out of range");
  }
  require_aont(phi, t);
  const std::uint64_t want = tuple_rank(suffix, phi.v());
  OrthogonalArray oa = empty_oa(phi, t);
  for (std::uint64_t r = 0; r < phi.rows(); ++r) {
    if (suffix_rank(phi, r, t) == want) append_input(oa, phi, r);
  }
  return oa;
}

std::vector<OrthogonalArray> aont_to_large_set(const GeneralTransform& phi, int t) {
  if (t < 1 || t > phi.s()) throw std::invalid_argument("t must satisfy 1 <= t <= s");
  require_aont(phi, t);
  const std::uint64_t parts = checked_pow(phi.v(), static_cast<std::uint64_t>(phi.s() - t));
  std::vector<OrthogonalArray> out(sz(parts), empty_oa(phi, t));
  for (std::uint64_t r = 0; r < phi.rows(); ++r) append_input(out[sz(suffix_rank(phi, r, t))], phi, r);
  return out;
}

Tuple ResilientFunction::evaluate(std::span<const std::uint8_t> x) const {
  if (static_cast<int>(x.size()) != n) throw std::invalid_argument("input must have n symbols");
  Tuple y(static_cast<std::size_t>(m));
  if (is_linear()) {
    const Field& f = *field;
    for (int j = 0; j < m; ++j) {
      Element acc = f.zero();
      for (int i = 0; i < n; ++i) {
        acc = f.add(acc, f.mul(Element{x[static_cast<std::size_t>(i)]},
                               Element{generator[static_cast<std::size_t>(j * n + i)]}));
      }
      y[static_cast<std::size_t>(j)] = acc.code;
    }
    return y;
  }
  const std::uint64_t r = tuple_rank(x, v);
  std::copy_n(table.begin() + static_cast<std::ptrdiff_t>(r * static_cast<std::uint64_t>(m)), m, y.begin());
  return y;
}

std::vector<std::uint8_t> null_space_basis(const Field& f, int rows, int cols, std::span<const std::uint8_t> a) {
  if (static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols) != a.size()) {
    throw std::invalid_argument("matrix shape does not match its entries");
  }
  std::vector<std::uint8_t> w(a.begin(), a.end());
  auto at = [&](int r, int c) -> std::uint8_t& { return w[static_cast<std::size_t>(r * cols + c)]; };
  std::vector<int> pivots;
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int p = rank;
    while (p < rows && at(p, c) == 0) ++p;
    if (p == rows) continue;
    for (int j = 0; j < cols; ++j) std::swap(at(p, j), at(rank, j));
    const Element scale = f.inv(Element{at(rank, c)});
    for (int j = 0; j < cols; ++j) at(rank, j) = f.mul(scale, Element{at(rank, j)}).code;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || at(r, c) == 0) continue;
      const Element factor{at(r, c)};
      for (int j = 0; j < cols; ++j) at(r, j) = f.sub(Element{at(r, j)}, f.mul(factor, Element{at(rank, j)})).code;
    }
    pivots.push_back(c);
    ++rank;
  }
  std::vector<std::uint8_t> basis;
  for (int c = 0; c < cols; ++c) {
    if (std::find(pivots.begin(), pivots.end(), c) != pivots.end()) continue;
    std::vector<std::uint8_t> y(static_cast<std::size_t>(cols), 0);
    y[static_cast<std::size_t>(c)] = 1;
    for (int r = 0; r < rank; ++r) y[static_cast<std::size_t>(pivots[static_cast<std::size_t>(r)])] = f.neg(Element{at(r, c)}).code;
    basis.insert(basis.end(), y.begin(), y.end());
  }
  return basis;
}

ResilientFunction linear_aont_to_rf(const Matrix& m, int t, std::optional<std::vector<int>> delete_rows) {
  const int s = m.size();
  if (!verify_linear_aont(m, t).valid) {
    throw std::invalid_argument("matrix is not a linear (" + std::to_string(t) + "," + std::to_string(s) + "," +
                                std::to_string(m.field().q()) + ")-AONT");
  }
  std::vector<int> drop;
  if (delete_rows) {
    drop = *delete_rows;
  } else {
    for (int r = t; r < s; ++r) drop.push_back(r);
  }
  std::sort(drop.begin(), drop.end());
  if (static_cast<int>(drop.size()) != s - t || std::adjacent_find(drop.begin(), drop.end()) != drop.end() ||
      (!drop.empty() && (drop.front() < 0 || drop.back() >= s))) {
    throw std::invalid_argument("exactly s - t = " + std::to_string(s - t) + " distinct rows in 1..s must be deleted");
  }
  std::vector<std::uint8_t> kept;
  for (int r = 0; r < s; ++r) {
    if (std::binary_search(drop.begin(), drop.end(), r)) continue;
    const auto row = m.row(r);
    kept.insert(kept.end(), row.begin(), row.end());
  }
  ResilientFunction f;
  f.n = s;
  f.m = s - t;
  f.t = t;
  f.v = m.field().q();
  f.field = m.field_ptr();
  f.generator = null_space_basis(m.field(), t, s, kept);
  return f;
}

ResilientFunction aont_to_rf(const GeneralTransform& phi, int t) {
  if (t < 1 || t > phi.s()) throw std::invalid_argument("t must satisfy 1 <= t <= s");
  ResilientFunction f;
  f.n = phi.s();
  f.m = phi.s() - t;
  f.t = t;
  f.v = phi.v();
  f.table.reserve(sz(phi.rows()) * static_cast<std::size_t>(f.m));
  for (std::uint64_t r = 0; r < phi.rows(); ++r) {
    const auto y = phi.output(r).subspan(static_cast<std::size_t>(t));
    f.table.insert(f.table.end(), y.begin(), y.end());
  }
  return f;
}

bool verify_resilient(const ResilientFunction& f, std::uint64_t ceiling) {
  check_ceiling(f.v, f.n, ceiling, "resilience check");
  if (f.t < 0 || f.t > f.n || f.m < 0) return false;
  if (f.m == 0) return true;
  if (f.n - f.t < f.m) return false;
  const std::uint64_t rows = checked_pow(f.v, static_cast<std::uint64_t>(f.n));
  std::vector<Tuple> inputs;
  std::vector<std::uint64_t> outputs;
  inputs.reserve(sz(rows));
  outputs.reserve(sz(rows));
  for (std::uint64_t r = 0; r < rows; ++r) {
    inputs.push_back(tuple_unrank(r, f.v, f.n));
    outputs.push_back(tuple_rank(f.evaluate(inputs.back()), f.v));
  }
  const std::uint64_t out_cells = checked_pow(f.v, static_cast<std::uint64_t>(f.m));
  const std::uint64_t expected = checked_pow(f.v, static_cast<std::uint64_t>(f.n - f.t - f.m));
  return for_each_combination(f.n, f.t, [&](const std::vector<int>& fixed) {
    std::vector<std::uint64_t> counts(sz(checked_pow(f.v, fixed.size()) * out_cells), 0);
    for (std::uint64_t r = 0; r < rows; ++r) {
      const std::uint64_t key = projection_rank(inputs[sz(r)], fixed, f.v) * out_cells + outputs[sz(r)];
      if (++counts[sz(key)] > expected) return false;
    }
    return std::all_of(counts.begin(), counts.end(), [&](std::uint64_t c) { return c == expected; });
  });
}

namespace {

class ExistenceSearch {
 public:
  ExistenceSearch(unsigned v, int s, int t) : v_(v), s_(s), rows_(checked_pow(v, static_cast<std::uint64_t>(s))) {
    for (const auto& d : required_subsets(s, t)) {
      if (d.front() < s && d.back() < s) continue;  // inputs: always unbiased
      subsets_.push_back(d);
    }
    used_.assign(subsets_.size(), std::vector<bool>(sz(rows_), false));
    for (std::uint64_t r = 0; r < rows_; ++r) {
      auto x = tuple_unrank(r, v, s);
      inputs_.push_back(x);
      outputs_.push_back(x);
    }
    image_.assign(sz(rows_), 0);
    row_.assign(static_cast<std::size_t>(2 * s), 0);
  }

  std::optional<GeneralTransform> run(std::uint64_t& nodes) {
    if (!dfs(0, nodes)) return std::nullopt;
    std::vector<std::uint8_t> table;
    for (std::uint64_t r = 0; r < rows_; ++r) {
      const auto& y = outputs_[sz(image_[sz(r)])];
      table.insert(table.end(), y.begin(), y.end());
    }
    return GeneralTransform(v_, s_, std::move(table));
  }

 private:
  std::uint64_t key(std::size_t d, std::uint64_t x, std::uint64_t y) {
    std::copy(inputs_[sz(x)].begin(), inputs_[sz(x)].end(), row_.begin());
    std::copy(outputs_[sz(y)].begin(), outputs_[sz(y)].end(), row_.begin() + s_);
    return projection_rank(row_, subsets_[d], v_);
  }

  bool place(std::uint64_t x, std::uint64_t y, std::vector<std::uint64_t>& keys) {
    keys.clear();
    for (std::size_t d = 0; d < subsets_.size(); ++d) {
      const auto k = key(d, x, y);
      if (used_[d][sz(k)]) {
        unplace(keys);
        return false;
      }
      used_[d][sz(k)] = true;
      keys.push_back(k);
    }
    return true;
  }

  void unplace(const std::vector<std::uint64_t>& keys) {
    for (std::size_t d = 0; d < keys.size(); ++d) used_[d][sz(keys[d])] = false;
  }

  bool dfs(std::uint64_t x, std::uint64_t& nodes) {
    if (x == rows_) return true;
    // Relabeling each output coordinate lets the zero input map to zero.
    const std::uint64_t last = x == 0 ? 1 : rows_;
    std::vector<std::uint64_t> keys;
    for (std::uint64_t y = 0; y < last; ++y) {
      ++nodes;
      if (!place(x, y, keys)) continue;
      image_[sz(x)] = y;
      if (dfs(x + 1, nodes)) return true;
      unplace(keys);
    }
    return false;
  }

  unsigned v_;
  int s_;
  std::uint64_t rows_;
  std::vector<std::vector<int>> subsets_;
  std::vector<std::vector<bool>> used_;
  std::vector<Tuple> inputs_;
  std::vector<Tuple> outputs_;
  std::vector<std::uint64_t> image_;
  std::vector<std::uint8_t> row_;
};

}  // namespace

BruteForceResult brute_force_general_search(unsigned v, int s, int t, bool find_all) {
  if (v < 2 || s < 1 || t < 1 || t > s) throw std::invalid_argument("need v >= 2 and 1 <= t <= s");
  const std::uint64_t rows = checked_pow(v, static_cast<std::uint64_t>(s));
  const std::uint64_t bound = find_all ? kBruteForceAllCeiling : kBruteForceExistsCeiling;
  if (rows > bound) {
    throw CeilingError("brute force needs v^s <= " + std::to_string(bound) + ", got " + std::to_string(rows));
  }
  BruteForceResult result;
  if (!find_all) {
    ExistenceSearch search(v, s, t);
    if (auto hit = search.run(result.explored)) result.transforms.push_back(std::move(*hit));
    return result;
  }
  std::vector<std::uint64_t> perm(sz(rows));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Tuple> tuples;
  for (std::uint64_t r = 0; r < rows; ++r) tuples.push_back(tuple_unrank(r, v, s));
  do {
    ++result.explored;
    std::vector<std::uint8_t> table;
    table.reserve(sz(rows) * static_cast<std::size_t>(s));
    for (auto y : perm) table.insert(table.end(), tuples[sz(y)].begin(), tuples[sz(y)].end());
    GeneralTransform phi(v, s, std::move(table));
    if (verify_general_aont(phi, t).valid) result.transforms.push_back(std::move(phi));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return result;
}

bool bush_admissible(int t, int s, unsigned v) {
  if (t < 1 || s < t || v < 2) throw std::invalid_argument("need t >= 1, s >= t, v >= 2");
  const int vi = static_cast<int>(v);
  bool ok = true;
  if (t == 2 || (vi % 2 == 0 && 3 <= t && t <= vi)) ok = ok && s <= vi + t - 1;
  if (vi % 2 == 1 && 3 <= t && t <= vi) ok = ok && s <= vi + t - 2;
  if (t >= vi) ok = ok && s <= t + 1;
  return ok;
}

}  // namespace aont
