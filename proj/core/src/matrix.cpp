#include "aont/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "aont/combinatorics.hpp"

namespace aont {

Matrix::Matrix(FieldPtr field, int size)
    : field_(std::move(field)), size_(size), codes_(static_cast<std::size_t>(size) * static_cast<std::size_t>(size), 0) {
  if (!field_) throw std::invalid_argument("matrix needs a field");
  if (size < 1) throw std::invalid_argument("matrix dimension must be at least 1");
}

Matrix::Matrix(FieldPtr field, int size, std::vector<std::uint8_t> codes)
    : field_(std::move(field)), size_(size), codes_(std::move(codes)) {
  if (!field_) throw std::invalid_argument("matrix needs a field");
  if (size < 1) throw std::invalid_argument("matrix dimension must be at least 1");
  if (codes_.size() != static_cast<std::size_t>(size) * static_cast<std::size_t>(size)) {
    throw std::invalid_argument("matrix entry count does not match dimension");
  }
  for (auto c : codes_) {
    if (c >= field_->q()) throw std::invalid_argument("matrix entry " + std::to_string(c) + " outside field");
  }
}

Matrix Matrix::from_rows(FieldPtr field, const std::vector<std::vector<unsigned>>& rows) {
  const int s = static_cast<int>(rows.size());
  std::vector<std::uint8_t> codes;
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != s) throw std::invalid_argument("matrix rows must form a square");
    for (auto c : r) {
      if (c >= field->q()) throw std::invalid_argument("matrix entry " + std::to_string(c) + " outside field");
      codes.push_back(static_cast<std::uint8_t>(c));
    }
  }
  return Matrix(std::move(field), s, std::move(codes));
}

void Matrix::set(int r, int c, Element e) {
  if (!field_->contains(e)) throw std::invalid_argument("element outside field");
  codes_[index(r, c)] = e.code;
}

Matrix Matrix::transposed() const {
  Matrix t(field_, size_);
  for (int r = 0; r < size_; ++r) {
    for (int c = 0; c < size_; ++c) t.codes_[t.index(c, r)] = codes_[index(r, c)];
  }
  return t;
}

Matrix Matrix::submatrix(std::span<const int> rows, std::span<const int> cols) const {
  if (rows.size() != cols.size() || rows.empty()) throw std::invalid_argument("submatrix must be square");
  const int k = static_cast<int>(rows.size());
  Matrix sub(field_, k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) sub.codes_[sub.index(i, j)] = codes_[index(rows[static_cast<std::size_t>(i)], cols[static_cast<std::size_t>(j)])];
  }
  return sub;
}

Matrix Matrix::minor(int row, int col) const {
  if (size_ < 2) throw std::invalid_argument("cannot take a minor of a 1x1 matrix");
  std::vector<int> rows;
  std::vector<int> cols;
  for (int i = 0; i < size_; ++i) {
    if (i != row) rows.push_back(i);
    if (i != col) cols.push_back(i);
  }
  return submatrix(rows, cols);
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.size_ == b.size_ && *a.field_ == *b.field_ && a.codes_ == b.codes_;
}

Matrix identity_matrix(FieldPtr field, int size) {
  Matrix m(std::move(field), size);
  for (int i = 0; i < size; ++i) m.set(i, i, Element{1});
  return m;
}

namespace {

using Grid = std::vector<std::vector<std::uint8_t>>;

Grid to_grid(const Matrix& m) {
  Grid g(static_cast<std::size_t>(m.size()));
  for (int r = 0; r < m.size(); ++r) {
    auto row = m.row(r);
    g[static_cast<std::size_t>(r)].assign(row.begin(), row.end());
  }
  return g;
}

// Gaussian elimination on the left block; returns the determinant of the
// left s x s block and applies the same row operations to all columns.
Element eliminate(const Field& f, Grid& g, int s, bool reduce_above) {
  const unsigned q = f.q();
  const auto* mul = f.mul_table();
  const auto* add = f.add_table();
  const auto* neg = f.neg_table();
  const auto* inv = f.inv_table();
  const std::size_t width = g.empty() ? 0 : g[0].size();
  std::uint8_t det = 1;
  for (int col = 0; col < s; ++col) {
    int pivot = -1;
    for (int r = col; r < s; ++r) {
      if (g[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return Element{0};
    if (pivot != col) {
      std::swap(g[static_cast<std::size_t>(pivot)], g[static_cast<std::size_t>(col)]);
      det = neg[det];
    }
    auto& prow = g[static_cast<std::size_t>(col)];
    const std::uint8_t pv = prow[static_cast<std::size_t>(col)];
    det = mul[det * q + pv];
    const std::uint8_t pinv = inv[pv];
    for (auto& x : prow) x = mul[x * q + pinv];
    for (int r = reduce_above ? 0 : col + 1; r < s; ++r) {
      if (r == col) continue;
      auto& row = g[static_cast<std::size_t>(r)];
      const std::uint8_t factor = row[static_cast<std::size_t>(col)];
      if (factor == 0) continue;
      const std::uint8_t nf = neg[factor];
      for (std::size_t k = 0; k < width; ++k) row[k] = add[row[k] * q + mul[nf * q + prow[k]]];
    }
  }
  return Element{det};
}

Element det2(const Field& f, std::uint8_t a, std::uint8_t b, std::uint8_t c, std::uint8_t d) {
  const unsigned q = f.q();
  const auto* mul = f.mul_table();
  return Element{f.add_table()[mul[a * q + d] * q + f.neg_table()[mul[b * q + c]]]};
}

}  // namespace

Element determinant(const Matrix& m) {
  if (m.size() == 1) return m.at(0, 0);
  if (m.size() == 2) return det2(m.field(), m.code(0, 0), m.code(0, 1), m.code(1, 0), m.code(1, 1));
  auto g = to_grid(m);
  return eliminate(m.field(), g, m.size(), false);
}

bool is_invertible(const Matrix& m) { return determinant(m) != Element{0}; }

Matrix inverse(const Matrix& m) {
  const int s = m.size();
  Grid g = to_grid(m);
  for (int r = 0; r < s; ++r) {
    auto& row = g[static_cast<std::size_t>(r)];
    row.resize(static_cast<std::size_t>(2 * s), 0);
    row[static_cast<std::size_t>(s + r)] = 1;
  }
  if (eliminate(m.field(), g, s, true) == Element{0}) throw std::domain_error("matrix is singular");
  std::vector<std::uint8_t> codes;
  for (int r = 0; r < s; ++r) {
    for (int c = 0; c < s; ++c) codes.push_back(g[static_cast<std::size_t>(r)][static_cast<std::size_t>(s + c)]);
  }
  return Matrix(m.field_ptr(), s, std::move(codes));
}

VerifyReport verify_linear_aont(const Matrix& m, int t) {
  const int s = m.size();
  if (t < 1 || t > s) {
    throw std::invalid_argument("strength t=" + std::to_string(t) + " outside 1.." + std::to_string(s));
  }
  VerifyReport report;
  report.t = t;
  report.s = s;
  report.q = m.field().q();
  if (!is_invertible(m)) {
    report.singular = true;
    return report;
  }
  bool ok = for_each_combination(s, t, [&](const std::vector<int>& rows) {
    return for_each_combination(s, t, [&](const std::vector<int>& cols) {
      Element d;
      if (t == 1) {
        d = m.at(rows[0], cols[0]);
      } else if (t == 2) {
        d = det2(m.field(), m.code(rows[0], cols[0]), m.code(rows[0], cols[1]), m.code(rows[1], cols[0]),
                 m.code(rows[1], cols[1]));
      } else {
        d = determinant(m.submatrix(rows, cols));
      }
      if (d == Element{0}) {
        report.witness_rows = rows;
        report.witness_cols = cols;
        return false;
      }
      return true;
    });
  });
  report.valid = ok;
  if (ok && t == 2) {
    report.mu = to_standard_form(m).info.mu;
    if (is_type_full_standard_form(m)) report.tau = skew_parameter(m);
  }
  return report;
}

bool is_linear_aont(const Matrix& m, int t) { return verify_linear_aont(m, t).valid; }

int leading_diagonal_zeros(const Matrix& m) {
  int mu = 0;
  while (mu < m.size() && m.code(mu, mu) == 0) ++mu;
  return mu;
}

StandardForm to_standard_form(const Matrix& m) {
  const int s = m.size();
  const Field& f = m.field();
  std::vector<int> zero_col(static_cast<std::size_t>(s), -1);
  std::vector<bool> col_has_zero(static_cast<std::size_t>(s), false);
  for (int r = 0; r < s; ++r) {
    for (int c = 0; c < s; ++c) {
      if (m.code(r, c) != 0) continue;
      if (zero_col[static_cast<std::size_t>(r)] >= 0) {
        throw std::invalid_argument("row " + std::to_string(r + 1) + " contains two zeros");
      }
      if (col_has_zero[static_cast<std::size_t>(c)]) {
        throw std::invalid_argument("column " + std::to_string(c + 1) + " contains two zeros");
      }
      zero_col[static_cast<std::size_t>(r)] = c;
      col_has_zero[static_cast<std::size_t>(c)] = true;
    }
  }

  StandardFormInfo info;
  for (int r = 0; r < s; ++r) {
    if (zero_col[static_cast<std::size_t>(r)] >= 0) {
      info.row_perm.push_back(r);
      info.col_perm.push_back(zero_col[static_cast<std::size_t>(r)]);
    }
  }
  info.mu = static_cast<int>(info.row_perm.size());
  for (int r = 0; r < s; ++r) {
    if (zero_col[static_cast<std::size_t>(r)] < 0) info.row_perm.push_back(r);
  }
  for (int c = 0; c < s; ++c) {
    if (!col_has_zero[static_cast<std::size_t>(c)]) info.col_perm.push_back(c);
  }

  info.row_scales.assign(static_cast<std::size_t>(s), f.one());
  info.col_scales.assign(static_cast<std::size_t>(s), f.one());
  const auto entry = [&](int r, int c) {
    return m.at(info.row_perm[static_cast<std::size_t>(r)], info.col_perm[static_cast<std::size_t>(c)]);
  };
  // Row 1 entries become 1 through column scaling, then column 1 entries
  // through row scaling of rows 2..s.
  for (int c = 0; c < s; ++c) {
    const Element e = entry(0, c);
    if (e != f.zero()) info.col_scales[static_cast<std::size_t>(c)] = f.inv(e);
  }
  for (int r = 1; r < s; ++r) {
    const Element e = f.mul(entry(r, 0), info.col_scales[0]);
    if (e != f.zero()) info.row_scales[static_cast<std::size_t>(r)] = f.inv(e);
  }

  Matrix out = apply_standard_form_ops(m, info);
  if (s == static_cast<int>(f.q())) info.chi = out.at(s - 1, s - 1);
  return StandardForm{std::move(out), std::move(info)};
}

Matrix apply_standard_form_ops(const Matrix& m, const StandardFormInfo& info) {
  const int s = m.size();
  const Field& f = m.field();
  Matrix out(m.field_ptr(), s);
  for (int r = 0; r < s; ++r) {
    for (int c = 0; c < s; ++c) {
      const Element e = m.at(info.row_perm[static_cast<std::size_t>(r)], info.col_perm[static_cast<std::size_t>(c)]);
      out.set(r, c, f.mul(f.mul(info.row_scales[static_cast<std::size_t>(r)], e), info.col_scales[static_cast<std::size_t>(c)]));
    }
  }
  return out;
}

bool is_type_full_standard_form(const Matrix& m) {
  const int s = m.size();
  for (int i = 0; i < s; ++i) {
    if (m.code(i, i) != 0) return false;
    if (i > 0 && (m.code(0, i) != 1 || m.code(i, 0) != 1)) return false;
  }
  return true;
}

bool is_reduced(const Matrix& m, const ElementOrder& order) {
  if (!is_type_full_standard_form(m)) return false;
  for (int c = 3; c < m.size(); ++c) {
    if (!order.less(m.at(1, c - 1), m.at(1, c))) return false;
  }
  return true;
}

bool is_reduced(const Matrix& m) { return is_reduced(m, ElementOrder::natural(m.field().q())); }

Matrix to_reduced(const Matrix& m, const ElementOrder& order) {
  if (!is_type_full_standard_form(m)) throw std::invalid_argument("matrix is not in type-s standard form");
  const int s = m.size();
  std::vector<int> perm(static_cast<std::size_t>(s));
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin() + std::min(2, s), perm.end(),
            [&](int a, int b) { return order.less(m.at(1, a), m.at(1, b)); });
  for (int c = 3; c < s; ++c) {
    if (m.at(1, perm[static_cast<std::size_t>(c)]) == m.at(1, perm[static_cast<std::size_t>(c - 1)])) {
      throw std::invalid_argument("row 2 repeats an entry; not a (2,s,q)-AONT");
    }
  }
  Matrix out(m.field_ptr(), s);
  for (int r = 0; r < s; ++r) {
    for (int c = 0; c < s; ++c) out.set(r, c, m.at(perm[static_cast<std::size_t>(r)], perm[static_cast<std::size_t>(c)]));
  }
  return out;
}

Matrix to_reduced(const Matrix& m) { return to_reduced(m, ElementOrder::natural(m.field().q())); }

std::optional<Element> skew_parameter(const Matrix& m) {
  const int s = m.size();
  const Field& f = m.field();
  std::optional<Element> tau;
  for (int i = 1; i < s; ++i) {
    for (int j = i + 1; j < s; ++j) {
      const Element sum = f.add(m.at(i, j), m.at(j, i));
      if (!tau) {
        tau = sum;
      } else if (*tau != sum) {
        return std::nullopt;
      }
    }
  }
  return tau;
}

bool is_symmetric(const Matrix& m) { return m == m.transposed(); }

Matrix shrink_aont(const Matrix& m, int t) {
  const int s = m.size();
  if (t >= s) throw std::invalid_argument("shrinking requires t < s");
  if (!is_linear_aont(m, t)) throw std::invalid_argument("matrix is not a linear (t,s,q)-AONT");
  for (int r = 0; r < s; ++r) {
    Matrix candidate = m.minor(r, 0);
    if (is_invertible(candidate)) return candidate;
  }
  // Cofactor expansion along column 1 makes this unreachable for invertible m.
  throw std::logic_error("no invertible cofactor found");
}

namespace {

void check_permutation(const std::vector<int>& perm, int s) {
  if (static_cast<int>(perm.size()) != s) throw std::invalid_argument("permutation has wrong length");
  std::vector<bool> seen(static_cast<std::size_t>(s), false);
  for (int v : perm) {
    if (v < 0 || v >= s || seen[static_cast<std::size_t>(v)]) throw std::invalid_argument("invalid permutation");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

}  // namespace

Matrix apply_equivalence_op(const Matrix& m, const EquivalenceOp& op) {
  const int s = m.size();
  const Field& f = m.field();
  Matrix out(m.field_ptr(), s);
  if (const auto* pr = std::get_if<ops::PermuteRows>(&op)) {
    check_permutation(pr->perm, s);
    for (int r = 0; r < s; ++r) {
      for (int c = 0; c < s; ++c) out.set(r, c, m.at(pr->perm[static_cast<std::size_t>(r)], c));
    }
  } else if (const auto* pc = std::get_if<ops::PermuteCols>(&op)) {
    check_permutation(pc->perm, s);
    for (int r = 0; r < s; ++r) {
      for (int c = 0; c < s; ++c) out.set(r, c, m.at(r, pc->perm[static_cast<std::size_t>(c)]));
    }
  } else if (const auto* sr = std::get_if<ops::ScaleRow>(&op)) {
    if (sr->scalar == f.zero()) throw std::invalid_argument("scaling by zero is not an equivalence");
    if (sr->index < 0 || sr->index >= s) throw std::invalid_argument("row index out of range");
    out = m;
    for (int c = 0; c < s; ++c) out.set(sr->index, c, f.mul(sr->scalar, m.at(sr->index, c)));
  } else if (const auto* sc = std::get_if<ops::ScaleCol>(&op)) {
    if (sc->scalar == f.zero()) throw std::invalid_argument("scaling by zero is not an equivalence");
    if (sc->index < 0 || sc->index >= s) throw std::invalid_argument("column index out of range");
    out = m;
    for (int r = 0; r < s; ++r) out.set(r, sc->index, f.mul(m.at(r, sc->index), sc->scalar));
  } else {
    out = m.transposed();
  }
  return out;
}

}  // namespace aont
