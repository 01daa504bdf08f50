#include "aont/equivalence.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace aont {

namespace {

// Conjugates m by the row/column permutation that brings r1, r2 to the
// front, then renormalizes to reduced form.
Matrix renormalize(const Matrix& m, int r1, int r2, const ElementOrder& order) {
  const int s = m.size();
  std::vector<int> perm{r1, r2};
  for (int i = 0; i < s; ++i) {
    if (i != r1 && i != r2) perm.push_back(i);
  }
  Matrix moved(m.field_ptr(), s);
  for (int r = 0; r < s; ++r) {
    for (int c = 0; c < s; ++c) moved.set(r, c, m.at(perm[static_cast<std::size_t>(r)], perm[static_cast<std::size_t>(c)]));
  }
  const Field& f = m.field();
  // Columns 2..s scaled so row 1 is all ones, then rows 2..s so column 1 is.
  std::vector<Element> col_scale(static_cast<std::size_t>(s), f.one());
  for (int c = 1; c < s; ++c) col_scale[static_cast<std::size_t>(c)] = f.inv(moved.at(0, c));
  Matrix scaled(m.field_ptr(), s);
  for (int r = 0; r < s; ++r) {
    const Element row_scale = r == 0 ? f.one() : f.inv(moved.at(r, 0));
    for (int c = 0; c < s; ++c) {
      scaled.set(r, c, f.mul(f.mul(row_scale, moved.at(r, c)), col_scale[static_cast<std::size_t>(c)]));
    }
  }
  return to_reduced(scaled, order);
}

bool order_less(const Matrix& a, const Matrix& b, const ElementOrder& order) {
  const auto ca = a.codes();
  const auto cb = b.codes();
  return std::lexicographical_compare(ca.begin(), ca.end(), cb.begin(), cb.end(), [&](std::uint8_t x, std::uint8_t y) {
    return order.rank(Element{x}) < order.rank(Element{y});
  });
}

}  // namespace

std::vector<Matrix> equivalent_reduced_set(const Matrix& m, const ElementOrder& order) {
  if (!is_reduced(m, order)) throw std::invalid_argument("matrix is not reduced");
  const int s = m.size();
  std::vector<Matrix> out;
  for (const Matrix& base : {m, m.transposed()}) {
    for (int r1 = 0; r1 < s; ++r1) {
      for (int r2 = 0; r2 < s; ++r2) {
        if (r1 != r2) out.push_back(renormalize(base, r1, r2, order));
      }
    }
  }
  const auto less = [&](const Matrix& a, const Matrix& b) { return order_less(a, b, order); };
  std::sort(out.begin(), out.end(), less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Matrix> equivalent_reduced_set(const Matrix& m) {
  return equivalent_reduced_set(m, ElementOrder::natural(m.field().q()));
}

std::vector<Matrix> interior_scaled_set(const Matrix& m, const ElementOrder& order) {
  if (!is_reduced(m, order)) throw std::invalid_argument("matrix is not reduced");
  const Field& f = m.field();
  const int s = m.size();
  std::vector<Matrix> out;
  for (unsigned g = 1; g < f.q(); ++g) {
    Matrix scaled = m;
    for (int r = 1; r < s; ++r) {
      for (int c = 1; c < s; ++c) scaled.set(r, c, f.mul(Element{g}, m.at(r, c)));
    }
    out.push_back(to_reduced(scaled, order));
  }
  const auto less = [&](const Matrix& a, const Matrix& b) { return order_less(a, b, order); };
  std::sort(out.begin(), out.end(), less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Matrix> interior_scaled_set(const Matrix& m) {
  return interior_scaled_set(m, ElementOrder::natural(m.field().q()));
}

namespace {

// Fixed point of repeated generation from `seed`; `rounds` counts frontier
// expansions, the last of which found nothing new.
template <typename Less>
std::set<Matrix, Less> closure_of(const Matrix& seed, const ElementOrder& order, bool scale_interior, Less less,
                                  int& rounds) {
  std::set<Matrix, Less> closure(less);
  std::vector<Matrix> frontier{seed};
  closure.insert(seed);
  rounds = 0;
  while (!frontier.empty()) {
    ++rounds;
    std::vector<Matrix> next;
    for (const auto& m : frontier) {
      for (auto& e : equivalent_reduced_set(m, order)) {
        if (closure.insert(e).second) next.push_back(std::move(e));
      }
      if (!scale_interior) continue;
      for (auto& e : interior_scaled_set(m, order)) {
        if (closure.insert(e).second) next.push_back(std::move(e));
      }
    }
    frontier = std::move(next);
  }
  return closure;
}

}  // namespace

std::vector<Matrix> equivalence_closure(const Matrix& m, bool scale_interior) {
  int rounds = 0;
  const auto closure = closure_of(m, ElementOrder::natural(m.field().q()), scale_interior, std::less<Matrix>{}, rounds);
  return {closure.begin(), closure.end()};
}

bool are_equivalent(const Matrix& a, const Matrix& b) {
  if (!(a.field() == b.field())) throw std::invalid_argument("matrices are over different fields");
  if (a.size() != b.size()) return false;
  const auto closure = equivalence_closure(a);
  return std::binary_search(closure.begin(), closure.end(), b);
}

Classification classify(const std::vector<Matrix>& matrices, const ElementOrder& order, bool scale_interior) {
  Classification result;
  if (matrices.empty()) return result;
  for (const auto& m : matrices) {
    if (!(m.field() == matrices.front().field())) throw std::invalid_argument("matrices are over different fields");
  }
  const auto less = [&](const Matrix& a, const Matrix& b) { return order_less(a, b, order); };
  std::vector<Matrix> inputs = matrices;
  std::sort(inputs.begin(), inputs.end(), less);
  inputs.erase(std::unique(inputs.begin(), inputs.end()), inputs.end());

  std::set<Matrix, decltype(less)> assigned(less);
  for (const auto& seed : inputs) {
    if (assigned.contains(seed)) continue;
    int rounds = 0;
    const auto closure = closure_of(seed, order, scale_interior, less, rounds);
    // The first round expands the seed; a second round that finds nothing
    // new only confirms closure.
    if (rounds > 2) result.needed_extra_pass = true;

    EquivalenceClass cls{seed, {}};
    for (const auto& m : inputs) {
      if (closure.contains(m)) {
        cls.members.push_back(m);
        assigned.insert(m);
      }
    }
    cls.representative = cls.members.front();
    result.classes.push_back(std::move(cls));
    result.closure_sizes.push_back(closure.size());
  }
  return result;
}

Classification classify(const std::vector<Matrix>& matrices, bool scale_interior) {
  if (matrices.empty()) return {};
  return classify(matrices, ElementOrder::natural(matrices.front().field().q()), scale_interior);
}

}  // namespace aont
