#include "aont/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <thread>

#include "aont/combinatorics.hpp"

namespace aont {

std::string to_string(SearchMode mode) {
  switch (mode) {
    case SearchMode::reduced:
      return "reduced";
    case SearchMode::type_q_minus_1:
      return "type-q-minus-1";
    case SearchMode::symmetric_reduced:
      return "symmetric-reduced";
    case SearchMode::general_linear:
      return "general-linear";
  }
  return "unknown";
}

SearchMode parse_search_mode(std::string_view text) {
  for (auto mode : {SearchMode::reduced, SearchMode::type_q_minus_1, SearchMode::symmetric_reduced,
                    SearchMode::general_linear}) {
    if (text == to_string(mode)) return mode;
  }
  throw std::invalid_argument("unknown search mode '" + std::string(text) + "'");
}

namespace {

constexpr std::uint8_t kUnset = 0xFF;
constexpr std::uint64_t kProgressInterval = 1ULL << 24;

struct Slot {
  // One cell, or a cell and its mirror for symmetric searches.
  int cells[2] = {-1, -1};
  int ncells = 1;
  std::uint16_t domain = 0;
  // Cell whose value this slot must exceed under the element order.
  int greater_than = -1;
};

struct Template {
  int s = 0;
  std::vector<int> fixed;  // per cell: -1 when free, else the code
  std::vector<Slot> slots;
  int row2_slots = 0;  // leading slots that choose row 2
};

std::uint16_t nonzero_mask(unsigned q) { return static_cast<std::uint16_t>(((1U << q) - 1U) & ~1U); }

std::vector<Template> build_templates(const SearchSpec& spec) {
  const int s = spec.s;
  const unsigned q = spec.field->q();
  const auto cell = [s](int r, int c) { return r * s + c; };
  const std::uint16_t nonzero = nonzero_mask(q);
  std::vector<Template> out;

  const auto reduced_frame = [&](int zero_diagonal_upto) {
    Template t;
    t.s = s;
    t.fixed.assign(static_cast<std::size_t>(s * s), -1);
    for (int i = 0; i < s; ++i) {
      t.fixed[static_cast<std::size_t>(cell(0, i))] = 1;
      t.fixed[static_cast<std::size_t>(cell(i, 0))] = 1;
    }
    for (int i = 0; i < zero_diagonal_upto; ++i) t.fixed[static_cast<std::size_t>(cell(i, i))] = 0;
    return t;
  };

  switch (spec.mode) {
    case SearchMode::reduced:
    case SearchMode::type_q_minus_1: {
      const bool full = spec.mode == SearchMode::reduced;
      Template t = reduced_frame(full ? s : s - 1);
      // Columns 3..last_sorted (1-based) of row 2 are increasing.
      const int last_sorted = full ? s - 1 : s - 2;
      for (int r = 1; r < s; ++r) {
        for (int c = 1; c < s; ++c) {
          if (t.fixed[static_cast<std::size_t>(cell(r, c))] >= 0) continue;
          Slot slot;
          slot.cells[0] = cell(r, c);
          slot.domain = nonzero;
          if (r == 1 && c >= 3 && c <= last_sorted) slot.greater_than = cell(1, c - 1);
          t.slots.push_back(slot);
          if (r == 1) ++t.row2_slots;
        }
      }
      out.push_back(std::move(t));
      break;
    }
    case SearchMode::symmetric_reduced: {
      Template t = reduced_frame(s);
      for (int r = 1; r < s; ++r) {
        for (int c = r + 1; c < s; ++c) {
          Slot slot;
          slot.cells[0] = cell(r, c);
          slot.cells[1] = cell(c, r);
          slot.ncells = 2;
          slot.domain = nonzero;
          if (r == 1 && c >= 3) slot.greater_than = cell(1, c - 1);
          t.slots.push_back(slot);
          if (r == 1) ++t.row2_slots;
        }
      }
      out.push_back(std::move(t));
      break;
    }
    case SearchMode::general_linear: {
      if (spec.t == 2) {
        // Standard form of every type mu.
        for (int mu = 0; mu <= s; ++mu) {
          Template t = reduced_frame(mu);
          if (mu == 0) t.fixed[0] = 1;
          for (int r = 1; r < s; ++r) {
            for (int c = 1; c < s; ++c) {
              if (t.fixed[static_cast<std::size_t>(cell(r, c))] >= 0) continue;
              Slot slot;
              slot.cells[0] = cell(r, c);
              slot.domain = nonzero;
              t.slots.push_back(slot);
              if (r == 1) ++t.row2_slots;
            }
          }
          out.push_back(std::move(t));
        }
      } else {
        // Scaling alone brings the first row and column into {0,1}; with
        // t = 1 no entry may vanish, so they are all ones.
        Template t;
        t.s = s;
        t.fixed.assign(static_cast<std::size_t>(s * s), -1);
        const std::uint16_t all = static_cast<std::uint16_t>((1U << q) - 1U);
        for (int r = 0; r < s; ++r) {
          for (int c = 0; c < s; ++c) {
            const bool border = r == 0 || c == 0;
            if (spec.t == 1 && border) {
              t.fixed[static_cast<std::size_t>(cell(r, c))] = 1;
              continue;
            }
            Slot slot;
            slot.cells[0] = cell(r, c);
            slot.domain = spec.t == 1 ? nonzero : (border ? std::uint16_t{0b11} : all);
            t.slots.push_back(slot);
            if (r == 0) ++t.row2_slots;
          }
        }
        out.push_back(std::move(t));
      }
      break;
    }
  }
  return out;
}

// Images of ratio sets under multiplication and division by a fixed element.
class MaskTables {
 public:
  explicit MaskTables(const Field& f) : q_(f.q()) {
    const std::size_t width = std::size_t{1} << q_;
    mul_.assign(q_ * width, 0);
    div_.assign(q_ * width, 0);
    for (unsigned a = 1; a < q_; ++a) {
      for (std::size_t m = 1; m < width; ++m) {
        const unsigned low = static_cast<unsigned>(std::countr_zero(m));
        const std::size_t rest = m & (m - 1);
        const unsigned prod = f.mul_table()[a * q_ + low];
        mul_[a * width + m] = static_cast<std::uint16_t>(mul_[a * width + rest] | (1U << prod));
        if (low != 0) {
          const unsigned quot = f.mul_table()[a * q_ + f.inv_table()[low]];
          div_[a * width + m] = static_cast<std::uint16_t>(div_[a * width + rest] | (1U << quot));
        } else {
          div_[a * width + m] = div_[a * width + rest];
        }
      }
    }
  }
  std::uint16_t mul(unsigned a, std::uint16_t m) const { return mul_[(a << q_) + m]; }
  std::uint16_t div(unsigned a, std::uint16_t m) const { return div_[(a << q_) + m]; }

 private:
  unsigned q_;
  std::vector<std::uint16_t> mul_;
  std::vector<std::uint16_t> div_;
};

class Engine {
 public:
  Engine(const SearchSpec& spec, const Template& tpl, const MaskTables& masks)
      : spec_(spec),
        tpl_(tpl),
        masks_(masks),
        field_(*spec.field),
        order_(*spec.order),
        s_(tpl.s),
        q_(field_.q()),
        val_(static_cast<std::size_t>(s_ * s_), kUnset),
        row_zero_(static_cast<std::size_t>(s_), 0),
        col_zero_(static_cast<std::size_t>(s_), 0),
        pair_(static_cast<std::size_t>(s_ * s_), 0),
        slot_val_(tpl.slots.size(), 0),
        slot_undo_(tpl.slots.size(), 0) {
    greater_.assign(q_, 0);
    for (unsigned v = 0; v < q_; ++v) {
      for (unsigned w = 0; w < q_; ++w) {
        if (order_.less(Element{v}, Element{w})) greater_[v] = static_cast<std::uint16_t>(greater_[v] | (1U << w));
      }
    }
  }

  // Places the fixed cells in row-major order; false if they already clash.
  bool init() {
    for (int cell = 0; cell < s_ * s_; ++cell) {
      const int v = tpl_.fixed[static_cast<std::size_t>(cell)];
      if (v < 0) continue;
      if (!((allowed(cell, 0xFFFF) >> v) & 1U)) return false;
      place(cell, static_cast<std::uint8_t>(v));
    }
    return true;
  }

  void set_progress(const ProgressFn* progress, int shard) {
    progress_ = progress;
    shard_ = shard;
  }

  // Replays a prefix; false if it is not consistent (never for prefixes
  // produced by enumerate_prefixes on the same spec).
  bool replay(const std::vector<std::uint8_t>& values) {
    for (std::size_t k = 0; k < values.size(); ++k) {
      if (!try_slot(static_cast<int>(k), values[k])) return false;
    }
    return true;
  }

  void search_from(int k) { dfs(k); }

  void enumerate_prefixes(int depth, int template_index, std::vector<SearchPrefix>& out) {
    prefix_depth_ = depth;
    prefix_sink_ = &out;
    template_index_ = template_index;
    dfs(0);
    prefix_sink_ = nullptr;
  }

  SearchResult& result() { return result_; }

 private:
  std::uint16_t allowed(int cell, std::uint16_t domain) const {
    const int i = cell / s_;
    const int c = cell % s_;
    if (spec_.t != 2) return allowed_by_minors(cell, domain);
    std::uint16_t forbidden = 0;
    if (row_zero_[static_cast<std::size_t>(i)] != 0 || col_zero_[static_cast<std::size_t>(c)] != 0) forbidden = 1;
    for (int j = 0; j < s_; ++j) {
      if (j == i) continue;
      const std::uint8_t a = val_[static_cast<std::size_t>(j * s_ + c)];
      if (a == kUnset || a == 0) continue;
      if (j < i) {
        forbidden |= masks_.mul(a, pair_[static_cast<std::size_t>(j * s_ + i)]);
      } else {
        forbidden |= masks_.div(a, pair_[static_cast<std::size_t>(i * s_ + j)]);
      }
    }
    return static_cast<std::uint16_t>(domain & ~forbidden);
  }

  // Strengths other than 2: cells arrive in row-major order, so every t x t
  // minor whose bottom-right cell is (i, c) is complete once (i, c) is set.
  std::uint16_t allowed_by_minors(int cell, std::uint16_t domain) const {
    const int i = cell / s_;
    const int c = cell % s_;
    const int t = spec_.t;
    std::uint16_t ok = 0;
    auto scratch = val_;
    for (unsigned v = 0; v < q_; ++v) {
      if (!((domain >> v) & 1U)) continue;
      scratch[static_cast<std::size_t>(cell)] = static_cast<std::uint8_t>(v);
      bool good = true;
      if (t == 1) {
        good = v != 0;
      } else if (i >= t - 1 && c >= t - 1) {
        good = for_each_combination(i, t - 1, [&](const std::vector<int>& rows_below) {
          return for_each_combination(c, t - 1, [&](const std::vector<int>& cols_below) {
            std::vector<std::uint8_t> codes;
            codes.reserve(static_cast<std::size_t>(t * t));
            for (int rr = 0; rr < t; ++rr) {
              const int r = rr < t - 1 ? rows_below[static_cast<std::size_t>(rr)] : i;
              for (int cc = 0; cc < t; ++cc) {
                const int col = cc < t - 1 ? cols_below[static_cast<std::size_t>(cc)] : c;
                codes.push_back(scratch[static_cast<std::size_t>(r * s_ + col)]);
              }
            }
            return determinant(Matrix(spec_.field, t, std::move(codes))) != Element{0};
          });
        });
      }
      if (good) ok = static_cast<std::uint16_t>(ok | (1U << v));
    }
    return ok;
  }

  void place(int cell, std::uint8_t v) {
    const int i = cell / s_;
    const int c = cell % s_;
    val_[static_cast<std::size_t>(cell)] = v;
    if (spec_.t != 2) return;
    if (v == 0) {
      ++row_zero_[static_cast<std::size_t>(i)];
      ++col_zero_[static_cast<std::size_t>(c)];
      return;
    }
    const auto* mul = field_.mul_table();
    const auto* inv = field_.inv_table();
    for (int j = 0; j < s_; ++j) {
      if (j == i) continue;
      const std::uint8_t a = val_[static_cast<std::size_t>(j * s_ + c)];
      if (a == kUnset || a == 0) continue;
      // Ratio of the lower row over the upper row in this column.
      const int lo = std::min(i, j);
      const int hi = std::max(i, j);
      const std::uint8_t top = (hi == i) ? v : a;
      const std::uint8_t bottom = (hi == i) ? a : v;
      const unsigned ratio = mul[top * q_ + inv[bottom]];
      const auto idx = static_cast<std::size_t>(lo * s_ + hi);
      pair_[idx] = static_cast<std::uint16_t>(pair_[idx] | (1U << ratio));
      undo_.push_back(static_cast<std::uint32_t>(idx << 8U) | ratio);
    }
  }

  void unplace(int cell, std::size_t undo_mark) {
    const std::uint8_t v = val_[static_cast<std::size_t>(cell)];
    val_[static_cast<std::size_t>(cell)] = kUnset;
    if (spec_.t == 2 && v == 0) {
      --row_zero_[static_cast<std::size_t>(cell / s_)];
      --col_zero_[static_cast<std::size_t>(cell % s_)];
    }
    while (undo_.size() > undo_mark) {
      const std::uint32_t e = undo_.back();
      undo_.pop_back();
      pair_[e >> 8U] = static_cast<std::uint16_t>(pair_[e >> 8U] & ~(1U << (e & 0xFFU)));
    }
  }

  std::uint16_t slot_allowed(int k) const {
    const Slot& slot = tpl_.slots[static_cast<std::size_t>(k)];
    std::uint16_t domain = slot.domain;
    if (slot.greater_than >= 0) domain &= greater_[val_[static_cast<std::size_t>(slot.greater_than)]];
    return allowed(slot.cells[0], domain);
  }

  // Places value v into slot k (and its mirror cell); false if rejected.
  bool try_slot(int k, std::uint8_t v) {
    const Slot& slot = tpl_.slots[static_cast<std::size_t>(k)];
    if (!((slot_allowed(k) >> v) & 1U)) return false;
    slot_undo_[static_cast<std::size_t>(k)] = undo_.size();
    place(slot.cells[0], v);
    if (slot.ncells == 2) {
      if (!((allowed(slot.cells[1], slot.domain) >> v) & 1U)) {
        unplace(slot.cells[0], slot_undo_[static_cast<std::size_t>(k)]);
        return false;
      }
      place(slot.cells[1], v);
    }
    slot_val_[static_cast<std::size_t>(k)] = v;
    return true;
  }

  void untry_slot(int k) {
    const Slot& slot = tpl_.slots[static_cast<std::size_t>(k)];
    const std::size_t mark = slot_undo_[static_cast<std::size_t>(k)];
    if (slot.ncells == 2) unplace(slot.cells[1], mark);
    unplace(slot.cells[0], mark);
  }

  void dfs(int k) {
    const int nslots = static_cast<int>(tpl_.slots.size());
    if (prefix_sink_ != nullptr && (k == prefix_depth_ || k == nslots)) {
      prefix_sink_->push_back(SearchPrefix{template_index_, {slot_val_.begin(), slot_val_.begin() + k}});
      return;
    }
    if (k == nslots) {
      accept();
      return;
    }
    const std::uint16_t options = slot_allowed(k);
    if (options == 0) return;
    for (std::uint8_t v : order_.sequence()) {
      if (!((options >> v) & 1U)) continue;
      if (!try_slot(k, v)) continue;
      if (prefix_sink_ == nullptr) tick();
      dfs(k + 1);
      untry_slot(k);
    }
  }

  void tick() {
    ++result_.nodes_visited;
    if (progress_ != nullptr && *progress_ && result_.nodes_visited % kProgressInterval == 0) {
      (*progress_)(SearchProgress{shard_, result_.nodes_visited, result_.count});
    }
  }

  void accept() {
    Matrix m(spec_.field, s_, val_);
    if (!is_invertible(m)) return;
    ++result_.count;
    if (!spec_.limit || result_.matrices.size() < *spec_.limit) result_.matrices.push_back(std::move(m));
  }

  const SearchSpec& spec_;
  const Template& tpl_;
  const MaskTables& masks_;
  const Field& field_;
  const ElementOrder& order_;
  int s_;
  unsigned q_;
  std::vector<std::uint8_t> val_;
  std::vector<int> row_zero_;
  std::vector<int> col_zero_;
  // Ratios m(hi, c) / m(lo, c) already used by row pair (lo, hi), at lo*s+hi.
  std::vector<std::uint16_t> pair_;
  std::vector<std::uint32_t> undo_;
  std::vector<std::uint8_t> slot_val_;
  std::vector<std::size_t> slot_undo_;
  std::vector<std::uint16_t> greater_;
  SearchResult result_;
  const ProgressFn* progress_ = nullptr;
  int shard_ = 0;
  int prefix_depth_ = -1;
  int template_index_ = 0;
  std::vector<SearchPrefix>* prefix_sink_ = nullptr;
};

bool order_less(const Matrix& a, const Matrix& b, const ElementOrder& order) {
  const auto ca = a.codes();
  const auto cb = b.codes();
  return std::lexicographical_compare(ca.begin(), ca.end(), cb.begin(), cb.end(), [&](std::uint8_t x, std::uint8_t y) {
    return order.rank(Element{x}) < order.rank(Element{y});
  });
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) { return (a > UINT64_MAX - b) ? UINT64_MAX : a + b; }

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

}  // namespace

SearchSpec normalize(SearchSpec spec) {
  if (!spec.field) throw std::invalid_argument("search needs a field");
  const unsigned q = spec.field->q();
  if (q > kMaxSearchOrder) throw std::invalid_argument("searches support q <= 16");
  if (spec.mode == SearchMode::general_linear) {
    if (spec.s < 1) throw std::invalid_argument("general-linear search needs s >= 1");
    if (spec.t < 1 || spec.t > spec.s) throw std::invalid_argument("general-linear search needs 1 <= t <= s");
  } else {
    if (spec.mode == SearchMode::type_q_minus_1 && q < 3) throw std::invalid_argument("type q-1 search needs q >= 3");
    spec.s = static_cast<int>(q);
    spec.t = 2;
  }
  if (!spec.order) spec.order = ElementOrder::natural(q);
  if (spec.order->size() != q) throw std::invalid_argument("element order does not match field");
  return spec;
}

std::uint64_t naive_tree_nodes(const SearchSpec& raw) {
  const SearchSpec spec = normalize(raw);
  std::uint64_t total = 0;
  for (const auto& tpl : build_templates(spec)) {
    std::uint64_t level = 1;
    for (const auto& slot : tpl.slots) {
      level = saturating_mul(level, static_cast<std::uint64_t>(std::popcount(slot.domain)));
      total = saturating_add(total, level);
    }
  }
  return total;
}

std::uint64_t estimate_nodes(const SearchSpec& raw) {
  const SearchSpec spec = normalize(raw);
  std::uint64_t total = 0;
  for (const auto& tpl : build_templates(spec)) {
    std::uint64_t leaves = 1;
    for (const auto& slot : tpl.slots) leaves = saturating_mul(leaves, static_cast<std::uint64_t>(std::popcount(slot.domain)));
    total = saturating_add(total, leaves);
  }
  return total;
}

namespace {

void check_guard(const SearchSpec& spec) {
  if (spec.mode != SearchMode::general_linear) return;
  const auto estimate = estimate_nodes(spec);
  if (estimate > spec.node_ceiling) {
    throw SearchGuardError("estimated " + std::to_string(estimate) + " nodes exceeds the ceiling of " +
                           std::to_string(spec.node_ceiling));
  }
}

void sort_results(SearchResult& r, const SearchSpec& spec) {
  std::sort(r.matrices.begin(), r.matrices.end(),
            [&](const Matrix& a, const Matrix& b) { return order_less(a, b, *spec.order); });
  if (spec.limit && r.matrices.size() > *spec.limit) {
    r.matrices.erase(r.matrices.begin() + static_cast<std::ptrdiff_t>(*spec.limit), r.matrices.end());
  }
}

}  // namespace

SearchResult run_search(const SearchSpec& raw, const ProgressFn& progress) {
  SearchShard shard;
  shard.spec = normalize(raw);
  check_guard(shard.spec);
  const auto templates = build_templates(shard.spec);
  for (int i = 0; i < static_cast<int>(templates.size()); ++i) shard.prefixes.push_back(SearchPrefix{i, {}});
  return run_shard(shard, progress);
}

SearchResult run_shard(const SearchShard& shard, const ProgressFn& progress) {
  const auto start = std::chrono::steady_clock::now();
  const SearchSpec spec = normalize(shard.spec);
  const auto templates = build_templates(spec);
  const MaskTables masks(*spec.field);
  SearchResult total;
  for (const auto& prefix : shard.prefixes) {
    Engine engine(spec, templates.at(static_cast<std::size_t>(prefix.template_index)), masks);
    engine.set_progress(&progress, shard.index);
    if (!engine.init() || !engine.replay(prefix.values)) continue;
    engine.search_from(static_cast<int>(prefix.values.size()));
    auto& r = engine.result();
    total.count += r.count;
    total.nodes_visited += r.nodes_visited;
    for (auto& m : r.matrices) total.matrices.push_back(std::move(m));
  }
  sort_results(total, spec);
  total.elapsed = std::chrono::steady_clock::now() - start;
  return total;
}

std::vector<SearchShard> partition_search(const SearchSpec& raw, int shards) {
  if (shards < 1) throw std::invalid_argument("shard count must be at least 1");
  const SearchSpec spec = normalize(raw);
  check_guard(spec);
  const auto templates = build_templates(spec);
  const MaskTables masks(*spec.field);

  int max_slots = 0;
  int depth = 1;
  for (const auto& t : templates) {
    max_slots = std::max(max_slots, static_cast<int>(t.slots.size()));
    depth = std::max(depth, t.row2_slots);
  }
  depth = std::min(depth, max_slots);

  std::vector<SearchPrefix> frontier;
  const std::size_t wanted = 4 * static_cast<std::size_t>(shards);
  for (;;) {
    frontier.clear();
    for (int i = 0; i < static_cast<int>(templates.size()); ++i) {
      Engine engine(spec, templates[static_cast<std::size_t>(i)], masks);
      if (!engine.init()) continue;
      engine.enumerate_prefixes(depth, i, frontier);
    }
    if (shards == 1 || frontier.size() >= wanted || depth >= max_slots) break;
    ++depth;
  }

  std::vector<SearchShard> out(static_cast<std::size_t>(shards));
  for (int i = 0; i < shards; ++i) {
    out[static_cast<std::size_t>(i)].spec = spec;
    out[static_cast<std::size_t>(i)].index = i;
    out[static_cast<std::size_t>(i)].count = shards;
  }
  for (std::size_t k = 0; k < frontier.size(); ++k) {
    out[k % static_cast<std::size_t>(shards)].prefixes.push_back(std::move(frontier[k]));
  }
  return out;
}

SearchResult merge_results(std::vector<SearchResult> parts, const SearchSpec& raw) {
  const SearchSpec spec = normalize(raw);
  SearchResult merged;
  for (auto& part : parts) {
    merged.count += part.count;
    merged.nodes_visited += part.nodes_visited;
    merged.elapsed += part.elapsed;
    for (auto& m : part.matrices) merged.matrices.push_back(std::move(m));
  }
  sort_results(merged, spec);
  return merged;
}

SearchResult run_search_parallel(const SearchSpec& spec, int shards, int jobs, const ProgressFn& progress) {
  const auto start = std::chrono::steady_clock::now();
  auto plan = partition_search(spec, shards);
  std::vector<SearchResult> results(plan.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < plan.size(); i = next++) results[i] = run_shard(plan[i], progress);
  };
  const int workers = std::clamp(jobs, 1, static_cast<int>(plan.size()));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  auto merged = merge_results(std::move(results), spec);
  merged.elapsed = std::chrono::steady_clock::now() - start;
  return merged;
}

namespace {

SearchSpec spec_for(const FieldPtr& field, SearchMode mode) {
  SearchSpec spec;
  spec.field = field;
  spec.mode = mode;
  return spec;
}

}  // namespace

SearchResult search_reduced(const FieldPtr& field) { return run_search(spec_for(field, SearchMode::reduced)); }

SearchResult search_reduced(const FieldPtr& field, const ElementOrder& order) {
  auto spec = spec_for(field, SearchMode::reduced);
  spec.order = order;
  return run_search(spec);
}

SearchResult search_type_q_minus_1(const FieldPtr& field) {
  return run_search(spec_for(field, SearchMode::type_q_minus_1));
}

SearchResult search_symmetric_reduced(const FieldPtr& field) {
  return run_search(spec_for(field, SearchMode::symmetric_reduced));
}

SearchResult search_linear(const FieldPtr& field, int s, int t, std::uint64_t node_ceiling) {
  auto spec = spec_for(field, SearchMode::general_linear);
  spec.s = s;
  spec.t = t;
  spec.node_ceiling = node_ceiling;
  return run_search(spec);
}

}  // namespace aont
