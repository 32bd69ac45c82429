// Copyright 2026 The clalg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "clalg/search.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <thread>

#include "clalg/validator.hpp"

namespace clalg {

SizeOutOfRange::SizeOutOfRange(std::size_t n, std::size_t cap)
    : Error("size " + std::to_string(n) + " outside the supported range 2.." + std::to_string(cap)) {}

std::string CanonicalForm::to_string() const {
  // n;order bits;bot zero one;mult cells;imp cells
  if (code.empty()) return {};
  const std::size_t n = code[0];
  const std::size_t order_bits = n * (n - 1) / 2;
  std::string out = std::to_string(n) + ";";
  std::size_t i = 1;
  auto digits = [&](std::size_t count) {
    for (std::size_t k = 0; k < count && i < code.size(); ++k, ++i) {
      if (n > 10 && k > 0) out += ',';
      out += std::to_string(code[i]);
    }
  };
  digits(order_bits);
  out += ";";
  digits(3);
  out += ";";
  digits(n * n);
  out += ";";
  digits(n * n);
  return out;
}

AlgebraCandidate relabeled(const AlgebraCandidate& c, std::span<const ElementId> perm) {
  const std::size_t n = c.size();
  AlgebraCandidate r;
  r.name = c.name;
  r.elements.resize(n);
  for (std::size_t x = 0; x < n; ++x) r.elements[perm[x].index()] = c.elements[x];
  for (const auto& [lo, hi] : c.covers) r.covers.emplace_back(perm[lo.index()], perm[hi.index()]);
  r.order = c.order.permuted(perm);
  auto map_table = [&](const OperationTable& t) {
    OperationTable out(n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        out.set(perm[x], perm[y], perm[t.at(ElementId(x), ElementId(y)).index()]);
      }
    }
    return out;
  };
  r.mult = map_table(c.mult);
  if (c.imp) r.imp = map_table(*c.imp);
  r.bot = perm[c.bot.index()];
  r.zero = perm[c.zero.index()];
  r.one = perm[c.one.index()];
  return r;
}

std::vector<std::vector<ElementId>> canonical_labelings(const OrderRelation& order) {
  const std::size_t n = order.size();
  std::vector<std::uint8_t> best;
  std::vector<std::uint8_t> current;
  std::vector<std::vector<ElementId>> winners;
  std::vector<ElementId> seq;
  std::uint64_t placed = 0;

  std::vector<std::uint64_t> strictly_below(n);
  for (std::size_t e = 0; e < n; ++e) {
    strictly_below[e] = order.down_set(ElementId(e)).bits() & ~(std::uint64_t{1} << e);
  }

  std::function<void()> extend = [&]() {
    const std::size_t pos = seq.size();
    if (pos == n) {
      if (best.empty() && winners.empty()) {
        best = current;
        winners.push_back(seq);
      } else if (current < best) {
        best = current;
        winners.assign(1, seq);
      } else if (current == best) {
        winners.push_back(seq);
      }
      return;
    }
    for (std::size_t e = 0; e < n; ++e) {
      if ((placed >> e) & 1U) continue;
      if ((strictly_below[e] & ~placed) != 0) continue;
      const std::size_t mark = current.size();
      for (std::size_t p = 0; p < pos; ++p) current.push_back(order.leq(seq[p], ElementId(e)) ? 1 : 0);
      const bool worse = !winners.empty() &&
                         std::lexicographical_compare(best.begin(), best.begin() + static_cast<std::ptrdiff_t>(current.size()),
                                                      current.begin(), current.end());
      if (!worse) {
        seq.push_back(ElementId(e));
        placed |= std::uint64_t{1} << e;
        extend();
        placed &= ~(std::uint64_t{1} << e);
        seq.pop_back();
      }
      current.resize(mark);
    }
  };
  extend();
  return winners;
}

namespace {

std::vector<std::uint8_t> encode(const Structure& alg, std::span<const ElementId> seq) {
  const std::size_t n = alg.size();
  std::vector<std::size_t> label(n);
  for (std::size_t p = 0; p < n; ++p) label[seq[p].index()] = p;
  std::vector<std::uint8_t> code;
  code.reserve(4 + n * (n - 1) / 2 + 2 * n * n);
  code.push_back(static_cast<std::uint8_t>(n));
  for (std::size_t q = 1; q < n; ++q) {
    for (std::size_t p = 0; p < q; ++p) code.push_back(alg.leq(seq[p], seq[q]) ? 1 : 0);
  }
  code.push_back(static_cast<std::uint8_t>(label[alg.bot().index()]));
  code.push_back(static_cast<std::uint8_t>(label[alg.zero().index()]));
  code.push_back(static_cast<std::uint8_t>(label[alg.one().index()]));
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) code.push_back(static_cast<std::uint8_t>(label[alg.mult(seq[p], seq[q]).index()]));
  }
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) code.push_back(static_cast<std::uint8_t>(label[alg.imp(seq[p], seq[q]).index()]));
  }
  return code;
}

std::vector<ElementId> inverse(std::span<const ElementId> seq) {
  std::vector<ElementId> perm(seq.size());
  for (std::size_t p = 0; p < seq.size(); ++p) perm[seq[p].index()] = ElementId(p);
  return perm;
}

}  // namespace

CanonicalForm canonical_form(const Structure& alg, std::span<const std::vector<ElementId>> labelings) {
  CanonicalForm best;
  for (const auto& seq : labelings) {
    auto code = encode(alg, seq);
    if (best.code.empty() || code < best.code) best.code = std::move(code);
  }
  return best;
}

CanonicalForm canonical_form(const Structure& alg) {
  const auto labelings = canonical_labelings(alg.order());
  return canonical_form(alg, labelings);
}

std::vector<OrderRelation> enumerate_lattices(std::size_t n) {
  if (n < 2 || n > kHardMaxSearchSize) throw SizeOutOfRange(n, kHardMaxSearchSize);
  std::map<std::vector<std::uint8_t>, OrderRelation> found;
  // down[e]: elements <= e. Labels are a linear extension, so only smaller
  // labels can lie below e; 0 is the bottom and n-1 the top.
  std::vector<std::uint64_t> down(n, 0);
  down[0] = 1;

  std::function<void(std::size_t)> place = [&](std::size_t k) {
    if (k == n - 1) {
      down[k] = Subset::mask_for(n);
      OrderRelation r(n);
      for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t x = 0; x < n; ++x) r.set_leq(ElementId(x), ElementId(y), (down[y] >> x) & 1U);
      }
      const auto labelings = canonical_labelings(r);
      const auto canon = r.permuted(inverse(labelings.front()));
      std::vector<std::uint8_t> key;
      for (std::size_t q = 1; q < n; ++q) {
        for (std::size_t p = 0; p < q; ++p) key.push_back(canon.leq(ElementId(p), ElementId(q)) ? 1 : 0);
      }
      found.emplace(std::move(key), canon);
      return;
    }
    const std::uint64_t prefix = Subset::mask_for(k);
    for (std::uint64_t s = 1; s <= prefix; s += 2) {  // bit 0 always set
      bool down_closed = true;
      for (std::uint64_t b = s; b != 0 && down_closed; b &= b - 1) {
        const auto e = static_cast<std::size_t>(std::countr_zero(b));
        down_closed = (down[e] & ~s) == 0;
      }
      if (!down_closed) continue;
      // The prefix {0..k} is a down-set of the final lattice, so every pair
      // in it needs a greatest lower bound already.
      bool meets = true;
      for (std::size_t j = 0; j < k && meets; ++j) {
        const std::uint64_t lower = s & down[j];
        bool has_max = false;
        for (std::uint64_t b = lower; b != 0; b &= b - 1) {
          const auto c = static_cast<std::size_t>(std::countr_zero(b));
          if ((lower & ~down[c]) == 0) {
            has_max = true;
            break;
          }
        }
        meets = has_max;
      }
      if (!meets) continue;
      down[k] = s | (std::uint64_t{1} << k);
      place(k + 1);
    }
    down[k] = 0;
  };
  place(1);

  std::vector<OrderRelation> out;
  out.reserve(found.size());
  for (auto& [key, order] : found) out.push_back(std::move(order));
  return out;
}

namespace {

constexpr std::uint8_t kUnset = 0xFF;

/// Backtracking over commutative multiplication tables on a fixed lattice.
/// Every constraint applied is a consequence of the CL axioms:
///   x*bot = bot, 1*x = x, commutativity, monotonicity, x*(y v z) = x*y v x*z,
///   associativity on fully assigned triples, and on every completed row x
///   the residual ~x = max{ w : x*w <= 0 } must exist and behave as an
///   involution on the rows completed so far.
class Completion {
 public:
  Completion(const OrderRelation& lattice, ElementId zero, ElementId one)
      : n_(lattice.size()), order_(lattice), zero_(zero.index()), one_(one.index()) {
    bot_ = lattice.minimum()->index();
    join_.resize(n_ * n_);
    for (std::size_t x = 0; x < n_; ++x) {
      for (std::size_t y = 0; y < n_; ++y) join_[x * n_ + y] = lattice.join(ElementId(x), ElementId(y)).index();
    }
    for (std::size_t x = 0; x < n_; ++x) {
      for (std::size_t y = 0; y < n_; ++y) leq_[x][y] = lattice.leq(ElementId(x), ElementId(y));
    }
  }

  std::vector<FiniteCLAlgebra> run() {
    std::vector<FiniteCLAlgebra> out;
    if (n_ == 1) {
      emit_leaf(out);
      return out;
    }
    if (one_ == bot_) return out;  // x = x*1 = x*bot = bot would force n = 1
    cells_.assign(n_ * n_, kUnset);
    remaining_.assign(n_, n_);
    neg_.assign(n_, kUnset);
    for (std::size_t x = 0; x < n_; ++x) {
      set_cell(bot_, x, static_cast<std::uint8_t>(bot_));
      if (x != bot_) set_cell(one_, x, static_cast<std::uint8_t>(x));
    }
    for (std::size_t i = 0; i < n_; ++i) {
      if (i == bot_ || i == one_) continue;
      for (std::size_t j = i; j < n_; ++j) {
        if (j != bot_ && j != one_) free_.emplace_back(i, j);
      }
    }
    for (std::size_t x : {bot_, one_}) {
      if (!close_row(x)) return out;
    }
    search(0, out);
    return out;
  }

 private:
  std::uint8_t cell(std::size_t x, std::size_t y) const { return cells_[x * n_ + y]; }
  std::size_t join(std::size_t x, std::size_t y) const { return join_[x * n_ + y]; }
  bool leq(std::size_t x, std::size_t y) const { return leq_[x][y]; }

  void set_cell(std::size_t x, std::size_t y, std::uint8_t v) {
    cells_[x * n_ + y] = v;
    cells_[y * n_ + x] = v;
    --remaining_[x];
    if (x != y) --remaining_[y];
  }

  void clear_cell(std::size_t x, std::size_t y) {
    cells_[x * n_ + y] = kUnset;
    cells_[y * n_ + x] = kUnset;
    ++remaining_[x];
    if (x != y) ++remaining_[y];
  }

  bool monotone_with(std::size_t i, std::size_t j, std::size_t v) const {
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t b = 0; b < n_; ++b) {
        const std::uint8_t w = cell(a, b);
        if (w == kUnset) continue;
        if (leq(a, i) && leq(b, j) && !leq(w, v)) return false;
        if (leq(i, a) && leq(j, b) && !leq(v, w)) return false;
      }
    }
    return true;
  }

  bool row_preserves_joins(std::size_t x) const {
    for (std::size_t y = 0; y < n_; ++y) {
      const std::uint8_t xy = cell(x, y);
      if (xy == kUnset) continue;
      for (std::size_t z = y + 1; z < n_; ++z) {
        const std::uint8_t xz = cell(x, z);
        if (xz == kUnset) continue;
        const std::uint8_t xw = cell(x, join(y, z));
        if (xw != kUnset && xw != join(xy, xz)) return false;
      }
    }
    return true;
  }

  bool associative_so_far() const {
    for (std::size_t x = 0; x < n_; ++x) {
      for (std::size_t y = 0; y < n_; ++y) {
        const std::uint8_t xy = cell(x, y);
        if (xy == kUnset) continue;
        for (std::size_t z = 0; z < n_; ++z) {
          const std::uint8_t yz = cell(y, z);
          if (yz == kUnset) continue;
          const std::uint8_t left = cell(xy, z);
          const std::uint8_t right = cell(x, yz);
          if (left != kUnset && right != kUnset && left != right) return false;
        }
      }
    }
    return true;
  }

  // Computes ~x once row x is complete and checks it against the other known
  // negations.
  bool close_row(std::size_t x) {
    std::uint64_t residual = 0;
    for (std::size_t w = 0; w < n_; ++w) {
      if (leq(cell(x, w), zero_)) residual |= std::uint64_t{1} << w;
    }
    std::size_t top = n_;
    for (std::size_t w = 0; w < n_; ++w) {
      if (!((residual >> w) & 1U)) continue;
      bool above_all = true;
      for (std::size_t u = 0; u < n_ && above_all; ++u) {
        if (((residual >> u) & 1U) && !leq(u, w)) above_all = false;
      }
      if (above_all) {
        top = w;
        break;
      }
    }
    if (top == n_) return false;
    for (std::size_t y = 0; y < n_; ++y) {
      if (y != x && neg_[y] == top) return false;
    }
    neg_[x] = static_cast<std::uint8_t>(top);
    if (neg_[top] != kUnset && neg_[top] != x) {
      neg_[x] = kUnset;
      return false;
    }
    for (std::size_t y = 0; y < n_; ++y) {
      if (neg_[y] == x && top != y) {
        neg_[x] = kUnset;
        return false;
      }
    }
    return true;
  }

  void search(std::size_t k, std::vector<FiniteCLAlgebra>& out) {
    if (k == free_.size()) {
      emit_leaf(out);
      return;
    }
    const auto [i, j] = free_[k];
    for (std::size_t v = 0; v < n_; ++v) {
      if (!monotone_with(i, j, v)) continue;
      set_cell(i, j, static_cast<std::uint8_t>(v));
      std::vector<std::size_t> closed;
      bool ok = row_preserves_joins(i) && row_preserves_joins(j) && associative_so_far();
      for (std::size_t r : {i, j}) {
        if (ok && remaining_[r] == 0 && neg_[r] == kUnset) {
          ok = close_row(r);
          if (ok) closed.push_back(r);
        }
      }
      if (ok) search(k + 1, out);
      for (std::size_t r : closed) neg_[r] = kUnset;
      clear_cell(i, j);
    }
  }

  void emit_leaf(std::vector<FiniteCLAlgebra>& out) const {
    AlgebraCandidate c;
    c.name = "cl" + std::to_string(n_);
    for (std::size_t x = 0; x < n_; ++x) c.elements.push_back("e" + std::to_string(x));
    c.order = order_;
    c.covers = order_.covers();
    c.mult = OperationTable(n_);
    if (n_ > 1) {
      for (std::size_t x = 0; x < n_; ++x) {
        for (std::size_t y = 0; y < n_; ++y) c.mult.set(ElementId(x), ElementId(y), ElementId(cell(x, y)));
      }
    }
    c.bot = ElementId(bot_);
    c.zero = ElementId(zero_);
    c.one = ElementId(one_);
    auto outcome = validate(c);
    if (outcome.algebra) out.push_back(std::move(*outcome.algebra));
  }

  std::size_t n_;
  OrderRelation order_;
  std::size_t zero_, one_, bot_ = 0;
  std::vector<std::size_t> join_;
  std::array<std::array<bool, kMaxElements>, kMaxElements> leq_{};
  std::vector<std::uint8_t> cells_;
  std::vector<std::size_t> remaining_;
  std::vector<std::uint8_t> neg_;
  std::vector<std::pair<std::size_t, std::size_t>> free_;
};

}  // namespace

std::vector<FiniteCLAlgebra> complete_to_cl(const OrderRelation& lattice, ElementId zero, ElementId one) {
  const std::size_t n = lattice.size();
  if (n == 0 || zero.index() >= n || one.index() >= n) throw Error("designated element out of range");
  if (!lattice.is_partial_order() || !lattice.minimum()) throw Error("order is not a bounded-below partial order");
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      lattice.join(ElementId(x), ElementId(y));
      lattice.meet(ElementId(x), ElementId(y));
    }
  }
  return Completion(lattice, zero, one).run();
}

Census count_cl_algebras(const SearchConfig& config) {
  const std::size_t n = config.size;
  const std::size_t cap = config.allow_large ? kHardMaxSearchSize : kDefaultMaxSearchSize;
  if (n < 2 || n > cap) throw SizeOutOfRange(n, cap);

  Census census;
  census.size = n;
  if (config.lattice) {
    if (config.lattice->size() != n) throw Error("fixed lattice size does not match the configured size");
    census.lattices.push_back(*config.lattice);
  } else {
    census.lattices = enumerate_lattices(n);
  }

  struct Job {
    std::size_t lattice;
    ElementId zero, one;
  };
  std::vector<Job> jobs;
  std::vector<std::vector<std::vector<ElementId>>> labelings;
  for (std::size_t li = 0; li < census.lattices.size(); ++li) {
    labelings.push_back(canonical_labelings(census.lattices[li]));
    for (std::size_t z = 0; z < n; ++z) {
      for (std::size_t u = 0; u < n; ++u) jobs.push_back({li, ElementId(z), ElementId(u)});
    }
  }

  std::vector<std::vector<std::pair<CanonicalForm, FiniteCLAlgebra>>> results(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < jobs.size(); k = next++) {
      const Job& job = jobs[k];
      for (auto& alg : complete_to_cl(census.lattices[job.lattice], job.zero, job.one)) {
        auto form = canonical_form(alg, labelings[job.lattice]);
        results[k].emplace_back(std::move(form), std::move(alg));
      }
    }
  };
  const unsigned threads = std::max(1U, config.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  std::vector<std::map<CanonicalForm, FiniteCLAlgebra>> classes(census.lattices.size());
  for (std::size_t k = 0; k < jobs.size(); ++k) {
    for (auto& [form, alg] : results[k]) classes[jobs[k].lattice].try_emplace(std::move(form), std::move(alg));
  }
  for (std::size_t li = 0; li < classes.size(); ++li) {
    census.rows.push_back({n, li, classes[li].size()});
    census.total += classes[li].size();
    if (config.count_only) continue;
    for (auto& [form, alg] : classes[li]) {
      if (config.max_results && census.algebras.size() >= *config.max_results) {
        census.truncated = true;
        break;
      }
      census.algebras.push_back({li, form, std::move(alg)});
    }
  }
  return census;
}

}  // namespace clalg
