#include "edgeideal/max_clique.hpp"

#include <algorithm>
#include <bit>

#include "edgeideal/errors.hpp"

namespace edgeideal {
namespace {

class Bits {
 public:
  explicit Bits(std::size_t n = 0) : w_((n + 63) / 64, 0) {}
  void set(std::size_t i) { w_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { w_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  bool test(std::size_t i) const { return (w_[i / 64] >> (i % 64)) & 1u; }
  bool none() const {
    return std::all_of(w_.begin(), w_.end(), [](std::uint64_t x) { return x == 0; });
  }
  Bits operator&(const Bits& o) const {
    Bits r = *this;
    for (std::size_t k = 0; k < w_.size(); ++k) r.w_[k] &= o.w_[k];
    return r;
  }
  Bits minus(const Bits& o) const {
    Bits r = *this;
    for (std::size_t k = 0; k < w_.size(); ++k) r.w_[k] &= ~o.w_[k];
    return r;
  }
  // Lowest set position; only called on non-empty sets.
  std::size_t first() const {
    std::size_t k = 0;
    while (w_[k] == 0) ++k;
    return k * 64 + static_cast<std::size_t>(std::countr_zero(w_[k]));
  }
  template <typename F>
  void for_each(F f) const {
    for (std::size_t k = 0; k < w_.size(); ++k)
      for (std::uint64_t x = w_[k]; x; x &= x - 1) f(k * 64 + static_cast<std::size_t>(std::countr_zero(x)));
  }

 private:
  std::vector<std::uint64_t> w_;
};

class Search {
 public:
  Search(const std::vector<std::vector<bool>>& adj, std::uint64_t budget) : budget_(budget) {
    const std::size_t n = adj.size();
    nbr_.assign(n, Bits(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j && adj[i][j]) nbr_[i].set(j);
  }

  std::vector<int> run() {
    Bits all(nbr_.size());
    for (std::size_t i = 0; i < nbr_.size(); ++i) all.set(i);
    if (!nbr_.empty()) expand(all);
    std::sort(best_.begin(), best_.end());
    return best_;
  }

 private:
  // Greedy sequential coloring of p; order[k] carries color bound[k], ascending.
  void color(const Bits& p, std::vector<int>& order, std::vector<int>& bound) const {
    Bits uncolored = p;
    int c = 0;
    while (!uncolored.none()) {
      ++c;
      Bits q = uncolored;
      while (!q.none()) {
        const std::size_t v = q.first();
        q.reset(v);
        q = q.minus(nbr_[v]);
        uncolored.reset(v);
        order.push_back(static_cast<int>(v));
        bound.push_back(c);
      }
    }
  }

  void expand(Bits p) {
    if (++nodes_ > budget_) throw ResourceError("maximum clique search exceeded its node budget");
    std::vector<int> order, bound;
    color(p, order, bound);
    for (std::size_t k = order.size(); k-- > 0;) {
      if (current_.size() + static_cast<std::size_t>(bound[k]) <= best_.size()) return;
      const auto v = static_cast<std::size_t>(order[k]);
      current_.push_back(static_cast<int>(v));
      const Bits next = p & nbr_[v];
      if (next.none()) {
        if (current_.size() > best_.size()) best_ = current_;
      } else {
        expand(next);
      }
      current_.pop_back();
      p.reset(v);
    }
  }

  std::vector<Bits> nbr_;
  std::vector<int> current_, best_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

std::vector<int> maximum_clique(const std::vector<std::vector<bool>>& adjacent, std::uint64_t node_budget) {
  return Search(adjacent, node_budget).run();
}

}  // namespace edgeideal
