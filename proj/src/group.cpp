#include "workbench/group.hpp"

#include <algorithm>
#include <numeric>

namespace workbench {

GroupPtr FiniteGroup::from_table(std::vector<std::vector<std::size_t>> table) {
  const std::size_t n = table.size();
  if (n == 0) throw InputError("group table is empty");
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->n_ = n;
  g->table_.reserve(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    if (table[x].size() != n) throw InputError("group table row " + std::to_string(x) + " has wrong length");
    for (auto v : table[x]) {
      if (v >= n) throw InputError("group table entry out of range in row " + std::to_string(x));
      g->table_.push_back(v);
    }
  }
  g->locate_identity_and_inverses();
  return g;
}

void FiniteGroup::locate_identity_and_inverses() {
  e_ = 0;
  for (std::size_t c = 0; c < n_; ++c) {
    bool ok = true;
    for (std::size_t x = 0; x < n_ && ok; ++x) ok = mul(c, x) == x && mul(x, c) == x;
    if (ok) {
      e_ = c;
      break;
    }
  }
  inv_.assign(n_, 0);
  for (std::size_t x = 0; x < n_; ++x) {
    inv_[x] = x;
    for (std::size_t y = 0; y < n_; ++y)
      if (mul(x, y) == e_ && mul(y, x) == e_) {
        inv_[x] = y;
        break;
      }
  }
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t x = 0; x < n_; ++x)
    for (std::size_t y = x + 1; y < n_; ++y)
      if (mul(x, y) != mul(y, x)) return false;
  return true;
}

std::vector<std::size_t> FiniteGroup::coordinates(std::size_t x) const {
  if (!cyclic_) throw InputError("group has no cyclic decomposition");
  std::vector<std::size_t> c(cyclic_->size());
  for (std::size_t k = c.size(); k-- > 0;) {
    c[k] = x % (*cyclic_)[k];
    x /= (*cyclic_)[k];
  }
  return c;
}

std::size_t FiniteGroup::pair(std::size_t g, std::size_t h) const {
  if (!left_) throw InputError("group is not a direct product");
  return g * right_->order() + h;
}

std::pair<std::size_t, std::size_t> FiniteGroup::split(std::size_t z) const {
  if (!left_) throw InputError("group is not a direct product");
  return {z / right_->order(), z % right_->order()};
}

GroupPtr cyclic(std::size_t n) {
  if (n == 0) throw InputError("cyclic group order must be positive");
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->n_ = n;
  g->table_.resize(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) g->table_[x * n + y] = (x + y) % n;
  g->e_ = 0;
  g->inv_.resize(n);
  for (std::size_t x = 0; x < n; ++x) g->inv_[x] = (n - x) % n;
  g->cyclic_ = std::vector<std::size_t>{n};
  return g;
}

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b) {
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  const std::size_t na = a->order(), nb = b->order(), n = na * nb;
  g->n_ = n;
  g->table_.resize(n * n);
  g->inv_.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    g->inv_[x] = a->inv(x / nb) * nb + b->inv(x % nb);
    for (std::size_t y = 0; y < n; ++y)
      g->table_[x * n + y] = a->mul(x / nb, y / nb) * nb + b->mul(x % nb, y % nb);
  }
  g->e_ = a->identity() * nb + b->identity();
  if (a->cyclic_decomposition() && b->cyclic_decomposition()) {
    auto d = *a->cyclic_decomposition();
    d.insert(d.end(), b->cyclic_decomposition()->begin(), b->cyclic_decomposition()->end());
    g->cyclic_ = d;
  }
  g->left_ = a;
  g->right_ = b;
  return g;
}

std::vector<std::size_t> permutation_of(std::size_t n, std::size_t index) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  for (std::size_t k = 0; k < index; ++k) std::next_permutation(p.begin(), p.end());
  return p;
}

GroupPtr symmetric_group(std::size_t n) {
  if (n == 0 || n > 6) throw InputError("symmetric_group supports 1 <= n <= 6");
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  auto index_of = [&](const std::vector<std::size_t>& q) {
    return static_cast<std::size_t>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  const std::size_t m = perms.size();
  std::vector<std::vector<std::size_t>> table(m, std::vector<std::size_t>(m));
  std::vector<std::size_t> r(n);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      for (std::size_t i = 0; i < n; ++i) r[i] = perms[a][perms[b][i]];
      table[a][b] = index_of(r);
    }
  return FiniteGroup::from_table(std::move(table));
}

DualGroup dual(const GroupPtr& g) {
  const auto& d = g->cyclic_decomposition();
  if (!d) throw InputError("dual requires a group given as a product of cyclic groups");
  if (!g->is_abelian()) throw InputError("dual requires an abelian group");
  GroupPtr h = cyclic((*d)[0]);
  for (std::size_t k = 1; k < d->size(); ++k) h = direct_product(h, cyclic((*d)[k]));
  return DualGroup{g, h};
}

Complex pairing(const FiniteGroup& g, std::size_t x, std::size_t xi) {
  if (x >= g.order() || xi >= g.order()) throw InputError("pairing: index out of range");
  const auto& d = *g.cyclic_decomposition();
  auto cx = g.coordinates(x), cxi = g.coordinates(xi);
  // Accumulate as an exact fraction of a full turn per factor to keep roots of unity clean.
  double t = 0.0;
  for (std::size_t k = 0; k < d.size(); ++k)
    t += static_cast<double>((cx[k] * cxi[k]) % d[k]) / static_cast<double>(d[k]);
  return phase(t);
}

Report verify_group(const FiniteGroup& g, double tol) {
  Report r;
  const std::size_t n = g.order(), e = g.identity();
  auto b = [](bool ok) { return ok ? 0.0 : 1.0; };
  r.add(sweep("group.associativity", "(xy)z = x(yz)", {n, n, n}, tol, [&](auto t) {
    return b(g.mul(g.mul(t[0], t[1]), t[2]) == g.mul(t[0], g.mul(t[1], t[2])));
  }));
  r.add(sweep("group.identity", "ex = x = xe", {n}, tol,
              [&](auto t) { return b(g.mul(e, t[0]) == t[0] && g.mul(t[0], e) == t[0]); }));
  r.add(sweep("group.inverse", "x x^-1 = e = x^-1 x", {n}, tol, [&](auto t) {
    return b(g.mul(t[0], g.inv(t[0])) == e && g.mul(g.inv(t[0]), t[0]) == e);
  }));
  if (const auto& d = g.cyclic_decomposition()) {
    std::size_t prod = 1;
    for (auto k : *d) prod *= k;
    r.add(single("group.decomposition_order", "n = prod n_k", b(prod == n), tol));
    r.add(sweep("group.decomposition_law", "mul agrees with componentwise addition", {n, n}, tol,
                [&](auto t) {
                  auto cx = g.coordinates(t[0]), cy = g.coordinates(t[1]);
                  auto cz = g.coordinates(g.mul(t[0], t[1]));
                  for (std::size_t k = 0; k < d->size(); ++k)
                    if ((cx[k] + cy[k]) % (*d)[k] != cz[k]) return 1.0;
                  return 0.0;
                }));
  }
  return r;
}

}  // namespace workbench
