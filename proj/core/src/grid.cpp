#include "disksssp/grid.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <tuple>

namespace disksssp {

namespace {

std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ull;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebull;
  x ^= x >> 31;
  return x;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  return q - ((a % b != 0 && (a < 0) != (b < 0)) ? 1 : 0);
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

}  // namespace

std::size_t CellKeyHash::operator()(const CellKey& k) const {
  std::uint64_t h = mix64(static_cast<std::uint64_t>(k.level) + 0x9e3779b97f4a7c15ull);
  h = mix64(h ^ static_cast<std::uint64_t>(k.ix));
  h = mix64(h ^ static_cast<std::uint64_t>(k.iy));
  return static_cast<std::size_t>(h);
}

double xi_coord(double x) { return x * std::sqrt(2.0); }

std::int64_t cell_index(double xi, int level) {
  return static_cast<std::int64_t>(std::floor(std::ldexp(xi, -level)));
}

CellKey cell_key_at(double x, double y, int level) {
  return CellKey{level, cell_index(xi_coord(x), level), cell_index(xi_coord(y), level)};
}

int level_mid(double r) { return std::ilogb(r / 8.0); }

int GridIndex::find(const CellKey& key) const {
  auto it = index_.find(key);
  return it == index_.end() ? -1 : it->second;
}

int GridIndex::get_or_create(const CellKey& key) {
  auto [it, inserted] = index_.try_emplace(key, cell_count());
  if (inserted) {
    cells_.emplace_back();
    cells_.back().key = key;
  }
  return it->second;
}

void GridIndex::build(const DiskInstance& inst, WeightedSiteSet::Strategy strategy) {
  strategy_ = strategy;
  cells_.clear();
  index_.clear();
  levels_.clear();
  const int n = inst.n();
  mid_cell_.assign(n, -1);

  std::vector<int> lev(n);
  for (int v = 0; v < n; ++v) lev[v] = level_mid(inst.vertices[v].r);
  min_mid_level_ = *std::min_element(lev.begin(), lev.end());
  max_mid_level_ = *std::max_element(lev.begin(), lev.end());

  // Visiting vertices in ascending id keeps every mid/small list sorted.
  for (int v = 0; v < n; ++v) {
    int idx = get_or_create(cell_key_at(inst.vertices[v].x, inst.vertices[v].y, lev[v]));
    cells_[idx].mid.push_back(v);
    mid_cell_[v] = idx;
  }
  for (int v = 0; v < n; ++v)
    for (int j = lev[v] + 1; j <= max_mid_level_; ++j) {
      int idx = get_or_create(cell_key_at(inst.vertices[v].x, inst.vertices[v].y, j));
      cells_[idx].small.push_back(v);
    }

  std::vector<std::tuple<int, std::int64_t, std::int64_t, int>> order;
  order.reserve(cells_.size());
  for (int i = 0; i < cell_count(); ++i)
    order.emplace_back(cells_[i].key.level, cells_[i].key.ix, cells_[i].key.iy, i);
  std::sort(order.begin(), order.end());
  for (const auto& [level, ix, iy, idx] : order) {
    LevelIndex& li = levels_[level];
    if (li.xs.empty() || li.xs.back() != ix) {
      li.xs.push_back(ix);
      li.cols.emplace_back();
    }
    li.cols.back().emplace_back(iy, idx);
  }

  boxplus_cache_.assign(cells_.size(), {});
  boxplus_ready_.assign(cells_.size(), 0);
}

void GridIndex::scan_range(int level, std::int64_t xlo, std::int64_t xhi, std::int64_t ylo,
                           std::int64_t yhi, std::vector<int>& out) const {
  auto it = levels_.find(level);
  if (it == levels_.end()) return;
  const LevelIndex& li = it->second;
  auto xb = std::lower_bound(li.xs.begin(), li.xs.end(), xlo);
  for (; xb != li.xs.end() && *xb <= xhi; ++xb) {
    const auto& col = li.cols[static_cast<std::size_t>(xb - li.xs.begin())];
    auto cb = std::lower_bound(
        col.begin(), col.end(), ylo,
        [](const std::pair<std::int64_t, int>& a, std::int64_t v) { return a.first < v; });
    for (; cb != col.end() && cb->first <= yhi; ++cb) out.push_back(cb->second);
  }
}

const std::vector<int>& GridIndex::boxplus(int idx) {
  if (boxplus_ready_[idx]) return boxplus_cache_[idx];
  const CellKey c = cells_[idx].key;
  // A level-j cell k lies inside the square of half-side 71*2^i centered on c iff
  // k*F >= 2*ix - 141 and (k+1)*F <= 2*ix + 143 per axis, with F = 2^(j-i+1).
  // Solving for k gives a closed index range per level.
  std::vector<int> out;
  scan_range(c.level - 1, 2 * c.ix - 141, 2 * c.ix + 142, 2 * c.iy - 141, 2 * c.iy + 142, out);
  scan_range(c.level, c.ix - 70, c.ix + 70, c.iy - 70, c.iy + 70, out);
  scan_range(c.level + 1, ceil_div(2 * c.ix - 141, 4), floor_div(2 * c.ix + 139, 4),
             ceil_div(2 * c.iy - 141, 4), floor_div(2 * c.iy + 139, 4), out);
  boxplus_cache_[idx] = std::move(out);
  boxplus_ready_[idx] = 1;
  return boxplus_cache_[idx];
}

void GridIndex::compute_larger_lists(const DiskInstance& inst) {
  // One nearest-site structure per candidate cell, built on demand. Sites carry
  // w = -r, so for a query point u the hit minimizes |uq| - r_q over the cell's mid
  // vertices q; testing the hit against u decides edge existence for the whole cell.
  std::vector<std::unique_ptr<WeightedSiteSet>> vor(cells_.size());
  auto vor_of = [&](int idx) -> WeightedSiteSet& {
    if (!vor[idx]) {
      std::vector<WeightedSite> sites;
      sites.reserve(cells_[idx].mid.size());
      for (int w : cells_[idx].mid) {
        const Vertex& vw = inst.vertices[w];
        sites.push_back(WeightedSite{vw.id, vw.x, vw.y, -vw.r});
      }
      vor[idx] = std::make_unique<WeightedSiteSet>(std::move(sites), strategy_);
    }
    return *vor[idx];
  };

  std::vector<int> cand;
  for (int ci = 0; ci < cell_count(); ++ci) {
    CellRecord& rec = cells_[ci];
    rec.larger.clear();
    if (rec.mid.empty()) continue;
    const CellKey c = rec.key;
    for (int j = c.level + 1; j <= max_mid_level_; ++j) {
      // c lies inside the 142-square of a level-j cell k iff
      // (2k - 141)*D <= 2*ix and 2*ix + 2 <= (2k + 143)*D per axis, with D = 2^(j-i).
      const std::int64_t d = std::int64_t{1} << (j - c.level);
      cand.clear();
      scan_range(j, ceil_div(2 * c.ix + 2 - 143 * d, 2 * d), floor_div(2 * c.ix + 141 * d, 2 * d),
                 ceil_div(2 * c.iy + 2 - 143 * d, 2 * d), floor_div(2 * c.iy + 141 * d, 2 * d),
                 cand);
      for (int cj : cand) {
        if (cells_[cj].mid.empty()) continue;
        for (int u : rec.mid) {
          const Vertex& vu = inst.vertices[u];
          NearestHit hit = vor_of(cj).nearest(vu.x, vu.y);
          if (hit.found() && is_edge(Vertex{hit.id, hit.x, hit.y, -hit.w}, vu)) {
            rec.larger.push_back(cj);
            break;
          }
        }
      }
    }
  }
}

}  // namespace disksssp
