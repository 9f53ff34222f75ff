#include "hyperarr/linalg.hpp"

#include <algorithm>
#include <unordered_map>

namespace hyperarr {

SparseVector SparseVector::from_entries(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
  SparseVector v;
  for (auto& [i, c] : entries) {
    if (!v.e_.empty() && v.e_.back().first == i)
      v.e_.back().second += c;
    else
      v.e_.emplace_back(i, std::move(c));
  }
  std::erase_if(v.e_, [](const Entry& x) { return x.second == 0; });
  return v;
}

mpq_class SparseVector::at(std::size_t i) const {
  auto it = std::lower_bound(e_.begin(), e_.end(), i, [](const Entry& x, std::size_t k) { return x.first < k; });
  return it != e_.end() && it->first == i ? it->second : mpq_class(0);
}

void SparseVector::add_scaled(const SparseVector& o, const mpq_class& a) {
  if (a == 0 || o.e_.empty()) return;
  if (&o == this) {
    *this *= a + 1;
    return;
  }
  std::vector<Entry> out;
  out.reserve(e_.size() + o.e_.size());
  auto x = e_.begin();
  auto y = o.e_.begin();
  while (x != e_.end() || y != o.e_.end()) {
    if (y == o.e_.end() || (x != e_.end() && x->first < y->first)) {
      out.push_back(std::move(*x++));
    } else if (x == e_.end() || y->first < x->first) {
      out.emplace_back(y->first, a * y->second);
      ++y;
    } else {
      mpq_class c = x->second + a * y->second;
      if (c != 0) out.emplace_back(x->first, std::move(c));
      ++x;
      ++y;
    }
  }
  e_ = std::move(out);
}

SparseVector& SparseVector::operator*=(const mpq_class& a) {
  if (a == 0) {
    e_.clear();
    return *this;
  }
  for (auto& [i, c] : e_) c *= a;
  return *this;
}

SparseVector RowEchelon::reduce(const SparseVector& v) const {
  // rows vanish at each other's pivots, so the pivot coefficients of v are final
  SparseVector r = v;
  for (const auto& [i, c] : v.entries()) {
    auto it = rows_.find(i);
    if (it != rows_.end()) r.add_scaled(it->second.first, -c);
  }
  return r;
}

bool RowEchelon::insert(const SparseVector& v) {
  const std::size_t id = inserted_++;
  SparseVector r = v;
  SparseVector comb = SparseVector::unit(id);
  for (const auto& [i, c] : v.entries()) {
    auto it = rows_.find(i);
    if (it == rows_.end()) continue;
    r.add_scaled(it->second.first, -c);
    comb.add_scaled(it->second.second, -c);
  }
  if (r.empty()) {
    relations_.push_back(std::move(comb));
    return false;
  }
  const std::size_t p = r.first_index();
  mpq_class inv = 1 / r.entries().front().second;
  r *= inv;
  comb *= inv;
  for (auto& [q, row] : rows_) {
    mpq_class c = row.first.at(p);
    if (c == 0) continue;
    row.first.add_scaled(r, -c);
    row.second.add_scaled(comb, -c);
  }
  rows_.emplace(p, std::make_pair(std::move(r), std::move(comb)));
  return true;
}

std::optional<SparseVector> RowEchelon::solve(const SparseVector& target) const {
  SparseVector r = target;
  SparseVector x;
  for (const auto& [i, c] : target.entries()) {
    auto it = rows_.find(i);
    if (it == rows_.end()) continue;
    r.add_scaled(it->second.first, -c);
    x.add_scaled(it->second.second, c);
  }
  if (!r.empty()) return std::nullopt;
  return x;
}

std::vector<std::size_t> RowEchelon::pivots() const {
  std::vector<std::size_t> out;
  for (const auto& [p, row] : rows_) out.push_back(p);
  return out;
}

std::size_t rank_of(const std::vector<SparseVector>& vectors) {
  RowEchelon e;
  for (const auto& v : vectors) e.insert(v);
  return e.rank();
}

std::vector<SparseVector> kernel_basis(const std::vector<SparseVector>& images) {
  RowEchelon e;
  for (const auto& v : images) e.insert(v);
  return e.relations();
}

ColumnReduction reduce_columns(std::vector<SparseVector> columns) {
  ColumnReduction out;
  out.low.resize(columns.size());
  std::unordered_map<std::size_t, std::size_t> owner; // low row -> reduced column
  for (std::size_t j = 0; j < columns.size(); ++j) {
    SparseVector& col = columns[j];
    while (!col.empty()) {
      auto it = owner.find(col.last_index());
      if (it == owner.end()) break;
      const SparseVector& prev = columns[it->second];
      col.add_scaled(prev, -(col.entries().back().second / prev.entries().back().second));
    }
    if (!col.empty()) {
      out.low[j] = col.last_index();
      owner.emplace(col.last_index(), j);
    }
  }
  return out;
}

} // namespace hyperarr
