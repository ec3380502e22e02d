#include "wknots/echelon.hpp"

#include <algorithm>
#include <map>

namespace wk {

SparseVec make_sparse(std::vector<std::pair<std::size_t, Rational>> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec out;
  out.reserve(entries.size());
  for (auto& [col, val] : entries) {
    if (!out.empty() && out.back().first == col) {
      out.back().second += val;
      if (out.back().second == 0) out.pop_back();
    } else if (val != 0) {
      out.emplace_back(col, std::move(val));
    }
  }
  return out;
}

namespace {

// a - factor * b, both sorted.
SparseVec axpy(const SparseVec& a, const Rational& factor, const SparseVec& b) {
  SparseVec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  Rational tmp;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      tmp = -factor * b[j].second;
      out.emplace_back(b[j].first, tmp);
      ++j;
    } else {
      tmp = a[i].second - factor * b[j].second;
      if (tmp != 0) out.emplace_back(a[i].first, tmp);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

bool RowReducer::add(SparseVec row) {
  for (const auto& [col, val] : row)
    if (col >= dimension_) throw Error("row entry outside the ambient dimension");
  while (!row.empty()) {
    auto it = rows_.find(row.front().first);
    if (it == rows_.end()) break;
    Rational lead = row.front().second;
    row = axpy(row, lead, it->second);
  }
  if (row.empty()) return false;
  Rational inv = 1 / row.front().second;
  for (auto& [col, val] : row) val *= inv;
  const std::size_t lead_col = row.front().first;
  rows_.emplace(lead_col, std::move(row));
  return true;
}

SparseVec RowReducer::normal_form(const SparseVec& v) const {
  std::map<std::size_t, Rational> work;
  for (const auto& [col, val] : v) work.emplace(col, val);
  for (auto it = work.begin(); it != work.end();) {
    auto pr = rows_.find(it->first);
    if (pr == rows_.end()) {
      ++it;
      continue;
    }
    Rational factor = it->second;
    const SparseVec& prow = pr->second;
    for (std::size_t k = 1; k < prow.size(); ++k) {
      auto [slot, inserted] = work.try_emplace(prow[k].first, 0);
      slot->second -= factor * prow[k].second;
      if (slot->second == 0) work.erase(slot);
    }
    it = work.erase(it);
  }
  SparseVec out;
  out.reserve(work.size());
  for (auto& [col, val] : work) out.emplace_back(col, std::move(val));
  return out;
}

std::vector<std::size_t> RowReducer::free_columns() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < dimension_; ++c)
    if (!rows_.count(c)) out.push_back(c);
  return out;
}

EchelonForm RowReducer::to_rref() const {
  EchelonForm form;
  form.dimension = dimension_;
  for (const auto& [col, row] : rows_) form.pivots.push_back(col);
  std::sort(form.pivots.begin(), form.pivots.end());
  for (std::size_t p : form.pivots) {
    const SparseVec& row = rows_.at(p);
    SparseVec tail(row.begin() + 1, row.end());
    SparseVec reduced = normal_form(tail);
    SparseVec full;
    full.reserve(reduced.size() + 1);
    full.emplace_back(p, Rational(1));
    for (auto& e : reduced) full.push_back(std::move(e));
    form.rows.push_back(std::move(full));
  }
  return form;
}

EchelonForm echelon_reduce(std::span<const SparseVec> rows, std::size_t dimension) {
  RowReducer reducer(dimension);
  for (const auto& r : rows) reducer.add(make_sparse(std::vector<std::pair<std::size_t, Rational>>(r.begin(), r.end())));
  return reducer.to_rref();
}

}  // namespace wk
