#include "hookline/tableau.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "hookline/error.hpp"

namespace hookline {

StandardTableau::StandardTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  int n = 0;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const auto& row = rows_[r];
    if (row.empty()) throw InputError("tableau row " + std::to_string(r + 1) + " is empty");
    if (r > 0 && row.size() > rows_[r - 1].size())
      throw InputError("tableau row lengths must weakly decrease");
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0 && row[c] <= row[c - 1])
        throw InputError("tableau row " + std::to_string(r + 1) + " is not strictly increasing");
      if (r > 0 && row[c] <= rows_[r - 1][c])
        throw InputError("tableau column " + std::to_string(c + 1) +
                         " is not strictly increasing");
    }
    n += static_cast<int>(row.size());
  }
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (const auto& row : rows_)
    for (int v : row) {
      if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
        throw InputError("tableau entries must be exactly 1.." + std::to_string(n));
      seen[static_cast<std::size_t>(v)] = true;
    }
}

StandardTableau tableau_from_trusted(std::vector<std::vector<int>> rows) {
  return StandardTableau(std::move(rows), StandardTableau::Trusted{});
}

int StandardTableau::size() const {
  int n = 0;
  for (const auto& row : rows_) n += static_cast<int>(row.size());
  return n;
}

std::vector<int> StandardTableau::shape() const {
  std::vector<int> s;
  for (const auto& row : rows_) s.push_back(static_cast<int>(row.size()));
  return s;
}

int StandardTableau::row_of(int v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r)
    if (std::binary_search(rows_[r].begin(), rows_[r].end(), v)) return static_cast<int>(r);
  return -1;
}

StandardTableau parse_tableau(std::string_view text) {
  if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) return StandardTableau{};
  std::vector<std::vector<int>> rows;
  std::istringstream chunks{std::string(text)};
  std::string chunk;
  while (std::getline(chunks, chunk, ';')) {
    std::vector<int> row;
    std::istringstream in{chunk};
    std::string token;
    while (in >> token) {
      int v = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
      if (ec != std::errc{} || ptr != token.data() + token.size())
        throw InputError("non-integer token '" + token + "' in tableau");
      row.push_back(v);
    }
    rows.push_back(std::move(row));
  }
  return StandardTableau(std::move(rows));
}

std::string to_string(const StandardTableau& t) {
  std::ostringstream out;
  for (std::size_t r = 0; r < t.rows().size(); ++r) {
    if (r) out << "; ";
    for (std::size_t c = 0; c < t.rows()[r].size(); ++c) out << (c ? " " : "") << t.rows()[r][c];
  }
  return out.str();
}

TableauPair rs_correspondence(const Permutation& p) {
  std::vector<std::vector<int>> ins, rec;
  for (int i = 1; i <= p.size(); ++i) {
    int x = p(i);
    std::size_t r = 0;
    for (;; ++r) {
      if (r == ins.size()) {
        ins.push_back({x});
        rec.push_back({i});
        break;
      }
      auto& row = ins[r];
      auto it = std::upper_bound(row.begin(), row.end(), x);
      if (it == row.end()) {
        row.push_back(x);
        rec[r].push_back(i);
        break;
      }
      std::swap(*it, x);
    }
  }
  return {tableau_from_trusted(std::move(ins)), tableau_from_trusted(std::move(rec))};
}

Permutation rs_inverse(const StandardTableau& insertion, const StandardTableau& recording) {
  if (insertion.shape() != recording.shape())
    throw InputError("tableaux have different shapes");
  auto ins = insertion.rows();
  const int n = recording.size();
  std::vector<int> entries(static_cast<std::size_t>(n));
  for (int i = n; i >= 1; --i) {
    const int r0 = recording.row_of(i);
    // i is the largest remaining recording entry, so it ends its row and the
    // matching insertion cell is a corner.
    int x = ins[static_cast<std::size_t>(r0)].back();
    ins[static_cast<std::size_t>(r0)].pop_back();
    for (int r = r0 - 1; r >= 0; --r) {
      auto& row = ins[static_cast<std::size_t>(r)];
      auto it = std::lower_bound(row.begin(), row.end(), x);
      --it;  // largest entry smaller than x
      std::swap(*it, x);
    }
    entries[static_cast<std::size_t>(i - 1)] = x;
  }
  return from_trusted(std::move(entries));
}

StandardTableau transpose(const StandardTableau& t) {
  std::vector<std::vector<int>> cols(static_cast<std::size_t>(t.column_count()));
  for (const auto& row : t.rows())
    for (std::size_t c = 0; c < row.size(); ++c) cols[c].push_back(row[c]);
  return tableau_from_trusted(std::move(cols));
}

IndexSet tableau_descent_set(const StandardTableau& t) {
  const int n = t.size();
  std::vector<int> row(static_cast<std::size_t>(n) + 1);
  for (std::size_t r = 0; r < t.rows().size(); ++r)
    for (int v : t.rows()[r]) row[static_cast<std::size_t>(v)] = static_cast<int>(r);
  IndexSet s;
  for (int i = 1; i < n; ++i)
    if (row[static_cast<std::size_t>(i + 1)] > row[static_cast<std::size_t>(i)]) s.push_back(i);
  return s;
}

Permutation involution_transpose(const Permutation& p) {
  if (!is_involution(p)) throw InputError("permutation " + to_string(p) + " is not an involution");
  const auto [ins, rec] = rs_correspondence(p);
  if (!(ins == rec)) throw Error("RS tableaux of an involution differ");
  const StandardTableau t = transpose(rec);
  return rs_inverse(t, t);
}

}  // namespace hookline
