#include "cb/exact/sparse.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cb {

SVec to_sparse(const Vec& v) {
  SVec out;
  for (int i = 0; i < static_cast<int>(v.size()); ++i)
    if (v[i] != 0) out.emplace_back(i, v[i]);
  return out;
}

Vec to_dense(const SVec& v, int size) {
  Vec out(size);
  for (const auto& [i, x] : v) out.at(i) += x;
  return out;
}

void normalize(SVec& v) {
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SVec out;
  out.reserve(v.size());
  for (auto& e : v) {
    if (!out.empty() && out.back().first == e.first)
      out.back().second += e.second;
    else
      out.push_back(std::move(e));
  }
  out.erase(std::remove_if(out.begin(), out.end(), [](const auto& e) { return e.second == 0; }),
            out.end());
  v = std::move(out);
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : data_) n += r.size();
  return n;
}

void SparseMatrix::add_row(SVec row) {
  normalize(row);
  for (const auto& e : row)
    if (e.first < 0 || e.first >= cols_) throw std::out_of_range("sparse row column out of range");
  data_.push_back(std::move(row));
}

void SparseMatrix::set(int r, int c, const Q& value) {
  if (r < 0 || c < 0 || c >= cols_) throw std::out_of_range("SparseMatrix::set");
  if (r >= rows()) data_.resize(static_cast<std::size_t>(r) + 1);
  auto& row = data_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const auto& e, int col) { return e.first < col; });
  if (it != row.end() && it->first == c) {
    if (value == 0)
      row.erase(it);
    else
      it->second = value;
  } else if (value != 0) {
    row.insert(it, {c, value});
  }
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols_, rows());
  for (int r = 0; r < rows(); ++r)
    for (const auto& [c, x] : data_[r]) t.data_[c].emplace_back(r, x);
  return t;
}

Mat SparseMatrix::to_dense() const {
  Mat m(rows(), cols_);
  for (int r = 0; r < rows(); ++r)
    for (const auto& [c, x] : data_[r]) m(r, c) = x;
  return m;
}

SparseMatrix SparseMatrix::from_dense(const Mat& m) {
  SparseMatrix s(m.cols());
  for (int r = 0; r < m.rows(); ++r) {
    SVec row;
    for (int c = 0; c < m.cols(); ++c)
      if (m(r, c) != 0) row.emplace_back(c, m(r, c));
    s.data_.push_back(std::move(row));
  }
  return s;
}

std::string SparseMatrix::to_text() const {
  std::ostringstream os;
  os << rows() << " " << cols_ << "\n";
  for (int r = 0; r < rows(); ++r)
    for (const auto& [c, x] : data_[r]) os << r << " " << c << " " << to_string(x) << "\n";
  return os.str();
}

SparseMatrix SparseMatrix::from_text(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  int rows = -1, cols = -1;
  SparseMatrix m;
  while (std::getline(is, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (rows < 0) {
      if (tok.size() != 2) throw std::invalid_argument("matrix header must be 'rows cols'");
      rows = std::stoi(tok[0]);
      cols = std::stoi(tok[1]);
      if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix shape");
      m = SparseMatrix(rows, cols);
      continue;
    }
    if (tok.size() != 3) throw std::invalid_argument("matrix entry must be 'row col value'");
    int r = std::stoi(tok[0]), c = std::stoi(tok[1]);
    if (r < 0 || r >= rows || c < 0 || c >= cols) throw std::out_of_range("matrix entry out of range");
    m.set(r, c, parse_rational(tok[2]));
  }
  if (rows < 0) throw std::invalid_argument("empty matrix text");
  return m;
}

}  // namespace cb
