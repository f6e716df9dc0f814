#include "forbconf/matrix.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>

namespace forbconf {

BinMatrix::BinMatrix(int rows, std::vector<Column> cols) : rows_(rows), cols_(std::move(cols)) {
  if (rows_ < 1 || rows_ > kMaxRows)
    throw Error("rows_out_of_range", "matrix must have between 1 and 63 rows, got " + std::to_string(rows_));
  const Column mask = row_mask();
  for (Column c : cols_)
    if (c & ~mask) throw Error("column_overflow", "column value does not fit in " + std::to_string(rows_) + " rows");
}

BinMatrix BinMatrix::from_rows(const std::vector<std::string>& rows) {
  if (rows.empty()) throw Error("rows_out_of_range", "matrix needs at least one row");
  const int m = static_cast<int>(rows.size());
  const size_t n = rows[0].size();
  for (const auto& r : rows)
    if (r.size() != n) throw Error("shape_mismatch", "row lengths differ");
  std::vector<Column> cols(n, 0);
  for (int i = 0; i < m; ++i) {
    for (size_t j = 0; j < n; ++j) {
      const char ch = rows[static_cast<size_t>(i)][j];
      if (ch != '0' && ch != '1') throw Error("parse", "matrix rows must consist of 0/1 characters");
      if (ch == '1') cols[j] |= Column{1} << (m - 1 - i);
    }
  }
  return BinMatrix(m, std::move(cols));
}

bool BinMatrix::bit(int i, int j) const {
  if (i < 1 || i > rows_ || j < 1 || j > ncols())
    throw Error("index_range", "matrix index out of range");
  return (cols_[static_cast<size_t>(j - 1)] >> (rows_ - i)) & 1u;
}

Column BinMatrix::col(int j) const {
  if (j < 1 || j > ncols()) throw Error("index_range", "column index out of range");
  return cols_[static_cast<size_t>(j - 1)];
}

std::string BinMatrix::to_text() const {
  std::ostringstream os;
  os << rows_ << ' ' << ncols() << '\n';
  for (int i = 1; i <= rows_; ++i) {
    for (int j = 1; j <= ncols(); ++j) os << (bit(i, j) ? '1' : '0');
    os << '\n';
  }
  return os.str();
}

BinMatrix BinMatrix::parse_text(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  auto next_line = [&]() -> std::string {
    while (std::getline(is, line)) {
      if (line.empty()) continue;
      if (line[0] == '#') continue;
      while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
      if (!line.empty()) return line;
    }
    throw Error("parse", "unexpected end of matrix text");
  };
  std::istringstream header(next_line());
  int m = 0, n = 0;
  if (!(header >> m >> n)) throw Error("parse", "matrix header must be \"m n\"");
  if (m < 1) throw Error("parse", "matrix must have at least one row");
  if (n == 0) return BinMatrix(m, {});
  std::vector<std::string> rows;
  rows.reserve(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) {
    std::string r = next_line();
    if (static_cast<int>(r.size()) != n) throw Error("parse", "matrix row has wrong length");
    rows.push_back(std::move(r));
  }
  if (n == 0) return BinMatrix(m, {});
  return from_rows(rows);
}

std::ostream& operator<<(std::ostream& os, const BinMatrix& a) { return os << a.to_text(); }

bool is_simple(const BinMatrix& a) {
  std::vector<Column> s = a.columns();
  std::sort(s.begin(), s.end());
  return std::adjacent_find(s.begin(), s.end()) == s.end();
}

bool is_s_simple(const BinMatrix& a, int s) {
  if (s < 1) throw Error("bad_params", "s must be positive");
  std::map<Column, int> mult;
  for (Column c : a.columns())
    if (++mult[c] > s) return false;
  return true;
}

BinMatrix complement(const BinMatrix& a) {
  std::vector<Column> cols = a.columns();
  const Column mask = a.row_mask();
  for (Column& c : cols) c ^= mask;
  return BinMatrix(a.rows(), std::move(cols));
}

BinMatrix concat(const BinMatrix& a, const BinMatrix& b) {
  if (a.rows() != b.rows()) throw Error("shape_mismatch", "concat needs equal row counts");
  std::vector<Column> cols = a.columns();
  cols.insert(cols.end(), b.columns().begin(), b.columns().end());
  return BinMatrix(a.rows(), std::move(cols));
}

BinMatrix multiply(int t, const BinMatrix& a) {
  if (t < 1) throw Error("bad_params", "multiplier must be positive");
  std::vector<Column> cols;
  cols.reserve(static_cast<size_t>(t) * a.columns().size());
  for (int i = 0; i < t; ++i) cols.insert(cols.end(), a.columns().begin(), a.columns().end());
  return BinMatrix(a.rows(), std::move(cols));
}

BinMatrix restrict_rows(const BinMatrix& a, const RowSet& s) {
  if (s.empty()) throw Error("empty_rowset", "row restriction needs at least one row");
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 1 || s[i] > a.rows()) throw Error("index_range", "row index out of range");
    if (i > 0 && s[i] <= s[i - 1]) throw Error("bad_params", "row set must be strictly increasing");
  }
  const int m2 = static_cast<int>(s.size());
  std::vector<Column> cols;
  cols.reserve(a.columns().size());
  for (Column c : a.columns()) {
    Column v = 0;
    for (int i = 0; i < m2; ++i)
      v |= ((c >> (a.rows() - s[static_cast<size_t>(i)])) & 1u) << (m2 - 1 - i);
    cols.push_back(v);
  }
  return BinMatrix(m2, std::move(cols));
}

BinMatrix support(const BinMatrix& a) {
  std::vector<Column> out;
  for (Column c : a.columns())
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
  return BinMatrix(a.rows(), std::move(out));
}

int multiplicity(Column alpha, const BinMatrix& a) {
  if (alpha & ~a.row_mask()) throw Error("column_overflow", "column value does not fit the matrix rows");
  return static_cast<int>(std::count(a.columns().begin(), a.columns().end(), alpha));
}

BinMatrix canonical_form(const BinMatrix& a) {
  const int m = a.rows();
  if (m > 8) throw Error("canonical_rows", "canonical form is computed for matrices with at most 8 rows");
  std::vector<int> perm(static_cast<size_t>(m));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Column> best;
  bool have = false;
  std::vector<Column> cur(a.columns().size());
  do {
    for (size_t j = 0; j < cur.size(); ++j) {
      Column v = 0;
      const Column src = a.columns()[j];
      for (int i = 0; i < m; ++i)
        v |= ((src >> (m - 1 - perm[static_cast<size_t>(i)])) & 1u) << (m - 1 - i);
      cur[j] = v;
    }
    std::sort(cur.begin(), cur.end());
    if (!have || cur < best) {
      best = cur;
      have = true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return BinMatrix(m, std::move(best));
}

BinMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("io", "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return BinMatrix::parse_text(buf.str());
}

void write_matrix_file(const std::string& path, const BinMatrix& m) {
  std::ofstream out(path);
  if (!out) throw Error("io", "cannot write " + path);
  out << m.to_text();
}

}  // namespace forbconf
