#include "forbconf/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <sstream>

#include "forbconf/products.hpp"

namespace forbconf {

namespace {

int parse_int(const std::string& s, const std::string& ctx) {
  try {
    size_t pos = 0;
    const int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (...) {
    throw Error("bad_params", "bad integer '" + s + "' in " + ctx);
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

BinMatrix identity(int k) {
  if (k < 1) throw Error("bad_params", "identity needs k >= 1");
  std::vector<Column> cols(static_cast<size_t>(k));
  for (int j = 1; j <= k; ++j) cols[static_cast<size_t>(j - 1)] = Column{1} << (k - j);
  return BinMatrix(k, std::move(cols));
}

BinMatrix identity_complement(int k) { return complement(identity(k)); }

BinMatrix triangular(int k) {
  if (k < 1) throw Error("bad_params", "triangular needs k >= 1");
  std::vector<Column> cols(static_cast<size_t>(k));
  Column v = 0;
  for (int j = 1; j <= k; ++j) {
    v |= Column{1} << (k - j);
    cols[static_cast<size_t>(j - 1)] = v;
  }
  return BinMatrix(k, std::move(cols));
}

BinMatrix ones(int k) {
  if (k < 1) throw Error("bad_params", "ones needs k >= 1");
  return BinMatrix(k, {(Column{1} << k) - 1});
}

BinMatrix zeros(int a, int b) {
  if (a < 1 || b < 1) throw Error("bad_params", "zeros needs positive dimensions");
  return BinMatrix(a, std::vector<Column>(static_cast<size_t>(b), 0));
}

BinMatrix all_ones(int p, int q) {
  if (p < 1 || q < 1) throw Error("bad_params", "all-ones needs positive dimensions");
  return BinMatrix(p, std::vector<Column>(static_cast<size_t>(q), (Column{1} << p) - 1));
}

BinMatrix cycle_incidence(int k) {
  if (k < 3) throw Error("bad_params", "cycle incidence needs k >= 3");
  std::vector<Column> cols(static_cast<size_t>(k), 0);
  for (int j = 1; j <= k; ++j) {
    const int r1 = j;
    const int r2 = (j % k) + 1;
    cols[static_cast<size_t>(j - 1)] = (Column{1} << (k - r1)) | (Column{1} << (k - r2));
  }
  return BinMatrix(k, std::move(cols));
}

BinMatrix q_config(int i) {
  switch (i) {
    case 1: return BinMatrix::from_rows({"00", "00"});
    case 2: return BinMatrix::from_rows({"11", "11"});
    case 3: return BinMatrix::from_rows({"000111", "011001"});
    case 4: return BinMatrix::from_rows({"0", "0", "0"});
    case 5: return BinMatrix::from_rows({"1", "1", "1"});
    case 6: return BinMatrix::from_rows({"100", "010", "001"});
    case 7: return BinMatrix::from_rows({"011", "101", "110"});
    case 8: return BinMatrix::from_rows({"1010", "0101", "0011"});
    case 9: return BinMatrix::from_rows({"10", "10", "01", "01"});
    default: throw Error("bad_params", "catalogued patterns are Q1..Q9");
  }
}

BinMatrix f2_config(int t) {
  if (t < 1) throw Error("bad_params", "F2 needs t >= 1");
  std::vector<Column> cols;
  cols.reserve(static_cast<size_t>(2 * t + 2));
  cols.push_back(0b00);
  for (int i = 0; i < t; ++i) cols.push_back(0b10);
  for (int i = 0; i < t; ++i) cols.push_back(0b01);
  cols.push_back(0b11);
  return BinMatrix(2, std::move(cols));
}

BinMatrix ftower_config(int t) {
  if (t < 1) throw Error("bad_params", "Ftower needs t >= 1");
  const int m = t + 1;
  const Column top = Column{1} << (m - 1);
  const Column full = (Column{1} << m) - 1;
  std::vector<Column> cols;
  cols.reserve(static_cast<size_t>(2 * t + 2));
  cols.push_back(0);
  for (int i = 0; i < t; ++i) cols.push_back(top);
  for (int i = 0; i < t; ++i) cols.push_back(full ^ top);
  cols.push_back(full);
  return BinMatrix(m, std::move(cols));
}

BinMatrix graph_incidence(const SimpleGraph& g) {
  if (g.edge_count() < 1) throw Error("bad_params", "incidence matrix needs at least one edge");
  const int m = g.vertex_count();
  if (m > kMaxRows) throw Error("rows_out_of_range", "too many vertices");
  std::vector<Column> cols;
  cols.reserve(static_cast<size_t>(g.edge_count()));
  for (auto [u, v] : g.edges())
    cols.push_back((Column{1} << (m - u)) | (Column{1} << (m - v)));
  return BinMatrix(m, std::move(cols));
}

BinMatrix constant_construction(int m, int k, int l, int p, int q) {
  if (k < 1 || l < 1 || p < 1 || q < 1) throw Error("bad_params", "block parameters must be positive");
  const int n = l + q - 2;
  if (n >= 2 && (l < 2 || q < 2))
    throw Error("bad_params", "construction is simple only for l >= 2 and q >= 2 at this width");
  // number of rows with exactly q-1 ones among n entries
  long long count = 1;
  for (int i = 0; i < q - 1; ++i) count = count * (n - i) / (i + 1);
  if (m < count)
    throw Error("bad_params", "m must be at least " + std::to_string(count));
  if (m > kMaxRows) throw Error("rows_out_of_range", "m exceeds the row cap");
  std::vector<std::string> rows;
  rows.reserve(static_cast<size_t>(m));
  // all (q-1)-subsets of [n] in lexicographic order of position sets
  std::vector<int> comb(static_cast<size_t>(q - 1));
  for (int i = 0; i < q - 1; ++i) comb[static_cast<size_t>(i)] = i;
  auto emit = [&]() {
    std::string r(static_cast<size_t>(n), '0');
    for (int pos : comb) r[static_cast<size_t>(pos)] = '1';
    rows.push_back(std::move(r));
  };
  if (q - 1 == 0) {
    rows.push_back(std::string(static_cast<size_t>(n), '0'));
  } else {
    while (true) {
      emit();
      int i = q - 2;
      while (i >= 0 && comb[static_cast<size_t>(i)] == n - (q - 1) + i) --i;
      if (i < 0) break;
      ++comb[static_cast<size_t>(i)];
      for (int j = i + 1; j < q - 1; ++j) comb[static_cast<size_t>(j)] = comb[static_cast<size_t>(j - 1)] + 1;
    }
  }
  std::string filler(static_cast<size_t>(n), '0');
  for (int i = 0; i < q - 1; ++i) filler[static_cast<size_t>(i)] = '1';
  while (static_cast<int>(rows.size()) < m) rows.push_back(filler);
  if (n == 0) return BinMatrix(m, {});
  return BinMatrix::from_rows(rows);
}

BinMatrix make_named(const std::string& name) {
  const auto factors = split(name, 'x');
  if (factors.size() > 1) {
    BinMatrix acc = make_named(factors[0]);
    for (size_t i = 1; i < factors.size(); ++i) acc = product(acc, make_named(factors[i]));
    return acc;
  }
  if (name.size() == 2 && name[0] == 'Q' && std::isdigit(static_cast<unsigned char>(name[1])))
    return q_config(name[1] - '0');
  const auto colon = name.find(':');
  if (colon == std::string::npos) throw Error("bad_params", "unknown matrix name '" + name + "'");
  const std::string head = name.substr(0, colon);
  const std::string args = name.substr(colon + 1);
  if (head == "I") return identity(parse_int(args, name));
  if (head == "Ic") return identity_complement(parse_int(args, name));
  if (head == "T") return triangular(parse_int(args, name));
  if (head == "C") return cycle_incidence(parse_int(args, name));
  if (head == "ones") return ones(parse_int(args, name));
  if (head == "F2") return f2_config(parse_int(args, name));
  if (head == "Ftower") return ftower_config(parse_int(args, name));
  if (head == "zeros" || head == "J") {
    const auto parts = split(args, ',');
    if (parts.size() != 2) throw Error("bad_params", "'" + name + "' needs two parameters");
    const int a = parse_int(parts[0], name);
    const int b = parse_int(parts[1], name);
    return head == "zeros" ? zeros(a, b) : all_ones(a, b);
  }
  throw Error("bad_params", "unknown matrix name '" + name + "'");
}

Family parse_family(const std::string& list) {
  Family fam;
  auto raw = split(list, ',');
  std::vector<std::string> tokens;
  for (auto& tok : raw) {
    const bool pure_int = !tok.empty() && std::all_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isdigit(c); });
    if (pure_int && !tokens.empty() &&
        (tokens.back().rfind("zeros:", 0) == 0 || tokens.back().rfind("J:", 0) == 0) &&
        tokens.back().find(',') == std::string::npos) {
      tokens.back() += "," + tok;
    } else {
      tokens.push_back(tok);
    }
  }
  for (const auto& tok : tokens) {
    if (tok.empty()) continue;
    if (std::filesystem::exists(tok))
      fam.add(read_matrix_file(tok), tok);
    else
      fam.add(make_named(tok), tok);
  }
  return fam;
}

}  // namespace forbconf
