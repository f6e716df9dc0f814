#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace forbconf {

inline constexpr int kMaxRows = 63;

// Library errors carry a short machine-readable code next to the message.
struct Error : std::runtime_error {
  std::string code;
  Error(std::string c, const std::string& what) : std::runtime_error(what), code(std::move(c)) {}
};

// A column of an m-rowed (0,1)-matrix packed into one word, row 1 at the most
// significant of the m low bits. Numeric order of column values is therefore
// the big-endian top-to-bottom reading used for sorting and enumeration.
using Column = std::uint64_t;

// Strictly increasing list of 1-based row indices.
using RowSet = std::vector<int>;

// An m-rowed (0,1)-matrix stored as an ordered multiset of bit columns.
// Repeated columns are allowed; simplicity is a predicate, not a type
// constraint. Rows and columns are 1-indexed in every public interface.
class BinMatrix {
 public:
  BinMatrix(int rows, std::vector<Column> cols);
  static BinMatrix from_rows(const std::vector<std::string>& rows);

  int rows() const { return rows_; }
  int ncols() const { return static_cast<int>(cols_.size()); }
  bool bit(int i, int j) const;
  Column col(int j) const;
  const std::vector<Column>& columns() const { return cols_; }
  Column row_mask() const { return rows_ == kMaxRows ? ~Column{0} >> 1 : (Column{1} << rows_) - 1; }

  bool operator==(const BinMatrix&) const = default;

  // Text form: "m n" header, then m lines of n characters from {0,1}.
  std::string to_text() const;
  static BinMatrix parse_text(const std::string& text);

 private:
  int rows_;
  std::vector<Column> cols_;
};

std::ostream& operator<<(std::ostream&, const BinMatrix&);

bool is_simple(const BinMatrix& a);
bool is_s_simple(const BinMatrix& a, int s);
BinMatrix complement(const BinMatrix& a);
BinMatrix concat(const BinMatrix& a, const BinMatrix& b);
BinMatrix multiply(int t, const BinMatrix& a);
BinMatrix restrict_rows(const BinMatrix& a, const RowSet& s);
BinMatrix support(const BinMatrix& a);
int multiplicity(Column alpha, const BinMatrix& a);

// Canonical representative of the configuration class: over every row
// permutation (exhaustive, rows <= 8) sort the columns numerically and keep
// the lexicographically least column list.
BinMatrix canonical_form(const BinMatrix& a);

// A finite set of configurations, deduplicated up to row and column
// permutation. Member order is insertion order; labels are optional names.
class Family {
 public:
  Family() = default;
  bool add(BinMatrix m, std::string label = "");
  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }
  const BinMatrix& member(int i) const { return members_[static_cast<size_t>(i)]; }
  const std::string& label(int i) const { return labels_[static_cast<size_t>(i)]; }
  const std::vector<BinMatrix>& members() const { return members_; }

  Family complemented() const;
  // Drops every member that has another member as a configuration.
  Family minimized() const;

 private:
  std::vector<BinMatrix> members_;
  std::vector<std::string> labels_;
};

BinMatrix read_matrix_file(const std::string& path);
void write_matrix_file(const std::string& path, const BinMatrix& m);

}  // namespace forbconf
