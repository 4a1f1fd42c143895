#include "nilcomplete/int_matrix.hpp"

#include <ostream>
#include <sstream>
#include <string>

#include "nilcomplete/error.hpp"

namespace nilc {

namespace {

void require_shape(int n, int r) {
  if (r <= 0 || r >= n) {
    throw Error(ErrorKind::InvalidShape, "requires 0 < r < n, got n=" + std::to_string(n) +
                                             " r=" + std::to_string(r));
  }
}

void require_same_dim(const IntMatrix& a, const IntMatrix& b) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorKind::DimMismatch, "matrix dimensions differ: " + std::to_string(a.dim()) +
                                            " vs " + std::to_string(b.dim()));
  }
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return lines;
}

std::vector<Integer> parse_integers(std::string_view line) {
  std::vector<Integer> out;
  std::istringstream is{std::string(line)};
  std::string token;
  while (is >> token) {
    Integer v;
    std::string_view digits = token;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos ||
        v.set_str(token.front() == '+' ? token.substr(1) : token, 10) != 0) {
      throw Error(ErrorKind::ParseError, "not an integer: '" + token + "'");
    }
    out.push_back(std::move(v));
  }
  return out;
}

bool blank(std::string_view line) {
  return line.find_first_not_of(" \t") == std::string_view::npos;
}

}  // namespace

IntMatrix::IntMatrix(int n) : n_(n) {
  if (n < 1) throw Error(ErrorKind::InvalidShape, "matrix dimension must be >= 1");
  data_.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_triplets(int n, const std::vector<Triplet>& entries) {
  IntMatrix m(n);
  for (const auto& t : entries) {
    if (t.row < 1 || t.row > n || t.col < 1 || t.col > n) {
      throw Error(ErrorKind::InvalidShape, "triplet (" + std::to_string(t.row) + ", " +
                                               std::to_string(t.col) + ") outside a " +
                                               std::to_string(n) + "x" + std::to_string(n) +
                                               " matrix");
    }
    m(t.row - 1, t.col - 1) += t.value;
  }
  return m;
}

bool IntMatrix::is_zero() const {
  for (const auto& v : data_)
    if (v != 0) return false;
  return true;
}

bool IntMatrix::is_binary() const {
  for (const auto& v : data_)
    if (v != 0 && v != 1) return false;
  return true;
}

bool IntMatrix::is_strictly_upper_triangular() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j <= i; ++j)
      if ((*this)(i, j) != 0) return false;
  return true;
}

std::size_t IntMatrix::nnz() const {
  std::size_t count = 0;
  for (const auto& v : data_)
    if (v != 0) ++count;
  return count;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::pow(int k) const {
  if (k < 0) throw Error(ErrorKind::InvalidShape, "negative matrix power");
  IntMatrix result = identity(n_);
  IntMatrix base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

std::vector<Triplet> IntMatrix::triplets() const {
  std::vector<Triplet> out;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if ((*this)(i, j) != 0) out.push_back({i + 1, j + 1, (*this)(i, j)});
  return out;
}

IntMatrix& IntMatrix::operator+=(const IntMatrix& other) {
  require_same_dim(*this, other);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

IntMatrix& IntMatrix::operator-=(const IntMatrix& other) {
  require_same_dim(*this, other);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

IntMatrix operator-(IntMatrix a) {
  for (auto& v : a.data_) v = -v;
  return a;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  require_same_dim(a, b);
  const int n = a.dim();
  IntMatrix c(n);
  for (int i = 0; i < n; ++i) {
    for (int l = 0; l < n; ++l) {
      const Integer& ail = a(i, l);
      if (ail == 0) continue;
      for (int j = 0; j < n; ++j) {
        const Integer& blj = b(l, j);
        if (blj != 0) c(i, j) += ail * blj;
      }
    }
  }
  return c;
}

IntMatrix make_nr(int n, int r) {
  require_shape(n, r);
  IntMatrix m(n);
  for (int i = 1; i <= n - r; ++i) m(i + r - 1, i - 1) = 1;
  return m;
}

IntMatrix make_er(int n, int r) {
  require_shape(n, r);
  IntMatrix m(n);
  for (int i = 1; i <= r; ++i) m(i - 1, i + n - r - 1) = 1;
  return m;
}

IntMatrix unit_matrix(int n, int row, int col) {
  return IntMatrix::from_triplets(n, {{row, col, 1}});
}

std::string to_dense_text(const IntMatrix& m) {
  std::ostringstream os;
  os << m;
  return os.str();
}

std::string to_triplet_text(const std::vector<Triplet>& entries) {
  std::ostringstream os;
  for (const auto& t : entries) os << t.row << ' ' << t.col << ' ' << t.value << '\n';
  return os.str();
}

IntMatrix parse_dense(std::string_view text) {
  std::vector<std::vector<Integer>> rows;
  for (auto line : split_lines(text)) {
    if (blank(line)) continue;
    rows.push_back(parse_integers(line));
  }
  if (rows.empty()) throw Error(ErrorKind::ParseError, "empty dense matrix");
  const int n = static_cast<int>(rows.size());
  IntMatrix m(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) {
      throw Error(ErrorKind::ParseError, "row " + std::to_string(i + 1) + " has " +
                                             std::to_string(rows[i].size()) +
                                             " entries, expected " + std::to_string(n));
    }
    for (int j = 0; j < n; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix parse_triplets(std::string_view text, int n) {
  std::vector<Triplet> entries;
  int line_no = 0;
  for (auto line : split_lines(text)) {
    ++line_no;
    if (blank(line)) continue;
    auto values = parse_integers(line);
    if (values.size() != 3) {
      throw Error(ErrorKind::ParseError,
                  "line " + std::to_string(line_no) + ": expected 'i j v'");
    }
    auto row = to_int64(values[0]);
    auto col = to_int64(values[1]);
    if (!row || !col || *row < 1 || *row > n || *col < 1 || *col > n) {
      throw Error(ErrorKind::InvalidShape,
                  "line " + std::to_string(line_no) + ": index outside [1, " +
                      std::to_string(n) + "]");
    }
    entries.push_back({static_cast<int>(*row), static_cast<int>(*col), values[2]});
  }
  return IntMatrix::from_triplets(n, entries);
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  for (int i = 0; i < m.dim(); ++i) {
    for (int j = 0; j < m.dim(); ++j) {
      if (j > 0) os << ' ';
      os << m(i, j);
    }
    os << '\n';
  }
  return os;
}

}  // namespace nilc
