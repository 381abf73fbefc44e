#include "qcss/gf2.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

#include "qcss/errors.hpp"

namespace qcss {

namespace {

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

BitVector BitVector::from_string(std::string_view bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i);
    } else if (bits[i] != '0') {
      throw InvalidInput("bit string may only contain '0' and '1'");
    }
  }
  return v;
}

BitVector BitVector::from_hex(std::string_view hex, std::size_t len) {
  if (hex.starts_with("0x") || hex.starts_with("0X")) hex.remove_prefix(2);
  if (hex.empty()) throw InvalidInput("empty hex string");
  BitVector v(len);
  std::size_t bit = 0;
  for (auto it = hex.rbegin(); it != hex.rend(); ++it) {
    const int d = hex_digit(*it);
    if (d < 0) throw InvalidInput("invalid hex digit in '" + std::string(hex) + "'");
    for (int b = 0; b < 4; ++b, ++bit) {
      if ((d >> b) & 1) {
        if (bit >= len) throw InvalidInput("hex value 0x" + std::string(hex) + " exceeds " + std::to_string(len) + " bits");
        v.set(bit);
      }
    }
  }
  return v;
}

BitVector BitVector::ones(std::size_t len) {
  BitVector v(len);
  for (auto& w : v.words_) w = ~Word{0};
  if (len % kWordBits != 0 && !v.words_.empty()) v.words_.back() = (Word{1} << (len % kWordBits)) - 1;
  return v;
}

BitVector BitVector::unit(std::size_t len, std::size_t index) {
  if (index >= len) throw InvalidInput("unit vector index out of range");
  BitVector v(len);
  v.set(index);
  return v;
}

BitVector BitVector::from_support(std::size_t len, std::span<const std::size_t> support) {
  BitVector v(len);
  for (auto i : support) {
    if (i >= len) throw InvalidInput("support index out of range");
    v.set(i);
  }
  return v;
}

std::size_t BitVector::weight() const {
  std::size_t w = 0;
  for (auto word : words_) w += static_cast<std::size_t>(std::popcount(word));
  return w;
}

bool BitVector::any() const {
  return std::any_of(words_.begin(), words_.end(), [](Word w) { return w != 0; });
}

std::optional<std::size_t> BitVector::first_set() const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] != 0) return i * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[i]));
  }
  return std::nullopt;
}

std::vector<std::size_t> BitVector::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    Word w = words_[i];
    while (w != 0) {
      out.push_back(i * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

void BitVector::check_same_length(const BitVector& other) const {
  if (len_ != other.len_) {
    throw InvalidInput("bit vector length mismatch: " + std::to_string(len_) + " vs " + std::to_string(other.len_));
  }
}

BitVector& BitVector::operator^=(const BitVector& other) {
  check_same_length(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

BitVector& BitVector::operator&=(const BitVector& other) {
  check_same_length(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

BitVector& BitVector::operator|=(const BitVector& other) {
  check_same_length(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

BitVector BitVector::slice(std::size_t begin, std::size_t count) const {
  if (begin + count > len_) throw InvalidInput("slice out of range");
  BitVector out(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (get(begin + i)) out.set(i);
  }
  return out;
}

BitVector BitVector::erase(std::span<const std::size_t> sorted_indices) const {
  BitVector out(len_ - sorted_indices.size());
  std::size_t next = 0;
  std::size_t j = 0;
  for (std::size_t i = 0; i < len_; ++i) {
    if (next < sorted_indices.size() && sorted_indices[next] == i) {
      ++next;
      continue;
    }
    if (get(i)) out.set(j);
    ++j;
  }
  if (next != sorted_indices.size()) throw InvalidInput("erase indices must be sorted and in range");
  return out;
}

BitVector BitVector::gather(std::span<const std::size_t> indices) const {
  BitVector out(indices.size());
  for (std::size_t j = 0; j < indices.size(); ++j) {
    if (indices[j] >= len_) throw InvalidInput("gather index out of range");
    if (get(indices[j])) out.set(j);
  }
  return out;
}

BitVector BitVector::rotate(std::size_t shift) const {
  BitVector out(len_);
  if (len_ == 0) return out;
  shift %= len_;
  for (auto i : support()) out.set((i + shift) % len_);
  return out;
}

BitVector BitVector::concat(const BitVector& a, const BitVector& b) {
  BitVector out(a.size() + b.size());
  for (auto i : a.support()) out.set(i);
  for (auto i : b.support()) out.set(a.size() + i);
  return out;
}

std::string BitVector::to_string() const {
  std::string s(len_, '0');
  for (std::size_t i = 0; i < len_; ++i) {
    if (get(i)) s[i] = '1';
  }
  return s;
}

std::string BitVector::to_hex() const {
  static constexpr char kDigits[] = "0123456789ABCDEF";
  std::string s;
  const std::size_t nibbles = (len_ + 3) / 4;
  for (std::size_t k = nibbles; k-- > 0;) {
    int d = 0;
    for (int b = 0; b < 4; ++b) {
      const std::size_t i = 4 * k + static_cast<std::size_t>(b);
      if (i < len_ && get(i)) d |= 1 << b;
    }
    if (s.empty() && d == 0) continue;
    s.push_back(kDigits[d]);
  }
  if (s.empty()) s = "0";
  return "0x" + s;
}

bool dot(const BitVector& u, const BitVector& v) {
  if (u.size() != v.size()) {
    throw InvalidInput("dot: length mismatch " + std::to_string(u.size()) + " vs " + std::to_string(v.size()));
  }
  const auto a = u.words();
  const auto b = v.words();
  BitVector::Word acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc ^= a[i] & b[i];
  return (std::popcount(acc) & 1) != 0;
}

// ---------------------------------------------------------------------------

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}

BitMatrix::BitMatrix(std::size_t cols, std::vector<BitVector> rows) : cols_(cols), rows_(std::move(rows)) {
  for (const auto& r : rows_) {
    if (r.size() != cols_) throw InvalidInput("matrix row length does not match column count");
  }
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BitMatrix BitMatrix::from_strings(std::span<const std::string_view> rows) {
  if (rows.empty()) return {};
  BitMatrix m(rows.front().size(), std::vector<BitVector>{});
  for (auto r : rows) m.append_row(BitVector::from_string(r));
  return m;
}

BitMatrix BitMatrix::from_strings(std::initializer_list<std::string_view> rows) {
  return from_strings(std::span<const std::string_view>(rows.begin(), rows.size()));
}

void BitMatrix::append_row(BitVector row) {
  if (row.size() != cols_) throw InvalidInput("appended row has wrong length");
  rows_.push_back(std::move(row));
}

BitVector BitMatrix::column(std::size_t c) const {
  BitVector out(rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r].get(c)) out.set(r);
  }
  return out;
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(cols_, rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (auto c : rows_[r].support()) t.set(c, r);
  }
  return t;
}

BitVector BitMatrix::multiply(const BitVector& v) const {
  BitVector out(rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (dot(rows_[r], v)) out.set(r);
  }
  return out;
}

BitVector BitMatrix::combine(const BitVector& coefficients) const {
  if (coefficients.size() != rows_.size()) throw InvalidInput("combine: coefficient count must equal row count");
  BitVector out(cols_);
  for (auto r : coefficients.support()) out ^= rows_[r];
  return out;
}

BitMatrix BitMatrix::select_columns(std::span<const std::size_t> order) const {
  BitMatrix out(order.size(), std::vector<BitVector>{});
  for (const auto& r : rows_) out.append_row(r.gather(order));
  return out;
}

std::string BitMatrix::to_text() const {
  std::ostringstream os;
  os << rows_.size() << ' ' << cols_ << '\n';
  for (const auto& r : rows_) os << r.to_string() << '\n';
  return os.str();
}

BitMatrix BitMatrix::from_text(std::istream& in) {
  std::size_t rows = 0;
  std::size_t cols = 0;
  if (!(in >> rows >> cols)) throw InvalidInput("matrix text: expected 'rows cols' header");
  BitMatrix m(cols, std::vector<BitVector>{});
  for (std::size_t r = 0; r < rows; ++r) {
    std::string line;
    if (cols == 0) {
      m.append_row(BitVector(0));
      continue;
    }
    if (!(in >> line)) throw InvalidInput("matrix text: missing row " + std::to_string(r));
    if (line.size() != cols) throw InvalidInput("matrix text: row " + std::to_string(r) + " has wrong length");
    m.append_row(BitVector::from_string(line));
  }
  return m;
}

BitMatrix BitMatrix::from_text(std::string_view text) {
  std::istringstream is{std::string(text)};
  return from_text(is);
}

// ---------------------------------------------------------------------------

RrefResult rref(const BitMatrix& m) {
  std::vector<BitVector> rows = m.row_list();
  std::vector<std::size_t> pivots;
  std::size_t top = 0;
  for (std::size_t c = 0; c < m.cols() && top < rows.size(); ++c) {
    std::size_t sel = top;
    while (sel < rows.size() && !rows[sel].get(c)) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[top], rows[sel]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != top && rows[r].get(c)) rows[r] ^= rows[top];
    }
    pivots.push_back(c);
    ++top;
  }
  rows.resize(top);
  return {BitMatrix(m.cols(), std::move(rows)), std::move(pivots)};
}

std::size_t rank(const BitMatrix& m) { return rref(m).pivots.size(); }

BitMatrix nullspace_basis(const BitMatrix& m) {
  const auto [reduced, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  BitMatrix basis(m.cols(), std::vector<BitVector>{});
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    BitVector v(m.cols());
    v.set(f);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      if (reduced.get(r, f)) v.set(pivots[r]);
    }
    basis.append_row(std::move(v));
  }
  return basis;
}

RowSpace::RowSpace(const BitMatrix& m) : cols_(m.cols()), basis_(m.cols(), std::vector<BitVector>{}) {
  auto r = rref(m);
  basis_ = std::move(r.reduced);
  pivots_ = std::move(r.pivots);
}

BitVector RowSpace::reduce(BitVector v) const {
  if (v.size() != cols_) throw InvalidInput("row space: vector length mismatch");
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    if (v.get(pivots_[i])) v ^= basis_[i];
  }
  return v;
}

bool RowSpace::insert(const BitVector& v) {
  BitVector r = reduce(v);
  const auto lead = r.first_set();
  if (!lead) return false;
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    if (basis_[i].get(*lead)) basis_[i] ^= r;
  }
  basis_.append_row(std::move(r));
  pivots_.push_back(*lead);
  return true;
}

RightInverse::RightInverse(const BitMatrix& g) : cols_(g.cols()), transform_(g.rows(), g.rows()) {
  // Row-reduce [G | I] and keep the right block.
  const std::size_t k = g.rows();
  std::vector<BitVector> rows;
  rows.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    rows.push_back(BitVector::concat(g[i], BitVector::unit(k, i)));
  }
  std::size_t top = 0;
  for (std::size_t c = 0; c < cols_ && top < k; ++c) {
    std::size_t sel = top;
    while (sel < k && !rows[sel].get(c)) ++sel;
    if (sel == k) continue;
    std::swap(rows[top], rows[sel]);
    for (std::size_t r = 0; r < k; ++r) {
      if (r != top && rows[r].get(c)) rows[r] ^= rows[top];
    }
    pivots_.push_back(c);
    ++top;
  }
  if (top != k) throw InvalidInput("right inverse requires linearly independent rows");
  for (std::size_t r = 0; r < k; ++r) transform_[r] = rows[r].slice(cols_, k);
}

BitVector RightInverse::solve(const BitVector& s) const {
  const BitVector ts = transform_.multiply(s);
  BitVector y(cols_);
  for (std::size_t r = 0; r < pivots_.size(); ++r) {
    if (ts.get(r)) y.set(pivots_[r]);
  }
  return y;
}

}  // namespace qcss
