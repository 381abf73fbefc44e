#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qcss {

/// Packed vector over GF(2). Bit i lives in word i/64 at position i%64;
/// bits at and beyond size() are always zero.
class BitVector {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitVector() = default;
  explicit BitVector(std::size_t len) : len_(len), words_(word_count(len), 0) {}

  /// Parses a '0'/'1' string; character 0 becomes bit 0.
  static BitVector from_string(std::string_view bits);
  /// Parses a hexadecimal integer (optional 0x prefix) so that bit i of the
  /// integer is bit i of the vector. Throws if the value needs more than `len` bits.
  static BitVector from_hex(std::string_view hex, std::size_t len);
  static BitVector ones(std::size_t len);
  static BitVector unit(std::size_t len, std::size_t index);
  static BitVector from_support(std::size_t len, std::span<const std::size_t> support);

  static constexpr std::size_t word_count(std::size_t len) { return (len + kWordBits - 1) / kWordBits; }

  std::size_t size() const { return len_; }
  bool empty() const { return len_ == 0; }

  bool get(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(std::size_t i, bool value = true) {
    const Word mask = Word{1} << (i % kWordBits);
    if (value) {
      words_[i / kWordBits] |= mask;
    } else {
      words_[i / kWordBits] &= ~mask;
    }
  }
  void flip(std::size_t i) { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }
  bool operator[](std::size_t i) const { return get(i); }

  std::size_t weight() const;
  bool any() const;
  bool none() const { return !any(); }
  /// Lowest index holding a one.
  std::optional<std::size_t> first_set() const;
  std::vector<std::size_t> support() const;

  std::span<const Word> words() const { return words_; }
  std::span<Word> words() { return words_; }

  BitVector& operator^=(const BitVector& other);
  BitVector& operator&=(const BitVector& other);
  BitVector& operator|=(const BitVector& other);
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }
  friend BitVector operator|(BitVector a, const BitVector& b) { return a |= b; }
  friend bool operator==(const BitVector&, const BitVector&) = default;

  /// Bits [begin, begin+count).
  BitVector slice(std::size_t begin, std::size_t count) const;
  /// Copy with the listed coordinates removed (indices must be sorted ascending).
  BitVector erase(std::span<const std::size_t> sorted_indices) const;
  /// Bits at the listed coordinates, in the listed order.
  BitVector gather(std::span<const std::size_t> indices) const;
  /// Cyclic shift: result[(i + s) mod n] = this[i].
  BitVector rotate(std::size_t shift) const;
  static BitVector concat(const BitVector& a, const BitVector& b);

  std::string to_string() const;
  /// Inverse of from_hex: bit i of the vector is bit i of the printed integer.
  std::string to_hex() const;

 private:
  void check_same_length(const BitVector& other) const;

  std::size_t len_ = 0;
  std::vector<Word> words_;
};

/// Parity of popcount(u AND v). Throws InvalidInput on length mismatch.
bool dot(const BitVector& u, const BitVector& v);

/// Dense row-major matrix over GF(2).
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);
  /// Every row must have length `cols`.
  BitMatrix(std::size_t cols, std::vector<BitVector> rows);

  static BitMatrix identity(std::size_t n);
  /// Matrix with `cols` columns and no rows yet.
  static BitMatrix with_cols(std::size_t cols) { return BitMatrix(cols, std::vector<BitVector>{}); }
  /// Rows given as '0'/'1' strings of equal length.
  static BitMatrix from_strings(std::span<const std::string_view> rows);
  static BitMatrix from_strings(std::initializer_list<std::string_view> rows);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_.empty(); }

  const BitVector& row(std::size_t i) const { return rows_[i]; }
  BitVector& row(std::size_t i) { return rows_[i]; }
  const BitVector& operator[](std::size_t i) const { return rows_[i]; }
  BitVector& operator[](std::size_t i) { return rows_[i]; }
  const std::vector<BitVector>& row_list() const { return rows_; }

  bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool value = true) { rows_[r].set(c, value); }

  void append_row(BitVector row);
  BitVector column(std::size_t c) const;
  BitMatrix transpose() const;
  /// M * v^T: one parity per row.
  BitVector multiply(const BitVector& v) const;
  /// v * M: XOR of the rows selected by v.
  BitVector combine(const BitVector& coefficients) const;
  /// Copy with the columns permuted: result column j = this column order[j].
  BitMatrix select_columns(std::span<const std::size_t> order) const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

  /// "rows cols" header then one 0/1 string per row, column 0 first.
  std::string to_text() const;
  static BitMatrix from_text(std::istream& in);
  static BitMatrix from_text(std::string_view text);

 private:
  std::size_t cols_ = 0;
  std::vector<BitVector> rows_;
};

struct RrefResult {
  BitMatrix reduced;                 // zero rows removed
  std::vector<std::size_t> pivots;   // pivot column of each row of `reduced`
};

/// Reduced row-echelon form; pivots chosen leftmost column first, topmost row first.
RrefResult rref(const BitMatrix& m);
std::size_t rank(const BitMatrix& m);
/// Basis of {v : M v^T = 0}, cols - rank rows.
BitMatrix nullspace_basis(const BitMatrix& m);

/// Incremental row space: membership tests and reduction against a fixed rref.
class RowSpace {
 public:
  RowSpace() = default;
  explicit RowSpace(std::size_t cols) : cols_(cols), basis_(BitMatrix::with_cols(cols)) {}
  explicit RowSpace(const BitMatrix& m);

  std::size_t dimension() const { return basis_.rows(); }
  std::size_t length() const { return cols_; }
  const BitMatrix& basis() const { return basis_; }
  /// Pivot column of each basis row (insertion order, not sorted).
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// v reduced by the basis; zero iff v lies in the space.
  BitVector reduce(BitVector v) const;
  bool contains(const BitVector& v) const { return reduce(v).none(); }
  /// Adds v if independent; returns whether the dimension grew.
  bool insert(const BitVector& v);

 private:
  std::size_t cols_ = 0;
  BitMatrix basis_;                  // fully reduced: each pivot column has a single one
  std::vector<std::size_t> pivots_;
};

/// Solves G y^T = s for a matrix with linearly independent rows.
class RightInverse {
 public:
  explicit RightInverse(const BitMatrix& g);
  /// Some y with G y^T = s (zero outside the pivot columns).
  BitVector solve(const BitVector& s) const;

 private:
  std::size_t cols_ = 0;
  std::vector<std::size_t> pivots_;
  BitMatrix transform_;   // rref(G) = transform * G
};

}  // namespace qcss
