#include "qcss/codes.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <fstream>
#include <mutex>
#include <sstream>

#include "qcss/errors.hpp"
#include "qcss/parallel.hpp"

namespace qcss {

namespace {

using Word = BitVector::Word;

template <std::size_t W>
using Packed = std::array<Word, W>;

template <std::size_t W>
Packed<W> pack(const BitVector& v) {
  Packed<W> p{};
  const auto words = v.words();
  std::copy(words.begin(), words.end(), p.begin());
  return p;
}

template <std::size_t W>
BitVector unpack(const Packed<W>& p, std::size_t len) {
  BitVector v(len);
  auto words = v.words();
  std::copy(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(words.size()), words.begin());
  return v;
}

template <std::size_t W>
inline std::size_t popcount(const Packed<W>& p) {
  std::size_t w = 0;
  for (std::size_t i = 0; i < W; ++i) w += static_cast<std::size_t>(std::popcount(p[i]));
  return w;
}

template <std::size_t W>
inline void xor_into(Packed<W>& acc, const Packed<W>& r) {
  for (std::size_t i = 0; i < W; ++i) acc[i] ^= r[i];
}

std::uint64_t checked_count(std::size_t k, std::uint64_t budget, const char* what) {
  if (k >= 63 || (std::uint64_t{1} << k) > budget) {
    throw ResourceError(std::string(what) + ": 2^" + std::to_string(k) +
                        " codewords exceed the enumeration budget; use min_distance_split or raise the budget");
  }
  return std::uint64_t{1} << k;
}

// Number of leading generator rows fixed per task so that work spreads over workers.
std::size_t prefix_bits(std::size_t k, std::size_t workers) {
  if (workers <= 1 || k < 12) return 0;
  std::size_t p = 0;
  while ((std::size_t{1} << p) < 8 * workers && p + 10 < k) ++p;
  return p;
}

template <std::size_t W>
std::vector<std::uint64_t> gray_histogram(const BitMatrix& g) {
  const std::size_t k = g.rows();
  const std::size_t n = g.cols();
  std::vector<Packed<W>> rows;
  rows.reserve(k);
  for (const auto& r : g.row_list()) rows.push_back(pack<W>(r));

  const std::size_t workers = worker_count();
  const std::size_t p = prefix_bits(k, workers);
  const std::size_t low = k - p;
  const std::size_t tasks = std::size_t{1} << p;
  std::vector<std::vector<std::uint64_t>> partial(tasks, std::vector<std::uint64_t>(n + 1, 0));

  parallel_for(tasks, [&](std::size_t t) {
    Packed<W> acc{};
    for (std::size_t b = 0; b < p; ++b) {
      if ((t >> b) & 1U) xor_into(acc, rows[low + b]);
    }
    auto& hist = partial[t];
    ++hist[popcount(acc)];
    const std::uint64_t count = std::uint64_t{1} << low;
    for (std::uint64_t i = 1; i < count; ++i) {
      xor_into(acc, rows[static_cast<std::size_t>(std::countr_zero(i))]);
      ++hist[popcount(acc)];
    }
  }, workers);

  std::vector<std::uint64_t> total(n + 1, 0);
  for (const auto& h : partial) {
    for (std::size_t w = 0; w <= n; ++w) total[w] += h[w];
  }
  return total;
}

std::vector<std::uint64_t> gray_histogram_any(const BitMatrix& g) {
  switch (BitVector::word_count(g.cols())) {
    case 0:
    case 1: return gray_histogram<1>(g);
    case 2: return gray_histogram<2>(g);
    case 3: return gray_histogram<3>(g);
    case 4: return gray_histogram<4>(g);
    default: break;
  }
  // Long codes: generic path.
  std::vector<std::uint64_t> hist(g.cols() + 1, 0);
  BitVector acc(g.cols());
  ++hist[0];
  const std::uint64_t count = std::uint64_t{1} << g.rows();
  for (std::uint64_t i = 1; i < count; ++i) {
    acc ^= g[static_cast<std::size_t>(std::countr_zero(i))];
    ++hist[acc.weight()];
  }
  return hist;
}

struct SplitBest {
  std::size_t weight = SIZE_MAX;
  std::optional<BitVector> witness;
  std::uint64_t patterns = 0;

  void offer(std::size_t w, const BitVector& word) {
    if (w < weight || (w == weight && witness && support_less(word, *witness))) {
      weight = w;
      witness = word;
    }
  }
  void merge(const SplitBest& o) {
    patterns += o.patterns;
    if (o.witness) offer(o.weight, *o.witness);
  }
};

template <std::size_t W>
class ComboSearch {
 public:
  ComboSearch(const BitMatrix& rows, std::size_t max_pick) : n_(rows.cols()), max_pick_(max_pick) {
    for (const auto& r : rows.row_list()) rows_.push_back(pack<W>(r));
  }

  // All combinations whose smallest row index is `first`.
  SplitBest run_from(std::size_t first) {
    best_ = SplitBest{};
    if (max_pick_ == 0) return best_;
    Packed<W> acc = rows_[first];
    visit(acc);
    descend(first + 1, 1, acc);
    return best_;
  }

 private:
  void visit(const Packed<W>& acc) {
    ++best_.patterns;
    const std::size_t w = popcount(acc);
    if (w < best_.weight || (w == best_.weight)) {
      const BitVector word = unpack<W>(acc, n_);
      if (w < best_.weight || (best_.witness && support_less(word, *best_.witness))) {
        best_.weight = w;
        best_.witness = word;
      }
    }
  }

  void descend(std::size_t start, std::size_t picked, const Packed<W>& acc) {
    if (picked == max_pick_) return;
    for (std::size_t i = start; i < rows_.size(); ++i) {
      Packed<W> next = acc;
      xor_into(next, rows_[i]);
      visit(next);
      descend(i + 1, picked + 1, next);
    }
  }

  std::size_t n_;
  std::size_t max_pick_;
  std::vector<Packed<W>> rows_;
  SplitBest best_;
};

template <std::size_t W>
SplitBest search_side(const BitMatrix& systematic, std::size_t max_pick) {
  const std::size_t k = systematic.rows();
  std::vector<SplitBest> partial(k);
  parallel_for(k, [&](std::size_t first) {
    ComboSearch<W> search(systematic, max_pick);
    partial[first] = search.run_from(first);
  });
  SplitBest best;
  for (const auto& p : partial) best.merge(p);
  return best;
}

SplitBest search_side_any(const BitMatrix& systematic, std::size_t max_pick) {
  switch (BitVector::word_count(systematic.cols())) {
    case 0:
    case 1: return search_side<1>(systematic, max_pick);
    case 2: return search_side<2>(systematic, max_pick);
    case 3: return search_side<3>(systematic, max_pick);
    case 4: return search_side<4>(systematic, max_pick);
    case 5:
    case 6:
    case 7:
    case 8: return search_side<8>(systematic, max_pick);
    default: throw InvalidInput("min_distance_split supports lengths up to 512");
  }
}

BigInt pow2(std::size_t e) { return BigInt(1) << e; }

}  // namespace

// ---------------------------------------------------------------------------

LinearCode::LinearCode(const BitMatrix& rows) : g_(BitMatrix::with_cols(rows.cols())), space_(rows.cols()) {
  for (const auto& r : rows.row_list()) {
    if (space_.insert(r)) g_.append_row(r);
  }
}

LinearCode LinearCode::zero(std::size_t n) { return LinearCode(BitMatrix::with_cols(n)); }

LinearCode LinearCode::full(std::size_t n) { return LinearCode(BitMatrix::identity(n)); }

LinearCode LinearCode::repetition(std::size_t n) {
  BitMatrix g = BitMatrix::with_cols(n);
  g.append_row(BitVector::ones(n));
  return LinearCode(g);
}

LinearCode LinearCode::even_weight(std::size_t n) {
  BitMatrix g = BitMatrix::with_cols(n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    BitVector r(n);
    r.set(i);
    r.set(i + 1);
    g.append_row(std::move(r));
  }
  return LinearCode(g);
}

bool LinearCode::same_code(const LinearCode& other) const {
  return n() == other.n() && k() == other.k() && is_subcode(*this, other);
}

BigInt WeightEnumerator::total() const {
  BigInt t = 0;
  for (const auto& c : coeffs) t += c;
  return t;
}

std::optional<std::size_t> WeightEnumerator::min_nonzero_weight() const {
  for (std::size_t w = 1; w < coeffs.size(); ++w) {
    if (coeffs[w] != 0) return w;
  }
  return std::nullopt;
}

std::string WeightEnumerator::to_csv() const {
  std::ostringstream os;
  os << "w,count\n";
  for (std::size_t w = 0; w < coeffs.size(); ++w) {
    if (coeffs[w] != 0) os << w << ',' << coeffs[w] << '\n';
  }
  return os.str();
}

LinearCode dual(const LinearCode& c) { return LinearCode(nullspace_basis(c.generator())); }

bool is_self_orthogonal(const LinearCode& c) {
  const auto& g = c.generator();
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (std::size_t j = i; j < g.rows(); ++j) {
      if (dot(g[i], g[j])) return false;
    }
  }
  return true;
}

bool is_subcode(const LinearCode& a, const LinearCode& b) {
  if (a.n() != b.n()) {
    throw InvalidInput("is_subcode: length mismatch " + std::to_string(a.n()) + " vs " + std::to_string(b.n()));
  }
  for (const auto& r : a.generator().row_list()) {
    if (!b.contains(r)) return false;
  }
  return true;
}

LinearCode intersection(const LinearCode& a, const LinearCode& b) {
  if (a.n() != b.n()) throw InvalidInput("intersection: length mismatch");
  // (A ∩ B)^perp = A^perp + B^perp
  BitMatrix sum = dual(a).generator();
  const LinearCode db = dual(b);
  for (const auto& r : db.generator().row_list()) sum.append_row(r);
  return LinearCode(nullspace_basis(sum));
}

WeightEnumerator weight_enumerator(const LinearCode& c, std::uint64_t budget) {
  checked_count(c.k(), budget, "weight_enumerator");
  const auto hist = gray_histogram_any(c.generator());
  WeightEnumerator w;
  w.coeffs.reserve(hist.size());
  for (auto h : hist) w.coeffs.emplace_back(h);
  return w;
}

WeightEnumerator macwilliams(const WeightEnumerator& w, std::size_t n, std::size_t k) {
  if (w.coeffs.size() != n + 1) throw InvalidInput("macwilliams: enumerator length must be n+1");
  if (w.coeffs[0] != 1) throw ConsistencyError("macwilliams: A_0 must be 1");
  if (w.total() != pow2(k)) throw ConsistencyError("macwilliams: enumerator does not sum to 2^k");

  // Pascal triangle up to n.
  std::vector<std::vector<BigInt>> binom(n + 1);
  for (std::size_t a = 0; a <= n; ++a) {
    binom[a].assign(a + 1, BigInt(1));
    for (std::size_t b = 1; b < a; ++b) binom[a][b] = binom[a - 1][b - 1] + binom[a - 1][b];
  }
  auto choose = [&](std::size_t a, std::size_t b) -> const BigInt& {
    static const BigInt zero = 0;
    return b > a ? zero : binom[a][b];
  };

  WeightEnumerator out;
  out.coeffs.assign(n + 1, BigInt(0));
  const BigInt scale = pow2(k);
  for (std::size_t target = 0; target <= n; ++target) {
    BigInt acc = 0;
    for (std::size_t j = 0; j <= n; ++j) {
      if (w.coeffs[j] == 0) continue;
      // Krawtchouk K_target(j)
      BigInt kraw = 0;
      const std::size_t top = std::min(j, target);
      for (std::size_t i = 0; i <= top; ++i) {
        const BigInt term = choose(j, i) * choose(n - j, target - i);
        if (i % 2 == 0) {
          kraw += term;
        } else {
          kraw -= term;
        }
      }
      acc += w.coeffs[j] * kraw;
    }
    if (acc < 0 || acc % scale != 0) {
      throw ConsistencyError("macwilliams: coefficient " + std::to_string(target) +
                             " is not a non-negative integer; input is not a valid enumerator");
    }
    out.coeffs[target] = acc / scale;
  }
  return out;
}

std::size_t min_distance_exhaustive(const LinearCode& c, std::uint64_t budget) {
  if (c.k() == 0) throw InvalidInput("minimum distance of the zero-dimensional code is undefined");
  checked_count(c.k(), budget, "min_distance_exhaustive");
  const auto hist = gray_histogram_any(c.generator());
  for (std::size_t w = 1; w < hist.size(); ++w) {
    if (hist[w] != 0) return w;
  }
  throw ConsistencyError("nonzero code without nonzero codewords");
}

std::size_t dual_distance(const LinearCode& c, std::uint64_t budget) {
  if (c.k() == c.n()) throw InvalidInput("dual of the full space is zero-dimensional; distance undefined");
  const std::size_t dual_k = c.n() - c.k();
  if (c.k() <= dual_k && c.k() < 63 && (std::uint64_t{1} << c.k()) <= budget) {
    const auto d = macwilliams(weight_enumerator(c, budget), c.n(), c.k()).min_nonzero_weight();
    if (!d) throw ConsistencyError("dual enumerator has no nonzero weight");
    return *d;
  }
  if (dual_k < 63 && (std::uint64_t{1} << dual_k) <= budget) return min_distance_exhaustive(dual(c), budget);
  if (c.k() < 63 && (std::uint64_t{1} << c.k()) <= budget) {
    const auto d = macwilliams(weight_enumerator(c, budget), c.n(), c.k()).min_nonzero_weight();
    if (!d) throw ConsistencyError("dual enumerator has no nonzero weight");
    return *d;
  }
  throw ResourceError("dual_distance: both the code and its dual exceed the enumeration budget");
}

SplitVerdict min_distance_split(const LinearCode& c, std::size_t bound) {
  SplitVerdict verdict;
  const auto& g = c.generator();

  // Divisibility shrinks the bound: all weights are multiples of `step`.
  std::size_t step = 1;
  const bool all_even = std::all_of(g.row_list().begin(), g.row_list().end(),
                                    [](const BitVector& r) { return r.weight() % 2 == 0; });
  if (all_even) {
    step = 2;
    const bool doubly = std::all_of(g.row_list().begin(), g.row_list().end(),
                                    [](const BitVector& r) { return r.weight() % 4 == 0; });
    if (doubly && is_self_orthogonal(c)) step = 4;
  }
  verdict.effective_bound = bound - bound % step;
  verdict.side_weight = verdict.effective_bound / 2;

  if (c.k() == 0 || verdict.side_weight == 0) {
    verdict.kind = SplitVerdict::Kind::kNoCodewordBelow;
    verdict.weight = bound + 1;
    return verdict;
  }

  // Side 1: information set = rref pivots.
  const auto first = rref(g);
  SplitBest best = search_side_any(first.reduced, verdict.side_weight);

  // Side 2: an information set inside the non-pivot columns.
  std::vector<bool> is_pivot(c.n(), false);
  for (auto p : first.pivots) is_pivot[p] = true;
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < c.n(); ++i) {
    if (!is_pivot[i]) order.push_back(i);
  }
  const std::size_t non_pivot_count = order.size();
  for (auto p : first.pivots) order.push_back(p);
  const auto second = rref(g.select_columns(order));
  if (second.pivots.size() != c.k() ||
      std::any_of(second.pivots.begin(), second.pivots.end(), [&](std::size_t p) { return p >= non_pivot_count; })) {
    throw PreconditionError("min_distance_split: non-pivot columns contain no information set");
  }
  SplitBest other = search_side_any(second.reduced, verdict.side_weight);
  if (other.witness) {
    BitVector restored(c.n());
    for (auto j : other.witness->support()) restored.set(order[j]);
    other.witness = restored;
  }
  best.merge(other);

  verdict.patterns = best.patterns;
  if (best.witness && best.weight <= bound) {
    verdict.kind = SplitVerdict::Kind::kFoundWeight;
    verdict.weight = best.weight;
    verdict.witness = best.witness;
  } else {
    verdict.kind = SplitVerdict::Kind::kNoCodewordBelow;
    verdict.weight = bound + 1;
  }
  return verdict;
}

void for_each_codeword(const LinearCode& c, const std::function<void(const BitVector&)>& visit, std::uint64_t budget) {
  const std::uint64_t count = checked_count(c.k(), budget, "for_each_codeword");
  BitVector acc(c.n());
  visit(acc);
  for (std::uint64_t i = 1; i < count; ++i) {
    acc ^= c.generator()[static_cast<std::size_t>(std::countr_zero(i))];
    visit(acc);
  }
}

std::vector<BitVector> min_weight_codewords(const LinearCode& c, std::uint64_t budget) {
  if (c.k() == 0) throw InvalidInput("zero-dimensional code has no nonzero codewords");
  std::size_t best = SIZE_MAX;
  std::vector<BitVector> words;
  for_each_codeword(c, [&](const BitVector& v) {
    const std::size_t w = v.weight();
    if (w == 0 || w > best) return;
    if (w < best) {
      best = w;
      words.clear();
    }
    words.push_back(v);
  }, budget);
  std::sort(words.begin(), words.end(), support_less);
  return words;
}

bool support_less(const BitVector& a, const BitVector& b) {
  const auto wa = a.words();
  const auto wb = b.words();
  for (std::size_t i = 0; i < wa.size() && i < wb.size(); ++i) {
    const Word diff = wa[i] ^ wb[i];
    if (diff != 0) return (wa[i] & (diff & (~diff + 1))) != 0;
  }
  return false;
}

std::string to_text(const LinearCode& c) { return c.generator().to_text(); }

LinearCode code_from_text(std::istream& in) { return LinearCode(BitMatrix::from_text(in)); }

LinearCode read_code_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open code file '" + path + "'");
  return code_from_text(in);
}

void write_code_file(const std::string& path, const LinearCode& c) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write code file '" + path + "'");
  out << to_text(c);
}

}  // namespace qcss
