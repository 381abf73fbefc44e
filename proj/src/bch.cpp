#include "qcss/bch.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

#include "qcss/errors.hpp"

namespace qcss {

namespace {

// Field tables for m up to 20 are a few MB; build each once.
const Gf2mField& field_for(unsigned m) {
  static std::mutex mu;
  static std::map<unsigned, std::unique_ptr<Gf2mField>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[m];
  if (!slot) slot = std::make_unique<Gf2mField>(m);
  return *slot;
}

std::vector<std::size_t> close_under_doubling(const std::vector<std::size_t>& zeros, std::size_t n) {
  std::vector<bool> in(n, false);
  for (auto z : zeros) {
    std::size_t e = z % n;
    while (!in[e]) {
      in[e] = true;
      e = (2 * e) % n;
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (in[i]) out.push_back(i);
  }
  return out;
}

std::uint32_t beta_log_for(const Gf2mField& f, std::size_t n) { return f.order() / static_cast<std::uint32_t>(n); }

// r(alpha^(log_step * ...)): evaluates a binary polynomial at alpha^e.
Gf2mField::Elem eval_at_alpha_pow(const Gf2mField& f, const BitVector& r, std::uint64_t e) {
  Gf2mField::Elem acc = 0;
  const std::uint64_t q1 = f.order();
  for (auto i : r.support()) acc ^= f.alpha_pow(static_cast<std::int64_t>((e % q1) * i % q1));
  return acc;
}

}  // namespace

long poly_degree(const BitVector& p) {
  const auto w = p.words();
  for (std::size_t i = w.size(); i-- > 0;) {
    if (w[i] != 0) return static_cast<long>(i * 64 + 63 - std::countl_zero(w[i]));
  }
  return -1;
}

BitVector poly_mul(const BitVector& a, const BitVector& b) {
  const long da = poly_degree(a), db = poly_degree(b);
  if (da < 0 || db < 0) return BitVector(1);
  BitVector out(static_cast<std::size_t>(da + db + 1));
  const auto sb = b.support();
  for (auto i : a.support()) {
    for (auto j : sb) out.flip(i + j);
  }
  return out;
}

BitVector poly_mod(const BitVector& a, const BitVector& b) {
  const long db = poly_degree(b);
  if (db < 0) throw InvalidInput("poly_mod: division by zero polynomial");
  BitVector r = a;
  const auto sb = b.support();
  for (long d = poly_degree(r); d >= db; d = poly_degree(r)) {
    for (auto j : sb) r.flip(static_cast<std::size_t>(d - db) + j);
  }
  BitVector out(static_cast<std::size_t>(std::max<long>(db, 1)));
  for (auto i : r.support()) out.set(i);
  return out;
}

bool poly_divides(const BitVector& divisor, const BitVector& p) { return poly_mod(p, divisor).none(); }

BitVector poly_xn_plus_1(std::size_t n) {
  BitVector p(n + 1);
  p.set(0);
  p.set(n);
  return p;
}

unsigned multiplicative_order_of_2(std::size_t n) {
  if (n % 2 == 0 || n == 0) throw InvalidInput("multiplicative order of 2 needs odd n");
  if (n == 1) return 1;
  std::size_t x = 2 % n;
  unsigned m = 1;
  while (x != 1) {
    x = (2 * x) % n;
    ++m;
  }
  return m;
}

std::vector<std::size_t> cyclotomic_coset(std::size_t e, std::size_t n) { return close_under_doubling({e}, n); }

BitVector minimal_polynomial(const Gf2mField& f, std::uint32_t e) {
  if (e >= f.order()) throw InvalidInput("minimal_polynomial: exponent out of range");
  const auto coset = cyclotomic_coset(e, f.order());
  std::vector<Gf2mField::Elem> poly{1};
  for (auto i : coset) {
    const auto root = f.alpha_pow(static_cast<std::int64_t>(i));
    std::vector<Gf2mField::Elem> next(poly.size() + 1, 0);
    for (std::size_t k = 0; k < poly.size(); ++k) {
      next[k + 1] ^= poly[k];
      next[k] ^= f.mul(poly[k], root);
    }
    poly = std::move(next);
  }
  BitVector out(poly.size());
  for (std::size_t k = 0; k < poly.size(); ++k) {
    if (poly[k] > 1) throw ConsistencyError("minimal polynomial has a coefficient outside GF(2)");
    if (poly[k]) out.set(k);
  }
  return out;
}

BchWindow best_window(const std::vector<std::size_t>& zero_set, std::size_t n) {
  BchWindow best;
  if (zero_set.empty()) return best;
  std::vector<bool> in(n, false);
  for (auto z : zero_set) in[z % n] = true;
  for (std::size_t a = 1; a < std::max<std::size_t>(n, 2); ++a) {
    if (std::gcd(a, n) != 1) continue;
    for (auto b : zero_set) {
      // only start at the beginning of a run
      if (in[(b + n - a % n) % n] && zero_set.size() < n) continue;
      std::size_t len = 0;
      while (len < n && in[(b + len * a) % n]) ++len;
      if (len > best.length) best = BchWindow{a, b, len};
    }
  }
  return best;
}

std::string CyclicCodeSpec::generator_hex() const { return generator.to_hex(); }

CyclicCodeSpec cyclic_from_zero_set(std::size_t n, const std::vector<std::size_t>& zeros) {
  CyclicCodeSpec spec;
  spec.n = n;
  spec.m = multiplicative_order_of_2(n);
  spec.zero_set = close_under_doubling(zeros, n);
  if (spec.zero_set.size() >= n) throw PreconditionError("cyclic code: generator has degree n (empty code)");
  const auto& f = field_for(std::max(spec.m, 2U));
  const std::uint64_t bl = f.order() / n;
  std::vector<Gf2mField::Elem> poly{1};
  for (auto i : spec.zero_set) {
    const auto root = f.alpha_pow(static_cast<std::int64_t>(bl * i % f.order()));
    std::vector<Gf2mField::Elem> next(poly.size() + 1, 0);
    for (std::size_t k = 0; k < poly.size(); ++k) {
      next[k + 1] ^= poly[k];
      next[k] ^= f.mul(poly[k], root);
    }
    poly = std::move(next);
  }
  spec.generator = BitVector(n + 1);
  for (std::size_t k = 0; k < poly.size(); ++k) {
    if (poly[k] > 1) throw ConsistencyError("generator polynomial has a coefficient outside GF(2)");
    if (poly[k]) spec.generator.set(k);
  }
  return spec;
}

CyclicCodeSpec bch_generator(std::size_t n, std::size_t b, std::size_t delta) {
  if (n % 2 == 0) throw InvalidInput("BCH: length must be odd");
  if (delta < 2) throw InvalidInput("BCH: designed distance must be at least 2");
  std::vector<std::size_t> zeros;
  for (std::size_t k = b; k + 2 <= b + delta; ++k) zeros.push_back(k % n);
  auto spec = cyclic_from_zero_set(n, zeros);
  spec.b = b;
  spec.delta = delta;
  return spec;
}

std::vector<std::size_t> zero_set_of(const BitVector& g, std::size_t n) {
  const unsigned m = multiplicative_order_of_2(n);
  const auto& f = field_for(std::max(m, 2U));
  const std::uint64_t bl = f.order() / n;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (eval_at_alpha_pow(f, g, bl * i) == 0) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> dual_zero_set(const std::vector<std::size_t>& zero_set, std::size_t n) {
  std::vector<bool> in(n, false);
  for (auto z : zero_set) in[z % n] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (!in[(n - i) % n]) out.push_back(i);
  }
  return out;
}

bool is_self_orthogonal_cyclic(const std::vector<std::size_t>& zero_set, std::size_t n) {
  std::vector<bool> in(n, false);
  for (auto z : zero_set) in[z % n] = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (!in[(n - i) % n] && !in[i]) return false;
  }
  return true;
}

LinearCode cyclic_code(const CyclicCodeSpec& spec) {
  const long deg = poly_degree(spec.generator);
  if (deg < 0 || static_cast<std::size_t>(deg) >= spec.n) throw PreconditionError("cyclic_code: bad generator degree");
  const std::size_t k = spec.n - static_cast<std::size_t>(deg);
  BitMatrix rows(k, spec.n);
  for (std::size_t s = 0; s < k; ++s) {
    for (auto i : spec.generator.support()) rows.set(s, i + s);
  }
  return LinearCode(rows);
}

BchDecoder::BchDecoder(const CyclicCodeSpec& spec)
    : spec_(spec), field_(field_for(std::max(spec.m, 2U))), window_(best_window(spec.zero_set, spec.n)) {
  beta_log_ = beta_log_for(field_, spec.n);
  gamma_log_ = static_cast<std::uint32_t>(std::uint64_t{beta_log_} * window_.step % field_.order());
}

std::optional<std::vector<std::size_t>> BchDecoder::decode(const BitVector& r) const {
  if (r.size() != spec_.n) throw InvalidInput("BCH decode: received word has wrong length");
  const std::size_t t = radius();
  const std::uint64_t q1 = field_.order();
  const std::size_t syndromes = 2 * t;
  std::vector<Gf2mField::Elem> s(syndromes);
  bool all_zero = true;
  for (std::size_t j = 0; j < syndromes; ++j) {
    const std::uint64_t e = (window_.start + j * window_.step) % spec_.n;
    s[j] = eval_at_alpha_pow(field_, r, std::uint64_t{beta_log_} * e % q1);
    all_zero = all_zero && s[j] == 0;
  }
  if (all_zero) {
    // Zero window syndromes: either a codeword or an undetectable pattern.
    if (poly_mod(r, spec_.generator).none()) return std::vector<std::size_t>{};
    return std::nullopt;
  }

  // Berlekamp-Massey
  std::vector<Gf2mField::Elem> c{1}, b{1};
  std::size_t len = 0, shift = 1;
  Gf2mField::Elem last = 1;
  for (std::size_t k = 0; k < syndromes; ++k) {
    Gf2mField::Elem d = s[k];
    for (std::size_t i = 1; i <= len && i < c.size(); ++i) d ^= field_.mul(c[i], s[k - i]);
    if (d == 0) {
      ++shift;
      continue;
    }
    const auto coef = field_.div(d, last);
    auto t_poly = c;
    if (c.size() < b.size() + shift) c.resize(b.size() + shift, 0);
    for (std::size_t i = 0; i < b.size(); ++i) c[i + shift] ^= field_.mul(coef, b[i]);
    if (2 * len <= k) {
      len = k + 1 - len;
      b = std::move(t_poly);
      last = d;
      shift = 1;
    } else {
      ++shift;
    }
  }
  while (c.size() > 1 && c.back() == 0) c.pop_back();
  if (len > t || c.size() - 1 != len) return std::nullopt;

  // Chien search: roots gamma^(-p) give error positions p.
  std::vector<std::size_t> positions;
  for (std::size_t p = 0; p < spec_.n; ++p) {
    const std::int64_t x = -static_cast<std::int64_t>(std::uint64_t{gamma_log_} * p % q1);
    Gf2mField::Elem acc = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i]) acc ^= field_.mul(c[i], field_.alpha_pow(x * static_cast<std::int64_t>(i)));
    }
    if (acc == 0) positions.push_back(p);
  }
  if (positions.size() != len) return std::nullopt;
  BitVector fixed = r;
  for (auto p : positions) fixed.flip(p);
  if (!poly_mod(fixed, spec_.generator).none()) return std::nullopt;
  return positions;
}

std::optional<std::vector<std::size_t>> bm_decode(const CyclicCodeSpec& spec, const BitVector& received) {
  return BchDecoder(spec).decode(received);
}

std::vector<SoBchResult> search_self_orthogonal_bch(std::size_t n) {
  if (n % 2 == 0 || n < 3) throw InvalidInput("search_self_orthogonal_bch: n must be odd and >= 3");
  std::map<std::vector<std::size_t>, std::pair<std::size_t, std::size_t>> found;  // I_C -> (b, delta)
  for (std::size_t b = 1; b <= n; ++b) {
    for (std::size_t delta = 2; delta <= n; ++delta) {
      std::vector<std::size_t> window;
      for (std::size_t k = b; k + 2 <= b + delta; ++k) window.push_back(k % n);
      const auto z = close_under_doubling(window, n);
      if (z.size() >= n) break;
      const auto ic = dual_zero_set(z, n);
      if (!is_self_orthogonal_cyclic(ic, n)) continue;
      found.emplace(ic, std::make_pair(b, delta));
    }
  }
  std::vector<SoBchResult> out;
  for (const auto& [ic, bd] : found) {
    SoBchResult r;
    r.code = cyclic_from_zero_set(n, ic);
    r.code.b = bd.first;
    r.code.delta = bd.second;
    r.dual_designed_distance = best_window(dual_zero_set(ic, n), n).designed_distance();
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(), [](const SoBchResult& a, const SoBchResult& b) {
    if (a.code.dimension() != b.code.dimension()) return a.code.dimension() < b.code.dimension();
    return a.code.zero_set < b.code.zero_set;
  });
  return out;
}

std::optional<std::size_t> zero_set_multiplier(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b,
                                               std::size_t n) {
  if (a.size() != b.size()) return std::nullopt;
  std::vector<std::size_t> target = b;
  std::sort(target.begin(), target.end());
  std::vector<std::size_t> img(a.size());
  for (std::size_t j = 1; j < std::max<std::size_t>(n, 2); ++j) {
    if (std::gcd(j, n) != 1) continue;
    for (std::size_t i = 0; i < a.size(); ++i) img[i] = a[i] * j % n;
    std::sort(img.begin(), img.end());
    if (img == target) return j;
  }
  return std::nullopt;
}

LinearCode golay24() {
  CyclicCodeSpec spec;
  spec.n = 23;
  spec.generator = BitVector::from_hex("0xC75", 24);  // x^11+x^10+x^6+x^5+x^4+x^2+1
  const auto cyclic = cyclic_code(spec);
  BitMatrix rows = BitMatrix::with_cols(24);
  for (const auto& g : cyclic.generator().row_list()) {
    BitVector ext(24);
    for (auto i : g.support()) ext.set(i);
    if (g.weight() % 2) ext.set(23);
    rows.append_row(ext);
  }
  return LinearCode(rows);
}

}  // namespace qcss
