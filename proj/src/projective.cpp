#include "qcss/projective.hpp"

#include <algorithm>
#include <bit>
#include <boost/multiprecision/cpp_int.hpp>
#include <limits>
#include <numeric>

#include "qcss/errors.hpp"

namespace qcss {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

std::size_t and_weight(const BitVector& a, const BitVector& b) {
  const auto wa = a.words();
  const auto wb = b.words();
  std::size_t w = 0;
  for (std::size_t i = 0; i < wa.size(); ++i) w += static_cast<std::size_t>(std::popcount(wa[i] & wb[i]));
  return w;
}

// Polynomials over GF(p) as coefficient vectors, lowest degree first.
using Poly = std::vector<unsigned>;

Poly poly_rem(Poly a, const Poly& m, unsigned p) {
  const std::size_t dm = m.size() - 1;
  unsigned lead_inv = 1;
  while (lead_inv * m.back() % p != 1) ++lead_inv;
  while (a.size() > dm) {
    const unsigned c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = (a[shift + i] + p - c * m[i] % p) % p;
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  return a;
}

Poly monic_from_index(std::size_t idx, unsigned degree, unsigned p) {
  Poly f(degree + 1, 0);
  for (unsigned i = 0; i < degree; ++i) {
    f[i] = static_cast<unsigned>(idx % p);
    idx /= p;
  }
  f[degree] = 1;
  return f;
}

bool irreducible(const Poly& f, unsigned p) {
  const unsigned deg = static_cast<unsigned>(f.size() - 1);
  for (unsigned d = 1; 2 * d <= deg; ++d) {
    std::size_t count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (std::size_t idx = 0; idx < count; ++idx) {
      if (poly_rem(f, monic_from_index(idx, d, p), p).empty()) return false;
    }
  }
  return true;
}

std::size_t ipow(std::size_t base, unsigned e) {
  std::size_t r = 1;
  while (e--) r *= base;
  return r;
}

}  // namespace

SmallField::SmallField(unsigned q) : q_(q) {
  if (q < 2 || q > 64) throw InvalidInput("GF(q): q must be a prime power in 2..64");
  for (unsigned d = 2; d <= q; ++d) {
    if (q % d == 0) {
      p_ = d;
      break;
    }
  }
  unsigned rest = q;
  while (rest % p_ == 0) {
    rest /= p_;
    ++s_;
  }
  if (rest != 1) throw InvalidInput("GF(q): " + std::to_string(q) + " is not a prime power");

  Poly modulus;
  for (std::size_t idx = 0;; ++idx) {
    modulus = monic_from_index(idx, s_, p_);
    if (s_ == 1 || irreducible(modulus, p_)) break;
  }
  auto digits = [&](unsigned a) {
    Poly d(s_);
    for (unsigned i = 0; i < s_; ++i) {
      d[i] = a % p_;
      a /= p_;
    }
    return d;
  };
  auto pack = [&](const Poly& d) {
    unsigned a = 0;
    for (unsigned i = static_cast<unsigned>(d.size()); i-- > 0;) a = a * p_ + d[i];
    return a;
  };
  add_.assign(q * q, 0);
  mul_.assign(q * q, 0);
  neg_.assign(q, 0);
  for (unsigned a = 0; a < q; ++a) {
    const Poly da = digits(a);
    Poly dn(s_);
    for (unsigned i = 0; i < s_; ++i) dn[i] = (p_ - da[i]) % p_;
    neg_[a] = pack(dn);
    for (unsigned b = 0; b < q; ++b) {
      const Poly db = digits(b);
      Poly sum(s_);
      for (unsigned i = 0; i < s_; ++i) sum[i] = (da[i] + db[i]) % p_;
      add_[a * q + b] = pack(sum);
      Poly prod(2 * s_ - 1, 0);
      for (unsigned i = 0; i < s_; ++i) {
        for (unsigned j = 0; j < s_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
      }
      while (!prod.empty() && prod.back() == 0) prod.pop_back();
      prod = poly_rem(prod, modulus, p_);
      mul_[a * q + b] = pack(prod);
    }
  }
}

unsigned SmallField::inv(unsigned a) const {
  if (a == 0) throw InvalidInput("GF(q): inverse of zero");
  for (unsigned b = 1; b < q_; ++b) {
    if (mul(a, b) == 1) return b;
  }
  throw ConsistencyError("GF(q): no inverse");
}

ProjGeometry::ProjGeometry(unsigned k, unsigned q) : k_(k), field_(q) {
  if (k < 1) throw InvalidInput("PG(k,q): need k >= 1");
  const std::size_t total = ipow(q, k + 1);
  if (total > (std::size_t{1} << 22)) throw ResourceError("PG(k,q): too many vectors to enumerate");
  by_key_.assign(total, kNone);
  for (std::size_t key = 1; key < total; ++key) {
    std::vector<unsigned> x(k + 1);
    std::size_t rest = key;
    for (unsigned i = k + 1; i-- > 0;) {
      x[i] = static_cast<unsigned>(rest % q);
      rest /= q;
    }
    const auto first = std::find_if(x.begin(), x.end(), [](unsigned c) { return c != 0; });
    if (*first != 1) continue;
    by_key_[key] = points_.size();
    points_.push_back(std::move(x));
  }
}

std::size_t ProjGeometry::index_of(const std::vector<unsigned>& canonical) const {
  std::size_t key = 0;
  for (auto c : canonical) key = key * field_.q() + c;
  const std::size_t idx = key < by_key_.size() ? by_key_[key] : kNone;
  if (idx == kNone) throw InvalidInput("PG(k,q): vector is not a canonical point");
  return idx;
}

std::string Configuration::name() const {
  if (q == 0) return "configuration";
  return "PG(" + std::to_string(k) + "," + std::to_string(q) + ") " + std::to_string(l) + "-spaces";
}

ConfigParams config_params(unsigned k, unsigned q, unsigned l) {
  if (l < 1 || l + 1 > k) throw InvalidInput("config_params: need 1 <= l <= k-1");
  using boost::multiprecision::cpp_int;
  // Gaussian binomial [n, j]_q as a ratio of products of P(0, a-1) = (q^a - 1)/(q - 1)
  auto gauss = [&](unsigned n, unsigned j) -> std::size_t {
    cpp_int num = 1, den = 1;
    for (unsigned i = 0; i < j; ++i) {
      num *= (cpp_int(ipow(q, n - i)) - 1) / (q - 1);
      den *= (cpp_int(ipow(q, i + 1)) - 1) / (q - 1);
    }
    if (num % den != 0) throw ConsistencyError("config_params: inexact division");
    return static_cast<std::size_t>(num / den);
  };
  return ConfigParams{gauss(k + 1, l + 1), gauss(k + 1, 1), gauss(k, l), gauss(l + 1, 1), gauss(k - 1, l - 1)};
}

Configuration configuration_from_incidence(const BitMatrix& incidence) {
  Configuration cfg;
  cfg.incidence = incidence;
  cfg.b = incidence.rows();
  cfg.v = incidence.cols();
  if (cfg.b == 0 || cfg.v == 0) throw InvalidInput("configuration: empty incidence matrix");

  cfg.kprime = incidence[0].weight();
  for (const auto& row : incidence.row_list()) {
    if (row.weight() != cfg.kprime) throw ConsistencyError("configuration: row weights differ");
  }
  const BitMatrix cols = incidence.transpose();
  cfg.r = cols[0].weight();
  for (const auto& col : cols.row_list()) {
    if (col.weight() != cfg.r) throw ConsistencyError("configuration: column weights differ");
  }
  if (cfg.v > 1) {
    cfg.lambda = and_weight(cols[0], cols[1]);
    for (std::size_t i = 0; i < cfg.v; ++i) {
      for (std::size_t j = i + 1; j < cfg.v; ++j) {
        if (and_weight(cols[i], cols[j]) != cfg.lambda) throw ConsistencyError("configuration: column pairs differ");
      }
    }
  }
  for (std::size_t i = 0; i < cfg.b; ++i) {
    for (std::size_t j = i + 1; j < cfg.b; ++j) cfg.row_intersections.insert(and_weight(incidence[i], incidence[j]));
  }
  return cfg;
}

Configuration enumerate_spaces(const ProjGeometry& geom, unsigned l) {
  const unsigned k = geom.k();
  const ConfigParams expect = config_params(k, geom.field().q(), l);
  const SmallField& f = geom.field();
  const unsigned q = f.q();
  const unsigned d = l + 1;
  const unsigned len = k + 1;

  BitMatrix incidence = BitMatrix::with_cols(geom.point_count());
  std::vector<unsigned> pivots(d);
  std::iota(pivots.begin(), pivots.end(), 0U);
  while (true) {
    // free entries: row i, columns after its pivot that are not pivots
    std::vector<std::pair<unsigned, unsigned>> free_cells;
    for (unsigned i = 0; i < d; ++i) {
      for (unsigned c = pivots[i] + 1; c < len; ++c) {
        if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) free_cells.emplace_back(i, c);
      }
    }
    std::vector<unsigned> values(free_cells.size(), 0);
    while (true) {
      std::vector<std::vector<unsigned>> basis(d, std::vector<unsigned>(len, 0));
      for (unsigned i = 0; i < d; ++i) basis[i][pivots[i]] = 1;
      for (std::size_t t = 0; t < free_cells.size(); ++t) basis[free_cells[t].first][free_cells[t].second] = values[t];

      BitVector row(geom.point_count());
      // combinations whose first nonzero coefficient is 1 are already canonical
      for (unsigned lead = 0; lead < d; ++lead) {
        const std::size_t tail = ipow(q, d - 1 - lead);
        for (std::size_t idx = 0; idx < tail; ++idx) {
          std::vector<unsigned> x = basis[lead];
          std::size_t rest = idx;
          for (unsigned i = lead + 1; i < d; ++i) {
            const unsigned c = static_cast<unsigned>(rest % q);
            rest /= q;
            if (c == 0) continue;
            for (unsigned j = 0; j < len; ++j) x[j] = f.add(x[j], f.mul(c, basis[i][j]));
          }
          row.set(geom.index_of(x));
        }
      }
      incidence.append_row(std::move(row));

      std::size_t t = 0;
      while (t < values.size() && ++values[t] == q) values[t++] = 0;
      if (t == values.size()) break;
    }
    // next pivot subset in lexicographic order
    int i = static_cast<int>(d) - 1;
    while (i >= 0 && pivots[i] == len - d + static_cast<unsigned>(i)) --i;
    if (i < 0) break;
    ++pivots[i];
    for (unsigned j = static_cast<unsigned>(i) + 1; j < d; ++j) pivots[j] = pivots[j - 1] + 1;
  }

  Configuration cfg = configuration_from_incidence(incidence);
  cfg.k = k;
  cfg.q = q;
  cfg.l = l;
  const ConfigParams got{cfg.b, cfg.v, cfg.r, cfg.kprime, cfg.lambda};
  if (!(got == expect)) throw ConsistencyError("enumerate_spaces: counts disagree with closed form for " + cfg.name());
  return cfg;
}

Configuration enumerate_spaces(unsigned k, unsigned q, unsigned l) { return enumerate_spaces(ProjGeometry(k, q), l); }

bool needs_extension(const Configuration& cfg) {
  bool odd_meet = false, even_meet = false;
  for (auto s : cfg.row_intersections) (s % 2 ? odd_meet : even_meet) = true;
  if (cfg.kprime % 2 == 0 && !odd_meet) return false;
  if (cfg.kprime % 2 == 1 && !even_meet) return true;
  throw PreconditionError("unsupported configuration " + cfg.name() + ": block size parity k'=" +
                          std::to_string(cfg.kprime) + " with row intersections of mixed or opposite parity");
}

LinearCode build_so_code(const Configuration& cfg) {
  const bool extend = needs_extension(cfg);
  BitMatrix rows = BitMatrix::with_cols(cfg.v + (extend ? 1 : 0));
  for (const auto& r : cfg.incidence.row_list()) {
    rows.append_row(extend ? BitVector::concat(r, BitVector::ones(1)) : r);
  }
  LinearCode code(rows);
  if (!is_self_orthogonal(code)) throw ConsistencyError("build_so_code: result is not self-orthogonal");
  return code;
}

std::size_t rudolph_bound(const Configuration& cfg) { return (cfg.r + cfg.lambda - 1) / (2 * cfg.lambda); }
std::size_t rudolph_extended_bound(const Configuration& cfg) { return (cfg.r + cfg.lambda) / (2 * cfg.lambda); }

RudolphDecoder::RudolphDecoder(const Configuration& cfg, bool extended)
    : RudolphDecoder(cfg, extended, extended ? rudolph_extended_bound(cfg) : rudolph_bound(cfg)) {}

RudolphDecoder::RudolphDecoder(const Configuration& cfg, bool extended, std::size_t radius)
    : cfg_(cfg), extended_(extended), radius_(radius) {
  if (cfg_.lambda == 0) throw PreconditionError("Rudolph decoding needs lambda >= 1");
  const BitMatrix cols = cfg_.incidence.transpose();
  checks_on_point_ = cols.row_list();
}

std::optional<BitVector> RudolphDecoder::pass(const BitVector& word) const {
  const BitVector body = extended_ ? word.slice(0, cfg_.v) : word;
  BitVector syndrome = cfg_.incidence.multiply(body);
  if (extended_ && word.get(cfg_.v)) syndrome ^= BitVector::ones(cfg_.b);

  BitVector out = word;
  const std::size_t limit = threshold();
  for (std::size_t j = 0; j < cfg_.v; ++j) {
    if (and_weight(syndrome, checks_on_point_[j]) > limit) out.flip(j);
  }
  BitVector check = cfg_.incidence.multiply(extended_ ? out.slice(0, cfg_.v) : out);
  if (extended_ && out.get(cfg_.v)) check ^= BitVector::ones(cfg_.b);
  if (check.any()) return std::nullopt;
  return out;
}

std::optional<BitVector> RudolphDecoder::decode(const BitVector& received) const {
  if (received.size() != length()) throw InvalidInput("rudolph_decode: received length mismatch");
  std::vector<BitVector> found;
  auto consider = [&](const BitVector& start) {
    if (auto out = pass(start); out && (*out ^ received).weight() <= radius_) found.push_back(*out);
  };
  consider(received);
  if (extended_) {
    BitVector flipped = received;
    flipped.flip(cfg_.v);
    consider(flipped);
  }
  if (found.empty()) return std::nullopt;
  if (found.size() == 1 || found[0] == found[1]) return found[0];
  const std::size_t a = (found[0] ^ received).weight(), b = (found[1] ^ received).weight();
  if (a == b) return std::nullopt;
  return a < b ? found[0] : found[1];
}

}  // namespace qcss
