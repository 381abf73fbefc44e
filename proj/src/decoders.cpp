#include "qcss/decoders.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "qcss/errors.hpp"

namespace qcss {

namespace {

class BchWordDecoder final : public WordDecoder {
 public:
  explicit BchWordDecoder(const CyclicCodeSpec& spec) : dec_(spec), n_(spec.n) {}
  std::string kind() const override { return "bch"; }
  std::size_t length() const override { return n_; }
  std::size_t radius() const override { return dec_.radius(); }
  std::optional<BitVector> error_pattern(const BitVector& received) const override {
    const auto pos = dec_.decode(received);
    if (!pos) return std::nullopt;
    return BitVector::from_support(n_, *pos);
  }

 private:
  BchDecoder dec_;
  std::size_t n_;
};

class ReedWordDecoder final : public WordDecoder {
 public:
  explicit ReedWordDecoder(RmCode rm) : rm_(std::move(rm)) {}
  std::string kind() const override { return "reed"; }
  std::size_t length() const override { return rm_.code.n(); }
  std::size_t radius() const override { return reed_radius(rm_); }
  std::optional<BitVector> error_pattern(const BitVector& received) const override {
    const auto out = reed_decode(rm_, received);
    if (!out) return std::nullopt;
    return received ^ out->codeword;
  }

 private:
  RmCode rm_;
};

class RudolphWordDecoder final : public WordDecoder {
 public:
  RudolphWordDecoder(const Configuration& cfg, bool extended, std::size_t radius) : dec_(cfg, extended, radius) {}
  std::string kind() const override { return "rudolph"; }
  std::size_t length() const override { return dec_.length(); }
  std::size_t radius() const override { return dec_.radius(); }
  std::optional<BitVector> error_pattern(const BitVector& received) const override {
    const auto out = dec_.decode(received);
    if (!out) return std::nullopt;
    return received ^ *out;
  }

 private:
  RudolphDecoder dec_;
};

class LookupWordDecoder final : public WordDecoder {
 public:
  LookupWordDecoder(const LinearCode& c, std::uint64_t budget) : h_(c.generator()), n_(c.n()) {
    if (c.k() > 63) throw ResourceError("lookup decoder: more than 63 parity checks");
    const LinearCode d = dual(c);
    const std::size_t dist = d.k() == 0 ? n_ + 1 : dual_distance(c);
    radius_ = (dist - 1) / 2;
    std::vector<std::uint64_t> col(n_, 0);
    for (std::size_t r = 0; r < h_.rows(); ++r) {
      for (std::size_t j = 0; j < n_; ++j) {
        if (h_.get(r, j)) col[j] |= std::uint64_t{1} << r;
      }
    }
    // leaders by increasing weight; within radius every syndrome has a unique leader
    std::uint64_t visited = 0;
    std::vector<std::size_t> idx;
    table_[0] = {};
    for (std::size_t w = 1; w <= radius_ && w <= n_; ++w) {
      idx.resize(w);
      for (std::size_t i = 0; i < w; ++i) idx[i] = i;
      while (true) {
        if (++visited > budget) throw ResourceError("lookup decoder: coset leader budget exceeded");
        std::uint64_t s = 0;
        for (auto i : idx) s ^= col[i];
        table_.emplace(s, idx);
        std::size_t i = w;
        while (i > 0 && idx[i - 1] == n_ - w + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < w; ++j) idx[j] = idx[j - 1] + 1;
      }
    }
  }
  std::string kind() const override { return "lookup"; }
  std::size_t length() const override { return n_; }
  std::size_t radius() const override { return radius_; }
  std::optional<BitVector> error_pattern(const BitVector& received) const override {
    const BitVector s = h_.multiply(received);
    std::uint64_t key = 0;
    for (auto i : s.support()) key |= std::uint64_t{1} << i;
    const auto it = table_.find(key);
    if (it == table_.end()) return std::nullopt;
    return BitVector::from_support(n_, it->second);
  }

 private:
  BitMatrix h_;
  std::size_t n_;
  std::size_t radius_ = 0;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> table_;
};

std::optional<std::size_t> exact_log2(std::size_t n) {
  if (n == 0 || !std::has_single_bit(n)) return std::nullopt;
  return static_cast<std::size_t>(std::countr_zero(n));
}

DecoderPtr try_bch(const LinearCode& c) {
  const auto zeros = cyclic_zero_set(c);
  if (!zeros) return nullptr;
  const auto dual_zeros = dual_zero_set(*zeros, c.n());
  if (dual_zeros.size() >= c.n()) return nullptr;
  return make_bch_decoder(cyclic_from_zero_set(c.n(), dual_zeros));
}

DecoderPtr try_reed(const LinearCode& c) {
  const auto m = exact_log2(c.n());
  if (!m || *m < 1) return nullptr;
  for (std::size_t r = 0; r < *m; ++r) {
    if (rm_generator(*m, r).code.k() != c.k()) continue;
    if (rm_generator(*m, r).code.same_code(c)) return make_reed_decoder(*m, *m - r - 1);
  }
  return nullptr;
}

DecoderPtr try_rudolph(const LinearCode& c) {
  // binary-field geometries whose (possibly extended) point count matches n
  for (unsigned q : {2U, 4U, 8U, 16U, 32U}) {
    for (unsigned k = 2;; ++k) {
      std::size_t v = 0, pw = 1;
      for (unsigned i = 0; i <= k; ++i, pw *= q) v += pw;
      if (v > c.n()) break;
      if (v + 1 != c.n() && v != c.n()) continue;
      for (unsigned l = 1; l < k; ++l) {
        const auto cfg = enumerate_spaces(k, q, l);
        LinearCode built;
        try {
          built = build_so_code(cfg);
        } catch (const PreconditionError&) {
          continue;
        }
        if (built.n() != c.n() || built.k() != c.k() || !built.same_code(c)) continue;
        const bool extended = built.n() == cfg.v + 1;
        std::size_t radius = extended ? rudolph_extended_bound(cfg) : rudolph_bound(cfg);
        try {
          radius = std::min(radius, (dual_distance(c) - 1) / 2);
        } catch (const ResourceError&) {
        }
        return make_rudolph_decoder(cfg, radius);
      }
    }
  }
  return nullptr;
}

}  // namespace

DecoderPtr make_bch_decoder(const CyclicCodeSpec& spec) { return std::make_shared<BchWordDecoder>(spec); }

DecoderPtr make_reed_decoder(std::size_t m, std::size_t r) {
  return std::make_shared<ReedWordDecoder>(rm_generator(m, r));
}

DecoderPtr make_rudolph_decoder(const Configuration& cfg, std::size_t radius) {
  const bool extended = needs_extension(cfg);
  return std::make_shared<RudolphWordDecoder>(cfg, extended, radius);
}

DecoderPtr make_lookup_decoder(const LinearCode& c, std::uint64_t budget) {
  return std::make_shared<LookupWordDecoder>(c, budget);
}

std::optional<std::vector<std::size_t>> cyclic_zero_set(const LinearCode& c) {
  const std::size_t n = c.n();
  if (n < 3 || n % 2 == 0 || c.k() == 0 || multiplicative_order_of_2(n) > 20) return std::nullopt;
  for (const auto& g : c.generator().row_list()) {
    if (!c.contains(g.rotate(1))) return std::nullopt;
  }
  std::vector<bool> zero(n, true);
  for (const auto& g : c.generator().row_list()) {
    std::vector<bool> here(n, false);
    for (auto i : zero_set_of(g, n)) here[i] = true;
    for (std::size_t i = 0; i < n; ++i) zero[i] = zero[i] && here[i];
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (zero[i]) out.push_back(i);
  }
  if (out.size() != n - c.k()) throw ConsistencyError("cyclic_zero_set: dimension disagrees with zero count");
  return out;
}

DecoderPtr decoder_for_dual(const LinearCode& c, const std::string& kind) {
  if (kind == "lookup") return make_lookup_decoder(c);
  if (kind == "bch" || kind == "auto") {
    if (auto d = try_bch(c)) return d;
    if (kind == "bch") throw PreconditionError("bch decoder: code is not cyclic of odd length");
  }
  if (kind == "reed" || kind == "auto") {
    if (auto d = try_reed(c)) return d;
    if (kind == "reed") throw PreconditionError("reed decoder: code is not a Reed-Muller code");
  }
  if (kind == "rudolph" || kind == "auto") {
    if (auto d = try_rudolph(c)) return d;
    if (kind == "rudolph") throw PreconditionError("rudolph decoder: code is not a projective-geometry code");
  }
  if (kind == "auto") return make_lookup_decoder(c);
  throw InvalidInput("unknown decoder kind '" + kind + "'");
}

}  // namespace qcss
