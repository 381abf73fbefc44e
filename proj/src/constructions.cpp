#include "qcss/constructions.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "qcss/errors.hpp"

namespace qcss {

namespace {

void require_so(const LinearCode& c, const std::string& what) {
  if (!is_self_orthogonal(c)) throw PreconditionError(what + " must be self-orthogonal");
}

void require_same_length(const LinearCode& a, const LinearCode& b, const std::string& what) {
  if (a.n() != b.n()) throw PreconditionError(what + ": codes must have the same length");
}

// Places `v` at `offset` inside a zero vector of length `total`.
BitVector placed(const BitVector& v, std::size_t offset, std::size_t total) {
  BitVector out(total);
  for (auto i : v.support()) out.set(offset + i);
  return out;
}

BitVector tensor(const BitVector& a, const BitVector& b) {
  BitVector out(a.size() * b.size());
  for (auto i : a.support()) {
    for (auto j : b.support()) out.set(i * b.size() + j);
  }
  return out;
}

// Dual distance of an input code; nullopt when the dual is zero-dimensional
// (imposes no constraint). Budget overflow is reported through `ok`.
struct InputDual {
  bool ok = true;
  std::optional<std::size_t> d;
};

InputDual input_dual(const LinearCode& c, const ConstructionOptions& opt) {
  if (c.n() == 0 || c.k() == c.n()) return {};
  try {
    return {true, dual_distance(c, opt.budget)};
  } catch (const ResourceError&) {
    return {false, std::nullopt};
  }
}

// min over the inputs' dual distances; records a warning instead of a claim on budget overflow.
void claim_min(ConstructionReport& r, const std::vector<InputDual>& parts, const std::vector<std::size_t>& scale,
               bool lower_bound) {
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (!parts[i].ok) {
      r.warnings.push_back("input dual distance exceeds the enumeration budget; no distance claim");
      return;
    }
    if (!parts[i].d) continue;
    const std::size_t v = *parts[i].d * scale[i];
    best = best ? std::min(*best, v) : v;
  }
  if (best) r.predicted_dual_d = DualDistanceClaim{*best, lower_bound};
}

// Generators of `sup` that extend the span of `sub`, in generator order.
std::vector<BitVector> coset_leaders(const LinearCode& sub, const LinearCode& sup, const std::string& what) {
  if (!is_subcode(sub, sup)) throw PreconditionError(what + ": inner code is not contained in the outer code");
  RowSpace span(sub.generator());
  std::vector<BitVector> leaders;
  for (const auto& g : sup.generator().row_list()) {
    if (span.insert(g)) leaders.push_back(g);
  }
  return leaders;
}

ConstructionReport make_report(std::string name, const BitMatrix& rows, std::size_t n, std::size_t k) {
  ConstructionReport r;
  r.name = std::move(name);
  r.result = LinearCode(rows);
  r.predicted_n = n;
  r.predicted_k = k;
  return r;
}

}  // namespace

ConstructionReport augment(const LinearCode& c, const ConstructionOptions& opt) {
  if (c.n() % 2 != 0) throw PreconditionError("augment: length must be even");
  require_so(c, "augment: input");
  const auto ones = BitVector::ones(c.n());
  if (c.contains(ones)) throw PreconditionError("augment: all-ones word already in the code");
  BitMatrix rows = c.generator();
  rows.append_row(ones);
  auto r = make_report("augment", rows, c.n(), c.k() + 1);
  claim_min(r, {input_dual(c, opt)}, {1}, true);
  return r;
}

ConstructionReport shorten(const LinearCode& c, std::size_t coordinate, const ConstructionOptions& opt) {
  if (coordinate >= c.n()) throw InvalidInput("shorten: coordinate out of range");
  require_so(c, "shorten: input");
  std::vector<BitVector> rows = c.generator().row_list();
  auto hit = std::find_if(rows.begin(), rows.end(), [&](const BitVector& g) { return g.get(coordinate); });
  std::size_t k = c.k();
  std::vector<std::string> warnings;
  if (hit == rows.end()) {
    warnings.push_back("coordinate " + std::to_string(coordinate) + " is zero on every codeword; dimension does not drop");
  } else {
    const BitVector pivot = *hit;
    rows.erase(hit);
    for (auto& g : rows) {
      if (g.get(coordinate)) g ^= pivot;
    }
    --k;
  }
  const std::size_t del[] = {coordinate};
  BitMatrix out = BitMatrix::with_cols(c.n() - 1);
  for (const auto& g : rows) out.append_row(g.erase(del));
  auto r = make_report("shorten", out, c.n() - 1, k);
  r.warnings = std::move(warnings);
  const auto d = input_dual(c, opt);
  if (!d.ok) {
    r.warnings.push_back("input dual distance exceeds the enumeration budget; no distance claim");
  } else if (d.d && *d.d > 1) {
    r.predicted_dual_d = DualDistanceClaim{*d.d - 1, true};
  }
  return r;
}

ConstructionReport plotkin(const LinearCode& c1, const LinearCode& c2, const ConstructionOptions& opt) {
  require_same_length(c1, c2, "plotkin");
  require_so(c1, "plotkin: C1");
  require_so(c2, "plotkin: C2");
  if (!is_subcode(c2, dual(c1))) throw PreconditionError("plotkin: C2 must lie in the dual of C1");
  const std::size_t n = c1.n();
  BitMatrix rows = BitMatrix::with_cols(2 * n);
  for (const auto& u : c1.generator().row_list()) rows.append_row(BitVector::concat(u, u));
  for (const auto& v : c2.generator().row_list()) rows.append_row(placed(v, n, 2 * n));
  auto r = make_report("plotkin", rows, 2 * n, c1.k() + c2.k());
  claim_min(r, {input_dual(c2, opt), input_dual(c1, opt)}, {2, 1}, false);
  return r;
}

ConstructionReport triple_sum(const LinearCode& c1, const LinearCode& c2, const ConstructionOptions&) {
  require_same_length(c1, c2, "triple_sum");
  require_so(c1, "triple_sum: C1");
  require_so(c2, "triple_sum: C2");
  if (!is_subcode(c2, dual(c1))) throw PreconditionError("triple_sum: C2 must lie in the dual of C1");
  const std::size_t n = c1.n();
  BitMatrix rows = BitMatrix::with_cols(3 * n);
  for (const auto& u : c1.generator().row_list()) rows.append_row(placed(u, 0, 3 * n) ^ placed(u, 2 * n, 3 * n));
  for (const auto& v : c1.generator().row_list()) rows.append_row(placed(v, n, 3 * n) ^ placed(v, 2 * n, 3 * n));
  for (const auto& w : c2.generator().row_list()) {
    rows.append_row(BitVector::concat(BitVector::concat(w, w), w));
  }
  return make_report("triple", rows, 3 * n, 2 * c1.k() + c2.k());
}

ConstructionReport nebe(const LinearCode& c, const LinearCode& d, const LinearCode& e, const ConstructionOptions&) {
  require_same_length(c, d, "nebe");
  if (c.k() != d.k()) throw PreconditionError("nebe: C and D must have the same dimension");
  require_so(c, "nebe: C");
  require_so(d, "nebe: D");
  const LinearCode e_dual = dual(e);
  // (C∩D) ⊗ (E∩E^perp) is counted twice in the sum; the dimension k*m needs it to vanish.
  if (intersection(c, d).k() != 0 && intersection(e, e_dual).k() != 0) {
    throw PreconditionError("nebe: dimension k*m requires C∩D = {0} or E∩E^perp = {0}");
  }
  BitMatrix rows = BitMatrix::with_cols(c.n() * e.n());
  for (const auto& x : c.generator().row_list()) {
    for (const auto& y : e.generator().row_list()) rows.append_row(tensor(x, y));
  }
  for (const auto& x : d.generator().row_list()) {
    for (const auto& y : e_dual.generator().row_list()) rows.append_row(tensor(x, y));
  }
  return make_report("nebe", rows, c.n() * e.n(), c.k() * e.n());
}

ConstructionReport product(const LinearCode& c1, const LinearCode& c2, const ConstructionOptions& opt) {
  if (!is_self_orthogonal(c1) && !is_self_orthogonal(c2)) {
    throw PreconditionError("product: at least one factor must be self-orthogonal");
  }
  BitMatrix rows = BitMatrix::with_cols(c1.n() * c2.n());
  for (const auto& x : c1.generator().row_list()) {
    for (const auto& y : c2.generator().row_list()) rows.append_row(tensor(x, y));
  }
  auto r = make_report("product", rows, c1.n() * c2.n(), c1.k() * c2.k());
  claim_min(r, {input_dual(c1, opt), input_dual(c2, opt)}, {1, 1}, false);
  return r;
}

OuterCode OuterCode::repetition(unsigned m, std::size_t n) {
  OuterCode o;
  o.m = m;
  o.generator.assign(1, std::vector<Gf2mField::Elem>(n, 1));
  return o;
}

OuterCode OuterCode::from_text(const std::string& text, unsigned m) {
  std::istringstream in(text);
  std::size_t k = 0, n = 0;
  if (!(in >> k >> n)) throw InvalidInput("outer code: missing 'k n' header");
  OuterCode o;
  o.m = m;
  o.generator.assign(k, std::vector<Gf2mField::Elem>(n, 0));
  for (auto& row : o.generator) {
    for (auto& x : row) {
      if (!(in >> x)) throw InvalidInput("outer code: truncated generator");
      if (m < 32 && (x >> m) != 0) throw InvalidInput("outer code: element outside GF(2^m)");
    }
  }
  return o;
}

ConstructionReport concatenate(const LinearCode& c1, const OuterCode& outer, const ConstructionOptions& opt) {
  require_so(c1, "concatenate: C1");
  const std::size_t k1 = c1.k();
  if (k1 == 0) throw PreconditionError("concatenate: inner code must be nonzero");
  if (outer.m != k1) throw PreconditionError("concatenate: outer code must be over GF(2^k1)");
  if (outer.k() == 0) throw PreconditionError("concatenate: outer code must be nonzero");
  for (const auto& row : outer.generator) {
    if (row.size() != outer.n()) throw InvalidInput("concatenate: ragged outer generator");
  }
  const Gf2mField field = k1 == 1 ? Gf2mField(1, 0x3) : Gf2mField(static_cast<unsigned>(k1));
  // The rref rows encode the information bits on the pivot positions (systematic form).
  const auto sys = rref(c1.generator()).reduced;
  const std::size_t n1 = c1.n();
  const std::size_t n2 = outer.n();
  auto inner = [&](Gf2mField::Elem symbol) {
    BitVector col(n1);
    for (std::size_t i = 0; i < k1; ++i) {
      if ((symbol >> i) & 1U) col ^= sys[i];
    }
    return col;
  };
  BitMatrix rows = BitMatrix::with_cols(n1 * n2);
  for (std::size_t j = 0; j < outer.k(); ++j) {
    for (std::size_t i = 0; i < k1; ++i) {
      const Gf2mField::Elem b = Gf2mField::Elem{1} << i;  // phi(e_i) = alpha^i
      BitVector word(n1 * n2);
      for (std::size_t t = 0; t < n2; ++t) {
        const auto col = inner(field.mul(b, outer.generator[j][t]));
        for (auto p : col.support()) word.set(t * n1 + p);
      }
      rows.append_row(std::move(word));
    }
  }
  auto r = make_report("concat", rows, n1 * n2, k1 * outer.k());
  claim_min(r, {input_dual(c1, opt)}, {1}, false);
  return r;
}

ConstructionReport construction_x(const LinearCode& c1, const LinearCode& c2, const LinearCode& c3,
                                  const ConstructionOptions& opt) {
  require_same_length(c1, c2, "construction X");
  require_so(c2, "construction X: C2");
  require_so(c3, "construction X: C3");
  const auto leaders = coset_leaders(c1, c2, "construction X");
  if (c3.k() != leaders.size()) throw PreconditionError("construction X: dim C3 must equal k2 - k1");
  const std::size_t n = c2.n() + c3.n();
  BitMatrix rows = BitMatrix::with_cols(n);
  for (const auto& g : c1.generator().row_list()) rows.append_row(placed(g, 0, n));
  for (std::size_t i = 0; i < leaders.size(); ++i) {
    rows.append_row(BitVector::concat(leaders[i], c3.generator()[i]));
  }
  auto r = make_report("x", rows, n, c2.k());
  claim_min(r, {input_dual(c2, opt), input_dual(c3, opt)}, {1, 1}, false);
  return r;
}

ConstructionReport construction_x3(const LinearCode& c1, const LinearCode& c2, const LinearCode& c3,
                                   const LinearCode& c4, const LinearCode& c5, const ConstructionOptions& opt) {
  require_same_length(c1, c2, "construction X3");
  require_same_length(c2, c3, "construction X3");
  require_so(c3, "construction X3: C3");
  require_so(c4, "construction X3: C4");
  require_so(c5, "construction X3: C5");
  const auto lead2 = coset_leaders(c1, c2, "construction X3");
  const auto lead3 = coset_leaders(c2, c3, "construction X3");
  if (c4.k() != lead2.size()) throw PreconditionError("construction X3: dim C4 must equal k2 - k1");
  if (c5.k() != lead3.size()) throw PreconditionError("construction X3: dim C5 must equal k3 - k2");
  const std::size_t n = c1.n() + c4.n() + c5.n();
  BitMatrix rows = BitMatrix::with_cols(n);
  for (const auto& g : c1.generator().row_list()) rows.append_row(placed(g, 0, n));
  for (std::size_t i = 0; i < lead2.size(); ++i) {
    rows.append_row(placed(lead2[i], 0, n) ^ placed(c4.generator()[i], c1.n(), n));
  }
  for (std::size_t i = 0; i < lead3.size(); ++i) {
    rows.append_row(placed(lead3[i], 0, n) ^ placed(c5.generator()[i], c1.n() + c4.n(), n));
  }
  auto r = make_report("x3", rows, n, c3.k());
  claim_min(r, {input_dual(c3, opt), input_dual(c4, opt), input_dual(c5, opt)}, {1, 1, 1}, false);
  return r;
}

ConstructionReport construction_x4(const LinearCode& c1, const LinearCode& c2, const LinearCode& c3,
                                   const LinearCode& c4, const ConstructionOptions& opt) {
  require_same_length(c1, c2, "construction X4");
  require_same_length(c3, c4, "construction X4");
  require_so(c2, "construction X4: C2");
  require_so(c4, "construction X4: C4");
  const auto left = coset_leaders(c1, c2, "construction X4");
  const auto right = coset_leaders(c3, c4, "construction X4");
  if (left.size() != right.size()) throw PreconditionError("construction X4: k2 - k1 must equal k4 - k3");
  const std::size_t n = c1.n() + c3.n();
  BitMatrix rows = BitMatrix::with_cols(n);
  for (const auto& g : c1.generator().row_list()) rows.append_row(placed(g, 0, n));
  for (std::size_t i = 0; i < left.size(); ++i) rows.append_row(BitVector::concat(left[i], right[i]));
  for (const auto& g : c3.generator().row_list()) rows.append_row(placed(g, c1.n(), n));
  auto r = make_report("x4", rows, n, c2.k() + c3.k());
  claim_min(r, {input_dual(c2, opt), input_dual(c4, opt)}, {1, 1}, false);
  return r;
}

LinearCode puncture_on_zero(const LinearCode& c, const BitVector& w) {
  if (w.size() != c.n()) throw InvalidInput("puncture_on_zero: length mismatch");
  const auto s = w.support();
  const auto& g = c.generator();
  // Combinations x of the generator rows whose codeword vanishes on supp(w).
  const auto kernel = nullspace_basis(g.select_columns(s).transpose());
  BitMatrix rows = BitMatrix::with_cols(c.n() - s.size());
  for (const auto& x : kernel.row_list()) rows.append_row(g.combine(x).erase(s));
  return LinearCode(rows);
}

ConstructionReport construction_y1_with(const LinearCode& c, const BitVector& w, const ConstructionOptions&) {
  require_so(c, "construction Y1: input");
  if (w.none()) throw PreconditionError("construction Y1: w must be nonzero");
  for (const auto& g : c.generator().row_list()) {
    if (dot(g, w)) throw PreconditionError("construction Y1: w is not in the dual code");
  }
  const std::size_t d = w.weight();
  ConstructionReport r;
  r.name = "y1";
  r.result = puncture_on_zero(c, w);
  r.predicted_n = c.n() - d;
  r.predicted_k = c.k() + 1 >= d ? c.k() + 1 - d : 0;
  return r;
}

ConstructionReport construction_y1(const LinearCode& c, const ConstructionOptions& opt) {
  require_so(c, "construction Y1: input");
  const auto words = min_weight_codewords(dual(c), opt.budget);
  return construction_y1_with(c, words.front(), opt);
}

Y4Pair find_y4_pair(const LinearCode& c, std::uint64_t budget) {
  const LinearCode d = dual(c);
  if (d.k() < 2) throw PreconditionError("construction Y4: dual needs two distinct nonzero words");
  std::vector<BitVector> words;
  for_each_codeword(d, [&](const BitVector& v) {
    if (v.any()) words.push_back(v);
  }, budget);
  std::sort(words.begin(), words.end(), [](const BitVector& a, const BitVector& b) {
    const auto wa = a.weight(), wb = b.weight();
    return wa != wb ? wa < wb : support_less(a, b);
  });
  std::vector<std::size_t> weight(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) weight[i] = words[i].weight();

  std::optional<Y4Pair> best;
  auto better = [&](const BitVector& joined, const BitVector& u, const BitVector& v) {
    if (joined.weight() != best->or_weight) return joined.weight() < best->or_weight;
    const BitVector cur = best->u | best->v;
    if (joined != cur) return support_less(joined, cur);
    if (u != best->u) return support_less(u, best->u);
    return support_less(v, best->v);
  };
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (best && weight[i] > best->or_weight) break;
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      if (best && weight[j] > best->or_weight) break;
      const BitVector joined = words[i] | words[j];
      const BitVector& u = support_less(words[i], words[j]) ? words[i] : words[j];
      const BitVector& v = &u == &words[i] ? words[j] : words[i];
      if (!best || better(joined, u, v)) best = Y4Pair{u, v, joined.weight()};
    }
  }
  return *best;
}

ConstructionReport construction_y4(const LinearCode& c, const ConstructionOptions& opt) {
  require_so(c, "construction Y4: input");
  const auto pair = find_y4_pair(c, opt.budget);
  ConstructionReport r;
  r.name = "y4";
  r.result = puncture_on_zero(c, pair.u | pair.v);
  r.predicted_n = c.n() - pair.or_weight;
  r.predicted_k = c.k() + 2 >= pair.or_weight ? c.k() + 2 - pair.or_weight : 0;
  return r;
}

ConstructionReport extend_parity_dual(const LinearCode& c, const ConstructionOptions&) {
  if (c.n() % 2 == 0) throw PreconditionError("extend_parity_dual: length must be odd");
  require_so(c, "extend_parity_dual: input");
  for (const auto& g : c.generator().row_list()) {
    if (!c.contains(g.rotate(1))) throw PreconditionError("extend_parity_dual: input is not cyclic");
  }
  BitMatrix rows = BitMatrix::with_cols(c.n() + 1);
  for (const auto& g : c.generator().row_list()) rows.append_row(placed(g, 0, c.n() + 1));
  rows.append_row(BitVector::ones(c.n() + 1));
  return make_report("extend-dual", rows, c.n() + 1, c.k() + 1);
}

ConstructionReport construct_by_name(const std::string& name, const std::vector<LinearCode>& in,
                                     std::size_t coordinate, const ConstructionOptions& opt) {
  auto need = [&](std::size_t count) {
    if (in.size() != count) {
      throw InvalidInput("construct " + name + ": expects " + std::to_string(count) + " input code(s), got " +
                         std::to_string(in.size()));
    }
  };
  if (name == "augment") return need(1), augment(in[0], opt);
  if (name == "shorten") return need(1), shorten(in[0], coordinate, opt);
  if (name == "plotkin") return need(2), plotkin(in[0], in[1], opt);
  if (name == "triple") return need(2), triple_sum(in[0], in[1], opt);
  if (name == "nebe") return need(3), nebe(in[0], in[1], in[2], opt);
  if (name == "product") return need(2), product(in[0], in[1], opt);
  if (name == "x") return need(3), construction_x(in[0], in[1], in[2], opt);
  if (name == "x3") return need(5), construction_x3(in[0], in[1], in[2], in[3], in[4], opt);
  if (name == "x4") return need(4), construction_x4(in[0], in[1], in[2], in[3], opt);
  if (name == "y1") return need(1), construction_y1(in[0], opt);
  if (name == "y4") return need(1), construction_y4(in[0], opt);
  if (name == "extend-dual") return need(1), extend_parity_dual(in[0], opt);
  throw InvalidInput("unknown construction '" + name + "'");
}

}  // namespace qcss
