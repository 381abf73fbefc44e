#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qcss/codes.hpp"
#include "qcss/gf2m.hpp"

namespace qcss {

/// What a theorem claims about d_min of the result's dual.
struct DualDistanceClaim {
  std::size_t value = 0;
  bool lower_bound = false;  // true: claim is ">= value", false: "== value"
};

/// Output of a combination theorem: the code plus the theorem's own claims,
/// kept separate from anything measured so callers can cross-check.
struct ConstructionReport {
  std::string name;
  LinearCode result;
  std::size_t predicted_n = 0;
  std::size_t predicted_k = 0;
  std::optional<DualDistanceClaim> predicted_dual_d;
  std::vector<std::string> warnings;

  bool shape_matches() const { return result.n() == predicted_n && result.k() == predicted_k; }
};

/// Options shared by all constructions. Claims that would need an input dual
/// distance above the budget are omitted with a warning instead of failing.
struct ConstructionOptions {
  std::uint64_t budget = kDefaultBudget;
};

ConstructionReport augment(const LinearCode& c, const ConstructionOptions& opt = {});
ConstructionReport shorten(const LinearCode& c, std::size_t coordinate, const ConstructionOptions& opt = {});
/// {(u | u+v) : u in C1, v in C2}.
ConstructionReport plotkin(const LinearCode& c1, const LinearCode& c2, const ConstructionOptions& opt = {});
/// {(u+w | v+w | u+v+w) : u, v in C1, w in C2}.
ConstructionReport triple_sum(const LinearCode& c1, const LinearCode& c2, const ConstructionOptions& opt = {});
/// C (x) E + D (x) E^perp.
ConstructionReport nebe(const LinearCode& c, const LinearCode& d, const LinearCode& e,
                        const ConstructionOptions& opt = {});
/// Tensor product; coordinate (i1, i2) maps to i1 * n2 + i2.
ConstructionReport product(const LinearCode& c1, const LinearCode& c2, const ConstructionOptions& opt = {});

/// Outer [n2, k2] code over GF(2^m) given by a k2 x n2 generator of field elements.
struct OuterCode {
  unsigned m = 0;
  std::vector<std::vector<Gf2mField::Elem>> generator;

  std::size_t k() const { return generator.size(); }
  std::size_t n() const { return generator.empty() ? 0 : generator.front().size(); }
  static OuterCode repetition(unsigned m, std::size_t n);
  /// "k n" header then k rows of n integers.
  static OuterCode from_text(const std::string& text, unsigned m);
};

/// C1 *_phi C2: outer-encode k2 symbols, then inner-encode every column with C1.
/// phi maps the k1 information bits of a column to the element sum b_i alpha^i.
/// Column j of the frame occupies coordinates [j*n1, (j+1)*n1).
ConstructionReport concatenate(const LinearCode& c1, const OuterCode& outer, const ConstructionOptions& opt = {});

ConstructionReport construction_x(const LinearCode& c1, const LinearCode& c2, const LinearCode& c3,
                                  const ConstructionOptions& opt = {});
ConstructionReport construction_x3(const LinearCode& c1, const LinearCode& c2, const LinearCode& c3,
                                   const LinearCode& c4, const LinearCode& c5, const ConstructionOptions& opt = {});
ConstructionReport construction_x4(const LinearCode& c1, const LinearCode& c2, const LinearCode& c3,
                                   const LinearCode& c4, const ConstructionOptions& opt = {});

/// Restrict to codewords vanishing on supp(w) and delete those coordinates.
LinearCode puncture_on_zero(const LinearCode& c, const BitVector& w);

/// Y1 with w the minimum-weight dual word of smallest support.
ConstructionReport construction_y1(const LinearCode& c, const ConstructionOptions& opt = {});
/// Y1 with a caller-chosen dual word w.
ConstructionReport construction_y1_with(const LinearCode& c, const BitVector& w, const ConstructionOptions& opt = {});

struct Y4Pair {
  BitVector u, v;
  std::size_t or_weight = 0;
};
/// Distinct nonzero u, v in C^perp minimising weight(u OR v); ties go to the
/// smallest support of u OR v, then of u, then of v.
Y4Pair find_y4_pair(const LinearCode& c, std::uint64_t budget = kDefaultBudget);
ConstructionReport construction_y4(const LinearCode& c, const ConstructionOptions& opt = {});

/// Adds an overall zero coordinate to C and the all-ones word of length n+1.
ConstructionReport extend_parity_dual(const LinearCode& c, const ConstructionOptions& opt = {});

/// Invokes a construction by its CLI name (augment, shorten, plotkin, triple, nebe,
/// product, x, x3, x4, y1, y4, extend-dual). `coordinate` is only used by shorten.
ConstructionReport construct_by_name(const std::string& name, const std::vector<LinearCode>& inputs,
                                     std::size_t coordinate = 0, const ConstructionOptions& opt = {});

}  // namespace qcss
