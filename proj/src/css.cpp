#include "qcss/css.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "qcss/errors.hpp"

namespace qcss {

PauliError::PauliError(BitVector xb, BitVector zb) : x(std::move(xb)), z(std::move(zb)) {
  if (x.size() != z.size()) throw InvalidInput("PauliError: x and z parts differ in length");
}

PauliError PauliError::from_string(std::string_view s) {
  PauliError e(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    switch (std::toupper(static_cast<unsigned char>(s[i]))) {
      case 'I': break;
      case 'X': e.x.set(i); break;
      case 'Z': e.z.set(i); break;
      case 'Y':
        e.x.set(i);
        e.z.set(i);
        break;
      default: throw InvalidInput(std::string("PauliError: bad character '") + s[i] + "'");
    }
  }
  return e;
}

PauliError PauliError::single(std::size_t n, std::size_t i, char op) {
  if (i >= n) throw InvalidInput("PauliError: position out of range");
  std::string s(n, 'I');
  s[i] = op;
  return from_string(s);
}

std::string PauliError::to_string() const {
  std::string s(n(), 'I');
  for (std::size_t i = 0; i < n(); ++i) {
    if (x.get(i) && z.get(i)) {
      s[i] = 'Y';
    } else if (x.get(i)) {
      s[i] = 'X';
    } else if (z.get(i)) {
      s[i] = 'Z';
    }
  }
  return s;
}

PauliError& PauliError::operator+=(const PauliError& o) {
  x ^= o.x;
  z ^= o.z;
  return *this;
}

bool star(const PauliError& e, const PauliError& f) {
  if (e.n() != f.n()) throw InvalidInput("star: length mismatch");
  return dot(e.x, f.z) != dot(e.z, f.x);
}

CssCode::CssCode(LinearCode c1, LinearCode c2, DecoderPtr dual1, DecoderPtr dual2)
    : c1_(std::move(c1)),
      c2_(std::move(c2)),
      dec1_(std::move(dual1)),
      dec2_(std::move(dual2)),
      inv1_(c1_.generator()),
      inv2_(c2_.generator()) {
  if (c1_.n() != c2_.n()) throw InvalidInput("CSS: C1 and C2 differ in length");
  for (const auto& g : c2_.generator().row_list()) {
    if (c1_.generator().multiply(g).any()) throw PreconditionError("CSS: C2 is not contained in dual(C1)");
  }
  if (!dec1_ || !dec2_) throw InvalidInput("CSS: missing decoder");
  if (dec1_->length() != n() || dec2_->length() != n()) throw InvalidInput("CSS: decoder length mismatch");
}

std::optional<std::size_t> CssCode::distance(std::uint64_t budget) const {
  try {
    const std::size_t d1 = c1_.k() == n() ? n() : dual_distance(c1_, budget);
    const std::size_t d2 = c2_.k() == n() ? n() : dual_distance(c2_, budget);
    return std::min(d1, d2);
  } catch (const ResourceError&) {
    return std::nullopt;
  }
}

PauliError CssCode::x_stabilizer(std::size_t i) const { return PauliError(c1_.generator()[i], BitVector(n())); }
PauliError CssCode::z_stabilizer(std::size_t i) const { return PauliError(BitVector(n()), c2_.generator()[i]); }

CssCode build_css(const LinearCode& c1, const LinearCode& c2, const std::string& z_kind, const std::string& x_kind) {
  if (c1.n() != c2.n()) throw InvalidInput("CSS: C1 and C2 differ in length");
  if (!is_subcode(c2, dual(c1))) throw PreconditionError("CSS: C2 is not contained in dual(C1)");
  auto d1 = decoder_for_dual(c1, z_kind);
  auto d2 = c1.same_code(c2) && z_kind == x_kind ? d1 : decoder_for_dual(c2, x_kind);
  return CssCode(c1, c2, std::move(d1), std::move(d2));
}

CssCode build_css(const LinearCode& c, const std::string& kind) { return build_css(c, c, kind, kind); }

Syndrome syndrome(const CssCode& code, const PauliError& e) {
  if (e.n() != code.n()) throw InvalidInput("syndrome: error length differs from code length");
  return Syndrome{code.c1().generator().multiply(e.z), code.c2().generator().multiply(e.x)};
}

CssDecodeResult decode(const CssCode& code, const Syndrome& s) {
  // any word with the observed syndrome differs from the error by a word of the dual code
  const auto z = code.z_decoder()->error_pattern(code.g1_inverse().solve(s.s_x));
  const auto x = code.x_decoder()->error_pattern(code.g2_inverse().solve(s.s_z));
  CssDecodeResult out;
  if (!z && !x) {
    out.failure = CssDecodeResult::Failure::kBoth;
  } else if (!z) {
    out.failure = CssDecodeResult::Failure::kZSide;
  } else if (!x) {
    out.failure = CssDecodeResult::Failure::kXSide;
  } else {
    out.estimate = PauliError(*x, *z);
  }
  return out;
}

bool residual_is_logical(const CssCode& code, const PauliError& e, const PauliError& estimate) {
  const PauliError r = e + estimate;
  if (!syndrome(code, r).zero()) throw ConsistencyError("residual has nonzero syndrome");
  return !(code.c1().contains(r.x) && code.c2().contains(r.z));
}

void write_css(std::ostream& out, const CssCode& code) {
  out << "qcss-css 1\n";
  out << "n: " << code.n() << "\n";
  out << "quantum_k: " << code.quantum_k() << "\n";
  out << "decoder_z: " << code.z_decoder()->kind() << "\n";
  out << "decoder_x: " << code.x_decoder()->kind() << "\n";
  out << "c1:\n" << code.c1().generator().to_text();
  out << "c2:\n" << code.c2().generator().to_text();
}

CssCode read_css(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line.rfind("qcss-css 1", 0) != 0) throw InvalidInput("css file: missing 'qcss-css 1' header");
  std::string z_kind = "auto", x_kind = "auto";
  std::optional<BitMatrix> g1, g2;
  std::optional<std::size_t> n;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw InvalidInput("css file: expected 'key: value', got '" + line + "'");
    const std::string key = line.substr(0, colon);
    std::string value = line.substr(colon + 1);
    value.erase(0, value.find_first_not_of(" \t"));
    if (key == "c1") {
      g1 = BitMatrix::from_text(in);
    } else if (key == "c2") {
      g2 = BitMatrix::from_text(in);
    } else if (key == "decoder_z") {
      z_kind = value;
    } else if (key == "decoder_x") {
      x_kind = value;
    } else if (key == "n") {
      n = std::stoul(value);
    }
  }
  if (!g1 || !g2) throw InvalidInput("css file: needs both c1 and c2 blocks");
  auto code = build_css(LinearCode(*g1), LinearCode(*g2), z_kind, x_kind);
  if (n && *n != code.n()) throw InvalidInput("css file: header n disagrees with the matrices");
  return code;
}

void write_css_file(const std::string& path, const CssCode& code) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write css file '" + path + "'");
  write_css(out, code);
}

CssCode read_css_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open css file '" + path + "'");
  return read_css(in);
}

}  // namespace qcss
