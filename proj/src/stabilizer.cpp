#include "lcinv/stabilizer.hpp"

#include <array>
#include <bit>
#include <cassert>
#include <random>
#include <stdexcept>

namespace lcinv {

QubitSet QubitSet::full(std::uint32_t n) {
  QubitSet s(n);
  for (std::uint32_t i = 0; i < n; ++i) s.add(i);
  return s;
}

QubitSet QubitSet::from_mask(std::uint32_t n, std::uint64_t mask) {
  if (n > 64) throw std::invalid_argument("QubitSet::from_mask: n > 64");
  if (n < 64 && (mask >> n) != 0)
    throw std::invalid_argument("QubitSet::from_mask: mask has bits past n");
  QubitSet s(n);
  while (mask) {
    const int b = std::countr_zero(mask);
    s.add(static_cast<std::uint32_t>(b));
    mask &= mask - 1;
  }
  return s;
}

QubitSet QubitSet::from_indices(std::uint32_t n, const std::vector<std::uint32_t>& one_based) {
  QubitSet s(n);
  for (std::uint32_t q : one_based) {
    if (q < 1 || q > n)
      throw std::invalid_argument("QubitSet: index " + std::to_string(q) + " outside 1.." +
                                  std::to_string(n));
    s.add(q - 1);
  }
  return s;
}

bool QubitSet::subset_of(const QubitSet& o) const {
  if (n_ != o.n_) return false;
  const auto& a = bits_.words();
  const auto& b = o.bits_.words();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

QubitSet QubitSet::complement() const {
  QubitSet c(n_);
  for (std::uint32_t i = 0; i < n_; ++i)
    if (!contains(i)) c.add(i);
  return c;
}

std::uint64_t QubitSet::mask() const {
  if (n_ > 64) throw std::invalid_argument("QubitSet::mask: n > 64");
  return bits_.words().empty() ? 0 : bits_.words()[0];
}

std::vector<std::uint32_t> QubitSet::indices() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < n_; ++i)
    if (contains(i)) out.push_back(i + 1);
  return out;
}

std::string QubitSet::to_string() const {
  std::string s = "{";
  bool first = true;
  for (std::uint32_t q : indices()) {
    if (!first) s += ',';
    s += std::to_string(q);
    first = false;
  }
  s += '}';
  return s;
}

QubitSet QubitSet::parse(std::string_view text, std::uint32_t n) {
  std::string t;
  for (char c : text)
    if (c != ' ' && c != '\t') t += c;
  if (t == "\xE2\x88\x85" || t == "{}") return QubitSet(n);
  if (t.size() < 2 || t.front() != '{' || t.back() != '}')
    throw parse_error("qubit set: expected \"{...}\", got \"" + std::string(text) + "\"");
  QubitSet s(n);
  std::size_t pos = 1;
  while (pos < t.size() - 1) {
    std::size_t end = t.find(',', pos);
    if (end == std::string::npos || end > t.size() - 1) end = t.size() - 1;
    const std::string tok = t.substr(pos, end - pos);
    if (tok.empty()) throw parse_error("qubit set: empty entry in \"" + std::string(text) + "\"");
    std::uint64_t q = 0;
    for (char c : tok) {
      if (c < '0' || c > '9')
        throw parse_error("qubit set: invalid character '" + std::string(1, c) + "'");
      q = q * 10 + static_cast<std::uint64_t>(c - '0');
      if (q > n) break;
    }
    if (q < 1 || q > n)
      throw parse_error("qubit set: index " + tok + " outside 1.." + std::to_string(n));
    s.add(static_cast<std::uint32_t>(q - 1));
    pos = end + 1;
  }
  return s;
}

bool QubitSet::operator<(const QubitSet& o) const {
  if (n_ != o.n_) return n_ < o.n_;
  return bits_.less_as_integer(o.bits_);
}

PauliVector::PauliVector(std::uint32_t n, GF2Vector v) : n_(n), v_(std::move(v)) {
  if (v_.size() != 2 * static_cast<std::size_t>(n))
    throw std::invalid_argument("PauliVector: bit vector must have length 2n");
}

PauliVector PauliVector::operator+(const PauliVector& o) const {
  if (n_ != o.n_) throw std::invalid_argument("PauliVector: qubit-count mismatch");
  PauliVector r = *this;
  r.v_ ^= o.v_;
  return r;
}

std::string PauliVector::to_string() const {
  static constexpr char kChar[4] = {'I', 'X', 'Z', 'Y'};
  std::string s(n_, 'I');
  for (std::uint32_t i = 0; i < n_; ++i)
    s[i] = kChar[(z_bit(i) ? 2 : 0) | (x_bit(i) ? 1 : 0)];
  return s;
}

PauliVector parse_pauli_string(std::string_view s, std::optional<std::uint32_t> expected_n) {
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    s.remove_prefix(1);
    if (!s.empty() && s.front() == 'i') s.remove_prefix(1);
  }
  if (expected_n && s.size() != *expected_n)
    throw parse_error("Pauli string: length " + std::to_string(s.size()) + " != expected " +
                      std::to_string(*expected_n));
  PauliVector p(static_cast<std::uint32_t>(s.size()));
  for (std::uint32_t i = 0; i < s.size(); ++i) {
    switch (s[i]) {
      case 'I': break;
      case 'X': p.set_x(i, true); break;
      case 'Z': p.set_z(i, true); break;
      case 'Y': p.set_z(i, true); p.set_x(i, true); break;
      default:
        throw parse_error("Pauli string: illegal character '" + std::string(1, s[i]) +
                          "' at position " + std::to_string(i + 1));
    }
  }
  return p;
}

QubitSet support(const PauliVector& p) {
  QubitSet s(p.qubits());
  for (std::uint32_t i = 0; i < p.qubits(); ++i)
    if (p.z_bit(i) || p.x_bit(i)) s.add(i);
  return s;
}

int symplectic_product(const PauliVector& p, const PauliVector& q) {
  if (p.qubits() != q.qubits())
    throw std::invalid_argument("symplectic_product: qubit-count mismatch");
  int acc = 0;
  for (std::uint32_t i = 0; i < p.qubits(); ++i)
    acc ^= (p.z_bit(i) & q.x_bit(i)) ^ (p.x_bit(i) & q.z_bit(i));
  return acc;
}

std::string ValidationReport::to_string() const {
  if (ok()) return "valid, n=" + std::to_string(n);
  std::string s = "invalid, n=" + std::to_string(n);
  if (rank < n)
    s += "\ngenerator matrix rank " + std::to_string(rank) + " < " + std::to_string(n);
  for (const auto& [k, l] : anticommuting)
    s += "\ngenerators " + std::to_string(k) + " and " + std::to_string(l) + " anticommute";
  return s;
}

Stabilizer::Stabilizer(std::uint32_t n, GF2Matrix gens) : n_(n), gens_(std::move(gens)) {
  if (gens_.rows() != 2 * static_cast<std::size_t>(n) || gens_.cols() != n)
    throw std::invalid_argument("Stabilizer: generator matrix must be 2n x n");
}

Stabilizer Stabilizer::from_generators(const std::vector<PauliVector>& gens) {
  const auto n = static_cast<std::uint32_t>(gens.size());
  GF2Matrix m(2 * static_cast<std::size_t>(n), n);
  for (std::uint32_t j = 0; j < n; ++j) {
    if (gens[j].qubits() != n)
      throw std::invalid_argument("Stabilizer: need exactly n generators on n qubits");
    for (std::size_t i = 0; i < 2 * static_cast<std::size_t>(n); ++i)
      m.set(i, j, gens[j].bits().bit(i));
  }
  return Stabilizer(n, std::move(m));
}

PauliVector Stabilizer::generator(std::uint32_t j) const {
  GF2Vector v(2 * static_cast<std::size_t>(n_));
  for (std::size_t i = 0; i < v.size(); ++i) v.set_bit(i, gens_.get(i, j));
  return PauliVector(n_, std::move(v));
}

ValidationReport validate(const Stabilizer& s) {
  ValidationReport rep;
  rep.n = s.qubits();
  rep.rank = rank(s.generators());
  std::vector<PauliVector> gens;
  gens.reserve(s.qubits());
  for (std::uint32_t j = 0; j < s.qubits(); ++j) gens.push_back(s.generator(j));
  for (std::uint32_t k = 0; k < s.qubits(); ++k)
    for (std::uint32_t l = k + 1; l < s.qubits(); ++l)
      if (symplectic_product(gens[k], gens[l]) != 0) rep.anticommuting.emplace_back(k + 1, l + 1);
  return rep;
}

std::vector<PauliVector> enumerate_elements(const Stabilizer& s, std::uint32_t max_n) {
  const std::uint32_t n = s.qubits();
  if (n > max_n)
    throw budget_error("element enumeration: n = " + std::to_string(n) + " exceeds limit " +
                           std::to_string(max_n),
                       n, max_n);
  std::vector<PauliVector> gens;
  gens.reserve(n);
  for (std::uint32_t j = 0; j < n; ++j) gens.push_back(s.generator(j));
  const std::size_t total = std::size_t{1} << n;
  std::vector<PauliVector> out;
  out.reserve(total);
  out.push_back(PauliVector(n));
  for (std::size_t c = 1; c < total; ++c)
    out.push_back(out[c & (c - 1)] + gens[static_cast<std::uint32_t>(std::countr_zero(c))]);
  return out;
}

GF2Matrix row_pair_submatrix(const Stabilizer& s, const QubitSet& omega) {
  if (omega.universe() != s.qubits())
    throw std::invalid_argument("row_pair_submatrix: universe mismatch");
  const std::uint32_t n = s.qubits();
  std::vector<GF2Vector> rows;
  for (std::uint32_t j = 0; j < n; ++j) {
    if (omega.contains(j)) continue;
    rows.push_back(s.generators().row(j));
    rows.push_back(s.generators().row(static_cast<std::size_t>(n) + j));
  }
  return GF2Matrix::from_rows(std::move(rows), n);
}

Stabilizer graph_state(const GF2Matrix& adjacency) {
  const std::size_t n = adjacency.rows();
  if (n == 0 || adjacency.cols() != n)
    throw std::invalid_argument("graph_state: adjacency must be square and nonempty");
  for (std::size_t i = 0; i < n; ++i) {
    if (adjacency.get(i, i))
      throw std::invalid_argument("graph_state: adjacency has nonzero diagonal");
    for (std::size_t j = i + 1; j < n; ++j)
      if (adjacency.get(i, j) != adjacency.get(j, i))
        throw std::invalid_argument("graph_state: adjacency not symmetric");
  }
  GF2Matrix gens(2 * n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) gens.set(j, i, adjacency.get(j, i));
    gens.set(n + i, i, true);
  }
  return Stabilizer(static_cast<std::uint32_t>(n), std::move(gens));
}

namespace {

// The six invertible 2x2 bit matrices (a,b,c,d), identity first.
constexpr std::array<std::array<std::uint8_t, 4>, 6> kInvertible2x2 = {{
    {1, 0, 0, 1}, {0, 1, 1, 0}, {0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}, {1, 1, 1, 0}}};

}  // namespace

Stabilizer random_stabilizer(std::uint32_t n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_stabilizer: n must be >= 1");
  std::mt19937_64 rng(seed);

  GF2Matrix adj(n, n);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j) {
      const bool e = rng() & 1;
      adj.set(i, j, e);
      adj.set(j, i, e);
    }
  GF2Matrix g = graph_state(adj).generators();

  // Single-qubit twirl: mix the z/x row pair of each qubit by a random
  // invertible 2x2 bit matrix.
  for (std::uint32_t i = 0; i < n; ++i) {
    const auto& f = kInvertible2x2[rng() % 6];
    const GF2Vector z = g.row(i);
    const GF2Vector x = g.row(static_cast<std::size_t>(n) + i);
    GF2Vector nz(n), nx(n);
    if (f[0]) nz ^= z;
    if (f[1]) nz ^= x;
    if (f[2]) nx ^= z;
    if (f[3]) nx ^= x;
    g.row_mut(i) = std::move(nz);
    g.row_mut(static_cast<std::size_t>(n) + i) = std::move(nx);
  }

  // Random invertible generator-basis change (rejection sampling).
  GF2Matrix basis(n, n);
  do {
    for (std::uint32_t r = 0; r < n; ++r)
      for (std::uint32_t c = 0; c < n; ++c) basis.set(r, c, rng() & 1);
  } while (rank(basis) < n);

  return Stabilizer(n, mat_mul(g, basis));
}

Stabilizer parse_stabilizer_text(std::string_view text) {
  std::vector<PauliVector> gens;
  std::optional<std::uint32_t> n;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
    while (!line.empty() &&
           (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
      line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    PauliVector p = parse_pauli_string(line, n);
    if (!n) n = p.qubits();
    gens.push_back(std::move(p));
  }
  if (!n) throw parse_error("stabilizer text: no generators found");
  if (gens.size() != *n)
    throw parse_error("stabilizer text: got " + std::to_string(gens.size()) +
                      " generators for n=" + std::to_string(*n));
  return Stabilizer::from_generators(gens);
}

std::string format_stabilizer_text(const Stabilizer& s) {
  std::string out;
  for (std::uint32_t j = 0; j < s.qubits(); ++j) {
    out += s.generator(j).to_string();
    out += '\n';
  }
  return out;
}

}  // namespace lcinv
