#include "lcinv/invariants.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cassert>
#include <stdexcept>
#include <unordered_map>

#include "lcinv/packed.hpp"

namespace lcinv {

OmegaTuple::OmegaTuple(std::uint32_t n, std::uint32_t r, std::vector<QubitSet> singles,
                       std::vector<QubitSet> pairs)
    : n_(n), r_(r), singles_(std::move(singles)), pairs_(std::move(pairs)) {
  if (r_ < 1) throw std::invalid_argument("OmegaTuple: r must be >= 1");
  if (singles_.size() != r_)
    throw std::invalid_argument("OmegaTuple: need exactly r singles");
  if (pairs_.size() != static_cast<std::size_t>(r_) * (r_ - 1) / 2)
    throw std::invalid_argument("OmegaTuple: need exactly r(r-1)/2 pairs");
  for (const QubitSet& s : singles_)
    if (s.universe() != n_) throw std::invalid_argument("OmegaTuple: single set universe != n");
  for (const QubitSet& s : pairs_)
    if (s.universe() != n_) throw std::invalid_argument("OmegaTuple: pair set universe != n");
}

OmegaTuple OmegaTuple::from_masks(std::uint32_t n, std::uint32_t r,
                                  const std::vector<std::uint64_t>& masks) {
  const std::size_t npairs = static_cast<std::size_t>(r) * (r - 1) / 2;
  if (masks.size() != r + npairs)
    throw std::invalid_argument("OmegaTuple::from_masks: wrong coordinate count");
  std::vector<QubitSet> singles, pairs;
  for (std::size_t c = 0; c < masks.size(); ++c)
    (c < r ? singles : pairs).push_back(QubitSet::from_mask(n, masks[c]));
  return OmegaTuple(n, r, std::move(singles), std::move(pairs));
}

std::size_t OmegaTuple::pair_index(std::uint32_t k, std::uint32_t l, std::uint32_t r) {
  assert(k < l && l < r);
  // (0,1),(0,2),...,(0,r-1),(1,2),... laid out contiguously.
  return static_cast<std::size_t>(k) * r - static_cast<std::size_t>(k) * (k + 1) / 2 + (l - k - 1);
}

OmegaTuple OmegaTuple::with_coord(std::size_t c, QubitSet value) const {
  OmegaTuple out = *this;
  (c < out.singles_.size() ? out.singles_[c] : out.pairs_[c - out.singles_.size()]) =
      std::move(value);
  return out;
}

std::vector<std::uint64_t> OmegaTuple::masks() const {
  std::vector<std::uint64_t> out;
  out.reserve(coords());
  for (std::size_t c = 0; c < coords(); ++c) out.push_back(coord(c).mask());
  return out;
}

bool OmegaTuple::operator<(const OmegaTuple& o) const {
  if (n_ != o.n_) return n_ < o.n_;
  if (r_ != o.r_) return r_ < o.r_;
  for (std::size_t c = 0; c < coords(); ++c) {
    if (coord(c) < o.coord(c)) return true;
    if (o.coord(c) < coord(c)) return false;
  }
  return false;
}

namespace {

void require_same_n(const Stabilizer& s, const OmegaTuple& omega, const char* who) {
  if (s.qubits() != omega.n())
    throw std::invalid_argument(std::string(who) + ": stabilizer and omega disagree on n");
}

void require_enum_budget(const Stabilizer& s, const OmegaTuple& omega, std::uint32_t budget,
                         const char* who) {
  const std::uint64_t rn = static_cast<std::uint64_t>(omega.r()) * s.qubits();
  if (rn > budget)
    throw budget_error(std::string(who) + ": r*n = " + std::to_string(rn) +
                           " exceeds the tuple enumeration budget " + std::to_string(budget),
                       rn, budget);
  // Enumeration packs elements into single words; hard cap regardless of a
  // raised budget.
  if (s.qubits() > 25)
    throw budget_error(std::string(who) + ": n = " + std::to_string(s.qubits()) +
                           " exceeds the packed enumeration cap 25",
                       s.qubits(), 25);
}

// Walks all 2^n subspace elements once (Gray-code updates) and reports each
// to the visitor as a packed word.
template <typename Visit>
void walk_elements(const Stabilizer& s, Visit&& visit) {
  const std::uint32_t n = s.qubits();
  const std::vector<std::uint64_t> cols = packed::columns(s.generators(), n);
  std::uint64_t cur = 0;
  visit(cur);
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t c = 1; c < total; ++c) {
    cur ^= cols[static_cast<std::uint32_t>(std::countr_zero(c))];
    visit(cur);
  }
}

}  // namespace

std::uint64_t t_invariant(const Stabilizer& s, const OmegaTuple& omega,
                          std::uint32_t enum_budget) {
  require_same_n(s, omega, "t_invariant");
  require_enum_budget(s, omega, enum_budget, "t_invariant");
  const std::uint32_t n = s.qubits();
  const std::uint32_t r = omega.r();

  if (r == 1) {
    const std::uint64_t target = omega.single(0).mask();
    std::uint64_t count = 0;
    walk_elements(s, [&](std::uint64_t v) { count += packed::support_mask(v, n) == target; });
    return count;
  }

  const std::vector<std::uint64_t> elems = packed::elements(s);
  std::unordered_map<std::uint64_t, std::vector<std::uint64_t>> buckets;
  for (std::uint64_t v : elems) buckets[packed::support_mask(v, n)].push_back(v);

  static const std::vector<std::uint64_t> kEmpty;
  std::vector<const std::vector<std::uint64_t>*> level_candidates(r, &kEmpty);
  for (std::uint32_t k = 0; k < r; ++k) {
    auto it = buckets.find(omega.single(k).mask());
    if (it != buckets.end()) level_candidates[k] = &it->second;
  }
  std::vector<std::uint64_t> pair_masks(OmegaTuple::pair_index(r - 2, r - 1, r) + 1);
  for (std::uint32_t k = 0; k < r; ++k)
    for (std::uint32_t l = k + 1; l < r; ++l)
      pair_masks[OmegaTuple::pair_index(k, l, r)] = omega.pair(k, l).mask();

  std::uint64_t count = 0;
  std::vector<std::uint64_t> chosen(r);
  auto dfs = [&](auto&& self, std::uint32_t k) -> void {
    for (std::uint64_t v : *level_candidates[k]) {
      bool ok = true;
      for (std::uint32_t j = 0; j < k; ++j) {
        if (packed::support_mask(chosen[j] ^ v, n) !=
            pair_masks[OmegaTuple::pair_index(j, k, r)]) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      if (k + 1 == r) {
        ++count;
      } else {
        chosen[k] = v;
        self(self, k + 1);
      }
    }
  };
  dfs(dfs, 0);
  return count;
}

namespace {

// Builds the stacked constraint matrix on coefficient space F2^{r*n}: for
// every coordinate, the rows j and n+j of the generator matrix for each
// qubit j outside the coordinate's set, placed in the block column(s) of the
// tuple slots the coordinate constrains.
template <typename InSet>
GF2Matrix stacked_constraint_matrix(const Stabilizer& s, std::uint32_t r, InSet&& in_set) {
  const std::uint32_t n = s.qubits();
  const GF2Matrix& g = s.generators();
  const std::size_t cols = static_cast<std::size_t>(r) * n;
  std::vector<GF2Vector> rows;
  std::size_t coord = 0;
  auto emit = [&](std::uint32_t block1, std::int32_t block2) {
    for (std::uint32_t j = 0; j < n; ++j) {
      if (in_set(coord, j)) continue;
      for (const std::size_t src : {static_cast<std::size_t>(j), static_cast<std::size_t>(n) + j}) {
        GF2Vector row(cols);
        const GF2Vector& srow = g.row(src);
        for (std::size_t t = srow.first_set(0); t != GF2Vector::npos; t = srow.first_set(t + 1)) {
          row.set_bit(static_cast<std::size_t>(block1) * n + t, true);
          if (block2 >= 0) row.set_bit(static_cast<std::size_t>(block2) * n + t, true);
        }
        rows.push_back(std::move(row));
      }
    }
    ++coord;
  };
  for (std::uint32_t k = 0; k < r; ++k) emit(k, -1);
  for (std::uint32_t k = 0; k < r; ++k)
    for (std::uint32_t l = k + 1; l < r; ++l) emit(k, static_cast<std::int32_t>(l));
  return GF2Matrix::from_rows(std::move(rows), cols);
}

}  // namespace

std::uint64_t v_dim_invariant(const Stabilizer& s, const OmegaTuple& omega) {
  require_same_n(s, omega, "v_dim_invariant");
  const GF2Matrix m = stacked_constraint_matrix(
      s, omega.r(), [&](std::size_t c, std::uint32_t j) { return omega.coord(c).contains(j); });
  return corank(m);
}

std::uint64_t v_count_oracle(const Stabilizer& s, const OmegaTuple& omega,
                             std::uint32_t enum_budget) {
  require_same_n(s, omega, "v_count_oracle");
  require_enum_budget(s, omega, enum_budget, "v_count_oracle");
  const std::uint32_t n = s.qubits();
  const std::uint32_t r = omega.r();

  if (r == 1) {
    const std::uint64_t target = omega.single(0).mask();
    std::uint64_t count = 0;
    walk_elements(s,
                  [&](std::uint64_t v) { count += (packed::support_mask(v, n) & ~target) == 0; });
    return count;
  }

  const std::vector<std::uint64_t> elems = packed::elements(s);
  std::uint64_t count = 0;
  std::vector<std::uint64_t> chosen(r);
  auto rec = [&](auto&& self, std::uint32_t k) -> void {
    const std::uint64_t single = omega.single(k).mask();
    for (std::uint64_t v : elems) {
      if (packed::support_mask(v, n) & ~single) continue;
      bool ok = true;
      for (std::uint32_t j = 0; j < k; ++j) {
        if (packed::support_mask(chosen[j] ^ v, n) & ~omega.pair(j, k).mask()) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      if (k + 1 == r) {
        ++count;
      } else {
        chosen[k] = v;
        self(self, k + 1);
      }
    }
  };
  rec(rec, 0);
  return count;
}

std::uint64_t moebius_t_from_v(const std::map<OmegaTuple, std::uint64_t>& v_counts,
                               const OmegaTuple& omega0) {
  const std::vector<std::uint64_t> full = omega0.masks();
  const std::size_t ncoords = full.size();
  std::vector<std::uint64_t> cur(ncoords);
  long long acc = 0;
  auto rec = [&](auto&& self, std::size_t c, int sign) -> void {
    if (c == ncoords) {
      const OmegaTuple key = OmegaTuple::from_masks(omega0.n(), omega0.r(), cur);
      const auto it = v_counts.find(key);
      if (it == v_counts.end())
        throw std::invalid_argument("moebius_t_from_v: downward closure is missing " +
                                    format_omega_spec(key));
      acc += static_cast<long long>(it->second) * sign;
      return;
    }
    std::uint64_t sub = full[c];
    while (true) {
      cur[c] = sub;
      const int dropped = std::popcount(full[c]) - std::popcount(sub);
      self(self, c + 1, (dropped & 1) ? -sign : sign);
      if (sub == 0) break;
      sub = (sub - 1) & full[c];
    }
  };
  rec(rec, 0, 1);
  if (acc < 0) throw std::logic_error("moebius_t_from_v: negative reconstruction");
  return static_cast<std::uint64_t>(acc);
}

Fingerprint::Fingerprint(std::uint32_t n, std::uint32_t r, std::vector<std::uint32_t> values)
    : n_(n), r_(r), values_(std::move(values)) {}

std::vector<std::uint64_t> Fingerprint::key_masks(std::size_t i) const {
  const std::size_t ncoords = static_cast<std::size_t>(r_) + static_cast<std::size_t>(r_) * (r_ - 1) / 2;
  std::vector<std::uint64_t> masks(ncoords);
  std::uint64_t t = i;
  const std::uint64_t setmask = (std::uint64_t{1} << n_) - 1;
  for (std::size_t c = ncoords; c-- > 0;) {
    masks[c] = t & setmask;
    t >>= n_;
  }
  return masks;
}

OmegaTuple Fingerprint::key(std::size_t i) const {
  return OmegaTuple::from_masks(n_, r_, key_masks(i));
}

std::string Fingerprint::to_text() const {
  std::string out = "lcfp 1 " + std::to_string(n_) + " " + std::to_string(r_) + " " +
                    std::to_string(values_.size()) + "\n";
  out.reserve(out.size() + values_.size() * 8);
  for (std::size_t i = 0; i < values_.size(); ++i) {
    for (std::uint64_t m : key_masks(i)) {
      out += std::to_string(m);
      out += ' ';
    }
    out += std::to_string(values_[i]);
    out += '\n';
  }
  return out;
}

namespace {

// Corank of the stacked constraint system for r*n <= 64, on caller-provided
// scratch to keep the fingerprint sweep allocation-free. zrow/xrow hold the
// generator-matrix rows packed as n-bit masks over the columns.
std::uint32_t small_subset_dim(std::uint32_t n, std::uint32_t r, const std::uint64_t* zrow,
                               const std::uint64_t* xrow, const std::uint64_t* cmask,
                               std::vector<std::uint64_t>& rows) {
  const std::uint32_t cols = r * n;
  rows.clear();
  std::size_t c = 0;
  auto emit = [&](std::uint32_t k, std::int32_t l) {
    const std::uint64_t m = cmask[c++];
    for (std::uint32_t j = 0; j < n; ++j) {
      if ((m >> j) & 1) continue;
      std::uint64_t z = zrow[j] << (k * n);
      std::uint64_t x = xrow[j] << (k * n);
      if (l >= 0) {
        z |= zrow[j] << (static_cast<std::uint32_t>(l) * n);
        x |= xrow[j] << (static_cast<std::uint32_t>(l) * n);
      }
      rows.push_back(z);
      rows.push_back(x);
    }
  };
  for (std::uint32_t k = 0; k < r; ++k) emit(k, -1);
  for (std::uint32_t k = 0; k < r; ++k)
    for (std::uint32_t l = k + 1; l < r; ++l) emit(k, static_cast<std::int32_t>(l));

  std::uint32_t rk = 0;
  for (std::uint32_t b = 0; b < cols && rk < rows.size(); ++b) {
    const std::uint64_t bm = std::uint64_t{1} << b;
    std::size_t p = rk;
    while (p < rows.size() && !(rows[p] & bm)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[rk], rows[p]);
    for (std::size_t t = rk + 1; t < rows.size(); ++t)
      if (rows[t] & bm) rows[t] ^= rows[rk];
    ++rk;
  }
  return cols - rk;
}

}  // namespace

Fingerprint fingerprint(const Stabilizer& s, std::uint32_t r, std::uint64_t max_entries) {
  if (r < 1) throw std::invalid_argument("fingerprint: r must be >= 1");
  const std::uint32_t n = s.qubits();
  const std::uint64_t ncoords = static_cast<std::uint64_t>(r) + static_cast<std::uint64_t>(r) * (r - 1) / 2;
  const std::uint64_t bits = static_cast<std::uint64_t>(n) * ncoords;
  if (bits >= 63)
    throw budget_error("fingerprint: 2^" + std::to_string(bits) + " entries for n=" +
                           std::to_string(n) + ", r=" + std::to_string(r) + " exceed limit " +
                           std::to_string(max_entries),
                       ~std::uint64_t{0}, max_entries);
  const std::uint64_t entries = std::uint64_t{1} << bits;
  if (entries > max_entries)
    throw budget_error("fingerprint: " + std::to_string(entries) + " entries for n=" +
                           std::to_string(n) + ", r=" + std::to_string(r) + " exceed limit " +
                           std::to_string(max_entries),
                       entries, max_entries);

  std::vector<std::uint32_t> values(entries);
  const std::uint64_t setmask = (std::uint64_t{1} << n) - 1;

  if (static_cast<std::uint64_t>(r) * n <= 64) {
    std::vector<std::uint64_t> zrow(n, 0), xrow(n, 0);
    const GF2Matrix& g = s.generators();
    for (std::uint32_t j = 0; j < n; ++j)
      for (std::uint32_t t = 0; t < n; ++t) {
        if (g.get(j, t)) zrow[j] |= std::uint64_t{1} << t;
        if (g.get(static_cast<std::size_t>(n) + j, t)) xrow[j] |= std::uint64_t{1} << t;
      }
#pragma omp parallel for schedule(dynamic, 64) if (entries > 2048)
    for (std::int64_t e = 0; e < static_cast<std::int64_t>(entries); ++e) {
      thread_local std::vector<std::uint64_t> scratch;
      std::array<std::uint64_t, 64> cmask;
      std::uint64_t t = static_cast<std::uint64_t>(e);
      for (std::size_t c = ncoords; c-- > 0;) {
        cmask[c] = t & setmask;
        t >>= n;
      }
      values[static_cast<std::size_t>(e)] = small_subset_dim(n, r, zrow.data(), xrow.data(),
                                                             cmask.data(), scratch);
    }
  } else {
    Fingerprint decoder(n, r, {});
#pragma omp parallel for schedule(dynamic, 16) if (entries > 256)
    for (std::int64_t e = 0; e < static_cast<std::int64_t>(entries); ++e) {
      const OmegaTuple omega =
          OmegaTuple::from_masks(n, r, decoder.key_masks(static_cast<std::size_t>(e)));
      values[static_cast<std::size_t>(e)] =
          static_cast<std::uint32_t>(v_dim_invariant(s, omega));
    }
  }
  return Fingerprint(n, r, std::move(values));
}

OmegaTuple omega_star(const Stabilizer& s) {
  const std::uint32_t n = s.qubits();
  std::vector<PauliVector> gens;
  gens.reserve(n);
  for (std::uint32_t j = 0; j < n; ++j) gens.push_back(s.generator(j));
  std::vector<QubitSet> singles, pairs;
  for (std::uint32_t k = 0; k < n; ++k) singles.push_back(support(gens[k]));
  for (std::uint32_t k = 0; k < n; ++k)
    for (std::uint32_t l = k + 1; l < n; ++l) pairs.push_back(support(gens[k] + gens[l]));
  return OmegaTuple(n, n, std::move(singles), std::move(pairs));
}

namespace {

std::uint32_t parse_uint(const std::string& text, const char* what) {
  if (text.empty()) throw parse_error(std::string("omega spec: empty ") + what);
  std::uint64_t v = 0;
  for (char c : text) {
    if (c < '0' || c > '9')
      throw parse_error(std::string("omega spec: invalid ") + what + " \"" + text + "\"");
    v = v * 10 + static_cast<std::uint64_t>(c - '0');
    if (v > 1'000'000) throw parse_error(std::string("omega spec: ") + what + " out of range");
  }
  return static_cast<std::uint32_t>(v);
}

}  // namespace

OmegaTuple parse_omega_spec(std::string_view text, std::uint32_t n) {
  std::string clean;
  bool in_comment = false;
  for (char ch : text) {
    if (ch == '#') in_comment = true;
    if (ch == '\n') {
      in_comment = false;
      clean += ';';
      continue;
    }
    if (in_comment || ch == ' ' || ch == '\t' || ch == '\r') continue;
    clean += ch;
  }

  std::optional<std::uint32_t> r;
  std::map<std::uint32_t, QubitSet> singles;
  std::map<std::pair<std::uint32_t, std::uint32_t>, QubitSet> pairs;

  std::size_t pos = 0;
  while (pos <= clean.size()) {
    std::size_t end = clean.find(';', pos);
    if (end == std::string::npos) end = clean.size();
    const std::string tok = clean.substr(pos, end - pos);
    pos = end + 1;
    if (tok.empty()) continue;
    const std::size_t eq = tok.find('=');
    if (eq == std::string::npos)
      throw parse_error("omega spec: expected key=value, got \"" + tok + "\"");
    const std::string key = tok.substr(0, eq);
    const std::string val = tok.substr(eq + 1);
    if (key == "r") {
      r = parse_uint(val, "r");
      continue;
    }
    if (key.size() < 2 || key[0] != 'w')
      throw parse_error("omega spec: unknown key \"" + key + "\"");
    const std::string body = key.substr(1);
    std::uint32_t k = 0, l = 0;
    bool is_pair = false;
    if (const std::size_t comma = body.find(','); comma != std::string::npos) {
      k = parse_uint(body.substr(0, comma), "slot index");
      l = parse_uint(body.substr(comma + 1), "slot index");
      is_pair = true;
    } else if (body.size() == 1) {
      k = parse_uint(body, "slot index");
    } else if (body.size() == 2) {
      k = parse_uint(body.substr(0, 1), "slot index");
      l = parse_uint(body.substr(1), "slot index");
      is_pair = true;
    } else {
      throw parse_error("omega spec: cannot read slot key \"" + key +
                        "\" (use wK, wKL, or wK,L)");
    }
    const QubitSet set = QubitSet::parse(val, n);
    if (is_pair) {
      if (k >= l) throw parse_error("omega spec: pair key \"" + key + "\" needs k < l");
      if (!pairs.emplace(std::make_pair(k, l), set).second)
        throw parse_error("omega spec: duplicate key \"" + key + "\"");
    } else {
      if (!singles.emplace(k, set).second)
        throw parse_error("omega spec: duplicate key \"" + key + "\"");
    }
  }

  if (!r) throw parse_error("omega spec: missing r=...");
  if (*r < 1) throw parse_error("omega spec: r must be >= 1");
  std::vector<QubitSet> single_v, pair_v;
  for (std::uint32_t k = 1; k <= *r; ++k) {
    const auto it = singles.find(k);
    if (it == singles.end())
      throw parse_error("omega spec: missing w" + std::to_string(k) + "=...");
    single_v.push_back(it->second);
  }
  for (std::uint32_t k = 1; k <= *r; ++k)
    for (std::uint32_t l = k + 1; l <= *r; ++l) {
      const auto it = pairs.find({k, l});
      if (it == pairs.end())
        throw parse_error("omega spec: missing w" + std::to_string(k) + "," + std::to_string(l) +
                          "=...");
      pair_v.push_back(it->second);
    }
  if (singles.size() != *r || pairs.size() != pair_v.size())
    throw parse_error("omega spec: slot keys outside 1..r");
  return OmegaTuple(n, *r, std::move(single_v), std::move(pair_v));
}

std::string format_omega_spec(const OmegaTuple& omega) {
  std::string out = "r=" + std::to_string(omega.r());
  for (std::uint32_t k = 0; k < omega.r(); ++k)
    out += "; w" + std::to_string(k + 1) + "=" + omega.single(k).to_string();
  for (std::uint32_t k = 0; k < omega.r(); ++k)
    for (std::uint32_t l = k + 1; l < omega.r(); ++l) {
      const std::string key = (l + 1 <= 9) ? std::to_string(k + 1) + std::to_string(l + 1)
                                           : std::to_string(k + 1) + "," + std::to_string(l + 1);
      out += "; w" + key + "=" + omega.pair(k, l).to_string();
    }
  return out;
}

}  // namespace lcinv
