#include "ringlab/modules.hpp"

#include <boost/container_hash/hash.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "ringlab/sampling.hpp"

namespace ringlab {

namespace {

constexpr std::uint32_t kUnset = 0xffffffffu;
constexpr int kRandomSamples = 256;

// Arithmetic on R^g through mixed-radix codes.
struct FreeCodes {
  const Ring& ring;
  std::size_t g;
  std::uint64_t n;
  std::uint64_t total;

  FreeCodes(const Ring& r, std::size_t gens) : ring(r), g(gens), n(r.order()), total(1) {
    for (std::size_t i = 0; i < g; ++i) total *= n;
  }
  std::uint64_t encode(const std::vector<std::uint64_t>& v) const {
    std::uint64_t c = 0;
    for (auto x : v) c = c * n + x;
    return c;
  }
  std::vector<std::uint64_t> decode(std::uint64_t c) const {
    std::vector<std::uint64_t> v(g);
    for (std::size_t i = g; i-- > 0;) {
      v[i] = c % n;
      c /= n;
    }
    return v;
  }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    auto x = decode(a), y = decode(b);
    for (std::size_t i = 0; i < g; ++i) x[i] = ring.add_index(x[i], y[i]);
    return encode(x);
  }
  std::uint64_t scale(std::uint64_t r, std::uint64_t a) const {
    auto x = decode(a);
    for (auto& xi : x) xi = ring.mul_index(r, xi);
    return encode(x);
  }
};

// mask := mask + R*v over R^g codes.
void absorb_free(const FreeCodes& F, std::vector<char>& mask, std::uint64_t v) {
  std::vector<std::uint64_t> multiples;
  {
    std::vector<char> seen(F.total, 0);
    for (std::uint64_t r = 0; r < F.n; ++r) {
      std::uint64_t w = F.scale(r, v);
      if (!seen[w]) {
        seen[w] = 1;
        multiples.push_back(w);
      }
    }
  }
  std::vector<std::uint64_t> members;
  for (std::uint64_t c = 0; c < F.total; ++c)
    if (mask[c]) members.push_back(c);
  for (auto u : members)
    for (auto w : multiples) mask[F.add(u, w)] = 1;
}

bool is_prime_char(const Ring& ring) { return is_prime(ring.characteristic()); }

// Direct-sum coordinates of the additive group of a finite ring.
struct AdditiveCoords {
  std::vector<Element> basis;
  std::vector<std::uint64_t> orders;
};

AdditiveCoords additive_coords(const Ring& ring) {
  AdditiveCoords c;
  switch (ring.kind()) {
    case RingKind::ZmodN:
      c.basis = {ring.one()};
      c.orders = {ring.modulus()};
      break;
    case RingKind::PolyQuot:
    case RingKind::LocalNonChain2: {
      std::size_t k = ring.kind() == RingKind::PolyQuot ? ring.degree() : 3;
      for (std::size_t i = 0; i < k; ++i) {
        std::vector<std::int64_t> v(k, 0);
        v[i] = 1;
        c.basis.push_back(ring.from_coefficients(v));
        c.orders.push_back(ring.characteristic());
      }
      break;
    }
    case RingKind::Product: {
      const auto& fs = ring.factors();
      for (std::size_t f = 0; f < fs.size(); ++f) {
        AdditiveCoords sub = additive_coords(fs[f]);
        for (std::size_t i = 0; i < sub.basis.size(); ++i) {
          std::vector<Element> parts;
          for (std::size_t h = 0; h < fs.size(); ++h) parts.push_back(h == f ? sub.basis[i] : fs[h].zero());
          c.basis.push_back(ring.assemble(parts));
          c.orders.push_back(sub.orders[i]);
        }
      }
      break;
    }
    default:
      throw UnsupportedRing("additive coordinates need a finite ring");
  }
  return c;
}

std::vector<std::uint64_t> coords_of(const Ring& ring, const Element& a) {
  switch (ring.kind()) {
    case RingKind::ZmodN:
      return {a.index()};
    case RingKind::PolyQuot:
    case RingKind::LocalNonChain2:
      return ring.coefficients(a);
    case RingKind::Product: {
      std::vector<std::uint64_t> out;
      auto parts = ring.components(a);
      for (std::size_t f = 0; f < parts.size(); ++f) {
        auto sub = coords_of(ring.factors()[f], parts[f]);
        out.insert(out.end(), sub.begin(), sub.end());
      }
      return out;
    }
    default:
      throw UnsupportedRing("additive coordinates need a finite ring");
  }
}

// Coordinates of a module of prime characteristic p as an F_p vector space.
struct PrimeCoords {
  std::uint64_t p = 0;
  std::vector<std::uint32_t> basis;
  std::vector<std::uint64_t> index_of;  // element -> sum c_i p^i
  std::vector<std::uint32_t> elem_of;   // inverse

  std::size_t dim() const { return basis.size(); }
  std::vector<std::uint64_t> digits(std::uint32_t m) const {
    std::vector<std::uint64_t> d(dim());
    std::uint64_t x = index_of[m];
    for (auto& di : d) {
      di = x % p;
      x /= p;
    }
    return d;
  }
  std::uint32_t element(const std::vector<std::uint64_t>& d) const {
    std::uint64_t x = 0;
    for (std::size_t i = d.size(); i-- > 0;) x = x * p + d[i];
    return elem_of[x];
  }
};

PrimeCoords prime_coords(const FiniteModule& M) {
  PrimeCoords pc;
  pc.p = M.ring().characteristic();
  std::uint64_t size = M.size();
  pc.index_of.assign(size, kUnset);
  pc.elem_of.assign(size, kUnset);
  pc.index_of[0] = 0;
  pc.elem_of[0] = 0;
  std::vector<std::uint32_t> span{0};
  std::uint64_t weight = 1;
  for (std::uint32_t m = 0; m < size; ++m) {
    if (pc.index_of[m] != kUnset) continue;
    pc.basis.push_back(m);
    std::size_t old = span.size();
    std::uint32_t mult = 0;
    for (std::uint64_t c = 1; c < pc.p; ++c) {
      mult = M.add(mult, m);
      for (std::size_t i = 0; i < old; ++i) {
        std::uint32_t w = M.add(span[i], mult);
        pc.index_of[w] = pc.index_of[span[i]] + c * weight;
        pc.elem_of[pc.index_of[w]] = w;
        span.push_back(w);
      }
    }
    weight *= pc.p;
  }
  return pc;
}

std::uint64_t inv_mod_p(std::uint64_t a, std::uint64_t p) {
  std::uint64_t r = 1, b = a % p, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

// Nullspace basis of a matrix over F_p; free columns in ascending order.
std::vector<std::vector<std::uint64_t>> nullspace_mod_p(std::vector<std::vector<std::uint64_t>> rows,
                                                        std::size_t cols, std::uint64_t p) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][c] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    std::uint64_t inv = inv_mod_p(rows[r][c], p);
    for (auto& x : rows[r]) x = x * inv % p;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      std::uint64_t f = rows[i][c];
      for (std::size_t j = 0; j < cols; ++j) rows[i][j] = (rows[i][j] + (p - f) * rows[r][j]) % p;
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<char> is_pivot(cols, 0);
  for (auto c : pivots) is_pivot[c] = 1;
  std::vector<std::vector<std::uint64_t>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<std::uint64_t> v(cols, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = (p - rows[i][f]) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

// Incremental row echelon form over F_p; insert() reports independence.
struct EchelonFp {
  std::uint64_t p;
  std::vector<std::vector<std::uint64_t>> rows;
  std::vector<std::size_t> lead;

  bool insert(std::vector<std::uint64_t> v) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      std::uint64_t f = v[lead[i]];
      if (!f) continue;
      for (std::size_t j = 0; j < v.size(); ++j) v[j] = (v[j] + (p - f) * rows[i][j]) % p;
    }
    auto it = std::find_if(v.begin(), v.end(), [](std::uint64_t x) { return x != 0; });
    if (it == v.end()) return false;
    std::uint64_t inv = inv_mod_p(*it, p);
    for (auto& x : v) x = x * inv % p;
    lead.push_back(static_cast<std::size_t>(it - v.begin()));
    rows.push_back(std::move(v));
    return true;
  }
};

std::vector<std::uint64_t> endo_vector(const PrimeCoords& pc, const Endo& f) {
  std::vector<std::uint64_t> out;
  for (auto m : f) {
    auto d = pc.digits(m);
    out.insert(out.end(), d.begin(), d.end());
  }
  return out;
}

// Integer kernel by column echelon reduction with a unimodular transform.
std::vector<std::vector<BigInt>> integer_kernel(std::vector<std::vector<BigInt>> B, std::size_t cols) {
  std::size_t m = B.size();
  // columns: first m entries from B, then the transform
  std::vector<std::vector<BigInt>> C(cols, std::vector<BigInt>(m + cols));
  for (std::size_t c = 0; c < cols; ++c) {
    for (std::size_t i = 0; i < m; ++i) C[c][i] = B[i][c];
    C[c][m + c] = 1;
  }
  std::size_t pivot = 0;
  for (std::size_t i = 0; i < m && pivot < cols; ++i) {
    for (;;) {
      std::size_t best = cols;
      for (std::size_t c = pivot; c < cols; ++c)
        if (C[c][i] != 0 && (best == cols || abs(C[c][i]) < abs(C[best][i]))) best = c;
      if (best == cols) break;
      std::swap(C[pivot], C[best]);
      bool done = true;
      for (std::size_t c = pivot + 1; c < cols; ++c) {
        if (C[c][i] == 0) continue;
        BigInt q = C[c][i] / C[pivot][i];
        for (std::size_t k = 0; k < m + cols; ++k) C[c][k] -= q * C[pivot][k];
        if (C[c][i] != 0) done = false;
      }
      if (done) {
        ++pivot;
        break;
      }
    }
  }
  std::vector<std::vector<BigInt>> out;
  for (std::size_t c = pivot; c < cols; ++c) out.emplace_back(C[c].begin() + m, C[c].end());
  return out;
}

std::uint64_t mod_u(const BigInt& x, std::uint64_t c) {
  BigInt r = x % c;
  if (r < 0) r += c;
  return static_cast<std::uint64_t>(r);
}

std::optional<std::uint64_t> checked_pow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    if (r > UINT64_MAX / b) return std::nullopt;
    r *= b;
  }
  return r;
}

// Full map m -> f(m).
std::vector<std::uint32_t> full_map(const FiniteModule& M, const Endo& f) {
  std::vector<std::uint32_t> out(M.size());
  for (std::uint32_t m = 0; m < M.size(); ++m) out[m] = apply(M, f, m);
  return out;
}

// The idempotent power f^k of a self-map (Fitting), or nullopt on overflow.
std::optional<std::vector<std::uint32_t>> idempotent_power(const std::vector<std::uint32_t>& f) {
  std::size_t n = f.size();
  std::vector<int> state(n, 0);  // 0 new, 1 on stack, 2 done
  std::vector<std::uint64_t> depth(n, 0);
  std::uint64_t tail = 0, period = 1;
  for (std::size_t s = 0; s < n; ++s) {
    if (state[s]) continue;
    std::vector<std::uint32_t> path;
    std::uint32_t x = static_cast<std::uint32_t>(s);
    while (state[x] == 0) {
      state[x] = 1;
      depth[x] = path.size();
      path.push_back(x);
      x = f[x];
    }
    if (state[x] == 1) {
      std::uint64_t len = path.size() - depth[x];
      std::uint64_t g = std::gcd(period, len);
      if (period / g > UINT64_MAX / len) return std::nullopt;
      period = period / g * len;
      tail = std::max<std::uint64_t>(tail, depth[x]);
    } else {
      tail = std::max<std::uint64_t>(tail, path.size());
    }
    for (auto y : path) state[y] = 2;
  }
  std::uint64_t k = period * std::max<std::uint64_t>(1, (std::max<std::uint64_t>(tail, 1) + period - 1) / period);
  std::vector<std::uint32_t> result(n), base = f;
  std::iota(result.begin(), result.end(), 0);
  while (k) {
    if (k & 1)
      for (auto& r : result) r = base[r];
    std::vector<std::uint32_t> sq(n);
    for (std::size_t i = 0; i < n; ++i) sq[i] = base[base[i]];
    base = std::move(sq);
    k >>= 1;
  }
  return result;
}

struct Span {
  std::vector<Endo> gens;
  bool field = false;  // gens form an F_p basis
  std::uint64_t p = 0;
};

Span corner(const FiniteModule& M, const EndAlgebra& E, const std::optional<PrimeCoords>& pc, const Endo& e) {
  Span s;
  s.field = E.dimension_over_prime_field.has_value();
  s.p = E.characteristic;
  std::optional<EchelonFp> ech;
  if (s.field) ech = EchelonFp{s.p, {}, {}};
  std::unordered_set<Endo, boost::hash<Endo>> seen;
  for (const auto& b : E.basis) {
    Endo c = compose(M, e, compose(M, b, e));
    if (c == zero_endo(M)) continue;
    if (s.field) {
      if (ech->insert(endo_vector(*pc, c))) s.gens.push_back(c);
    } else if (seen.insert(c).second) {
      s.gens.push_back(c);
    }
  }
  return s;
}

IdempotentSearch search_span(const FiniteModule& M, const Span& span, const Endo& unit, std::uint64_t seed,
                             std::uint64_t cap) {
  IdempotentSearch out;
  Endo zero = zero_endo(M);
  auto nontrivial = [&](const Endo& f) { return f != zero && f != unit && is_idempotent_endo(M, f); };
  if (span.field) {
    auto total = checked_pow(span.p, span.gens.size());
    if (total && *total <= cap) {
      std::size_t D = span.gens.size();
      std::vector<std::uint64_t> digits(D, 0);
      Endo cur = zero;
      for (;;) {
        ++out.examined;
        if (nontrivial(cur)) {
          out.idempotent = cur;
          break;
        }
        std::size_t k = 0;
        for (; k < D; ++k) {
          cur = add(M, cur, span.gens[k]);
          if (++digits[k] < span.p) break;
          digits[k] = 0;
        }
        if (k == D) break;
      }
      out.coverage = "exhaustive: " + std::to_string(out.examined) + " of " + std::to_string(*total);
      return out;
    }
  } else if (auto all = enumerate_span(M, span.gens, cap)) {
    for (const auto& f : *all) {
      ++out.examined;
      if (nontrivial(f)) {
        out.idempotent = f;
        break;
      }
    }
    out.coverage = "exhaustive: " + std::to_string(out.examined) + " of " + std::to_string(all->size());
    return out;
  }
  out.exhaustive = false;
  Rng rng(seed);
  std::uint64_t bound = span.field ? span.p : M.ring().characteristic();
  for (int i = 0; i < kRandomSamples; ++i) {
    Endo f = zero;
    for (const auto& g : span.gens) {
      std::uint64_t c = draw(rng, bound);
      f = add(M, f, compose(M, scalar_endo(M, M.ring().from_int(static_cast<long long>(c)).index()), g));
    }
    ++out.examined;
    auto pw = idempotent_power(full_map(M, f));
    if (!pw) continue;
    Endo e(M.generator_count());
    for (std::size_t j = 0; j < e.size(); ++j) e[j] = (*pw)[M.generator(j)];
    if (nontrivial(e)) {
      out.idempotent = e;
      break;
    }
  }
  out.coverage = "random: " + std::to_string(out.examined) + " Fitting samples (span larger than " +
                 std::to_string(cap) + ")";
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

std::uint64_t FiniteModule::encode(const std::vector<std::uint64_t>& v) const {
  return FreeCodes(ring_, presentation_.generators).encode(v);
}

std::vector<std::uint64_t> FiniteModule::decode(std::uint64_t code) const {
  return FreeCodes(ring_, presentation_.generators).decode(code);
}

std::uint32_t FiniteModule::add(std::uint32_t a, std::uint32_t b) const {
  FreeCodes F(ring_, presentation_.generators);
  return coset_of_[F.add(reps_[a], reps_[b])];
}

std::uint32_t FiniteModule::neg(std::uint32_t a) const {
  auto v = decode(reps_[a]);
  for (auto& x : v) x = ring_.neg_index(x);
  return coset_of_[encode(v)];
}

std::uint32_t FiniteModule::act(std::uint64_t r, std::uint32_t m) const {
  FreeCodes F(ring_, presentation_.generators);
  return coset_of_[F.scale(r, reps_[m])];
}

std::uint32_t FiniteModule::generator(std::size_t j) const {
  std::vector<std::uint64_t> v(presentation_.generators, 0);
  v[j] = ring_.one().index();
  return coset_of_[encode(v)];
}

std::vector<std::uint64_t> FiniteModule::representative(std::uint32_t m) const { return decode(reps_[m]); }

std::uint32_t FiniteModule::element_of(const std::vector<std::uint64_t>& v) const { return coset_of_[encode(v)]; }

std::string FiniteModule::format(std::uint32_t m) const {
  std::string out = "(";
  auto v = representative(m);
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + ring_.format(ring_.at(v[i]));
  return out + ")";
}

FiniteModule present_module(const Ring& ring, const Presentation& p, const PresentationCaps& caps) {
  if (!ring.is_finite()) throw UnsupportedRing("modules are materialized over finite rings only");
  require_enumerable(ring, "module presentation");
  if (p.generators > caps.max_generators)
    throw EnumerationCapExceeded("presentation has " + std::to_string(p.generators) + " generators (cap " +
                                 std::to_string(caps.max_generators) + ")");
  if (p.relations.size() > caps.max_relations)
    throw EnumerationCapExceeded("presentation has " + std::to_string(p.relations.size()) + " relations (cap " +
                                 std::to_string(caps.max_relations) + ")");
  FreeCodes F(ring, p.generators);
  {
    long double est = 1;
    for (std::size_t i = 0; i < p.generators; ++i) est *= static_cast<long double>(ring.order());
    if (est > static_cast<long double>(caps.max_free_size))
      throw EnumerationCapExceeded("|R|^g exceeds " + std::to_string(caps.max_free_size));
  }
  for (const auto& row : p.relations) {
    if (row.size() != p.generators) throw InvalidSpec("relation row length differs from the generator count");
    for (const auto& x : row)
      if (!ring.is_member(x)) throw InvalidSpec("relation entry is not an element of " + ring.spec());
  }
  std::vector<char> K(F.total, 0);
  K[0] = 1;
  for (const auto& row : p.relations) {
    std::vector<std::uint64_t> v;
    for (const auto& x : row) v.push_back(x.index());
    absorb_free(F, K, F.encode(v));
  }
  std::vector<std::uint64_t> kernel;
  for (std::uint64_t c = 0; c < F.total; ++c)
    if (K[c]) kernel.push_back(c);
  FiniteModule M(ring, p);
  M.coset_of_.assign(F.total, kUnset);
  for (std::uint64_t v = 0; v < F.total; ++v) {
    if (M.coset_of_[v] != kUnset) continue;
    auto id = static_cast<std::uint32_t>(M.reps_.size());
    M.reps_.push_back(v);
    for (auto k : kernel) M.coset_of_[F.add(v, k)] = id;
  }
  return M;
}

FiniteModule present_module(const Ring& ring, const Matrix& relations, std::size_t generators) {
  return present_module(ring, Presentation{generators, relations});
}

Presentation parse_presentation(const Ring& ring, std::string_view text) {
  std::istringstream in{std::string(text)};
  long long g = -1, r = -1;
  if (!(in >> g >> r) || g < 0 || r < 0) throw SyntaxError("presentation header must be \"g r\"");
  Presentation p;
  p.generators = static_cast<std::size_t>(g);
  for (long long i = 0; i < r; ++i) {
    std::vector<Element> row;
    for (long long j = 0; j < g; ++j) {
      std::string tok;
      if (!(in >> tok)) throw SyntaxError("presentation ends early");
      row.push_back(ring.parse_element(tok));
    }
    p.relations.push_back(std::move(row));
  }
  std::string extra;
  if (in >> extra) throw SyntaxError("trailing token in presentation: " + extra);
  return p;
}

std::string format_presentation(const Ring& ring, const Presentation& p) {
  std::string out = std::to_string(p.generators) + " " + std::to_string(p.relations.size()) + "\n";
  for (const auto& row : p.relations) {
    for (std::size_t j = 0; j < row.size(); ++j) out += (j ? " " : "") + ring.format(row[j]);
    out += "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------

ModuleMask submodule_generated(const FiniteModule& M, const std::vector<std::uint32_t>& gens) {
  ModuleMask mask(M.size(), 0);
  mask[0] = 1;
  const Ring& R = M.ring();
  for (auto y : gens) {
    if (mask[y]) continue;
    std::vector<std::uint32_t> multiples;
    {
      ModuleMask seen(M.size(), 0);
      for (std::uint64_t r = 0; r < R.order(); ++r) {
        std::uint32_t w = M.act(r, y);
        if (!seen[w]) {
          seen[w] = 1;
          multiples.push_back(w);
        }
      }
    }
    auto members = mask_members(mask);
    for (auto u : members)
      for (auto w : multiples) mask[M.add(u, w)] = 1;
  }
  return mask;
}

std::vector<std::uint32_t> mask_members(const ModuleMask& mask) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < mask.size(); ++i)
    if (mask[i]) out.push_back(i);
  return out;
}

FiniteModule present_submodule(const FiniteModule& M, const std::vector<std::uint32_t>& gens) {
  const Ring& R = M.ring();
  std::vector<std::uint32_t> ys;
  ModuleMask have(M.size(), 0);
  have[0] = 1;
  for (auto y : gens) {
    if (have[y]) continue;
    ys.push_back(y);
    have = submodule_generated(M, ys);
  }
  FreeCodes F(R, ys.size());
  if (F.total > (1u << 16)) throw EnumerationCapExceeded("re-presentation needs |R|^k <= 65536");
  std::vector<char> rel(F.total, 0);
  rel[0] = 1;
  Presentation p;
  p.generators = ys.size();
  for (std::uint64_t c = 0; c < F.total; ++c) {
    auto v = F.decode(c);
    std::uint32_t image = 0;
    for (std::size_t j = 0; j < ys.size(); ++j) image = M.add(image, M.act(v[j], ys[j]));
    if (image != 0 || rel[c]) continue;
    std::vector<Element> row;
    for (auto x : v) row.push_back(R.at(x));
    p.relations.push_back(std::move(row));
    absorb_free(F, rel, c);
  }
  PresentationCaps caps;
  caps.max_relations = p.relations.size();
  caps.max_generators = std::max(caps.max_generators, p.generators);
  return present_module(R, p, caps);
}

std::vector<LocalFactor> local_factors(const Ring& ring) {
  RadicalSet J = jacobson_radical(ring);
  std::vector<LocalFactor> out;
  for (const auto& e : primitive_idempotents(ring)) {
    std::uint64_t re = 0, je = 0;
    for (std::uint64_t a = 0; a < ring.order(); ++a)
      if (ring.mul_index(a, e.index()) == a) ++re;
    for (const auto& x : J.elements)
      if (ring.mul_index(x.index(), e.index()) == x.index()) ++je;
    out.push_back({e, re / je});
  }
  return out;
}

std::uint64_t submodule_length(const FiniteModule& M, const ModuleMask& sub) {
  std::uint64_t total = 0;
  for (const auto& f : local_factors(M.ring())) {
    ModuleMask img(M.size(), 0);
    std::uint64_t count = 0;
    for (std::uint32_t m = 0; m < M.size(); ++m) {
      if (!sub[m]) continue;
      std::uint32_t w = M.act(f.idempotent.index(), m);
      if (!img[w]) {
        img[w] = 1;
        ++count;
      }
    }
    std::uint64_t k = 0, q = 1;
    while (q < count) {
      q *= f.residue_order;
      ++k;
    }
    if (q != count) throw InvalidSpec("local part size is not a power of the residue field order");
    total += k;
  }
  return total;
}

std::uint64_t module_length(const FiniteModule& M) { return submodule_length(M, ModuleMask(M.size(), 1)); }

// ---------------------------------------------------------------------------

std::uint32_t apply(const FiniteModule& M, const Endo& f, std::uint32_t m) {
  auto v = M.representative(m);
  std::uint32_t out = 0;
  for (std::size_t j = 0; j < v.size(); ++j)
    if (v[j]) out = M.add(out, M.act(v[j], f[j]));
  return out;
}

Endo compose(const FiniteModule& M, const Endo& f, const Endo& g) {
  Endo out(g.size());
  for (std::size_t j = 0; j < g.size(); ++j) out[j] = apply(M, f, g[j]);
  return out;
}

Endo add(const FiniteModule& M, const Endo& f, const Endo& g) {
  Endo out(f.size());
  for (std::size_t j = 0; j < f.size(); ++j) out[j] = M.add(f[j], g[j]);
  return out;
}

Endo sub(const FiniteModule& M, const Endo& f, const Endo& g) {
  Endo out(f.size());
  for (std::size_t j = 0; j < f.size(); ++j) out[j] = M.add(f[j], M.neg(g[j]));
  return out;
}

Endo identity_endo(const FiniteModule& M) {
  Endo out(M.generator_count());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = M.generator(j);
  return out;
}

Endo zero_endo(const FiniteModule& M) { return Endo(M.generator_count(), 0); }

Endo scalar_endo(const FiniteModule& M, std::uint64_t r) {
  Endo out(M.generator_count());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = M.act(r, M.generator(j));
  return out;
}

bool is_endomorphism(const FiniteModule& M, const Endo& f) {
  if (f.size() != M.generator_count()) return false;
  for (const auto& row : M.presentation().relations) {
    std::uint32_t s = 0;
    for (std::size_t j = 0; j < row.size(); ++j) s = M.add(s, M.act(row[j].index(), f[j]));
    if (s != 0) return false;
  }
  return true;
}

bool is_idempotent_endo(const FiniteModule& M, const Endo& f) { return compose(M, f, f) == f; }

std::string format_endo(const FiniteModule& M, const Endo& f) {
  std::string out = "[";
  for (std::size_t j = 0; j < f.size(); ++j) out += (j ? "; " : "") + M.format(f[j]);
  return out + "]";
}

// ---------------------------------------------------------------------------

EndAlgebra endomorphism_basis_prime_field(const FiniteModule& M, const EndOptions& opts) {
  const Ring& R = M.ring();
  if (!is_prime_char(R)) throw UnsupportedRing("prime-field solver needs prime characteristic");
  PrimeCoords pc = prime_coords(M);
  std::uint64_t p = pc.p;
  std::size_t d = pc.dim();
  // additive basis of R over F_p
  std::vector<std::uint64_t> rbasis;
  {
    std::vector<char> span(R.order(), 0);
    span[0] = 1;
    for (std::uint64_t a = 0; a < R.order(); ++a) {
      if (span[a]) continue;
      rbasis.push_back(a);
      std::vector<std::uint64_t> members;
      for (std::uint64_t x = 0; x < R.order(); ++x)
        if (span[x]) members.push_back(x);
      std::uint64_t mult = 0;
      for (std::uint64_t c = 1; c < p; ++c) {
        mult = R.add_index(mult, a);
        for (auto x : members) span[R.add_index(x, mult)] = 1;
      }
    }
  }
  // X commutes with the action matrix of every basis element
  std::vector<std::vector<std::uint64_t>> rows;
  for (auto b : rbasis) {
    std::vector<std::vector<std::uint64_t>> A(d, std::vector<std::uint64_t>(d));
    for (std::size_t i = 0; i < d; ++i) {
      auto col = pc.digits(M.act(b, pc.basis[i]));
      for (std::size_t w = 0; w < d; ++w) A[w][i] = col[w];
    }
    for (std::size_t u = 0; u < d; ++u)
      for (std::size_t v = 0; v < d; ++v) {
        std::vector<std::uint64_t> eq(d * d, 0);
        for (std::size_t w = 0; w < d; ++w) {
          eq[u * d + w] = (eq[u * d + w] + A[w][v]) % p;
          eq[w * d + v] = (eq[w * d + v] + p - A[u][w]) % p;
        }
        if (std::any_of(eq.begin(), eq.end(), [](std::uint64_t x) { return x != 0; })) rows.push_back(std::move(eq));
      }
  }
  auto null = nullspace_mod_p(std::move(rows), d * d, p);
  if (null.size() > opts.max_dimension)
    throw DimensionCapExceeded("endomorphism space has dimension " + std::to_string(null.size()) + " (cap " +
                               std::to_string(opts.max_dimension) + ")");
  EndAlgebra E{M, {}, p, null.size(), checked_pow(p, null.size())};
  for (const auto& X : null) {
    Endo f(M.generator_count());
    for (std::size_t j = 0; j < f.size(); ++j) {
      auto c = pc.digits(M.generator(j));
      std::vector<std::uint64_t> img(d, 0);
      for (std::size_t u = 0; u < d; ++u)
        for (std::size_t w = 0; w < d; ++w) img[u] = (img[u] + X[u * d + w] * c[w]) % p;
      f[j] = pc.element(img);
    }
    E.basis.push_back(std::move(f));
  }
  return E;
}

EndAlgebra endomorphism_basis_lattice(const FiniteModule& M, const EndOptions& opts) {
  const Ring& R = M.ring();
  AdditiveCoords ac = additive_coords(R);
  std::size_t s = ac.basis.size(), g = M.generator_count(), t = s * g;
  const Matrix& rel = M.presentation().relations;
  std::size_t r = rel.size();
  // lattice of M inside Z^t, coordinate (k, j) at j*s + k
  std::vector<std::vector<BigInt>> lattice;
  for (std::size_t j = 0; j < g; ++j)
    for (std::size_t k = 0; k < s; ++k) {
      std::vector<BigInt> v(t, 0);
      v[j * s + k] = ac.orders[k];
      lattice.push_back(std::move(v));
    }
  for (const auto& row : rel)
    for (std::size_t k = 0; k < s; ++k) {
      std::vector<BigInt> v(t, 0);
      for (std::size_t j = 0; j < g; ++j) {
        auto c = coords_of(R, R.mul(ac.basis[k], row[j]));
        for (std::size_t h = 0; h < s; ++h) v[j * s + h] = c[h];
      }
      lattice.push_back(std::move(v));
    }
  std::size_t l = lattice.size();
  auto mult = [&](const Element& a) {
    std::vector<std::vector<std::uint64_t>> T(s, std::vector<std::uint64_t>(s));
    for (std::size_t k = 0; k < s; ++k) {
      auto c = coords_of(R, R.mul(a, ac.basis[k]));
      for (std::size_t h = 0; h < s; ++h) T[h][k] = c[h];
    }
    return T;
  };
  std::size_t cols = g * t + r * l;
  std::vector<std::vector<BigInt>> B(r * t, std::vector<BigInt>(cols, 0));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < g; ++j) {
      auto T = mult(rel[i][j]);
      // unknown v_j occupies columns j*t .. j*t+t-1; a acts blockwise
      for (std::size_t blk = 0; blk < g; ++blk)
        for (std::size_t h = 0; h < s; ++h)
          for (std::size_t k = 0; k < s; ++k) B[i * t + blk * s + h][j * t + blk * s + k] = T[h][k];
    }
    for (std::size_t c = 0; c < l; ++c)
      for (std::size_t h = 0; h < t; ++h) B[i * t + h][g * t + i * l + c] = -lattice[c][h];
  }
  auto kernel = integer_kernel(std::move(B), cols);
  EndAlgebra E{M, {}, R.characteristic(), std::nullopt, std::nullopt};
  std::unordered_set<Endo, boost::hash<Endo>> seen;
  seen.insert(zero_endo(M));
  for (const auto& vec : kernel) {
    Endo f(g);
    for (std::size_t j = 0; j < g; ++j) {
      std::vector<std::uint64_t> w(g);
      for (std::size_t blk = 0; blk < g; ++blk) {
        Element x = R.zero();
        for (std::size_t k = 0; k < s; ++k) {
          std::uint64_t c = mod_u(vec[j * t + blk * s + k], ac.orders[k]);
          x = R.add(x, R.mul(R.from_int(static_cast<long long>(c)), ac.basis[k]));
        }
        w[blk] = x.index();
      }
      f[j] = M.element_of(w);
    }
    if (seen.insert(f).second) E.basis.push_back(std::move(f));
  }
  if (auto all = enumerate_span(M, E.basis, opts.enumeration_cap)) E.order = all->size();
  return E;
}

EndAlgebra endomorphism_basis(const FiniteModule& M, const EndOptions& opts) {
  if (is_prime_char(M.ring())) return endomorphism_basis_prime_field(M, opts);
  return endomorphism_basis_lattice(M, opts);
}

std::optional<std::vector<Endo>> enumerate_span(const FiniteModule& M, const std::vector<Endo>& gens,
                                                std::uint64_t cap) {
  std::vector<Endo> order{zero_endo(M)};
  std::unordered_set<Endo, boost::hash<Endo>> seen(order.begin(), order.end());
  for (std::size_t i = 0; i < order.size(); ++i)
    for (const auto& g : gens) {
      Endo f = add(M, order[i], g);
      if (seen.insert(f).second) {
        if (order.size() >= cap) return std::nullopt;
        order.push_back(std::move(f));
      }
    }
  return order;
}

IdempotentSearch find_nontrivial_idempotent(const EndAlgebra& E, std::uint64_t seed, const EndOptions& opts) {
  Span s{E.basis, E.dimension_over_prime_field.has_value(), E.characteristic};
  return search_span(E.module, s, identity_endo(E.module), seed, opts.enumeration_cap);
}

std::string indecomposability_name(Indecomposability v) {
  switch (v) {
    case Indecomposability::Indecomposable:
      return "indecomposable";
    case Indecomposability::Decomposable:
      return "decomposable";
    case Indecomposability::ProbablyIndecomposable:
      return "probably-indecomposable";
    case Indecomposability::Zero:
      return "zero";
  }
  return "";
}

IndecomposableVerdict is_indecomposable(const FiniteModule& M, std::uint64_t seed) {
  IndecomposableVerdict v;
  if (M.size() == 1) {
    v.value = Indecomposability::Zero;
    return v;
  }
  auto search = find_nontrivial_idempotent(endomorphism_basis(M), seed);
  v.examined = search.examined;
  v.coverage = search.coverage;
  v.idempotent = search.idempotent;
  if (search.idempotent)
    v.value = Indecomposability::Decomposable;
  else
    v.value = search.exhaustive ? Indecomposability::Indecomposable : Indecomposability::ProbablyIndecomposable;
  return v;
}

DecompositionResult decompose(const FiniteModule& M, std::uint64_t seed) {
  DecompositionResult out;
  if (M.size() == 1) return out;
  EndAlgebra E = endomorphism_basis(M);
  std::optional<PrimeCoords> pc;
  if (E.dimension_over_prime_field) pc = prime_coords(M);
  Endo zero = zero_endo(M);
  std::vector<Endo> start;
  for (const auto& f : local_factors(M.ring())) {
    Endo e = scalar_endo(M, f.idempotent.index());
    if (e != zero) start.push_back(std::move(e));
  }
  std::vector<Endo> primitive;
  std::vector<Endo> stack(start.rbegin(), start.rend());
  while (!stack.empty()) {
    Endo e = std::move(stack.back());
    stack.pop_back();
    auto found = search_span(M, corner(M, E, pc, e), e, seed, EndOptions{}.enumeration_cap);
    if (!found.exhaustive && !found.idempotent) out.exhaustive = false;
    if (found.idempotent) {
      stack.push_back(sub(M, e, *found.idempotent));
      stack.push_back(*found.idempotent);
    } else {
      primitive.push_back(std::move(e));
    }
  }
  Endo id = identity_endo(M);
  for (const auto& e : primitive) {
    out.idempotents.push_back(e);
    if (e == id)
      out.summands.push_back(M);
    else
      out.summands.push_back(present_submodule(M, e));
    const FiniteModule& S = out.summands.back();
    out.lengths.push_back(module_length(S));
    std::vector<std::string> labels;
    for (const auto& m : support(S)) labels.push_back(m.label);
    out.supports.push_back(std::move(labels));
  }
  return out;
}

std::vector<MaximalIdeal> support(const FiniteModule& M) {
  std::vector<MaximalIdeal> out;
  for (const auto& m : max_spectrum(M.ring()).points) {
    std::uint64_t e = m.primitive_idempotent->index();
    for (std::size_t j = 0; j < M.generator_count(); ++j)
      if (M.act(e, M.generator(j)) != 0) {
        out.push_back(m);
        break;
      }
  }
  return out;
}

CyclicVerdict is_cyclic(const FiniteModule& M) {
  CyclicVerdict v;
  const Ring& R = M.ring();
  for (std::uint32_t m = 0; m < M.size(); ++m) {
    ModuleMask seen(M.size(), 0);
    std::uint64_t count = 0;
    for (std::uint64_t r = 0; r < R.order(); ++r) {
      std::uint32_t w = M.act(r, m);
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
      }
    }
    if (count == M.size()) {
      v.value = true;
      v.generator = m;
      return v;
    }
  }
  return v;
}

ModuleMask socle(const FiniteModule& M) {
  RadicalSet J = jacobson_radical(M.ring());
  ModuleMask mask(M.size(), 0);
  for (std::uint32_t m = 0; m < M.size(); ++m) {
    bool killed = true;
    for (const auto& j : J.generators)
      if (M.act(j.index(), m) != 0) {
        killed = false;
        break;
      }
    mask[m] = killed;
  }
  return mask;
}

bool is_cocyclic(const FiniteModule& M) { return M.size() > 1 && submodule_length(M, socle(M)) == 1; }

FiniteModule lemma33_module(const Ring& ring, const Element& a, const Element& b, std::size_t N) {
  if (!ring.is_finite()) throw UnsupportedRing("the construction needs a finite ring");
  if (N < 2 || N > 5) throw InvalidSpec("N must lie in 2..5");
  require_enumerable(ring, "construction");
  if (primitive_idempotents(ring).size() != 1) throw HypothesisViolated("HypothesisViolated: R is not local");
  if (ring.is_zero(a) || ring.is_zero(b)) throw HypothesisViolated("HypothesisViolated: a and b must be nonzero");
  Mask ra = principal_ideal_mask(ring, a.index()), rb = principal_ideal_mask(ring, b.index());
  for (std::uint64_t x = 1; x < ring.order(); ++x)
    if (ra[x] && rb[x]) throw HypothesisViolated("HypothesisViolated: Ra and Rb meet in " + ring.format(ring.at(x)));
  for (const auto& j : jacobson_radical(ring).generators) {
    if (!ring.is_zero(ring.mul(j, a))) throw HypothesisViolated("HypothesisViolated: Pa != 0");
    if (!ring.is_zero(ring.mul(j, b))) throw HypothesisViolated("HypothesisViolated: Pb != 0");
  }
  Matrix rel;
  for (std::size_t i = 0; i + 1 < N; ++i) {
    std::vector<Element> row(N, ring.zero());
    row[i] = a;
    row[i + 1] = ring.neg(b);
    rel.push_back(std::move(row));
  }
  return present_module(ring, rel, N);
}

std::vector<BatteryModule> module_battery(const Ring& ring, std::uint64_t seed) {
  require_enumerable(ring, "module battery");
  std::vector<BatteryModule> out;
  std::vector<Mask> seen;
  for (std::uint64_t a = 0; a < ring.order(); ++a) {
    Mask m = principal_ideal_mask(ring, a);
    if (std::find(seen.begin(), seen.end(), m) != seen.end()) continue;
    seen.push_back(m);
    out.push_back({"R/(" + ring.format(ring.at(a)) + ")", present_module(ring, {{ring.at(a)}}, 1)});
  }
  Rng rng(seed);
  for (int i = 0; i < 20; ++i) {
    Element a = ring.at(draw(rng, ring.order())), b = ring.at(draw(rng, ring.order()));
    out.push_back({"R^2/(" + ring.format(a) + "," + ring.format(b) + ")", present_module(ring, {{a, b}}, 2)});
  }
  if (primitive_idempotents(ring).size() == 1) {
    std::vector<Mask> principal;
    for (std::uint64_t a = 0; a < ring.order(); ++a) principal.push_back(principal_ideal_mask(ring, a));
    auto meet_zero = [&](std::uint64_t a, std::uint64_t b) {
      for (std::uint64_t x = 1; x < ring.order(); ++x)
        if (principal[a][x] && principal[b][x]) return false;
      return true;
    };
    for (std::uint64_t a = 1; a < ring.order(); ++a)
      for (std::uint64_t b = 1; b < a; ++b) {
        if (!meet_zero(a, b)) continue;
        try {
          lemma33_module(ring, ring.at(a), ring.at(b), 2);
        } catch (const HypothesisViolated&) {
          continue;
        }
        for (std::size_t N : {2, 3}) {
          std::string label = "lemma33(" + ring.format(ring.at(a)) + "," + ring.format(ring.at(b)) + "," +
                              std::to_string(N) + ")";
          out.push_back({label, lemma33_module(ring, ring.at(a), ring.at(b), N)});
        }
        return out;
      }
  }
  return out;
}

}  // namespace ringlab
