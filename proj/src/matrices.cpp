#include "webworld/matrices.hpp"
#include "webworld/error.hpp"

#include <algorithm>
#include <map>

namespace webworld {

namespace {

void check_dimension(const WebWorld& w, const MatrixOptions& opts) {
  if (w.size() > opts.max_dimension)
    throw WebError(ErrorKind::WorldTooLarge, "world has " + std::to_string(w.size()) +
                                                 " diagrams, matrix guard is " +
                                                 std::to_string(opts.max_dimension));
}

// Counts, per column diagram and colour count, the colourings of row `i`.
// Result is laid out as counts[col * (L + 1) + l].
std::vector<std::uint64_t> row_counts(const WebWorld& w, std::size_t i) {
  const WebDiagram& d = w[i];
  const int edges = static_cast<int>(d.size());
  const std::size_t stride = edges + 1;
  std::vector<std::uint64_t> counts(w.size() * stride, 0);
  ReconstructionKernel kernel(d);
  std::vector<Edge> scratch;
  Colouring c;
  for (int l = 1; l <= edges; ++l) {
    SurjectiveColourings stream(edges, l);
    while (stream.next(c)) {
      kernel.apply(c.assignment, scratch);
      auto j = w.find(scratch);
      if (!j) throw WebError(ErrorKind::DifferentWorlds, "reconstruction left the world");
      ++counts[*j * stride + l];
    }
  }
  return counts;
}

BigInt common_denominator(std::span<const BigRational> dense) {
  BigInt d = 1;
  for (const auto& v : dense) {
    const BigInt den = boost::multiprecision::denominator(v);
    if (den != 1) d = lcm(d, den);
  }
  return d;
}

std::vector<BigInt> scaled_integers(std::span<const BigRational> dense, const BigInt& scale) {
  std::vector<BigInt> out;
  out.reserve(dense.size());
  for (const auto& v : dense)
    out.push_back(boost::multiprecision::numerator(v) * (scale / boost::multiprecision::denominator(v)));
  return out;
}

bool fits_int64(const std::vector<BigInt>& v) {
  static const BigInt limit = BigInt(1) << 62;
  return std::all_of(v.begin(), v.end(), [](const BigInt& x) { return boost::multiprecision::abs(x) < limit; });
}

// S * S == scale * S in 64-bit arithmetic; nullopt when anything overflows.
std::optional<bool> idempotent_int64(const std::vector<BigInt>& s, std::int64_t scale, std::size_t dim) {
  std::vector<std::int64_t> m(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) m[i] = static_cast<std::int64_t>(s[i]);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      std::int64_t acc = 0;
      for (std::size_t k = 0; k < dim; ++k) {
        const std::int64_t a = m[i * dim + k];
        if (a == 0) continue;
        std::int64_t prod;
        if (__builtin_mul_overflow(a, m[k * dim + j], &prod) || __builtin_add_overflow(acc, prod, &acc))
          return std::nullopt;
      }
      std::int64_t rhs;
      if (__builtin_mul_overflow(scale, m[i * dim + j], &rhs)) return std::nullopt;
      if (acc != rhs) return false;
    }
  }
  return true;
}

}  // namespace

bool same_world(const WebDiagram& d1, const WebDiagram& d2) {
  if (d1.peg_count() != d2.peg_count() || d1.size() != d2.size()) return false;
  std::vector<PegPair> p1, p2;
  for (const Edge& e : d1.edges()) p1.emplace_back(e.x, e.y);
  for (const Edge& e : d2.edges()) p2.emplace_back(e.x, e.y);
  std::sort(p1.begin(), p1.end());
  std::sort(p2.begin(), p2.end());
  return p1 == p2;
}

std::vector<BigInt> f_counts(const WebDiagram& d1, const WebDiagram& d2) {
  if (!same_world(d1, d2))
    throw WebError(ErrorKind::DifferentWorlds, d1.to_string() + " vs " + d2.to_string());
  const int edges = static_cast<int>(d1.size());
  std::vector<BigInt> counts(edges + 1, 0);
  ReconstructionKernel kernel(d1);
  std::vector<Edge> scratch;
  Colouring c;
  for (int l = 1; l <= edges; ++l) {
    SurjectiveColourings stream(edges, l);
    std::uint64_t hits = 0;
    while (stream.next(c)) {
      kernel.apply(c.assignment, scratch);
      if (scratch == d2.edges()) ++hits;
    }
    counts[l] = hits;
  }
  return counts;
}

BigInt f_count(const WebDiagram& d1, const WebDiagram& d2, int colours) {
  if (!same_world(d1, d2))
    throw WebError(ErrorKind::DifferentWorlds, d1.to_string() + " vs " + d2.to_string());
  const int edges = static_cast<int>(d1.size());
  if (colours < 1 || colours > edges)
    throw WebError(ErrorKind::BadRange, "colour count " + std::to_string(colours) + " outside 1.." +
                                            std::to_string(edges));
  return f_counts(d1, d2)[colours];
}

IntPolynomial colouring_entry(const WebDiagram& d1, const WebDiagram& d2) {
  return IntPolynomial(f_counts(d1, d2));
}

BigRational mixing_from_counts(std::span<const BigInt> counts) {
  BigRational r = 0;
  for (std::size_t l = 1; l < counts.size(); ++l) {
    if (counts[l] == 0) continue;
    BigRational term(counts[l], BigInt(l));
    if (l % 2 == 0) r -= term;
    else r += term;
  }
  return r;
}

BigRational mixing_entry(const WebDiagram& d1, const WebDiagram& d2) {
  return mixing_from_counts(f_counts(d1, d2));
}

BigRational mixing_from_polynomial(const IntPolynomial& m) {
  if (m.coefficient(0) != 0)
    throw WebError(ErrorKind::InvalidMatrix, "colouring polynomial has a constant term");
  // M(-x): flip odd coefficients.
  std::vector<BigInt> reflected = m.coefficients();
  for (std::size_t l = 1; l < reflected.size(); l += 2) reflected[l] = -reflected[l];
  // Divide by x, integrate over [0, 1], negate.
  BigRational integral = 0;
  for (std::size_t l = 1; l < reflected.size(); ++l) integral += BigRational(reflected[l], BigInt(l));
  return -integral;
}

ColouringMatrix colouring_matrix(const WebWorld& w, const MatrixOptions& opts) {
  check_dimension(w, opts);
  ColouringMatrix m(w);
  const std::size_t stride = w.edge_count() + 1;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const auto counts = row_counts(w, i);
    for (std::size_t j = 0; j < w.size(); ++j) {
      std::vector<BigInt> coeffs(stride);
      for (std::size_t l = 0; l < stride; ++l) coeffs[l] = counts[j * stride + l];
      m(i, j) = IntPolynomial(std::move(coeffs));
    }
  }
  return m;
}

MixingMatrix mixing_matrix(const ColouringMatrix& m) {
  MixingMatrix r(m.world());
  for (std::size_t i = 0; i < m.dimension(); ++i)
    for (std::size_t j = 0; j < m.dimension(); ++j) r(i, j) = mixing_from_counts(m(i, j).coefficients());
  return r;
}

MixingMatrix mixing_matrix(const WebWorld& w, const MatrixOptions& opts) {
  return mixing_matrix(colouring_matrix(w, opts));
}

IntPolynomial ordered_bell_polynomial(unsigned m) {
  std::vector<BigInt> c(m + 1, 0);
  for (unsigned l = 0; l <= m; ++l) c[l] = stirling2(m, l) * factorial(l);
  return IntPolynomial(std::move(c));
}

IntPolynomial trace(const ColouringMatrix& m) {
  IntPolynomial t;
  for (std::size_t i = 0; i < m.dimension(); ++i) t += m(i, i);
  return t;
}

BigRational trace(const MixingMatrix& r) {
  BigRational t = 0;
  for (std::size_t i = 0; i < r.dimension(); ++i) t += r(i, i);
  return t;
}

IntPolynomial colouring_trace(const WebWorld& w) {
  IntPolynomial t;
  for (const auto& d : w.diagrams()) t += colouring_entry(d, d);
  return t;
}

BigRational mixing_trace(const WebWorld& w) {
  BigRational t = 0;
  for (const auto& d : w.diagrams()) t += mixing_entry(d, d);
  return t;
}

std::vector<IntPolynomial> row_sums(const ColouringMatrix& m) {
  std::vector<IntPolynomial> out(m.dimension());
  for (std::size_t i = 0; i < m.dimension(); ++i)
    for (const auto& e : m.row(i)) out[i] += e;
  return out;
}

std::vector<BigRational> row_sums(const MixingMatrix& r) {
  std::vector<BigRational> out(r.dimension(), 0);
  for (std::size_t i = 0; i < r.dimension(); ++i)
    for (const auto& e : r.row(i)) out[i] += e;
  return out;
}

std::size_t rank(std::span<const BigRational> dense, std::size_t dim) {
  if (dense.size() != dim * dim) throw WebError(ErrorKind::DimensionMismatch, "matrix is not square");
  std::vector<BigInt> a = scaled_integers(dense, common_denominator(dense));
  // Bareiss fraction-free row echelon; every division below is exact.
  std::size_t r = 0;
  BigInt prev = 1;
  for (std::size_t col = 0; col < dim && r < dim; ++col) {
    std::size_t pivot = r;
    while (pivot < dim && a[pivot * dim + col] == 0) ++pivot;
    if (pivot == dim) continue;
    if (pivot != r)
      for (std::size_t j = col; j < dim; ++j) std::swap(a[pivot * dim + j], a[r * dim + j]);
    const BigInt p = a[r * dim + col];
    for (std::size_t i = r + 1; i < dim; ++i) {
      const BigInt lead = a[i * dim + col];
      for (std::size_t j = col + 1; j < dim; ++j) {
        BigInt& cell = a[i * dim + j];
        cell = (p * cell - lead * a[r * dim + j]) / prev;
      }
      a[i * dim + col] = 0;
    }
    prev = p;
    ++r;
  }
  return r;
}

std::size_t rank(const MixingMatrix& r) {
  std::vector<BigRational> dense;
  dense.reserve(r.dimension() * r.dimension());
  for (std::size_t i = 0; i < r.dimension(); ++i)
    for (const auto& e : r.row(i)) dense.push_back(e);
  return rank(dense, r.dimension());
}

std::vector<BigRational> multiply(std::span<const BigRational> a, std::span<const BigRational> b,
                                  std::size_t dim) {
  if (a.size() != dim * dim || b.size() != dim * dim)
    throw WebError(ErrorKind::DimensionMismatch, "matrix sizes disagree");
  std::vector<BigRational> out(dim * dim, 0);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t k = 0; k < dim; ++k) {
      const BigRational& x = a[i * dim + k];
      if (x == 0) continue;
      for (std::size_t j = 0; j < dim; ++j) out[i * dim + j] += x * b[k * dim + j];
    }
  return out;
}

bool is_idempotent(std::span<const BigRational> dense, std::size_t dim) {
  if (dense.size() != dim * dim) throw WebError(ErrorKind::DimensionMismatch, "matrix is not square");
  // With S = dR over the integers, R^2 = R is equivalent to S^2 = dS.
  const BigInt scale = common_denominator(dense);
  const std::vector<BigInt> s = scaled_integers(dense, scale);
  if (scale < (BigInt(1) << 62) && fits_int64(s)) {
    if (auto fast = idempotent_int64(s, static_cast<std::int64_t>(scale), dim)) return *fast;
  }
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      BigInt acc = 0;
      for (std::size_t k = 0; k < dim; ++k) acc += s[i * dim + k] * s[k * dim + j];
      if (acc != scale * s[i * dim + j]) return false;
    }
  return true;
}

bool is_idempotent(const MixingMatrix& r) {
  std::vector<BigRational> dense;
  dense.reserve(r.dimension() * r.dimension());
  for (std::size_t i = 0; i < r.dimension(); ++i)
    for (const auto& e : r.row(i)) dense.push_back(e);
  return is_idempotent(dense, r.dimension());
}

std::string to_csv(const MixingMatrix& r) {
  std::string out;
  for (std::size_t i = 0; i < r.dimension(); ++i) {
    for (std::size_t j = 0; j < r.dimension(); ++j) {
      if (j) out += ',';
      out += to_string(r(i, j));
    }
    out += '\n';
  }
  return out;
}

std::string to_csv(const ColouringMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.dimension(); ++i) {
    for (std::size_t j = 0; j < m.dimension(); ++j) {
      if (j) out += ',';
      out += m(i, j).to_csv();
    }
    out += '\n';
  }
  return out;
}

}  // namespace webworld
