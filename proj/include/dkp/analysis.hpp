#pragma once

// Reducibility, decomposition into invariant blocks, and equivalence
// certificates. Irreducibility is certified by a one-dimensional commutant
// computed over Q(i); for the semisimple DKP representations handled here
// that coincides with irreducibility over C.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dkp/errors.hpp"
#include "dkp/linalg.hpp"
#include "dkp/representation.hpp"

namespace dkp {

inline constexpr const char* kCommutantField = "Q(i)";

struct CommutantBasis {
  std::size_t rep_dim = 0;
  std::vector<Matrix> basis;
  std::size_t dimension() const { return basis.size(); }
};

/// { X : X beta^mu = beta^mu X for all mu }, canonical kernel basis.
inline CommutantBasis commutant(const Representation& rep) {
  std::vector<SylvesterPair<GaussianRational>> pairs;
  for (const auto& b : rep.betas()) pairs.push_back({b, b});
  return {rep.dim(), solve_sylvester_family(pairs)};
}

struct IrreducibilityVerdict {
  bool irreducible = false;
  CommutantBasis certificate;
  std::string field = kCommutantField;
};

inline IrreducibilityVerdict is_irreducible(const Representation& rep) {
  auto c = commutant(rep);
  const bool irreducible = c.dimension() == 1;
  return {irreducible, std::move(c)};
}

/// The basis spans a subspace that some beta^mu maps outside of itself.
struct InvariantSubspaceError : PreconditionError {
  InvariantSubspaceError(std::size_t mu_, std::size_t column_, Matrix image)
      : PreconditionError("subspace is not invariant: beta^" + std::to_string(mu_) + " maps basis vector " +
                          std::to_string(column_) + " outside the span"),
        mu(mu_),
        column(column_),
        vector(std::move(image)) {}
  std::size_t mu;
  std::size_t column;
  Matrix vector;  // beta^mu applied to the offending basis vector
};

/// Induced representation on span(basis), expressed in that basis.
inline Representation restrict(const Representation& rep, const std::vector<Matrix>& basis) {
  if (basis.empty()) throw PreconditionError("restrict: empty basis");
  const Matrix b = Matrix::from_columns(basis);
  if (b.rows() != rep.dim())
    throw ShapeError("restrict: basis vectors have length " + std::to_string(b.rows()) + ", representation dim is " +
                     std::to_string(rep.dim()));
  if (rank(b) != basis.size()) throw PreconditionError("restrict: basis vectors are linearly dependent");
  std::vector<Matrix> induced;
  for (std::size_t mu = 0; mu < rep.D(); ++mu) {
    const Matrix image = rep.upper(mu) * b;
    auto m = solve(b, image);
    if (!m) {
      for (std::size_t j = 0; j < basis.size(); ++j)
        if (!solve(b, image.column(j))) throw InvariantSubspaceError(mu, j, image.column(j));
      throw std::logic_error("restrict: column-wise solve disagrees with the block solve");
    }
    induced.push_back(std::move(*m));
  }
  return Representation(rep.metric(), std::move(induced));
}

namespace detail {

/// x^2 + y^2 = n for small n.
inline std::optional<std::pair<Integer, Integer>> two_squares(const Integer& n) {
  if (sgn(n) < 0 || n > Integer("10000000000")) return std::nullopt;
  for (Integer x = 0; x * x <= n; ++x) {
    const Integer rest = n - x * x;
    if (mpz_perfect_square_p(rest.get_mpz_t())) {
      Integer y;
      mpz_sqrt(y.get_mpz_t(), rest.get_mpz_t());
      return std::make_pair(x, y);
    }
  }
  return std::nullopt;
}

/// Some r in Q(i) with |r|^2 = q, for positive rational q.
inline std::optional<GaussianRational> norm_root(const Rational& q) {
  if (sgn(q) <= 0) return std::nullopt;
  // q = a/b = (a b)/b^2
  const Integer ab = q.get_num() * q.get_den();
  const auto xy = two_squares(ab);
  if (!xy) return std::nullopt;
  Rational re(xy->first, q.get_den()), im(xy->second, q.get_den());
  re.canonicalize();
  im.canonicalize();
  return GaussianRational{re, im};
}

inline GaussianRational inner(const Matrix& u, const Matrix& v) {
  GaussianRational acc;
  for (std::size_t k = 0; k < u.rows(); ++k)
    if (!u(k, 0).is_zero() && !v(k, 0).is_zero()) acc += conj(u(k, 0)) * v(k, 0);
  return acc;
}

/// Gram-Schmidt over Q(i), then an attempt to equalize the column norms with
/// Gaussian-rational rescaling (possible when the norm ratios are sums of two
/// rational squares). Returns the new basis and whether B^dagger B is scalar.
inline std::pair<std::vector<Matrix>, bool> orthogonalize(const std::vector<Matrix>& basis) {
  std::vector<Matrix> ortho;
  std::vector<Rational> norms;
  for (const auto& b : basis) {
    Matrix v = b;
    for (std::size_t k = 0; k < ortho.size(); ++k) {
      const GaussianRational c = inner(ortho[k], b) / GaussianRational(norms[k]);
      if (!c.is_zero()) v -= c * ortho[k];
    }
    norms.push_back(inner(v, v).re);
    ortho.push_back(std::move(v));
  }
  std::vector<Rational> targets{Rational(1)};
  targets.insert(targets.end(), norms.begin(), norms.end());
  for (const auto& target : targets) {
    std::vector<Matrix> scaled;
    for (std::size_t k = 0; k < ortho.size(); ++k) {
      const auto r = norm_root(Rational(target / norms[k]));
      if (!r) break;
      scaled.push_back(*r * ortho[k]);
    }
    if (scaled.size() == ortho.size()) return {std::move(scaled), true};
  }
  const bool single = ortho.size() <= 1;
  return {std::move(ortho), single};
}

inline std::vector<Integer> divisors(Integer n) {
  if (sgn(n) < 0) n = -n;
  std::vector<Integer> out;
  if (n == 0 || n > Integer("1000000000000")) return out;
  for (Integer k = 1; k * k <= n; ++k)
    if (n % k == 0) {
      out.push_back(k);
      if (k * k != n) out.push_back(Integer(n / k));
    }
  return out;
}

inline GaussianRational evaluate(const std::vector<GaussianRational>& poly, const GaussianRational& x) {
  GaussianRational acc;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * x + *it;
  return acc;
}

/// Divide by (x - r), assuming r is a root.
inline std::vector<GaussianRational> deflate(const std::vector<GaussianRational>& poly, const GaussianRational& r) {
  const std::size_t d = poly.size() - 1;
  std::vector<GaussianRational> out(d);
  out[d - 1] = poly[d];
  for (std::size_t k = d - 1; k > 0; --k) out[k - 1] = poly[k] + r * out[k];
  return out;
}

/// Roots in Q(i) found by the rational root test (real coefficients) and the
/// quadratic formula for a remaining factor of degree <= 2; repeated roots
/// are listed once. Roots of irreducible factors of degree > 2 are missed.
inline std::vector<GaussianRational> roots_in_qi(std::vector<GaussianRational> poly) {
  std::vector<GaussianRational> roots;
  auto add = [&](const GaussianRational& r) {
    if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
  };
  while (poly.size() > 1 && poly.front().is_zero()) {
    add(GaussianRational());
    poly.erase(poly.begin());
  }
  const bool real = std::all_of(poly.begin(), poly.end(), [](const auto& c) { return c.is_real(); });
  if (real && poly.size() > 3) {
    Integer lcm = 1;
    for (const auto& c : poly) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.re.get_den_mpz_t());
    const Integer lead = Integer(poly.back().re * lcm), constant = Integer(poly.front().re * lcm);
    for (const auto& u : divisors(constant))
      for (const auto& v : divisors(lead))
        for (int s : {1, -1}) {
          Rational cand(Integer(s * u), v);
          cand.canonicalize();
          const GaussianRational r(cand);
          while (poly.size() > 1 && evaluate(poly, r).is_zero()) {
            add(r);
            poly = deflate(poly, r);
          }
        }
  }
  if (poly.size() == 2) {
    add(-poly[0] / poly[1]);
  } else if (poly.size() == 3) {
    const auto& a = poly[2];
    const auto& b = poly[1];
    const auto& c = poly[0];
    if (const auto root = gaussian_sqrt(b * b - GaussianRational(4) * a * c)) {
      add((-b + *root) / (GaussianRational(2) * a));
      add((-b - *root) / (GaussianRational(2) * a));
    }
  }
  return roots;
}

/// Fitting decomposition of y: V = ker y^n (+) im y^n. Both summands are
/// invariant when y commutes with the action. nullopt if one of them is zero.
inline std::optional<std::vector<std::vector<Matrix>>> fitting_split(const Matrix& y) {
  const Matrix yn = power(y, y.rows());
  auto kernel = null_space(yn);
  if (kernel.empty() || kernel.size() == y.rows()) return std::nullopt;
  return std::vector<std::vector<Matrix>>{std::move(kernel), column_span_basis(yn.columns())};
}

/// A proper invariant splitting from a commutant element x: x - lambda for a
/// root lambda in Q(i), or, when x - lambda is nilpotent, its products with
/// the commutant basis (in a semisimple commutant some product is not).
inline std::optional<std::vector<std::vector<Matrix>>> commutant_split(const Matrix& x, const std::vector<Matrix>& basis) {
  const auto poly = minimal_polynomial(x);
  if (poly.size() < 3) return std::nullopt;
  const auto roots = roots_in_qi(poly);
  const Matrix id = Matrix::identity(x.rows());
  for (const auto& lambda : roots)
    if (auto spaces = fitting_split(x - lambda * id)) return spaces;
  if (roots.empty()) return std::nullopt;
  const Matrix nil = x - roots.front() * id;
  for (const auto& b : basis) {
    if (auto spaces = fitting_split(nil * b)) return spaces;
    if (auto spaces = fitting_split(b * nil)) return spaces;
  }
  return std::nullopt;
}

/// Smallest subspace containing the seeds and closed under every beta^mu.
inline std::vector<Matrix> spin(const Representation& rep, const std::vector<Matrix>& seeds) {
  auto span = column_span_basis(seeds);
  for (std::size_t previous = 0; previous != span.size();) {
    previous = span.size();
    std::vector<Matrix> grown = span;
    for (const auto& b : rep.betas())
      for (const auto& v : span) grown.push_back(b * v);
    span = column_span_basis(grown);
  }
  return span;
}

/// Commutant idempotent with image span(u): X = sum c_k C_k with X u = u and
/// y^T X = 0 for every y annihilating u. Its kernel is an invariant complement.
inline std::optional<std::vector<Matrix>> invariant_complement(const std::vector<Matrix>& u,
                                                              const std::vector<Matrix>& commutant_basis) {
  const Matrix ub = Matrix::from_columns(u);
  const Matrix annihilator = Matrix::from_columns(null_space(ub.transpose()), ub.rows()).transpose();
  std::vector<Matrix> columns;
  for (const auto& c : commutant_basis) columns.push_back(vstack<GaussianRational>({vectorize(c * ub), vectorize(annihilator * c)}));
  const Matrix rhs = vstack<GaussianRational>({vectorize(ub), Matrix(annihilator.rows() * ub.rows(), 1)});
  const auto coeffs = solve(Matrix::from_columns(columns), rhs);
  if (!coeffs) return std::nullopt;
  Matrix x(ub.rows(), ub.rows());
  for (std::size_t k = 0; k < commutant_basis.size(); ++k) x += (*coeffs)(k, 0) * commutant_basis[k];
  auto complement = null_space(x);
  if (complement.size() + u.size() != ub.rows()) return std::nullopt;
  return complement;
}

/// Spins up kernel vectors of beta^mu and beta^mu beta^nu until one generates
/// a proper invariant subspace that has an invariant complement.
inline std::optional<std::vector<std::vector<Matrix>>> spin_split(const Representation& rep,
                                                                  const std::vector<Matrix>& commutant_basis) {
  std::vector<Matrix> words = rep.betas();
  for (const auto& a : rep.betas())
    for (const auto& b : rep.betas()) words.push_back(a * b);
  for (const auto& w : words)
    for (const auto& v : null_space(w)) {
      auto u = spin(rep, {v});
      if (u.size() == rep.dim()) continue;
      if (auto complement = invariant_complement(u, commutant_basis))
        return std::vector<std::vector<Matrix>>{std::move(u), std::move(*complement)};
    }
  return std::nullopt;
}

/// Visits basis elements, then small integer combinations with coefficients
/// in [-3, 3] (full box for up to 4 basis elements, pairs beyond that), in a
/// fixed order. Stops when visit returns true.
inline void for_each_candidate(const std::vector<Matrix>& basis, const std::function<bool(const Matrix&)>& visit) {
  const std::size_t k = basis.size();
  for (const auto& b : basis)
    if (visit(b)) return;
  if (k < 2) return;
  auto combine = [&](const std::vector<int>& coeffs) {
    Matrix m(basis.front().rows(), basis.front().cols());
    for (std::size_t j = 0; j < k; ++j)
      if (coeffs[j] != 0) m += GaussianRational(long{coeffs[j]}) * basis[j];
    return m;
  };
  if (k <= 4) {
    std::vector<int> coeffs(k, -3);
    while (true) {
      const auto nonzero = std::count_if(coeffs.begin(), coeffs.end(), [](int c) { return c != 0; });
      if (nonzero >= 2 && visit(combine(coeffs))) return;
      std::size_t pos = 0;
      while (pos < k && coeffs[pos] == 3) coeffs[pos++] = -3;
      if (pos == k) return;
      ++coeffs[pos];
    }
  }
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b)
      for (int ca = -3; ca <= 3; ++ca)
        for (int cb = -3; cb <= 3; ++cb) {
          if (ca == 0 || cb == 0) continue;
          std::vector<int> coeffs(k, 0);
          coeffs[a] = ca;
          coeffs[b] = cb;
          if (visit(combine(coeffs))) return;
        }
}

}  // namespace detail

struct DecompositionBlock {
  std::vector<Matrix> basis;  // columns in the original coordinates
  Representation subrep;
  bool irreducible = false;
  std::size_t commutant_dim = 0;
  bool trivial = false;            // every beta acts as zero
  bool scalar_gram = false;        // B^dagger B is a multiple of the identity
};

struct DecompositionResult {
  std::vector<DecompositionBlock> blocks;
  Matrix change_of_basis;  // columns = concatenated block bases
  bool complete = false;   // every block certified irreducible
  std::vector<std::string> notes;

  std::vector<std::size_t> block_dims() const {
    std::vector<std::size_t> dims;
    for (const auto& b : blocks) dims.push_back(b.basis.size());
    return dims;
  }
};

/// Splits the carrier space into invariant blocks:
///  1. the common kernel of all beta^mu (trivial blocks, one per line);
///  2. the complementary subspace generated by the images of the beta^mu,
///     closed under the action;
///  3. each remaining part is split recursively: by the Fitting decomposition
///     of a singular, non-nilpotent commutant element (x - lambda for a root
///     lambda in Q(i)); failing that, by spinning up a kernel vector of a
///     beta word and cutting it off with a commutant idempotent; failing
///     that, by searching small integer combinations of the commutant basis.
/// Block bases are orthogonalized (and norm-equalized when possible) so the
/// induced matrices keep the adjoint structure of the input. A part that
/// cannot be split further while its commutant is larger than the scalars is
/// returned as is and the result is flagged incomplete.
inline DecompositionResult decompose(const Representation& rep) {
  if (!verify_dkp(rep).passed) throw PreconditionError("decompose: input is not a DKP representation");
  const std::size_t n = rep.dim();
  DecompositionResult result;
  std::vector<std::vector<Matrix>> parts;

  const auto common_kernel = null_space(vstack(rep.betas()));
  std::vector<Matrix> images;
  for (const auto& b : rep.betas())
    for (auto& c : b.columns()) images.push_back(std::move(c));
  const auto generated = detail::spin(rep, images);

  std::vector<Matrix> both = common_kernel;
  both.insert(both.end(), generated.begin(), generated.end());
  const bool direct = both.size() == n && rank(Matrix::from_columns(both)) == n;
  if (direct) {
    for (const auto& v : common_kernel) parts.push_back({v});
    if (!generated.empty()) parts.push_back(generated);
  } else {
    result.notes.push_back("common kernel and generated subspace are not complementary; splitting the whole space");
    parts.push_back(column_span_basis(Matrix::identity(n).columns()));
  }

  std::vector<DecompositionBlock> leaves;
  std::function<void(const std::vector<Matrix>&)> split = [&](const std::vector<Matrix>& basis) {
    const Representation sub = restrict(rep, basis);
    const auto comm = commutant(sub);
    bool trivial = true;
    for (const auto& b : sub.betas()) trivial = trivial && b.is_zero();
    if (comm.dimension() == 1) {
      leaves.push_back({basis, sub, true, 1, trivial, false});
      return;
    }
    const Matrix basis_matrix = Matrix::from_columns(basis);
    std::optional<std::vector<std::vector<Matrix>>> spaces;
    for (const auto& x : comm.basis)
      if ((spaces = detail::commutant_split(x, comm.basis))) break;
    if (!spaces) spaces = detail::spin_split(sub, comm.basis);
    if (!spaces)
      detail::for_each_candidate(comm.basis, [&](const Matrix& x) {
        spaces = detail::commutant_split(x, comm.basis);
        return spaces.has_value();
      });
    if (!spaces) {
      result.notes.push_back("no splitting commutant element found for a block of dim " + std::to_string(basis.size()) +
                             " (commutant dim " + std::to_string(comm.dimension()) + ")");
      leaves.push_back({basis, sub, false, comm.dimension(), trivial, false});
      return;
    }
    for (const auto& space : *spaces) {
      std::vector<Matrix> lifted;
      for (const auto& v : space) lifted.push_back(basis_matrix * v);
      split(lifted);
    }
  };
  for (const auto& part : parts) split(part);

  std::stable_sort(leaves.begin(), leaves.end(),
                   [](const auto& a, const auto& b) { return a.basis.size() < b.basis.size(); });
  result.complete = true;
  std::vector<Matrix> all_columns;
  for (auto& leaf : leaves) {
    auto [ortho, scalar_gram] = detail::orthogonalize(leaf.basis);
    leaf.basis = std::move(ortho);
    leaf.scalar_gram = scalar_gram;
    leaf.subrep = restrict(rep, leaf.basis);
    result.complete = result.complete && leaf.irreducible;
    all_columns.insert(all_columns.end(), leaf.basis.begin(), leaf.basis.end());
    result.blocks.push_back(std::move(leaf));
  }
  result.change_of_basis = Matrix::from_columns(all_columns);

  std::vector<Representation> subreps;
  for (const auto& b : result.blocks) subreps.push_back(b.subrep);
  if (conjugate(rep, result.change_of_basis) != direct_sum(subreps))
    throw std::logic_error("decompose: reassembled blocks do not reproduce the input");
  return result;
}

enum class UnitarityStatus {
  unchecked,
  witness,             // W = S / sqrt(lambda) is exact and attached
  certified,           // S^dagger S = lambda I with lambda > 0 but sqrt(lambda) irrational
  not_scalar,          // S^dagger S is not a positive multiple of I
};

inline const char* to_string(UnitarityStatus s) {
  switch (s) {
    case UnitarityStatus::unchecked: return "unchecked";
    case UnitarityStatus::witness: return "unitary witness";
    case UnitarityStatus::certified: return "unitarizable (S^dagger S = lambda I, lambda > 0)";
    case UnitarityStatus::not_scalar: return "not unitarizable by this method";
  }
  return "unchecked";
}

struct IntertwinerCertificate {
  Matrix S;  // S beta_A^mu = beta_B^mu S
  std::optional<Matrix> unitary_witness;
  std::optional<Rational> lambda;  // S^dagger S = lambda I
  UnitarityStatus unitarity = UnitarityStatus::unchecked;
  std::size_t solution_space_dim = 0;
};

inline bool intertwines(const Matrix& s, const Representation& a, const Representation& b) {
  if (s.rows() != b.dim() || s.cols() != a.dim()) return false;
  for (std::size_t mu = 0; mu < a.D(); ++mu)
    if (s * a.upper(mu) != b.upper(mu) * s) return false;
  return true;
}

/// An invertible S with S beta_A^mu = beta_B^mu S, or nullopt when the
/// intertwiner space holds no invertible element reachable by the search
/// (basis elements, then small integer combinations).
inline std::optional<IntertwinerCertificate> intertwiner(const Representation& a, const Representation& b) {
  if (a.metric() != b.metric()) throw PreconditionError("intertwiner: metric mismatch between representations");
  if (a.dim() != b.dim()) return std::nullopt;
  std::vector<SylvesterPair<GaussianRational>> pairs;
  for (std::size_t mu = 0; mu < a.D(); ++mu) pairs.push_back({a.upper(mu), b.upper(mu)});
  const auto space = solve_sylvester_family(pairs);
  if (space.empty()) return std::nullopt;
  std::optional<Matrix> found;
  detail::for_each_candidate(space, [&](const Matrix& s) {
    if (!is_invertible(s)) return false;
    found = s;
    return true;
  });
  if (!found) return std::nullopt;
  IntertwinerCertificate cert;
  cert.S = std::move(*found);
  cert.solution_space_dim = space.size();
  return cert;
}

/// Checks whether S^dagger S = lambda I for positive rational lambda and, if
/// sqrt(lambda) is rational, attaches W = S / sqrt(lambda).
inline IntertwinerCertificate unitarize(IntertwinerCertificate cert, const Representation& a, const Representation& b) {
  if (!is_invertible(cert.S) || !intertwines(cert.S, a, b))
    throw PreconditionError("unitarize: S is not an invertible intertwiner between the given representations");
  const Matrix gram = conj_transpose(cert.S) * cert.S;
  const GaussianRational lambda = gram(0, 0);
  if (!lambda.is_real() || sgn(lambda.re) <= 0 || gram != lambda * Matrix::identity(gram.rows())) {
    cert.unitarity = UnitarityStatus::not_scalar;
    cert.lambda.reset();
    cert.unitary_witness.reset();
    return cert;
  }
  cert.lambda = lambda.re;
  if (const auto root = rational_sqrt(lambda.re)) {
    Matrix w = GaussianRational(Rational(1 / *root)) * cert.S;
    if (conj_transpose(w) * w != Matrix::identity(w.rows()) || !intertwines(w, a, b))
      throw std::logic_error("unitarize: rescaled witness failed verification");
    cert.unitary_witness = std::move(w);
    cert.unitarity = UnitarityStatus::witness;
  } else {
    cert.unitarity = UnitarityStatus::certified;
  }
  return cert;
}

}  // namespace dkp
