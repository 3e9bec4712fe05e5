#include "lagrel/polynomial.hpp"

#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "lagrel/error.hpp"

namespace lagrel {

namespace {

void enumerate(std::size_t n, std::uint32_t d, Exponent& cur, std::size_t pos,
               std::vector<Exponent>& out) {
  if (pos + 1 == n) {
    cur[pos] = d;
    out.push_back(cur);
    return;
  }
  for (std::uint32_t e = d + 1; e-- > 0;) {
    cur[pos] = e;
    enumerate(n, d - e, cur, pos + 1, out);
  }
}

std::vector<Exponent> monomials_of(std::size_t n, std::uint32_t d) {
  std::vector<Exponent> out;
  if (n == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  Exponent cur(n, 0);
  enumerate(n, d, cur, 0, out);
  return out;
}

std::uint32_t total(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0u); }

}  // namespace

bool GrlexLess::operator()(const Exponent& a, const Exponent& b) const {
  const auto da = total(a), db = total(b);
  if (da != db) return da < db;
  return a < b;
}

MonomialBasis::MonomialBasis(std::size_t num_vars, std::uint32_t degree)
    : num_vars_(num_vars), degree_(degree), monomials_(monomials_of(num_vars, degree)) {
  for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i], i);
  auto next = monomials_of(num_vars, degree + 1);
  std::map<Exponent, std::size_t> next_index;
  for (std::size_t i = 0; i < next.size(); ++i) next_index.emplace(next[i], i);
  up_.resize(monomials_.size() * num_vars_);
  for (std::size_t i = 0; i < monomials_.size(); ++i)
    for (std::size_t v = 0; v < num_vars_; ++v) {
      Exponent e = monomials_[i];
      ++e[v];
      up_[i * num_vars_ + v] = next_index.at(e);
    }
}

const MonomialBasis& MonomialBasis::get(std::size_t num_vars, std::uint32_t degree) {
  static std::mutex mutex;
  static std::map<std::pair<std::size_t, std::uint32_t>, std::unique_ptr<MonomialBasis>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{num_vars, degree}];
  if (!slot) slot = std::make_unique<MonomialBasis>(num_vars, degree);
  return *slot;
}

std::optional<std::size_t> MonomialBasis::index(const Exponent& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t monomial_count(std::size_t n, std::uint32_t d) {
  if (n == 0) return d == 0 ? 1 : 0;
  // C(n + d - 1, d)
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), n + d - 1, d);
  return c.get_ui();
}

// ---------------------------------------------------------------------------

Polynomial Polynomial::constant(std::size_t num_vars, const Rational& c) {
  Polynomial p(num_vars);
  p.add_term(Exponent(num_vars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t num_vars, std::size_t i) {
  Polynomial p(num_vars);
  Exponent e(num_vars, 0);
  e.at(i) = 1;
  p.add_term(e, 1);
  return p;
}

Polynomial Polynomial::linear(const Vector& coeffs) {
  Polynomial p(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    Exponent e(coeffs.size(), 0);
    e[i] = 1;
    p.add_term(e, coeffs[i]);
  }
  return p;
}

Polynomial Polynomial::from_coefficients(std::size_t num_vars, std::uint32_t degree,
                                         const Vector& coeffs) {
  const auto& basis = MonomialBasis::get(num_vars, degree);
  require_dims(coeffs.size(), basis.size(), "Polynomial::from_coefficients");
  Polynomial p(num_vars);
  for (std::size_t i = 0; i < coeffs.size(); ++i) p.add_term(basis[i], coeffs[i]);
  return p;
}

int Polynomial::degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(total(terms_.rbegin()->first));
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  return total(terms_.begin()->first) == total(terms_.rbegin()->first);
}

Rational Polynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Exponent& e, const Rational& c) {
  require_dims(e.size(), num_vars_, "Polynomial::add_term");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

std::pair<Exponent, Rational> Polynomial::leading_term() const {
  if (terms_.empty()) throw PreconditionError("leading term of the zero polynomial");
  return *terms_.rbegin();
}

Vector Polynomial::coefficients(std::uint32_t d) const {
  const auto& basis = MonomialBasis::get(num_vars_, d);
  Vector out(basis.size());
  for (const auto& [e, c] : terms_)
    if (total(e) == d) out[*basis.index(e)] = c;
  return out;
}

Rational Polynomial::evaluate(const Vector& point) const {
  require_dims(point.size(), num_vars_, "Polynomial::evaluate");
  Rational acc = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < num_vars_ && sgn(t) != 0; ++i) {
      if (e[i] == 0) continue;
      mpq_class p;
      mpz_pow_ui(p.get_num_mpz_t(), point[i].get_num_mpz_t(), e[i]);
      mpz_pow_ui(p.get_den_mpz_t(), point[i].get_den_mpz_t(), e[i]);
      t *= p;
    }
    acc += t;
  }
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  require_dims(o.num_vars_, num_vars_, "Polynomial +");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  require_dims(o.num_vars_, num_vars_, "Polynomial -");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_dims(a.num_vars_, b.num_vars_, "Polynomial *");
  Polynomial out(a.num_vars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exponent e = ea;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

Polynomial Polynomial::substitute(const Matrix& a) const {
  require_dims(a.cols(), num_vars_, "Polynomial::substitute");
  const std::size_t m = a.rows();
  std::vector<std::vector<Polynomial>> powers(num_vars_);
  for (std::size_t i = 0; i < num_vars_; ++i) powers[i].push_back(constant(m, 1));
  Polynomial out(m);
  for (const auto& [e, c] : terms_) {
    Polynomial t = constant(m, c);
    for (std::size_t i = 0; i < num_vars_; ++i) {
      if (e[i] == 0) continue;
      while (powers[i].size() <= e[i]) powers[i].push_back(powers[i].back() * linear(a.col_vector(i)));
      t = t * powers[i][e[i]];
    }
    out += t;
  }
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    os << (first ? "" : " + ") << c.get_str();
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) os << "*x" << (i + 1) << (e[i] > 1 ? "^" + std::to_string(e[i]) : "");
    first = false;
  }
  return os.str();
}

Matrix substitution_matrix(const Matrix& a, std::uint32_t degree) {
  const std::size_t m = a.rows(), n = a.cols();
  // images[k][mu]: coordinates of monomial mu (degree k, n vars) after
  // substitution, in the degree-k basis on m vars.
  std::vector<Vector> images{Vector{Rational(1)}};
  for (std::uint32_t k = 1; k <= degree; ++k) {
    const auto& xs = MonomialBasis::get(n, k);
    const auto& xs_prev = MonomialBasis::get(n, k - 1);
    const auto& ts_prev = MonomialBasis::get(m, k - 1);
    const std::size_t out_size = monomial_count(m, k);
    std::vector<Vector> next(xs.size(), Vector(out_size));
    for (std::size_t mu = 0; mu < xs.size(); ++mu) {
      Exponent e = xs[mu];
      std::size_t var = 0;
      while (e[var] == 0) ++var;
      --e[var];
      const Vector& prev = images[*xs_prev.index(e)];
      Vector& img = next[mu];
      for (std::size_t r = 0; r < prev.size(); ++r) {
        if (sgn(prev[r]) == 0) continue;
        for (std::size_t j = 0; j < m; ++j)
          if (sgn(a(j, var)) != 0) img[ts_prev.up(r, j)] += prev[r] * a(j, var);
      }
    }
    images = std::move(next);
  }
  Matrix out(monomial_count(m, degree), images.size());
  for (std::size_t c = 0; c < images.size(); ++c)
    for (std::size_t r = 0; r < images[c].size(); ++r) out(r, c) = images[c][r];
  return out;
}

}  // namespace lagrel
