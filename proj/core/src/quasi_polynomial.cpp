#include "cohomlen/quasi_polynomial.hpp"

#include <algorithm>
#include <optional>

#include "cohomlen/errors.hpp"

namespace cohomlen {

namespace {

using Poly = std::vector<Integer>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Polynomial through (x_k, y_k), by solving the Vandermonde system exactly.
std::vector<Rational> interpolate(const std::vector<std::size_t>& xs, const std::vector<Rational>& ys) {
  const std::size_t m = xs.size();
  std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m + 1));
  for (std::size_t r = 0; r < m; ++r) {
    Rational pw = 1;
    for (std::size_t c = 0; c < m; ++c) {
      a[r][c] = pw;
      pw *= static_cast<unsigned long>(xs[r]);
    }
    a[r][m] = ys[r];
  }
  for (std::size_t c = 0; c < m; ++c) {
    std::size_t piv = c;
    while (a[piv][c] == 0) ++piv;
    std::swap(a[piv], a[c]);
    for (std::size_t r = 0; r < m; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k <= m; ++k) a[r][k] -= f * a[c][k];
    }
  }
  std::vector<Rational> coef(m);
  for (std::size_t c = 0; c < m; ++c) coef[c] = a[c][m] / a[c][c];
  return coef;
}

Rational eval_poly(const std::vector<Rational>& p, std::size_t n) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * static_cast<unsigned long>(n) + *it;
  return acc;
}

std::optional<QuasiPolynomial> try_fit(std::span<const Integer> values, std::size_t period, std::size_t degree,
                                       std::size_t from) {
  const std::size_t train = (degree + 1) * period;
  const std::size_t held = std::max<std::size_t>(5, 2 * period);
  if (from + train + held > values.size()) return std::nullopt;
  QuasiPolynomial qp{period, std::vector<std::vector<Rational>>(period), from};
  for (std::size_t r = 0; r < period; ++r) {
    std::vector<std::size_t> xs;
    std::vector<Rational> ys;
    for (std::size_t n = from; n < from + train; ++n)
      if (n % period == r) {
        xs.push_back(n);
        ys.emplace_back(values[n]);
      }
    qp.polys[r] = interpolate(xs, ys);
  }
  for (std::size_t n = from + train; n < values.size(); ++n)
    if (qp.evaluate(n) != values[n]) return std::nullopt;
  return qp;
}

Poly multiply(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

Poly one_minus(std::size_t b) {
  Poly p(b + 1, 0);
  p[0] = 1;
  p[b] -= 1;
  return p;
}

// p / (1 - x^b) when exact.
std::optional<Poly> divide_one_minus(const Poly& p, std::size_t b) {
  if (p.empty()) return Poly{};
  if (p.size() <= b) return std::nullopt;
  Poly q(p.size() - b, 0);
  for (std::size_t m = 0; m < q.size(); ++m) q[m] = p[m] + (m >= b ? q[m - b] : Integer(0));
  // The remainder lives in degrees q.size() .. p.size()-1.
  for (std::size_t m = q.size(); m < p.size(); ++m) {
    const Integer rem = p[m] + (m >= b && m - b < q.size() ? q[m - b] : Integer(0));
    if (rem != 0) return std::nullopt;
  }
  return q;
}

}  // namespace

Rational QuasiPolynomial::evaluate(std::size_t n) const { return eval_poly(polys[n % period], n); }

int QuasiPolynomial::degree() const {
  int deg = -1;
  for (const auto& p : polys)
    for (std::size_t k = 0; k < p.size(); ++k)
      if (p[k] != 0) deg = std::max(deg, static_cast<int>(k));
  return deg;
}

std::size_t required_points(const FitOptions& opts) {
  return (opts.max_degree + 1) * opts.max_period + std::max<std::size_t>(5, 2 * opts.max_period);
}

QuasiPolynomial fit_quasipolynomial(std::span<const Integer> values, const FitOptions& opts) {
  if (opts.max_period == 0) throw DomainError("max_period must be positive");
  const std::size_t need = required_points(opts);
  if (values.size() < need) throw InsufficientData(need, values.size());
  const std::size_t last_from = (values.size() - 1) / 2;
  for (std::size_t period = 1; period <= opts.max_period; ++period)
    for (std::size_t degree = 0; degree <= opts.max_degree; ++degree)
      for (std::size_t from = 0; from <= last_from; ++from)
        if (auto qp = try_fit(values, period, degree, from)) return *std::move(qp);
  throw NoFitFound("no quasi-polynomial with period <= " + std::to_string(opts.max_period) + " and degree <= " +
                   std::to_string(opts.max_degree) + " reproduces the " + std::to_string(values.size()) + " values");
}

std::vector<Integer> RationalGeneratingFunction::series(std::size_t count) const {
  std::vector<Integer> s(count, 0);
  for (std::size_t k = 0; k < std::min(count, numerator.size()); ++k) s[k] = numerator[k];
  for (auto b : denominator_factors)
    for (std::size_t k = b; k < count; ++k) s[k] += s[k - b];
  return s;
}

std::string RationalGeneratingFunction::to_string() const {
  std::string num;
  for (std::size_t k = 0; k < numerator.size(); ++k) {
    if (numerator[k] == 0) continue;
    Integer c = numerator[k];
    if (!num.empty()) num += c < 0 ? " - " : " + ";
    else if (c < 0) num += "-";
    c = abs(c);
    const std::string mono = k == 0 ? "" : (k == 1 ? "x" : "x^" + std::to_string(k));
    if (c != 1 || k == 0) num += c.get_str() + (mono.empty() ? "" : "*");
    num += mono;
  }
  if (num.empty()) return "0";
  if (denominator_factors.empty()) return num;
  std::string den;
  for (std::size_t i = 0; i < denominator_factors.size();) {
    std::size_t j = i;
    while (j < denominator_factors.size() && denominator_factors[j] == denominator_factors[i]) ++j;
    const auto b = denominator_factors[i];
    den += "(1-x" + (b == 1 ? std::string() : "^" + std::to_string(b)) + ")";
    if (j - i > 1) den += "^" + std::to_string(j - i);
    i = j;
  }
  const bool sum = num.find(' ') != std::string::npos;
  const bool product = std::count(den.begin(), den.end(), '(') > 1 || den.back() != ')';
  return (sum ? "(" + num + ")" : num) + "/" + (product ? "(" + den + ")" : den);
}

RationalGeneratingFunction to_generating_function(const QuasiPolynomial& qp, std::span<const Integer> prefix) {
  if (prefix.size() < qp.valid_from)
    throw DomainError("prefix has " + std::to_string(prefix.size()) + " values, quasi-polynomial starts at n=" +
                      std::to_string(qp.valid_from));
  const std::size_t copies = static_cast<std::size_t>(std::max(qp.degree(), 0)) + 1;
  std::vector<std::size_t> factors(copies, qp.period);
  // Past valid_from + copies*period the product with the denominator vanishes;
  // check one more period block beyond that.
  const std::size_t terms = qp.valid_from + (copies + 1) * qp.period + 1;
  Poly series(terms);
  for (std::size_t n = 0; n < terms; ++n) {
    const Rational v = n < qp.valid_from ? Rational(prefix[n]) : qp.evaluate(n);
    if (v.get_den() != 1) throw ConsistencyError("quasi-polynomial value at n=" + std::to_string(n) + " is not an integer");
    series[n] = v.get_num();
  }
  Poly num = series;
  for (auto b : factors) {
    num = multiply(num, one_minus(b));
    num.resize(terms);
  }
  const std::size_t cut = qp.valid_from + copies * qp.period;
  for (std::size_t m = cut; m < terms; ++m)
    if (num[m] != 0) throw ConsistencyError("generating-function numerator does not terminate");
  num.resize(std::min(cut, num.size()));
  trim(num);
  if (num.empty()) return {};

  // Cancel (1 - x^b) entirely, or shrink it to (1 - x^c) for a divisor c of b.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < factors.size() && !changed; ++i) {
      const auto b = factors[i];
      if (auto q = divide_one_minus(num, b)) {
        num = std::move(*q);
        factors.erase(factors.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
      for (std::size_t c = 1; c < b; ++c) {
        if (b % c != 0) continue;
        if (auto q = divide_one_minus(multiply(num, one_minus(c)), b)) {
          num = std::move(*q);
          factors[i] = c;
          changed = true;
          break;
        }
      }
    }
  }
  trim(num);
  std::sort(factors.begin(), factors.end());
  return {std::move(num), std::move(factors)};
}

}  // namespace cohomlen
