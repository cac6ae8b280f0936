#include "jsyz/fixtures.hpp"

#include <algorithm>
#include <charconv>

#include "jsyz/parse.hpp"

namespace jsyz {

namespace {

using Q = Rational;

LineArrangement<Q> rational_lines(const std::vector<std::array<long, 3>>& covs) {
  std::vector<ProjLine<Q>> lines;
  for (const auto& c : covs) lines.push_back(make_line<Q>({Q(c[0]), Q(c[1]), Q(c[2])}));
  return LineArrangement<Q>(RationalField{}, lines);
}

UniPoly<Q> uni(const std::vector<Q>& c) { return UniPoly<Q>(RationalField{}, c); }

std::string power(const std::string& v, int k) { return v + "^" + std::to_string(k); }

// (x^k - y^k)(y^k - z^k)(x^k - z^k) as the members q1, q2 and q1 + q2.
PencilProductSpec<Q> fermat_product(int k) {
  PencilSpec<Q> P{parse_q(power("x", k) + "-" + power("y", k)), parse_q(power("y", k) + "-" + power("z", k))};
  return PencilProductSpec<Q>{P, {MemberParam<Q>::value(Q(1))}, std::nullopt};
}

// lines x - w y, y - w z, x - w z over w^k = 1, plus the coordinate lines if asked
LineArrangement<ModP> fermat_lines(int k, bool with_axes) {
  const std::uint64_t p = prime_one_mod(static_cast<std::uint64_t>(k));
  const PrimeField F(p);
  const ModP zeta = primitive_root_of_unity(static_cast<std::uint64_t>(k), p);
  const ModP one = F.one(), zero = F.zero();
  std::vector<ProjLine<ModP>> lines;
  ModP w = one;
  for (int i = 0; i < k; ++i, w *= zeta) {
    lines.push_back(make_line<ModP>({one, -w, zero}));
    lines.push_back(make_line<ModP>({zero, one, -w}));
    lines.push_back(make_line<ModP>({one, zero, -w}));
  }
  if (with_axes) {
    lines.push_back(make_line<ModP>({one, zero, zero}));
    lines.push_back(make_line<ModP>({zero, one, zero}));
    lines.push_back(make_line<ModP>({zero, zero, one}));
  }
  return LineArrangement<ModP>(F, lines);
}

int parameter_of(const std::string& spec, const std::string& base, int fallback, int lo, int hi) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) return fallback;
  const std::string text = spec.substr(colon + 1);
  int v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw InputError("fixture parameter '" + text + "' is not an integer");
  if (v < lo || v > hi)
    throw InputError("fixture " + base + " takes a parameter in [" + std::to_string(lo) + ", " + std::to_string(hi) +
                     "], got " + std::to_string(v));
  return v;
}

}  // namespace

std::uint64_t prime_one_mod(std::uint64_t k) {
  if (k == 0) throw std::invalid_argument("modulus must be positive");
  std::uint64_t p = (std::uint64_t{1} << 30) / k * k + 1;
  while (p <= (std::uint64_t{1} << 30) || !is_prime(p)) p += k;
  return p;
}

ModP primitive_root_of_unity(std::uint64_t k, std::uint64_t p) {
  if (k == 0 || (p - 1) % k != 0) throw std::invalid_argument("k does not divide p - 1");
  std::vector<std::uint64_t> prime_factors;
  for (std::uint64_t n = k, q = 2; n > 1; ++q) {
    if (q * q > n) q = n;
    if (n % q == 0) {
      prime_factors.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  for (std::uint64_t a = 2; a < p; ++a) {
    const std::uint64_t w = powmod(a, (p - 1) / k, p);
    bool exact = true;
    for (auto q : prime_factors) exact = exact && powmod(w, k / q, p) != 1;
    if (exact) return ModP(w, p);
  }
  throw std::invalid_argument("no root of unity of the requested order");
}

std::vector<std::string> fixture_names() {
  return {"ex1",   "ex2a",       "ex2b",     "ex3",          "ex5",          "ex12i:3", "ex12i-ext:3", "ex12ii",
          "hesse", "hesse4",     "fermat:3", "ex14i:3",      "ex14ii:5",     "ex14ii-primed:5"};
}

Fixture fixture(const std::string& spec) {
  const std::string base = spec.substr(0, spec.find(':'));
  static const std::vector<std::string> parametrized{"ex12i", "fermat", "ex12i-ext", "ex14i", "ex14ii", "ex14ii-primed"};
  if (spec.find(':') != std::string::npos &&
      std::find(parametrized.begin(), parametrized.end(), base) == parametrized.end())
    throw InputError("fixture " + base + " takes no parameter");
  Fixture fx;
  fx.name = spec;
  if (base == "ex1") {
    fx.description = "xyz(x-z)(x+z)(x-y)";
    fx.arrangement = rational_lines({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 0, -1}, {1, 0, 1}, {1, -1, 0}});
  } else if (base == "ex2a") {
    fx.description = "xyz(x-z)(x+z)(x-y)(x+y)(y-z)";
    fx.arrangement = rational_lines(
        {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 0, -1}, {1, 0, 1}, {1, -1, 0}, {1, 1, 0}, {0, 1, -1}});
  } else if (base == "ex2b") {
    fx.description = "xyz(x-z)(x+z)(x-y)(x+y)(y-z)(y+z)";
    fx.arrangement = rational_lines(
        {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 0, -1}, {1, 0, 1}, {1, -1, 0}, {1, 1, 0}, {0, 1, -1}, {0, 1, 1}});
  } else if (base == "ex3") {
    fx.description = "the 19 lines xyz, x+-z, x+-y, y+-z, x+-2y, x+-2z, y+-2z, x+y-z, x-y+z, -x+y+z, x+y+z";
    fx.arrangement = rational_lines({{1, 0, 0},  {0, 1, 0},  {0, 0, 1},  {1, 0, -1}, {1, 0, 1},
                                     {1, -1, 0}, {1, 1, 0},  {0, 1, -1}, {0, 1, 1},  {1, 2, 0},
                                     {1, -2, 0}, {1, 0, 2},  {1, 0, -2}, {0, 1, -2}, {0, 1, 2},
                                     {1, 1, -1}, {1, -1, 1}, {-1, 1, 1}, {1, 1, 1}});
  } else if (base == "ex5" || base == "ex12i" || base == "fermat") {
    const int k = base == "ex5" ? 3 : parameter_of(spec, base, 3, 2, 12);
    fx.description = "(x^k-y^k)(y^k-z^k)(x^k-z^k) with k=" + std::to_string(k);
    fx.product = fermat_product(k);
    fx.pencil = fx.product->pencil;
    fx.split_arrangement = fermat_lines(k, false);
  } else if (base == "ex12i-ext") {
    const int k = parameter_of(spec, base, 3, 2, 12);
    fx.description = "xyz(x^k-y^k)(y^k-z^k)(x^k-z^k) with k=" + std::to_string(k);
    fx.f = parse_q("x*y*z") * build_product(fermat_product(k));
    fx.split_arrangement = fermat_lines(k, true);
  } else if (base == "ex12ii") {
    fx.description = "xyz(x^3+y^3+z^3)((x^3+y^3+z^3)^3-27x^3y^3z^3): the Hesse arrangement plus a smooth member";
    PencilSpec<Q> P{parse_q("x^3+y^3+z^3"), parse_q("x*y*z")};
    fx.product = PencilProductSpec<Q>{P, {MemberParam<Q>::roots(uni({27, 0, 0, 1}))}, std::nullopt};
    fx.pencil = P;
  } else if (base == "hesse") {
    fx.description = "the Hesse pencil x^3+y^3+z^3, xyz and its arrangement of four singular members";
    fx.pencil = PencilSpec<Q>{parse_q("x^3+y^3+z^3"), parse_q("x*y*z")};
    fx.f = parse_q("x*y*z*((x^3+y^3+z^3)^3-27*x^3*y^3*z^3)");
  } else if (base == "hesse4") {
    fx.description = "one smooth and three singular members of the Hesse pencil";
    PencilSpec<Q> P{parse_q("x^3+y^3+z^3"), parse_q("x^3+y^3+z^3-3*x*y*z")};
    fx.product = PencilProductSpec<Q>{P, {MemberParam<Q>::roots(uni({1, 3, 3}))}, std::nullopt};
    fx.pencil = P;
  } else if (base == "ex14i") {
    const int k = parameter_of(spec, base, 3, 2, 12);
    fx.description = "(x^k-y^k)(y^k-z^k)(x^k-z^k)x with k=" + std::to_string(k);
    fx.product = fermat_product(k);
    fx.product->h = parse_q("x");
    fx.pencil = fx.product->pencil;
  } else if (base == "ex14ii") {
    const int m = parameter_of(spec, base, 5, 3, 40);
    fx.description = "x(x^(m-1)-y^(m-1))(xy+z^2) with m=" + std::to_string(m);
    // members x, x - y and x + t(x - y) for t^(m-1) = (1 + t)^(m-1)
    std::vector<Q> phi(m - 1, Q(0));
    Integer binom = 1;
    for (int j = 0; j < m - 1; ++j) {
      phi[j] = -Q(binom);
      binom = binom * (m - 1 - j) / (j + 1);
    }
    PencilSpec<Q> P{parse_q("x"), parse_q("x-y")};
    fx.product = PencilProductSpec<Q>{P, {MemberParam<Q>::roots(uni(phi))}, parse_q("x*y+z^2")};
    fx.pencil = P;
  } else if (base == "ex14ii-primed") {
    const int m = parameter_of(spec, base, 5, 3, 40);
    fx.description = "xy(x^(m-2)-y^(m-2))(xy+z^2) with m=" + std::to_string(m);
    // members x + s y with (-s)^(m-2) = 1
    std::vector<Q> phi(m - 1, Q(0));
    phi[0] = -1;
    phi[m - 2] = (m - 2) % 2 ? -1 : 1;
    PencilSpec<Q> P{parse_q("x"), parse_q("y")};
    fx.product = PencilProductSpec<Q>{P, {MemberParam<Q>::roots(uni(phi))}, parse_q("x*y+z^2")};
    fx.pencil = P;
  } else {
    std::string known;
    for (const auto& n : fixture_names()) known += (known.empty() ? "" : ", ") + n;
    throw InputError("unknown fixture '" + spec + "'; known: " + known);
  }
  if (fx.arrangement) fx.f = fx.arrangement->polynomial();
  if (fx.product) fx.f = build_product(*fx.product);
  return fx;
}

}  // namespace jsyz
