#include "cubicwalls/riemannroch.hpp"

namespace cubicwalls {

namespace {

Rational binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Rational out = 1;
    for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}

void check_dimension(const ChernCharacter& ch, const Variety& x) {
    if (ch.dimension() != x.dimension())
        throw Error("DimensionMismatch", "character dimension does not match the variety");
}

}  // namespace

std::vector<Rational> tangent_chern_class(const Polarization& pol) {
    const int n = pol.dimension();
    const Rational d = pol.degree();
    std::vector<Rational> out(n + 1, Rational(0));
    for (int k = 0; k <= n; ++k) {
        // (1+H)^{n+2} times sum_j (-dH)^j
        Rational acc = 0;
        Rational power = 1;
        for (int j = 0; j <= k; ++j) {
            acc += binomial(n + 2, k - j) * power;
            power *= -d;
        }
        out[k] = acc;
    }
    return out;
}

ToddClass todd_from_chern(const std::vector<Rational>& c) {
    const int n = static_cast<int>(c.size()) - 1;
    if (n > 4) throw Error("UnsupportedDimension", "Todd polynomials are implemented up to dimension 4");
    auto at = [&](int k) { return k <= n ? c[k] : Rational(0); };
    const Rational c1 = at(1), c2 = at(2), c3 = at(3), c4 = at(4);
    std::vector<Rational> all = {
        Rational(1),
        c1 / 2,
        (c1 * c1 + c2) / 12,
        c1 * c2 / 24,
        (-c1 * c1 * c1 * c1 + 4 * c1 * c1 * c2 + 3 * c2 * c2 + c1 * c3 - c4) / 720,
    };
    all.resize(n + 1);
    return ToddClass{std::move(all)};
}

ToddClass todd_class(const Polarization& pol) { return todd_from_chern(tangent_chern_class(pol)); }

ToddClass todd_cubic_fourfold() { return todd_class(Polarization{}); }

Variety Variety::cubic_fourfold() { return hypersurface(Polarization{}); }

Variety Variety::hypersurface(const Polarization& pol) { return Variety{pol, todd_class(pol)}; }

HilbertPolynomial::HilbertPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.push_back(0);
}

bool HilbertPolynomial::operator==(const HilbertPolynomial& other) const {
    const std::size_t n = std::max(coeffs_.size(), other.coeffs_.size());
    for (std::size_t m = 0; m < n; ++m) {
        const Rational a = m < coeffs_.size() ? coeffs_[m] : Rational(0);
        const Rational b = m < other.coeffs_.size() ? other.coeffs_[m] : Rational(0);
        if (a != b) return false;
    }
    return true;
}

int HilbertPolynomial::degree() const {
    for (int m = static_cast<int>(coeffs_.size()) - 1; m >= 0; --m)
        if (coeffs_[m] != 0) return m;
    return -1;
}

Rational HilbertPolynomial::operator()(const Rational& n) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * n + *it;
    return acc;
}

std::string to_string(const HilbertPolynomial& p) {
    std::string out;
    for (int m = static_cast<int>(p.coeffs().size()) - 1; m >= 0; --m) {
        const Rational& a = p.coeffs()[m];
        if (a == 0) continue;
        std::string body;
        Rational mag = abs(a);
        if (m == 0)
            body = to_string(mag);
        else {
            if (mag != 1) body = to_string(mag) + "*";
            body += m == 1 ? "n" : "n^" + std::to_string(m);
        }
        if (out.empty())
            out = (a < 0 ? "-" : "") + body;
        else
            out += (a < 0 ? " - " : " + ") + body;
    }
    return out.empty() ? "0" : out;
}

std::string to_coefficient_list(const HilbertPolynomial& p) {
    std::string out;
    for (std::size_t m = 0; m < p.coeffs().size(); ++m) {
        if (m) out += ',';
        out += to_string(p.coeffs()[m]);
    }
    return out;
}

Rational euler_characteristic(const ChernCharacter& ch, const Variety& x) {
    check_dimension(ch, x);
    const int n = x.dimension();
    Rational acc = 0;
    for (int k = 0; k <= n; ++k) acc += ch[k] * x.todd.coeffs[n - k];
    return acc * x.polarization.degree();
}

Rational euler_pairing(const ChernCharacter& a, const ChernCharacter& b, const Variety& x) {
    return euler_characteristic(multiply(dual(a), b), x);
}

HilbertPolynomial hilbert_polynomial(const ChernCharacter& ch, const Variety& x) {
    check_dimension(ch, x);
    // chi(ch e^{nH}) = d sum_j a_j sum_m n^m/m! t_{N-j-m}
    const int n = x.dimension();
    std::vector<Rational> coeffs(n + 1, Rational(0));
    Rational factorial = 1;
    for (int m = 0; m <= n; ++m) {
        if (m) factorial *= m;
        Rational acc = 0;
        for (int j = 0; j + m <= n; ++j) acc += ch[j] * x.todd.coeffs[n - j - m];
        coeffs[m] = acc * x.polarization.degree() / factorial;
    }
    return HilbertPolynomial(std::move(coeffs));
}

HilbertPolynomial reduced_hilbert_polynomial(const ChernCharacter& ch, const Variety& x) {
    if (ch.is_zero()) throw Error("ZeroClass", "the zero class has no reduced Hilbert polynomial");
    HilbertPolynomial p = hilbert_polynomial(ch, x);
    if (ch[0] == 0) return p;
    std::vector<Rational> coeffs = p.coeffs();
    for (auto& a : coeffs) a /= ch[0];
    return HilbertPolynomial(std::move(coeffs));
}

}  // namespace cubicwalls
