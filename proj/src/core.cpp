#include "cubicwalls/core.hpp"

namespace cubicwalls {

Polarization::Polarization(int dimension, int degree) : dimension_(dimension), degree_(degree) {
    if (dimension < 1) throw Error("InvalidPolarization", "dimension must be positive");
    if (degree < 1) throw Error("InvalidPolarization", "degree must be positive");
}

ChernCharacter::ChernCharacter(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw Error("DimensionMismatch", "a Chern character needs at least ch_0");
}

ChernCharacter::ChernCharacter(std::initializer_list<Rational> coeffs)
    : ChernCharacter(std::vector<Rational>(coeffs)) {}

ChernCharacter ChernCharacter::zero(int dimension) {
    return ChernCharacter(std::vector<Rational>(dimension + 1, Rational(0)));
}

ChernCharacter ChernCharacter::unit(int dimension) {
    auto ch = zero(dimension);
    ch.coeffs_[0] = 1;
    return ch;
}

ChernCharacter ChernCharacter::line_bundle(int dimension, const Integer& k) {
    return tensor_line_bundle(unit(dimension), k);
}

bool ChernCharacter::is_zero() const {
    for (const auto& a : coeffs_)
        if (a != 0) return false;
    return true;
}

static void require_same_dimension(const ChernCharacter& a, const ChernCharacter& b) {
    if (a.dimension() != b.dimension())
        throw Error("DimensionMismatch", "Chern characters of different dimensions");
}

ChernCharacter& ChernCharacter::operator+=(const ChernCharacter& other) {
    require_same_dimension(*this, other);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
    return *this;
}

ChernCharacter& ChernCharacter::operator-=(const ChernCharacter& other) {
    require_same_dimension(*this, other);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
    return *this;
}

ChernCharacter& ChernCharacter::operator*=(const Rational& scalar) {
    for (auto& a : coeffs_) a *= scalar;
    return *this;
}

ChernCharacter ChernCharacter::operator-() const {
    ChernCharacter out = *this;
    out *= Rational(-1);
    return out;
}

TruncatedClass::TruncatedClass(Integer r, Integer c, Rational s)
    : r_(std::move(r)), c_(std::move(c)), s_(std::move(s)) {
    if (!is_integer(2 * s_)) throw Error("NotInLattice", "ch_2 coefficient " + to_string(s_) + " is not in (1/2)Z");
}

bool TruncatedClass::is_object_class() const { return is_integer(s_ - Rational(c_, 2)); }

TruncatedClass& TruncatedClass::operator+=(const TruncatedClass& other) {
    r_ += other.r_;
    c_ += other.c_;
    s_ += other.s_;
    return *this;
}

TruncatedClass& TruncatedClass::operator-=(const TruncatedClass& other) {
    r_ -= other.r_;
    c_ -= other.c_;
    s_ -= other.s_;
    return *this;
}

std::strong_ordering TruncatedClass::operator<=>(const TruncatedClass& other) const {
    if (r_ != other.r_) return r_ < other.r_ ? std::strong_ordering::less : std::strong_ordering::greater;
    if (c_ != other.c_) return c_ < other.c_ ? std::strong_ordering::less : std::strong_ordering::greater;
    if (s_ != other.s_) return s_ < other.s_ ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

ChernCharacter twist(const ChernCharacter& ch, const Rational& beta) {
    const int n = ch.dimension();
    // powers[j] = (-beta)^j / j!
    std::vector<Rational> powers(n + 1);
    powers[0] = 1;
    for (int j = 1; j <= n; ++j) powers[j] = powers[j - 1] * (-beta) / j;
    std::vector<Rational> out(n + 1, Rational(0));
    for (int k = 0; k <= n; ++k)
        for (int j = 0; j <= k; ++j) out[k] += ch[j] * powers[k - j];
    return ChernCharacter(std::move(out));
}

ChernCharacter tensor_line_bundle(const ChernCharacter& ch, const Integer& k) {
    return twist(ch, Rational(-k));
}

ChernCharacter dual(const ChernCharacter& ch) {
    std::vector<Rational> out(ch.coeffs().begin(), ch.coeffs().end());
    for (std::size_t k = 1; k < out.size(); k += 2) out[k] = -out[k];
    return ChernCharacter(std::move(out));
}

ChernCharacter multiply(const ChernCharacter& a, const ChernCharacter& b) {
    require_same_dimension(a, b);
    const int n = a.dimension();
    std::vector<Rational> out(n + 1, Rational(0));
    for (int i = 0; i <= n; ++i)
        for (int j = 0; i + j <= n; ++j) out[i + j] += a[i] * b[j];
    return ChernCharacter(std::move(out));
}

Rational integrate(const ChernCharacter& ch, const Polarization& pol) {
    if (ch.dimension() != pol.dimension())
        throw Error("DimensionMismatch", "character dimension does not match the polarization");
    return Rational(pol.degree()) * ch[pol.dimension()];
}

TruncatedClass truncate(const ChernCharacter& ch) {
    if (ch.dimension() < 2) throw Error("DimensionMismatch", "truncation needs ch_0, ch_1 and ch_2");
    if (!is_integer(ch[0])) throw Error("NotInLattice", "ch_0 = " + to_string(ch[0]) + " is not an integer");
    if (!is_integer(ch[1])) throw Error("NotInLattice", "ch_1 = " + to_string(ch[1]) + " is not an integer");
    if (!is_integer(2 * ch[2])) throw Error("NotInLattice", "ch_2 = " + to_string(ch[2]) + " is not in (1/2)Z");
    return {numerator(ch[0]), numerator(ch[1]), ch[2]};
}

std::vector<Rational> to_line_point_basis(const ChernCharacter& ch, const Polarization& pol) {
    if (ch.dimension() != 4 || pol.dimension() != 4)
        throw Error("DimensionMismatch", "the (l, pt) basis exists only in dimension four");
    std::vector<Rational> out(ch.coeffs().begin(), ch.coeffs().end());
    out[3] *= pol.degree();
    out[4] *= pol.degree();
    return out;
}

ChernCharacter from_line_point_basis(std::span<const Rational> coeffs, const Polarization& pol) {
    if (coeffs.size() != 5 || pol.dimension() != 4)
        throw Error("DimensionMismatch", "the (l, pt) basis exists only in dimension four");
    std::vector<Rational> out(coeffs.begin(), coeffs.end());
    out[3] /= pol.degree();
    out[4] /= pol.degree();
    return ChernCharacter(std::move(out));
}

std::string to_string(const ChernCharacter& ch) {
    std::string out;
    for (std::size_t k = 0; k < ch.coeffs().size(); ++k) {
        if (k) out += ',';
        out += to_string(ch[k]);
    }
    return out;
}

std::string to_string(const TruncatedClass& w) {
    return to_string(w.r()) + "," + to_string(w.c()) + "," + to_string(w.s());
}

std::vector<std::pair<std::string_view, std::size_t>> split_fields(std::string_view text) {
    std::vector<std::pair<std::string_view, std::size_t>> fields;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = text.find(',', start);
        std::size_t end = comma == std::string_view::npos ? text.size() : comma;
        std::string_view field = text.substr(start, end - start);
        std::size_t lead = 0;
        while (lead < field.size() && field[lead] == ' ') ++lead;
        std::size_t trail = field.size();
        while (trail > lead && field[trail - 1] == ' ') --trail;
        fields.emplace_back(field.substr(lead, trail - lead), start + lead);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return fields;
}

ChernCharacter parse_chern_character(std::string_view text) {
    auto fields = split_fields(text);
    if (fields.size() < 2) throw ParseError("expected comma-separated coefficients", 0);
    std::vector<Rational> coeffs;
    for (const auto& [field, offset] : fields) coeffs.push_back(parse_rational(field, offset));
    return ChernCharacter(std::move(coeffs));
}

TruncatedClass parse_truncated_class(std::string_view text) {
    auto fields = split_fields(text);
    if (fields.size() != 3) throw ParseError("expected three fields r,c,s", text.size());
    Integer r = parse_integer(fields[0].first, fields[0].second);
    Integer c = parse_integer(fields[1].first, fields[1].second);
    Rational s = parse_rational(fields[2].first, fields[2].second);
    if (!is_integer(2 * s)) throw ParseError("ch_2 coefficient must lie in (1/2)Z", fields[2].second);
    return {r, c, s};
}

}  // namespace cubicwalls
