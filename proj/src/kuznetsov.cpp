#include "cubicwalls/kuznetsov.hpp"

namespace cubicwalls {

KExpression::KExpression(const Generator& g, Integer coefficient) { add_term(g, coefficient); }

void KExpression::add_term(const Generator& g, const Integer& k) {
    if (k == 0) return;
    auto [it, inserted] = terms_.emplace(g, k);
    if (!inserted) {
        it->second += k;
        if (it->second == 0) terms_.erase(it);
    }
}

bool KExpression::is_single() const {
    return terms_.size() == 1 && (terms_.begin()->second == 1 || terms_.begin()->second == -1);
}

KExpression& KExpression::operator+=(const KExpression& other) {
    for (const auto& [g, k] : other.terms_) add_term(g, k);
    return *this;
}

KExpression& KExpression::operator-=(const KExpression& other) {
    for (const auto& [g, k] : other.terms_) add_term(g, -k);
    return *this;
}

KExpression KExpression::operator-() const { return Integer(-1) * *this; }

KExpression operator*(const Integer& k, const KExpression& a) {
    KExpression out;
    for (const auto& [g, c] : a.terms_) out.add_term(g, k * c);
    return out;
}

std::string to_string(const KExpression& e) {
    if (e.is_zero()) return "0";
    // O_Y twists last, in decreasing order, so projections read naturally.
    std::vector<std::pair<Generator, Integer>> ordered;
    for (const auto& t : e.terms())
        if (t.first.base != "O_Y") ordered.push_back(t);
    for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it)
        if (it->first.base == "O_Y") ordered.push_back(*it);
    std::string out;
    for (const auto& [g, k] : ordered) {
        Integer mag = k < 0 ? Integer(-k) : k;
        std::string body = mag == 1 ? to_string(g) : to_string(mag) + "*" + to_string(g);
        if (out.empty())
            out = (k < 0 ? "-" : "") + body;
        else
            out += (k < 0 ? " - " : " + ") + body;
    }
    return out;
}

KExpression parse_kexpression(std::string_view text) {
    KExpression out;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && text[i] == ' ') ++i;
    };
    skip();
    if (i == text.size()) throw ParseError("empty expression", i);
    bool first = true;
    while (i < text.size()) {
        int sgn = 1;
        if (text[i] == '+' || text[i] == '-') {
            sgn = text[i] == '-' ? -1 : 1;
            ++i;
            skip();
        } else if (!first) {
            throw ParseError("expected '+' or '-'", i);
        }
        first = false;
        // Term: [integer '*'] generator, ending at top-level '+', '-' or space.
        std::size_t start = i;
        int depth = 0;
        while (i < text.size()) {
            char ch = text[i];
            if (ch == '(') ++depth;
            if (ch == ')') --depth;
            if (depth == 0 && (ch == '+' || ch == '-' || ch == ' ') && i > start) break;
            ++i;
        }
        std::string_view term = text.substr(start, i - start);
        if (term.empty()) throw ParseError("missing term", start);
        Integer coeff = 1;
        std::size_t star = term.find('*');
        std::size_t name_at = start;
        if (star != std::string_view::npos) {
            coeff = parse_integer(term.substr(0, star), start);
            name_at = start + star + 1;
            term = term.substr(star + 1);
        }
        out += KExpression(parse_generator(term, name_at), sgn * coeff);
        skip();
    }
    return out;
}

ChernCharacter resolve(const KExpression& e, const Catalog& cat) {
    ChernCharacter acc = ChernCharacter::zero(cat.variety().dimension());
    for (const auto& [g, k] : e.terms()) acc += Rational(k) * cat.character(g);
    return acc;
}

namespace {

void require_exceptional(const KExpression& f, const Catalog& cat) {
    if (!f.is_single() || !cat.is_exceptional(f.terms().begin()->first))
        throw Error("NotExceptional", to_string(f) + " is not the class of an exceptional object");
}

Integer integral(const Rational& q, const std::string& what) {
    if (!is_integer(q)) throw Error("NotIntegral", what + " = " + to_string(q) + " is not an integer");
    return numerator(q);
}

}  // namespace

KExpression mutate_left(const KExpression& f, const KExpression& g, const Catalog& cat) {
    require_exceptional(f, cat);
    Integer chi = integral(euler_pairing(resolve(f, cat), resolve(g, cat), cat.variety()), "chi(F, G)");
    return g - chi * f;
}

KExpression mutate_right(const KExpression& f, const KExpression& g, const Catalog& cat) {
    require_exceptional(f, cat);
    Integer chi = integral(euler_pairing(resolve(g, cat), resolve(f, cat), cat.variety()), "chi(G, F)");
    return g - chi * f;
}

KExpression project_to_kuznetsov(const KExpression& g, const Catalog& cat) {
    KExpression out = g;
    for (int i = 2; i >= 0; --i) out = mutate_left(KExpression(Generator{"O_Y", i}), out, cat);
    return out;
}

std::string to_string(const MukaiVector& v) { return to_string(v.x1) + "," + to_string(v.x2); }

MukaiVector parse_mukai_vector(std::string_view text) {
    auto fields = split_fields(text);
    if (fields.size() != 2) throw ParseError("expected two integers x1,x2", text.size());
    return {parse_integer(fields[0].first, fields[0].second), parse_integer(fields[1].first, fields[1].second)};
}

LambdaBasis lambda_basis(const Catalog& cat) {
    KExpression l1 = project_to_kuznetsov(KExpression(Generator{"O_L", 1}), cat);
    KExpression l2 = project_to_kuznetsov(KExpression(Generator{"O_L", 2}), cat);
    return {l1, l2, resolve(l1, cat), resolve(l2, cat)};
}

MukaiVector mukai_vector(const ChernCharacter& ch, const Catalog& cat) {
    for (int i = 0; i <= 2; ++i) {
        Rational chi = euler_pairing(cat.character(Generator{"O_Y", i}), ch, cat.variety());
        if (chi != 0)
            throw Error("NotInComponent", "chi(O_Y(" + std::to_string(i) + "), G) = " + to_string(chi) + " != 0");
    }
    const LambdaBasis basis = lambda_basis(cat);
    const auto& a = basis.ch1;
    const auto& b = basis.ch2;
    const int n = ch.dimension();
    // Solve on the first pair of coordinates with nonzero determinant.
    for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            Rational det = a[i] * b[j] - a[j] * b[i];
            if (det == 0) continue;
            Rational x1 = (ch[i] * b[j] - ch[j] * b[i]) / det;
            Rational x2 = (a[i] * ch[j] - a[j] * ch[i]) / det;
            if (x1 * a + x2 * b != ch)
                throw Error("NotInComponent", to_string(ch) + " is not in the span of lambda_1, lambda_2");
            return {integral(x1, "x1"), integral(x2, "x2")};
        }
    throw Error("NotInComponent", "lambda_1 and lambda_2 are dependent");
}

MukaiVector mukai_vector(const KExpression& g, const Catalog& cat) { return mukai_vector(resolve(g, cat), cat); }

Integer mukai_pairing(const MukaiVector& a, const MukaiVector& b) {
    return 2 * a.x1 * b.x1 - a.x1 * b.x2 - a.x2 * b.x1 + 2 * a.x2 * b.x2;
}

std::array<std::array<Rational, 2>, 2> gram_from_characters(const Catalog& cat) {
    const LambdaBasis basis = lambda_basis(cat);
    const ChernCharacter* ch[2] = {&basis.ch1, &basis.ch2};
    std::array<std::array<Rational, 2>, 2> out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) out[i][j] = -euler_pairing(*ch[i], *ch[j], cat.variety());
    return out;
}

}  // namespace cubicwalls
