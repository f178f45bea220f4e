#include "qtoric/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace qtoric {

std::string to_fraction_string(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
    Rational r;
    if (r.set_str(text, 10) != 0 || r.get_den() == 0) {
        throw std::invalid_argument("not a rational: '" + text + "'");
    }
    r.canonicalize();
    return r;
}

Monomial::Monomial(std::vector<std::uint16_t> factors) : factors_(std::move(factors)) {
    std::sort(factors_.begin(), factors_.end());
}

Monomial Monomial::generator(std::size_t index) {
    Monomial m;
    m.factors_.push_back(static_cast<std::uint16_t>(index));
    return m;
}

std::vector<std::pair<std::uint16_t, unsigned>> Monomial::exponents() const {
    std::vector<std::pair<std::uint16_t, unsigned>> out;
    for (auto f : factors_) {
        if (!out.empty() && out.back().first == f) {
            ++out.back().second;
        } else {
            out.emplace_back(f, 1u);
        }
    }
    return out;
}

std::vector<std::uint16_t> Monomial::support() const {
    std::vector<std::uint16_t> out;
    std::unique_copy(factors_.begin(), factors_.end(), std::back_inserter(out));
    return out;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial out;
    out.factors_.resize(factors_.size() + other.factors_.size());
    std::merge(factors_.begin(), factors_.end(), other.factors_.begin(), other.factors_.end(),
               out.factors_.begin());
    return out;
}

std::string Monomial::to_string(const std::vector<std::string>& labels) const {
    if (factors_.empty()) return "1";
    std::string out;
    for (auto [g, e] : exponents()) {
        if (!out.empty()) out += "*";
        out += g < labels.size() ? labels[g] : "u" + std::to_string(g);
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

namespace {

void collect_monomials(std::size_t generator_count, std::size_t remaining, std::uint16_t start,
                       std::vector<std::uint16_t>& prefix, std::vector<Monomial>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (std::size_t g = start; g < generator_count; ++g) {
        prefix.push_back(static_cast<std::uint16_t>(g));
        collect_monomials(generator_count, remaining - 1, static_cast<std::uint16_t>(g), prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t generator_count, std::size_t degree) {
    std::vector<Monomial> out;
    if (generator_count == 0 && degree > 0) return out;
    std::vector<std::uint16_t> prefix;
    collect_monomials(generator_count, degree, 0, prefix, out);
    return out;
}

GradedPolynomial GradedPolynomial::constant(const Rational& c) {
    GradedPolynomial p;
    p.add_term(Monomial{}, c);
    return p;
}

GradedPolynomial GradedPolynomial::generator(std::size_t index) {
    return from_monomial(Monomial::generator(index));
}

GradedPolynomial GradedPolynomial::from_monomial(const Monomial& m, const Rational& c) {
    GradedPolynomial p;
    p.add_term(m, c);
    return p;
}

GradedPolynomial GradedPolynomial::linear(const LineClass& coefficients) {
    GradedPolynomial p;
    for (std::size_t i = 0; i < coefficients.size(); ++i) {
        if (coefficients[i] != 0) {
            p.add_term(Monomial::generator(i), Rational(static_cast<long>(coefficients[i])));
        }
    }
    return p;
}

std::size_t GradedPolynomial::max_degree() const {
    std::size_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

bool GradedPolynomial::is_homogeneous(std::size_t degree) const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [degree](const auto& t) { return t.first.degree() == degree; });
}

Rational GradedPolynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void GradedPolynomial::add_term(const Monomial& m, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

GradedPolynomial GradedPolynomial::homogeneous_part(std::size_t degree) const {
    GradedPolynomial out;
    for (const auto& [m, c] : terms_) {
        if (m.degree() == degree) out.terms_.emplace_hint(out.terms_.end(), m, c);
    }
    return out;
}

GradedPolynomial GradedPolynomial::truncated(std::size_t max_degree) const {
    GradedPolynomial out;
    for (const auto& [m, c] : terms_) {
        if (m.degree() <= max_degree) out.terms_.emplace_hint(out.terms_.end(), m, c);
    }
    return out;
}

GradedPolynomial GradedPolynomial::multiply(const GradedPolynomial& other, std::size_t max_degree) const {
    GradedPolynomial out;
    Rational product;
    for (const auto& [ma, ca] : terms_) {
        if (ma.degree() > max_degree) continue;
        const std::size_t budget = max_degree - ma.degree();
        for (const auto& [mb, cb] : other.terms_) {
            if (mb.degree() > budget) continue;
            product = ca * cb;
            out.add_term(ma * mb, product);
        }
    }
    return out;
}

GradedPolynomial& GradedPolynomial::operator+=(const GradedPolynomial& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

GradedPolynomial& GradedPolynomial::operator-=(const GradedPolynomial& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

GradedPolynomial& GradedPolynomial::operator*=(const Rational& scalar) {
    if (sgn(scalar) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= scalar;
    return *this;
}

GradedPolynomial operator*(const GradedPolynomial& a, const GradedPolynomial& b) {
    return a.multiply(b, a.max_degree() + b.max_degree());
}

std::string GradedPolynomial::to_string(const std::vector<std::string>& labels) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        Rational mag = abs(c);
        if (out.empty()) {
            if (sgn(c) < 0) out += "-";
        } else {
            out += sgn(c) < 0 ? " - " : " + ";
        }
        if (m.is_one()) {
            out += mag.get_str();
        } else {
            if (mag != 1) out += mag.get_str() + "*";
            out += m.to_string(labels);
        }
    }
    return out;
}

GradedPolynomial power(const GradedPolynomial& base, unsigned exponent, std::size_t max_degree) {
    GradedPolynomial result = GradedPolynomial::constant(1);
    for (unsigned i = 0; i < exponent; ++i) result = result.multiply(base, max_degree);
    return result;
}

}  // namespace qtoric
