#include "qtoric/qseries.hpp"

#include <stdexcept>

namespace qtoric {

std::string to_string(RootFactorKind kind) {
    switch (kind) {
        case RootFactorKind::AHat: return "AHAT";
        case RootFactorKind::Q1: return "Q1";
        case RootFactorKind::Q2: return "Q2";
        case RootFactorKind::Q2Prime: return "Q2PRIME";
        case RootFactorKind::Q3: return "Q3";
        case RootFactorKind::ExpHalf: return "EXPHALF";
    }
    return "?";
}

RootSeries::RootSeries(std::size_t q_order, std::size_t max_x)
    : q_order_(q_order), max_x_(max_x), c_((q_order + 1) * (max_x + 1)) {}

RootSeries RootSeries::constant(const Rational& c, std::size_t q_order, std::size_t max_x) {
    RootSeries s(q_order, max_x);
    s.at(0, 0) = c;
    return s;
}

RootSeries RootSeries::exp(const Rational& scale, std::size_t q_order, std::size_t max_x) {
    RootSeries s(q_order, max_x);
    Rational term = 1;
    for (std::size_t d = 0; d <= max_x; ++d) {
        s.at(0, d) = term;
        term *= scale;
        term /= static_cast<long>(d + 1);
    }
    return s;
}

RootSeries RootSeries::q_monomial(std::size_t k, const Rational& c, std::size_t q_order, std::size_t max_x) {
    RootSeries s(q_order, max_x);
    if (k <= q_order) s.at(k, 0) = c;
    return s;
}

const Rational& RootSeries::at(std::size_t j, std::size_t d) const { return c_.at(j * (max_x_ + 1) + d); }
Rational& RootSeries::at(std::size_t j, std::size_t d) { return c_.at(j * (max_x_ + 1) + d); }

void RootSeries::check_compatible(const RootSeries& o) const {
    if (q_order_ != o.q_order_ || max_x_ != o.max_x_) throw std::invalid_argument("RootSeries: truncation mismatch");
}

RootSeries& RootSeries::operator+=(const RootSeries& o) {
    check_compatible(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

RootSeries& RootSeries::operator-=(const RootSeries& o) {
    check_compatible(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

RootSeries& RootSeries::operator*=(const RootSeries& o) {
    check_compatible(o);
    RootSeries out(q_order_, max_x_);
    for (std::size_t j1 = 0; j1 <= q_order_; ++j1) {
        for (std::size_t d1 = 0; d1 <= max_x_; ++d1) {
            const Rational& a = at(j1, d1);
            if (sgn(a) == 0) continue;
            for (std::size_t j2 = 0; j1 + j2 <= q_order_; ++j2) {
                for (std::size_t d2 = 0; d1 + d2 <= max_x_; ++d2) {
                    const Rational& b = o.at(j2, d2);
                    if (sgn(b) != 0) out.at(j1 + j2, d1 + d2) += a * b;
                }
            }
        }
    }
    *this = std::move(out);
    return *this;
}

RootSeries RootSeries::times_x() const {
    RootSeries out(q_order_, max_x_);
    for (std::size_t j = 0; j <= q_order_; ++j)
        for (std::size_t d = 0; d < max_x_; ++d) out.at(j, d + 1) = at(j, d);
    return out;
}

RootSeries RootSeries::inverse() const {
    const Rational& c0 = at(0, 0);
    if (sgn(c0) == 0) throw std::domain_error("RootSeries::inverse: zero constant term");
    // Solve (this * out) = 1 coefficient by coefficient in graded (q, x) order.
    RootSeries out(q_order_, max_x_);
    for (std::size_t j = 0; j <= q_order_; ++j) {
        for (std::size_t d = 0; d <= max_x_; ++d) {
            Rational acc = (j == 0 && d == 0) ? Rational(1) : Rational(0);
            for (std::size_t j1 = 0; j1 <= j; ++j1) {
                for (std::size_t d1 = 0; d1 <= d; ++d1) {
                    if (j1 == 0 && d1 == 0) continue;
                    const Rational& a = at(j1, d1);
                    if (sgn(a) != 0) acc -= a * out.at(j - j1, d - d1);
                }
            }
            out.at(j, d) = acc / c0;
        }
    }
    return out;
}

namespace {

// sinh(x/2)/(x/2) = sum_j x^{2j} / (4^j (2j+1)!)
RootSeries sinh_ratio(std::size_t q_order, std::size_t max_x) {
    RootSeries s(q_order, max_x);
    Rational term = 1;
    for (std::size_t d = 0; d <= max_x; d += 2) {
        s.at(0, d) = term;
        term /= static_cast<long>(4 * (d + 2) * (d + 3));
    }
    return s;
}

// prod_{k=1..N} (1 + eps e^x q^k)(1 + eps e^-x q^k) / (1 + eps q^k)^2
RootSeries tail_product(int eps, std::size_t q_order, std::size_t max_x) {
    RootSeries out = RootSeries::constant(1, q_order, max_x);
    const RootSeries ex = RootSeries::exp(1, q_order, max_x);
    const RootSeries emx = RootSeries::exp(-1, q_order, max_x);
    const RootSeries one = RootSeries::constant(1, q_order, max_x);
    for (std::size_t k = 1; k <= q_order; ++k) {
        const RootSeries qk = RootSeries::q_monomial(k, eps, q_order, max_x);
        const RootSeries denominator = (one + qk) * (one + qk);
        out *= (one + ex * qk) * (one + emx * qk) * denominator.inverse();
    }
    return out;
}

}  // namespace

RootSeries root_series(RootFactorKind kind, std::size_t q_order, std::size_t max_x) {
    const RootSeries one = RootSeries::constant(1, q_order, max_x);
    switch (kind) {
        case RootFactorKind::ExpHalf:
            return RootSeries::exp(Rational(1, 2), q_order, max_x);
        case RootFactorKind::AHat:
            return sinh_ratio(q_order, max_x).inverse();
        case RootFactorKind::Q1:
            return tail_product(-1, q_order, max_x).inverse();
        case RootFactorKind::Q2:
            return (one - RootSeries::exp(-1, q_order, max_x)) * tail_product(-1, q_order, max_x);
        case RootFactorKind::Q2Prime:
            return sinh_ratio(q_order, max_x) * tail_product(-1, q_order, max_x);
        case RootFactorKind::Q3:
            return (RootSeries::exp(Rational(1, 2), q_order, max_x) + RootSeries::exp(Rational(-1, 2), q_order, max_x)) *
                   tail_product(1, q_order, max_x);
    }
    throw std::invalid_argument("root_series: unknown kind");
}

QSeries::QSeries(std::size_t q_order, std::size_t max_degree) : coeffs_(q_order + 1), max_degree_(max_degree) {}

QSeries QSeries::constant(const GradedPolynomial& c, std::size_t q_order, std::size_t max_degree) {
    QSeries s(q_order, max_degree);
    s.coeffs_[0] = c.truncated(max_degree);
    return s;
}

QSeries QSeries::q_power(std::size_t k, std::size_t q_order, std::size_t max_degree) {
    QSeries s(q_order, max_degree);
    if (k <= q_order) s.coeffs_[k] = GradedPolynomial::constant(1);
    return s;
}

void QSeries::set_coefficient(std::size_t k, GradedPolynomial p) { coeffs_.at(k) = p.truncated(max_degree_); }

void QSeries::check_compatible(const QSeries& o) const {
    if (q_order() != o.q_order()) {
        throw std::invalid_argument("QSeries: q-orders differ (" + std::to_string(q_order()) + " vs " +
                                    std::to_string(o.q_order()) + ")");
    }
    if (max_degree_ != o.max_degree_) throw std::invalid_argument("QSeries: truncation degrees differ");
}

QSeries& QSeries::operator+=(const QSeries& o) {
    check_compatible(o);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
}

QSeries& QSeries::operator*=(const QSeries& o) {
    check_compatible(o);
    std::vector<GradedPolynomial> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < coeffs_.size(); ++j) {
            if (o.coeffs_[j].is_zero()) continue;
            out[i + j] += coeffs_[i].multiply(o.coeffs_[j], max_degree_);
        }
    }
    coeffs_ = std::move(out);
    return *this;
}

QSeries& QSeries::operator*=(const Rational& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
}

std::string QSeries::to_string(const std::vector<std::string>& labels) const {
    std::string out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (k) out += " + ";
        const std::string body = coeffs_[k].to_string(labels);
        if (k == 0) {
            out += body;
        } else {
            out += "(" + body + ") q" + (k > 1 ? "^" + std::to_string(k) : "");
        }
    }
    return out;
}

QSeries series_add(const QSeries& a, const QSeries& b) { return a + b; }
QSeries series_mul(const QSeries& a, const QSeries& b) { return a * b; }
QSeries scalar_mul(const QSeries& a, const Rational& s) { return a * s; }

QSeries substitute(const RootSeries& f, const GradedPolynomial& x, std::size_t max_degree) {
    if (!x.is_homogeneous(1)) throw std::invalid_argument("substitute: root must be a degree-one class");
    const std::size_t top = std::min(max_degree, f.max_x());
    std::vector<GradedPolynomial> powers{GradedPolynomial::constant(1)};
    for (std::size_t d = 1; d <= top; ++d) powers.push_back(powers.back().multiply(x, max_degree));
    QSeries s(f.q_order(), max_degree);
    for (std::size_t j = 0; j <= f.q_order(); ++j) {
        GradedPolynomial c;
        for (std::size_t d = 0; d <= top; ++d) {
            if (sgn(f.at(j, d)) != 0 && !powers[d].is_zero()) c += powers[d] * f.at(j, d);
        }
        s.set_coefficient(j, std::move(c));
    }
    return s;
}

QSeries root_factor(RootFactorKind kind, const GradedPolynomial& x, std::size_t q_order, std::size_t max_degree) {
    return substitute(root_series(kind, q_order, max_degree), x, max_degree);
}

QSeries bundle_series(RootFactorKind kind, std::span<const LineClass> roots, std::size_t q_order,
                      std::size_t max_degree) {
    const RootSeries f = root_series(kind, q_order, max_degree);
    QSeries out = QSeries::constant(GradedPolynomial::constant(1), q_order, max_degree);
    for (const auto& r : roots) out *= substitute(f, GradedPolynomial::linear(r), max_degree);
    return out;
}

}  // namespace qtoric
