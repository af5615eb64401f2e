#include "cliquepoly/polynomial.hpp"

#include <algorithm>
#include <string>

namespace cliquepoly {

Polynomial::Polynomial(std::initializer_list<long long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (auto c : coeffs) coeffs_.push_back(c);
}

Polynomial Polynomial::monomial(Int c, int degree) {
    if (degree < 0) throw PreconditionError("negative monomial degree");
    std::vector<Int> v(static_cast<std::size_t>(degree) + 1, 0);
    v.back() = c;
    return Polynomial(std::move(v));
}

Int Polynomial::operator[](int i) const {
    if (i < 0 || static_cast<std::size_t>(i) >= coeffs_.size()) return 0;
    return coeffs_[static_cast<std::size_t>(i)];
}

int Polynomial::degree() const {
    for (auto i = static_cast<int>(coeffs_.size()) - 1; i >= 0; --i)
        if (coeffs_[static_cast<std::size_t>(i)] != 0) return i;
    return -1;
}

Polynomial& Polynomial::normalize() {
    coeffs_.resize(static_cast<std::size_t>(degree() + 1));
    return *this;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = checked_add(coeffs_[i], o.coeffs_[i]);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = checked_sub(coeffs_[i], o.coeffs_[i]);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.coeffs_.empty() || b.coeffs_.empty()) return {};
    std::vector<Int> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] = checked_add(out[i + j], checked_mul(a.coeffs_[i], b.coeffs_[j]));
    }
    return Polynomial(std::move(out));
}

Polynomial operator*(Int c, const Polynomial& p) {
    auto out = p.coeffs_;
    for (auto& x : out) x = checked_mul(c, x);
    return Polynomial(std::move(out));
}

Polynomial Polynomial::shifted(int k) const {
    if (k < 0) throw PreconditionError("negative shift");
    std::vector<Int> out(static_cast<std::size_t>(k), 0);
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    return Polynomial(std::move(out));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    const auto n = std::max(a.coeffs_.size(), b.coeffs_.size());
    for (std::size_t i = 0; i < n; ++i)
        if (a[static_cast<int>(i)] != b[static_cast<int>(i)]) return false;
    return true;
}

Polynomial derivative(const Polynomial& p, int order) {
    if (order < 1) throw PreconditionError("derivative order must be at least 1");
    std::vector<Int> out;
    for (int i = order; i <= p.degree(); ++i) {
        Int falling = 1;
        for (int j = 0; j < order; ++j) falling = checked_mul(falling, i - j);
        out.push_back(checked_mul(falling, p[i]));
    }
    return Polynomial(std::move(out));
}

Polynomial normalized_derivative(const Polynomial& p, int order) {
    if (order < 1) throw PreconditionError("derivative order must be at least 1");
    std::vector<Int> out;
    for (int i = order; i <= p.degree(); ++i) out.push_back(checked_mul(binomial(i, order), p[i]));
    return Polynomial(std::move(out));
}

Polynomial reverse(const Polynomial& p, int n, bool include_unit) {
    if (n < p.degree())
        throw PreconditionError("reversal base " + std::to_string(n) + " below degree " + std::to_string(p.degree()));
    std::vector<Int> out(static_cast<std::size_t>(std::max(n, 0)) + 1, 0);
    for (int k = 0; k <= p.degree(); ++k) out[static_cast<std::size_t>(n - k)] = p[k];
    if (include_unit) out[0] = checked_add(out[0], 1);
    return Polynomial(std::move(out));
}

std::string to_string(const Polynomial& p) {
    std::string out;
    for (int i = 0; i <= p.degree(); ++i) {
        Int c = p[i];
        if (c == 0) continue;
        bool negative = c < 0;
        Int mag = negative ? -c : c;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (mag != 1 || i == 0) out += cliquepoly::to_string(mag);
        if (i >= 1) out += "x";
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

std::string to_coefficient_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = 0; i <= p.degree(); ++i) {
        if (i > 0) out += ' ';
        out += cliquepoly::to_string(p[i]);
    }
    return out;
}

} // namespace cliquepoly
