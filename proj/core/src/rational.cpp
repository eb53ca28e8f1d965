#include "lpcert/rational.hpp"

#include "lpcert/errors.hpp"

#include <sstream>

namespace lpcert {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (c < '0' || c > '9') return false;
    }
    return true;
}

}  // namespace

std::string to_string(const Rational& r) {
    return r.str();
}

Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }

    std::string_view num = body;
    std::string_view den;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        num = body.substr(0, slash);
        den = body.substr(slash + 1);
        if (!all_digits(den)) {
            throw ParseError("invalid rational '" + std::string(text) +
                             "': denominator must be a positive integer");
        }
    }
    if (!all_digits(num)) {
        throw ParseError("invalid rational '" + std::string(text) +
                         "': expected digits, optionally signed and followed by '/digits'");
    }

    const std::string num_digits(num);
    Integer n(num_digits);
    if (negative) n = -n;
    if (den.empty()) return Rational(n);

    const std::string den_digits(den);
    Integer d(den_digits);
    if (d == 0) {
        throw ParseError("invalid rational '" + std::string(text) + "': zero denominator");
    }
    return Rational(n, d);  // canonicalizes; d > 0 here
}

RVector zeros(std::size_t n) {
    return RVector(n, Rational(0));
}

RVector ones(std::size_t n) {
    return RVector(n, Rational(1));
}

RVector unit_vector(std::size_t n, std::size_t j) {
    RVector v = zeros(n);
    v.at(j) = 1;
    return v;
}

Rational dot(const RVector& a, const RVector& b) {
    if (a.size() != b.size()) {
        throw PreconditionError("dot: length mismatch (" + std::to_string(a.size()) + " vs " +
                                std::to_string(b.size()) + ")");
    }
    Rational acc(0);
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

RVector add(const RVector& a, const RVector& b) {
    if (a.size() != b.size()) throw PreconditionError("add: length mismatch");
    RVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

RVector sub(const RVector& a, const RVector& b) {
    if (a.size() != b.size()) throw PreconditionError("sub: length mismatch");
    RVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

RVector scaled(const RVector& a, const Rational& factor) {
    RVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * factor;
    return out;
}

bool is_zero_vector(const RVector& v) {
    for (const auto& c : v) {
        if (c != 0) return false;
    }
    return true;
}

bool is_nonnegative(const RVector& v) {
    for (const auto& c : v) {
        if (c < 0) return false;
    }
    return true;
}

std::vector<std::size_t> support(const RVector& v) {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (v[j] > 0) out.push_back(j);
    }
    return out;
}

std::string to_string(const RVector& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << v[i].str();
    }
    os << ')';
    return os.str();
}

}  // namespace lpcert
