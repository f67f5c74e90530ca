#include "rrmul/curves/divisor.hpp"

#include <sstream>

namespace rrmul::curves {

Divisor Divisor::point(const ClosedPoint& P, long m) {
    Divisor D;
    D.add(P, m);
    return D;
}

long Divisor::operator[](const ClosedPoint& P) const {
    auto it = terms_.find(P);
    return it == terms_.end() ? 0 : it->second;
}

void Divisor::add(const ClosedPoint& P, long m) {
    if (m == 0) return;
    auto [it, inserted] = terms_.emplace(P, m);
    if (!inserted) {
        it->second += m;
        if (it->second == 0) terms_.erase(it);
    }
}

std::vector<ClosedPoint> Divisor::support() const {
    std::vector<ClosedPoint> out;
    for (const auto& [P, m] : terms_) out.push_back(P);
    return out;
}

long Divisor::degree() const {
    long d = 0;
    for (const auto& [P, m] : terms_) d += m * static_cast<long>(P.degree);
    return d;
}

bool Divisor::is_effective() const {
    for (const auto& [P, m] : terms_)
        if (m < 0) return false;
    return true;
}

Divisor Divisor::positive_part() const {
    Divisor D;
    for (const auto& [P, m] : terms_)
        if (m > 0) D.terms_.emplace(P, m);
    return D;
}

Divisor Divisor::negative_part() const {
    Divisor D;
    for (const auto& [P, m] : terms_)
        if (m < 0) D.terms_.emplace(P, -m);
    return D;
}

Divisor& Divisor::operator+=(const Divisor& o) {
    for (const auto& [P, m] : o.terms_) add(P, m);
    return *this;
}

Divisor& Divisor::operator-=(const Divisor& o) {
    for (const auto& [P, m] : o.terms_) add(P, -m);
    return *this;
}

Divisor Divisor::operator+(const Divisor& o) const {
    Divisor r = *this;
    return r += o;
}

Divisor Divisor::operator-(const Divisor& o) const {
    Divisor r = *this;
    return r -= o;
}

Divisor Divisor::operator-() const { return Divisor() - *this; }

Divisor operator*(long s, const Divisor& D) {
    Divisor r;
    if (s == 0) return r;
    for (const auto& [P, m] : D.terms_) r.terms_.emplace(P, s * m);
    return r;
}

std::string point_to_string(const ClosedPoint& P) {
    if (P.infinite) return "inf";
    std::ostringstream os;
    os << "[" << P.pi.to_string();
    if (P.y != 0 || P.degree != static_cast<unsigned>(P.pi.degree())) os << "; y=" << P.y;
    os << "]";
    return os.str();
}

std::string Divisor::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [P, m] : terms_) {
        if (!first) os << (m < 0 ? " - " : " + ");
        else if (m < 0) os << "-";
        first = false;
        long a = m < 0 ? -m : m;
        if (a != 1) os << a << "*";
        os << point_to_string(P);
    }
    return os.str();
}

}  // namespace rrmul::curves
