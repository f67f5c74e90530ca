#pragma once

#include <map>
#include <string>
#include <vector>

#include "rrmul/curves/curve.hpp"

namespace rrmul::curves {

/// Finite formal sum of closed points. Zero multiplicities are never stored.
class Divisor {
public:
    Divisor() = default;
    static Divisor point(const ClosedPoint& P, long m = 1);

    long operator[](const ClosedPoint& P) const;
    void add(const ClosedPoint& P, long m);
    const std::map<ClosedPoint, long>& terms() const { return terms_; }
    std::vector<ClosedPoint> support() const;

    long degree() const;
    bool is_zero() const { return terms_.empty(); }
    bool is_effective() const;

    Divisor positive_part() const;
    Divisor negative_part() const;  // returned with positive multiplicities

    Divisor operator+(const Divisor& o) const;
    Divisor operator-(const Divisor& o) const;
    Divisor operator-() const;
    Divisor& operator+=(const Divisor& o);
    Divisor& operator-=(const Divisor& o);
    friend Divisor operator*(long s, const Divisor& D);

    bool operator==(const Divisor& o) const { return terms_ == o.terms_; }

    std::string to_string() const;

private:
    std::map<ClosedPoint, long> terms_;
};

std::string point_to_string(const ClosedPoint& P);

}  // namespace rrmul::curves
