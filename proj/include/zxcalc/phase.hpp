// Copyright 2026 The zxcalc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "zxcalc/error.hpp"

#include <compare>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <string>

namespace zxcalc {

/// Exact rational angle in units of pi, kept in lowest terms and normalized
/// to the half-open interval [0, 2). Addition wraps modulo 2 (i.e. 2*pi);
/// negation maps p to (2 - p) mod 2.
class Phase {
public:
    constexpr Phase() = default;

    Phase(std::int64_t numerator, std::int64_t denominator = 1)
        : num_(numerator), den_(denominator) {
        if (den_ == 0)
            throw ZXError("invalid-phase", "zero denominator");
        normalize();
    }

    static Phase zero() { return Phase(); }
    static Phase pi() { return Phase(1); }

    std::int64_t numerator() const { return num_; }
    std::int64_t denominator() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_pi() const { return num_ == 1 && den_ == 1; }

    /// Angle in radians, for numerical evaluation only.
    double radians() const {
        return std::numbers::pi * static_cast<double>(num_) / static_cast<double>(den_);
    }

    Phase operator+(const Phase& other) const {
        // num_/den_ + o.num_/o.den_ over the common denominator.
        const std::int64_t g = std::gcd(den_, other.den_);
        const std::int64_t scale = other.den_ / g;
        return Phase(num_ * scale + other.num_ * (den_ / g), den_ * scale);
    }

    Phase operator-() const { return Phase(-num_, den_); }

    Phase operator-(const Phase& other) const { return *this + (-other); }

    Phase& operator+=(const Phase& other) { return *this = *this + other; }

    bool operator==(const Phase&) const = default;
    auto operator<=>(const Phase& other) const {
        // Compare as rationals; both sides are normalized to [0, 2).
        return num_ * other.den_ <=> other.num_ * den_;
    }

    /// Lowest-terms textual form "p/q" (in units of pi), e.g. "0/1", "3/4".
    std::string str() const {
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    /// Accepts "p/q" or a bare integer "p"; units of pi.
    static Phase parse(const std::string& text) {
        try {
            std::size_t pos = 0;
            const std::int64_t num = std::stoll(text, &pos);
            if (pos == text.size())
                return Phase(num);
            if (text[pos] != '/')
                throw ZXError("invalid-phase", "malformed phase '" + text + "'");
            std::size_t pos2 = 0;
            const std::string rest = text.substr(pos + 1);
            const std::int64_t den = std::stoll(rest, &pos2);
            if (pos2 != rest.size())
                throw ZXError("invalid-phase", "malformed phase '" + text + "'");
            return Phase(num, den);
        } catch (const std::invalid_argument&) {
            throw ZXError("invalid-phase", "malformed phase '" + text + "'");
        } catch (const std::out_of_range&) {
            throw ZXError("invalid-phase", "phase out of range '" + text + "'");
        }
    }

private:
    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        // Wrap into [0, 2) in units of pi: num_/den_ mod 2.
        const std::int64_t two = 2 * den_;
        num_ %= two;
        if (num_ < 0)
            num_ += two;
        if (num_ == 0)
            den_ = 1;
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

} // namespace zxcalc
