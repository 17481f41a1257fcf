#pragma once

#include <complex>
#include <cmath>
#include <string>
#include <vector>

#include "fanoep/errors.hpp"

namespace fanoep {

using Complex = std::complex<double>;

// Frequency-domain sign convention: time dependence exp(-i w t), so decaying
// resonances sit in the lower half plane (Im w < 0).

struct OscillatorParams {
    double omega1 = 1.0;
    double omega2 = 1.0;
    double k1 = 0.0;
    double k2 = 0.0;

    void validate() const {
        if (!(omega1 > 0.0) || !(omega2 > 0.0))
            throw InvalidParams("oscillator frequencies must be positive");
        if (!(k1 >= 0.0) || !(k2 >= 0.0))
            throw InvalidParams("damping rates must be non-negative");
        if (!std::isfinite(omega1) || !std::isfinite(omega2) ||
            !std::isfinite(k1) || !std::isfinite(k2))
            throw InvalidParams("oscillator parameters must be finite");
    }
};

struct Coupling {
    double f = 0.0;  // coupling spring constant
    double g = 0.0;  // coupling damping constant

    void validate() const {
        if (!std::isfinite(f) || !std::isfinite(g))
            throw InvalidParams("coupling parameters must be finite");
    }
};

struct DriveConfig {
    Complex c1{1.0, 0.0};
    Complex c2{0.0, 0.0};

    void validate() const {
        if (std::abs(c1) == 0.0 && std::abs(c2) == 0.0)
            throw InvalidParams("drive amplitudes must not both vanish");
    }
};

// Response channels. C11/C22/C12 address the oscillator basis; Sym/Anti are
// the center-of-mass and relative combinations (1,1)/sqrt2 and (1,-1)/sqrt2,
// the eigenvectors of the coupling damper.
enum class Channel { C11, C22, C12, Sym, Anti };

std::string channel_name(Channel ch);
Channel parse_channel(const std::string& name);

struct Matrix2 {
    Complex a11{}, a12{}, a21{}, a22{};

    Complex det() const { return a11 * a22 - a12 * a21; }
    Complex trace() const { return a11 + a22; }

    double frobenius_norm() const {
        return std::sqrt(std::norm(a11) + std::norm(a12) + std::norm(a21) + std::norm(a22));
    }

    Matrix2 operator*(const Matrix2& o) const {
        return {a11 * o.a11 + a12 * o.a21, a11 * o.a12 + a12 * o.a22,
                a21 * o.a11 + a22 * o.a21, a21 * o.a12 + a22 * o.a22};
    }
    Matrix2 operator+(const Matrix2& o) const {
        return {a11 + o.a11, a12 + o.a12, a21 + o.a21, a22 + o.a22};
    }
    Matrix2 operator-(const Matrix2& o) const {
        return {a11 - o.a11, a12 - o.a12, a21 - o.a21, a22 - o.a22};
    }
    Matrix2 operator*(Complex s) const { return {a11 * s, a12 * s, a21 * s, a22 * s}; }

    static Matrix2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
};

// Projection of a 2x2 response onto a channel: matrix entry in the oscillator
// basis, or <v|M|v> for the rotated channels.
Complex channel_entry(const Matrix2& m, Channel ch);

struct SpectralCurve {
    std::vector<double> energies;
    std::vector<double> values;
    Channel channel = Channel::C11;
    OscillatorParams params{};
    Coupling coupling{};
    DriveConfig drive{};
    bool reduced = false;  // true when built from the pole-reduced response

    std::size_t size() const { return energies.size(); }
    bool empty() const { return energies.empty(); }

    void validate() const {
        if (energies.size() != values.size())
            throw InvalidParams("curve energy/value lengths differ");
        for (std::size_t i = 1; i < energies.size(); ++i)
            if (!(energies[i] > energies[i - 1]))
                throw InvalidParams("curve energies must be strictly increasing");
        for (double v : values)
            if (!(v >= 0.0))
                throw InvalidParams("curve values must be non-negative");
    }
};

}  // namespace fanoep
