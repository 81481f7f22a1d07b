#pragma once

#include <string>

#include "askeyshift/gaussian_rational.hpp"

namespace askey {

// Affine coordinate substitution v -> scale*v + offset with scale != 0.
// Realizes every shift this engine needs: e^{±d/dx} (x -> x±1),
// e^{±γp} (x -> x∓iγ, z -> q^{±1}z) and q^{±η d/dη} (η -> q^{±1}η).
class Substitution {
public:
    Substitution(GaussianRational scale, GaussianRational offset)
        : scale_(std::move(scale)), offset_(std::move(offset)) {
        if (scale_.is_zero()) throw ConstraintError("Substitution: scale must be nonzero");
    }

    static Substitution identity() { return {GaussianRational(1), GaussianRational(0)}; }
    static Substitution shift(const GaussianRational& offset) { return {GaussianRational(1), offset}; }
    static Substitution scaling(const GaussianRational& scale) { return {scale, GaussianRational(0)}; }

    const GaussianRational& scale() const { return scale_; }
    const GaussianRational& offset() const { return offset_; }

    bool is_identity() const { return scale_.is_one() && offset_.is_zero(); }
    bool is_pure_scale() const { return offset_.is_zero(); }

    GaussianRational operator()(const GaussianRational& v) const { return scale_ * v + offset_; }

    // (a ∘ b)(v) = a(b(v)).
    friend Substitution compose(const Substitution& a, const Substitution& b) {
        return {a.scale_ * b.scale_, a.scale_ * b.offset_ + a.offset_};
    }

    Substitution inverse() const {
        GaussianRational inv = scale_.inverse();
        return {inv, -(offset_ * inv)};
    }

    friend bool operator==(const Substitution& a, const Substitution& b) {
        return a.scale_ == b.scale_ && a.offset_ == b.offset_;
    }
    friend bool operator!=(const Substitution& a, const Substitution& b) { return !(a == b); }

    friend int compare(const Substitution& a, const Substitution& b) {
        int c = compare(a.scale_, b.scale_);
        if (c != 0) return c;
        return compare(a.offset_, b.offset_);
    }

    std::string to_string(const char* v = "v") const {
        std::string out = std::string(v) + "->";
        if (!scale_.is_one()) out += "(" + scale_.to_string() + ")*";
        out += v;
        if (!offset_.is_zero()) out += "+(" + offset_.to_string() + ")";
        return out;
    }

private:
    GaussianRational scale_, offset_;
};

} // namespace askey
