#ifndef SIEVELAB_GAUSSRAT_HPP
#define SIEVELAB_GAUSSRAT_HPP

#include <gmpxx.h>

#include <ostream>
#include <stdexcept>
#include <string>

namespace sievelab {

/// Exact element re + im * i of Q(i).
class GaussRat {
public:
    GaussRat() = default;
    GaussRat(long re) : re_(re), im_(0) {}  // NOLINT(implicit)
    GaussRat(mpq_class re, mpq_class im = 0) : re_(std::move(re)), im_(std::move(im)) {  // NOLINT(implicit)
        re_.canonicalize();
        im_.canonicalize();
    }

    static GaussRat i() { return {mpq_class(0), mpq_class(1)}; }
    static GaussRat fraction(long num, long den) { return {mpq_class(num, den)}; }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }
    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    GaussRat conj() const { return {re_, -im_}; }
    mpq_class norm() const { return re_ * re_ + im_ * im_; }

    GaussRat& operator+=(const GaussRat& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussRat& operator-=(const GaussRat& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussRat& operator*=(const GaussRat& o) {
        mpq_class r = re_ * o.re_ - im_ * o.im_;
        mpq_class m = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(m);
        return *this;
    }
    GaussRat& operator/=(const GaussRat& o) {
        if (o.is_zero()) throw std::domain_error("GaussRat division by zero");
        const mpq_class nn = o.norm();
        *this *= o.conj();
        re_ /= nn;
        im_ /= nn;
        return *this;
    }

    friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
    friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
    friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
    friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
    friend GaussRat operator-(const GaussRat& a) { return {-a.re_, -a.im_}; }
    friend bool operator==(const GaussRat& a, const GaussRat& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

    std::string to_string() const {
        if (is_real()) return re_.get_str();
        if (sgn(re_) == 0) return im_.get_str() + "i";
        return "(" + re_.get_str() + (sgn(im_) < 0 ? "-" : "+") + mpq_class(abs(im_)).get_str() + "i)";
    }
    friend std::ostream& operator<<(std::ostream& os, const GaussRat& g) { return os << g.to_string(); }

private:
    mpq_class re_ = 0;
    mpq_class im_ = 0;
};

}  // namespace sievelab

#endif  // SIEVELAB_GAUSSRAT_HPP
