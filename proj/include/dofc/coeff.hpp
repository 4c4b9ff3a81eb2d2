#pragma once
#include <gmpxx.h>
#include <string>

namespace dofc {

using Rat = mpq_class;

inline std::string rat_str(const Rat& r) { return r.get_str(); }

// Gaussian rational a + b*i. Exact, closed under Hermitian conjugation.
struct GaussRat {
    Rat re, im;

    GaussRat() : re(0), im(0) {}
    GaussRat(int n) : re(n), im(0) {}
    GaussRat(long n) : re(n), im(0) {}
    GaussRat(const Rat& r) : re(r), im(0) {}
    GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    static GaussRat i() { return GaussRat(Rat(0), Rat(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }
    bool is_one() const { return re == 1 && im == 0; }

    GaussRat conj() const { return GaussRat(re, -im); }

    GaussRat operator-() const { return GaussRat(-re, -im); }
    GaussRat operator+(const GaussRat& o) const { return GaussRat(re + o.re, im + o.im); }
    GaussRat operator-(const GaussRat& o) const { return GaussRat(re - o.re, im - o.im); }
    GaussRat operator*(const GaussRat& o) const {
        return GaussRat(re * o.re - im * o.im, re * o.im + im * o.re);
    }
    GaussRat inv() const {
        Rat n = re * re + im * im; // nonzero unless *this == 0
        return GaussRat(re / n, -im / n);
    }
    GaussRat operator/(const GaussRat& o) const { return *this * o.inv(); }

    GaussRat& operator+=(const GaussRat& o) { re += o.re; im += o.im; return *this; }
    GaussRat& operator-=(const GaussRat& o) { re -= o.re; im -= o.im; return *this; }
    GaussRat& operator*=(const GaussRat& o) { *this = *this * o; return *this; }

    bool operator==(const GaussRat& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GaussRat& o) const { return !(*this == o); }

    // "3", "-1/2", "i", "-i", "2i", "3+2i", "3-1/2i"
    std::string str() const {
        if (im == 0) return rat_str(re);
        std::string ims;
        if (im == 1) ims = "i";
        else if (im == -1) ims = "-i";
        else ims = rat_str(im) + "i";
        if (re == 0) return ims;
        if (im > 0) return rat_str(re) + "+" + ims;
        return rat_str(re) + ims; // ims already carries the minus
    }
};

} // namespace dofc
