#ifndef LATCUT_RATIONAL_HPP
#define LATCUT_RATIONAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace latcut {

// All scalars in the library are exact rationals. mpq_class keeps values
// canonical (lowest terms, positive denominator) after canonicalize(), which
// every constructor path below enforces.
using Rat = mpq_class;
using Int = mpz_class;

using RatVec = std::vector<Rat>;

Rat rat(long num, long den = 1);

// Parses "p/q" or "p" with optional leading '-'. Rejects anything else,
// including zero denominators.
Rat rat_from_string(const std::string& text);

// Formats as "p/q", or "p" when the denominator is 1.
std::string rat_to_string(const Rat& value);

bool is_integer(const Rat& value);
Int floor_int(const Rat& value);
Int ceil_int(const Rat& value);

// value - floor(value), in [0, 1).
Rat frac(const Rat& value);

// Generator of the additive group produced by a set of rationals
// (0 if all inputs are 0).
Rat rational_gcd(const Rat& a, const Rat& b);

RatVec vec(std::initializer_list<long> entries);
RatVec rat_vec(std::initializer_list<Rat> entries);

Rat dot(const RatVec& a, const RatVec& b);
RatVec add(const RatVec& a, const RatVec& b);
RatVec sub(const RatVec& a, const RatVec& b);
RatVec scale(const Rat& factor, const RatVec& v);
RatVec zero_vec(int dim);
bool is_zero(const RatVec& v);
bool is_integral(const RatVec& v);

// Lexicographic comparison, used everywhere a deterministic order is needed.
bool lex_less(const RatVec& a, const RatVec& b);

std::string vec_to_string(const RatVec& v);

// Dense row-major rational matrix. Only small dimensions are ever used.
struct RatMat {
    int rows = 0;
    int cols = 0;
    std::vector<Rat> data;

    RatMat() = default;
    RatMat(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c) {}

    Rat& at(int r, int c) { return data[static_cast<size_t>(r) * cols + c]; }
    const Rat& at(int r, int c) const {
        return data[static_cast<size_t>(r) * cols + c];
    }

    static RatMat identity(int n);
    static RatMat from_rows(const std::vector<RatVec>& rows);
    static RatMat from_cols(const std::vector<RatVec>& cols);

    RatVec row(int r) const;
    RatVec col(int c) const;
};

RatVec mat_vec(const RatMat& m, const RatVec& v);
RatMat mat_mul(const RatMat& a, const RatMat& b);
Rat det(const RatMat& m);  // n <= 3

// Solves m * x = rhs for square m up to 3x3; returns false if singular.
bool solve_linear(const RatMat& m, const RatVec& rhs, RatVec& solution);

// Rank of an arbitrary rational matrix (Gaussian elimination).
int rank(const RatMat& m);

// Basis of the null space {x : m x = 0}, each vector scaled to a primitive
// integer vector, ordered deterministically.
std::vector<RatVec> kernel_basis(const RatMat& m);

// Scales a nonzero rational vector to integer entries with gcd 1, keeping
// orientation. Zero vectors are returned unchanged.
RatVec primitive_integer_direction(const RatVec& v);

}  // namespace latcut

#endif
