#include "latcut/rational.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "latcut/error.hpp"

namespace latcut {

const char* err_name(Err kind) {
    switch (kind) {
        case Err::EmptyPolyhedron: return "EmptyPolyhedron";
        case Err::OriginNotInterior: return "OriginNotInterior";
        case Err::NonNormalizable: return "NonNormalizable";
        case Err::DimensionTooLarge: return "DimensionTooLarge";
        case Err::DimensionUnsupported: return "DimensionUnsupported";
        case Err::UnboundedInput: return "UnboundedInput";
        case Err::DimMismatch: return "DimMismatch";
        case Err::WindowInsufficient: return "WindowInsufficient";
        case Err::NotMaximal: return "NotMaximal";
        case Err::NotClassifiable: return "NotClassifiable";
        case Err::BadParams: return "BadParams";
        case Err::NotSymmetric: return "NotSymmetric";
        case Err::NotCompact: return "NotCompact";
        case Err::AllRhsIntegral: return "AllRhsIntegral";
        case Err::FullDimRecession: return "FullDimRecession";
        case Err::BadFraction: return "BadFraction";
        case Err::NotPeriodic: return "NotPeriodic";
        case Err::NotContinuous: return "NotContinuous";
        case Err::NotSublinear: return "NotSublinear";
        case Err::OriginValueNonzero: return "OriginValueNonzero";
        case Err::NotOnFacet: return "NotOnFacet";
        case Err::NonCoerciveDirection: return "NonCoerciveDirection";
        case Err::RankDeficient: return "RankDeficient";
        case Err::UnsupportedS: return "UnsupportedS";
        case Err::NotUnimodular: return "NotUnimodular";
        case Err::BudgetExhausted: return "BudgetExhausted";
        case Err::BadInput: return "BadInput";
    }
    return "UnknownError";
}

Rat rat(long num, long den) {
    if (den == 0) fail(Err::BadInput, "zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Rat rat_from_string(const std::string& text) {
    auto digits = [](const std::string& s, size_t from, size_t to) {
        if (from >= to) return false;
        for (size_t i = from; i < to; ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    size_t start = 0;
    if (!text.empty() && text[0] == '-') start = 1;
    size_t slash = text.find('/');
    bool ok;
    if (slash == std::string::npos) {
        ok = digits(text, start, text.size());
    } else {
        ok = digits(text, start, slash) && digits(text, slash + 1, text.size());
    }
    if (!ok) fail(Err::BadInput, "malformed rational '" + text + "'");
    Rat r(text);
    if (r.get_den() == 0) fail(Err::BadInput, "zero denominator in '" + text + "'");
    r.canonicalize();
    return r;
}

std::string rat_to_string(const Rat& value) { return value.get_str(); }

bool is_integer(const Rat& value) { return value.get_den() == 1; }

Int floor_int(const Rat& value) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), value.get_num().get_mpz_t(),
               value.get_den().get_mpz_t());
    return q;
}

Int ceil_int(const Rat& value) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), value.get_num().get_mpz_t(),
               value.get_den().get_mpz_t());
    return q;
}

Rat frac(const Rat& value) { return Rat(value - Rat(floor_int(value))); }

Rat rational_gcd(const Rat& a, const Rat& b) {
    if (a == 0) return Rat(abs(b.get_num()), b.get_den());
    if (b == 0) return Rat(abs(a.get_num()), a.get_den());
    // gcd(p1/q1, p2/q2) = gcd(p1 q2, p2 q1) / (q1 q2)
    Int num = gcd(Int(a.get_num() * b.get_den()), Int(b.get_num() * a.get_den()));
    Rat g(num, a.get_den() * b.get_den());
    g.canonicalize();
    return g;
}

RatVec vec(std::initializer_list<long> entries) {
    RatVec v;
    v.reserve(entries.size());
    for (long e : entries) v.emplace_back(e);
    return v;
}

RatVec rat_vec(std::initializer_list<Rat> entries) { return RatVec(entries); }

Rat dot(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) fail(Err::DimMismatch, "dot");
    Rat acc(0);
    for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

RatVec add(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) fail(Err::DimMismatch, "add");
    RatVec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

RatVec sub(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) fail(Err::DimMismatch, "sub");
    RatVec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

RatVec scale(const Rat& factor, const RatVec& v) {
    RatVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = factor * v[i];
    return out;
}

RatVec zero_vec(int dim) { return RatVec(static_cast<size_t>(dim), Rat(0)); }

bool is_zero(const RatVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

bool is_integral(const RatVec& v) {
    return std::all_of(v.begin(), v.end(),
                       [](const Rat& x) { return is_integer(x); });
}

bool lex_less(const RatVec& a, const RatVec& b) {
    for (size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return a.size() < b.size();
}

std::string vec_to_string(const RatVec& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << rat_to_string(v[i]);
    }
    os << ")";
    return os.str();
}

RatMat RatMat::identity(int n) {
    RatMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMat RatMat::from_rows(const std::vector<RatVec>& rows) {
    if (rows.empty()) return RatMat();
    RatMat m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int r = 0; r < m.rows; ++r) {
        if (static_cast<int>(rows[r].size()) != m.cols)
            fail(Err::DimMismatch, "ragged matrix rows");
        for (int c = 0; c < m.cols; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

RatMat RatMat::from_cols(const std::vector<RatVec>& cols) {
    if (cols.empty()) return RatMat();
    RatMat m(static_cast<int>(cols[0].size()), static_cast<int>(cols.size()));
    for (int c = 0; c < m.cols; ++c) {
        if (static_cast<int>(cols[c].size()) != m.rows)
            fail(Err::DimMismatch, "ragged matrix columns");
        for (int r = 0; r < m.rows; ++r) m.at(r, c) = cols[c][r];
    }
    return m;
}

RatVec RatMat::row(int r) const {
    RatVec v(cols);
    for (int c = 0; c < cols; ++c) v[c] = at(r, c);
    return v;
}

RatVec RatMat::col(int c) const {
    RatVec v(rows);
    for (int r = 0; r < rows; ++r) v[r] = at(r, c);
    return v;
}

RatVec mat_vec(const RatMat& m, const RatVec& v) {
    if (static_cast<int>(v.size()) != m.cols) fail(Err::DimMismatch, "mat_vec");
    RatVec out(m.rows, Rat(0));
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) out[r] += m.at(r, c) * v[c];
    return out;
}

RatMat mat_mul(const RatMat& a, const RatMat& b) {
    if (a.cols != b.rows) fail(Err::DimMismatch, "mat_mul");
    RatMat out(a.rows, b.cols);
    for (int r = 0; r < a.rows; ++r)
        for (int c = 0; c < b.cols; ++c) {
            Rat acc(0);
            for (int k = 0; k < a.cols; ++k) acc += a.at(r, k) * b.at(k, c);
            out.at(r, c) = acc;
        }
    return out;
}

Rat det(const RatMat& m) {
    if (m.rows != m.cols) fail(Err::DimMismatch, "det of non-square matrix");
    switch (m.rows) {
        case 0: return Rat(1);
        case 1: return m.at(0, 0);
        case 2: return Rat(m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0));
        case 3:
            return Rat(m.at(0, 0) * (m.at(1, 1) * m.at(2, 2) - m.at(1, 2) * m.at(2, 1)) -
                       m.at(0, 1) * (m.at(1, 0) * m.at(2, 2) - m.at(1, 2) * m.at(2, 0)) +
                       m.at(0, 2) * (m.at(1, 0) * m.at(2, 1) - m.at(1, 1) * m.at(2, 0)));
        default:
            fail(Err::DimensionTooLarge, "det beyond 3x3");
    }
}

bool solve_linear(const RatMat& m, const RatVec& rhs, RatVec& solution) {
    if (m.rows != m.cols || static_cast<int>(rhs.size()) != m.rows)
        fail(Err::DimMismatch, "solve_linear");
    int n = m.rows;
    // Gaussian elimination with exact pivoting on the first nonzero entry.
    RatMat a = m;
    RatVec b = rhs;
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r) {
            if (a.at(r, col) != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) return false;
        if (pivot != col) {
            for (int c = 0; c < n; ++c) std::swap(a.at(pivot, c), a.at(col, c));
            std::swap(b[pivot], b[col]);
        }
        Rat inv = Rat(1) / a.at(col, col);
        for (int r = 0; r < n; ++r) {
            if (r == col || a.at(r, col) == 0) continue;
            Rat factor = Rat(a.at(r, col) * inv);
            for (int c = col; c < n; ++c)
                a.at(r, c) -= factor * a.at(col, c);
            b[r] -= factor * b[col];
        }
    }
    solution.assign(n, Rat(0));
    for (int i = 0; i < n; ++i) solution[i] = Rat(b[i] / a.at(i, i));
    return true;
}

namespace {

// Row echelon form in place; returns pivot columns.
std::vector<int> echelon(RatMat& a) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < a.cols && r < a.rows; ++c) {
        int p = -1;
        for (int i = r; i < a.rows; ++i) {
            if (a.at(i, c) != 0) {
                p = i;
                break;
            }
        }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < a.cols; ++j) std::swap(a.at(p, j), a.at(r, j));
        Rat inv = Rat(1) / a.at(r, c);
        for (int j = c; j < a.cols; ++j) a.at(r, j) = Rat(a.at(r, j) * inv);
        for (int i = 0; i < a.rows; ++i) {
            if (i == r || a.at(i, c) == 0) continue;
            Rat f = a.at(i, c);
            for (int j = c; j < a.cols; ++j) a.at(i, j) -= f * a.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

int rank(const RatMat& m) {
    RatMat a = m;
    return static_cast<int>(echelon(a).size());
}

std::vector<RatVec> kernel_basis(const RatMat& m) {
    RatMat a = m;
    std::vector<int> pivots = echelon(a);
    std::vector<bool> is_pivot(m.cols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<RatVec> basis;
    for (int freeCol = 0; freeCol < m.cols; ++freeCol) {
        if (is_pivot[freeCol]) continue;
        RatVec v = zero_vec(m.cols);
        v[freeCol] = 1;
        for (size_t k = 0; k < pivots.size(); ++k) {
            // Pivot row k has leading 1 in column pivots[k].
            v[pivots[k]] = Rat(-a.at(static_cast<int>(k), freeCol));
        }
        basis.push_back(primitive_integer_direction(v));
    }
    return basis;
}

RatVec primitive_integer_direction(const RatVec& v) {
    Int den_lcm(1);
    for (const Rat& x : v) den_lcm = lcm(den_lcm, Int(x.get_den()));
    Int num_gcd(0);
    for (const Rat& x : v) num_gcd = gcd(num_gcd, Int(x.get_num() * (den_lcm / x.get_den())));
    if (num_gcd == 0) return v;
    RatVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i)
        out[i] = Rat(Int(v[i].get_num() * (den_lcm / v[i].get_den()) / num_gcd));
    return out;
}

}  // namespace latcut
