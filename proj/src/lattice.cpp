#include "torstab/lattice.hpp"

#include <sstream>

namespace torstab {

const char* errc_name(errc c) {
    switch (c) {
        case errc::zero_vector: return "ZeroVector";
        case errc::rank_mismatch: return "RankMismatch";
        case errc::empty_family: return "EmptyFamily";
        case errc::not_unimodular: return "NotUnimodular";
        case errc::too_few_rays: return "TooFewRays";
        case errc::parallel_rays: return "ParallelRays";
        case errc::not_complete: return "NotComplete";
        case errc::singular_cone: return "SingularCone";
        case errc::not_smooth: return "NotSmooth";
        case errc::bad_normalization: return "BadNormalization";
        case errc::too_many_weights: return "TooManyWeights";
        case errc::empty_index_set: return "EmptyIndexSet";
        case errc::bad_index: return "BadIndex";
        case errc::invalid_splitting: return "InvalidSplitting";
        case errc::bad_parameter: return "BadParameter";
        case errc::too_few_blowups: return "TooFewBlowups";
        case errc::not_a_refinement: return "NotARefinement";
        case errc::internal: return "InternalError";
    }
    return "UnknownError";
}

namespace {

bool all_zero(const std::vector<Int>& c) {
    for (const Int& x : c)
        if (x != 0) return false;
    return true;
}

std::strong_ordering lex_cmp(const std::vector<Int>& a, const std::vector<Int>& b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
        int s = cmp(a[i], b[i]);
        if (s < 0) return std::strong_ordering::less;
        if (s > 0) return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::vector<Int> primitive_coords(std::vector<Int> c, const char* who) {
    if (all_zero(c)) fail(errc::zero_vector, std::string(who) + " must be nonzero");
    Int g = 0;
    for (const Int& x : c) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    for (Int& x : c) x /= g;
    return c;
}

} // namespace

bool LatticeVector::is_zero() const { return all_zero(c); }
bool DualVector::is_zero() const { return all_zero(c); }

std::strong_ordering LatticeVector::operator<=>(const LatticeVector& o) const {
    return lex_cmp(c, o.c);
}
std::strong_ordering DualVector::operator<=>(const DualVector& o) const {
    return lex_cmp(c, o.c);
}

DualVector negate(const DualVector& r) {
    DualVector out = r;
    for (Int& x : out.c) x = -x;
    return out;
}

LatticeVector negate(const LatticeVector& v) {
    LatticeVector out = v;
    for (Int& x : out.c) x = -x;
    return out;
}

DualVector add(const DualVector& a, const DualVector& b) {
    if (a.rank() != b.rank()) fail(errc::rank_mismatch, "dual vector addition");
    DualVector out = a;
    for (std::size_t i = 0; i < b.c.size(); ++i) out.c[i] += b.c[i];
    return out;
}

LatticeVector add(const LatticeVector& a, const LatticeVector& b) {
    if (a.rank() != b.rank()) fail(errc::rank_mismatch, "lattice vector addition");
    LatticeVector out = a;
    for (std::size_t i = 0; i < b.c.size(); ++i) out.c[i] += b.c[i];
    return out;
}

LatticeVector sub(const LatticeVector& a, const LatticeVector& b) {
    if (a.rank() != b.rank()) fail(errc::rank_mismatch, "lattice vector subtraction");
    LatticeVector out = a;
    for (std::size_t i = 0; i < b.c.size(); ++i) out.c[i] -= b.c[i];
    return out;
}

LatticeVector scale(const Int& k, const LatticeVector& v) {
    LatticeVector out = v;
    for (Int& x : out.c) x *= k;
    return out;
}

DualVector scale(const Int& k, const DualVector& r) {
    DualVector out = r;
    for (Int& x : out.c) x *= k;
    return out;
}

Int pairing(const DualVector& r, const LatticeVector& v) {
    if (r.rank() != v.rank()) fail(errc::rank_mismatch, "pairing of unequal ranks");
    Int s = 0;
    for (std::size_t i = 0; i < r.c.size(); ++i) s += r.c[i] * v.c[i];
    return s;
}

LatticeVector primitive(const LatticeVector& v) {
    return LatticeVector(primitive_coords(v.c, "lattice vector"));
}

DualVector primitive(const DualVector& r) {
    return DualVector(primitive_coords(r.c, "dual vector"));
}

Int det2(const LatticeVector& u, const LatticeVector& v) {
    if (u.rank() != 2 || v.rank() != 2) fail(errc::rank_mismatch, "det2 needs rank 2");
    return u.c[0] * v.c[1] - u.c[1] * v.c[0];
}

Int det(const IntMatrix& M) {
    std::size_t n = M.rows();
    if (n == 0 || M.cols() != n) fail(errc::rank_mismatch, "determinant of non-square matrix");
    if (n == 1) return M.m[0][0];
    if (n == 2) return M.m[0][0] * M.m[1][1] - M.m[0][1] * M.m[1][0];
    // Cofactor expansion along the first row; ranks here are tiny.
    Int d = 0;
    for (std::size_t j = 0; j < n; ++j) {
        IntMatrix minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Int> row;
            for (std::size_t s = 0; s < n; ++s)
                if (s != j) row.push_back(M.m[r][s]);
            minor.m.push_back(std::move(row));
        }
        Int term = M.m[0][j] * det(minor);
        if (j % 2 == 0)
            d += term;
        else
            d -= term;
    }
    return d;
}

IntMatrix transpose(const IntMatrix& M) {
    IntMatrix T;
    T.m.assign(M.cols(), std::vector<Int>(M.rows()));
    for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t j = 0; j < M.cols(); ++j) T.m[j][i] = M.m[i][j];
    return T;
}

IntMatrix unimodular_inverse(const IntMatrix& M) {
    std::size_t n = M.rows();
    Int d = det(M);
    if (d != 1 && d != -1) fail(errc::not_unimodular, "matrix determinant is not +-1");
    IntMatrix inv;
    inv.m.assign(n, std::vector<Int>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            // adjugate entry (j,i): cofactor of M at (i,j)
            IntMatrix minor;
            for (std::size_t r = 0; r < n; ++r) {
                if (r == i) continue;
                std::vector<Int> row;
                for (std::size_t s = 0; s < n; ++s)
                    if (s != j) row.push_back(M.m[r][s]);
                minor.m.push_back(std::move(row));
            }
            Int cof = minor.m.empty() ? Int(1) : det(minor);
            if ((i + j) % 2 == 1) cof = -cof;
            inv.m[j][i] = cof * d; // divide by det = multiply, det is +-1
        }
    }
    return inv;
}

LatticeVector change_of_basis(const IntMatrix& M, const LatticeVector& v) {
    if (M.cols() != v.rank()) fail(errc::rank_mismatch, "matrix-vector ranks");
    Int d = det(M);
    if (d != 1 && d != -1) fail(errc::not_unimodular, "basis change needs |det| = 1");
    LatticeVector out;
    out.c.assign(M.rows(), Int(0));
    for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t j = 0; j < M.cols(); ++j) out.c[i] += M.m[i][j] * v.c[j];
    return out;
}

DualVector change_of_basis(const IntMatrix& M, const DualVector& r) {
    IntMatrix mt = transpose(unimodular_inverse(M));
    if (mt.cols() != r.rank()) fail(errc::rank_mismatch, "matrix-vector ranks");
    DualVector out;
    out.c.assign(mt.rows(), Int(0));
    for (std::size_t i = 0; i < mt.rows(); ++i)
        for (std::size_t j = 0; j < mt.cols(); ++j) out.c[i] += mt.m[i][j] * r.c[j];
    return out;
}

std::string weight_label(const DualVector& r) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < r.c.size(); ++i) {
        const Int& x = r.c[i];
        if (x == 0) continue;
        if (x > 0 && !first) os << "+";
        if (x == -1)
            os << "-";
        else if (x != 1)
            os << x.get_str();
        os << "e" << (i + 1) << "*";
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

std::string coords_label(const std::vector<Int>& c) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) os << ",";
        os << c[i].get_str();
    }
    os << ")";
    return os.str();
}

} // namespace torstab
