#include "qlift/irrep.hpp"

#include "qlift/linalg.hpp"

namespace qlift {

Matrix mat_identity(long n, const CycloField* F) {
    Matrix m(n, std::vector<Scalar>(n, Scalar::zero(F)));
    for (long i = 0; i < n; ++i) m[i][i] = Scalar::one(F);
    return m;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    long n = (long)a.size();
    long m = (long)b[0].size();
    long k = (long)b.size();
    const CycloField* F = nullptr;
    for (const auto& row : a)
        for (const auto& s : row)
            if (s.field()) F = s.field();
    Matrix out(n, std::vector<Scalar>(m, Scalar::zero(F)));
    for (long i = 0; i < n; ++i)
        for (long t = 0; t < k; ++t) {
            if (a[i][t].is_zero()) continue;
            for (long j = 0; j < m; ++j) out[i][j] += a[i][t] * b[t][j];
        }
    return out;
}

bool mat_eq(const Matrix& a, const Matrix& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != b[i].size()) return false;
        for (size_t j = 0; j < a[i].size(); ++j)
            if (a[i][j] != b[i][j]) return false;
    }
    return true;
}

namespace {
Matrix scale(const Matrix& a, const Scalar& c) {
    Matrix out = a;
    for (auto& row : out)
        for (auto& v : row) v = c * v;
    return out;
}
Matrix sub(const Matrix& a, const Matrix& b) {
    Matrix out = a;
    for (size_t i = 0; i < out.size(); ++i)
        for (size_t j = 0; j < out[i].size(); ++j) out[i][j] -= b[i][j];
    return out;
}
bool is_zero_mat(const Matrix& a) {
    for (const auto& row : a)
        for (const auto& v : row)
            if (!v.is_zero()) return false;
    return true;
}
Matrix mat_pow(const Matrix& a, long e, const CycloField* F) {
    Matrix acc = mat_identity((long)a.size(), F);
    for (long t = 0; t < e; ++t) acc = mat_mul(acc, a);
    return acc;
}
}  // namespace

Irrep build_irrep(long p, long r, const CycloField* F, bool negate_psi) {
    if (r < 1 || r > p) throw InputError("representation dimension must lie in 1..p");
    if (F->order() % p != 0) throw InputError("session field does not contain a primitive p-th root");
    Scalar xi = Scalar::root_of_unity(F, F->order() / p);
    Irrep out;
    out.r = r;
    if (r == 1) {
        // the counit representation
        out.G = mat_identity(1, F);
        out.X = Matrix(1, std::vector<Scalar>(1, Scalar::zero(F)));
        out.Y = out.X;
        out.relations_ok = true;
        out.span_dim = 1;
        return out;
    }
    // psi with psi^2 = xi^{1-r}: solve 2m = (1-r) (E/p) mod E
    long E = F->order();
    long target = ((1 - r) * (E / p)) % E;
    target = ((target % E) + E) % E;
    long m = -1;
    for (long t = 0; t < E; ++t) {
        if ((2 * t) % E == target) {
            m = t;
            break;
        }
    }
    if (m < 0) throw MathError("no square root of xi^{1-r} in the session field; enlarge E");
    Scalar psi = Scalar::root_of_unity(F, m);
    if (negate_psi) psi = -psi;
    if (psi * psi != xi.pow(1 - r)) throw MathError("square root construction failed");

    Matrix G(r, std::vector<Scalar>(r, Scalar::zero(F)));
    Matrix X = G, Y = G;
    for (long i = 0; i < r; ++i) G[i][i] = psi * xi.pow(i);
    for (long i = 0; i + 1 < r; ++i) X[i + 1][i] = Scalar::one(F);
    Scalar denom_inv = (xi - Scalar::one(F)).inverse();
    for (long i = 1; i < r; ++i) {
        // y_i = xi (1 - xi^{i-r}) (xi^i - 1) / (xi - 1)
        Scalar yi = xi * (Scalar::one(F) - xi.pow(i - r)) * (xi.pow(i) - Scalar::one(F)) * denom_inv;
        Y[i - 1][i] = yi;
    }
    out.G = G;
    out.X = X;
    out.Y = Y;

    // relations: G^p = I, X^p = 0, Y^p = 0, GX = xi XG, GY = xi^{-1} YG,
    // XY - xi^{-1} YX = G^2 - I
    bool ok = true;
    ok = ok && mat_eq(mat_pow(G, p, F), mat_identity(r, F));
    ok = ok && is_zero_mat(mat_pow(X, p, F));
    ok = ok && is_zero_mat(mat_pow(Y, p, F));
    ok = ok && mat_eq(mat_mul(G, X), scale(mat_mul(X, G), xi));
    ok = ok && mat_eq(mat_mul(G, Y), scale(mat_mul(Y, G), xi.inverse()));
    Matrix lhs = sub(mat_mul(X, Y), scale(mat_mul(Y, X), xi.inverse()));
    Matrix rhs = sub(mat_mul(G, G), mat_identity(r, F));
    ok = ok && mat_eq(lhs, rhs);
    out.relations_ok = ok;

    // irreducibility: rank of span{G^a X^b Y^c} inside r x r matrices
    std::vector<SparseRow> rows;
    for (long a = 0; a < p; ++a) {
        Matrix Ga = mat_pow(G, a, F);
        for (long b = 0; b < r; ++b) {
            Matrix GaXb = mat_mul(Ga, mat_pow(X, b, F));
            for (long c = 0; c < r; ++c) {
                Matrix M = mat_mul(GaXb, mat_pow(Y, c, F));
                SparseRow row;
                for (long i = 0; i < r; ++i)
                    for (long j = 0; j < r; ++j)
                        if (!M[i][j].is_zero()) row[i * r + j] = M[i][j];
                if (!row.empty()) rows.push_back(std::move(row));
            }
        }
    }
    out.span_dim = matrix_rank(r * r, std::move(rows));
    return out;
}

}  // namespace qlift

